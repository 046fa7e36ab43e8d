#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rlu/matrix.hpp"

namespace rlu {

/// A bijection on {0, ..., size-1}. Applied to rows as out[i] = a[forward[i]], so the
/// permutation matrix P has P(i, forward[i]) = 1.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given size.
  explicit Permutation(std::size_t size);
  /// Throws ParameterError unless `forward` is a bijection.
  explicit Permutation(std::vector<std::size_t> forward);

  std::size_t size() const noexcept { return forward_.size(); }
  std::size_t operator[](std::size_t i) const noexcept { return forward_[i]; }
  std::span<const std::size_t> forward() const noexcept { return forward_; }

  Permutation inverse() const;
  /// (this ∘ other): result[i] = this[other[i]]. Applying the result to rows equals
  /// applying `this` first and then `other`.
  Permutation compose(const Permutation& other) const;
  bool is_identity() const noexcept;

  void swap(std::size_t a, std::size_t b) noexcept { std::swap(forward_[a], forward_[b]); }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> forward_;
};

/// out = P a, i.e. out[i][j] = a[p[i]][j].
template <Scalar T>
Matrix<T> apply_row_perm(const Permutation& p, const Matrix<T>& a) {
  if (p.size() != a.rows()) {
    throw DimensionError("row permutation of size " + std::to_string(p.size()) + " applied to " + shape_string(a));
  }
  return gather_rows(a, p.forward());
}

/// out = a Q, i.e. out[i][j] = a[i][q[j]].
template <Scalar T>
Matrix<T> apply_col_perm(const Matrix<T>& a, const Permutation& q) {
  if (q.size() != a.cols()) {
    throw DimensionError("column permutation of size " + std::to_string(q.size()) + " applied to " + shape_string(a));
  }
  return gather_cols(a, q.forward());
}

template <class V>
std::vector<V> apply_perm(const Permutation& p, std::span<const V> x) {
  if (p.size() != x.size()) throw DimensionError("permutation size does not match vector length");
  std::vector<V> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[p[i]];
  return out;
}

}  // namespace rlu
