#include "rlu/permutation.hpp"

#include <numeric>

namespace rlu {

Permutation::Permutation(std::size_t size) : forward_(size) {
  std::iota(forward_.begin(), forward_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<std::size_t> forward) : forward_(std::move(forward)) {
  std::vector<bool> seen(forward_.size(), false);
  for (std::size_t v : forward_) {
    if (v >= forward_.size() || seen[v]) {
      throw ParameterError("index array is not a permutation of 0.." + std::to_string(forward_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (std::size_t i = 0; i < size(); ++i) out.forward_[forward_[i]] = i;
  return out;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DimensionError("composing permutations of different sizes");
  Permutation out(size());
  for (std::size_t i = 0; i < size(); ++i) out.forward_[i] = forward_[other.forward_[i]];
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < size(); ++i)
    if (forward_[i] != i) return false;
  return true;
}

}  // namespace rlu
