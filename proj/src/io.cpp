#include "rlu/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

namespace rlu {
namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  const std::array<char, 4> b = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                                 static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
  out.write(b.data(), 4);
}

void put_f64(std::ostream& out, double x) {
  const auto bits = std::bit_cast<std::uint64_t>(x);
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(b.data(), 8);
}

std::uint32_t get_u32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 4)) throw FormatError("RLUM: truncated header");
  return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) | (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}

double get_f64(std::istream& in) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), 8)) throw FormatError("RLUM: truncated payload");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= std::uint64_t(b[i]) << (8 * i);
  return std::bit_cast<double>(bits);
}

void write_header(std::ostream& out, ScalarKind kind, std::size_t rows, std::size_t cols) {
  if (rows > 0xFFFFFFFFu || cols > 0xFFFFFFFFu) throw DimensionError("RLUM dimensions exceed u32");
  out.write(reinterpret_cast<const char*>(kRlumMagic), 4);
  out.put(static_cast<char>(kRlumVersion));
  out.put(static_cast<char>(kind));
  put_u32(out, static_cast<std::uint32_t>(rows));
  put_u32(out, static_cast<std::uint32_t>(cols));
}

std::ofstream open_out(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_in(const std::filesystem::path& path, std::ios::openmode mode) {
  std::ifstream in(path, mode);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

void require_finite(double x) {
  if (!std::isfinite(x)) throw FormatError("non-finite entry in matrix file");
}

}  // namespace

void write_rlum(std::ostream& out, const RealMatrix& a) {
  write_header(out, ScalarKind::real64, a.rows(), a.cols());
  for (double x : a.values()) put_f64(out, x);
  if (!out) throw IoError("RLUM write failed");
}

void write_rlum(std::ostream& out, const ComplexMatrix& a) {
  write_header(out, ScalarKind::complex128, a.rows(), a.cols());
  for (const cplx& z : a.values()) {
    put_f64(out, z.real());
    put_f64(out, z.imag());
  }
  if (!out) throw IoError("RLUM write failed");
}

AnyMatrix read_rlum(std::istream& in) {
  std::array<unsigned char, 4> magic{};
  if (!in.read(reinterpret_cast<char*>(magic.data()), 4) || std::memcmp(magic.data(), kRlumMagic, 4) != 0) {
    throw FormatError("RLUM: bad magic");
  }
  const int version = in.get();
  if (version != kRlumVersion) throw FormatError("RLUM: unsupported version " + std::to_string(version));
  const int kind = in.get();
  const std::size_t rows = get_u32(in);
  const std::size_t cols = get_u32(in);
  if (rows == 0 || cols == 0) throw FormatError("RLUM: zero dimension");
  if (kind == static_cast<int>(ScalarKind::real64)) {
    RealMatrix a(rows, cols);
    for (double& x : a.values()) {
      x = get_f64(in);
      require_finite(x);
    }
    return a;
  }
  if (kind == static_cast<int>(ScalarKind::complex128)) {
    ComplexMatrix a(rows, cols);
    for (cplx& z : a.values()) {
      const double re = get_f64(in);
      const double im = get_f64(in);
      require_finite(re);
      require_finite(im);
      z = cplx(re, im);
    }
    return a;
  }
  throw FormatError("RLUM: unknown scalar kind " + std::to_string(kind));
}

void write_rlum(const std::filesystem::path& path, const RealMatrix& a) {
  auto out = open_out(path, std::ios::binary);
  write_rlum(out, a);
}

void write_rlum(const std::filesystem::path& path, const ComplexMatrix& a) {
  auto out = open_out(path, std::ios::binary);
  write_rlum(out, a);
}

AnyMatrix read_rlum(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::binary);
  return read_rlum(in);
}

RealMatrix read_rlum_real(const std::filesystem::path& path) {
  AnyMatrix any = read_rlum(path);
  if (auto* real = std::get_if<RealMatrix>(&any)) return std::move(*real);
  throw FormatError("'" + path.string() + "' holds a complex matrix; a real one is required");
}

void write_csv(std::ostream& out, const RealMatrix& a) {
  std::array<char, 64> buf{};
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out.put(',');
      const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), a(i, j));
      out.write(buf.data(), res.ptr - buf.data());
    }
    out.put('\n');
  }
  if (!out) throw IoError("CSV write failed");
}

RealMatrix read_csv(std::istream& in) {
  std::vector<double> data;
  std::size_t rows = 0, cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      std::size_t end = line.find(',', pos);
      if (end == std::string::npos) end = line.size();
      std::size_t b = pos, e = end;
      while (b < e && (line[b] == ' ' || line[b] == '\t')) ++b;
      while (e > b && (line[e - 1] == ' ' || line[e - 1] == '\t')) --e;
      double x = 0.0;
      const auto res = std::from_chars(line.data() + b, line.data() + e, x);
      if (res.ec != std::errc() || res.ptr != line.data() + e) {
        throw FormatError("CSV: cannot parse '" + line.substr(b, e - b) + "' on row " + std::to_string(rows + 1));
      }
      require_finite(x);
      data.push_back(x);
      ++count;
      pos = end + 1;
    }
    if (rows == 0) cols = count;
    if (count != cols) throw FormatError("CSV: row " + std::to_string(rows + 1) + " has " + std::to_string(count) +
                                         " fields, expected " + std::to_string(cols));
    ++rows;
  }
  if (rows == 0) throw FormatError("CSV: no data");
  return RealMatrix(rows, cols, std::move(data));
}

void write_csv(const std::filesystem::path& path, const RealMatrix& a) {
  auto out = open_out(path, std::ios::out);
  write_csv(out, a);
}

RealMatrix read_csv(const std::filesystem::path& path) {
  auto in = open_in(path, std::ios::in);
  return read_csv(in);
}

RealMatrix read_real_matrix(const std::filesystem::path& path) {
  if (path.extension() == ".csv") return read_csv(path);
  return read_rlum_real(path);
}

}  // namespace rlu
