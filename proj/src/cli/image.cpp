#include "rlu/cli/image.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "rlu/errors.hpp"
#include "rlu/random.hpp"

namespace rlu::cli {

namespace {

// Next header token, skipping whitespace and '#' comments.
std::string header_token(std::istream& in) {
  std::string token;
  while (true) {
    const int c = in.get();
    if (c == EOF) break;
    if (c == '#') {
      in.ignore(std::numeric_limits<std::streamsize>::max(), '\n');
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) break;
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  return token;
}

std::size_t header_number(std::istream& in, const char* what) {
  const std::string token = header_token(in);
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos || token.size() > 9) {
    throw FormatError(std::string("PGM header: bad ") + what + " '" + token + "'");
  }
  return std::stoul(token);
}

}  // namespace

RealMatrix read_pgm(std::istream& in) {
  if (header_token(in) != "P5") throw FormatError("not a binary PGM file (expected magic P5)");
  const std::size_t width = header_number(in, "width");
  const std::size_t height = header_number(in, "height");
  const std::size_t maxval = header_number(in, "maxval");
  if (width == 0 || height == 0) throw FormatError("PGM image has an empty dimension");
  if (maxval == 0 || maxval > 255) throw FormatError("only 8-bit PGM images are supported (maxval " + std::to_string(maxval) + ")");

  std::vector<unsigned char> bytes(width * height);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (static_cast<std::size_t>(in.gcount()) != bytes.size()) throw FormatError("PGM pixel data is truncated");
  RealMatrix a(height, width);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] > maxval) throw FormatError("PGM pixel exceeds maxval");
    a.data()[i] = bytes[i];
  }
  return a;
}

RealMatrix read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_pgm(in);
}

void write_pgm(std::ostream& out, const RealMatrix& pixels) {
  out << "P5\n" << pixels.cols() << ' ' << pixels.rows() << "\n255\n";
  std::vector<unsigned char> bytes(pixels.size());
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const double v = std::clamp(std::round(pixels.data()[i]), 0.0, 255.0);
    bytes[i] = static_cast<unsigned char>(std::isnan(v) ? 0.0 : v);
  }
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_pgm(const std::filesystem::path& path, const RealMatrix& pixels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_pgm(out, pixels);
  if (!out) throw IoError("write failed for " + path.string());
}

double psnr(const RealMatrix& original, const RealMatrix& approx) {
  const double err = frobenius_norm(original - approx);
  if (err == 0.0) return std::numeric_limits<double>::infinity();
  const double peak = *std::max_element(original.values().begin(), original.values().end());
  return 20.0 * std::log10(peak * std::sqrt(static_cast<double>(original.size())) / err);
}

RealMatrix synthetic_image(std::uint64_t seed, std::size_t rows, std::size_t cols) {
  constexpr std::size_t kTerms = 40;
  constexpr double kNoise = 0.1;
  RandomStream stream(seed);
  const RealMatrix u = gaussian_matrix(stream, rows, kTerms);
  RealMatrix v = gaussian_matrix(stream, kTerms, cols);
  for (std::size_t t = 0; t < kTerms; ++t)
    for (double& x : v.row(t)) x *= std::pow(0.8, static_cast<double>(t));
  RealMatrix img = matmul(u, v);
  const RealMatrix noise = gaussian_matrix(stream, rows, cols);
  for (std::size_t i = 0; i < img.size(); ++i) img.data()[i] += kNoise * noise.data()[i];

  const auto [lo, hi] = std::minmax_element(img.values().begin(), img.values().end());
  const double low = *lo, span = *hi - *lo;
  for (double& x : img.values()) x = std::round(255.0 * (x - low) / span);
  return img;
}

}  // namespace rlu::cli
