#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "rlu/matrix.hpp"

namespace rlu::cli {

/// 8-bit binary PGM (P5). Comments in the header are skipped; maxval must be at most 255.
RealMatrix read_pgm(std::istream& in);
RealMatrix read_pgm(const std::filesystem::path& path);

/// Writes pixels clamped to [0, 255] and rounded to the nearest integer.
void write_pgm(std::ostream& out, const RealMatrix& pixels);
void write_pgm(const std::filesystem::path& path, const RealMatrix& pixels);

/// 20 log10(max(A) sqrt(N) / ||A - A_hat||_F), N the number of pixels; +inf when the two
/// images agree exactly.
double psnr(const RealMatrix& original, const RealMatrix& approx);

/// A rows x cols 8-bit test image: a sum of Gaussian outer products weighted 0.8^t, plus
/// white noise, rescaled to [0, 255] and rounded.
RealMatrix synthetic_image(std::uint64_t seed, std::size_t rows = 256, std::size_t cols = 512);

}  // namespace rlu::cli
