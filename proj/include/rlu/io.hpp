#pragma once

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "rlu/matrix.hpp"

namespace rlu {

/// A matrix whose scalar kind is only known at run time (e.g. read from disk).
using AnyMatrix = std::variant<RealMatrix, ComplexMatrix>;

/// RLUM binary layout: "RLUM", u8 version (1), u8 scalar kind (0 real64, 1 complex128),
/// u32 LE rows, u32 LE cols, then the row-major little-endian IEEE-754 payload
/// (complex entries as real, imag pairs).
inline constexpr unsigned char kRlumMagic[4] = {0x52, 0x4C, 0x55, 0x4D};
inline constexpr unsigned char kRlumVersion = 1;

void write_rlum(std::ostream& out, const RealMatrix& a);
void write_rlum(std::ostream& out, const ComplexMatrix& a);
AnyMatrix read_rlum(std::istream& in);

void write_rlum(const std::filesystem::path& path, const RealMatrix& a);
void write_rlum(const std::filesystem::path& path, const ComplexMatrix& a);
AnyMatrix read_rlum(const std::filesystem::path& path);
/// Throws FormatError if the file holds a complex matrix.
RealMatrix read_rlum_real(const std::filesystem::path& path);

/// Header-free CSV, one row per line, shortest round-trip decimal formatting.
void write_csv(std::ostream& out, const RealMatrix& a);
RealMatrix read_csv(std::istream& in);
void write_csv(const std::filesystem::path& path, const RealMatrix& a);
RealMatrix read_csv(const std::filesystem::path& path);

/// Dispatches on extension: ".csv" reads CSV, anything else RLUM (real only).
RealMatrix read_real_matrix(const std::filesystem::path& path);

}  // namespace rlu
