#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rlu/cli/methods.hpp"
#include "rlu/cli/synthesis.hpp"

namespace rlu::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      ///< bad arguments, parameters, files
inline constexpr int kExitNumerical = 3;  ///< rank collapse, singular systems, non-convergence

/// Runs `body` and maps library errors to exit codes, writing the error text to `err`.
int run_guarded(std::ostream& err, const std::function<void()>& body);

enum class OutputFormat { csv, json };
OutputFormat parse_format(std::string_view name);

/// Sketch size for rank k and n columns: "k+P" (default "k+3"), "3log2sq" for
/// round(3 log2(n)^2), or a plain integer.
std::size_t resolve_sketch_size(std::string_view rule, std::size_t k, std::size_t n);

struct SynthOptions {
  SpectrumSpec spec;
  std::filesystem::path out;
};
void cmd_synth(const SynthOptions& opts, std::ostream& out);

struct DecomposeOptions {
  std::filesystem::path input;
  Method method = Method::randlu;
  std::size_t k = 1;
  std::string l_rule = "k+3";
  std::uint64_t seed = 0;
  PivotMode pivot = PivotMode::partial;
  std::filesystem::path out_dir;
};
/// Writes L.rlum, U.rlum, P.csv, Q.csv and summary.json into out_dir and echoes the summary.
void cmd_decompose(const DecomposeOptions& opts, std::ostream& out);

struct BenchOptions {
  std::optional<std::filesystem::path> input;  ///< otherwise `spec` is synthesized
  SpectrumSpec spec;
  std::vector<std::size_t> ks;
  std::string l_rule = "k+3";
  std::vector<std::uint64_t> seeds{0};
  std::vector<Method> methods;
  PivotMode pivot = PivotMode::partial;
  std::size_t repeats = 5;
  std::size_t warmup = 1;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> out;  ///< otherwise the stream
};
/// One row per (method, k, seed): method,k,l,seed,relative_error,wall_time_ms. A failed run
/// leaves the two measurements empty and appends the error text as a seventh field.
void cmd_bench(const BenchOptions& opts, std::ostream& out);

struct BoundsOptions {
  std::string mode = "table1";  ///< table1, example43, oversample_fig, fixedp_fig
  double n = 0.0;               ///< 0 picks the mode default (3000 or 1e8)
  double m = 2e8;
  std::size_t k = 0;  ///< 0 picks the mode default
  std::size_t l = 0;
  std::size_t p = 10;
  double mu = 0.0;  ///< 0 picks (4 / sqrt(2 pi))^(1/3)
  double a2 = 1.0;
  std::size_t range_begin = 0;  ///< sweep range for the figure modes, 0 picks defaults
  std::size_t range_end = 0;
  OutputFormat format = OutputFormat::csv;
  std::optional<std::filesystem::path> out;
};
void cmd_bounds(const BoundsOptions& opts, std::ostream& out);

struct ImageOptions {
  std::optional<std::filesystem::path> input;  ///< otherwise a synthetic 256 x 512 image
  std::uint64_t image_seed = 0;
  std::size_t k = 20;
  std::string l_rule = "k+3";
  Method method = Method::randlu;
  PivotMode pivot = PivotMode::partial;
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> out_pgm;
  std::optional<std::filesystem::path> write_input;  ///< save the (synthetic) source image
};
/// Prints a JSON report with the PSNR of the unclamped reconstruction.
void cmd_image(const ImageOptions& opts, std::ostream& out);

struct RdlsOptions {
  std::filesystem::path a_path;
  std::filesystem::path b_path;
  std::size_t k = 1;
  std::string l_rule = "k+3";
  std::uint64_t seed = 0;
  PivotMode pivot = PivotMode::partial;
  std::filesystem::path x_out;
};
/// Writes x as a one-column CSV and prints {x_path, residual_norm, nonzero_count, k_used}.
void cmd_rdls(const RdlsOptions& opts, std::ostream& out);

}  // namespace rlu::cli
