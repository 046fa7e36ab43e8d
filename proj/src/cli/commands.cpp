#include "rlu/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "format.hpp"
#include "rlu/cli/image.hpp"
#include "rlu/fast_randomized_lu.hpp"
#include "rlu/io.hpp"
#include "rlu/randomized_lu.hpp"
#include "rlu/rdls.hpp"

namespace rlu::cli {

using detail::Json;
using detail::num;

namespace {

void write_indices(const std::filesystem::path& path, const Permutation& p) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path.string());
  for (std::size_t i = 0; i < p.size(); ++i) f << p[i] << '\n';
  if (!f) throw IoError("write failed for " + path.string());
}

std::vector<double> read_vector(const std::filesystem::path& path) {
  const RealMatrix v = read_real_matrix(path);
  if (v.rows() != 1 && v.cols() != 1) {
    throw DimensionError("expected a vector in " + path.string() + ", got " + shape_string(v));
  }
  return {v.values().begin(), v.values().end()};
}

void write_json(const std::filesystem::path& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot write " + path.string());
  f << j.dump(2) << '\n';
  if (!f) throw IoError("write failed for " + path.string());
}

}  // namespace

int run_guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ParameterError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

std::size_t resolve_sketch_size(std::string_view rule, std::size_t k, std::size_t n) {
  auto parse_count = [&](std::string_view digits) {
    std::size_t v = 0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (digits.empty() || res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) {
      throw ParameterError("bad sketch-size rule '" + std::string(rule) + "' (expected k+P, 3log2sq or an integer)");
    }
    return v;
  };
  if (rule == "3log2sq") {
    const double lg = std::log2(static_cast<double>(n));
    return static_cast<std::size_t>(std::lround(3.0 * lg * lg));
  }
  if (rule.starts_with("k+")) return k + parse_count(rule.substr(2));
  return parse_count(rule);
}

void cmd_synth(const SynthOptions& opts, std::ostream& out) {
  if (opts.out.empty()) throw ParameterError("synth needs an output path");
  const RealMatrix a = synthesize(opts.spec);
  if (opts.out.extension() == ".csv") {
    write_csv(opts.out, a);
  } else {
    write_rlum(opts.out, a);
  }
  out << "wrote " << shape_string(a) << " matrix to " << opts.out.string() << '\n';
}

void cmd_decompose(const DecomposeOptions& opts, std::ostream& out) {
  if (opts.method != Method::randlu && opts.method != Method::fastrandlu) {
    throw ParameterError("decompose supports the LU methods randlu and fastrandlu, not " +
                         std::string(method_name(opts.method)));
  }
  if (opts.out_dir.empty()) throw ParameterError("decompose needs an output directory");
  const RealMatrix a = read_real_matrix(opts.input);
  const std::size_t l = resolve_sketch_size(opts.l_rule, opts.k, a.cols());

  Json summary;
  summary["method"] = method_name(opts.method);
  summary["k"] = opts.k;
  summary["l"] = l;
  summary["seed"] = opts.seed;

  std::filesystem::create_directories(opts.out_dir);
  const auto start = std::chrono::steady_clock::now();
  double rel = 0.0, ms = 0.0;
  std::vector<std::string> warnings;
  if (opts.method == Method::randlu) {
    const LowRankLU<double> f = randomized_lu(a, opts.k, l, opts.seed, opts.pivot);
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rel = relative_error(f, a);
    write_rlum(opts.out_dir / "L.rlum", f.L);
    write_rlum(opts.out_dir / "U.rlum", f.U);
    write_indices(opts.out_dir / "P.csv", f.P);
    write_indices(opts.out_dir / "Q.csv", f.Q);
    warnings = f.warnings;
  } else {
    const LowRankLU<cplx> f = fast_randomized_lu(a, opts.k, l, opts.seed);
    ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rel = relative_error(f, a);
    write_rlum(opts.out_dir / "L.rlum", f.L);
    write_rlum(opts.out_dir / "U.rlum", f.U);
    write_indices(opts.out_dir / "P.csv", f.P);
    write_indices(opts.out_dir / "Q.csv", f.Q);
    warnings = f.warnings;
  }
  summary["relative_error"] = rel;
  summary["wall_time_ms"] = ms;
  summary["m"] = a.rows();
  summary["n"] = a.cols();
  summary["pivot_mode"] = pivot_mode_name(opts.pivot);
  summary["warnings"] = warnings;
  write_json(opts.out_dir / "summary.json", summary);
  out << summary.dump(2) << '\n';
}

void cmd_bench(const BenchOptions& opts, std::ostream& out) {
  if (opts.methods.empty()) throw ParameterError("bench needs at least one method");
  if (opts.ks.empty()) throw ParameterError("bench needs at least one k");
  if (opts.seeds.empty()) throw ParameterError("bench needs at least one seed");
  if (opts.repeats == 0) throw ParameterError("bench needs at least one timed repeat");
  const RealMatrix a = opts.input ? read_real_matrix(*opts.input) : synthesize(opts.spec);

  struct Row {
    Method method;
    std::size_t k, l;
    std::uint64_t seed;
    double error = 0.0, ms = 0.0;
    std::string failure;
  };
  std::vector<Row> rows;
  for (Method method : opts.methods)
    for (std::size_t k : opts.ks)
      for (std::uint64_t seed : opts.seeds) {
        Row row{method, k, resolve_sketch_size(opts.l_rule, k, a.cols()), seed, 0.0, 0.0, {}};
        try {
          for (std::size_t w = 0; w < opts.warmup; ++w) (void)approximate(a, method, k, row.l, seed, opts.pivot);
          std::vector<double> times;
          for (std::size_t r = 0; r < opts.repeats; ++r) {
            const Approximation approx = approximate(a, method, k, row.l, seed, opts.pivot);
            times.push_back(approx.wall_time_ms);
            if (r == 0) row.error = relative_frobenius_error(a, approx.reconstruction);
          }
          row.ms = median(times);
        } catch (const Error& e) {
          row.failure = e.what();
        }
        rows.push_back(std::move(row));
      }

  std::ostringstream text;
  if (opts.format == OutputFormat::csv) {
    text << "method,k,l,seed,relative_error,wall_time_ms\n";
    for (const Row& r : rows) {
      text << method_name(r.method) << ',' << r.k << ',' << r.l << ',' << r.seed << ',';
      if (r.failure.empty()) {
        text << num(r.error) << ',' << num(r.ms) << '\n';
      } else {
        text << ",," << detail::csv_field(r.failure) << '\n';
      }
    }
  } else {
    Json arr = Json::array();
    for (const Row& r : rows) {
      Json j;
      j["method"] = method_name(r.method);
      j["k"] = r.k;
      j["l"] = r.l;
      j["seed"] = r.seed;
      j["relative_error"] = r.failure.empty() ? Json(r.error) : Json(nullptr);
      j["wall_time_ms"] = r.failure.empty() ? Json(r.ms) : Json(nullptr);
      if (!r.failure.empty()) j["error"] = r.failure;
      arr.push_back(std::move(j));
    }
    text << arr.dump(2) << '\n';
  }
  detail::emit(text.str(), opts.out, out);
}

void cmd_image(const ImageOptions& opts, std::ostream& out) {
  const RealMatrix img = opts.input ? read_pgm(*opts.input) : synthetic_image(opts.image_seed);
  if (opts.write_input) write_pgm(*opts.write_input, img);
  const std::size_t l = resolve_sketch_size(opts.l_rule, opts.k, img.cols());
  const Approximation approx = approximate(img, opts.method, opts.k, l, opts.seed, opts.pivot);
  if (opts.out_pgm) write_pgm(*opts.out_pgm, approx.reconstruction);

  const double db = psnr(img, approx.reconstruction);
  Json j;
  j["method"] = method_name(opts.method);
  j["k"] = opts.k;
  j["l"] = l;
  j["seed"] = opts.seed;
  j["rows"] = img.rows();
  j["cols"] = img.cols();
  j["psnr_db"] = detail::json_number(db);
  j["exact"] = std::isinf(db);
  j["relative_error"] = relative_frobenius_error(img, approx.reconstruction);
  j["wall_time_ms"] = approx.wall_time_ms;
  if (opts.out_pgm) j["out_pgm"] = opts.out_pgm->string();
  out << j.dump(2) << '\n';
}

void cmd_rdls(const RdlsOptions& opts, std::ostream& out) {
  if (opts.x_out.empty()) throw ParameterError("rdls needs an output path for x");
  const RealMatrix a = read_real_matrix(opts.a_path);
  const std::vector<double> b = read_vector(opts.b_path);
  const std::size_t l = resolve_sketch_size(opts.l_rule, opts.k, a.cols());
  const RdlsSolution s = solve_rdls(a, b, opts.k, l, opts.seed, opts.pivot);

  RealMatrix x(s.x.size(), 1);
  std::copy(s.x.begin(), s.x.end(), x.values().begin());
  write_csv(opts.x_out, x);

  Json j;
  j["x_path"] = opts.x_out.string();
  j["residual_norm"] = s.residual_norm;
  j["nonzero_count"] = s.nonzero_count;
  j["k_used"] = s.k_used;
  j["l"] = l;
  j["seed"] = opts.seed;
  out << j.dump(2) << '\n';
}

}  // namespace rlu::cli
