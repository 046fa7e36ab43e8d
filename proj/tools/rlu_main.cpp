#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "rlu/cli/commands.hpp"

namespace {

using namespace rlu::cli;

constexpr const char* kSchemas = R"(Output schemas (version 1):
  bench CSV        method,k,l,seed,relative_error,wall_time_ms[,error]
  bounds table1    l_minus_k,beta,gamma,n,failure,xi,log10_failure
  bounds example43 setup,quantity,value,log10_value,printed,regime_ok
  bounds *_fig     p|k,k,l,rangefinder_factor,halko_factor,ratio,regime_ok
  decompose        L.rlum U.rlum P.csv Q.csv summary.json
Exit codes: 0 success, 2 usage or parameter error, 3 numerical failure.)";

const std::map<std::string, SpectrumSpec::Kind> kSpectrumKinds{
    {"exponential", SpectrumSpec::Kind::exponential},
    {"step", SpectrumSpec::Kind::step},
    {"custom", SpectrumSpec::Kind::custom},
};

void add_spectrum_flags(CLI::App* cmd, SpectrumSpec& spec) {
  cmd->add_option("--spectrum", spec.kind, "exponential, step or custom")
      ->transform(CLI::CheckedTransformer(kSpectrumKinds, CLI::ignore_case));
  cmd->add_option("--rho", spec.rho, "decay rate of the exponential spectrum");
  cmd->add_option("--rank", spec.rank, "rank of the step spectrum");
  cmd->add_option("--spectrum-file", spec.file, "CSV of singular values for the custom spectrum");
  cmd->add_option("-m,--rows", spec.m, "rows");
  cmd->add_option("-n,--cols", spec.n, "columns");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized low-rank LU toolkit"};
  app.footer(kSchemas);
  app.require_subcommand(1);

  std::string method_text = "randlu", pivot_text = "partial", format_text = "csv";
  std::vector<std::string> method_list;

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand("synth", "Generate a matrix with a prescribed spectrum");
  add_spectrum_flags(synth_cmd, synth.spec);
  synth_cmd->add_option("--seed", synth.spec.seed, "seed for the orthonormal factors");
  synth_cmd->add_option("--out", synth.out, "output path (.csv for CSV, RLUM otherwise)")->required();

  DecomposeOptions decompose;
  auto* decompose_cmd = app.add_subcommand("decompose", "Factor a matrix with randlu or fastrandlu");
  decompose_cmd->add_option("input", decompose.input, "matrix file (RLUM or CSV)")->required();
  decompose_cmd->add_option("--method", method_text, "randlu or fastrandlu");
  decompose_cmd->add_option("-k,--rank", decompose.k, "target rank")->required();
  decompose_cmd->add_option("-l,--sketch", decompose.l_rule, "sketch size: k+P, 3log2sq or an integer");
  decompose_cmd->add_option("--seed", decompose.seed, "sketch seed");
  decompose_cmd->add_option("--pivot", pivot_text, "partial or complete");
  decompose_cmd->add_option("--out", decompose.out_dir, "output directory")->required();

  BenchOptions bench;
  std::string bench_input;
  auto* bench_cmd = app.add_subcommand("bench", "Error and timing sweep over methods, ranks and seeds");
  bench_cmd->add_option("--input", bench_input, "matrix file; a synthetic matrix is used when absent");
  add_spectrum_flags(bench_cmd, bench.spec);
  bench_cmd->add_option("--matrix-seed", bench.spec.seed, "seed of the synthetic matrix");
  bench_cmd->add_option("-k,--ranks", bench.ks, "comma-separated target ranks")->delimiter(',')->required();
  bench_cmd->add_option("-l,--sketch", bench.l_rule, "sketch size: k+P, 3log2sq or an integer");
  bench_cmd->add_option("--seed,--seeds", bench.seeds, "comma-separated sketch seeds")->delimiter(',');
  bench_cmd->add_option("--methods", method_list, "comma-separated: randlu,fastrandlu,randsvd,randid,svd_oracle")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--pivot", pivot_text, "partial or complete");
  bench_cmd->add_option("--repeats", bench.repeats, "timed runs per cell (median reported)");
  bench_cmd->add_option("--warmup", bench.warmup, "untimed runs per cell");
  bench_cmd->add_option("--format", format_text, "csv or json");
  std::string bench_out;
  bench_cmd->add_option("--out", bench_out, "output path; stdout when absent");

  BoundsOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate the error bounds and success probabilities");
  bounds_cmd->add_option("mode", bounds.mode, "table1, example43, oversample_fig or fixedp_fig");
  bounds_cmd->add_option("-n", bounds.n, "column count (default 3000 for table1, 1e8 otherwise)");
  bounds_cmd->add_option("-m", bounds.m, "dimension in the ln(3)/m term of c2");
  bounds_cmd->add_option("-k", bounds.k, "rank (mode default when 0)");
  bounds_cmd->add_option("-l", bounds.l, "sketch size for example43 (default 1000)");
  bounds_cmd->add_option("-p", bounds.p, "oversampling for fixedp_fig");
  bounds_cmd->add_option("--mu", bounds.mu, "subgaussian moment constant (default (4/sqrt(2 pi))^(1/3))");
  bounds_cmd->add_option("--a2", bounds.a2, "constant a2");
  bounds_cmd->add_option("--from", bounds.range_begin, "first sweep value for figure modes");
  bounds_cmd->add_option("--to", bounds.range_end, "last sweep value for figure modes");
  bounds_cmd->add_option("--format", format_text, "csv or json");
  std::string bounds_out;
  bounds_cmd->add_option("--out", bounds_out, "output path; stdout when absent");

  ImageOptions image;
  std::string image_input, image_out, image_source;
  auto* image_cmd = app.add_subcommand("image", "Compress an 8-bit PGM image and report PSNR");
  image_cmd->add_option("--input", image_input, "P5 PGM file; a synthetic 256x512 image when absent");
  image_cmd->add_option("--image-seed", image.image_seed, "seed of the synthetic image");
  image_cmd->add_option("-k,--rank", image.k, "target rank");
  image_cmd->add_option("-l,--sketch", image.l_rule, "sketch size: k+P, 3log2sq or an integer");
  image_cmd->add_option("--method", method_text, "randlu, fastrandlu, randsvd, randid or svd_oracle");
  image_cmd->add_option("--pivot", pivot_text, "partial or complete");
  image_cmd->add_option("--seed", image.seed, "sketch seed");
  image_cmd->add_option("--out", image_out, "reconstructed PGM");
  image_cmd->add_option("--write-input", image_source, "save the source image as PGM");

  RdlsOptions rdls;
  auto* rdls_cmd = app.add_subcommand("rdls", "Rank-deficient least squares via randomized LU");
  rdls_cmd->add_option("a", rdls.a_path, "matrix file")->required();
  rdls_cmd->add_option("b", rdls.b_path, "right-hand side (one row or one column)")->required();
  rdls_cmd->add_option("-k,--rank", rdls.k, "target rank")->required();
  rdls_cmd->add_option("-l,--sketch", rdls.l_rule, "sketch size: k+P, 3log2sq or an integer");
  rdls_cmd->add_option("--seed", rdls.seed, "sketch seed");
  rdls_cmd->add_option("--pivot", pivot_text, "partial or complete");
  rdls_cmd->add_option("--out", rdls.x_out, "solution CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  return run_guarded(std::cerr, [&] {
    const rlu::PivotMode pivot = parse_pivot_mode(pivot_text);
    const OutputFormat format = parse_format(format_text);
    if (*synth_cmd) {
      cmd_synth(synth, std::cout);
    } else if (*decompose_cmd) {
      decompose.method = parse_method(method_text);
      decompose.pivot = pivot;
      cmd_decompose(decompose, std::cout);
    } else if (*bench_cmd) {
      if (!bench_input.empty()) bench.input = bench_input;
      for (const std::string& name : method_list) bench.methods.push_back(parse_method(name));
      bench.pivot = pivot;
      bench.format = format;
      if (!bench_out.empty()) bench.out = bench_out;
      cmd_bench(bench, std::cout);
    } else if (*bounds_cmd) {
      bounds.format = format;
      if (!bounds_out.empty()) bounds.out = bounds_out;
      cmd_bounds(bounds, std::cout);
    } else if (*image_cmd) {
      if (!image_input.empty()) image.input = image_input;
      if (!image_out.empty()) image.out_pgm = image_out;
      if (!image_source.empty()) image.write_input = image_source;
      image.method = parse_method(method_text);
      image.pivot = pivot;
      cmd_image(image, std::cout);
    } else if (*rdls_cmd) {
      rdls.pivot = pivot;
      cmd_rdls(rdls, std::cout);
    }
  });
}
