#include <cmath>
#include <sstream>

#include "format.hpp"
#include "rlu/bounds.hpp"
#include "rlu/cli/commands.hpp"

namespace rlu::cli {

using detail::Json;
using detail::num;

namespace {

struct XiRow {
  std::size_t p;
  double beta, gamma;
};

// The (l - k, beta, gamma) grid of the success-probability table.
constexpr XiRow kXiGrid[] = {
    {3, 5, 5},  {5, 5, 5},  {10, 5, 5},  {3, 30, 5},  {5, 30, 5},
    {10, 30, 5}, {3, 30, 10}, {5, 30, 10}, {10, 30, 10},
};

// Values as printed alongside the example, for side-by-side reporting.
constexpr double kPrintedA1 = 15.68;
constexpr double kPrintedC1 = 0.022;
constexpr double kPrintedC2 = 0.011;
constexpr double kPrintedRangefinder = 2.9e5;
constexpr double kPrintedRangefinderFailure = 1.1e-49;
constexpr double kPrintedSvdBound = 7.28e5;
constexpr double kPrintedSvdBoundFailure = 2.72e-4;

std::string table1(const BoundsOptions& opts) {
  const double n = opts.n > 0 ? opts.n : 3000.0;
  const std::size_t k = opts.k > 0 ? opts.k : 10;
  std::ostringstream text;
  Json arr = Json::array();
  if (opts.format == OutputFormat::csv) text << "l_minus_k,beta,gamma,n,failure,xi,log10_failure\n";
  for (const XiRow& row : kXiGrid) {
    const GaussianBoundParams params{static_cast<std::size_t>(n), static_cast<std::size_t>(n), k, k + row.p, row.beta,
                                     row.gamma};
    const XiTerms t = xi_terms(params);
    const double failure = std::pow(10.0, t.log10_failure);
    const double xi = xi_success_probability(params);
    if (opts.format == OutputFormat::csv) {
      text << row.p << ',' << num(row.beta) << ',' << num(row.gamma) << ',' << num(n) << ',' << num(failure) << ','
           << num(xi) << ',' << num(t.log10_failure) << '\n';
    } else {
      arr.push_back(Json{{"l_minus_k", row.p},
                         {"beta", row.beta},
                         {"gamma", row.gamma},
                         {"n", n},
                         {"failure", failure},
                         {"xi", xi},
                         {"log10_failure", t.log10_failure}});
    }
  }
  if (opts.format == OutputFormat::json) text << arr.dump(2) << '\n';
  return text.str();
}

struct Quantity {
  std::string setup, name;
  double value, log10_value;
  std::optional<double> printed;
  bool regime_ok = true;
};

void add_bound(std::vector<Quantity>& out, const std::string& setup, const std::string& name, const BoundReport& r,
               std::optional<double> printed_coef, std::optional<double> printed_fail) {
  out.push_back({setup, name + "_coefficient", r.coefficient, r.log10_coefficient, printed_coef, r.regime_ok});
  out.push_back({setup, name + "_failure", r.failure_probability, r.log10_failure, printed_fail, r.regime_ok});
}

std::string example43(const BoundsOptions& opts) {
  const double n = opts.n > 0 ? opts.n : 1e8;
  const std::size_t k = opts.k > 0 ? opts.k : 990;
  const std::size_t l = opts.l > 0 ? opts.l : 1000;
  const double mu = opts.mu > 0 ? opts.mu : default_subgaussian_mu();
  if (l <= k) throw ParameterError("example43 needs l > k");

  std::vector<Quantity> rows;
  const SubgaussianConstants c = subgaussian_constants(mu, opts.a2, k, l, opts.m);
  const std::string stated = "stated";
  rows.push_back({stated, "a1", c.a1, std::log10(c.a1), kPrintedA1});
  rows.push_back({stated, "c1", c.c1, c.log10_c1, kPrintedC1, c.regime_ok});
  rows.push_back({stated, "c2", c.c2, std::log10(std::abs(c.c2)), kPrintedC2, c.regime_ok});
  add_bound(rows, stated, "rangefinder", rangefinder_bound(n, k, l, c), kPrintedRangefinder,
            kPrintedRangefinderFailure);
  add_bound(rows, stated, "halko", halko_bound_flat(n, k, l - k), kPrintedSvdBound, kPrintedSvdBoundFailure);

  // The printed constants with a ten-times-wider sketch at the same oversampling, which
  // reproduces every printed bound value.
  const std::size_t wide_k = 9990, wide_l = 10000;
  SubgaussianConstants w = subgaussian_constants(mu, opts.a2, wide_k, wide_l, opts.m);
  w.a1 = kPrintedA1;
  w.c1 = kPrintedC1;
  w.log10_c1 = std::log10(kPrintedC1);
  const std::string consistent = "printed_constants_k9990_l10000";
  rows.push_back({consistent, "c2", w.c2, std::log10(std::abs(w.c2)), kPrintedC2});
  add_bound(rows, consistent, "rangefinder", rangefinder_bound(n, wide_k, wide_l, w), kPrintedRangefinder,
            kPrintedRangefinderFailure);
  add_bound(rows, consistent, "halko", halko_bound_flat(n, wide_k, wide_l - wide_k), kPrintedSvdBound,
            kPrintedSvdBoundFailure);

  std::ostringstream text;
  if (opts.format == OutputFormat::csv) {
    text << "setup,quantity,value,log10_value,printed,regime_ok\n";
    for (const Quantity& q : rows) {
      text << q.setup << ',' << q.name << ',' << num(q.value) << ',' << num(q.log10_value) << ','
           << (q.printed ? num(*q.printed) : "") << ',' << (q.regime_ok ? "true" : "false") << '\n';
    }
  } else {
    Json j;
    j["n"] = n;
    j["m"] = opts.m;
    j["k"] = k;
    j["l"] = l;
    j["mu"] = mu;
    j["a2"] = opts.a2;
    Json arr = Json::array();
    for (const Quantity& q : rows) {
      arr.push_back(Json{{"setup", q.setup},
                         {"quantity", q.name},
                         {"value", detail::json_number(q.value)},
                         {"log10_value", detail::json_number(q.log10_value)},
                         {"printed", q.printed ? Json(*q.printed) : Json(nullptr)},
                         {"regime_ok", q.regime_ok}});
    }
    j["quantities"] = std::move(arr);
    text << j.dump(2) << '\n';
  }
  return text.str();
}

// Series of (x, rangefinder factor, randomized-SVD factor) for a sweep over p (k fixed) or k (p fixed).
std::string factor_series(const BoundsOptions& opts, bool sweep_p) {
  const double n = opts.n > 0 ? opts.n : 1e8;
  const std::size_t fixed = sweep_p ? (opts.k > 0 ? opts.k : 3) : opts.p;
  const std::size_t begin = opts.range_begin > 0 ? opts.range_begin : (sweep_p ? 4 : 3);
  const std::size_t end = opts.range_end > 0 ? opts.range_end : 100;
  if (begin > end) throw ParameterError("empty sweep range");
  if (fixed == 0) throw ParameterError(sweep_p ? "k must be positive" : "p must be positive");

  const char* x_name = sweep_p ? "p" : "k";
  std::ostringstream text;
  Json arr = Json::array();
  if (opts.format == OutputFormat::csv) text << x_name << ",k,l,rangefinder_factor,halko_factor,ratio,regime_ok\n";
  for (std::size_t x = begin; x <= end; ++x) {
    const std::size_t k = sweep_p ? fixed : x;
    const std::size_t p = sweep_p ? x : fixed;
    if (static_cast<double>(k + p) > n) throw ParameterError("sketch size exceeds n");
    const double rf = rangefinder_asymptotic_factor(n, k + p);
    const double halko = halko_asymptotic_factor(n, k, p);
    const bool regime = p >= 4;
    if (opts.format == OutputFormat::csv) {
      text << x << ',' << k << ',' << k + p << ',' << num(rf) << ',' << num(halko) << ',' << num(halko / rf) << ','
           << (regime ? "true" : "false") << '\n';
    } else {
      arr.push_back(Json{{x_name, x},
                         {"k", k},
                         {"l", k + p},
                         {"rangefinder_factor", rf},
                         {"halko_factor", halko},
                         {"ratio", halko / rf},
                         {"regime_ok", regime}});
    }
  }
  if (opts.format == OutputFormat::json) text << arr.dump(2) << '\n';
  return text.str();
}

}  // namespace

void cmd_bounds(const BoundsOptions& opts, std::ostream& out) {
  std::string text;
  if (opts.mode == "table1") {
    text = table1(opts);
  } else if (opts.mode == "example43") {
    text = example43(opts);
  } else if (opts.mode == "oversample_fig") {
    text = factor_series(opts, true);
  } else if (opts.mode == "fixedp_fig") {
    text = factor_series(opts, false);
  } else {
    throw ParameterError("unknown bounds mode '" + opts.mode +
                         "' (expected table1, example43, oversample_fig or fixedp_fig)");
  }
  detail::emit(text, opts.out, out);
}

}  // namespace rlu::cli
