#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "perm/any_algebra.hpp"
#include "perm/permanent.hpp"
#include "perm/random.hpp"

namespace perm::cli {

namespace {

constexpr unsigned kMaxVerifyN = 9;
constexpr unsigned kMaxBenchN = 30;

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kCapability;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return kShape;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kOverflow;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
}

Variant require_variant(const std::string& name) {
  auto v = parse_variant(name);
  if (!v) throw ParseError("unknown variant '" + name + "' (expected per or per-t)");
  return *v;
}

Algorithm require_algorithm(const std::string& name) {
  auto a = parse_algorithm(name);
  if (!a) throw ParseError("unknown algorithm '" + name + "'");
  return *a;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open input '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::pair<unsigned, unsigned> parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw ParseError("malformed range '" + text + "' (expected a..b)");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    unsigned v = number(text);
    return {v, v};
  }
  unsigned lo = number(std::string_view(text).substr(0, dots));
  unsigned hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw ParseError("empty range '" + text + "'");
  return {lo, hi};
}

struct Check {
  Algorithm algorithm;
  Variant variant;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
};

std::vector<Check> verify_checks(Capabilities caps) {
  std::vector<Check> checks;
  for (Algorithm a : kFastAlgorithms)
    if (supports(a, Variant::kPer, caps)) checks.push_back({a, Variant::kPer});
  for (Algorithm a : {Algorithm::kDpRows, Algorithm::kRyserTransposed})
    if (supports(a, Variant::kPerTransposed, caps)) checks.push_back({a, Variant::kPerTransposed});
  return checks;
}

}  // namespace

int cmd_compute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AnyAlgebra algebra = parse_algebra(config.algebra);
    const Variant variant = require_variant(config.variant);
    const Capabilities caps = capabilities(algebra);
    std::optional<Algorithm> algo;
    if (config.algorithm != "auto") {
      algo = require_algorithm(config.algorithm);
      supports(*algo, variant, caps, /*throw_on_failure=*/true);
    }
    const std::string text = read_input(config.input, in);
    return std::visit(
        [&](const auto& alg) {
          const auto a = parse_matrix(text, alg);
          const auto m = static_cast<unsigned>(a.rows());
          const auto n = static_cast<unsigned>(a.cols());
          detail::require_shape(m, n);
          const Algorithm chosen = algo ? *algo : algo_auto_select(caps, m, n, variant);
          const auto report = evaluate(chosen, variant, a);
          out << alg.render(report.value) << '\n';
          if (config.count_ops)
            out << "ops adds=" << report.adds << " muls=" << report.muls << " bound=" << report.predicted_bound
                << '\n';
          return static_cast<int>(kOk);
        },
        algebra);
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AnyAlgebra algebra = parse_algebra(config.algebra);
    if (config.max_m < 1 || config.max_m > config.max_n || config.max_n > kMaxVerifyN || config.trials < 1)
      throw ParseError("verify needs 1 <= max-m <= max-n <= 9 and trials >= 1");
    std::vector<Check> checks = verify_checks(capabilities(algebra));
    std::optional<std::string> counterexample;

    std::visit(
        [&](const auto& alg) {
          for (unsigned m = 1; m <= config.max_m; ++m) {
            for (unsigned n = m; n <= config.max_n; ++n) {
              for (unsigned t = 0; t < config.trials; ++t) {
                SplitMix64 rng = trial_stream(config.seed, t);
                const auto a = random_matrix(alg, m, n, rng);
                std::optional<typename std::decay_t<decltype(alg)>::Element> per, per_t;
                for (Check& c : checks) {
                  auto& oracle = c.variant == Variant::kPer ? per : per_t;
                  if (!oracle) oracle = c.variant == Variant::kPer ? per_bruteforce(a) : per_transposed_bruteforce(a);
                  const auto got = evaluate(c.algorithm, c.variant, a).value;
                  ++c.total;
                  if (got == *oracle) {
                    ++c.passed;
                  } else if (!counterexample) {
                    std::ostringstream msg;
                    msg << "counterexample: " << algorithm_name(c.algorithm) << ' ' << variant_name(c.variant)
                        << " m=" << m << " n=" << n << " trial=" << t << '\n'
                        << "expected " << alg.render(*oracle) << '\n'
                        << "got " << alg.render(got) << '\n'
                        << render_matrix(a);
                    counterexample = msg.str();
                  }
                }
              }
            }
          }
        },
        algebra);

    out << "verify algebra=" << algebra_name(algebra) << " max-m=" << config.max_m << " max-n=" << config.max_n
        << " trials=" << config.trials << " seed=" << config.seed << '\n';
    for (const Check& c : checks)
      out << algorithm_name(c.algorithm) << ' ' << variant_name(c.variant) << ": " << c.passed << '/' << c.total
          << " passed\n";
    if (counterexample) {
      out << "FAIL\n" << *counterexample;
      return static_cast<int>(kMismatch);
    }
    out << "PASS\n";
    return static_cast<int>(kOk);
  });
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<AnyAlgebra> algebras;
    for (const auto& s : config.algebras) algebras.push_back(parse_algebra(s));
    std::vector<Algorithm> algos;
    for (const auto& s : config.algorithms) algos.push_back(require_algorithm(s));
    if (algebras.empty() || algos.empty()) throw ParseError("bench needs at least one algebra and one algorithm");
    const auto [m_lo, m_hi] = parse_range(config.m_range);
    const auto [n_lo, n_hi] = parse_range(config.n_range);
    if (n_hi > kMaxBenchN) throw ParseError("bench grid is limited to n <= 30");

    out << "algo,algebra,m,n,adds,muls,bound,wall_ns\n";
    for (const AnyAlgebra& algebra : algebras) {
      const Capabilities caps = capabilities(algebra);
      for (Algorithm algo : algos) {
        if (!supports(algo, Variant::kPer, caps)) continue;
        for (unsigned m = std::max(m_lo, 1U); m <= m_hi; ++m) {
          for (unsigned n = std::max(n_lo, m); n <= n_hi; ++n) {
            std::visit(
                [&](const auto& alg) {
                  SplitMix64 rng = trial_stream(config.seed, 0);
                  const auto a = random_matrix(alg, m, n, rng);
                  const auto start = std::chrono::steady_clock::now();
                  const auto report = evaluate(algo, Variant::kPer, a);
                  const auto wall = std::chrono::steady_clock::now() - start;
                  out << algorithm_name(algo) << ',' << alg.name() << ',' << m << ',' << n << ',' << report.adds
                      << ',' << report.muls << ',' << report.predicted_bound << ','
                      << std::chrono::duration_cast<std::chrono::nanoseconds>(wall).count() << '\n';
                },
                algebra);
          }
        }
      }
    }
    return static_cast<int>(kOk);
  });
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact permanents over pluggable semirings and rings"};
  app.require_subcommand(1);
  RunConfig config;

  auto* compute = app.add_subcommand("compute", "Evaluate the permanent of one matrix");
  compute->add_option("--algebra", config.algebra, "int64, bigint, mod:<p>, tropical, mat2, mat2z")->required();
  compute->add_option("--algo", config.algorithm, "auto, brute, dp-col, dp-row, ryser, ryser-split, ryser-t");
  compute->add_option("--variant", config.variant, "per or per-t");
  compute->add_flag("--count-ops", config.count_ops, "Print measured operation counts");
  compute->add_option("--input", config.input, "Matrix file, or - for stdin");

  auto* verify = app.add_subcommand("verify", "Cross-check every applicable algorithm against the oracles");
  verify->add_option("--algebra", config.algebra)->required();
  verify->add_option("--max-m", config.max_m);
  verify->add_option("--max-n", config.max_n);
  verify->add_option("--trials", config.trials);
  verify->add_option("--seed", config.seed);

  auto* bench = app.add_subcommand("bench", "Emit measured op counts against predicted bounds as CSV");
  bench->add_option("--algebras", config.algebras)->delimiter(',')->required();
  bench->add_option("--algos", config.algorithms)->delimiter(',')->required();
  bench->add_option("--m", config.m_range);
  bench->add_option("--n", config.n_range);
  bench->add_option("--seed", config.seed);
  bench->add_flag("--csv", config.csv, "CSV output (the only format)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  if (compute->parsed()) return cmd_compute(config, in, out, err);
  if (verify->parsed()) return cmd_verify(config, out, err);
  return cmd_bench(config, out, err);
}

}  // namespace perm::cli
