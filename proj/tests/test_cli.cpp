#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "perm/cost_model.hpp"
#include "perm/subsets.hpp"

using namespace perm;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "perm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

Outcome compute(const std::string& algebra, const std::string& algo, const std::string& input,
                std::vector<std::string> extra = {}) {
  std::vector<std::string> args{"compute", "--algebra", algebra, "--algo", algo, "--input", "-"};
  args.insert(args.end(), extra.begin(), extra.end());
  return invoke(args, input);
}

struct CsvRow {
  std::string algo, algebra;
  unsigned m = 0, n = 0;
  std::uint64_t adds = 0, muls = 0, bound = 0, wall = 0;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "algo,algebra,m,n,adds,muls,bound,wall_ns");
  std::vector<CsvRow> rows;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    CsvRow r;
    std::string cell;
    std::getline(fields, r.algo, ',');
    std::getline(fields, r.algebra, ',');
    std::vector<std::uint64_t> nums;
    while (std::getline(fields, cell, ',')) nums.push_back(std::stoull(cell));
    REQUIRE(nums.size() == 6);
    r.m = static_cast<unsigned>(nums[0]);
    r.n = static_cast<unsigned>(nums[1]);
    r.adds = nums[2];
    r.muls = nums[3];
    r.bound = nums[4];
    r.wall = nums[5];
    rows.push_back(r);
  }
  return rows;
}

const std::string kTwoByTwo = "2 2\n1 2\n3 4\n";

}  // namespace

TEST_CASE("compute examples") {
  auto r = compute("int64", "ryser", kTwoByTwo);
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "10\n");

  r = compute("tropical", "dp-col", kTwoByTwo);
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "5\n");

  r = compute("tropical", "ryser", kTwoByTwo);
  CHECK(r.code == cli::kCapability);
  CHECK(r.err.find("algebra lacks negation") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("compute reports op counts on a second line") {
  auto r = compute("int64", "dp-col", "2 3\n1 1 1\n1 1 1\n", {"--count-ops"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "6\nops adds=5 muls=6 bound=6\n");
}

TEST_CASE("compute covers every algebra and variant") {
  CHECK(compute("bigint", "ryser-split", kTwoByTwo).out == "10\n");
  CHECK(compute("mod:7", "ryser-t", kTwoByTwo).out == "3\n");
  CHECK(compute("int64", "auto", kTwoByTwo).out == "10\n");
  const std::string witness = "2 2\n0,0,0,0 0,1,0,0\n0,0,1,0 0,0,0,0\n";
  CHECK(compute("mat2", "brute", witness).out == "1,0,0,0\n");
  CHECK(compute("mat2", "dp-row", witness, {"--variant", "per-t"}).out == "0,0,0,1\n");
  CHECK(compute("mat2z", "ryser-t", witness, {"--variant", "per-t"}).out == "0,0,0,1\n");
  CHECK(compute("mat2", "auto", witness).out == "1,0,0,0\n");
  CHECK(compute("mat2", "auto", witness, {"--variant", "per-t"}).out == "0,0,0,1\n");
  CHECK(compute("int64", "brute", "0 3\n").out == "1\n");
}

TEST_CASE("compute reads from a file") {
  const std::string path = "cli_test_matrix.txt";
  {
    std::ofstream f(path);
    f << "# comment\n" << kTwoByTwo;
  }
  auto r = invoke({"compute", "--algebra", "int64", "--algo", "dp-row", "--input", path});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "10\n");
  std::remove(path.c_str());
  CHECK(invoke({"compute", "--algebra", "int64", "--input", "no/such/file"}).code == cli::kParseError);
}

TEST_CASE("compute exit codes") {
  CHECK(compute("int64", "ryser", "2 2\n1 2\n3\n").code == cli::kParseError);
  CHECK(compute("float", "ryser", kTwoByTwo).code == cli::kParseError);
  CHECK(compute("int64", "fast", kTwoByTwo).code == cli::kParseError);
  CHECK(compute("int64", "ryser", kTwoByTwo, {"--variant", "per-x"}).code == cli::kParseError);
  CHECK(invoke({"compute", "--algo", "ryser"}).code == cli::kParseError);
  CHECK(invoke({}).code == cli::kParseError);
  CHECK(invoke({"frobnicate"}).code == cli::kParseError);

  auto r = compute("mat2", "dp-row", kTwoByTwo);
  CHECK(r.code == cli::kCapability);
  CHECK(r.err.find("algebra is not commutative") != std::string::npos);
  CHECK(compute("mat2z", "ryser-t", kTwoByTwo).code == cli::kCapability);
  // Capability is checked before the input is read.
  CHECK(compute("tropical", "ryser", "garbage").code == cli::kCapability);

  CHECK(compute("int64", "ryser", "3 2\n1 2\n3 4\n5 6\n").code == cli::kShape);
  CHECK(compute("int64", "auto", "3 2\n1 2\n3 4\n5 6\n").code == cli::kShape);
  CHECK(compute("int64", "brute", "2 2\n3037000500 0\n0 3037000500\n").code == cli::kOverflow);
  CHECK(compute("bigint", "brute", "2 2\n3037000500 0\n0 3037000500\n").out == "9223372037000250000\n");
}

TEST_CASE("help exits cleanly") {
  auto r = invoke({"--help"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("compute") != std::string::npos);
}

TEST_CASE("verify examples") {
  auto r = invoke({"verify", "--algebra", "mod:1000000007", "--max-m", "5", "--max-n", "7", "--trials", "10", "--seed",
                   "42"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("PASS\n") != std::string::npos);
  CHECK(r.out.find("ryser-split per: 250/250 passed") != std::string::npos);
  CHECK(r.out.find("ryser-t per-t: 250/250 passed") != std::string::npos);

  r = invoke({"verify", "--algebra", "mat2", "--max-m", "4", "--max-n", "5", "--trials", "10", "--seed", "7"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("dp-col per: 140/140 passed") != std::string::npos);
  CHECK(r.out.find("dp-row per-t: 140/140 passed") != std::string::npos);
  CHECK(r.out.find("ryser") == std::string::npos);

  CHECK(invoke({"verify", "--algebra", "int64", "--max-m", "5", "--max-n", "4"}).code == cli::kParseError);
  CHECK(invoke({"verify", "--algebra", "int64", "--max-m", "5", "--max-n", "10"}).code == cli::kParseError);
  CHECK(invoke({"verify", "--algebra", "int64", "--trials", "0"}).code == cli::kParseError);
  CHECK(invoke({"verify", "--algebra", "int64", "--max-m", "0"}).code == cli::kParseError);
}

TEST_CASE("verify output is deterministic for a fixed seed") {
  const std::vector<std::string> args{"verify", "--algebra", "mat2z", "--max-m", "3", "--max-n", "4", "--trials",
                                      "5",      "--seed",    "99"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
}

TEST_CASE("bench rows parse back with consistent counts") {
  auto r = invoke({"bench", "--algebras", "int64,mat2z,tropical", "--algos", "dp-col,dp-row,ryser,brute", "--m", "1..4",
                   "--n", "1..6", "--csv"});
  REQUIRE(r.code == cli::kOk);
  const auto rows = parse_csv(r.out);
  CHECK_FALSE(rows.empty());
  bool saw_dp_col_2_3 = false;
  for (const CsvRow& row : rows) {
    CAPTURE(row.algo);
    CAPTURE(row.algebra);
    CAPTURE(row.m);
    CAPTURE(row.n);
    CHECK(row.m <= row.n);
    CHECK(row.bound == predict_ops(*parse_algorithm(row.algo), row.m, row.n));
    if (row.algo == "dp-col") {
      CHECK(row.muls == row.bound);
      if (row.m == 2 && row.n == 3) {
        CHECK(row.muls == 6);
        saw_dp_col_2_3 = true;
      }
    } else {
      CHECK(row.adds + row.muls <= row.bound);
    }
    if (row.algo == "ryser" && row.m == row.n) CHECK(row.bound == 2 * row.m * (std::uint64_t{1} << row.n));
    // Unsupported cells are skipped rather than reported.
    CHECK_FALSE((row.algebra == "tropical" && row.algo == "ryser"));
    CHECK_FALSE((row.algebra == "mat2z" && row.algo == "dp-row"));
  }
  CHECK(saw_dp_col_2_3);
}

TEST_CASE("bench grid errors") {
  CHECK(invoke({"bench", "--algebras", "int64", "--algos", "ryser", "--m", "1..x", "--n", "1..4"}).code ==
        cli::kParseError);
  CHECK(invoke({"bench", "--algebras", "int64", "--algos", "ryser", "--m", "3..1", "--n", "1..4"}).code ==
        cli::kParseError);
  CHECK(invoke({"bench", "--algebras", "int64", "--algos", "ryser", "--m", "1", "--n", "1..31"}).code ==
        cli::kParseError);
  CHECK(invoke({"bench", "--algebras", "int64", "--algos", "nope", "--m", "1", "--n", "1"}).code == cli::kParseError);
  CHECK(invoke({"bench", "--algebras", "nope", "--algos", "ryser", "--m", "1", "--n", "1"}).code == cli::kParseError);
}

TEST_CASE("auto-selection examples") {
  const Capabilities comm_ring{true, true};
  const Capabilities noncomm_semiring{false, false};
  const Capabilities comm_semiring{true, false};
  // The row DP's 2^m table beats the split's binsum(30, 5) tables here once
  // additions are counted alongside multiplications.
  CHECK(algo_auto_select(comm_ring, 10, 30, Variant::kPer) == Algorithm::kDpRows);
  CHECK(exact_ops(Algorithm::kDpRows, 10, 30).total() < exact_ops(Algorithm::kRyserSplit, 10, 30).total());
  CHECK(algo_auto_select(noncomm_semiring, 5, 9, Variant::kPer) == Algorithm::kDpColumns);
  CHECK(algo_auto_select(noncomm_semiring, 5, 9, Variant::kPerTransposed) == Algorithm::kDpRows);
  CHECK(algo_auto_select(comm_semiring, 12, 13, Variant::kPer) == Algorithm::kDpRows);
  // Two rows over thirty columns: the split's two single-row tables win.
  CHECK(algo_auto_select(comm_ring, 2, 30, Variant::kPer) == Algorithm::kRyserSplit);
  CHECK(algo_auto_select(Capabilities{false, true}, 4, 30, Variant::kPer) == Algorithm::kRyserSplit);
}

TEST_CASE("auto-selection always returns the cheapest applicable algorithm") {
  constexpr Algorithm kPrecedence[] = {Algorithm::kDpRows, Algorithm::kRyserTransposed, Algorithm::kRyserSplit,
                                       Algorithm::kRyser, Algorithm::kDpColumns};
  for (bool commutative : {false, true})
    for (bool negation : {false, true})
      for (Variant variant : {Variant::kPer, Variant::kPerTransposed})
        for (unsigned m = 1; m <= 24; ++m)
          for (unsigned n = m; n <= 30; ++n) {
            const Capabilities caps{commutative, negation};
            const Algorithm chosen = algo_auto_select(caps, m, n, variant);
            REQUIRE(supports(chosen, variant, caps));
            REQUIRE(chosen != Algorithm::kBruteForce);
            std::uint64_t best = UINT64_MAX;
            for (Algorithm a : kPrecedence)
              if (supports(a, variant, caps)) best = std::min(best, exact_ops(a, m, n).total());
            REQUIRE(exact_ops(chosen, m, n).total() == best);
            for (Algorithm a : kPrecedence) {
              if (a == chosen) break;
              if (supports(a, variant, caps)) REQUIRE(exact_ops(a, m, n).total() > best);
            }
          }
}
