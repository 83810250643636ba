#pragma once

// Command-line front end.
//
//   perm compute --algebra <sel> --algo <sel> [--variant per|per-t] [--count-ops] --input <path|->
//   perm verify  --algebra <sel> --max-m <k> --max-n <k> --trials <t> --seed <s>
//   perm bench   --algebras <list> --algos <list> --m <a..b> --n <a..b> [--seed <s>] --csv
//
// Exit codes: 0 ok, 1 verification mismatch, 2 parse/usage error,
// 3 capability mismatch, 4 shape error (m > n), 5 int64 overflow.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace perm::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kCapability = 3,
  kShape = 4,
  kOverflow = 5,
};

struct RunConfig {
  std::string command;
  std::string algebra = "int64";
  std::string algorithm = "auto";
  std::string variant = "per";
  std::string input = "-";
  std::uint64_t seed = 0;
  unsigned trials = 10;
  unsigned max_m = 4;
  unsigned max_n = 5;
  bool count_ops = false;
  bool csv = false;
  // bench only
  std::vector<std::string> algebras;
  std::vector<std::string> algorithms;
  std::string m_range = "1..4";
  std::string n_range = "1..8";
};

int cmd_compute(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to one of the commands above.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace perm::cli
