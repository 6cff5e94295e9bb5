#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "negmono/measures.hpp"

namespace negmono::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Flags shared by every subcommand.
struct CommonFlags {
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: machine parallelism
  double tol = 1e-12;
  double eig_tol = 1e-13;

  MeasureOptions measures() const {
    MeasureOptions m;
    m.negative_threshold = tol;
    m.eig.off_diagonal_tol = eig_tol;
    return m;
  }
};

/// Runs the verification battery; writes one line per check and KEY=VALUE
/// totals. Returns true when every check passed and, for "all", every
/// operation in the coverage manifest was exercised.
bool run_verify(const std::string& suite, const CommonFlags& flags, std::ostream& out);

/// Entry point behind the negmono executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace negmono::cli
