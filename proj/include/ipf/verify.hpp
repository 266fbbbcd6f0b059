#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ipf/report.hpp"

namespace ipf {

// Check ids understood by run_verification.
//   bound           SI(S) <= |S\E(S)|+1 on every corpus table
//   equivalence     weak freeness <=> structural certificate, every T of length
//                   |S\E(S)| over S\E(S) on commutative corpus tables
//   lambda          lambda_{T x^[-1]}(x) >= 1 for every free T of that sweep
//   weak-vs-strong  I(S) <= SI(S), with equality on commutative tables
//   nil-products    a*b in {a,b} forces a or b to be the zero in commutative
//                   nilsemigroups
//   monogenic       monogenic tables against repeated multiplication, i+p-1 <= 12
//   extremal        generated extremal pairs, <= 3 components, |S\E(S)| <= 10
//   group-over-nil  I and D of Z_n1 glued above a cyclic nilsemigroup of index
//                   n2, for n1, n2 in [2,5]
const std::vector<std::string>& known_checks();

struct VerifyOptions {
  int min_order = 1;
  int max_order = 4;
  bool commutative_only = false;
  std::vector<std::string> checks;  // empty = all
  unsigned workers = 1;
  std::size_t dp_cap = 24;
  bool allow_order5 = false;
};

struct InstanceVerdict {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct CheckSummary {
  std::string id;
  std::size_t instances = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerificationRun {
  VerifyOptions options;
  std::size_t corpus_size = 0;
  std::vector<InstanceVerdict> instances;
  std::vector<CheckSummary> summary;
  double elapsed_ms = 0;

  std::size_t failed() const;
  bool all_passed() const { return failed() == 0; }
};

/// Throws InvalidArgument on an unknown check id.
VerificationRun run_verification(const VerifyOptions& opts);

// Timing is left out unless asked for, so logs compare byte-for-byte.
Json to_json(const VerificationRun& run, bool include_timing = false);

}  // namespace ipf
