#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "ipf/semigroup.hpp"
#include "ipf/sequence.hpp"

namespace ipf {

enum class ConstantKind { ErdosBurgess, StrongErdosBurgess, Davenport };

const char* to_string(ConstantKind kind) noexcept;

/// Result of an exhaustive search. `witness` is the lexicographically least
/// longest sequence with the defining property, so its length is value - 1.
struct ConstantReport {
  ConstantKind kind = ConstantKind::ErdosBurgess;
  int value = 0;
  Seq witness;
  std::uint64_t nodes_explored = 0;

  bool operator==(const ConstantReport&) const = default;
};

struct SearchOptions {
  unsigned workers = 1;
  std::size_t dp_cap = 24;
};

// |S \ E(S)| + 1
int non_idempotent_bound(const FiniteSemigroup& s);

/// I(S). Depth-first over nondecreasing sequences drawn from S \ E(S); a
/// prefix that is not weakly free is never extended.
ConstantReport erdos_burgess(const FiniteSemigroup& s, const SearchOptions& opts = {});

/// SI(S). Depth-first over words drawn from S \ E(S), filtering prefixes by
/// the natural-order closure. The remaining search from a prefix depends only
/// on its closure set, which is memoized within each first-letter branch.
ConstantReport strong_erdos_burgess(const FiniteSemigroup& s, const SearchOptions& opts = {});

/// D(S) for commutative S. A sequence is reducible when some proper
/// subsequence has the same product. The empty subsequence counts, with
/// product the identity, only when S has an identity element.
/// Throws NotCommutative.
ConstantReport davenport(const FiniteSemigroup& s, const SearchOptions& opts = {});

/// True if some proper subsequence of T has product pi(T), under the same
/// convention as davenport(). Direct enumeration of sub-multisets.
bool is_reducible(const FiniteSemigroup& s, const Seq& t);

}  // namespace ipf
