#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ipf/semigroup.hpp"
#include "ipf/sequence.hpp"

namespace ipf {

// Z_p as monogenic(1, p); element p-1 is the identity.
FiniteSemigroup cyclic_group(int p);
// Cyclic nilsemigroup monogenic(n, 1); element n-1 is the zero.
FiniteSemigroup cyclic_nil(int n);
// Two-element-or-more left-zero semigroup, a*b = a.
FiniteSemigroup left_zero(int n);

/// Ideal extension of Z_p by the cyclic nilsemigroup of index n through the
/// trivial partial homomorphism. Elements 0..n-2 are x^1..x^(n-1); elements
/// n-1..n+p-2 are g^1..g^p with g^p = e the group identity. Nil products that
/// overflow land on e and a nil element times a group element is that group
/// element. Requires n >= 2 and p >= 2.
FiniteSemigroup ideal_extension_trivial(int nil_index, int group_order);

/// Disjoint union in which every element of a later component absorbs every
/// element of an earlier one: g*h = h*g = h. Components must be commutative.
FiniteSemigroup chain_glue(std::span<const FiniteSemigroup> components);

// chain_glue({cyclic_group(n1), cyclic_nil(n2)}), n1, n2 >= 2.
FiniteSemigroup group_over_nil(int n1, int n2);

struct MonogenicPart {
  int index = 1;
  int period = 1;
  bool operator==(const MonogenicPart&) const = default;
};
struct GroupByNilPart {
  int nil_index = 2;
  int group_order = 2;
  bool operator==(const GroupByNilPart&) const = default;
};
using ComponentSpec = std::variant<MonogenicPart, GroupByNilPart>;

struct ExtremalSpec {
  std::vector<ComponentSpec> chain;  // first component is the top of the chain
  bool adjoin_identity = false;
  bool operator==(const ExtremalSpec&) const = default;
};

// Throws InvalidParameters on a spec that breaks I == 1 (mod P), n, p >= 2,
// or has no components.
void validate_spec(const ExtremalSpec& spec);

// Tokens "mono:I:P" and "gbn:N:P".
ExtremalSpec parse_extremal_spec(std::span<const std::string> tokens, bool adjoin_identity);
std::string to_string(const ExtremalSpec& spec);

// Number of non-idempotent elements the spec produces.
int non_idempotent_count(const ExtremalSpec& spec);

struct ExtremalPair {
  FiniteSemigroup semigroup;
  Seq sequence;
};

/// Chain-glues the components (optionally adjoining an identity) and returns
/// T as the concatenation, per generator x, of x^[I(x)+P(x)-2].
ExtremalPair extremal_pair(const ExtremalSpec& spec);

/// Every spec with 1..max_components components whose non-idempotent count is
/// at most max_non_idempotents, group-by-nil parameters in [2, max_gbn_param],
/// without and with adjoined identity.
std::vector<ExtremalSpec> extremal_specs_up_to(int max_components, int max_non_idempotents,
                                               int max_gbn_param);

struct EnumerateOptions {
  int order = 1;
  bool commutative_only = false;
  bool dedup_iso = false;
  // Emit only tables whose flattened cells compare >= this prefix.
  std::vector<int> resume_from;
  bool allow_order5 = false;
  unsigned workers = 1;
};

/// Every associative table of the given order in lexicographic order of the
/// flattened rows, optionally restricted to commutative tables and to the
/// least table in each isomorphism class. Throws OrderTooLarge above 4 unless
/// order 5 is explicitly allowed.
std::vector<FiniteSemigroup> enumerate_semigroups(const EnumerateOptions& opts);

/// Sequential streaming form; stops early when `visit` returns false.
void for_each_semigroup(const EnumerateOptions& opts,
                        const std::function<bool(std::span<const int>)>& visit);

// Least relabeling of the table over all n! permutations.
std::vector<int> canonical_table(const FiniteSemigroup& s);

}  // namespace ipf
