#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/element_set.hpp"

namespace ipf {

/// A validated finite semigroup given by its Cayley table.
///
/// Elements are the dense indices [0, order). `mul(a, b)` is table[a][b].
/// Instances are immutable after construction, so they can be shared freely
/// between search workers.
class FiniteSemigroup {
 public:
  /// Checks closure, then associativity over all triples in lexicographic
  /// order. Throws Error{NotClosed} naming the first out-of-range cell, or
  /// Error{NotAssociative} naming the first failing (a, b, c).
  static FiniteSemigroup validate(int order, std::span<const int> cells);
  static FiniteSemigroup validate(const std::vector<std::vector<int>>& rows);

  int order() const { return order_; }
  Element mul(Element a, Element b) const {
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(b)];
  }
  // Row-major flattened table.
  std::span<const Element> cells() const { return table_; }

  const ElementSet& idempotent_set() const { return idempotents_; }
  bool is_idempotent(Element e) const { return idempotents_.contains(e); }
  bool commutative() const { return commutative_; }
  std::optional<Element> identity() const { return identity_; }
  std::optional<Element> zero() const { return zero_; }

  bool contains(Element e) const { return e >= 0 && e < order_; }

  bool operator==(const FiniteSemigroup& o) const {
    return order_ == o.order_ && table_ == o.table_;
  }

 private:
  FiniteSemigroup(int order, std::vector<Element> table);

  int order_ = 0;
  std::vector<Element> table_;
  ElementSet idempotents_;
  bool commutative_ = false;
  std::optional<Element> identity_;
  std::optional<Element> zero_;
};

/// Index and period of x, together with the distinct powers x, x^2, ...,
/// x^(index+period-1) in order.
struct CyclicData {
  int index = 0;
  int period = 0;
  std::vector<Element> powers;

  // x^k for any k >= 1.
  Element power(long long k) const;
};

std::vector<Element> idempotents(const FiniteSemigroup& s);
bool is_commutative(const FiniteSemigroup& s);
std::optional<Element> zero_element(const FiniteSemigroup& s);

/// Least subset containing `generators` that is closed under the table.
ElementSet generated_subsemigroup(const FiniteSemigroup& s, const ElementSet& generators);

CyclicData cyclic_data(const FiniteSemigroup& s, Element x);

/// The unique idempotent power x^l of <x>, with l in [I, I+P-1] and
/// l == 0 (mod P).
Element unique_cycle_idempotent(const FiniteSemigroup& s, Element x);

/// The cyclic semigroup {x, ..., x^(i+p-1)} of index i and period p.
/// Element k-1 is x^k, so element 0 is the generator.
FiniteSemigroup monogenic(int index, int period);

// {a*x : a in set}
ElementSet right_translate(const FiniteSemigroup& s, const ElementSet& set, Element x);

/// A closed subset re-indexed as a semigroup in its own right.
struct Subsemigroup {
  FiniteSemigroup semigroup;
  std::vector<Element> to_parent;  // local index -> parent element
};

// Throws InvalidArgument if `subset` is empty or not closed.
Subsemigroup restrict_to(const FiniteSemigroup& s, const ElementSet& subset);

// Cayley table text format: first line n, then n rows of n indices.
// Lines starting with '#' and blank lines are skipped.
FiniteSemigroup parse_table(std::string_view text);
std::string format_table(const FiniteSemigroup& s);
FiniteSemigroup load_table(const std::string& path);

}  // namespace ipf
