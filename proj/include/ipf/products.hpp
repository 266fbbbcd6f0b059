#pragma once

#include <cstddef>

#include "ipf/element_set.hpp"
#include "ipf/semigroup.hpp"
#include "ipf/sequence.hpp"

namespace ipf {

struct ProductOptions {
  // Longest sequence accepted by the general (noncommutative) sub-multiset DP.
  std::size_t dp_cap = 24;
};

struct ProductSets {
  ElementSet any_order;      // Pi(T)
  ElementSet natural_order;  // products of nonempty subsequences in their order in T
};

// Left-to-right product of all terms. Throws EmptySequence on an empty T.
Element pi(const FiniteSemigroup& s, const Seq& t);

/// Pi(T): products of every nonempty subsequence of T taken in every order.
///
/// Commutative tables use the incremental rule Pi(T.x) = Pi(T) u {x} u Pi(T)*x.
/// Otherwise Reach(U), the set of full-product values of the sub-multiset U in
/// any order, is built by last-factor recursion over multiplicity vectors and
/// Pi(T) is the union over nonempty U. Throws SequenceTooLong past `dp_cap`.
ElementSet any_order_products(const FiniteSemigroup& s, const Seq& t,
                              const ProductOptions& opts = {});

/// A_|T| of the closure A_k = A_{k-1} u {a_k} u A_{k-1}*a_k, A_0 = {}.
ElementSet natural_order_products(const FiniteSemigroup& s, const Seq& t);

ProductSets product_sets(const FiniteSemigroup& s, const Seq& t, const ProductOptions& opts = {});

bool is_weakly_free(const FiniteSemigroup& s, const Seq& t, const ProductOptions& opts = {});
bool is_strongly_free(const FiniteSemigroup& s, const Seq& t);

// |Pi(T.x) \ Pi(T)|
std::size_t lambda(const FiniteSemigroup& s, const Seq& t, Element x,
                   const ProductOptions& opts = {});

}  // namespace ipf
