#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipf/element_set.hpp"
#include "ipf/products.hpp"
#include "ipf/semigroup.hpp"
#include "ipf/sequence.hpp"

namespace ipf {

/// a <=_N b: a^m = b*c for some m >= 1 and some c in S (c ranges over S
/// itself, no adjoined identity). Throws NotCommutative.
bool n_leq(const FiniteSemigroup& s, Element a, Element b);

struct ArchComponent {
  ElementSet elements;
  Element idempotent = 0;
  ElementSet kernel_group;  // e * component
  ElementSet nil_part;      // component \ kernel_group
};

/// Archimedean components of a commutative semigroup (the classes of mutual
/// <=_N) and the induced order on them, i.e. the universal semilattice.
struct ArchDecomposition {
  std::vector<ArchComponent> components;  // numbered by least element
  std::vector<int> component_of;          // element -> component id
  // below[i][j]: component i <= component j.
  std::vector<std::vector<bool>> below;

  bool is_total_order() const;
  // Component ids from the top of the order to the bottom; only meaningful
  // for a total order.
  std::vector<int> top_down() const;
};

/// Throws NotCommutative, or NotArchimedean if a component does not hold
/// exactly one idempotent.
ArchDecomposition archimedean_decomposition(const FiniteSemigroup& s);

/// True iff the components form a chain and g*h = g whenever g lies in a
/// component strictly below the component of h.
bool is_chain_lower_absorbing(const FiniteSemigroup& s, const ArchDecomposition& dec);

/// {e*a : a in component} for the unique idempotent e of the component;
/// checked to be a group with identity e. Throws NotArchimedean.
ElementSet kernel_group(const FiniteSemigroup& s, const ElementSet& component);

/// a * e for a in the nil part of the component. Throws NotInNilPart.
Element partial_hom(const FiniteSemigroup& s, const ElementSet& component, Element a);

/// Flat structural conditions on an extremal candidate (S, T), checked in
/// this order; checking stops at the first failure.
enum class StructureCondition : char {
  CommutativeSupport = 'a',     // R = <supp(T)> is commutative
  OutsideIdempotent = 'b',      // S \ R consists of idempotents
  AbsorptionOrder = 'c',        // supp(T) orders as x_1..x_k with x_i*x_j = x_j for i < j
  UnionOfCyclics = 'd',         // R = union of <x_i>
  DisjointCyclics = 'e',        // non-idempotent parts of the <x_i> are pairwise disjoint
  IndexModPeriod = 'f',         // I(x_i) == 1 (mod P(x_i))
  Multiplicity = 'g',           // v_{x_i}(T) = I(x_i) + P(x_i) - 2
};

char condition_id(StructureCondition c) noexcept;
const char* condition_name(StructureCondition c) noexcept;

enum class ComponentKind { MonogenicOnly, GroupByNilExtension };
const char* to_string(ComponentKind kind) noexcept;

struct GeneratorInfo {
  Element element = 0;
  int index = 0;
  int period = 0;
  int multiplicity = 0;
};

struct ComponentReport {
  std::vector<Element> elements;  // parent indices
  std::vector<Element> generators;
  std::optional<ComponentKind> kind;
};

/// Witness that (S, T) has the structure of an extremal idempotent-product
/// free pair, or the first violated condition.
///
/// `pass` reflects the flat conditions (a)-(g). The componentwise form
/// (commutative R, chain of archimedean components with lower absorption,
/// each component cyclic with I == 1 mod P or a cyclic group extended by a
/// cyclic nilsemigroup through the trivial partial homomorphism, and the
/// multiplicity rule) is evaluated independently into `main_form_pass`.
struct ExtremalCertificate {
  bool pass = false;
  std::optional<StructureCondition> fail_reason;
  std::vector<std::pair<StructureCondition, bool>> evaluated;
  std::vector<Element> generator_order;
  std::vector<GeneratorInfo> per_generator;
  std::vector<ComponentReport> components;  // top of the chain first
  bool main_form_pass = false;
  std::string main_form_reason;  // empty on pass
};

/// Throws WrongLength unless |T| = |S \ E(S)|.
ExtremalCertificate extremal_structure_check(const FiniteSemigroup& s, const Seq& t);

/// is_weakly_free(S, T) == extremal_structure_check(S, T).pass
bool freeness_matches_certificate(const FiniteSemigroup& s, const Seq& t,
                           const ProductOptions& opts = {});

}  // namespace ipf
