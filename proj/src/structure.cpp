#include "ipf/structure.hpp"

#include <algorithm>
#include <numeric>

#include "ipf/error.hpp"

namespace ipf {

namespace {

void require_commutative(const FiniteSemigroup& s) {
  if (!s.commutative()) throw Error(ErrorCode::NotCommutative, "semigroup is not commutative");
}

ElementSet row_set(const FiniteSemigroup& s, Element b) {
  ElementSet out(static_cast<std::size_t>(s.order()));
  for (Element c = 0; c < s.order(); ++c) out.insert(s.mul(b, c));
  return out;
}

ElementSet power_set(const FiniteSemigroup& s, Element a) {
  ElementSet out(static_cast<std::size_t>(s.order()));
  for (Element p : cyclic_data(s, a).powers) out.insert(p);
  return out;
}

}  // namespace

bool n_leq(const FiniteSemigroup& s, Element a, Element b) {
  require_commutative(s);
  if (!s.contains(a) || !s.contains(b))
    throw Error(ErrorCode::InvalidArgument, "element out of range");
  // Powers beyond I(a)+P(a)-1 repeat earlier ones, so the listed powers suffice.
  return power_set(s, a).intersects(row_set(s, b));
}

bool ArchDecomposition::is_total_order() const {
  for (std::size_t i = 0; i < below.size(); ++i)
    for (std::size_t j = 0; j < below.size(); ++j)
      if (!below[i][j] && !below[j][i]) return false;
  return true;
}

std::vector<int> ArchDecomposition::top_down() const {
  std::vector<int> ids(components.size());
  std::iota(ids.begin(), ids.end(), 0);
  auto height = [&](int i) {
    int h = 0;
    for (std::size_t j = 0; j < below.size(); ++j) h += below[j][static_cast<std::size_t>(i)];
    return h;
  };
  std::stable_sort(ids.begin(), ids.end(), [&](int x, int y) { return height(x) > height(y); });
  return ids;
}

ElementSet kernel_group(const FiniteSemigroup& s, const ElementSet& component) {
  std::vector<Element> idem;
  component.for_each([&](Element a) {
    if (s.is_idempotent(a)) idem.push_back(a);
  });
  if (idem.size() != 1)
    throw Error(ErrorCode::NotArchimedean, "component holds " + std::to_string(idem.size()) +
                                               " idempotents, expected 1");
  const Element e = idem.front();
  ElementSet group(component.universe());
  component.for_each([&](Element a) { group.insert(s.mul(e, a)); });

  bool is_group = group.is_subset_of(component);
  group.for_each([&](Element g) {
    if (!is_group) return;
    if (s.mul(e, g) != g || s.mul(g, e) != g) is_group = false;
    bool has_inverse = false;
    group.for_each([&](Element h) {
      if (!group.contains(s.mul(g, h))) is_group = false;
      if (s.mul(g, h) == e && s.mul(h, g) == e) has_inverse = true;
    });
    if (!has_inverse) is_group = false;
  });
  if (!is_group)
    throw Error(ErrorCode::NotArchimedean, "e * component is not a group with identity e");
  return group;
}

Element partial_hom(const FiniteSemigroup& s, const ElementSet& component, Element a) {
  const ElementSet group = kernel_group(s, component);
  if (!s.contains(a) || !component.contains(a) || group.contains(a))
    throw Error(ErrorCode::NotInNilPart, std::to_string(a) + " is not in the nil part");
  Element e = 0;
  component.for_each([&](Element x) {
    if (s.is_idempotent(x)) e = x;
  });
  return s.mul(a, e);
}

ArchDecomposition archimedean_decomposition(const FiniteSemigroup& s) {
  require_commutative(s);
  const int n = s.order();
  std::vector<ElementSet> powers, rows;
  for (Element a = 0; a < n; ++a) {
    powers.push_back(power_set(s, a));
    rows.push_back(row_set(s, a));
  }
  auto leq = [&](Element a, Element b) { return powers[a].intersects(rows[b]); };

  ArchDecomposition dec;
  dec.component_of.assign(static_cast<std::size_t>(n), -1);
  std::vector<Element> reps;
  for (Element a = 0; a < n; ++a) {
    if (dec.component_of[a] >= 0) continue;
    const int id = static_cast<int>(dec.components.size());
    ArchComponent comp;
    comp.elements = ElementSet(static_cast<std::size_t>(n));
    for (Element b = a; b < n; ++b)
      if (dec.component_of[b] < 0 && leq(a, b) && leq(b, a)) {
        dec.component_of[b] = id;
        comp.elements.insert(b);
      }
    dec.components.push_back(std::move(comp));
    reps.push_back(a);
  }
  const std::size_t k = dec.components.size();
  dec.below.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) dec.below[i][j] = leq(reps[i], reps[j]);

  for (auto& comp : dec.components) {
    comp.kernel_group = kernel_group(s, comp.elements);
    comp.nil_part = comp.elements - comp.kernel_group;
    comp.elements.for_each([&](Element x) {
      if (s.is_idempotent(x)) comp.idempotent = x;
    });
  }
  return dec;
}

bool is_chain_lower_absorbing(const FiniteSemigroup& s, const ArchDecomposition& dec) {
  if (!dec.is_total_order()) return false;
  for (Element g = 0; g < s.order(); ++g)
    for (Element h = 0; h < s.order(); ++h) {
      const auto cg = static_cast<std::size_t>(dec.component_of[g]);
      const auto ch = static_cast<std::size_t>(dec.component_of[h]);
      if (cg == ch || !dec.below[cg][ch]) continue;
      if (s.mul(g, h) != g || s.mul(h, g) != g) return false;
    }
  return true;
}

char condition_id(StructureCondition c) noexcept { return static_cast<char>(c); }

const char* condition_name(StructureCondition c) noexcept {
  switch (c) {
    case StructureCondition::CommutativeSupport: return "commutative-support";
    case StructureCondition::OutsideIdempotent: return "outside-idempotent";
    case StructureCondition::AbsorptionOrder: return "absorption-order";
    case StructureCondition::UnionOfCyclics: return "union-of-cyclics";
    case StructureCondition::DisjointCyclics: return "disjoint-cyclics";
    case StructureCondition::IndexModPeriod: return "index-mod-period";
    case StructureCondition::Multiplicity: return "multiplicity";
  }
  return "unknown";
}

const char* to_string(ComponentKind kind) noexcept {
  switch (kind) {
    case ComponentKind::MonogenicOnly: return "MonogenicOnly";
    case ComponentKind::GroupByNilExtension: return "GroupByNilExtension";
  }
  return "Unknown";
}

namespace {

bool commutative_on(const FiniteSemigroup& s, const std::vector<Element>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (s.mul(members[i], members[j]) != s.mul(members[j], members[i])) return false;
  return true;
}

ElementSet as_set(const FiniteSemigroup& s, const std::vector<Element>& xs) {
  ElementSet out(static_cast<std::size_t>(s.order()));
  for (Element x : xs) out.insert(x);
  return out;
}

// Componentwise form; returns an empty string on success.
std::string check_main_form(const FiniteSemigroup& s, const Seq& t, const ElementSet& generated,
                            ExtremalCertificate& cert) {
  if (generated.empty()) return {};
  const Subsemigroup sub = restrict_to(s, generated);
  const ArchDecomposition dec = archimedean_decomposition(sub.semigroup);
  if (!is_chain_lower_absorbing(sub.semigroup, dec))
    return "universal semilattice is not a chain with lower absorption";

  const auto support = t.support();
  const auto mult = t.multiplicities();
  std::string failure;
  for (int id : dec.top_down()) {
    const ArchComponent& comp = dec.components[static_cast<std::size_t>(id)];
    ComponentReport report;
    ElementSet parent_elements(static_cast<std::size_t>(s.order()));
    comp.elements.for_each([&](Element local) {
      parent_elements.insert(sub.to_parent[local]);
      report.elements.push_back(sub.to_parent[local]);
    });
    for (Element x : support)
      if (parent_elements.contains(x)) report.generators.push_back(x);

    auto cyclic_set = [&](Element x) { return as_set(s, cyclic_data(s, x).powers); };
    if (failure.empty() && report.generators.size() == 1) {
      const Element x = report.generators[0];
      const CyclicData cd = cyclic_data(s, x);
      if (!(cyclic_set(x) == parent_elements))
        failure = "component of " + std::to_string(x) + " is not <x>";
      else if (cd.index % cd.period != 1 % cd.period)
        failure = "I(x) != 1 mod P(x) for " + std::to_string(x);
      else
        report.kind = ComponentKind::MonogenicOnly;
    } else if (failure.empty() && report.generators.size() == 2) {
      ElementSet group(static_cast<std::size_t>(s.order()));
      comp.kernel_group.for_each([&](Element local) { group.insert(sub.to_parent[local]); });
      const Element a = report.generators[0];
      const Element b = report.generators[1];
      if (group.contains(a) == group.contains(b)) {
        failure = "component generators are not split between group and nil part";
      } else {
        const Element x2 = group.contains(a) ? a : b;  // group generator
        const Element x1 = group.contains(a) ? b : a;  // nil generator
        const Element e = sub.to_parent[comp.idempotent];
        if (group.size() < 2)
          failure = "kernel group is trivial";
        else if (!(cyclic_set(x2) == group))
          failure = "kernel group is not <" + std::to_string(x2) + ">";
        else if (!(parent_elements == (cyclic_set(x1) | group)))
          failure = "component is not <x1> u <x2>";
        else if (s.mul(x1, e) != e)
          failure = "partial homomorphism is not trivial";
        else
          report.kind = ComponentKind::GroupByNilExtension;
      }
    } else if (failure.empty()) {
      failure = "component with " + std::to_string(report.generators.size()) + " generators";
    }
    cert.components.push_back(std::move(report));
  }
  if (!failure.empty()) return failure;

  for (Element x : support) {
    const CyclicData cd = cyclic_data(s, x);
    if (mult.at(x) != cd.index + cd.period - 2)
      return "v_x(T) != I(x)+P(x)-2 for " + std::to_string(x);
  }
  return {};
}

}  // namespace

ExtremalCertificate extremal_structure_check(const FiniteSemigroup& s, const Seq& t) {
  t.check_against(s);
  const std::size_t expected =
      static_cast<std::size_t>(s.order()) - s.idempotent_set().size();
  if (t.size() != expected)
    throw Error(ErrorCode::WrongLength, "expected |T| = |S\\E(S)| = " + std::to_string(expected) +
                                            ", got " + std::to_string(t.size()));
  ExtremalCertificate cert;
  const auto support = t.support();
  const auto mult = t.multiplicities();
  const ElementSet generated = support.empty()
                                   ? ElementSet(static_cast<std::size_t>(s.order()))
                                   : generated_subsemigroup(s, as_set(s, support));

  auto record = [&](StructureCondition c, bool ok) {
    cert.evaluated.emplace_back(c, ok);
    if (!ok && !cert.fail_reason) cert.fail_reason = c;
    return ok;
  };

  std::vector<CyclicData> cyclic;
  for (Element x : support) cyclic.push_back(cyclic_data(s, x));

  const bool main_prereq =
      record(StructureCondition::CommutativeSupport, commutative_on(s, generated.elements())) &&
      record(StructureCondition::OutsideIdempotent,
             (ElementSet::all(static_cast<std::size_t>(s.order())) - generated)
                 .is_subset_of(s.idempotent_set()));

  bool ok = main_prereq;
  if (ok) {
    // Later generators absorb earlier ones, so sort by how many they absorb.
    std::vector<Element> order = support;
    auto absorbed = [&](Element x) {
      int c = 0;
      for (Element y : support) c += (y != x && s.mul(y, x) == x);
      return c;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](Element x, Element y) { return absorbed(x) < absorbed(y); });
    bool total = true;
    for (std::size_t i = 0; i < order.size() && total; ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (s.mul(order[i], order[j]) != order[j]) {
          total = false;
          break;
        }
    ok = record(StructureCondition::AbsorptionOrder, total);
    if (ok) cert.generator_order = order;
  }
  if (ok) {
    ElementSet covered(static_cast<std::size_t>(s.order()));
    for (const auto& cd : cyclic) covered |= as_set(s, cd.powers);
    ok = record(StructureCondition::UnionOfCyclics, covered == generated);
  }
  if (ok) {
    bool disjoint = true;
    ElementSet seen(static_cast<std::size_t>(s.order()));
    for (const auto& cd : cyclic) {
      ElementSet part = as_set(s, cd.powers) - s.idempotent_set();
      if (part.intersects(seen)) disjoint = false;
      seen |= part;
    }
    ok = record(StructureCondition::DisjointCyclics, disjoint);
  }
  if (ok) {
    bool all = true;
    for (const auto& cd : cyclic) all = all && (cd.index % cd.period == 1 % cd.period);
    ok = record(StructureCondition::IndexModPeriod, all);
  }
  if (ok) {
    bool all = true;
    for (std::size_t i = 0; i < support.size(); ++i)
      all = all && mult.at(support[i]) == cyclic[i].index + cyclic[i].period - 2;
    ok = record(StructureCondition::Multiplicity, all);
  }
  cert.pass = ok;

  const std::vector<Element>& listed = cert.generator_order.empty() ? support : cert.generator_order;
  for (Element x : listed) {
    const auto i = static_cast<std::size_t>(
        std::lower_bound(support.begin(), support.end(), x) - support.begin());
    cert.per_generator.push_back({x, cyclic[i].index, cyclic[i].period, mult.at(x)});
  }

  if (main_prereq) {
    cert.main_form_reason = check_main_form(s, t, generated, cert);
  } else {
    cert.main_form_reason = std::string("condition (") + condition_id(*cert.fail_reason) + ") " +
                            condition_name(*cert.fail_reason);
  }
  cert.main_form_pass = cert.main_form_reason.empty();
  return cert;
}

bool freeness_matches_certificate(const FiniteSemigroup& s, const Seq& t, const ProductOptions& opts) {
  const ExtremalCertificate cert = extremal_structure_check(s, t);
  return is_weakly_free(s, t, opts) == cert.pass;
}

}  // namespace ipf
