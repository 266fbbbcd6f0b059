// Acceptance gate: one PASS/FAIL line per criterion. All criteria are exact,
// so the only tolerance is zero mismatches.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ipf/constants.hpp"
#include "ipf/construct.hpp"
#include "ipf/products.hpp"
#include "ipf/report.hpp"
#include "ipf/structure.hpp"
#include "ipf/verify.hpp"
#include "oracles.hpp"

using namespace ipf;

namespace {

constexpr std::size_t kMaxMismatches = 0;
constexpr int kRandomTrials = 1000;
constexpr std::uint32_t kRandomSeed = 0x5eed1234;

struct Outcome {
  std::size_t checked = 0;
  std::size_t mismatches = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++checked;
    if (ok) return;
    if (mismatches++ == 0) first_failure = describe();
  }
  bool pass() const { return checked > 0 && mismatches <= kMaxMismatches; }
};

std::vector<FiniteSemigroup> corpus(int max_order, bool commutative, bool allow_order5 = false) {
  std::vector<FiniteSemigroup> out;
  for (int n = 1; n <= max_order; ++n) {
    EnumerateOptions eo;
    eo.order = n;
    eo.commutative_only = commutative;
    eo.allow_order5 = allow_order5;
    eo.workers = std::max(1u, std::thread::hardware_concurrency());
    auto part = enumerate_semigroups(eo);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string seq_text(const Seq& t) { return to_json(t).dump(); }

std::size_t non_idempotent_count(const FiniteSemigroup& s) {
  return static_cast<std::size_t>(s.order()) - s.idempotent_set().size();
}

// Weakly free sequences met while sweeping criterion 2, reused by criterion 6.
struct FreeCase {
  const FiniteSemigroup* s;
  Seq t;
};
std::vector<FreeCase> free_cases;

Outcome bound_holds(const std::vector<FiniteSemigroup>& all4) {
  Outcome o;
  for (const auto& s : all4) {
    const auto k = non_idempotent_count(s);
    const auto si = strong_erdos_burgess(s);
    o.expect(si.value <= static_cast<int>(k) + 1, [&] { return table_id(s); });
    bool none_longer = true;
    oracle::for_each_word(oracle::non_idempotents(s), k + 1, [&](const Seq& t) {
      if (oracle::strongly_free(s, t)) none_longer = false;
    });
    o.expect(none_longer, [&] { return "oracle found a long free word in " + table_id(s); });
  }
  return o;
}

Outcome equivalence_holds(const std::vector<FiniteSemigroup>& comm4) {
  Outcome o;
  for (const auto& s : comm4) {
    const auto alphabet = oracle::non_idempotents(s);
    oracle::for_each_word(alphabet, alphabet.size(), [&](const Seq& t) {
      o.expect(freeness_matches_certificate(s, t), [&] { return table_id(s) + " T=" + seq_text(t); });
      const bool free = is_weakly_free(s, t);
      o.expect(free == oracle::weakly_free(s, t),
               [&] { return "freeness oracle disagrees on " + table_id(s); });
      if (free) free_cases.push_back({&s, t});
    });
  }
  return o;
}

Outcome extremal_family_holds() {
  Outcome o;
  for (const auto& spec : extremal_specs_up_to(3, 10, 4)) {
    const auto pair = extremal_pair(spec);
    const auto k = non_idempotent_count(pair.semigroup);
    const bool ok = pair.sequence.size() == k && is_weakly_free(pair.semigroup, pair.sequence) &&
                    extremal_structure_check(pair.semigroup, pair.sequence).pass &&
                    erdos_burgess(pair.semigroup).value == static_cast<int>(k) + 1;
    o.expect(ok, [&] { return to_string(spec); });
  }
  return o;
}

Outcome glued_formulas_hold() {
  Outcome o;
  for (int n1 = 2; n1 <= 5; ++n1)
    for (int n2 = 2; n2 <= 5; ++n2) {
      const auto s = group_over_nil(n1, n2);
      const int i = erdos_burgess(s).value;
      const int d = davenport(s).value;
      o.expect(i == (n1 - 1) + (n2 - 1) + 1 && d == std::max(n1, n2 + 1), [&] {
        return "(" + std::to_string(n1) + "," + std::to_string(n2) + ") I=" + std::to_string(i) +
               " D=" + std::to_string(d);
      });
    }
  return o;
}

Outcome strong_and_weak_agree(const std::vector<FiniteSemigroup>& all4) {
  Outcome o;
  for (const auto& s : all4) {
    const int i = erdos_burgess(s).value;
    const int si = strong_erdos_burgess(s).value;
    o.expect(s.commutative() ? i == si : i <= si, [&] {
      return table_id(s) + " I=" + std::to_string(i) + " SI=" + std::to_string(si);
    });
  }
  return o;
}

Outcome lambda_positive() {
  Outcome o;
  for (const auto& c : free_cases)
    for (Element x : c.t.support())
      o.expect(lambda(*c.s, c.t.without_one(x), x) >= 1,
               [&] { return table_id(*c.s) + " T=" + seq_text(c.t) + " x=" + std::to_string(x); });
  return o;
}

Outcome monogenic_conformance() {
  Outcome o;
  for (int i = 1; i <= 12; ++i)
    for (int p = 1; i + p - 1 <= 12; ++p) {
      const auto s = monogenic(i, p);
      const int n = i + p - 1;
      bool cells_ok = s.order() == n;
      for (int a = 1; a <= n && cells_ok; ++a)
        for (int b = 1; b <= n; ++b)
          if (s.mul(a - 1, b - 1) != oracle::monogenic_product(i, p, a, b)) cells_ok = false;
      const auto cd = cyclic_data(s, 0);
      bool round_trip = cd.index == i && cd.period == p &&
                        cd.powers.size() == static_cast<std::size_t>(n);
      for (int k = 0; round_trip && k < n; ++k) round_trip = cd.powers[k] == k;
      const int l = unique_cycle_idempotent(s, 0) + 1;
      const bool idem_ok = l % p == 0 && l >= i && l <= i + p - 1 && s.is_idempotent(l - 1);
      o.expect(cells_ok && round_trip && idem_ok, [&] {
        return "(" + std::to_string(i) + "," + std::to_string(p) + ")";
      });
    }
  return o;
}

Outcome nil_products_hit_zero(const std::vector<FiniteSemigroup>& comm4) {
  Outcome o;
  for (const auto& s : comm4) {
    if (!s.zero() || s.idempotent_set().size() != 1) continue;  // nilsemigroups only
    const Element z = *s.zero();
    for (Element a = 0; a < s.order(); ++a)
      for (Element b = 0; b < s.order(); ++b) {
        const Element ab = s.mul(a, b);
        if (ab == a || ab == b)
          o.expect(a == z || b == z, [&] {
            return table_id(s) + " a=" + std::to_string(a) + " b=" + std::to_string(b);
          });
      }
  }
  return o;
}

Outcome product_oracles_agree(const std::vector<FiniteSemigroup>& all4) {
  Outcome o;
  const auto order5 = corpus(5, false, true);
  std::vector<std::vector<const FiniteSemigroup*>> by_order(6);
  for (const auto& s : all4) by_order[static_cast<std::size_t>(s.order())].push_back(&s);
  for (const auto& s : order5)
    if (s.order() == 5) by_order[5].push_back(&s);

  std::mt19937 rng(kRandomSeed);
  std::uniform_int_distribution<int> pick_order(1, 5), pick_len(0, 6);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    const auto& pool = by_order[static_cast<std::size_t>(pick_order(rng))];
    const auto& s = *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    std::uniform_int_distribution<int> pick_elem(0, s.order() - 1);
    std::vector<Element> terms(static_cast<std::size_t>(pick_len(rng)));
    for (auto& x : terms) x = pick_elem(rng);
    const Seq t(terms);
    auto any = any_order_products(s, t).elements();
    auto nat = natural_order_products(s, t).elements();
    const auto any_ref = oracle::any_order_products(s, t);
    const auto nat_ref = oracle::natural_order_products(s, t);
    o.expect(std::set<int>(any.begin(), any.end()) == any_ref &&
                 std::set<int>(nat.begin(), nat.end()) == nat_ref,
             [&] { return table_id(s) + " T=" + seq_text(t); });
  }
  return o;
}

Outcome logs_deterministic() {
  Outcome o;
  VerifyOptions one;
  one.max_order = 4;
  one.checks = {"bound", "equivalence", "extremal", "group-over-nil", "weak-vs-strong"};
  VerifyOptions many = one;
  many.workers = std::max(4u, std::thread::hardware_concurrency());
  const auto a = run_verification(one);
  const auto b = run_verification(many);
  o.expect(a.all_passed() && b.all_passed(), [] { return "verification run failed"; });
  o.expect(to_json(a).dump() == to_json(b).dump(), [] { return "logs differ"; });
  const auto again = run_verification(many);
  o.expect(to_json(b).dump() == to_json(again).dump(), [] { return "repeat run differs"; });
  return o;
}

}  // namespace

int main() {
  const auto all4 = corpus(4, false);
  const auto comm4 = corpus(4, true);

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "strong constant bound, all tables of order <= 4", [&] { return bound_holds(all4); }},
      {2, "freeness iff structure, commutative order <= 4", [&] { return equivalence_holds(comm4); }},
      {3, "extremal family, <= 3 components, <= 10 non-idempotents", extremal_family_holds},
      {4, "two-component example formulas, n1,n2 in [2,5]", glued_formulas_hold},
      {5, "I = SI commutative, I <= SI all, order <= 4", [&] { return strong_and_weak_agree(all4); }},
      {6, "lambda >= 1 on free sequences from criterion 2", lambda_positive},
      {7, "monogenic tables, i+p-1 <= 12", monogenic_conformance},
      {8, "commutative nilsemigroup products, order <= 4", [&] { return nil_products_hit_zero(comm4); }},
      {9, "product sets vs subsequence oracles, 1000 random", [&] { return product_oracles_agree(all4); }},
      {10, "verification logs identical across worker counts", logs_deterministic},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s  [%zu checks, %zu mismatches, %.2fs]%s%s\n", c.id,
                o.pass() ? "PASS" : "FAIL", c.name, o.checked, o.mismatches, secs,
                o.first_failure.empty() ? "" : " first: ", o.first_failure.c_str());
    if (!o.pass()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
