#include "ipf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "ipf/construct.hpp"
#include "ipf/error.hpp"
#include "ipf/parallel.hpp"

namespace ipf {

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> ids = {
      "bound", "equivalence", "lambda", "weak-vs-strong",
      "nil-products", "monogenic", "extremal", "group-over-nil"};
  return ids;
}

std::size_t VerificationRun::failed() const {
  std::size_t n = 0;
  for (const auto& s : summary) n += s.failed;
  return n;
}

namespace {

using Corpus = std::vector<FiniteSemigroup>;

std::vector<Element> non_idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.order(); ++x)
    if (!s.is_idempotent(x)) out.push_back(x);
  return out;
}

// Calls fn on every word of the given length over the alphabet, in
// lexicographic order.
void for_each_word(const std::vector<Element>& alphabet, std::size_t length,
                   const std::function<void(const Seq&)>& fn) {
  if (alphabet.empty()) {
    if (length == 0) fn(Seq{});
    return;
  }
  std::vector<std::size_t> digit(length, 0);
  std::vector<Element> word(length, alphabet[0]);
  while (true) {
    fn(Seq(word));
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (++digit[i] < alphabet.size()) {
        word[i] = alphabet[digit[i]];
        break;
      }
      digit[i] = 0;
      word[i] = alphabet[0];
      if (i == 0) return;
    }
    if (length == 0) return;
  }
}

bool is_nilsemigroup(const FiniteSemigroup& s) {
  if (!s.zero()) return false;
  for (Element x = 0; x < s.order(); ++x) {
    const auto powers = cyclic_data(s, x).powers;
    if (std::find(powers.begin(), powers.end(), *s.zero()) == powers.end()) return false;
  }
  return true;
}

class Driver {
 public:
  explicit Driver(const VerifyOptions& opts) : opts_(opts) {}

  template <class Item, class Fn>
  void run_items(const std::string& check, const std::vector<Item>& items, Fn&& fn) {
    std::vector<InstanceVerdict> slots(items.size());
    parallel_for(items.size(), opts_.workers, [&](std::size_t i) {
      slots[i] = fn(items[i]);
      slots[i].check = check;
    });
    CheckSummary summary{check, 0, 0, 0};
    for (auto& v : slots) {
      ++summary.instances;
      ++(v.pass ? summary.passed : summary.failed);
      run_.instances.push_back(std::move(v));
    }
    run_.summary.push_back(summary);
  }

  const Corpus& corpus() {
    if (!corpus_loaded_) {
      for (int n = opts_.min_order; n <= opts_.max_order; ++n) {
        EnumerateOptions eo;
        eo.order = n;
        eo.commutative_only = opts_.commutative_only;
        eo.allow_order5 = opts_.allow_order5;
        eo.workers = opts_.workers;
        auto part = enumerate_semigroups(eo);
        corpus_.insert(corpus_.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
      }
      run_.corpus_size = corpus_.size();
      corpus_loaded_ = true;
    }
    return corpus_;
  }

  Corpus commutative_corpus() {
    Corpus out;
    for (const auto& s : corpus())
      if (s.commutative()) out.push_back(s);
    return out;
  }

  SearchOptions search() const { return {1, opts_.dp_cap}; }
  ProductOptions products() const { return {opts_.dp_cap}; }

  void bound() {
    run_items("bound", corpus(), [&](const FiniteSemigroup& s) {
      const auto si = strong_erdos_burgess(s, search());
      const int bound = non_idempotent_bound(s);
      const bool witness_ok = is_strongly_free(s, si.witness);
      return InstanceVerdict{"", table_id(s), si.value <= bound && witness_ok,
                             "SI=" + std::to_string(si.value) + " bound=" + std::to_string(bound) +
                                 " nodes=" + std::to_string(si.nodes_explored)};
    });
  }

  struct SweepResult {
    std::size_t sequences = 0;
    std::size_t free = 0;
    std::size_t lambda_checks = 0;
    std::string failure;
  };

  // Every word of length |S\E| over S\E, with the structural and lambda
  // checks enabled as requested.
  SweepResult sweep(const FiniteSemigroup& s, bool structure, bool lambda_check) {
    SweepResult r;
    const auto alphabet = non_idempotents(s);
    for_each_word(alphabet, alphabet.size(), [&](const Seq& t) {
      if (!r.failure.empty()) return;
      ++r.sequences;
      const bool free = is_weakly_free(s, t, products());
      if (structure) {
        const auto cert = extremal_structure_check(s, t);
        if (cert.pass != free)
          r.failure = "equivalence fails for T=" + format_sequence(t);
        else if (cert.main_form_pass != cert.pass)
          r.failure = "main and flat forms disagree for T=" + format_sequence(t);
      }
      if (!free) return;
      ++r.free;
      if (structure) {
        const auto supp = t.support();
        for (std::size_t i = 0; i < supp.size(); ++i)
          for (std::size_t j = i + 1; j < supp.size(); ++j) {
            const Element ab = s.mul(supp[i], supp[j]);
            if (ab != s.mul(supp[j], supp[i]) || (ab != supp[i] && ab != supp[j]))
              r.failure = "support pair does not absorb for T=" + format_sequence(t);
          }
        const ElementSet expected = ElementSet::all(static_cast<std::size_t>(s.order())) -
                                    s.idempotent_set();
        if (!(any_order_products(s, t, products()) == expected))
          r.failure = "Pi(T) != S\\E(S) for T=" + format_sequence(t);
      }
      if (lambda_check)
        for (Element x : t.support()) {
          ++r.lambda_checks;
          if (lambda(s, t.without_one(x), x, products()) < 1)
            r.failure = "lambda < 1 for T=" + format_sequence(t) + " x=" + std::to_string(x);
        }
    });
    if (!r.failure.empty() && r.failure.back() == '\n') r.failure.pop_back();
    return r;
  }

  void equivalence() {
    run_items("equivalence", commutative_corpus(), [&](const FiniteSemigroup& s) {
      const auto r = sweep(s, true, false);
      return InstanceVerdict{"", table_id(s), r.failure.empty(),
                             r.failure.empty() ? "sequences=" + std::to_string(r.sequences) +
                                                     " free=" + std::to_string(r.free)
                                               : r.failure};
    });
  }

  void lambda_positive() {
    run_items("lambda", commutative_corpus(), [&](const FiniteSemigroup& s) {
      const auto r = sweep(s, false, true);
      return InstanceVerdict{"", table_id(s), r.failure.empty(),
                             r.failure.empty() ? "free=" + std::to_string(r.free) +
                                                     " checks=" + std::to_string(r.lambda_checks)
                                               : r.failure};
    });
  }

  void weak_vs_strong() {
    run_items("weak-vs-strong", corpus(), [&](const FiniteSemigroup& s) {
      const auto i = erdos_burgess(s, search());
      const auto si = strong_erdos_burgess(s, search());
      const bool ok = s.commutative() ? i.value == si.value : i.value <= si.value;
      return InstanceVerdict{"", table_id(s), ok,
                             "I=" + std::to_string(i.value) + " SI=" + std::to_string(si.value) +
                                 (s.commutative() ? " commutative" : "")};
    });
  }

  void nil_products() {
    Corpus nil;
    for (const auto& s : commutative_corpus())
      if (is_nilsemigroup(s)) nil.push_back(s);
    run_items("nil-products", nil, [&](const FiniteSemigroup& s) {
      const Element zero = *s.zero();
      for (Element a = 0; a < s.order(); ++a)
        for (Element b = 0; b < s.order(); ++b) {
          const Element ab = s.mul(a, b);
          if ((ab == a || ab == b) && a != zero && b != zero)
            return InstanceVerdict{"", table_id(s), false,
                                   "a=" + std::to_string(a) + " b=" + std::to_string(b)};
        }
      return InstanceVerdict{"", table_id(s), true, "zero=" + std::to_string(zero)};
    });
  }

  void monogenic_tables() {
    std::vector<std::pair<int, int>> params;
    for (int i = 1; i <= 12; ++i)
      for (int p = 1; i + p - 1 <= 12; ++p) params.emplace_back(i, p);
    run_items("monogenic", params, [&](const std::pair<int, int>& ip) {
      const auto [i, p] = ip;
      const std::string id = "monogenic(" + std::to_string(i) + "," + std::to_string(p) + ")";
      const FiniteSemigroup s = monogenic(i, p);
      const int m = i + p - 1;
      // x^a * x^b must equal x^a multiplied by the generator b more times.
      for (Element a = 0; a < m; ++a) {
        Element acc = a;
        for (Element b = 0; b < m; ++b) {
          acc = s.mul(acc, 0);
          if (s.mul(a, b) != acc)
            return InstanceVerdict{"", id, false, "cell (" + std::to_string(a) + "," +
                                                      std::to_string(b) + ")"};
        }
      }
      const CyclicData cd = cyclic_data(s, 0);
      if (cd.index != i || cd.period != p)
        return InstanceVerdict{"", id, false, "cyclic data (" + std::to_string(cd.index) + "," +
                                                  std::to_string(cd.period) + ")"};
      const Element e = unique_cycle_idempotent(s, 0);
      const int ell = e + 1;
      if (ell % p != 0 || ell < i || ell > m)
        return InstanceVerdict{"", id, false, "idempotent power " + std::to_string(ell)};
      // The last p powers form a group with identity e.
      ElementSet cycle(static_cast<std::size_t>(m));
      for (int k = i; k <= m; ++k) cycle.insert(k - 1);
      bool group = true;
      cycle.for_each([&](Element g) {
        bool inverse = false;
        if (s.mul(e, g) != g) group = false;
        cycle.for_each([&](Element h) {
          if (!cycle.contains(s.mul(g, h))) group = false;
          if (s.mul(g, h) == e) inverse = true;
        });
        group = group && inverse;
      });
      return InstanceVerdict{"", id, group, "idempotent=x^" + std::to_string(ell)};
    });
  }

  void extremal() {
    const auto specs = extremal_specs_up_to(3, 10, 4);
    run_items("extremal", specs, [&](const ExtremalSpec& spec) {
      const auto pair = extremal_pair(spec);
      const auto& s = pair.semigroup;
      const bool free = is_weakly_free(s, pair.sequence, products());
      const auto cert = extremal_structure_check(s, pair.sequence);
      const auto eb = erdos_burgess(s, search());
      const int target = non_idempotent_bound(s);
      const bool ok = free && cert.pass && cert.main_form_pass && eb.value == target;
      return InstanceVerdict{"", to_string(spec), ok,
                             "I=" + std::to_string(eb.value) + " target=" +
                                 std::to_string(target) + (free ? "" : " not-free") +
                                 (cert.pass ? "" : " certificate-fail") +
                                 (cert.main_form_pass ? "" : " main-form-fail")};
    });
  }

  void group_over_nil_formulas() {
    std::vector<std::pair<int, int>> params;
    for (int n1 = 2; n1 <= 5; ++n1)
      for (int n2 = 2; n2 <= 5; ++n2) params.emplace_back(n1, n2);
    run_items("group-over-nil", params, [&](const std::pair<int, int>& np) {
      const auto [n1, n2] = np;
      const FiniteSemigroup s = group_over_nil(n1, n2);
      const int i = erdos_burgess(s, search()).value;
      const int d = davenport(s, search()).value;
      const bool ok = i == (n1 - 1) + (n2 - 1) + 1 && d == std::max(n1, n2 + 1);
      return InstanceVerdict{"",
                             "group-over-nil(" + std::to_string(n1) + "," + std::to_string(n2) + ")",
                             ok, "I=" + std::to_string(i) + " D=" + std::to_string(d)};
    });
  }

  VerificationRun finish() { return std::move(run_); }
  VerificationRun& run() { return run_; }

 private:
  VerifyOptions opts_;
  VerificationRun run_;
  Corpus corpus_;
  bool corpus_loaded_ = false;
};

}  // namespace

VerificationRun run_verification(const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> checks = opts.checks.empty() ? known_checks() : opts.checks;
  for (const auto& c : checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw Error(ErrorCode::InvalidArgument, "unknown check '" + c + "'");
  if (opts.min_order < 1 || opts.max_order < opts.min_order)
    throw Error(ErrorCode::InvalidArgument, "bad order range");

  Driver driver(opts);
  driver.run().options = opts;
  driver.run().options.checks = checks;
  const std::map<std::string, void (Driver::*)()> table = {
      {"bound", &Driver::bound},
      {"equivalence", &Driver::equivalence},
      {"lambda", &Driver::lambda_positive},
      {"weak-vs-strong", &Driver::weak_vs_strong},
      {"nil-products", &Driver::nil_products},
      {"monogenic", &Driver::monogenic_tables},
      {"extremal", &Driver::extremal},
      {"group-over-nil", &Driver::group_over_nil_formulas}};
  for (const auto& c : checks) (driver.*table.at(c))();

  VerificationRun run = driver.finish();
  run.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return run;
}

Json to_json(const VerificationRun& run, bool include_timing) {
  Json out;
  out["corpus"] = {{"minOrder", run.options.min_order},
                   {"maxOrder", run.options.max_order},
                   {"commutativeOnly", run.options.commutative_only},
                   {"tables", run.corpus_size}};
  out["checks"] = run.options.checks;
  std::size_t instances = 0, passed = 0, failed = 0;
  Json per_check = Json::array();
  for (const auto& s : run.summary) {
    instances += s.instances;
    passed += s.passed;
    failed += s.failed;
    per_check.push_back(
        {{"id", s.id}, {"instances", s.instances}, {"passed", s.passed}, {"failed", s.failed}});
  }
  out["summary"] = {{"instances", instances}, {"passed", passed}, {"failed", failed}};
  out["perCheck"] = std::move(per_check);
  Json list = Json::array();
  for (const auto& v : run.instances)
    list.push_back({{"check", v.check},
                    {"instance", v.instance},
                    {"verdict", v.pass ? "pass" : "fail"},
                    {"detail", v.detail}});
  out["instances"] = std::move(list);
  if (include_timing) out["elapsedMs"] = run.elapsed_ms;
  return out;
}

}  // namespace ipf
