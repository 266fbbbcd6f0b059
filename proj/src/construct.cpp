#include "ipf/construct.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "ipf/error.hpp"
#include "ipf/parallel.hpp"

namespace ipf {

FiniteSemigroup cyclic_group(int p) {
  if (p < 1) throw Error(ErrorCode::InvalidParameters, "cyclic_group requires p >= 1");
  return monogenic(1, p);
}

FiniteSemigroup cyclic_nil(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameters, "cyclic_nil requires n >= 1");
  return monogenic(n, 1);
}

FiniteSemigroup left_zero(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidParameters, "left_zero requires n >= 1");
  std::vector<int> cells;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) cells.push_back(a);
  return FiniteSemigroup::validate(n, cells);
}

FiniteSemigroup ideal_extension_trivial(int nil_index, int group_order) {
  if (nil_index < 2 || group_order < 2)
    throw Error(ErrorCode::InvalidParameters,
                "ideal_extension_trivial requires nil index >= 2 and group order >= 2");
  const int nil = nil_index - 1;  // x^1 .. x^(n-1)
  const int order = nil + group_order;
  const int identity = order - 1;  // g^p
  auto is_nil = [&](int e) { return e < nil; };
  auto group_exp = [&](int e) { return e - nil + 1; };  // g^k -> k
  auto group_elem = [&](int k) { return nil + ((k - 1) % group_order + group_order) % group_order; };

  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int p = 0;
      if (is_nil(a) && is_nil(b)) {
        const int sum = (a + 1) + (b + 1);
        p = sum <= nil ? sum - 1 : identity;
      } else if (is_nil(a)) {
        p = b;
      } else if (is_nil(b)) {
        p = a;
      } else {
        p = group_elem(group_exp(a) + group_exp(b));
      }
      cells.push_back(p);
    }
  return FiniteSemigroup::validate(order, cells);
}

FiniteSemigroup chain_glue(std::span<const FiniteSemigroup> components) {
  if (components.empty()) throw Error(ErrorCode::InvalidParameters, "chain_glue needs components");
  std::vector<int> offset;
  int order = 0;
  for (const auto& c : components) {
    if (!c.commutative())
      throw Error(ErrorCode::NotCommutative, "chain_glue components must be commutative");
    offset.push_back(order);
    order += c.order();
  }
  std::vector<int> owner;
  for (std::size_t i = 0; i < components.size(); ++i)
    owner.insert(owner.end(), static_cast<std::size_t>(components[i].order()), static_cast<int>(i));

  std::vector<int> cells;
  cells.reserve(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      const int ca = owner[a];
      const int cb = owner[b];
      if (ca == cb) {
        const auto& comp = components[static_cast<std::size_t>(ca)];
        cells.push_back(offset[ca] + comp.mul(a - offset[ca], b - offset[ca]));
      } else {
        cells.push_back(ca > cb ? a : b);
      }
    }
  try {
    return FiniteSemigroup::validate(order, cells);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotAssociativeAfterGlue, e.what());
  }
}

FiniteSemigroup group_over_nil(int n1, int n2) {
  if (n1 < 2 || n2 < 2)
    throw Error(ErrorCode::InvalidParameters, "group_over_nil requires n1, n2 >= 2");
  const FiniteSemigroup parts[] = {cyclic_group(n1), cyclic_nil(n2)};
  return chain_glue(parts);
}

void validate_spec(const ExtremalSpec& spec) {
  if (spec.chain.empty()) throw Error(ErrorCode::InvalidParameters, "spec has no components");
  for (const auto& part : spec.chain) {
    if (const auto* m = std::get_if<MonogenicPart>(&part)) {
      if (m->index < 1 || m->period < 1 || m->index % m->period != 1 % m->period)
        throw Error(ErrorCode::InvalidParameters,
                    "monogenic part needs I >= 1, P >= 1 and I == 1 (mod P), got I=" +
                        std::to_string(m->index) + " P=" + std::to_string(m->period));
    } else {
      const auto& g = std::get<GroupByNilPart>(part);
      if (g.nil_index < 2 || g.group_order < 2)
        throw Error(ErrorCode::InvalidParameters, "group-by-nil part needs n >= 2 and p >= 2");
    }
  }
}

namespace {

int parse_positive(std::string_view text, const std::string& token) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::InvalidParameters, "bad component token '" + token + "'");
  return v;
}

}  // namespace

ExtremalSpec parse_extremal_spec(std::span<const std::string> tokens, bool adjoin_identity) {
  ExtremalSpec spec;
  spec.adjoin_identity = adjoin_identity;
  for (const auto& token : tokens) {
    const auto first = token.find(':');
    const auto second = token.find(':', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw Error(ErrorCode::InvalidParameters,
                  "component token '" + token + "' is not mono:I:P or gbn:N:P");
    const std::string kind = token.substr(0, first);
    const std::string_view view(token);
    const int x = parse_positive(view.substr(first + 1, second - first - 1), token);
    const int y = parse_positive(view.substr(second + 1), token);
    if (kind == "mono")
      spec.chain.emplace_back(MonogenicPart{x, y});
    else if (kind == "gbn")
      spec.chain.emplace_back(GroupByNilPart{x, y});
    else
      throw Error(ErrorCode::InvalidParameters, "unknown component kind '" + kind + "'");
  }
  validate_spec(spec);
  return spec;
}

std::string to_string(const ExtremalSpec& spec) {
  std::string out;
  for (const auto& part : spec.chain) {
    if (!out.empty()) out += ' ';
    if (const auto* m = std::get_if<MonogenicPart>(&part))
      out += "mono:" + std::to_string(m->index) + ":" + std::to_string(m->period);
    else {
      const auto& g = std::get<GroupByNilPart>(part);
      out += "gbn:" + std::to_string(g.nil_index) + ":" + std::to_string(g.group_order);
    }
  }
  if (spec.adjoin_identity) out += " +identity";
  return out;
}

int non_idempotent_count(const ExtremalSpec& spec) {
  int total = 0;
  for (const auto& part : spec.chain) {
    if (const auto* m = std::get_if<MonogenicPart>(&part))
      total += m->index + m->period - 2;
    else {
      const auto& g = std::get<GroupByNilPart>(part);
      total += (g.nil_index - 1) + (g.group_order - 1);
    }
  }
  return total;
}

ExtremalPair extremal_pair(const ExtremalSpec& spec) {
  validate_spec(spec);
  std::vector<FiniteSemigroup> parts;
  // (local generator, multiplicity) per component
  std::vector<std::vector<std::pair<int, int>>> generators;
  for (const auto& part : spec.chain) {
    if (const auto* m = std::get_if<MonogenicPart>(&part)) {
      parts.push_back(monogenic(m->index, m->period));
      generators.push_back({{0, m->index + m->period - 2}});
    } else {
      const auto& g = std::get<GroupByNilPart>(part);
      parts.push_back(ideal_extension_trivial(g.nil_index, g.group_order));
      // x1 has index n and period 1; x2 generates Z_p.
      generators.push_back({{0, g.nil_index - 1}, {g.nil_index - 1, g.group_order - 1}});
    }
  }
  if (spec.adjoin_identity) parts.push_back(cyclic_group(1));
  FiniteSemigroup glued = chain_glue(parts);

  if (spec.adjoin_identity) {
    // Replace the absorbing trivial component with a two-sided identity.
    const int n = glued.order();
    const int one = n - 1;
    std::vector<int> cells(glued.cells().begin(), glued.cells().end());
    for (int a = 0; a < n; ++a) {
      cells[static_cast<std::size_t>(one) * n + a] = a;
      cells[static_cast<std::size_t>(a) * n + one] = a;
    }
    glued = FiniteSemigroup::validate(n, cells);
  }

  std::vector<Element> terms;
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i < generators.size())
      for (auto [local, count] : generators[i])
        terms.insert(terms.end(), static_cast<std::size_t>(count), offset + local);
    offset += parts[i].order();
  }
  Seq t(std::move(terms));
  const auto non_idem = static_cast<std::size_t>(glued.order()) - glued.idempotent_set().size();
  if (t.size() != non_idem)
    throw Error(ErrorCode::Internal, "extremal sequence length " + std::to_string(t.size()) +
                                         " differs from |S\\E(S)| = " + std::to_string(non_idem));
  return {std::move(glued), std::move(t)};
}

std::vector<ExtremalSpec> extremal_specs_up_to(int max_components, int max_non_idempotents,
                                               int max_gbn_param) {
  std::vector<ComponentSpec> options;
  for (int p = 1; p <= max_non_idempotents + 1; ++p)
    for (int i = 1; i + p - 2 <= max_non_idempotents; i += p)
      if (i % p == 1 % p) options.emplace_back(MonogenicPart{i, p});
  for (int n = 2; n <= max_gbn_param; ++n)
    for (int p = 2; p <= max_gbn_param; ++p)
      if ((n - 1) + (p - 1) <= max_non_idempotents) options.emplace_back(GroupByNilPart{n, p});

  std::vector<ExtremalSpec> out;
  std::vector<ComponentSpec> chain;
  std::function<void()> grow = [&] {
    if (!chain.empty()) {
      ExtremalSpec spec{chain, false};
      if (non_idempotent_count(spec) > max_non_idempotents) return;
      out.push_back(spec);
      spec.adjoin_identity = true;
      out.push_back(spec);
    }
    if (static_cast<int>(chain.size()) == max_components) return;
    for (const auto& opt : options) {
      chain.push_back(opt);
      grow();
      chain.pop_back();
    }
  };
  grow();
  return out;
}

namespace {

class TableEnumerator {
 public:
  TableEnumerator(int n, bool commutative, std::vector<int> resume)
      : n_(n), cells_count_(n * n), commutative_(commutative), resume_(std::move(resume)),
        cells_(static_cast<std::size_t>(n * n), -1) {}

  // Visits every completed table reachable from the current state.
  bool run_from(int c, bool tight, const std::function<bool(std::span<const int>)>& visit) {
    if (c == cells_count_) return visit(cells_);
    const int a = c / n_;
    const int b = c % n_;
    const bool constrained = tight && c < static_cast<int>(resume_.size());
    const int low = constrained ? std::max(0, resume_[static_cast<std::size_t>(c)]) : 0;
    if (constrained && low >= n_) return true;
    int lo = low;
    int hi = n_ - 1;
    if (commutative_ && b < a) {
      const int forced = cells_[static_cast<std::size_t>(b * n_ + a)];
      if (forced < lo) return true;
      lo = hi = forced;
    }
    for (int v = lo; v <= hi; ++v) {
      cells_[static_cast<std::size_t>(c)] = v;
      if (consistent(c) &&
          !run_from(c + 1, constrained && v == resume_[static_cast<std::size_t>(c)], visit)) {
        cells_[static_cast<std::size_t>(c)] = -1;
        return false;
      }
    }
    cells_[static_cast<std::size_t>(c)] = -1;
    return true;
  }

  // Partial tables after the first row, with their resume tightness.
  std::vector<std::pair<std::vector<int>, bool>> first_rows() {
    std::vector<std::pair<std::vector<int>, bool>> out;
    collect_rows(0, true, out);
    return out;
  }

  void load(const std::vector<int>& prefix) {
    std::fill(cells_.begin(), cells_.end(), -1);
    std::copy(prefix.begin(), prefix.end(), cells_.begin());
  }

 private:
  void collect_rows(int c, bool tight, std::vector<std::pair<std::vector<int>, bool>>& out) {
    if (c == n_) {
      out.emplace_back(std::vector<int>(cells_.begin(), cells_.begin() + n_), tight);
      return;
    }
    const bool constrained = tight && c < static_cast<int>(resume_.size());
    const int low = constrained ? std::max(0, resume_[static_cast<std::size_t>(c)]) : 0;
    for (int v = low; v < n_; ++v) {
      cells_[static_cast<std::size_t>(c)] = v;
      if (consistent(c))
        collect_rows(c + 1, constrained && v == resume_[static_cast<std::size_t>(c)], out);
    }
    cells_[static_cast<std::size_t>(c)] = -1;
  }

  int at(int x, int y, int c) const {
    const int idx = x * n_ + y;
    return idx <= c ? cells_[static_cast<std::size_t>(idx)] : -1;
  }

  bool triple_ok(int x, int y, int z, int c) const {
    const int xy = at(x, y, c);
    const int yz = at(y, z, c);
    if (xy < 0 || yz < 0) return true;
    const int left = at(xy, z, c);
    const int right = at(x, yz, c);
    return left < 0 || right < 0 || left == right;
  }

  // Checks every triple that the assignment of cell c can complete.
  bool consistent(int c) const {
    const int a = c / n_;
    const int b = c % n_;
    for (int t = 0; t < n_; ++t)
      if (!triple_ok(a, b, t, c) || !triple_ok(t, a, b, c)) return false;
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (at(x, y, c) == a && !triple_ok(x, y, b, c)) return false;
        if (at(x, y, c) == b && !triple_ok(a, x, y, c)) return false;
      }
    return true;
  }

  int n_;
  int cells_count_;
  bool commutative_;
  std::vector<int> resume_;
  std::vector<int> cells_;
};

bool is_canonical(int n, std::span<const int> cells) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> inverse(perm.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[i])] = i;
    // Relabelled table R[p(a)][p(b)] = p(T[a][b]); compare in row-major order of R.
    for (int idx = 0; idx < n * n; ++idx) {
      const int ra = inverse[static_cast<std::size_t>(idx / n)];
      const int rb = inverse[static_cast<std::size_t>(idx % n)];
      const int relabelled = perm[static_cast<std::size_t>(cells[static_cast<std::size_t>(ra * n + rb)])];
      const int original = cells[static_cast<std::size_t>(idx)];
      if (relabelled < original) return false;
      if (relabelled > original) break;
    }
  }
  return true;
}

void check_order(const EnumerateOptions& opts) {
  if (opts.order < 1) throw Error(ErrorCode::InvalidArgument, "order must be positive");
  if (opts.order > 5 || (opts.order == 5 && !opts.allow_order5))
    throw Error(ErrorCode::OrderTooLarge,
                "enumeration is capped at order 4 (order 5 needs the long-running flag)");
}

}  // namespace

std::vector<int> canonical_table(const FiniteSemigroup& s) {
  const int n = s.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best(s.cells().begin(), s.cells().end());
  std::vector<int> inverse(perm.size());
  std::vector<int> candidate(best.size());
  do {
    for (int i = 0; i < n; ++i) inverse[static_cast<std::size_t>(perm[i])] = i;
    for (int idx = 0; idx < n * n; ++idx) {
      const int ra = inverse[static_cast<std::size_t>(idx / n)];
      const int rb = inverse[static_cast<std::size_t>(idx % n)];
      candidate[static_cast<std::size_t>(idx)] = perm[static_cast<std::size_t>(s.mul(ra, rb))];
    }
    best = std::min(best, candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void for_each_semigroup(const EnumerateOptions& opts,
                        const std::function<bool(std::span<const int>)>& visit) {
  check_order(opts);
  TableEnumerator en(opts.order, opts.commutative_only, opts.resume_from);
  en.run_from(0, true, [&](std::span<const int> cells) {
    if (opts.dedup_iso && !is_canonical(opts.order, cells)) return true;
    return visit(cells);
  });
}

std::vector<FiniteSemigroup> enumerate_semigroups(const EnumerateOptions& opts) {
  check_order(opts);
  const auto rows = TableEnumerator(opts.order, opts.commutative_only, opts.resume_from).first_rows();
  std::vector<std::vector<std::vector<int>>> found(rows.size());
  parallel_for(rows.size(), opts.workers, [&](std::size_t i) {
    TableEnumerator en(opts.order, opts.commutative_only, opts.resume_from);
    en.load(rows[i].first);
    en.run_from(opts.order, rows[i].second, [&](std::span<const int> cells) {
      if (!opts.dedup_iso || is_canonical(opts.order, cells))
        found[i].emplace_back(cells.begin(), cells.end());
      return true;
    });
  });
  std::vector<FiniteSemigroup> out;
  for (const auto& part : found)
    for (const auto& cells : part) out.push_back(FiniteSemigroup::validate(opts.order, cells));
  return out;
}

}  // namespace ipf
