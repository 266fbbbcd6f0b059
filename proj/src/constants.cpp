#include "ipf/constants.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "ipf/error.hpp"
#include "ipf/parallel.hpp"
#include "ipf/products.hpp"

namespace ipf {

const char* to_string(ConstantKind kind) noexcept {
  switch (kind) {
    case ConstantKind::ErdosBurgess: return "ErdosBurgess";
    case ConstantKind::StrongErdosBurgess: return "StrongErdosBurgess";
    case ConstantKind::Davenport: return "Davenport";
  }
  return "Unknown";
}

int non_idempotent_bound(const FiniteSemigroup& s) {
  return s.order() - static_cast<int>(s.idempotent_set().size()) + 1;
}

namespace {

struct BranchResult {
  std::vector<Element> best;
  std::uint64_t nodes = 0;
};

// Longer wins; among equal lengths the lexicographically smaller wins.
bool better(const std::vector<Element>& a, const std::vector<Element>& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

std::vector<Element> non_idempotents(const FiniteSemigroup& s) {
  std::vector<Element> out;
  for (Element x = 0; x < s.order(); ++x)
    if (!s.is_idempotent(x)) out.push_back(x);
  return out;
}

// Branch i of the search starts with alphabet[i]; branches run independently
// and merge in index order, so the report does not depend on `workers`.
template <class Branch>
ConstantReport run_branches(ConstantKind kind, std::size_t branches, unsigned workers,
                            Branch&& branch) {
  std::vector<BranchResult> results(branches);
  parallel_for(branches, workers, [&](std::size_t i) { results[i] = branch(i); });
  ConstantReport report;
  report.kind = kind;
  std::vector<Element> best;
  for (const auto& r : results) {
    report.nodes_explored += r.nodes;
    if (better(r.best, best)) best = r.best;
  }
  report.value = static_cast<int>(best.size()) + 1;
  report.witness = Seq(std::move(best));
  return report;
}

class WeakSearch {
 public:
  WeakSearch(const FiniteSemigroup& s, const std::vector<Element>& alphabet,
             const ProductOptions& opts)
      : s_(s), alphabet_(alphabet), opts_(opts) {}

  BranchResult run(std::size_t first) {
    ElementSet none(static_cast<std::size_t>(s_.order()));
    extend(first, none);
    return {best_, nodes_};
  }

 private:
  void extend(std::size_t k, const ElementSet& products) {
    const Element x = alphabet_[k];
    ++nodes_;
    ElementSet next;
    prefix_.push_back(x);
    if (s_.commutative()) {
      next = right_translate(s_, products, x);
      next.insert(x);
      next |= products;
    } else {
      next = any_order_products(s_, Seq(prefix_), opts_);
    }
    if (!next.intersects(s_.idempotent_set())) {
      if (prefix_.size() > best_.size()) best_ = prefix_;
      for (std::size_t j = k; j < alphabet_.size(); ++j) extend(j, next);
    }
    prefix_.pop_back();
  }

  const FiniteSemigroup& s_;
  const std::vector<Element>& alphabet_;
  const ProductOptions& opts_;
  std::vector<Element> prefix_;
  std::vector<Element> best_;
  std::uint64_t nodes_ = 0;
};

class StrongSearch {
 public:
  StrongSearch(const FiniteSemigroup& s, const std::vector<Element>& alphabet)
      : s_(s), alphabet_(alphabet) {}

  BranchResult run(std::size_t first) {
    const Element x = alphabet_[first];
    ++nodes_;
    ElementSet start(static_cast<std::size_t>(s_.order()));
    start.insert(x);
    std::vector<Element> word{x};
    const auto& tail = best_from(start);
    word.insert(word.end(), tail.begin(), tail.end());
    return {std::move(word), nodes_};
  }

 private:
  // Lexicographically least longest continuation from closure set `closure`.
  const std::vector<Element>& best_from(const ElementSet& closure) {
    if (auto it = memo_.find(closure); it != memo_.end()) return it->second;
    std::vector<Element> best;
    for (Element a : alphabet_) {
      ++nodes_;
      ElementSet next = right_translate(s_, closure, a);
      next.insert(a);
      next |= closure;
      if (next.intersects(s_.idempotent_set())) continue;
      const auto& tail = best_from(next);
      if (tail.size() + 1 > best.size()) {
        best.assign(1, a);
        best.insert(best.end(), tail.begin(), tail.end());
      }
    }
    return memo_.emplace(closure, std::move(best)).first->second;
  }

  const FiniteSemigroup& s_;
  const std::vector<Element>& alphabet_;
  std::unordered_map<ElementSet, std::vector<Element>, ElementSetHash> memo_;
  std::uint64_t nodes_ = 0;
};

class DavenportSearch {
 public:
  explicit DavenportSearch(const FiniteSemigroup& s) : s_(s) {}

  BranchResult run(Element first) {
    const std::size_t n = static_cast<std::size_t>(s_.order());
    ElementSet all_products(n);
    all_products.insert(first);
    ElementSet proper(n);
    if (s_.identity()) proper.insert(*s_.identity());
    ++nodes_;
    // In a monoid the identity alone is reducible, and so is everything containing it.
    if (proper.contains(first)) return {best_, nodes_};
    prefix_.push_back(first);
    best_ = prefix_;
    for (Element y = first; y < s_.order(); ++y) extend(y, all_products, proper, first);
    return {best_, nodes_};
  }

 private:
  // all_products = Pi(T), proper = products of proper subsequences of T.
  void extend(Element y, const ElementSet& all_products, const ElementSet& proper,
              Element product) {
    ++nodes_;
    const Element next_product = s_.mul(product, y);
    ElementSet next_proper = right_translate(s_, proper, y);
    next_proper |= all_products;
    next_proper.insert(y);
    if (s_.identity()) next_proper.insert(*s_.identity());
    if (next_proper.contains(next_product)) return;
    ElementSet next_all = right_translate(s_, all_products, y);
    next_all |= all_products;
    next_all.insert(y);
    prefix_.push_back(y);
    if (prefix_.size() > static_cast<std::size_t>(s_.order()))
      throw Error(ErrorCode::Internal, "irreducible sequence longer than |S|");
    if (prefix_.size() > best_.size()) best_ = prefix_;
    for (Element z = y; z < s_.order(); ++z) extend(z, next_all, next_proper, next_product);
    prefix_.pop_back();
  }

  const FiniteSemigroup& s_;
  std::vector<Element> prefix_;
  std::vector<Element> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ConstantReport erdos_burgess(const FiniteSemigroup& s, const SearchOptions& opts) {
  const auto alphabet = non_idempotents(s);
  const ProductOptions product_opts{opts.dp_cap};
  return run_branches(ConstantKind::ErdosBurgess, alphabet.size(), opts.workers,
                      [&](std::size_t i) { return WeakSearch(s, alphabet, product_opts).run(i); });
}

ConstantReport strong_erdos_burgess(const FiniteSemigroup& s, const SearchOptions& opts) {
  const auto alphabet = non_idempotents(s);
  return run_branches(ConstantKind::StrongErdosBurgess, alphabet.size(), opts.workers,
                      [&](std::size_t i) { return StrongSearch(s, alphabet).run(i); });
}

ConstantReport davenport(const FiniteSemigroup& s, const SearchOptions& opts) {
  if (!s.commutative())
    throw Error(ErrorCode::NotCommutative, "the Davenport constant needs a commutative semigroup");
  return run_branches(ConstantKind::Davenport, static_cast<std::size_t>(s.order()), opts.workers,
                      [&](std::size_t i) {
                        return DavenportSearch(s).run(static_cast<Element>(i));
                      });
}

bool is_reducible(const FiniteSemigroup& s, const Seq& t) {
  if (t.empty()) return false;
  const Element total = pi(s, t);
  const std::size_t len = t.size();
  if (len > 24) throw Error(ErrorCode::SequenceTooLong, "is_reducible enumerates subsets");
  if (s.identity() && *s.identity() == total) return true;
  const std::uint64_t full = (std::uint64_t{1} << len) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    Element acc = -1;
    for (std::size_t i = 0; i < len; ++i) {
      if (!((mask >> i) & 1U)) continue;
      acc = acc < 0 ? t[i] : s.mul(acc, t[i]);
    }
    if (acc == total) return true;
  }
  return false;
}

}  // namespace ipf
