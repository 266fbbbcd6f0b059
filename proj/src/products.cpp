#include "ipf/products.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "ipf/error.hpp"

namespace ipf {

Element pi(const FiniteSemigroup& s, const Seq& t) {
  if (t.empty()) throw Error(ErrorCode::EmptySequence, "pi of the empty sequence");
  t.check_against(s);
  Element acc = t[0];
  for (std::size_t i = 1; i < t.size(); ++i) acc = s.mul(acc, t[i]);
  return acc;
}

namespace {

ElementSet commutative_products(const FiniteSemigroup& s, const Seq& t) {
  ElementSet acc(static_cast<std::size_t>(s.order()));
  for (Element x : t.terms()) {
    ElementSet next = right_translate(s, acc, x);
    next.insert(x);
    acc |= next;
  }
  return acc;
}

ElementSet reach_products(const FiniteSemigroup& s, const Seq& t) {
  const auto mult = t.multiplicities();
  std::vector<Element> support;
  std::vector<std::size_t> radix;
  for (auto [x, v] : mult) {
    support.push_back(x);
    radix.push_back(static_cast<std::size_t>(v) + 1);
  }
  std::vector<std::size_t> stride(support.size());
  std::size_t states = 1;
  for (std::size_t i = 0; i < support.size(); ++i) {
    stride[i] = states;
    states *= radix[i];
  }

  const std::size_t universe = static_cast<std::size_t>(s.order());
  const std::size_t words = (universe + 63) / 64;
  // reach[state] = values of the full sub-multiset `state` over all orders.
  std::vector<std::uint64_t> reach(states * words, 0);
  std::vector<std::size_t> digit(support.size(), 0);
  ElementSet total(universe);

  for (std::size_t state = 1; state < states; ++state) {
    // Increment the mixed-radix counter in step with `state`.
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < radix[i]) break;
      digit[i] = 0;
    }
    std::uint64_t* dst = &reach[state * words];
    for (std::size_t i = 0; i < support.size(); ++i) {
      if (digit[i] == 0) continue;
      const Element x = support[i];
      const std::size_t prev = state - stride[i];
      if (prev == 0) {
        dst[x >> 6] |= std::uint64_t{1} << (x & 63);
        continue;
      }
      const std::uint64_t* src = &reach[prev * words];
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = src[w];
        while (bits) {
          const auto a = static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
          const Element p = s.mul(a, x);
          dst[p >> 6] |= std::uint64_t{1} << (p & 63);
          bits &= bits - 1;
        }
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = dst[w];
      while (bits) {
        total.insert(static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }
  return total;
}

}  // namespace

ElementSet any_order_products(const FiniteSemigroup& s, const Seq& t, const ProductOptions& opts) {
  t.check_against(s);
  if (s.commutative()) return commutative_products(s, t);
  if (t.size() > opts.dp_cap)
    throw Error(ErrorCode::SequenceTooLong, "sequence of length " + std::to_string(t.size()) +
                                                " exceeds the DP cap " +
                                                std::to_string(opts.dp_cap));
  return reach_products(s, t);
}

ElementSet natural_order_products(const FiniteSemigroup& s, const Seq& t) {
  t.check_against(s);
  ElementSet acc(static_cast<std::size_t>(s.order()));
  for (Element a : t.terms()) {
    ElementSet next = right_translate(s, acc, a);
    next.insert(a);
    acc |= next;
  }
  return acc;
}

ProductSets product_sets(const FiniteSemigroup& s, const Seq& t, const ProductOptions& opts) {
  return {any_order_products(s, t, opts), natural_order_products(s, t)};
}

bool is_weakly_free(const FiniteSemigroup& s, const Seq& t, const ProductOptions& opts) {
  for (Element x : t.terms())
    if (s.contains(x) && s.is_idempotent(x)) return false;
  return !any_order_products(s, t, opts).intersects(s.idempotent_set());
}

bool is_strongly_free(const FiniteSemigroup& s, const Seq& t) {
  return !natural_order_products(s, t).intersects(s.idempotent_set());
}

std::size_t lambda(const FiniteSemigroup& s, const Seq& t, Element x, const ProductOptions& opts) {
  const ElementSet before = any_order_products(s, t, opts);
  const ElementSet after = any_order_products(s, t.with(x), opts);
  return (after - before).size();
}

}  // namespace ipf
