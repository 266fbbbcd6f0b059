#include <doctest.h>

#include "ipf/constants.hpp"
#include "ipf/construct.hpp"
#include "ipf/error.hpp"
#include "ipf/products.hpp"
#include "ipf/report.hpp"
#include "oracles.hpp"

using namespace ipf;

TEST_CASE("bound bound") {
  CHECK(non_idempotent_bound(cyclic_group(5)) == 5);
  CHECK(non_idempotent_bound(group_over_nil(2, 2)) == 3);
  CHECK(non_idempotent_bound(cyclic_group(1)) == 1);
}

TEST_CASE("constants of cyclic groups") {
  for (int n = 1; n <= 8; ++n) {
    auto z = cyclic_group(n);
    CHECK(erdos_burgess(z).value == n);
    CHECK(strong_erdos_burgess(z).value == n);
    CHECK(davenport(z).value == n);
  }
}

TEST_CASE("constants of small named semigroups") {
  CHECK(erdos_burgess(monogenic(2, 2)).value == 2);
  auto lz = left_zero(2);
  CHECK(erdos_burgess(lz).value == 1);
  CHECK(strong_erdos_burgess(lz).value == 1);
  CHECK(strong_erdos_burgess(lz).witness.empty());
  try {
    davenport(lz);
    FAIL("expected NotCommutative");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCommutative);
  }
  auto s = group_over_nil(3, 2);
  CHECK(erdos_burgess(s).value == 4);
  CHECK(davenport(s).value == 3);
  CHECK(davenport(group_over_nil(2, 2)).value == 3);
}

TEST_CASE("group over nil formulas for small parameters") {
  for (int n1 = 2; n1 <= 4; ++n1)
    for (int n2 = 2; n2 <= 4; ++n2) {
      auto s = group_over_nil(n1, n2);
      CHECK(erdos_burgess(s).value == (n1 - 1) + (n2 - 1) + 1);
      CHECK(davenport(s).value == std::max(n1, n2 + 1));
    }
}

TEST_CASE("witnesses certify the reported value") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& cells : oracle::all_tables(n, false)) {
      auto s = FiniteSemigroup::validate(n, cells);
      auto i = erdos_burgess(s);
      CHECK(i.kind == ConstantKind::ErdosBurgess);
      CHECK(i.witness.size() + 1 == static_cast<std::size_t>(i.value));
      CHECK(is_weakly_free(s, i.witness));
      auto si = strong_erdos_burgess(s);
      CHECK(si.witness.size() + 1 == static_cast<std::size_t>(si.value));
      CHECK(is_strongly_free(s, si.witness));
      if (s.commutative()) {
        auto d = davenport(s);
        CHECK(d.witness.size() + 1 == static_cast<std::size_t>(d.value));
        if (!d.witness.empty()) CHECK_FALSE(is_reducible(s, d.witness));
      }
    }
}

TEST_CASE("search agrees with brute force on every table of order at most 3") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& cells : oracle::all_tables(n, false)) {
      auto s = FiniteSemigroup::validate(n, cells);
      CAPTURE(table_id(s));
      CHECK(erdos_burgess(s).value == oracle::erdos_burgess(s));
      CHECK(strong_erdos_burgess(s).value == oracle::strong_erdos_burgess(s));
      if (s.commutative()) CHECK(davenport(s).value == oracle::davenport(s));
    }
}

TEST_CASE("davenport agrees with brute force on group over nil") {
  for (int n1 = 2; n1 <= 3; ++n1)
    for (int n2 = 2; n2 <= 3; ++n2) {
      auto s = group_over_nil(n1, n2);
      CHECK(davenport(s).value == oracle::davenport(s));
      CHECK(erdos_burgess(s).value == oracle::erdos_burgess(s));
    }
}

TEST_CASE("reducibility matches the subsequence oracle") {
  for (const auto& cells : oracle::all_tables(3, true)) {
    auto s = FiniteSemigroup::validate(3, cells);
    for (std::size_t len = 1; len <= 4; ++len)
      oracle::for_each_multiset({0, 1, 2}, len, [&](const Seq& t) {
        CHECK(is_reducible(s, t) == oracle::reducible(s, t));
      });
  }
}

TEST_CASE("reports do not depend on the worker count") {
  SearchOptions many;
  many.workers = 4;
  for (int n = 2; n <= 3; ++n)
    for (const auto& cells : oracle::all_tables(n, true)) {
      auto s = FiniteSemigroup::validate(n, cells);
      CHECK(erdos_burgess(s) == erdos_burgess(s, many));
      CHECK(strong_erdos_burgess(s) == strong_erdos_burgess(s, many));
      CHECK(davenport(s) == davenport(s, many));
    }
  auto s = group_over_nil(4, 3);
  CHECK(erdos_burgess(s) == erdos_burgess(s, many));
  CHECK(davenport(s) == davenport(s, many));
}

TEST_CASE("I never exceeds SI and both respect the bound") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& cells : oracle::all_tables(n, false)) {
      auto s = FiniteSemigroup::validate(n, cells);
      const int i = erdos_burgess(s).value;
      const int si = strong_erdos_burgess(s).value;
      CHECK(i <= si);
      CHECK(si <= non_idempotent_bound(s));
      if (s.commutative()) CHECK(i == si);
    }
}
