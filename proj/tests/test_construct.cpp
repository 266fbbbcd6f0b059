#include <doctest.h>

#include <array>
#include <map>

#include "ipf/constants.hpp"
#include "ipf/construct.hpp"
#include "ipf/error.hpp"
#include "ipf/products.hpp"
#include "ipf/structure.hpp"
#include "oracles.hpp"

using namespace ipf;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ipf::Error");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("basic families") {
  CHECK(cyclic_group(1).order() == 1);
  auto z3 = cyclic_group(3);
  CHECK(z3 == FiniteSemigroup::validate({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}));
  auto cd = cyclic_data(z3, 0);
  CHECK(cd.index == 1);
  CHECK(cd.period == 3);

  CHECK(cyclic_nil(1).order() == 1);
  CHECK(cyclic_nil(3) == FiniteSemigroup::validate({{1, 2, 2}, {2, 2, 2}, {2, 2, 2}}));
  CHECK(cyclic_nil(3).zero() == 2);

  auto lz = left_zero(3);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) CHECK(lz.mul(a, b) == a);

  CHECK(code_of([] { cyclic_group(0); }) == ErrorCode::InvalidParameters);
  CHECK(code_of([] { cyclic_nil(0); }) == ErrorCode::InvalidParameters);
  CHECK(code_of([] { left_zero(0); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("ideal extension by a nil part") {
  // {x1, e, g}: x1^2 = e, x1 acts trivially on the group.
  auto s = ideal_extension_trivial(2, 2);
  CHECK(s == FiniteSemigroup::validate({{2, 1, 2}, {1, 2, 1}, {2, 1, 2}}));
  CHECK(archimedean_decomposition(s).components.size() == 1);
  auto cd = cyclic_data(s, 0);
  CHECK(cd.index == 2);
  CHECK(cd.period == 1);
  for (int n = 2; n <= 5; ++n)
    for (int p = 2; p <= 5; ++p) {
      auto t = ideal_extension_trivial(n, p);
      CHECK(t.order() == n - 1 + p);
      CHECK(t.idempotent_set().size() == 1);
      CHECK(unique_cycle_idempotent(t, 0) == t.order() - 1);
    }
  CHECK(code_of([] { ideal_extension_trivial(1, 2); }) == ErrorCode::InvalidParameters);
  CHECK(code_of([] { ideal_extension_trivial(2, 1); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("chain gluing") {
  for (int n1 = 2; n1 <= 4; ++n1)
    for (int n2 = 2; n2 <= 4; ++n2) {
      std::array parts{cyclic_group(n1), cyclic_nil(n2)};
      auto s = chain_glue(parts);
      CHECK(s == group_over_nil(n1, n2));
      CHECK(s.order() == n1 + n2);
      CHECK(s.idempotent_set().size() == 2);
      CHECK(s.mul(0, n1) == n1);
      CHECK(s.mul(n1, 0) == n1);
    }
  std::array one{monogenic(3, 2)};
  CHECK(chain_glue(one) == monogenic(3, 2));

  std::array noncomm{left_zero(2)};
  CHECK(code_of([&] { chain_glue(noncomm); }) == ErrorCode::NotCommutative);
  CHECK(code_of([] { chain_glue(std::span<const FiniteSemigroup>{}); }) ==
        ErrorCode::InvalidParameters);
  CHECK(code_of([] { group_over_nil(1, 2); }) == ErrorCode::InvalidParameters);
  CHECK(code_of([] { group_over_nil(2, 1); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("gluing cyclic groups adds their contributions") {
  for (int p1 = 2; p1 <= 4; ++p1)
    for (int p2 = 2; p2 <= 4; ++p2) {
      std::array two{cyclic_group(p1), cyclic_group(p2)};
      CHECK(erdos_burgess(chain_glue(two)).value == (p1 - 1) + (p2 - 1) + 1);
      for (int p3 = 2; p3 <= 3; ++p3) {
        std::array three{cyclic_group(p1), cyclic_group(p2), cyclic_group(p3)};
        CHECK(erdos_burgess(chain_glue(three)).value == (p1 - 1) + (p2 - 1) + (p3 - 1) + 1);
      }
    }
}

TEST_CASE("extremal specs") {
  ExtremalSpec spec{{MonogenicPart{3, 2}, GroupByNilPart{2, 3}}, true};
  CHECK_NOTHROW(validate_spec(spec));
  CHECK(non_idempotent_count(spec) == 3 + 3);
  CHECK(to_string(spec) == "mono:3:2 gbn:2:3 +identity");
  std::vector<std::string> tokens{"mono:3:2", "gbn:2:3"};
  CHECK(parse_extremal_spec(tokens, true) == spec);

  CHECK(code_of([] { validate_spec({{MonogenicPart{2, 2}}, false}); }) ==
        ErrorCode::InvalidParameters);
  CHECK(code_of([] { validate_spec({{}, false}); }) == ErrorCode::InvalidParameters);
  CHECK(code_of([] { validate_spec({{GroupByNilPart{1, 2}}, false}); }) ==
        ErrorCode::InvalidParameters);
  std::vector<std::string> bad{"mono:3"};
  CHECK(code_of([&] { parse_extremal_spec(bad, false); }) == ErrorCode::InvalidParameters);
  std::vector<std::string> unknown{"cyc:3:1"};
  CHECK(code_of([&] { parse_extremal_spec(unknown, false); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("extremal pairs") {
  for (int n = 2; n <= 6; ++n) {
    auto pair = extremal_pair({{MonogenicPart{1, n}}, false});
    CHECK(pair.semigroup == cyclic_group(n));
    CHECK(pair.sequence == Seq(std::vector<Element>(n - 1, 0)));
  }
  auto m = extremal_pair({{MonogenicPart{3, 2}}, false});
  CHECK(m.semigroup == monogenic(3, 2));
  CHECK(m.sequence == Seq{0, 0, 0});
  CHECK(any_order_products(m.semigroup, m.sequence).elements() == std::vector<Element>{0, 1, 2});

  for (const auto& spec : extremal_specs_up_to(2, 6, 3)) {
    CAPTURE(to_string(spec));
    auto pair = extremal_pair(spec);
    const auto k = static_cast<std::size_t>(pair.semigroup.order()) -
                   pair.semigroup.idempotent_set().size();
    CHECK(pair.sequence.size() == k);
    CHECK(static_cast<int>(k) == non_idempotent_count(spec));
    CHECK(is_weakly_free(pair.semigroup, pair.sequence));
    CHECK(extremal_structure_check(pair.semigroup, pair.sequence).pass);
    CHECK(pair.semigroup.commutative());
    if (spec.adjoin_identity) CHECK(pair.semigroup.identity().has_value());
  }
}

TEST_CASE("spec family enumeration") {
  auto specs = extremal_specs_up_to(3, 10, 4);
  CHECK(!specs.empty());
  std::set<std::string> names;
  for (const auto& spec : specs) {
    CHECK(spec.chain.size() >= 1);
    CHECK(spec.chain.size() <= 3);
    CHECK(non_idempotent_count(spec) <= 10);
    CHECK_NOTHROW(validate_spec(spec));
    names.insert(to_string(spec));
  }
  CHECK(names.size() == specs.size());
  CHECK(names.count("mono:1:1") == 1);
  CHECK(names.count("mono:1:1 +identity") == 1);
  CHECK(names.count("gbn:4:4") == 1);
  CHECK(names.count("mono:5:2 gbn:2:2") == 1);
}

TEST_CASE("enumeration matches the naive table filter") {
  for (int n = 1; n <= 3; ++n)
    for (bool comm : {false, true}) {
      EnumerateOptions eo;
      eo.order = n;
      eo.commutative_only = comm;
      auto got = enumerate_semigroups(eo);
      auto expected = oracle::all_tables(n, comm);
      REQUIRE(got.size() == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        auto cells = got[i].cells();
        CHECK(std::vector<int>(cells.begin(), cells.end()) == expected[i]);
      }
    }
}

TEST_CASE("enumeration counts") {
  const std::map<int, std::array<std::size_t, 3>> counts{
      {1, {1, 1, 1}}, {2, {8, 5, 3}}, {3, {113, 24, 12}}, {4, {3492, 188, 58}}};
  for (const auto& [n, c] : counts) {
    EnumerateOptions eo;
    eo.order = n;
    CHECK(enumerate_semigroups(eo).size() == c[0]);
    eo.dedup_iso = true;
    CHECK(enumerate_semigroups(eo).size() == c[1]);
    eo.commutative_only = true;
    CHECK(enumerate_semigroups(eo).size() == c[2]);
  }
}

TEST_CASE("enumeration options") {
  EnumerateOptions eo;
  eo.order = 5;
  CHECK(code_of([&] { enumerate_semigroups(eo); }) == ErrorCode::OrderTooLarge);
  eo.order = 6;
  eo.allow_order5 = true;
  CHECK(code_of([&] { enumerate_semigroups(eo); }) == ErrorCode::OrderTooLarge);
  eo.order = 0;
  CHECK_THROWS_AS(enumerate_semigroups(eo), Error);

  EnumerateOptions full;
  full.order = 3;
  auto all = enumerate_semigroups(full);
  EnumerateOptions resumed = full;
  resumed.resume_from = {0, 1, 2};
  auto tail = enumerate_semigroups(resumed);
  std::size_t first = 0;
  while (first < all.size()) {
    auto c = all[first].cells();
    if (std::vector<int>(c.begin(), c.begin() + 3) >= std::vector<int>{0, 1, 2}) break;
    ++first;
  }
  REQUIRE(tail.size() == all.size() - first);
  for (std::size_t i = 0; i < tail.size(); ++i) CHECK(tail[i] == all[first + i]);

  EnumerateOptions parallel = full;
  parallel.workers = 4;
  CHECK(enumerate_semigroups(parallel) == all);

  std::size_t visited = 0;
  for_each_semigroup(full, [&](std::span<const int>) { return ++visited < 10; });
  CHECK(visited == 10);
}

TEST_CASE("canonical tables are invariant under relabeling") {
  EnumerateOptions eo;
  eo.order = 3;
  for (const auto& s : enumerate_semigroups(eo)) {
    const std::vector<int> perm{2, 0, 1};
    std::vector<int> cells(9);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) cells[perm[a] * 3 + perm[b]] = perm[s.mul(a, b)];
    CHECK(canonical_table(FiniteSemigroup::validate(3, cells)) == canonical_table(s));
  }
}
