#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sctree/preference.hpp"
#include "sctree/tree_catalog.hpp"

using namespace sctree;

namespace {

const std::vector<Alternative> kAbcd{"a", "b", "c", "d"};

Preference pref(std::vector<Alternative> ranking, const std::vector<Alternative>& alphabet) {
  return Preference::make(std::move(ranking), alphabet);
}

}  // namespace

TEST_CASE("make_preference accepts permutations and rejects everything else") {
  CHECK_NOTHROW(pref({"d", "b", "c", "a"}, kAbcd));

  auto kind_of = [](auto&& builder) {
    try {
      builder();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of([] { pref({"a", "a", "b"}, {"a", "b", "c"}); }) == ErrorKind::NotAPermutation);
  CHECK(kind_of([] { pref({"a", "b"}, {"a", "b", "c"}); }) == ErrorKind::NotAPermutation);
  CHECK(kind_of([] { pref({"a", "b", "q"}, {"a", "b", "c"}); }) == ErrorKind::NotAPermutation);
}

TEST_CASE("prefers is position comparison") {
  Preference p = pref({"d", "b", "c", "a"}, kAbcd);
  CHECK(p.prefers("d", "a"));
  CHECK_FALSE(p.prefers("c", "b"));
  CHECK_THROWS_AS(p.prefers("a", "a"), Error);
  CHECK_THROWS_AS(p.prefers("a", "q"), Error);

  // strict total order: asymmetric, connected, transitive
  for (const auto& a : kAbcd) {
    for (const auto& b : kAbcd) {
      if (a == b) continue;
      CHECK(p.prefers(a, b) != p.prefers(b, a));
      for (const auto& c : kAbcd) {
        if (c == a || c == b) continue;
        if (p.prefers(a, b) && p.prefers(b, c)) CHECK(p.prefers(a, c));
      }
    }
  }
}

TEST_CASE("top and profile tops") {
  Preference p = pref({"d", "b", "c", "a"}, kAbcd);
  Preference q = pref({"c", "b", "d", "a"}, kAbcd);
  CHECK(p.top() == "d");
  CHECK(Profile::make({p, q}).tops() == NodeSet::of({"c", "d"}));
  CHECK(Profile::make({p, p, p}).tops() == NodeSet::of({"d"}));
  CHECK(Profile::make({p, q}).tops_without(0) == NodeSet::of({"c"}));
}

TEST_CASE("profile construction rejects mixed alphabets and emptiness") {
  Preference p = pref({"d", "b", "c", "a"}, kAbcd);
  Preference small = pref({"a", "b", "c"}, {"a", "b", "c"});
  CHECK_THROWS_AS(Profile::make({p, small}), Error);
  CHECK_THROWS_AS(Profile::make({}), Error);
}

TEST_CASE("single-peakedness on the fixtures") {
  Tree line4 = line_tree(4);
  Tree star = star_fixture();

  CHECK(is_single_peaked(pref({"d", "c", "b", "a"}, kAbcd), line4));
  CHECK(is_single_peaked(pref({"x", "c", "y", "z"}, {"c", "x", "y", "z"}), star));

  auto violation = single_peaked_violation(pref({"d", "b", "c", "a"}, kAbcd), line4);
  REQUIRE(violation.has_value());
  // c sits on the path from peak d to b, yet b is ranked above c
  CHECK(violation->first == "b");
  CHECK(violation->second == "c");

  CHECK_THROWS_AS(is_single_peaked(pref({"a", "b", "c"}, {"a", "b", "c"}), line4), Error);
}

TEST_CASE("single-peakedness agrees with both independent oracles up to 6 nodes") {
  for (const auto& [id, tree] : non_isomorphic_trees(3, 6)) {
    for (const auto& p : oracle::all_permutations(tree.nodes())) {
      bool mine = is_single_peaked(p, tree);
      CHECK(mine == oracle::pair_scan_single_peaked(p, tree));
      CHECK(mine == oracle::connected_prefixes(p, tree));
    }
  }
}

TEST_CASE("enumerate_single_peaked on the 3-line lists exactly the known four") {
  Domain domain = enumerate_single_peaked(line_tree(3));
  REQUIRE(domain.size() == 4);
  CHECK(domain.at(0).ranking() == std::vector<Alternative>{"a", "b", "c"});
  CHECK(domain.at(1).ranking() == std::vector<Alternative>{"b", "a", "c"});
  CHECK(domain.at(2).ranking() == std::vector<Alternative>{"b", "c", "a"});
  CHECK(domain.at(3).ranking() == std::vector<Alternative>{"c", "b", "a"});
}

TEST_CASE("line count law: |P(line_m)| = 2^(m-1)") {
  for (int m : {3, 4, 5}) {
    CHECK(enumerate_single_peaked(line_tree(m)).size() == (1u << (m - 1)));
  }
}

TEST_CASE("enumeration equals the full-permutation filter and is sorted") {
  for (const auto& [id, tree] : non_isomorphic_trees(3, 6)) {
    Domain enumerated = enumerate_single_peaked(tree);
    std::vector<Preference> filtered;
    for (const auto& p : oracle::all_permutations(tree.nodes())) {
      if (oracle::pair_scan_single_peaked(p, tree)) filtered.push_back(p);
    }
    REQUIRE(enumerated.size() == filtered.size());
    for (std::size_t i = 0; i < filtered.size(); ++i) {
      CHECK(enumerated.at(i) == filtered[i]);  // both lexicographic
    }
    CHECK(is_minimally_rich(enumerated));
  }
}

TEST_CASE("star domain contains every preference topped by the center") {
  Tree star = star_fixture();
  Domain domain = enumerate_single_peaked(star);
  std::size_t center_topped = 0;
  for (const auto& p : oracle::all_permutations(star.nodes())) {
    if (p.top() == "c") {
      ++center_topped;
      CHECK(std::find(domain.preferences().begin(), domain.preferences().end(), p) !=
            domain.preferences().end());
    }
  }
  CHECK(center_topped == 6);
  CHECK(domain.size() == 12);
}

TEST_CASE("is_minimally_rich") {
  std::vector<Alternative> abc{"a", "b", "c"};
  Domain partial = Domain::make(abc, {pref({"a", "b", "c"}, abc), pref({"b", "a", "c"}, abc)});
  CHECK_FALSE(is_minimally_rich(partial));
  Domain single = Domain::make(abc, {pref({"a", "b", "c"}, abc)});
  CHECK_FALSE(is_minimally_rich(single));
}

TEST_CASE("domains reject duplicates and alien preferences") {
  std::vector<Alternative> abc{"a", "b", "c"};
  auto kind_of = [](auto&& builder) {
    try {
      builder();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ParseError;
  };
  CHECK(kind_of([&] {
          Domain::make(abc, {pref({"a", "b", "c"}, abc), pref({"a", "b", "c"}, abc)});
        }) == ErrorKind::DuplicatePreference);
  CHECK(kind_of([&] { Domain::make(abc, {pref({"d", "b", "c", "a"}, kAbcd)}); }) ==
        ErrorKind::AlphabetMismatch);
  CHECK(kind_of([&] { Domain::make(abc, {}); }) == ErrorKind::EmptySet);
}

TEST_CASE("restrict_domain keeps relative order on the attained tops") {
  Domain d = Domain::make(kAbcd, {pref({"a", "c", "b", "d"}, kAbcd),
                                  pref({"b", "c", "a", "d"}, kAbcd),
                                  pref({"c", "a", "b", "d"}, kAbcd)});
  RestrictedDomain restricted = restrict_domain(d);
  CHECK(restricted.attained_tops == std::vector<Alternative>{"a", "b", "c"});
  REQUIRE(restricted.domain.size() == 3);
  CHECK(restricted.domain.at(0).ranking() == std::vector<Alternative>{"a", "c", "b"});
  CHECK(restricted.domain.at(1).ranking() == std::vector<Alternative>{"b", "c", "a"});
  CHECK(restricted.domain.at(2).ranking() == std::vector<Alternative>{"c", "a", "b"});
}

TEST_CASE("restrict_domain of a minimally rich domain changes nothing") {
  Domain d = enumerate_single_peaked(line_tree(4));
  RestrictedDomain restricted = restrict_domain(d);
  CHECK(restricted.attained_tops == d.alternatives());
  CHECK(restricted.domain == d);
}

TEST_CASE("restrict_domain deduplicates and rejects tiny top sets") {
  // two preferences that agree on {a,b,c} once d is dropped
  Domain d = Domain::make(kAbcd, {pref({"a", "b", "d", "c"}, kAbcd),
                                  pref({"a", "d", "b", "c"}, kAbcd),
                                  pref({"b", "a", "c", "d"}, kAbcd),
                                  pref({"c", "a", "b", "d"}, kAbcd)});
  RestrictedDomain restricted = restrict_domain(d);
  CHECK(restricted.domain.size() == 3);  // the first two collapse

  Domain two_tops = Domain::make(kAbcd, {pref({"a", "b", "c", "d"}, kAbcd),
                                         pref({"b", "a", "c", "d"}, kAbcd)});
  CHECK_THROWS_AS(restrict_domain(two_tops), Error);
}

TEST_CASE("restricted preferences evaluate the same as freshly built ones") {
  Domain d = Domain::make(kAbcd, {pref({"a", "c", "b", "d"}, kAbcd),
                                  pref({"b", "c", "a", "d"}, kAbcd),
                                  pref({"c", "a", "b", "d"}, kAbcd)});
  RestrictedDomain restricted = restrict_domain(d);
  Tree prime_tree = line_tree(3);  // a-b-c on X'
  for (const auto& p : restricted.domain.preferences()) {
    Preference rebuilt = Preference::make(p.ranking(), restricted.attained_tops);
    CHECK(is_single_peaked(p, prime_tree) == is_single_peaked(rebuilt, prime_tree));
    CHECK(is_single_peaked(p, prime_tree) == oracle::pair_scan_single_peaked(p, prime_tree));
  }
}
