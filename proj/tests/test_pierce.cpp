#include <doctest.h>

#include <algorithm>
#include <functional>

#include "jslat/builtin.hpp"
#include "jslat/pierce.hpp"
#include "jslat/search.hpp"
#include "jslat/verify.hpp"
#include "test_helpers.hpp"

using namespace jslat;
using namespace jslat::testing;

namespace {

// independent oracle: every partition of {0..n-1} via block assignment,
// filtered by the raw congruence definition
std::vector<std::vector<int>> partitions_bruteforce(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cls(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxc) {
    if (i == n) {
      out.push_back(cls);
      return;
    }
    for (int c = 0; c <= maxc + 1; ++c) {
      cls[i] = c;
      rec(i + 1, std::max(maxc, c));
    }
  };
  rec(0, -1);
  return out;
}

bool compatible(const JoinSemilattice& L, const std::vector<int>& cls) {
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      if (cls[a] != cls[b]) continue;
      for (Elem c = 0; c < L.size(); ++c)
        if (cls[L.join(a, c)] != cls[L.join(b, c)]) return false;
    }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("pierce");

TEST_CASE("supercomplement sets") {
  JoinSemilattice L = builtin::lv();
  const ElemSet one = ElemSet::single(L.top());
  CHECK(supercomplements(L, one, id_of(L, "xy")) ==
        by_names(L, {"xyz", "xz", "yz"}));
  CHECK(supercomplements(L, one, id_of(L, "∅")) == by_names(L, {"xyz"}));
  CHECK(supercomplements(L, one, L.top()) == L.all());

  // (1:{x}) u (1:{y}) misses ∅ while (1:{x,y}) contains it
  JoinSemilattice b2 = builtin::b2();
  const ElemSet top = ElemSet::single(b2.top());
  ElemSet ux = supercomplements(b2, top, id_of(b2, "x"));
  ElemSet uy = supercomplements(b2, top, id_of(b2, "y"));
  CHECK_FALSE((ux | uy).test(id_of(b2, "∅")));
  CHECK(supercomplements(b2, top, b2.top()).test(id_of(b2, "∅")));
}

TEST_CASE("supercomplements of an up-set are up-sets") {
  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n))
      for (const ElemSet& U : enumerate_upsets(L))
        for (Elem a = 0; a < L.size(); ++a)
          CHECK(classify_subset(L, supercomplements(L, U, a)).upset);
}

TEST_CASE("Pierce congruences on the 3-chain") {
  JoinSemilattice c3 = builtin::chain3();
  Congruence r1 = pierce_congruence(c3, ElemSet::single(c3.top()));
  CHECK(r1.partition_string(c3) == "{0,a}|{1}");
  Congruence ra = pierce_congruence(c3, c3.up(id_of(c3, "a")));
  CHECK(ra.partition_string(c3) == "{0}|{a,1}");
}

TEST_CASE("R^1 on L_V is equality") {
  JoinSemilattice L = builtin::lv();
  Congruence r = pierce_congruence(L, ElemSet::single(L.top()));
  CHECK(r.num_classes() == L.size());
}

TEST_CASE("quotients") {
  JoinSemilattice c3 = builtin::chain3();
  QuotientResult q =
      quotient(c3, pierce_congruence(c3, c3.up(id_of(c3, "a"))));
  CHECK(q.quotient.size() == 2);
  CHECK(isomorphic_bruteforce(q.quotient, builtin::two()));

  QuotientResult qe = quotient(c3, Congruence::equality(c3));
  CHECK(isomorphic_bruteforce(qe.quotient, c3));

  QuotientResult qf = quotient(c3, Congruence::full(c3));
  CHECK(qf.quotient.size() == 1);
}

TEST_CASE("non-congruences are rejected with a witness") {
  JoinSemilattice c3 = builtin::chain3();
  // {0,1}|{a} is not join-compatible
  Congruence bad = Congruence::from_class_of(c3, {0, 1, 0});
  try {
    quotient(c3, bad);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_congruence);
  }
}

TEST_CASE("congruence enumeration matches the brute-force filter") {
  CHECK(enumerate_congruences(builtin::two()).size() == 2);
  JoinSemilattice c3 = builtin::chain3();
  std::vector<Congruence> cs = enumerate_congruences(c3);
  CHECK(cs.size() == 4);
  for (const Congruence& r : cs)
    CHECK(r.partition_string(c3) != "{0,1}|{a}");

  for (const auto& [name, L] : builtin::corpus()) {
    if (L.size() > 6) continue;
    long expected = 0;
    for (const auto& cls : partitions_bruteforce(L.size()))
      if (compatible(L, cls)) ++expected;
    CHECK(static_cast<long>(enumerate_congruences(L).size()) == expected);
  }
}

TEST_CASE("congruence enumeration is guarded") {
  std::vector<std::string> names;
  std::vector<std::vector<Elem>> table(9, std::vector<Elem>(9));
  for (int i = 0; i < 9; ++i) {
    names.push_back("e" + std::to_string(i));
    for (int j = 0; j < 9; ++j)
      table[i][j] = static_cast<Elem>(std::max(i, j));
  }
  JoinSemilattice c9 = JoinSemilattice::from_join_table(names, table);
  CHECK_THROWS_AS(enumerate_congruences(c9), Error);
}

TEST_CASE("conjunctivity profiles") {
  CHECK(conjunctivity_profile(builtin::two()).overall);
  CHECK(conjunctivity_profile(builtin::lv()).overall);
  CHECK(conjunctivity_profile(builtin::p3()).overall);
  CHECK(conjunctivity_profile(builtin::b2()).overall);
  CHECK(conjunctivity_profile(builtin::freejoin()).overall);
  // the sub-semilattice {(0,0),(1,0),(1,1)} of 2x2, i.e. the 3-chain
  CHECK_FALSE(conjunctivity_profile(builtin::chain3()).overall);
  // singletons are conjunctive
  JoinSemilattice one = JoinSemilattice::from_join_table({"1"}, {{0}});
  CHECK(conjunctivity_profile(one).overall);
}

TEST_CASE("products of conjunctive structures are conjunctive") {
  // 2 x 2 built literally as a join table
  JoinSemilattice prod = JoinSemilattice::from_join_table(
      {"00", "01", "10", "11"},
      {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}});
  CHECK(conjunctivity_profile(prod).overall);
}

TEST_CASE("ideal supercomplements") {
  JoinSemilattice c3 = builtin::chain3();
  std::vector<ElemSet> w = ideal_supercomplements(c3, id_of(c3, "a"));
  REQUIRE(w.size() == 1);
  CHECK(w[0] == c3.all());

  JoinSemilattice L = builtin::lv();
  std::vector<ElemSet> wl = ideal_supercomplements(L, id_of(L, "xy"));
  REQUIRE(wl.size() == 3);
  CHECK(std::count(wl.begin(), wl.end(), by_names(L, {"xz", "∅"})) == 1);
  CHECK(std::count(wl.begin(), wl.end(), by_names(L, {"yz", "∅"})) == 1);
  CHECK(std::count(wl.begin(), wl.end(), L.all()) == 1);

  // the top absorbs: every ideal is an ideal supercomplement of 1
  for (const auto& [name, S] : builtin::corpus())
    CHECK(ideal_supercomplements(S, S.top()).size() == S.size() + 1);
}

TEST_CASE("ideal conjunctivity agrees with conjunctivity") {
  CHECK(is_ideally_conjunctive(builtin::lv()).overall);
  CHECK(is_ideally_conjunctive(builtin::two()).overall);
  CHECK_FALSE(is_ideally_conjunctive(builtin::chain3()).overall);
  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n))
      CHECK(is_ideally_conjunctive(L).overall == is_conjunctive(L));
}

TEST_CASE("pierce theorem suite passes on every structure up to size 5") {
  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n)) {
      for (const CheckRow& row : verify_pierce(L)) {
        INFO(row.check << " on a " << n << "-element structure: "
                       << row.detail);
        CHECK((row.pass || row.skipped));
      }
    }
}

TEST_SUITE_END();
