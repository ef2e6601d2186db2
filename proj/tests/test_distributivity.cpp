#include <doctest.h>

#include <algorithm>

#include "jslat/builtin.hpp"
#include "jslat/distributivity.hpp"
#include "jslat/pierce.hpp"
#include "jslat/search.hpp"
#include "jslat/verify.hpp"
#include "test_helpers.hpp"

using namespace jslat;
using namespace jslat::testing;

namespace {

// independent oracle: the refinement axiom checked literally, first failing
// triple in lex order
std::optional<std::array<Elem, 3>> distributivity_oracle(
    const JoinSemilattice& L) {
  const int n = L.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b0 = 0; b0 < n; ++b0)
      for (Elem b1 = 0; b1 < n; ++b1) {
        if (!L.leq(a, L.join(b0, b1))) continue;
        bool refines = false;
        for (Elem a0 = 0; a0 < n && !refines; ++a0) {
          if (!L.leq(a0, b0)) continue;
          for (Elem a1 = 0; a1 < n; ++a1)
            if (L.leq(a1, b1) && L.join(a0, a1) == a) {
              refines = true;
              break;
            }
        }
        if (!refines) return std::array<Elem, 3>{a, b0, b1};
      }
  return std::nullopt;
}

}  // namespace

TEST_SUITE_BEGIN("distributivity");

TEST_CASE("chains are distributive") {
  for (int k = 1; k <= 5; ++k)
    CHECK(is_distributive(builtin::chain(k)).distributive);
}

TEST_CASE("L_V fails with the xy <= xz v yz witness") {
  JoinSemilattice L = builtin::lv();
  DistributivityVerdict v = is_distributive(L);
  CHECK_FALSE(v.distributive);
  REQUIRE(v.witness.has_value());
  CHECK((*v.witness)[0] == id_of(L, "xy"));
  CHECK((*v.witness)[1] == id_of(L, "xz"));
  CHECK((*v.witness)[2] == id_of(L, "yz"));
}

TEST_CASE("P3 fails; the witness is fixed by the oracle") {
  JoinSemilattice L = builtin::p3();
  DistributivityVerdict v = is_distributive(L);
  CHECK_FALSE(v.distributive);
  REQUIRE(v.witness.has_value());
  auto expect = distributivity_oracle(L);
  REQUIRE(expect.has_value());
  CHECK(*v.witness == *expect);
  // frozen from the oracle: {a} <= {a} v {b} admits no refinement (P3 has
  // no element below both a and b)
  CHECK(*expect == std::array<Elem, 3>{id_of(L, "a"), id_of(L, "a"),
                                       id_of(L, "b")});
}

TEST_CASE("verdict and witness agree with the oracle everywhere") {
  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n)) {
      DistributivityVerdict v = is_distributive(L);
      auto expect = distributivity_oracle(L);
      CHECK(v.distributive == !expect.has_value());
      if (expect) {
        REQUIRE(v.witness.has_value());
        CHECK(*v.witness == *expect);
      }
    }
}

TEST_CASE("Id L equivalences") {
  IdlDistributivity b2 = idl_distributivity_equivalence(builtin::b2());
  CHECK(b2.l_distributive);
  CHECK(b2.idl_lattice_distributive);
  CHECK(b2.idl_frame_law);

  IdlDistributivity lv = idl_distributivity_equivalence(builtin::lv());
  CHECK_FALSE(lv.l_distributive);
  CHECK_FALSE(lv.idl_lattice_distributive);
  CHECK_FALSE(lv.idl_frame_law);

  IdlDistributivity c3 = idl_distributivity_equivalence(builtin::chain3());
  CHECK(c3.l_distributive);
  CHECK(c3.idl_lattice_distributive);
  CHECK(c3.idl_frame_law);

  // bottomless: the nonempty ideals are not even a lattice
  IdlDistributivity fj = idl_distributivity_equivalence(builtin::freejoin());
  CHECK_FALSE(fj.l_distributive);
  CHECK_FALSE(fj.idl_lattice_distributive);
  CHECK_FALSE(fj.idl_frame_law);

  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n))
      CHECK_NOTHROW(idl_distributivity_equivalence(L));
}

TEST_CASE("prime spectra") {
  JoinSemilattice c3 = builtin::chain3();
  PrimeSpectrum s = prime_spectrum(c3);
  REQUIRE(s.points.size() == 2);
  CHECK(s.topology.opens.size() == 3);  // Sierpinski
  CHECK(s.frame_isomorphism);

  JoinSemilattice b2 = builtin::b2();
  PrimeSpectrum sb = prime_spectrum(b2);
  REQUIRE(sb.points.size() == 2);
  CHECK(sb.topology.opens.size() == 4);
  CHECK(sb.frame_isomorphism);

  JoinSemilattice two = builtin::two();
  PrimeSpectrum st = prime_spectrum(two);
  REQUIRE(st.points.size() == 1);
  CHECK(st.topology.opens.size() == 2);
  CHECK(st.frame_isomorphism);

  try {
    prime_spectrum(builtin::lv());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_distributive);
  }
}

TEST_CASE("frame isomorphism on every distributive structure up to 6") {
  for (int n = 1; n <= 6; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n))
      if (is_distributive(L).distributive)
        CHECK(prime_spectrum(L).frame_isomorphism);
}

TEST_CASE("ideals maximal disjoint from a filter") {
  JoinSemilattice b2 = builtin::b2();
  std::vector<ElemSet> w = disjoint_max_prime(b2, b2.up(id_of(b2, "x")));
  REQUIRE(w.size() == 1);
  CHECK(w[0] == by_names(b2, {"∅", "y"}));
  CHECK(classify_subset(b2, w[0]).prime_ideal);

  JoinSemilattice c3 = builtin::chain3();
  std::vector<ElemSet> wc = disjoint_max_prime(c3, c3.up(id_of(c3, "a")));
  REQUIRE(wc.size() == 1);
  CHECK(wc[0] == bits({0}));
  CHECK(classify_subset(c3, wc[0]).prime_ideal);

  // F = {1}: the maximal ideals, all prime under distributivity
  std::vector<ElemSet> wt =
      disjoint_max_prime(b2, ElemSet::single(b2.top()));
  std::vector<ElemSet> mx = maximal_ideals(b2);
  CHECK(wt.size() == mx.size());
  for (const ElemSet& m : mx)
    CHECK(std::count(wt.begin(), wt.end(), m) == 1);

  CHECK_THROWS_AS(disjoint_max_prime(builtin::lv(),
                                     ElemSet::single(builtin::lv().top())),
                  Error);
  // not a filter
  CHECK_THROWS_AS(disjoint_max_prime(b2, by_names(b2, {"x", "y"})), Error);
}

TEST_CASE("max-not-prime witnesses") {
  JoinSemilattice L = builtin::lv();
  auto w = max_not_prime_witness(L);
  REQUIRE(w.has_value());
  CHECK(*w == by_names(L, {"xy", "∅"}));  // m_z, first in output order

  CHECK_FALSE(max_not_prime_witness(builtin::b2()).has_value());

  // P3: conjunctive, not distributive, no bottom; all maximal ideals prime
  JoinSemilattice p3 = builtin::p3();
  CHECK_FALSE(max_not_prime_witness(p3).has_value());
  for (const ElemSet& m : maximal_ideals(p3))
    CHECK(classify_subset(p3, m).prime_ideal);
}

TEST_CASE("the bottomed guarantee holds up to size 5") {
  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n)) {
      if (!L.bottom() || !is_conjunctive(L) ||
          is_distributive(L).distributive)
        continue;
      auto w = max_not_prime_witness(L);  // raises if the guarantee breaks
      CHECK(w.has_value());
    }
}

TEST_CASE("maximal implies prime under distributivity") {
  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n)) {
      if (!is_distributive(L).distributive) continue;
      for (const ElemSet& m : maximal_ideals(L))
        if (!m.empty()) CHECK(classify_subset(L, m).prime_ideal);
    }
}

TEST_CASE("finite distributive lattices are Id of their compacts") {
  CHECK(check_algebraic_frame_isomorphism(builtin::b2()));
  CHECK(check_algebraic_frame_isomorphism(builtin::chain(4)));
  for (int n = 1; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n))
      if (meet_structure(L).is_lattice() && is_distributive(L).distributive)
        CHECK(check_algebraic_frame_isomorphism(L));
}

TEST_SUITE_END();
