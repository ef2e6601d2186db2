#include <doctest.h>

#include <algorithm>
#include <set>

#include "jslat/builtin.hpp"
#include "jslat/distributivity.hpp"
#include "jslat/dlat.hpp"
#include "jslat/search.hpp"
#include "jslat/verify.hpp"
#include "test_helpers.hpp"

using namespace jslat;
using namespace jslat::testing;

TEST_SUITE_BEGIN("dlat");

TEST_CASE("dL of P3 has 18 elements") {
  GeneratedLattice dl = free_dlat(builtin::p3());
  CHECK(dl.size() == 18);
}

TEST_CASE("dL of the 2-chain") {
  JoinSemilattice two = builtin::two();
  GeneratedLattice dl = free_dlat(two);
  REQUIRE(dl.size() == 2);
  CHECK(dl.elements[dl.generator_of[0]] == ElemSet{});
  CHECK(dl.elements[dl.generator_of[1]] == bits({0}));
}

TEST_CASE("dL of the free-join structure") {
  JoinSemilattice F = builtin::freejoin();
  GeneratedLattice dl = free_dlat(F);
  CHECK(dl.size() == 4);
  for (Elem b = 0; b < F.size(); ++b) {
    // d(b) = L minus {1, b}
    ElemSet expect = F.all();
    expect.reset(F.top());
    expect.reset(b);
    CHECK(dl.elements[dl.generator_of[b]] == expect);
  }
}

TEST_CASE("generators preserve joins") {
  for (const auto& [name, L] : builtin::corpus()) {
    GeneratedLattice dl = free_dlat(L);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b)
        CHECK((dl.elements[dl.generator_of[a]] |
               dl.elements[dl.generator_of[b]]) ==
              dl.elements[dl.generator_of[L.join(a, b)]]);
  }
}

TEST_CASE("wL cardinalities") {
  CHECK(wl_lattice(builtin::p3()).size() == 8);
  CHECK(wl_lattice(builtin::two()).size() == 2);
  CHECK(wl_lattice(builtin::freejoin()).size() == 4);
  CHECK_THROWS_AS(wl_lattice(builtin::chain3()), Error);
}

TEST_CASE("w-bar on P3 is a proper surjection 18 -> 8") {
  OverlineW w = overline_w(builtin::p3());
  CHECK(w.dl.size() == 18);
  CHECK(w.wl.size() == 8);
  CHECK(w.surjective);
  CHECK_FALSE(w.injective);
  CHECK(w.kernel_classes.size() == 8);
}

TEST_CASE("w-bar is a bijection on the 2-chain and the free join") {
  CHECK(overline_w(builtin::two()).injective);
  CHECK(overline_w(builtin::freejoin()).injective);
}

TEST_CASE("w-bar preserves the lattice operations") {
  for (const auto& [name, L] : builtin::corpus()) {
    if (!is_conjunctive(L) || L.size() < 2) continue;
    OverlineW w = overline_w(L);
    for (int i = 0; i < w.dl.size(); ++i)
      for (int j = 0; j < w.dl.size(); ++j) {
        int ju = w.dl.index_of(w.dl.elements[i] | w.dl.elements[j]);
        int mu = w.dl.index_of(w.dl.elements[i] & w.dl.elements[j]);
        REQUIRE(ju >= 0);
        REQUIRE(mu >= 0);
        CHECK(w.wl.elements[w.image[ju]] ==
              (w.wl.elements[w.image[i]] | w.wl.elements[w.image[j]]));
        CHECK(w.wl.elements[w.image[mu]] ==
              (w.wl.elements[w.image[i]] & w.wl.elements[w.image[j]]));
      }
  }
}

TEST_CASE("dL/R^1 is isomorphic to wL with kernel(w-bar) = R^1") {
  DlatR1Result p3 = dlat_r1_isomorphism(builtin::p3());
  CHECK(p3.dl_size == 18);
  CHECK(p3.wl_size == 8);
  CHECK(p3.r1_classes == 8);
  CHECK(p3.kernel_is_r1);
  CHECK(p3.isomorphism);

  DlatR1Result two = dlat_r1_isomorphism(builtin::two());
  CHECK(two.kernel_is_r1);
  CHECK(two.isomorphism);

  DlatR1Result lv = dlat_r1_isomorphism(builtin::lv());
  CHECK(lv.kernel_is_r1);
  CHECK(lv.isomorphism);

  for (int n = 2; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n)) {
      if (!is_conjunctive(L)) continue;
      DlatR1Result r = dlat_r1_isomorphism(L);
      CHECK(r.kernel_is_r1);
      CHECK(r.isomorphism);
    }
}

TEST_CASE("universal property of dL") {
  // 2-chain into the 2-chain
  JoinSemilattice two = builtin::two();
  UniversalPropertyResult u =
      universal_property_check(two, two, {0, 1});
  CHECK(u.extensions == 1);
  CHECK(u.unique);

  // free join into B2: f(x) = {x}, f(y) = {y}, f(1) = top
  JoinSemilattice F = builtin::freejoin();
  JoinSemilattice b2 = builtin::b2();
  std::vector<Elem> f = {id_of(b2, "x"), id_of(b2, "y"), b2.top()};
  UniversalPropertyResult uf = universal_property_check(F, b2, f);
  CHECK(uf.extensions == 1);
  CHECK(uf.unique);

  // P3 into the 2-chain via phi_m for each maximal ideal m
  JoinSemilattice p3 = builtin::p3();
  for (const ElemSet& m : maximal_ideals(p3)) {
    std::vector<Elem> phi(p3.size());
    for (Elem a = 0; a < p3.size(); ++a) phi[a] = m.test(a) ? 0 : 1;
    UniversalPropertyResult up = universal_property_check(p3, two, phi);
    CHECK(up.extensions == 1);
    CHECK(up.unique);
  }

  // not a distributive lattice target
  CHECK_THROWS_AS(universal_property_check(two, builtin::p3(), {0, 1}),
                  Error);
}

TEST_CASE("base classification on the discrete 3-point space") {
  TopSpace discrete;
  discrete.npoints = 3;
  discrete.point_names = {"a", "b", "c"};
  for (std::uint32_t m = 0; m < 8; ++m) {
    ElemSet s;
    for (int i = 0; i < 3; ++i)
      if ((m >> i) & 1) s.set(i);
    discrete.opens.push_back(s);
  }

  BaseClassification full = classify_base(discrete, discrete.opens);
  CHECK(full.is_base);
  CHECK(full.annular);
  CHECK(full.wallman);
  CHECK(full.conjunctive_base);

  // P3 plus the empty set (which is the full power set here)
  std::vector<ElemSet> p3base;
  p3base.push_back(ElemSet{});
  for (std::uint32_t m = 1; m < 8; ++m) {
    ElemSet s;
    for (int i = 0; i < 3; ++i)
      if ((m >> i) & 1) s.set(i);
    p3base.push_back(s);
  }
  BaseClassification pb = classify_base(discrete, p3base);
  CHECK(pb.annular);
  CHECK(pb.wallman);
  CHECK(pb.conjunctive_base);
}

TEST_CASE("the Sierpinski base is annular but not Wallman") {
  TopSpace sier;
  sier.npoints = 2;
  sier.point_names = {"u", "v"};
  sier.opens = {ElemSet{}, bits({0}), bits({0, 1})};
  BaseClassification c = classify_base(sier, sier.opens);
  CHECK(c.is_base);
  CHECK(c.annular);
  CHECK_FALSE(c.wallman);
  REQUIRE(c.wallman_witness.has_value());
  CHECK(c.wallman_witness->first == 0);  // the point u
  // ∅ < {u} admits no V with V u ∅ != X = V u {u}, so not conjunctive
  // either (as a semilattice this base is the non-conjunctive 3-chain)
  CHECK_FALSE(c.conjunctive_base);
}

TEST_CASE("classification errors") {
  TopSpace bad;
  bad.npoints = 2;
  bad.point_names = {"u", "v"};
  bad.opens = {bits({0}), bits({0, 1})};  // missing the empty set
  CHECK_THROWS_AS(classify_base(bad, bad.opens), Error);

  TopSpace ok;
  ok.npoints = 2;
  ok.point_names = {"u", "v"};
  ok.opens = {ElemSet{}, bits({0}), bits({0, 1})};
  std::vector<ElemSet> stray = {bits({1})};
  CHECK_THROWS_AS(classify_base(ok, stray), Error);
}

TEST_CASE("Wallman implies conjunctive over all bases on 3 points") {
  // all topologies on up to 3 points, all subfamilies as candidate bases
  for (int np = 1; np <= 3; ++np) {
    const std::uint32_t members = std::uint32_t{1} << np;
    for (std::uint32_t fam = 0; fam < (std::uint32_t{1} << members);
         ++fam) {
      std::vector<ElemSet> opens;
      for (std::uint32_t m = 0; m < members; ++m)
        if ((fam >> m) & 1) {
          ElemSet s;
          for (int i = 0; i < np; ++i)
            if ((m >> i) & 1) s.set(i);
          opens.push_back(s);
        }
      if (!is_topology(np, opens)) continue;
      TopSpace X;
      X.npoints = np;
      for (int i = 0; i < np; ++i)
        X.point_names.push_back("p" + std::to_string(i));
      X.opens = opens;
      const bool discrete_space = is_discrete(X);
      // candidate bases: subfamilies of the opens
      for (std::uint32_t bm = 1; bm < (std::uint32_t{1} << opens.size());
           ++bm) {
        std::vector<ElemSet> base;
        for (std::size_t i = 0; i < opens.size(); ++i)
          if ((bm >> i) & 1) base.push_back(opens[i]);
        BaseClassification c = classify_base(X, base);
        if (c.wallman) CHECK(c.conjunctive_base);
        if (discrete_space && c.annular) CHECK(c.wallman);
      }
    }
  }
}

TEST_CASE("eta embeds a finite T1 space densely in Spec_Max of its base") {
  // 3-point discrete with the full power set
  SetFamily pow3;
  pow3.point_names = {"a", "b", "c"};
  for (std::uint32_t m = 0; m < 8; ++m) {
    ElemSet s;
    for (int i = 0; i < 3; ++i)
      if ((m >> i) & 1) s.set(i);
    pow3.sets.push_back(s);
  }
  EtaResult r = eta_embedding_check(pow3);
  CHECK(r.embedding_with_dense_image());

  SetFamily pow2;
  pow2.point_names = {"u", "v"};
  for (std::uint32_t m = 0; m < 4; ++m) {
    ElemSet s;
    for (int i = 0; i < 2; ++i)
      if ((m >> i) & 1) s.set(i);
    pow2.sets.push_back(s);
  }
  CHECK(eta_embedding_check(pow2).embedding_with_dense_image());

  SetFamily single;
  single.point_names = {"u"};
  single.sets = {ElemSet{}, bits({0})};
  CHECK(eta_embedding_check(single).embedding_with_dense_image());

  // a non-Wallman base is refused
  SetFamily sier;
  sier.point_names = {"u", "v"};
  sier.sets = {ElemSet{}, bits({0}), bits({0, 1})};
  CHECK_THROWS_AS(eta_embedding_check(sier), Error);
}

TEST_CASE("conjunctive distributive lattices coincide with their wL") {
  for (int n = 2; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n)) {
      if (!is_conjunctive(L) || !meet_structure(L).is_lattice() ||
          !is_distributive(L).distributive)
        continue;
      CHECK(wl_lattice(L).size() == L.size());
    }
}

TEST_CASE("dlat suite passes on every structure up to size 5") {
  for (int n = 2; n <= 5; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n))
      for (const CheckRow& row : verify_dlat(L)) {
        INFO(row.check << ": " << row.detail);
        CHECK((row.pass || row.skipped));
      }
}

TEST_SUITE_END();
