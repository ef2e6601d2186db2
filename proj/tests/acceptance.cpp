// Acceptance suite: one check per shipped guarantee, one line per check.
// Everything here is exact (discrete mathematics, no tolerances).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "jslat/builtin.hpp"
#include "jslat/distributivity.hpp"
#include "jslat/dlat.hpp"
#include "jslat/io.hpp"
#include "jslat/pierce.hpp"
#include "jslat/search.hpp"
#include "jslat/spectrum.hpp"
#include "jslat/verify.hpp"

using namespace jslat;

namespace {

int failures = 0;

void report(int k, const std::string& what, bool pass, double seconds,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL",
              k, what.c_str(), seconds, detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!pass) ++failures;
}

template <typename Fn>
void criterion(int k, const std::string& what, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  report(k, what, pass, secs, detail);
}

ElemSet by_names(const JoinSemilattice& L,
                 std::initializer_list<const char*> names) {
  ElemSet s;
  for (const char* n : names)
    for (Elem a = 0; a < L.size(); ++a)
      if (L.name(a) == n) s.set(a);
  return s;
}

// primality from first principles, used to re-validate search witnesses
bool prime_by_definition(const JoinSemilattice& L, const ElemSet& I) {
  if (I.empty()) return false;
  for (int a = I.first(); a >= 0; a = I.next(a)) {
    if (!L.down(static_cast<Elem>(a)).subset_of(I)) return false;
    for (int b = I.first(); b >= 0; b = I.next(b))
      if (!I.test(L.join(static_cast<Elem>(a), static_cast<Elem>(b))))
        return false;
  }
  ElemSet C = I.complement(L.size());
  if (C.empty()) return false;
  for (int a = C.first(); a >= 0; a = C.next(a)) {
    if (!L.up(static_cast<Elem>(a)).subset_of(C)) return false;
    for (int b = C.first(); b >= 0; b = C.next(b)) {
      ElemSet lower =
          L.down(static_cast<Elem>(a)) & L.down(static_cast<Elem>(b)) & C;
      if (lower.empty()) return false;
    }
  }
  return true;
}

// maximal ideals from first principles: full subset scan
std::vector<ElemSet> maximal_by_definition(const JoinSemilattice& L) {
  const int n = L.size();
  std::vector<ElemSet> ideals;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElemSet S;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) S.set(i);
    bool ideal = true;
    for (int a = S.first(); a >= 0 && ideal; a = S.next(a)) {
      if (!L.down(static_cast<Elem>(a)).subset_of(S)) ideal = false;
      for (int b = S.first(); b >= 0 && ideal; b = S.next(b))
        if (!S.test(L.join(static_cast<Elem>(a), static_cast<Elem>(b))))
          ideal = false;
    }
    if (ideal) ideals.push_back(S);
  }
  std::vector<ElemSet> out;
  for (const ElemSet& I : ideals) {
    if (I.test(L.top())) continue;
    bool maximal = true;
    for (const ElemSet& J : ideals)
      if (I != J && I.subset_of(J) && !J.test(L.top())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(I);
  }
  return out;
}

}  // namespace

int main() {
  criterion(1,
            "L_V: 3 maximal ideals, 0 primes, conjunctive, non-distributive, "
            "non-prime witness",
            [&](std::string& d) {
    JoinSemilattice L = builtin::lv();
    std::vector<ElemSet> max = maximal_ideals(L);
    bool ok = max.size() == 3;
    for (const char* m : {"xy", "xz", "yz"}) {
      ElemSet want = by_names(L, {m, "∅"});
      ok = ok && std::count(max.begin(), max.end(), want) == 1;
    }
    ok = ok && prime_ideals(L).empty();
    ok = ok && is_conjunctive(L);
    ok = ok && !is_distributive(L).distributive;
    auto w = max_not_prime_witness(L);
    ok = ok && w.has_value() && std::count(max.begin(), max.end(), *w) == 1;
    d = "3 maximal, 0 prime, witness is a maximal ideal";
    return ok;
  });

  criterion(2, "supercomplement table of L_V matches the source table",
            [&](std::string& d) {
    JoinSemilattice L = builtin::lv();
    const ElemSet one = ElemSet::single(L.top());
    auto sc = [&](const char* name) {
      for (Elem a = 0; a < L.size(); ++a)
        if (L.name(a) == name) return supercomplements(L, one, a);
      return ElemSet{};
    };
    bool ok = sc("xyz") == L.all();
    ok = ok && sc("xy") == by_names(L, {"xyz", "xz", "yz"});
    ok = ok && sc("xz") == by_names(L, {"xyz", "xy", "yz"});
    ok = ok && sc("yz") == by_names(L, {"xyz", "xy", "xz"});
    ok = ok && sc("∅") == by_names(L, {"xyz"});
    return ok;
  });

  criterion(3, "P3: |dL| = 18, |wL| = 8, proper surjection, dL/R^1 = wL",
            [&](std::string& d) {
    DlatR1Result r = dlat_r1_isomorphism(builtin::p3());
    d = "|dL| = " + std::to_string(r.dl_size) +
        ", |wL| = " + std::to_string(r.wl_size);
    return r.dl_size == 18 && r.wl_size == 8 && r.w.surjective &&
           !r.w.injective && r.kernel_is_r1 && r.isomorphism;
  });

  criterion(4, "free join {x,y,1}: d(b) = L minus {1,b}, w-bar injective",
            [&](std::string& d) {
    JoinSemilattice F = builtin::freejoin();
    GeneratedLattice dl = free_dlat(F);
    bool ok = true;
    for (Elem b = 0; b < F.size(); ++b) {
      ElemSet expect = F.all();
      expect.reset(F.top());
      if (b != F.top()) expect.reset(b);
      ok = ok && dl.elements[dl.generator_of[b]] == expect;
    }
    return ok && overline_w(F).injective;
  });

  criterion(5,
            "kernel-{∅,a} morphism preserves v and 1 but breaks ^ at (ab,ac)",
            [&](std::string& d) {
    JoinSemilattice P = builtin::pabc();
    JoinSemilattice M = builtin::two();
    std::vector<Elem> phi = {0, 0, 1, 1, 1, 1, 1, 1};
    MorphismFlags f = check_morphism({&P, &M, phi});
    MeetStructure mp = meet_structure(P);
    Elem ab = 4, ac = 5;
    bool breaks_at_witness = phi[mp.meet(P.size(), ab, ac)] == 0 &&
                             M.join(phi[ab], phi[ac]) == 1;
    return f.preserves_join && f.preserves_top &&
           f.preserves_meet.has_value() && !*f.preserves_meet &&
           breaks_at_witness;
  });

  criterion(6, "Pierce suite, exhaustive over all classes with n <= 6",
            [&](std::string& d) {
    long structures = 0;
    for (int n = 1; n <= 6; ++n)
      for (const JoinSemilattice& L : enumerate_semilattices(n)) {
        ++structures;
        for (const CheckRow& row : verify_pierce(L))
          if (!row.pass && !row.skipped) {
            d = "n=" + std::to_string(n) + ": " + row.check + " -- " +
                row.detail;
            return false;
          }
      }
    d = std::to_string(structures) + " isomorphism classes";
    return structures == 1 + 1 + 2 + 5 + 15 + 53;
  });

  criterion(7,
            "representation suite: families on <= 4 points and conjunctive "
            "structures with n <= 6",
            [&](std::string& d) {
    long families = 0;
    for (int np = 1; np <= 4; ++np) {
      const std::uint32_t members = std::uint32_t{1} << np;
      for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << members);
           ++fam) {
        std::vector<ElemSet> sets;
        for (std::uint32_t m = 0; m < members; ++m)
          if ((fam >> m) & 1) {
            ElemSet s;
            for (int i = 0; i < np; ++i)
              if ((m >> i) & 1) s.set(i);
            sets.push_back(s);
          }
        if (sets.empty()) continue;
        ElemSet full = ElemSet::full(np);
        if (std::find(sets.begin(), sets.end(), full) == sets.end())
          continue;
        bool closed = true;
        for (std::size_t i = 0; i < sets.size() && closed; ++i)
          for (std::size_t j = i; j < sets.size(); ++j)
            if (std::find(sets.begin(), sets.end(), sets[i] | sets[j]) ==
                sets.end()) {
              closed = false;
              break;
            }
        if (!closed || !t1_subbase_check(np, sets).t1) continue;
        SetFamily f;
        for (int i = 0; i < np; ++i)
          f.point_names.push_back("p" + std::to_string(i));
        f.sets = sets;
        RoundtripResult r = roundtrip_representation(f);
        if (!r.conjunctive || !r.homeomorphism) {
          d = "round-trip failed on a " + std::to_string(np) +
              "-point family";
          return false;
        }
        ++families;
      }
    }
    long conj = 0;
    for (int n = 2; n <= 6; ++n)
      for (const JoinSemilattice& L : enumerate_semilattices(n)) {
        if (!is_conjunctive(L)) continue;
        ++conj;
        MaxSpectrum s = spec_max(L);
        if (!s.injective || !is_t1_topology(s.topology)) {
          d = "coz injectivity or T1 failed at n=" + std::to_string(n);
          return false;
        }
      }
    d = std::to_string(families) + " families, " + std::to_string(conj) +
        " conjunctive structures";
    return families > 0 && conj > 0;
  });

  criterion(8,
            "cover criterion: three conditions agree on every (a,B), n <= 5",
            [&](std::string& d) {
    for (int n = 1; n <= 5; ++n)
      for (const JoinSemilattice& L : enumerate_semilattices(n))
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n);
             ++mask) {
          ElemSet B;
          for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) B.set(i);
          for (Elem a = 0; a < L.size(); ++a) {
            HullCover hc = hull_and_cover(L, a, B);
            if (hc.covers != hc.a_in_hull || hc.covers != hc.condition_iii)
              return false;
          }
        }
    d = "nonempty B (the empty family breaks condition (iii) while (i) and "
        "(ii) hold)";
    return true;
  });

  criterion(9,
            "Q_phi identities for all conjunctive morphisms, sizes <= 4; a "
            "strict inclusion exists",
            [&](std::string& d) {
    std::vector<JoinSemilattice> small;
    for (int n = 2; n <= 4; ++n)
      for (JoinSemilattice& L : enumerate_semilattices(n))
        if (is_conjunctive(L)) small.push_back(std::move(L));
    long morphisms = 0;
    bool strict_found = false;
    bool b2_to_two_strict = false;
    const JoinSemilattice b2 = builtin::b2();
    const JoinSemilattice two = builtin::two();
    for (const JoinSemilattice& L : small)
      for (const JoinSemilattice& M : small) {
        const int nl = L.size(), nm = M.size();
        long total = 1;
        for (int i = 0; i < nl; ++i) total *= nm;
        for (long code = 0; code < total; ++code) {
          long c = code;
          std::vector<Elem> map(nl);
          for (int i = 0; i < nl; ++i) {
            map[i] = static_cast<Elem>(c % nm);
            c /= nm;
          }
          MorphismTable f{&L, &M, map};
          if (!is_one_join_morphism(f)) continue;
          if (!is_conjunctive_morphism(f).conjunctive) continue;
          QPhiReport rep = q_phi_analysis(f);
          ++morphisms;
          if (!rep.join_identity || !rep.coz_identity) {
            d = "identity failed for a morphism between sizes " +
                std::to_string(nl) + " and " + std::to_string(nm);
            return false;
          }
          if (!rep.strict_pairs.empty()) {
            strict_found = true;
            if (isomorphic_bruteforce(L, b2) &&
                isomorphic_bruteforce(M, two))
              b2_to_two_strict = true;
          }
        }
      }
    d = std::to_string(morphisms) + " conjunctive morphisms checked";
    return morphisms > 0 && strict_found && b2_to_two_strict;
  });

  criterion(10,
            "distributivity suite: djl1, frame isomorphism, filter "
            "witnesses, n <= 6",
            [&](std::string& d) {
    for (int n = 1; n <= 6; ++n)
      for (const JoinSemilattice& L : enumerate_semilattices(n)) {
        idl_distributivity_equivalence(L);  // throws on disagreement
        if (!is_distributive(L).distributive) continue;
        if (!prime_spectrum(L).frame_isomorphism) {
          d = "frame isomorphism failed at n=" + std::to_string(n);
          return false;
        }
        for (const ElemSet& F : enumerate_filters(L))
          for (const ElemSet& I : disjoint_max_prime(L, F))
            if (!I.empty() && !prime_by_definition(L, I)) {
              d = "a maximal-disjoint witness is not prime";
              return false;
            }
      }
    return true;
  });

  criterion(11,
            "every bottomed conjunctive non-distributive class with n <= 6 "
            "has a non-prime maximal ideal",
            [&](std::string& d) {
    long hits = 0;
    for (int n = 1; n <= 6; ++n)
      for (const JoinSemilattice& L : enumerate_semilattices(n)) {
        if (!L.bottom() || !is_conjunctive(L) ||
            is_distributive(L).distributive)
          continue;
        auto w = max_not_prime_witness(L);  // raises if violated
        if (!w) return false;
        ++hits;
      }
    d = std::to_string(hits) + " qualifying classes, zero violations";
    return hits > 0;
  });

  criterion(12,
            "search all-maximal-prime-nondist --max-size 7 contains P3; "
            "witnesses re-validated independently",
            [&](std::string& d) {
    std::string dir = std::string(JSLAT_DATA_DIR) + "/acc_search_out";
    std::filesystem::remove_all(dir);
    std::ostringstream out, err;
    int code = jslat::cli::run(
        {"search", "--predicate", "all-maximal-prime-nondist", "--max-size",
         "7", "--out", dir},
        out, err);
    if (code != 0) {
      d = "cli exit " + std::to_string(code) + ": " + err.str();
      return false;
    }
    bool p3_found = false;
    long witnesses = 0;
    JoinSemilattice p3 = builtin::p3();
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      std::string name = entry.path().filename().string();
      if (name.rfind("witness_", 0) != 0) continue;
      ++witnesses;
      std::ifstream in(entry.path());
      std::stringstream buf;
      buf << in.rdbuf();
      JoinSemilattice W = parse_structure_text(buf.str());
      // independent re-validation from first principles
      if (!is_conjunctive(W) || is_distributive(W).distributive) {
        d = "a witness fails the predicate hypotheses";
        return false;
      }
      for (const ElemSet& m : maximal_by_definition(W))
        if (!prime_by_definition(W, m)) {
          d = "a witness has a non-prime maximal ideal";
          return false;
        }
      if (isomorphic_bruteforce(W, p3)) p3_found = true;
    }
    std::filesystem::remove_all(dir);
    d = std::to_string(witnesses) + " witnesses";
    return witnesses > 0 && p3_found;
  });

  criterion(13,
            "base classification: Wallman => conjunctive; Sierpinski "
            "non-Wallman; discrete annular => Wallman",
            [&](std::string& d) {
    long classified = 0;
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
        bool discrete_space = is_discrete(X);
        for (std::uint32_t bm = 1; bm < (std::uint32_t{1} << opens.size());
             ++bm) {
          std::vector<ElemSet> base;
          for (std::size_t i = 0; i < opens.size(); ++i)
            if ((bm >> i) & 1) base.push_back(opens[i]);
          BaseClassification c = classify_base(X, base);
          ++classified;
          if (c.wallman && !c.conjunctive_base) {
            d = "a Wallman base failed conjunctivity";
            return false;
          }
          if (discrete_space && c.annular && !c.wallman) {
            d = "an annular base of a discrete space is not Wallman";
            return false;
          }
        }
      }
    }
    TopSpace sier;
    sier.npoints = 2;
    sier.point_names = {"u", "v"};
    ElemSet u = ElemSet::single(0);
    sier.opens = {ElemSet{}, u, ElemSet::full(2)};
    BaseClassification sc = classify_base(sier, sier.opens);
    d = std::to_string(classified) + " bases classified";
    return !sc.wallman && sc.annular;
  });

  std::printf("%s: %d criterion failure(s)\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures);
  return failures == 0 ? 0 : 1;
}
