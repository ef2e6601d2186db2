#include "jslat/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jslat/builtin.hpp"
#include "jslat/distributivity.hpp"
#include "jslat/dlat.hpp"
#include "jslat/pierce.hpp"
#include "jslat/spectrum.hpp"

namespace jslat {

namespace {

// thrown by a check body when the structure does not meet the hypotheses
struct Skip {
  std::string why;
};

template <typename Fn>
CheckRow run_check(const std::string& suite, const std::string& check,
                   Fn&& fn) {
  CheckRow row{suite, check, false, false, ""};
  try {
    row.pass = fn(row.detail);
  } catch (const Skip& s) {
    row.skipped = true;
    row.pass = true;
    row.detail = s.why;
  } catch (const Error& e) {
    if (e.code() == Errc::size_guard) {
      row.skipped = true;
      row.pass = true;
      row.detail = e.what();
    } else {
      row.pass = false;
      row.detail = e.what();
    }
  }
  return row;
}

std::vector<ElemSet> nonempty_upsets(const JoinSemilattice& L) {
  std::vector<ElemSet> out;
  for (const ElemSet& U : enumerate_upsets(L))
    if (!U.empty()) out.push_back(U);
  return out;
}

bool refines(const Congruence& fine, const Congruence& coarse) {
  for (int x = 0; x < fine.n; ++x)
    for (int y = x + 1; y < fine.n; ++y)
      if (fine.class_of[x] == fine.class_of[y] &&
          coarse.class_of[x] != coarse.class_of[y])
        return false;
  return true;
}

bool same_partition(const Congruence& a, const Congruence& b) {
  return refines(a, b) && refines(b, a);
}

}  // namespace

std::vector<CheckRow> verify_pierce(const JoinSemilattice& L) {
  std::vector<CheckRow> rows;
  const std::string suite = "pierce";

  rows.push_back(run_check(suite, "up-set is one R^U class", [&](std::string& d) {
    for (const ElemSet& U : nonempty_upsets(L)) {
      Congruence r = pierce_congruence(L, U);
      if (std::count(r.classes.begin(), r.classes.end(), U) != 1) {
        d = "fails for U = " + render_subset(L, U);
        return false;
      }
    }
    return true;
  }));

  rows.push_back(run_check(suite, "L/R^U is conjunctive", [&](std::string& d) {
    for (const ElemSet& U : nonempty_upsets(L)) {
      Congruence r = pierce_congruence(L, U);
      QuotientResult q = quotient(L, r);
      if (!is_conjunctive(q.quotient)) {
        d = "quotient by " + r.partition_string(L) + " is not conjunctive";
        return false;
      }
    }
    return true;
  }));

  rows.push_back(run_check(
      suite, "R^U is the strongest congruence with class U",
      [&](std::string& d) {
        std::vector<Congruence> all = enumerate_congruences(L);
        for (const ElemSet& U : nonempty_upsets(L)) {
          Congruence ru = pierce_congruence(L, U);
          for (const Congruence& q : all) {
            bool u_is_class =
                std::find(q.classes.begin(), q.classes.end(), U) !=
                q.classes.end();
            if (u_is_class && !refines(q, ru)) {
              d = "congruence " + q.partition_string(L) +
                  " has class " + render_subset(L, U) +
                  " but is not below R^U";
              return false;
            }
          }
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "stronger congruences grow the top class past U",
      [&](std::string& d) {
        std::vector<Congruence> all = enumerate_congruences(L);
        for (const ElemSet& U : nonempty_upsets(L)) {
          Congruence ru = pierce_congruence(L, U);
          for (const Congruence& q : all) {
            if (!refines(ru, q) || same_partition(ru, q)) continue;
            const ElemSet& cls = q.classes[q.class_of[U.first()]];
            if (!(U.subset_of(cls) && cls != U)) {
              d = "congruence " + q.partition_string(L) +
                  " strictly above R^U keeps class " + render_subset(L, U);
              return false;
            }
          }
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "surjections onto conjunctive images are quotients by R^V",
      [&](std::string& d) {
        for (const Congruence& q : enumerate_congruences(L)) {
          QuotientResult qr = quotient(L, q);
          if (!is_conjunctive(qr.quotient)) continue;
          // V = preimage of the top class; the induced [x] -> h(x) is an
          // isomorphism iff R^V coincides with the kernel of h, which is q
          ElemSet V = q.classes[qr.projection[L.top()]];
          Congruence rv = pierce_congruence(L, V);
          if (!same_partition(rv, q)) {
            d = "kernel mismatch for quotient " + q.partition_string(L);
            return false;
          }
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "R^{up(c)} respects joins of arbitrary subsets",
      [&](std::string& d) {
        const int n = L.size();
        if (n > 16) raise(Errc::size_guard, "subset scan capped at 16");
        for (Elem c = 0; c < n; ++c) {
          Congruence r = pierce_congruence(L, L.up(c));
          std::map<std::set<int>, int> join_class;
          for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n);
               ++mask) {
            ElemSet A;
            for (int i = 0; i < n; ++i)
              if ((mask >> i) & 1) A.set(i);
            std::set<int> key;
            for (int x = A.first(); x >= 0; x = A.next(x))
              key.insert(r.class_of[x]);
            int jc = r.class_of[L.join_of(A)];
            auto [it, fresh] = join_class.emplace(key, jc);
            if (!fresh && it->second != jc) {
              d = "join class not determined by member classes at c = " +
                  L.name(c);
              return false;
            }
          }
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "R^U of a filter on a distributive lattice respects meets",
      [&](std::string& d) {
        MeetStructure m = meet_structure(L);
        if (!m.is_lattice() || !is_distributive(L).distributive) {
          throw Skip{"not a distributive lattice"};
        }
        for (const ElemSet& F : enumerate_filters(L)) {
          Congruence r = pierce_congruence(L, F);
          for (Elem a = 0; a < L.size(); ++a)
            for (Elem a2 = 0; a2 < L.size(); ++a2) {
              if (r.class_of[a] != r.class_of[a2]) continue;
              for (Elem b = 0; b < L.size(); ++b)
                if (r.class_of[m.meet(L.size(), a, b)] !=
                    r.class_of[m.meet(L.size(), a2, b)]) {
                  d = "meet compatibility fails for filter " +
                      render_subset(L, F);
                  return false;
                }
            }
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "ideally conjunctive agrees with conjunctive",
      [&](std::string& d) {
        bool c = is_conjunctive(L);
        bool ic = is_ideally_conjunctive(L).overall;
        if (c != ic) {
          d = std::string("conjunctive = ") + (c ? "yes" : "no") +
              " but ideally conjunctive = " + (ic ? "yes" : "no");
          return false;
        }
        return true;
      }));

  return rows;
}

std::vector<CheckRow> verify_spectrum(const JoinSemilattice& L) {
  std::vector<CheckRow> rows;
  const std::string suite = "spectrum";

  rows.push_back(run_check(suite, "coz is a 1-v-morphism", [&](std::string& d) {
    if (L.size() < 2) throw Skip{"degenerate (|L| < 2)"};
    MaxSpectrum s = spec_max(L);
    for (Elem a = 0; a < L.size(); ++a)
      for (Elem b = 0; b < L.size(); ++b)
        if (s.coz[L.join(a, b)] != (s.coz[a] | s.coz[b])) {
          d = "coz(a v b) != coz a u coz b at (" + L.name(a) + "," +
              L.name(b) + ")";
          return false;
        }
    if (s.coz[L.top()] != ElemSet::full(s.npoints())) {
      d = "coz(top) misses a point";
      return false;
    }
    return true;
  }));

  rows.push_back(run_check(
      suite, "coz injective iff conjunctive", [&](std::string& d) {
        if (L.size() < 2) throw Skip{"degenerate (|L| < 2)"};
        MaxSpectrum s = spec_max(L);
        if (s.injective != is_conjunctive(L)) {
          d = "injectivity flag disagrees with conjunctivity";
          return false;
        }
        return true;
      }));

  rows.push_back(run_check(suite, "the generated topology is T1", [&](std::string& d) {
    if (L.size() < 2) throw Skip{"degenerate (|L| < 2)"};
    MaxSpectrum s = spec_max(L);
    if (!is_t1_topology(s.topology)) {
      d = "a point pair is not separated";
      return false;
    }
    return true;
  }));

  rows.push_back(run_check(
      suite, "cover criterion: the three conditions coincide",
      [&](std::string& d) {
        const int n = L.size();
        if (n > 12) raise(Errc::size_guard, "cover scan capped at 12");
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
          ElemSet B;
          for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) B.set(i);
          for (Elem a = 0; a < n; ++a) {
            HullCover hc = hull_and_cover(L, a, B);
            if (hc.covers != hc.a_in_hull ||
                hc.covers != hc.condition_iii) {
              d = "conditions split at a = " + L.name(a) +
                  ", B = " + render_subset(L, B);
              return false;
            }
          }
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "generated ideal sits inside the maximal-ideal hull",
      [&](std::string& d) {
        const int n = L.size();
        if (n > 12) raise(Errc::size_guard, "hull scan capped at 12");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          ElemSet B;
          for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) B.set(i);
          HullCover hc = hull_and_cover(L, 0, B);
          if (!generated_ideal(L, B).subset_of(hc.hull)) {
            d = "<B> escapes <<B>> at B = " + render_subset(L, B);
            return false;
          }
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "representation round-trip on the originating family",
      [&](std::string& d) {
        if (!L.origin()) throw Skip{"no set-family origin"};
        RoundtripResult r = roundtrip_representation(*L.origin());
        if (!r.conjunctive) {
          d = "family failed conjunctivity";
          return false;
        }
        if (!r.homeomorphism) {
          d = "x -> m_x is not a homeomorphism";
          return false;
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "identity morphism induces the equality relation",
      [&](std::string& d) {
        if (L.size() < 2) throw Skip{"degenerate (|L| < 2)"};
        if (!is_conjunctive(L))
          throw Skip{"not conjunctive"};
        std::vector<Elem> idmap(L.size());
        for (Elem a = 0; a < L.size(); ++a) idmap[a] = a;
        MorphismTable f{&L, &L, idmap};
        QPhiReport rep = q_phi_analysis(f);
        if (!rep.join_identity || !rep.coz_identity) {
          d = "identities failed for the identity morphism";
          return false;
        }
        for (int w = 0; w < rep.q.n_source; ++w)
          if (rep.q.rows[w] != ElemSet::single(w)) {
            d = "Q is not the equality relation";
            return false;
          }
        if (!rep.strict_pairs.empty()) {
          d = "identity morphism produced a strict inclusion";
          return false;
        }
        return true;
      }));

  return rows;
}

std::vector<CheckRow> verify_distributivity(const JoinSemilattice& L) {
  std::vector<CheckRow> rows;
  const std::string suite = "distributivity";

  rows.push_back(run_check(
      suite, "L, Id L lattice, Id L frame law agree", [&](std::string& d) {
        IdlDistributivity v = idl_distributivity_equivalence(L);
        d = v.l_distributive ? "distributive" : "not distributive";
        return true;  // agreement is asserted inside; disagreement throws
      }));

  rows.push_back(run_check(
      suite, "prime spectrum gives a frame isomorphism",
      [&](std::string& d) {
        if (!is_distributive(L).distributive)
          throw Skip{"not distributive"};
        PrimeSpectrum s = prime_spectrum(L);
        if (!s.frame_isomorphism) {
          d = "Id L and the spectral topology do not match";
          return false;
        }
        return true;
      }));

  rows.push_back(run_check(
      suite, "ideals maximal disjoint from a filter are prime",
      [&](std::string& d) {
        if (!is_distributive(L).distributive)
          throw Skip{"not distributive"};
        for (const ElemSet& F : enumerate_filters(L))
          for (const ElemSet& I : disjoint_max_prime(L, F)) {
            if (!classify_subset(L, I.complement(L.size())).filter) {
              d = "complement is not a filter for " + render_subset(L, I);
              return false;
            }
            if (!I.empty() && !classify_subset(L, I).prime_ideal) {
              d = "witness " + render_subset(L, I) + " is not prime";
              return false;
            }
          }
        return true;
      }));

  rows.push_back(run_check(
      suite, "maximal ideals of a distributive structure are prime",
      [&](std::string& d) {
        if (!is_distributive(L).distributive)
          throw Skip{"not distributive"};
        for (const ElemSet& m : maximal_ideals(L))
          if (!classify_subset(L, m).prime_ideal) {
            d = "maximal ideal " + render_subset(L, m) + " is not prime";
            return false;
          }
        return true;
      }));

  rows.push_back(run_check(
      suite, "bottomed conjunctive non-distributive has a non-prime maximal",
      [&](std::string& d) {
        if (!L.bottom() || !is_conjunctive(L) ||
            is_distributive(L).distributive)
          throw Skip{"hypotheses not met"};
        auto w = max_not_prime_witness(L);
        if (!w) {
          d = "no witness produced";
          return false;
        }
        d = "witness " + render_subset(L, *w);
        return true;
      }));

  rows.push_back(run_check(
      suite, "finite distributive lattice is Id of its compacts",
      [&](std::string& d) {
        if (!meet_structure(L).is_lattice() ||
            !is_distributive(L).distributive)
          throw Skip{"not a distributive lattice"};
        if (!check_algebraic_frame_isomorphism(L)) {
          d = "the two maps are not mutually inverse";
          return false;
        }
        return true;
      }));

  return rows;
}

std::vector<CheckRow> verify_dlat(const JoinSemilattice& L) {
  std::vector<CheckRow> rows;
  const std::string suite = "dlat";

  rows.push_back(run_check(
      suite, "generators of dL preserve joins", [&](std::string& d) {
        GeneratedLattice dl = free_dlat(L);
        for (Elem a = 0; a < L.size(); ++a)
          for (Elem b = 0; b < L.size(); ++b) {
            const ElemSet u = dl.elements[dl.generator_of[a]] |
                              dl.elements[dl.generator_of[b]];
            if (u != dl.elements[dl.generator_of[L.join(a, b)]]) {
              d = "d(a) u d(b) != d(a v b) at (" + L.name(a) + "," +
                  L.name(b) + ")";
              return false;
            }
          }
        return true;
      }));

  rows.push_back(run_check(
      suite, "kernel of w-bar is R^1(dL) and dL/R^1 = wL",
      [&](std::string& d) {
        if (L.size() < 2) throw Skip{"degenerate (|L| < 2)"};
        if (!is_conjunctive(L))
          throw Skip{"not conjunctive"};
        DlatR1Result r = dlat_r1_isomorphism(L);
        d = "|dL| = " + std::to_string(r.dl_size) +
            ", |wL| = " + std::to_string(r.wl_size);
        return r.kernel_is_r1 && r.isomorphism;
      }));

  rows.push_back(run_check(
      suite, "w-bar is surjective", [&](std::string& d) {
        if (L.size() < 2) throw Skip{"degenerate (|L| < 2)"};
        if (!is_conjunctive(L))
          throw Skip{"not conjunctive"};
        OverlineW w = overline_w(L);
        return w.surjective;
      }));

  rows.push_back(run_check(
      suite, "conjunctive distributive lattices satisfy L = wL",
      [&](std::string& d) {
        if (L.size() < 2 || !is_conjunctive(L))
          throw Skip{"not applicable"};
        if (!meet_structure(L).is_lattice() ||
            !is_distributive(L).distributive)
          throw Skip{"not a distributive lattice"};
        GeneratedLattice wl = wl_lattice(L);
        if (wl.size() != L.size()) {
          d = "|wL| = " + std::to_string(wl.size()) +
              " != " + std::to_string(L.size());
          return false;
        }
        // coz must then be a lattice isomorphism
        MaxSpectrum s = spec_max(L);
        MeetStructure m = meet_structure(L);
        for (Elem a = 0; a < L.size(); ++a)
          for (Elem b = 0; b < L.size(); ++b)
            if ((s.coz[a] & s.coz[b]) != s.coz[m.meet(L.size(), a, b)]) {
              d = "coz does not preserve the meet at (" + L.name(a) + "," +
                  L.name(b) + ")";
              return false;
            }
        return true;
      }));

  return rows;
}

std::vector<CheckRow> verify_suite(const std::string& suite,
                                   const JoinSemilattice& L) {
  if (suite == "pierce") return verify_pierce(L);
  if (suite == "spectrum") return verify_spectrum(L);
  if (suite == "distributivity") return verify_distributivity(L);
  if (suite == "dlat") return verify_dlat(L);
  if (suite == "all") return verify_all(L);
  raise(Errc::unknown_suite, "no suite named '" + suite + "'");
}

std::vector<CheckRow> verify_all(const JoinSemilattice& L) {
  std::vector<CheckRow> rows = verify_pierce(L);
  for (auto& r : verify_spectrum(L)) rows.push_back(std::move(r));
  for (auto& r : verify_distributivity(L)) rows.push_back(std::move(r));
  for (auto& r : verify_dlat(L)) rows.push_back(std::move(r));
  return rows;
}

std::vector<CheckRow> verify_regressions() {
  std::vector<CheckRow> rows;
  const std::string suite = "regression";

  rows.push_back(run_check(
      suite, "kernel {∅,a} map preserves v and 1 but not ^",
      [&](std::string& d) {
        JoinSemilattice P = builtin::pabc();
        JoinSemilattice M = builtin::two();
        // elements of P in document order: ∅,a,b,c,ab,ac,bc,abc
        std::vector<Elem> map = {0, 0, 1, 1, 1, 1, 1, 1};
        MorphismTable f{&P, &M, map};
        MorphismFlags flags = check_morphism(f);
        if (!flags.preserves_join || !flags.preserves_top) {
          d = "the map is not a 1-v-morphism";
          return false;
        }
        if (!flags.preserves_meet.has_value() || *flags.preserves_meet) {
          d = "the map unexpectedly preserves meets";
          return false;
        }
        // the map must fail exactly where ab ^ ac = a collapses
        MeetStructure mp = meet_structure(P);
        const Elem ab = 4, ac = 5;
        Elem meet = mp.meet(P.size(), ab, ac);
        if (map[meet] == M.join(0, 0) && map[ab] == 1 && map[ac] == 1)
          return true;  // phi(ab ^ ac) = 0 while phi(ab) ^ phi(ac) = 1
        d = "the (ab,ac) witness did not reproduce";
        return false;
      }));

  rows.push_back(run_check(
      suite, "free-join generators satisfy d(b) = L minus {1,b}",
      [&](std::string& d) {
        JoinSemilattice F = builtin::freejoin();
        GeneratedLattice dl = free_dlat(F);
        for (Elem b = 0; b < F.size(); ++b) {
          ElemSet expect = F.all();
          expect.reset(F.top());
          if (b != F.top()) expect.reset(b);
          if (dl.elements[dl.generator_of[b]] != expect) {
            d = "generator of " + F.name(b) + " is wrong";
            return false;
          }
        }
        OverlineW w = overline_w(F);
        if (!w.injective) {
          d = "w-bar is not injective on the free-join example";
          return false;
        }
        return true;
      }));

  return rows;
}

bool all_passed(const std::vector<CheckRow>& rows) {
  for (const CheckRow& r : rows)
    if (!r.pass && !r.skipped) return false;
  return true;
}

}  // namespace jslat
