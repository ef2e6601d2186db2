#include "jslat/spectrum.hpp"

#include <algorithm>
#include <set>

namespace jslat {

MaxSpectrum spec_max(const JoinSemilattice& L) {
  if (L.size() < 2)
    raise(Errc::degenerate,
          "the spectrum representation needs at least two elements");
  MaxSpectrum s;
  s.parent_size = L.size();
  s.points = maximal_ideals(L);
  const int k = s.npoints();
  s.coz.assign(L.size(), ElemSet{});
  for (Elem a = 0; a < L.size(); ++a)
    for (int i = 0; i < k; ++i)
      if (!s.points[i].test(a)) s.coz[a].set(i);

  s.injective = true;
  for (Elem a = 0; a < L.size() && s.injective; ++a)
    for (Elem b = a + 1; b < L.size(); ++b)
      if (s.coz[a] == s.coz[b]) {
        s.injective = false;
        break;
      }

  std::vector<std::string> point_names;
  for (int i = 0; i < k; ++i) point_names.push_back("m" + std::to_string(i));
  s.topology = generate_topology(k, s.coz, std::move(point_names));
  return s;
}

HullCover hull_and_cover(const JoinSemilattice& L, Elem a, const ElemSet& B) {
  if (a >= L.size()) raise(Errc::range_error, "element id out of range");
  HullCover out;
  std::vector<ElemSet> max = maximal_ideals(L);

  // <<B>>; the empty intersection is L
  out.hull = L.all();
  for (const ElemSet& m : max)
    if (B.subset_of(m)) out.hull &= m;
  out.a_in_hull = out.hull.test(a);

  ElemSet coz_a, cov;
  for (std::size_t i = 0; i < max.size(); ++i) {
    if (!max[i].test(a)) coz_a.set(static_cast<int>(i));
    for (int b = B.first(); b >= 0; b = B.next(b))
      if (!max[i].test(b)) cov.set(static_cast<int>(i));
  }
  out.covers = coz_a.subset_of(cov);

  ElemSet genB = generated_ideal(L, B);
  out.condition_iii = true;
  const Elem one = L.top();
  for (Elem x = 0; x < L.size(); ++x) {
    if (L.join(x, a) != one) continue;
    bool found = false;
    for (int b = genB.first(); b >= 0 && !found; b = genB.next(b))
      found = L.join(x, static_cast<Elem>(b)) == one;
    if (!found) {
      out.condition_iii = false;
      break;
    }
  }
  return out;
}

RoundtripResult roundtrip_representation(const SetFamily& family) {
  const int np = family.npoints();
  if (np == 0)
    raise(Errc::precondition_failed, "point set is empty");
  ElemSet full = ElemSet::full(np);
  if (std::find(family.sets.begin(), family.sets.end(), full) ==
      family.sets.end())
    raise(Errc::precondition_failed, "family does not contain the full set");
  for (std::size_t i = 0; i < family.sets.size(); ++i)
    for (std::size_t j = i; j < family.sets.size(); ++j)
      if (std::find(family.sets.begin(), family.sets.end(),
                    family.sets[i] | family.sets[j]) == family.sets.end())
        raise(Errc::precondition_failed, "family is not union-closed");
  T1Verdict t1 = t1_subbase_check(np, family.sets);
  if (!t1.t1)
    raise(Errc::precondition_failed,
          "family is not a T1 subbase (fails at point pair " +
              family.point_names[t1.witness->first] + "," +
              family.point_names[t1.witness->second] + ")");

  JoinSemilattice L = JoinSemilattice::from_set_family(family);
  RoundtripResult out;
  out.conjunctive = is_conjunctive(L);

  // m_x = {a : x not in a}
  std::vector<ElemSet> mx(np);
  for (int x = 0; x < np; ++x)
    for (Elem a = 0; a < L.size(); ++a)
      if (!L.origin()->sets[a].test(x)) mx[x].set(a);

  if (L.size() < 2) {
    // single-point case: the unique maximal ideal is empty
    out.point_map.assign(np, 0);
    out.homeomorphism = np == 1;
    return out;
  }

  MaxSpectrum s = spec_max(L);
  out.point_map.assign(np, -1);
  for (int x = 0; x < np; ++x) {
    for (int i = 0; i < s.npoints(); ++i)
      if (s.points[i] == mx[x]) {
        out.point_map[x] = i;
        break;
      }
  }
  bool bijective = s.npoints() == np;
  for (int x = 0; x < np && bijective; ++x) {
    if (out.point_map[x] < 0) bijective = false;
    for (int y = x + 1; y < np; ++y)
      if (out.point_map[x] == out.point_map[y]) bijective = false;
  }

  bool carries = bijective;
  if (bijective) {
    TopSpace tx = generate_topology(np, family.sets, family.point_names);
    std::set<ElemSet> image;
    for (const ElemSet& u : tx.opens) {
      ElemSet v;
      for (int x = u.first(); x >= 0; x = u.next(x)) v.set(out.point_map[x]);
      image.insert(v);
    }
    std::set<ElemSet> wl(s.topology.opens.begin(), s.topology.opens.end());
    carries = image == wl;
  }
  out.homeomorphism = carries;
  return out;
}

ConjMorphismVerdict is_conjunctive_morphism(const MorphismTable& f) {
  if (!is_one_join_morphism(f))
    raise(Errc::not_a_morphism, "not a 1-v-morphism");
  const JoinSemilattice& L = *f.source;
  const JoinSemilattice& M = *f.target;
  std::vector<ElemSet> maxL = maximal_ideals(L);
  std::vector<ElemSet> maxM = maximal_ideals(M);

  ConjMorphismVerdict out;
  out.conjunctive = true;
  for (std::size_t wi = 0; wi < maxM.size(); ++wi) {
    ElemSet pre;
    for (Elem a = 0; a < L.size(); ++a)
      if (maxM[wi].test(f.map[a])) pre.set(a);
    ElemSet hull = L.all();
    for (const ElemSet& m : maxL)
      if (pre.subset_of(m)) hull &= m;
    if (hull != pre) {
      out.conjunctive = false;
      out.failing_targets.push_back(static_cast<int>(wi));
    }
  }
  return out;
}

QPhiReport q_phi_analysis(const MorphismTable& f) {
  const JoinSemilattice& L = *f.source;
  const JoinSemilattice& M = *f.target;
  if (!is_conjunctive(L) || !is_conjunctive(M))
    raise(Errc::precondition_failed,
          "Q_phi analysis requires conjunctive structures");
  ConjMorphismVerdict cv = is_conjunctive_morphism(f);
  if (!cv.conjunctive)
    raise(Errc::precondition_failed, "morphism is not conjunctive");

  MaxSpectrum sl = spec_max(L);
  MaxSpectrum sm = spec_max(M);

  QPhiReport rep;
  rep.q.n_source = sm.npoints();
  rep.q.n_target = sl.npoints();
  rep.q.rows.assign(sm.npoints(), ElemSet{});
  for (int w = 0; w < sm.npoints(); ++w) {
    ElemSet pre;
    for (Elem a = 0; a < L.size(); ++a)
      if (sm.points[w].test(f.map[a])) pre.set(a);
    for (int v = 0; v < sl.npoints(); ++v)
      if (pre.subset_of(sl.points[v])) rep.q.rows[w].set(v);
  }

  auto q_preimage = [&](const ElemSet& V) {
    ElemSet out;
    for (int w = 0; w < sm.npoints(); ++w)
      if (rep.q.rows[w].intersects(V)) out.set(w);
    return out;
  };

  rep.join_identity = true;
  for (Elem a = 0; a < L.size(); ++a)
    for (int w = 0; w < sm.npoints(); ++w) {
      // (join of a-hat along Q)(w): join over {a-hat(v) : (w,v) in Q}
      bool lhs = false;
      for (int v = rep.q.rows[w].first(); v >= 0 && !lhs;
           v = rep.q.rows[w].next(v))
        lhs = !sl.points[v].test(a);
      bool rhs = !sm.points[w].test(f.map[a]);
      if (lhs != rhs) rep.join_identity = false;
    }

  rep.coz_identity = true;
  for (Elem a = 0; a < L.size(); ++a)
    if (q_preimage(sl.coz[a]) != sm.coz[f.map[a]]) rep.coz_identity = false;

  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = 0; b < L.size(); ++b) {
      ElemSet lhs = q_preimage(sl.coz[a] & sl.coz[b]);
      ElemSet rhs = sm.coz[f.map[a]] & sm.coz[f.map[b]];
      if (!lhs.subset_of(rhs))
        raise(Errc::internal_inconsistency,
              "Q^{-1} of an intersection escaped the proven bound");
      if (lhs != rhs) rep.strict_pairs.emplace_back(a, b);
    }
  return rep;
}

}  // namespace jslat
