#include "jslat/dlat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jslat/distributivity.hpp"

namespace jslat {

int GeneratedLattice::index_of(const ElemSet& s) const {
  auto it = std::find(elements.begin(), elements.end(), s);
  return it == elements.end() ? -1
                              : static_cast<int>(it - elements.begin());
}

namespace {

// Union/meet closure of generator sets, optionally carrying a parallel
// image of each element under a tracked lattice morphism. New elements are
// appended in canonical (set-order) batches per round, so the element
// order is deterministic. An element reachable by two expressions with
// different tracked images would contradict the universal property; that
// is reported as verification_failed.
struct Closure {
  std::vector<ElemSet> elements;
  std::vector<ElemSet> images;
  bool tracked = false;
};

Closure close_under_lattice_ops(const std::vector<ElemSet>& gens,
                                const std::vector<ElemSet>* gen_images,
                                std::size_t guard) {
  Closure c;
  c.tracked = gen_images != nullptr;
  std::map<ElemSet, int> index;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto it = index.find(gens[i]);
    if (it == index.end()) {
      index.emplace(gens[i], static_cast<int>(c.elements.size()));
      c.elements.push_back(gens[i]);
      if (c.tracked) c.images.push_back((*gen_images)[i]);
    } else if (c.tracked && c.images[it->second] != (*gen_images)[i]) {
      raise(Errc::verification_failed,
            "generator images conflict under the tracked morphism");
    }
  }

  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t sz = c.elements.size();
    std::map<ElemSet, ElemSet> fresh;  // element -> image
    auto consider = [&](const ElemSet& e, const ElemSet& img) {
      auto it = index.find(e);
      if (it != index.end()) {
        if (c.tracked && c.images[it->second] != img)
          raise(Errc::verification_failed,
                "conflicting images for one closure element");
        return;
      }
      auto [fit, inserted] = fresh.emplace(e, img);
      if (!inserted && c.tracked && fit->second != img)
        raise(Errc::verification_failed,
              "conflicting images for one closure element");
    };
    for (std::size_t i = 0; i < sz; ++i)
      for (std::size_t j = i + 1; j < sz; ++j) {
        consider(c.elements[i] | c.elements[j],
                 c.tracked ? (c.images[i] | c.images[j]) : ElemSet{});
        consider(c.elements[i] & c.elements[j],
                 c.tracked ? (c.images[i] & c.images[j]) : ElemSet{});
      }
    for (const auto& [e, img] : fresh) {
      index.emplace(e, static_cast<int>(c.elements.size()));
      c.elements.push_back(e);
      if (c.tracked) c.images.push_back(img);
      grew = true;
    }
    if (c.elements.size() > guard)
      raise(Errc::size_guard, "lattice closure exceeds " +
                                  std::to_string(guard) + " elements");
  }
  return c;
}

GeneratedLattice make_generated(const JoinSemilattice& ground,
                                std::vector<std::string> universe_names,
                                int universe,
                                const std::vector<ElemSet>& gens,
                                Closure&& c) {
  GeneratedLattice g;
  g.universe = universe;
  g.universe_names = std::move(universe_names);
  g.elements = std::move(c.elements);
  g.generator_of.resize(ground.size());
  for (Elem a = 0; a < ground.size(); ++a) g.generator_of[a] = g.index_of(gens[a]);
  g.top_index = g.generator_of[ground.top()];
  return g;
}

}  // namespace

GeneratedLattice free_dlat(const JoinSemilattice& L, std::size_t guard) {
  std::vector<ElemSet> gens(L.size());
  for (Elem b = 0; b < L.size(); ++b) gens[b] = L.up(b).complement(L.size());
  Closure c = close_under_lattice_ops(gens, nullptr, guard);
  return make_generated(L, L.names(), L.size(), gens, std::move(c));
}

GeneratedLattice wl_lattice(const JoinSemilattice& L) {
  if (!is_conjunctive(L))
    raise(Errc::not_conjunctive, "wL is defined for conjunctive structures");
  MaxSpectrum s = spec_max(L);
  Closure c = close_under_lattice_ops(s.coz, nullptr, kDlatClosureGuard);
  return make_generated(L, s.topology.point_names, s.npoints(), s.coz,
                        std::move(c));
}

OverlineW overline_w(const JoinSemilattice& L) {
  if (!is_conjunctive(L))
    raise(Errc::not_conjunctive, "wL is defined for conjunctive structures");
  MaxSpectrum s = spec_max(L);
  std::vector<ElemSet> gens(L.size());
  for (Elem b = 0; b < L.size(); ++b) gens[b] = L.up(b).complement(L.size());

  Closure tracked = close_under_lattice_ops(gens, &s.coz, kDlatClosureGuard);

  OverlineW out;
  out.dl = make_generated(L, L.names(), L.size(), gens,
                          Closure{tracked.elements, {}, false});
  Closure wc = close_under_lattice_ops(s.coz, nullptr, kDlatClosureGuard);
  out.wl = make_generated(L, s.topology.point_names, s.npoints(), s.coz,
                          std::move(wc));

  out.image.resize(out.dl.size());
  for (int i = 0; i < out.dl.size(); ++i) {
    int w = out.wl.index_of(tracked.images[i]);
    if (w < 0)
      raise(Errc::verification_failed,
            "image of a dL element is missing from wL");
    out.image[i] = w;
  }
  std::set<int> hit(out.image.begin(), out.image.end());
  out.surjective = static_cast<int>(hit.size()) == out.wl.size();
  out.injective = out.surjective && out.dl.size() == out.wl.size();

  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < out.dl.size(); ++i) classes[out.image[i]].push_back(i);
  std::vector<std::vector<int>> ordered;
  for (auto& [w, members] : classes) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  out.kernel_classes = std::move(ordered);
  return out;
}

JoinSemilattice generated_to_semilattice(const GeneratedLattice& G) {
  const int n = G.size();
  if (n > kMaxElements)
    raise(Errc::size_guard,
          "generated lattice too large to view as a semilattice");
  std::map<ElemSet, int> index;
  for (int i = 0; i < n; ++i) index[G.elements[i]] = i;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(G.elements[i] | G.elements[j]);
      if (it == index.end())
        raise(Errc::internal_inconsistency, "closure is not union-closed");
      table[i][j] = static_cast<Elem>(it->second);
    }
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i)
    names.push_back(render_point_set(G.universe_names, G.elements[i]));
  return JoinSemilattice::from_join_table(std::move(names), table, n);
}

DlatR1Result dlat_r1_isomorphism(const JoinSemilattice& L) {
  DlatR1Result out;
  out.w = overline_w(L);
  out.dl_size = out.w.dl.size();
  out.wl_size = out.w.wl.size();

  JoinSemilattice DL = generated_to_semilattice(out.w.dl);
  Congruence r1 = pierce_congruence(DL, ElemSet::single(DL.top()));
  out.r1_classes = r1.num_classes();

  // kernel(w-bar) = R^1(dL), compared as partitions
  bool same = r1.num_classes() ==
              static_cast<int>(out.w.kernel_classes.size());
  if (same) {
    for (const auto& cls : out.w.kernel_classes) {
      int c = r1.class_of[cls.front()];
      for (int m : cls)
        if (r1.class_of[m] != c) same = false;
      if (r1.classes[c].count() != static_cast<int>(cls.size())) same = false;
    }
  }
  out.kernel_is_r1 = same;
  if (!same)
    raise(Errc::verification_failed,
          "kernel of w-bar differs from R^1(dL)");

  // the induced map [q] -> w-bar(q) is the isomorphism; with the kernel
  // equality established, bijectivity and operation preservation remain
  QuotientResult q = quotient(DL, r1);
  bool iso = q.quotient.size() == out.wl_size;
  std::vector<int> cls_image(r1.num_classes(), -1);
  for (int i = 0; i < out.dl_size && iso; ++i) {
    int c = r1.class_of[i];
    if (cls_image[c] < 0) cls_image[c] = out.w.image[i];
    else if (cls_image[c] != out.w.image[i]) iso = false;
  }
  if (iso) {
    // join and meet preservation on class representatives
    for (int c = 0; c < r1.num_classes() && iso; ++c)
      for (int d = 0; d < r1.num_classes(); ++d) {
        int u = r1.classes[c].first();
        int v = r1.classes[d].first();
        const ElemSet ju = out.w.dl.elements[u] | out.w.dl.elements[v];
        const ElemSet mu = out.w.dl.elements[u] & out.w.dl.elements[v];
        const ElemSet wj = out.w.wl.elements[cls_image[c]] |
                           out.w.wl.elements[cls_image[d]];
        const ElemSet wm = out.w.wl.elements[cls_image[c]] &
                           out.w.wl.elements[cls_image[d]];
        if (out.w.wl.elements[out.w.image[out.w.dl.index_of(ju)]] != wj ||
            out.w.wl.elements[out.w.image[out.w.dl.index_of(mu)]] != wm) {
          iso = false;
          break;
        }
      }
  }
  out.isomorphism = iso;
  if (!iso)
    raise(Errc::verification_failed,
          "constructed map dL/R^1 -> wL failed verification");
  return out;
}

UniversalPropertyResult universal_property_check(const JoinSemilattice& L,
                                                 const JoinSemilattice& B,
                                                 const std::vector<Elem>& f) {
  MorphismTable ft{&L, &B, f};
  if (!is_one_join_morphism(ft))
    raise(Errc::precondition_failed, "f is not a 1-v-morphism");
  MeetStructure mb = meet_structure(B);
  if (!mb.is_lattice() || !is_distributive(B).distributive)
    raise(Errc::precondition_failed, "B is not a distributive lattice");

  GeneratedLattice dl = free_dlat(L);
  const int n = dl.size();
  const int bn = B.size();
  double space = 1;
  for (int i = 0; i < n; ++i) space *= bn;
  if (space > 6.0e7 && n > 20)
    raise(Errc::size_guard, "morphism search space too large");

  // meet table over dl indices
  std::vector<int> join_idx(static_cast<std::size_t>(n) * n);
  std::vector<int> meet_idx(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      join_idx[i * n + j] = dl.index_of(dl.elements[i] | dl.elements[j]);
      meet_idx[i * n + j] = dl.index_of(dl.elements[i] & dl.elements[j]);
    }

  UniversalPropertyResult out;
  std::vector<int> g(n, -1);
  auto consistent = [&](int i) {
    // constraints among assigned prefixes
    for (int j = 0; j <= i; ++j) {
      int ju = join_idx[i * n + j];
      int mu = meet_idx[i * n + j];
      if (ju <= i && g[ju] != B.join(static_cast<Elem>(g[i]),
                                     static_cast<Elem>(g[j])))
        return false;
      if (mu <= i && g[mu] != mb.meet(bn, static_cast<Elem>(g[i]),
                                      static_cast<Elem>(g[j])))
        return false;
      if (ju > i || mu > i) continue;
    }
    // joins/meets landing below i with both args assigned handled above;
    // also check pairs (j,k) <= i producing i
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k) {
        if (join_idx[j * n + k] == i &&
            g[i] != B.join(static_cast<Elem>(g[j]), static_cast<Elem>(g[k])))
          return false;
        if (meet_idx[j * n + k] == i &&
            g[i] != mb.meet(bn, static_cast<Elem>(g[j]),
                            static_cast<Elem>(g[k])))
          return false;
      }
    return true;
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      // g is a 1-v-^-morphism by the incremental checks; verify f = g . d_L
      if (g[dl.top_index] != B.top()) return;
      for (Elem a = 0; a < L.size(); ++a)
        if (g[dl.generator_of[a]] != f[a]) return;
      ++out.extensions;
      return;
    }
    for (int v = 0; v < bn; ++v) {
      g[i] = v;
      if (consistent(i)) self(self, i + 1);
    }
    g[i] = -1;
  };
  rec(rec, 0);
  out.unique = out.extensions == 1;
  return out;
}

BaseClassification classify_base(const TopSpace& space,
                                 const std::vector<ElemSet>& base) {
  if (!is_topology(space.npoints, space.opens))
    raise(Errc::not_a_topology, "the open family is not a topology");
  for (const ElemSet& b : base)
    if (!space.is_open(b))
      raise(Errc::not_a_base, "base member is not open");

  BaseClassification out;
  out.is_base = is_base_for(space, base);

  const ElemSet full = space.full();
  bool has_empty = std::find(base.begin(), base.end(), ElemSet{}) != base.end();
  bool has_full = std::find(base.begin(), base.end(), full) != base.end();
  bool closed = true;
  for (const ElemSet& u : base)
    for (const ElemSet& v : base) {
      if (std::find(base.begin(), base.end(), u | v) == base.end())
        closed = false;
      if (std::find(base.begin(), base.end(), u & v) == base.end())
        closed = false;
    }
  out.annular = has_empty && has_full && closed && out.is_base;

  // Wallman: u in U in B admits V in B with u not in V and U u V = X
  out.wallman = out.annular;
  for (int u = 0; u < space.npoints && out.wallman; ++u)
    for (std::size_t ui = 0; ui < base.size(); ++ui) {
      if (!base[ui].test(u)) continue;
      bool found = false;
      for (const ElemSet& v : base)
        if (!v.test(u) && (base[ui] | v) == full) {
          found = true;
          break;
        }
      if (!found) {
        out.wallman = false;
        out.wallman_witness = {u, static_cast<int>(ui)};
        break;
      }
    }

  // conjunctive: W strictly inside U admits V with V u W != X = V u U
  out.conjunctive_base = true;
  for (std::size_t wi = 0; wi < base.size() && out.conjunctive_base; ++wi)
    for (std::size_t ui = 0; ui < base.size(); ++ui) {
      if (base[wi] == base[ui] || !base[wi].subset_of(base[ui])) continue;
      bool found = false;
      for (const ElemSet& v : base)
        if ((v | base[wi]) != full && (v | base[ui]) == full) {
          found = true;
          break;
        }
      if (!found) {
        out.conjunctive_base = false;
        out.conjunctive_witness = {static_cast<int>(wi),
                                   static_cast<int>(ui)};
        break;
      }
    }

  if (out.wallman && !out.conjunctive_base)
    raise(Errc::internal_inconsistency,
          "a Wallman base must be conjunctive");
  return out;
}

EtaResult eta_embedding_check(const SetFamily& base) {
  const int np = base.npoints();
  TopSpace space = generate_topology(np, base.sets, base.point_names);
  if (!is_t1_topology(space))
    raise(Errc::precondition_failed, "the generated space is not T1");
  BaseClassification cls = classify_base(space, base.sets);
  if (!cls.wallman)
    raise(Errc::precondition_failed, "the family is not a Wallman base");

  JoinSemilattice LB = JoinSemilattice::from_set_family(base);
  std::vector<ElemSet> mx(np);
  for (int x = 0; x < np; ++x)
    for (Elem a = 0; a < LB.size(); ++a)
      if (!base.sets[a].test(x)) mx[x].set(a);

  EtaResult out;
  std::vector<int> point_map(np, -1);
  std::vector<ElemSet> points;
  TopSpace wtop;
  if (LB.size() >= 2) {
    MaxSpectrum s = spec_max(LB);
    points = s.points;
    wtop = s.topology;
  } else {
    points = {ElemSet{}};
    wtop = generate_topology(1, {ElemSet::full(1)});
  }
  for (int x = 0; x < np; ++x)
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == mx[x]) {
        point_map[x] = static_cast<int>(i);
        break;
      }

  out.injective = true;
  for (int x = 0; x < np; ++x) {
    if (point_map[x] < 0) out.injective = false;
    for (int y = x + 1; y < np; ++y)
      if (point_map[x] >= 0 && point_map[x] == point_map[y])
        out.injective = false;
  }
  if (!out.injective) return out;

  ElemSet image;
  for (int x = 0; x < np; ++x) image.set(point_map[x]);

  auto preimage = [&](const ElemSet& V) {
    ElemSet u;
    for (int x = 0; x < np; ++x)
      if (V.test(point_map[x])) u.set(x);
    return u;
  };
  out.continuous = true;
  for (const ElemSet& V : wtop.opens)
    if (!space.is_open(preimage(V))) out.continuous = false;

  out.open_onto_image = true;
  for (const ElemSet& U : space.opens) {
    ElemSet img;
    for (int x = U.first(); x >= 0; x = U.next(x)) img.set(point_map[x]);
    bool open_in_subspace = false;
    for (const ElemSet& V : wtop.opens)
      if ((V & image) == img) {
        open_in_subspace = true;
        break;
      }
    if (!open_in_subspace) out.open_onto_image = false;
  }

  out.dense_image = true;
  for (const ElemSet& V : wtop.opens)
    if (!V.empty() && !V.intersects(image)) out.dense_image = false;
  return out;
}

}  // namespace jslat
