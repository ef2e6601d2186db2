#include "jslat/pierce.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jslat {

std::string Congruence::partition_string(const JoinSemilattice& L) const {
  std::string out;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (k) out += "|";
    out += "{";
    bool first = true;
    for (int x = classes[k].first(); x >= 0; x = classes[k].next(x)) {
      if (!first) out += ",";
      out += L.name(static_cast<Elem>(x));
      first = false;
    }
    out += "}";
  }
  return out;
}

Congruence Congruence::from_class_of(const JoinSemilattice& L,
                                     std::vector<int> class_of) {
  Congruence R;
  R.n = L.size();
  // renumber classes by least member
  std::vector<int> order;
  std::vector<int> remap(class_of.size(), -1);
  for (int x = 0; x < R.n; ++x)
    if (remap[class_of[x]] < 0) {
      remap[class_of[x]] = static_cast<int>(order.size());
      order.push_back(class_of[x]);
    }
  R.class_of.resize(R.n);
  R.classes.assign(order.size(), ElemSet{});
  for (int x = 0; x < R.n; ++x) {
    R.class_of[x] = remap[class_of[x]];
    R.classes[R.class_of[x]].set(x);
  }
  return R;
}

Congruence Congruence::equality(const JoinSemilattice& L) {
  std::vector<int> cls(L.size());
  std::iota(cls.begin(), cls.end(), 0);
  return from_class_of(L, std::move(cls));
}

Congruence Congruence::full(const JoinSemilattice& L) {
  return from_class_of(L, std::vector<int>(L.size(), 0));
}

Congruence Congruence::from_keys(const JoinSemilattice& L,
                                 const std::vector<ElemSet>& keys) {
  std::map<ElemSet, int> bucket;
  std::vector<int> cls(L.size());
  for (int x = 0; x < L.size(); ++x) {
    auto [it, fresh] =
        bucket.emplace(keys[x], static_cast<int>(bucket.size()));
    cls[x] = it->second;
    (void)fresh;
  }
  return from_class_of(L, std::move(cls));
}

ElemSet supercomplements(const JoinSemilattice& L, const ElemSet& Y, Elem a) {
  ElemSet out;
  for (Elem x = 0; x < L.size(); ++x)
    if (Y.test(L.join(x, a))) out.set(x);
  return out;
}

Congruence pierce_congruence(const JoinSemilattice& L, const ElemSet& Y) {
  std::vector<ElemSet> keys(L.size());
  for (Elem a = 0; a < L.size(); ++a) keys[a] = supercomplements(L, Y, a);
  return Congruence::from_keys(L, keys);
}

Congruence pierce_congruence_at(const JoinSemilattice& L, Elem c) {
  return pierce_congruence(L, L.up(c));
}

namespace {

// witness triple (a, a', b) with a ~ a' but a v b !~ a' v b, if any
std::optional<std::array<Elem, 3>> compatibility_witness(
    const JoinSemilattice& L, const Congruence& R) {
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem a2 = a + 1; a2 < L.size(); ++a2) {
      if (R.class_of[a] != R.class_of[a2]) continue;
      for (Elem b = 0; b < L.size(); ++b)
        if (R.class_of[L.join(a, b)] != R.class_of[L.join(a2, b)])
          return std::array<Elem, 3>{a, a2, b};
    }
  return std::nullopt;
}

}  // namespace

QuotientResult quotient(const JoinSemilattice& L, const Congruence& R) {
  if (static_cast<int>(R.class_of.size()) != L.size())
    raise(Errc::not_a_congruence, "partition does not cover the carrier");
  if (auto w = compatibility_witness(L, R))
    raise(Errc::not_a_congruence,
          "join-compatibility fails at (" + L.name((*w)[0]) + "," +
              L.name((*w)[1]) + ") with " + L.name((*w)[2]));

  const int k = R.num_classes();
  std::vector<std::vector<Elem>> table(k, std::vector<Elem>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Elem a = static_cast<Elem>(R.classes[i].first());
      Elem b = static_cast<Elem>(R.classes[j].first());
      table[i][j] = static_cast<Elem>(R.class_of[L.join(a, b)]);
    }
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 0; i < k; ++i)
    names.push_back("[" + L.name(static_cast<Elem>(R.classes[i].first())) +
                    "]");
  QuotientResult out;
  out.class_names = names;
  out.quotient = JoinSemilattice::from_join_table(std::move(names), table,
                                                  std::max(k, 1));
  out.projection.resize(L.size());
  for (int x = 0; x < L.size(); ++x)
    out.projection[x] = static_cast<Elem>(R.class_of[x]);
  return out;
}

std::vector<Congruence> enumerate_congruences(const JoinSemilattice& L,
                                              int guard) {
  const int n = L.size();
  if (n > guard)
    raise(Errc::size_guard, "congruence enumeration capped at " +
                                std::to_string(guard) + " elements");
  std::vector<Congruence> out;
  std::vector<int> rgs(n, 0);

  // partial compatibility: only pairs whose joins are already assigned can
  // be decided; the full check runs at the leaf
  auto partial_ok = [&](int upto) {
    for (int a = 0; a <= upto; ++a)
      for (int b = a + 1; b <= upto; ++b) {
        if (rgs[a] != rgs[b]) continue;
        for (int c = 0; c <= upto; ++c) {
          Elem ja = L.join(static_cast<Elem>(a), static_cast<Elem>(c));
          Elem jb = L.join(static_cast<Elem>(b), static_cast<Elem>(c));
          if (ja <= upto && jb <= upto && rgs[ja] != rgs[jb]) return false;
        }
      }
    return true;
  };

  auto rec = [&](auto&& self, int i, int maxc) -> void {
    if (i == n) {
      Congruence R = Congruence::from_class_of(L, rgs);
      if (!compatibility_witness(L, R)) out.push_back(std::move(R));
      return;
    }
    for (int c = 0; c <= maxc + 1; ++c) {
      rgs[i] = c;
      if (partial_ok(i)) self(self, i + 1, std::max(maxc, c));
    }
  };
  rec(rec, 0, -1);
  return out;
}

ConjunctivityProfile conjunctivity_profile(const JoinSemilattice& L) {
  const int n = L.size();
  const Elem one = L.top();
  ConjunctivityProfile p;

  Congruence r1 = pierce_congruence(L, ElemSet::single(one));
  p.r1_equality = r1.num_classes() == n;

  std::vector<ElemSet> sc(n);
  for (Elem a = 0; a < n; ++a)
    sc[a] = supercomplements(L, ElemSet::single(one), a);
  p.supercomplements_injective = true;
  for (Elem a = 0; a < n && p.supercomplements_injective; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (sc[a] == sc[b]) {
        p.supercomplements_injective = false;
        break;
      }

  p.two_sided_witness = true;
  for (Elem a = 0; a < n && p.two_sided_witness; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      bool found = false;
      for (Elem w = 0; w < n && !found; ++w)
        found = (L.join(w, a) == one) != (L.join(w, b) == one);
      if (!found) {
        p.two_sided_witness = false;
        break;
      }
    }

  auto witness_between = [&](Elem a, Elem b) {
    // w with a <= w < 1 = w v b
    for (Elem w = 0; w < n; ++w)
      if (L.leq(a, w) && w != one && L.join(w, b) == one) return true;
    return false;
  };
  p.nleq_witness = true;
  for (Elem a = 0; a < n && p.nleq_witness; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!L.leq(b, a) && !witness_between(a, b)) {
        p.nleq_witness = false;
        break;
      }
  p.strict_witness = true;
  for (Elem a = 0; a < n && p.strict_witness; ++a)
    for (Elem b = 0; b < n; ++b)
      if (L.leq(a, b) && a != b && !witness_between(a, b)) {
        p.strict_witness = false;
        break;
      }

  std::vector<ElemSet> max = maximal_ideals(L);
  p.principal_ideals_max_intersections = true;
  for (Elem a = 0; a < n; ++a) {
    ElemSet meet = L.all();
    for (const ElemSet& m : max)
      if (m.test(a)) meet &= m;
    if (meet != L.down(a)) {
      p.principal_ideals_max_intersections = false;
      break;
    }
  }

  const bool v = p.r1_equality;
  if (p.supercomplements_injective != v || p.two_sided_witness != v ||
      p.nleq_witness != v || p.strict_witness != v ||
      p.principal_ideals_max_intersections != v)
    raise(Errc::internal_inconsistency,
          "conjunctivity formulations disagree");
  p.overall = v;
  return p;
}

bool is_conjunctive(const JoinSemilattice& L) {
  return conjunctivity_profile(L).overall;
}

std::vector<ElemSet> ideal_supercomplements(const JoinSemilattice& L, Elem a) {
  if (a >= L.size()) raise(Errc::range_error, "element id out of range");
  std::vector<ElemSet> out;
  ElemSet carrier = L.all();
  ElemSet empty;
  if (generated_ideal(L, ElemSet::single(a)) == carrier) out.push_back(empty);
  for (Elem w = 0; w < L.size(); ++w)
    if (L.down(L.join(w, a)) == carrier) out.push_back(L.down(w));
  return out;
}

IdealConjunctivityProfile is_ideally_conjunctive(const JoinSemilattice& L) {
  const int n = L.size();
  IdealConjunctivityProfile p;

  IdealLattice idl = ideal_lattice(L);
  const JoinSemilattice& K = idl.as_semilattice;

  // 1. restriction of R^1(Id L) to the principal ideals is equality
  Congruence r1 = pierce_congruence(K, ElemSet::single(K.top()));
  p.r1_idl_restricted_equality = true;
  for (Elem a = 0; a < n && p.r1_idl_restricted_equality; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (r1.class_of[idl.embedding[a]] == r1.class_of[idl.embedding[b]]) {
        p.r1_idl_restricted_equality = false;
        break;
      }

  // 2. elements with equal ideal-supercomplement sets are equal
  auto isc_key = [&](Elem a) {
    ElemSet key;  // over Id L indices
    for (int i = 0; i < K.size(); ++i)
      if (K.join(static_cast<Elem>(i), idl.embedding[a]) == K.top())
        key.set(i);
    return key;
  };
  std::vector<ElemSet> keys(n);
  for (Elem a = 0; a < n; ++a) keys[a] = isc_key(a);
  p.ideal_supercomplements_injective = true;
  for (Elem a = 0; a < n && p.ideal_supercomplements_injective; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (keys[a] == keys[b]) {
        p.ideal_supercomplements_injective = false;
        break;
      }

  // 3. distinct elements separated by some ideal W
  p.two_sided_ideal_witness = true;
  for (Elem a = 0; a < n && p.two_sided_ideal_witness; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      bool found = false;
      for (int i = 0; i < K.size() && !found; ++i)
        found = (K.join(static_cast<Elem>(i), idl.embedding[a]) == K.top()) !=
                (K.join(static_cast<Elem>(i), idl.embedding[b]) == K.top());
      if (!found) {
        p.two_sided_ideal_witness = false;
        break;
      }
    }

  // 4./5. W with a in W != L = W v b
  auto ideal_witness_between = [&](Elem a, Elem b) {
    for (int i = 0; i < K.size(); ++i) {
      if (i == idl.full_index) continue;
      if (idl.ideals[i].test(a) &&
          K.join(static_cast<Elem>(i), idl.embedding[b]) == K.top())
        return true;
    }
    return false;
  };
  p.nleq_ideal_witness = true;
  for (Elem a = 0; a < n && p.nleq_ideal_witness; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!L.leq(b, a) && !ideal_witness_between(a, b)) {
        p.nleq_ideal_witness = false;
        break;
      }
  p.strict_ideal_witness = true;
  for (Elem a = 0; a < n && p.strict_ideal_witness; ++a)
    for (Elem b = 0; b < n; ++b)
      if (L.leq(a, b) && a != b && !ideal_witness_between(a, b)) {
        p.strict_ideal_witness = false;
        break;
      }

  // 6. every principal ideal is an intersection of maximal proper ideals
  std::vector<ElemSet> maxp = maximal_proper_ideals(L);
  p.principal_ideals_maxproper_intersections = true;
  for (Elem a = 0; a < n; ++a) {
    ElemSet meet = L.all();
    for (const ElemSet& m : maxp)
      if (L.down(a).subset_of(m)) meet &= m;
    if (meet != L.down(a)) {
      p.principal_ideals_maxproper_intersections = false;
      break;
    }
  }

  const bool v = p.r1_idl_restricted_equality;
  if (p.ideal_supercomplements_injective != v ||
      p.two_sided_ideal_witness != v || p.nleq_ideal_witness != v ||
      p.strict_ideal_witness != v ||
      p.principal_ideals_maxproper_intersections != v)
    raise(Errc::internal_inconsistency,
          "ideal-conjunctivity formulations disagree");
  p.overall = v;
  return p;
}

std::vector<ElemSet> enumerate_upsets(const JoinSemilattice& L) {
  const int n = L.size();
  if (n > 20)
    raise(Errc::size_guard, "up-set enumeration capped at 20 elements");
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ElemSet U;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) U.set(i);
    bool up = true;
    for (int a = U.first(); a >= 0 && up; a = U.next(a))
      up = L.up(static_cast<Elem>(a)).subset_of(U);
    if (up) out.push_back(U);
  }
  return out;
}

std::vector<ElemSet> enumerate_filters(const JoinSemilattice& L) {
  std::vector<ElemSet> out;
  for (const ElemSet& U : enumerate_upsets(L))
    if (classify_subset(L, U).filter) out.push_back(U);
  return out;
}

}  // namespace jslat
