#include "jslat/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "jslat/distributivity.hpp"
#include "jslat/io.hpp"
#include "jslat/pierce.hpp"
#include "jslat/spectrum.hpp"

namespace jslat {

namespace {

// Iso-invariant element coloring, refined to a fixpoint: start from
// (|down|, |up|) and fold in the sorted colors of the up- and down-sets.
std::vector<int> stable_coloring(const JoinSemilattice& L) {
  const int n = L.size();
  std::vector<int> color(n, 0);
  auto refine = [&]() {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int a = 0; a < n; ++a) {
      std::vector<int> key;
      key.push_back(color[a]);
      key.push_back(L.down(static_cast<Elem>(a)).count());
      key.push_back(L.up(static_cast<Elem>(a)).count());
      std::vector<int> dn, up;
      for (int x = L.down(static_cast<Elem>(a)).first(); x >= 0;
           x = L.down(static_cast<Elem>(a)).next(x))
        dn.push_back(color[x]);
      for (int x = L.up(static_cast<Elem>(a)).first(); x >= 0;
           x = L.up(static_cast<Elem>(a)).next(x))
        up.push_back(color[x]);
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      key.insert(key.end(), dn.begin(), dn.end());
      key.push_back(-1);
      key.insert(key.end(), up.begin(), up.end());
      keys[a] = {std::move(key), a};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [k, a] : keys) ids.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    std::vector<int> fresh(n);
    for (const auto& [k, a] : keys) fresh[a] = ids[k];
    bool changed = fresh != color;
    color = std::move(fresh);
    return changed;
  };
  while (refine()) {
  }
  return color;
}

std::vector<Elem> permuted_table(const JoinSemilattice& L,
                                 const std::vector<int>& old_of_new) {
  const int n = L.size();
  std::vector<int> new_of_old(n);
  for (int i = 0; i < n; ++i) new_of_old[old_of_new[i]] = i;
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t[i * n + j] = static_cast<Elem>(
          new_of_old[L.join(static_cast<Elem>(old_of_new[i]),
                            static_cast<Elem>(old_of_new[j]))]);
  return t;
}

}  // namespace

CanonicalForm canonical_form(const JoinSemilattice& L) {
  const int n = L.size();
  std::vector<int> color = stable_coloring(L);

  // group elements by color, in color order
  std::vector<std::vector<int>> groups;
  std::map<int, int> group_of_color;
  std::vector<int> order;
  {
    std::vector<std::pair<int, int>> by_color;
    for (int a = 0; a < n; ++a) by_color.emplace_back(color[a], a);
    std::sort(by_color.begin(), by_color.end());
    int cur = -1;
    for (auto [c, a] : by_color) {
      if (groups.empty() || c != cur) {
        groups.emplace_back();
        cur = c;
      }
      groups.back().push_back(a);
    }
  }

  CanonicalForm best;
  best.size = n;
  bool have = false;
  // odometer over per-group permutations
  std::vector<std::vector<int>> perm = groups;
  auto consider = [&]() {
    std::vector<int> old_of_new;
    for (const auto& g : perm) old_of_new.insert(old_of_new.end(), g.begin(), g.end());
    std::vector<Elem> t = permuted_table(L, old_of_new);
    if (!have || t < best.table) {
      best.table = std::move(t);
      have = true;
    }
  };
  auto rec = [&](auto&& self, std::size_t gi) -> void {
    if (gi == perm.size()) {
      consider();
      return;
    }
    std::sort(perm[gi].begin(), perm[gi].end());
    do {
      self(self, gi + 1);
    } while (std::next_permutation(perm[gi].begin(), perm[gi].end()));
  };
  rec(rec, 0);
  return best;
}

JoinSemilattice from_canonical(const CanonicalForm& c) {
  const int n = c.size;
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = c.table[i * n + j];
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return JoinSemilattice::from_join_table(std::move(names), table, n);
}

bool isomorphic_bruteforce(const JoinSemilattice& A, const JoinSemilattice& B) {
  const int n = A.size();
  if (B.size() != n) return false;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b)
        if (perm[A.join(static_cast<Elem>(a), static_cast<Elem>(b))] !=
            B.join(static_cast<Elem>(perm[a]), static_cast<Elem>(perm[b]))) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<JoinSemilattice> enumerate_semilattices(int n, int guard) {
  if (n < 1) raise(Errc::range_error, "size must be positive");
  if (n > guard)
    raise(Errc::size_guard, "exhaustive enumeration capped at size " +
                                std::to_string(guard));
  std::set<CanonicalForm> seen;

  // naturally labeled posets: element j's strict downset is a downward
  // closed subset of {0..j-1}
  std::vector<ElemSet> down(n);
  std::vector<ElemSet> up(n);
  auto leaf = [&]() {
    for (int i = 0; i < n; ++i) up[i] = ElemSet{};
    for (int j = 0; j < n; ++j)
      for (int i = down[j].first(); i >= 0; i = down[j].next(i))
        up[i].set(j);
    // every pair needs a least upper bound; if one exists it is the
    // numerically first common upper bound
    std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        ElemSet ub = up[i] & up[j];
        if (ub.empty()) return;
        int k = ub.first();
        if (!ub.subset_of(up[k])) return;
        table[i][j] = table[j][i] = static_cast<Elem>(k);
      }
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    JoinSemilattice L = JoinSemilattice::from_join_table(names, table, n);
    seen.insert(canonical_form(L));
  };
  auto rec = [&](auto&& self, int j) -> void {
    if (j == n) {
      leaf();
      return;
    }
    const std::uint32_t limit = std::uint32_t{1} << j;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
      ElemSet D;
      for (int i = 0; i < j; ++i)
        if ((mask >> i) & 1) D.set(i);
      bool closed = true;
      for (int i = D.first(); i >= 0 && closed; i = D.next(i))
        closed = down[i].subset_of(D);
      if (!closed) continue;
      down[j] = D;
      down[j].set(j);
      self(self, j + 1);
    }
  };
  rec(rec, 0);

  std::vector<JoinSemilattice> out;
  out.reserve(seen.size());
  for (const CanonicalForm& c : seen) out.push_back(from_canonical(c));
  return out;
}

std::vector<JoinSemilattice> sample_union_closed(int npoints, int count,
                                                 std::uint64_t seed) {
  if (npoints < 1 || npoints > 6)
    raise(Errc::size_guard, "sampling universes are capped at 6 points");
  std::mt19937_64 rng(seed);
  std::vector<JoinSemilattice> out;
  std::vector<std::string> point_names;
  for (int i = 0; i < npoints; ++i)
    point_names.push_back(std::string(1, static_cast<char>('a' + i)));
  const std::uint32_t space = std::uint32_t{1} << npoints;
  for (int k = 0; k < count; ++k) {
    std::uniform_int_distribution<int> gens_dist(1, 2 * npoints);
    std::uniform_int_distribution<std::uint32_t> mask_dist(0, space - 1);
    std::set<std::uint32_t> family;
    const int gens = gens_dist(rng);
    for (int g = 0; g < gens; ++g) family.insert(mask_dist(rng));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::uint32_t> cur(family.begin(), family.end());
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j)
          if (family.insert(cur[i] | cur[j]).second) grew = true;
    }
    SetFamily f;
    f.point_names = point_names;
    for (std::uint32_t mask : family) {
      ElemSet s;
      for (int i = 0; i < npoints; ++i)
        if ((mask >> i) & 1) s.set(i);
      f.sets.push_back(s);
    }
    out.push_back(JoinSemilattice::from_set_family(f, kMaxElements));
  }
  return out;
}

namespace {

struct PredOutcome {
  bool satisfied = false;
  bool violated = false;
  std::vector<std::string> detail;
};

struct PredicateImpl {
  PredicateInfo info;
  PredOutcome (*eval)(const JoinSemilattice&);
};

PredOutcome eval_no_prime(const JoinSemilattice& L) {
  PredOutcome o;
  o.satisfied = prime_ideals(L).empty();
  if (o.satisfied) o.detail.push_back("no prime ideals");
  return o;
}

PredOutcome eval_non_conjunctive(const JoinSemilattice& L) {
  PredOutcome o;
  o.satisfied = !is_conjunctive(L);
  return o;
}

PredOutcome eval_conj_max_not_prime(const JoinSemilattice& L) {
  PredOutcome o;
  if (!is_conjunctive(L)) return o;
  for (const ElemSet& m : maximal_proper_ideals(L))
    if (!classify_subset(L, m).prime_ideal) {
      o.satisfied = true;
      o.detail.push_back("non-prime maximal ideal " + render_subset(L, m));
      break;
    }
  return o;
}

PredOutcome eval_all_maximal_prime_nondist(const JoinSemilattice& L) {
  PredOutcome o;
  if (!is_conjunctive(L) || is_distributive(L).distributive) return o;
  for (const ElemSet& m : maximal_proper_ideals(L))
    if (!classify_subset(L, m).prime_ideal) return o;
  o.satisfied = true;
  for (const ElemSet& m : maximal_proper_ideals(L))
    o.detail.push_back("maximal (prime) ideal " + render_subset(L, m));
  return o;
}

PredOutcome eval_guarantee(const JoinSemilattice& L) {
  PredOutcome o;
  if (!L.bottom() || !is_conjunctive(L) || is_distributive(L).distributive)
    return o;
  bool found = false;
  for (const ElemSet& m : maximal_proper_ideals(L))
    if (!classify_subset(L, m).prime_ideal) {
      found = true;
      o.detail.push_back("witness " + render_subset(L, m));
      break;
    }
  o.satisfied = found;
  o.violated = !found;
  if (!found) o.detail.push_back("guarantee violated: all maximal ideals prime");
  return o;
}

PredOutcome eval_quotient_collapse(const JoinSemilattice& L) {
  PredOutcome o;
  if (!is_distributive(L).distributive) return o;
  for (const ElemSet& U : enumerate_upsets(L)) {
    Congruence r = pierce_congruence(L, U);
    QuotientResult q = quotient(L, r);
    if (!is_distributive(q.quotient).distributive) {
      o.satisfied = true;
      o.detail.push_back("up-set " + render_subset(L, U) +
                         " gives a non-distributive quotient " +
                         r.partition_string(L));
    }
  }
  return o;
}

PredOutcome eval_epimorph_collapse(const JoinSemilattice& L) {
  PredOutcome o;
  if (!is_distributive(L).distributive) return o;
  for (const Congruence& q : enumerate_congruences(L)) {
    QuotientResult r = quotient(L, q);
    if (!is_distributive(r.quotient).distributive) {
      o.satisfied = true;
      o.detail.push_back("congruence " + q.partition_string(L) +
                         " gives a non-distributive quotient");
    }
  }
  return o;
}

PredOutcome eval_ideal_conj_agreement(const JoinSemilattice& L) {
  PredOutcome o;
  bool conj = is_conjunctive(L);
  bool ideal = is_ideally_conjunctive(L).overall;
  o.satisfied = conj == ideal;
  o.violated = !o.satisfied;
  return o;
}

PredOutcome eval_qphi_strict(const JoinSemilattice& L) {
  PredOutcome o;
  if (L.size() < 2 || L.size() > 4 || !is_conjunctive(L)) return o;
  for (int m = 2; m <= 4; ++m) {
    for (const JoinSemilattice& M : enumerate_semilattices(m)) {
      if (!is_conjunctive(M)) continue;
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
        if (!rep.strict_pairs.empty()) {
          o.satisfied = true;
          o.detail.push_back(
              "strict inclusion against a " + std::to_string(nm) +
              "-element target at pair (" +
              L.name(rep.strict_pairs.front().first) + "," +
              L.name(rep.strict_pairs.front().second) + ")");
          return o;
        }
      }
    }
  }
  return o;
}

const std::vector<PredicateImpl>& registry() {
  static const std::vector<PredicateImpl> impls = {
      {{"no-prime-ideals", "structures with zero prime ideals", 7},
       eval_no_prime},
      {{"non-conjunctive", "structures that fail conjunctivity", 7},
       eval_non_conjunctive},
      {{"conjunctive-max-not-prime",
        "conjunctive structures with a non-prime maximal ideal", 7},
       eval_conj_max_not_prime},
      {{"all-maximal-prime-nondist",
        "conjunctive non-distributive structures whose maximal ideals are "
        "all prime",
        7},
       eval_all_maximal_prime_nondist},
      {{"max-not-prime-guarantee",
        "bottomed conjunctive non-distributive structures must have a "
        "non-prime maximal ideal",
        7},
       eval_guarantee},
      {{"distributive-quotient-nondistributive",
        "distributive structures with a Pierce-quotient L/R^U that is not "
        "distributive",
        7},
       eval_quotient_collapse},
      {{"distributive-epimorph-nondistributive",
        "distributive structures with a congruence quotient that is not "
        "distributive",
        6},
       eval_epimorph_collapse},
      {{"ideally-conjunctive-vs-conjunctive",
        "ideal conjunctivity must agree with conjunctivity on finite "
        "structures",
        7},
       eval_ideal_conj_agreement},
      {{"q-phi-strict-inclusion",
        "conjunctive morphisms whose relation loses an intersection "
        "strictly",
        4},
       eval_qphi_strict},
  };
  return impls;
}

const PredicateImpl& find_predicate(const std::string& id) {
  for (const PredicateImpl& p : registry())
    if (p.info.id == id) return p;
  raise(Errc::unknown_predicate, "no predicate named '" + id + "'");
}

}  // namespace

const std::vector<PredicateInfo>& registered_predicates() {
  static const std::vector<PredicateInfo> infos = [] {
    std::vector<PredicateInfo> v;
    for (const PredicateImpl& p : registry()) v.push_back(p.info);
    return v;
  }();
  return infos;
}

long ConjectureReport::total_tested() const {
  long t = 0;
  for (const SizeCensus& c : census) t += c.tested;
  return t;
}
long ConjectureReport::total_satisfied() const {
  long t = 0;
  for (const SizeCensus& c : census) t += c.satisfied;
  return t;
}
long ConjectureReport::total_violated() const {
  long t = 0;
  for (const SizeCensus& c : census) t += c.violated;
  return t;
}

ConjectureReport run_conjecture(const std::string& predicate, int max_size,
                                std::uint64_t seed) {
  const PredicateImpl& impl = find_predicate(predicate);
  if (max_size > impl.info.size_guard)
    raise(Errc::size_guard, "predicate '" + predicate + "' is capped at size " +
                                std::to_string(impl.info.size_guard));
  ConjectureReport rep;
  rep.predicate = impl.info.id;
  rep.description = impl.info.description;
  rep.seed = seed;
  rep.max_size = max_size;
  for (int n = 1; n <= max_size; ++n) {
    SizeCensus census;
    census.size = n;
    for (const JoinSemilattice& L : enumerate_semilattices(n)) {
      ++census.tested;
      PredOutcome o = impl.eval(L);
      if (o.satisfied) ++census.satisfied;
      if (o.violated) ++census.violated;
      if (o.satisfied || o.violated) {
        WitnessRecord w;
        w.size = n;
        w.form = canonical_form(L);
        w.document_json = structure_to_json_text(L);
        w.detail = o.detail;
        rep.witnesses.push_back(std::move(w));
      }
    }
    rep.census.push_back(census);
  }
  rep.notes.push_back(
      "exhaustive over one representative per isomorphism class");
  rep.notes.push_back(
      "finite instances always have a top; top-free phenomena are out of "
      "reach of this harness");
  return rep;
}

std::vector<ConjectureReport> run_conjectures(
    const std::vector<std::string>& predicates, int max_size,
    std::uint64_t seed) {
  std::vector<ConjectureReport> out;
  for (const std::string& id : predicates)
    out.push_back(run_conjecture(id, max_size, seed));
  return out;
}

std::optional<JoinSemilattice> minimal_counterexample(
    const std::string& predicate, int max_size) {
  const PredicateImpl& impl = find_predicate(predicate);
  const int cap = std::min(max_size, impl.info.size_guard);
  for (int n = 1; n <= cap; ++n)
    for (const JoinSemilattice& L : enumerate_semilattices(n))
      if (impl.eval(L).satisfied) return L;
  return std::nullopt;
}

}  // namespace jslat
