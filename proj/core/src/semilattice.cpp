#include "jslat/semilattice.hpp"

#include <map>
#include <sstream>

namespace jslat {

namespace {

std::string triple_text(const std::vector<std::string>& names, Elem a, Elem b,
                        Elem c) {
  return "(" + names[a] + "," + names[b] + "," + names[c] + ")";
}

}  // namespace

std::string render_point_set(const std::vector<std::string>& point_names,
                             const ElemSet& s) {
  if (s.empty()) return "∅";
  bool terse = true;
  for (const auto& n : point_names)
    if (n.size() != 1) terse = false;
  std::string out;
  if (!terse) out += "{";
  bool first = true;
  for (int x = s.first(); x >= 0; x = s.next(x)) {
    if (!first && !terse) out += ",";
    out += point_names[x];
    first = false;
  }
  if (!terse) out += "}";
  return out;
}

std::string render_subset(const JoinSemilattice& L, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  for (int x = s.first(); x >= 0; x = s.next(x)) {
    if (!first) out += ",";
    out += L.name(static_cast<Elem>(x));
    first = false;
  }
  return out + "}";
}

void JoinSemilattice::derive_order() {
  up_.assign(n_, ElemSet{});
  down_.assign(n_, ElemSet{});
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (join_[a * n_ + b] == b) {
        up_[a].set(b);
        down_[b].set(a);
      }
  Elem t = 0;
  for (int a = 1; a < n_; ++a) t = join_[t * n_ + a];
  top_ = t;
  for (int a = 0; a < n_; ++a)
    if (down_[a].count() == 1) {
      bool least = true;
      for (int b = 0; b < n_ && least; ++b)
        if (!up_[a].test(b)) least = false;
      if (least) {
        bottom_ = static_cast<Elem>(a);
        break;
      }
    }
}

JoinSemilattice JoinSemilattice::from_join_table(
    std::vector<std::string> names, const std::vector<std::vector<Elem>>& table,
    int validation_guard) {
  const int n = static_cast<int>(names.size());
  if (n == 0) raise(Errc::range_error, "empty carrier");
  if (n > kMaxElements)
    raise(Errc::size_guard, "carrier exceeds the representable maximum of " +
                                std::to_string(kMaxElements));
  if (n > validation_guard)
    raise(Errc::size_guard,
          "carrier of " + std::to_string(n) +
              " elements exceeds the validation guard of " +
              std::to_string(validation_guard));
  if (static_cast<int>(table.size()) != n)
    raise(Errc::range_error, "join table is not " + std::to_string(n) + "x" +
                                 std::to_string(n));
  for (const auto& row : table)
    if (static_cast<int>(row.size()) != n)
      raise(Errc::range_error, "join table row of wrong length");
  for (const auto& row : table)
    for (Elem v : row)
      if (v >= n) raise(Errc::range_error, "join table entry out of range");

  for (int a = 0; a < n; ++a)
    if (table[a][a] != a)
      raise(Errc::axiom_violation,
            "idempotence fails at " + triple_text(names, static_cast<Elem>(a),
                                                  static_cast<Elem>(a),
                                                  static_cast<Elem>(a)));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table[a][b] != table[b][a])
        raise(Errc::axiom_violation,
              "commutativity fails at (" + names[a] + "," + names[b] + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          raise(Errc::axiom_violation,
                "associativity fails at " +
                    triple_text(names, static_cast<Elem>(a),
                                static_cast<Elem>(b), static_cast<Elem>(c)));

  JoinSemilattice L;
  L.n_ = n;
  L.names_ = std::move(names);
  L.join_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) L.join_[a * n + b] = table[a][b];
  L.derive_order();
  return L;
}

JoinSemilattice JoinSemilattice::from_set_family(const SetFamily& family,
                                                 int validation_guard) {
  const int n = static_cast<int>(family.sets.size());
  if (n == 0) raise(Errc::range_error, "empty set family");
  const ElemSet universe = ElemSet::full(family.npoints());
  std::map<ElemSet, int> index;
  for (int i = 0; i < n; ++i) {
    if (!family.sets[i].subset_of(universe))
      raise(Errc::range_error, "family member outside the universe");
    if (index.count(family.sets[i]))
      raise(Errc::range_error,
            "duplicate family member " +
                render_point_set(family.point_names, family.sets[i]));
    index[family.sets[i]] = i;
  }
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = index.find(family.sets[i] | family.sets[j]);
      if (it == index.end())
        raise(Errc::not_union_closed,
              "union of " +
                  render_point_set(family.point_names, family.sets[i]) +
                  " and " +
                  render_point_set(family.point_names, family.sets[j]) +
                  " is not in the family");
      table[i][j] = static_cast<Elem>(it->second);
    }
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i)
    names.push_back(render_point_set(family.point_names, family.sets[i]));
  JoinSemilattice L = from_join_table(std::move(names), table, validation_guard);
  L.origin_ = family;
  return L;
}

Elem JoinSemilattice::join_of(const ElemSet& s) const {
  int x = s.first();
  Elem acc = static_cast<Elem>(x);
  for (x = s.next(x); x >= 0; x = s.next(x))
    acc = join(acc, static_cast<Elem>(x));
  return acc;
}

OrderRel order_query(const JoinSemilattice& L, Elem a, Elem b) {
  if (a >= L.size() || b >= L.size())
    raise(Errc::range_error, "element id out of range");
  if (a == b) return OrderRel::equal;
  if (L.leq(a, b)) return OrderRel::leq;
  if (L.leq(b, a)) return OrderRel::geq;
  return OrderRel::incomparable;
}

MeetStructure meet_structure(const JoinSemilattice& L) {
  const int n = L.size();
  MeetStructure out;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      ElemSet lower = L.down(a) & L.down(b);
      if (lower.empty()) {
        if (!out.no_meet) out.no_meet = {a, b};
        continue;
      }
      // the lower-bound set of a pair is join-closed, so its join is the glb
      table[a * n + b] = L.join_of(lower);
    }
  if (!out.no_meet) out.table = std::move(table);
  return out;
}

MorphismFlags check_morphism(const MorphismTable& f) {
  const JoinSemilattice& L = *f.source;
  const JoinSemilattice& M = *f.target;
  if (static_cast<int>(f.map.size()) != L.size())
    raise(Errc::size_mismatch, "morphism table does not cover the source");
  for (Elem v : f.map)
    if (v >= M.size())
      raise(Errc::size_mismatch, "morphism image out of range");

  MorphismFlags flags;
  flags.preserves_join = true;
  for (Elem a = 0; a < L.size() && flags.preserves_join; ++a)
    for (Elem b = 0; b < L.size(); ++b)
      if (f.map[L.join(a, b)] != M.join(f.map[a], f.map[b])) {
        flags.preserves_join = false;
        flags.join_witness = {a, b};
        break;
      }
  flags.preserves_top = f.map[L.top()] == M.top();

  MeetStructure ml = meet_structure(L);
  MeetStructure mm = meet_structure(M);
  if (ml.is_lattice() && mm.is_lattice()) {
    flags.preserves_meet = true;
    for (Elem a = 0; a < L.size() && *flags.preserves_meet; ++a)
      for (Elem b = 0; b < L.size(); ++b)
        if (f.map[ml.meet(L.size(), a, b)] !=
            mm.meet(M.size(), f.map[a], f.map[b])) {
          flags.preserves_meet = false;
          flags.meet_witness = {a, b};
          break;
        }
  }
  return flags;
}

bool is_join_morphism(const MorphismTable& f) {
  const JoinSemilattice& L = *f.source;
  const JoinSemilattice& M = *f.target;
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem b = a; b < L.size(); ++b)
      if (f.map[L.join(a, b)] != M.join(f.map[a], f.map[b])) return false;
  return true;
}

bool is_one_join_morphism(const MorphismTable& f) {
  return is_join_morphism(f) && f.map[f.source->top()] == f.target->top();
}

}  // namespace jslat
