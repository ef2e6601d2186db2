#include "jslat/ideals.hpp"

#include <algorithm>
#include <map>

namespace jslat {

SubsetClass classify_subset(const JoinSemilattice& L, const ElemSet& S) {
  SubsetClass c;
  c.downset = true;
  c.upset = true;
  for (int a = S.first(); a >= 0; a = S.next(a)) {
    if (!L.down(static_cast<Elem>(a)).subset_of(S)) c.downset = false;
    if (!L.up(static_cast<Elem>(a)).subset_of(S)) c.upset = false;
  }
  c.ideal = c.downset;
  for (int a = S.first(); a >= 0 && c.ideal; a = S.next(a))
    for (int b = S.first(); b >= 0; b = S.next(b))
      if (!S.test(L.join(static_cast<Elem>(a), static_cast<Elem>(b)))) {
        c.ideal = false;
        break;
      }

  auto is_filter = [&L](const ElemSet& F) {
    if (F.empty()) return false;
    for (int a = F.first(); a >= 0; a = F.next(a))
      if (!L.up(static_cast<Elem>(a)).subset_of(F)) return false;
    for (int a = F.first(); a >= 0; a = F.next(a))
      for (int b = F.first(); b >= 0; b = F.next(b)) {
        ElemSet lower =
            L.down(static_cast<Elem>(a)) & L.down(static_cast<Elem>(b)) & F;
        if (lower.empty()) return false;
      }
    return true;
  };
  c.filter = is_filter(S);
  c.prime_ideal = !S.empty() && c.ideal && is_filter(S.complement(L.size()));
  return c;
}

ElemSet principal_downset(const JoinSemilattice& L, Elem a) {
  if (a >= L.size()) raise(Errc::range_error, "element id out of range");
  return L.down(a);
}

ElemSet generated_ideal(const JoinSemilattice& L, const ElemSet& X) {
  if (X.empty()) return ElemSet{};
  return L.down(L.join_of(X));
}

IdealLattice ideal_lattice(const JoinSemilattice& L) {
  const int n = L.size();
  IdealLattice idl;
  idl.ideals.push_back(ElemSet{});  // the empty ideal
  for (Elem a = 0; a < n; ++a) idl.ideals.push_back(L.down(a));
  idl.empty_index = 0;
  idl.full_index = 1 + L.top();
  idl.embedding.resize(n);
  for (Elem a = 0; a < n; ++a) idl.embedding[a] = static_cast<Elem>(1 + a);

  const int m = n + 1;
  std::vector<std::vector<Elem>> table(m, std::vector<Elem>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == 0) {
        table[i][j] = static_cast<Elem>(j);
      } else if (j == 0) {
        table[i][j] = static_cast<Elem>(i);
      } else {
        // <down(a) u down(b)> = down(a v b)
        table[i][j] = static_cast<Elem>(
            1 + L.join(static_cast<Elem>(i - 1), static_cast<Elem>(j - 1)));
      }
    }
  std::vector<std::string> names;
  names.reserve(m);
  for (int i = 0; i < m; ++i) names.push_back(render_subset(L, idl.ideals[i]));
  idl.as_semilattice =
      JoinSemilattice::from_join_table(std::move(names), table, m);
  return idl;
}

// {} plus one principal ideal per element, in element order.
static std::vector<ElemSet> all_ideals(const JoinSemilattice& L) {
  std::vector<ElemSet> out;
  out.reserve(L.size() + 1);
  out.push_back(ElemSet{});
  for (Elem a = 0; a < L.size(); ++a) out.push_back(L.down(a));
  return out;
}

std::vector<ElemSet> prime_ideals(const JoinSemilattice& L) {
  std::vector<ElemSet> out;
  for (const ElemSet& I : all_ideals(L))
    if (classify_subset(L, I).prime_ideal) out.push_back(I);
  return out;
}

std::vector<ElemSet> maximal_ideals(const JoinSemilattice& L,
                                    std::optional<Elem> relative_to) {
  const Elem a = relative_to.value_or(L.top());
  if (a >= L.size()) raise(Errc::range_error, "element id out of range");
  std::vector<ElemSet> out;
  for (const ElemSet& start : all_ideals(L)) {
    if (start.test(a)) continue;
    // grow greedily: once an element is blocked it stays blocked
    ElemSet J = start;
    for (Elem x = 0; x < L.size(); ++x) {
      if (J.test(x)) continue;
      ElemSet bigger = generated_ideal(L, J | ElemSet::single(x));
      if (!bigger.test(a)) J = bigger;
    }
    if (std::find(out.begin(), out.end(), J) == out.end()) out.push_back(J);
  }
  return out;
}

std::vector<ElemSet> maximal_proper_ideals(const JoinSemilattice& L) {
  std::vector<ElemSet> out;
  for (const ElemSet& m : maximal_ideals(L))
    if (!m.empty()) out.push_back(m);
  return out;
}

}  // namespace jslat
