#include "jslat/topology.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace jslat {

bool TopSpace::is_open(const ElemSet& u) const {
  return std::find(opens.begin(), opens.end(), u) != opens.end();
}

TopSpace generate_topology(int npoints, const std::vector<ElemSet>& subbase,
                           std::vector<std::string> point_names,
                           std::size_t max_opens) {
  TopSpace X;
  X.npoints = npoints;
  if (point_names.empty())
    for (int i = 0; i < npoints; ++i)
      point_names.push_back("p" + std::to_string(i));
  X.point_names = std::move(point_names);

  std::set<ElemSet> pool(subbase.begin(), subbase.end());
  pool.insert(ElemSet::full(npoints));  // empty intersection
  // close under binary intersection to a pi-system
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElemSet> cur(pool.begin(), pool.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (pool.insert(cur[i] & cur[j]).second) grew = true;
    if (pool.size() > max_opens)
      raise(Errc::size_guard, "generated topology exceeds the open-set cap");
  }
  // then all unions
  pool.insert(ElemSet{});
  grew = true;
  while (grew) {
    grew = false;
    std::vector<ElemSet> cur(pool.begin(), pool.end());
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (pool.insert(cur[i] | cur[j]).second) grew = true;
    if (pool.size() > max_opens)
      raise(Errc::size_guard, "generated topology exceeds the open-set cap");
  }
  X.opens.assign(pool.begin(), pool.end());
  return X;
}

bool is_topology(int npoints, const std::vector<ElemSet>& opens) {
  std::set<ElemSet> pool(opens.begin(), opens.end());
  if (!pool.count(ElemSet{}) || !pool.count(ElemSet::full(npoints)))
    return false;
  for (const ElemSet& u : pool)
    for (const ElemSet& v : pool) {
      if (!pool.count(u | v)) return false;
      if (!pool.count(u & v)) return false;
    }
  return true;
}

T1Verdict t1_subbase_check(int npoints, const std::vector<ElemSet>& family) {
  for (int x = 0; x < npoints; ++x)
    for (int y = 0; y < npoints; ++y) {
      if (x == y) continue;
      bool separated = false;
      for (const ElemSet& a : family)
        if (a.test(x) && !a.test(y)) {
          separated = true;
          break;
        }
      if (!separated) return {false, std::make_pair(x, y)};
    }
  return {true, std::nullopt};
}

bool is_t1_topology(const TopSpace& X) {
  return t1_subbase_check(X.npoints, X.opens).t1;
}

bool is_discrete(const TopSpace& X) {
  return static_cast<std::size_t>(X.opens.size()) ==
         (std::size_t{1} << X.npoints);
}

bool is_base_for(const TopSpace& X, const std::vector<ElemSet>& base) {
  for (const ElemSet& b : base)
    if (!X.is_open(b)) return false;
  for (const ElemSet& u : X.opens) {
    ElemSet acc;
    for (const ElemSet& b : base)
      if (b.subset_of(u)) acc |= b;
    if (acc != u) return false;
  }
  return true;
}

}  // namespace jslat
