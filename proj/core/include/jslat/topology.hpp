#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jslat/bitset.hpp"
#include "jslat/error.hpp"
#include "jslat/set_family.hpp"

namespace jslat {

inline constexpr std::size_t kTopologyMaxOpens = std::size_t{1} << 20;

// A finite topological space: the opens always contain {} and the full
// point set and are closed under union and binary intersection.
struct TopSpace {
  int npoints = 0;
  std::vector<std::string> point_names;
  std::vector<ElemSet> opens;

  bool is_open(const ElemSet& u) const;
  ElemSet full() const { return ElemSet::full(npoints); }
};

// Exact topology generated by a subbase: close under binary intersection to
// a pi-system, then under binary union, both to fixpoint. Opens are emitted
// in deterministic (set-order) form.
TopSpace generate_topology(int npoints, const std::vector<ElemSet>& subbase,
                           std::vector<std::string> point_names = {},
                           std::size_t max_opens = kTopologyMaxOpens);

bool is_topology(int npoints, const std::vector<ElemSet>& opens);

struct T1Verdict {
  bool t1 = false;
  // ordered pair (x,y) with no member containing x and omitting y
  std::optional<std::pair<int, int>> witness;
};

// A family is a T1 subbase when for any ordered pair of distinct points
// there is a member containing the first and omitting the second.
T1Verdict t1_subbase_check(int npoints, const std::vector<ElemSet>& family);

bool is_t1_topology(const TopSpace& X);
bool is_discrete(const TopSpace& X);

// Every open is a union of base members.
bool is_base_for(const TopSpace& X, const std::vector<ElemSet>& base);

}  // namespace jslat
