#pragma once

#include <string>
#include <vector>

#include "jslat/bitset.hpp"

namespace jslat {

// A family of point-sets over a finite point set. Used for union-closed
// families (semilattice carriers), subbases, topologies, and base
// classification.
struct SetFamily {
  std::vector<std::string> point_names;
  std::vector<ElemSet> sets;

  int npoints() const { return static_cast<int>(point_names.size()); }
};

// Renders a point-set the way the tables in this domain are usually
// written: "xy" when every point name is a single character, "{p1,p2}"
// otherwise, and "∅" for the empty set.
std::string render_point_set(const std::vector<std::string>& point_names,
                             const ElemSet& s);

}  // namespace jslat
