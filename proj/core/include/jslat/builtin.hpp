#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jslat/semilattice.hpp"

namespace jslat {
namespace builtin {

// {xyz, xy, xz, yz, ∅} with join = union: three maximal ideals, no prime
// ideals, conjunctive, not distributive.
JoinSemilattice lv();

// Nonempty subsets of {a,b,c}: conjunctive, not distributive, no bottom,
// all three maximal ideals prime.
JoinSemilattice p3();

// Power set of {x,y}.
JoinSemilattice b2();

// Power set of {a,b,c}.
JoinSemilattice pabc();

// k-element chain named c0 < c1 < ... (use chain3() for the 0 < a < 1
// naming used in reports).
JoinSemilattice chain(int k);
JoinSemilattice two();     // {0,1}
JoinSemilattice chain3();  // {0,a,1}

// {x, y, 1} with x v y = 1, as the union-closed family {{x},{y},{x,y}}.
JoinSemilattice freejoin();

const std::vector<std::pair<std::string, JoinSemilattice>>& corpus();

}  // namespace builtin
}  // namespace jslat
