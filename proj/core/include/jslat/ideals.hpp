#pragma once

#include <optional>
#include <vector>

#include "jslat/semilattice.hpp"

namespace jslat {

struct SubsetClass {
  bool downset = false;
  bool upset = false;
  bool ideal = false;
  bool filter = false;
  bool prime_ideal = false;
};

// Independent verdicts; prime requires a nonempty ideal whose complement is
// a filter.
SubsetClass classify_subset(const JoinSemilattice& L, const ElemSet& S);

ElemSet principal_downset(const JoinSemilattice& L, Elem a);

// Smallest ideal containing X: empty for X = {}, otherwise the principal
// downset of the join of X (every finite nonempty ideal is principal).
ElemSet generated_ideal(const JoinSemilattice& L, const ElemSet& X);

// The complete lattice Id L of all ideals, including the improper ideals
// {} and L. For finite L the list is {} plus one principal ideal per
// element, in element order: index 0 is {}, index 1+a is down(a).
struct IdealLattice {
  std::vector<ElemSet> ideals;
  int empty_index = 0;
  int full_index = 0;
  // Id L as a join-semilattice: join of ideals is the generated ideal,
  // meet is intersection.
  JoinSemilattice as_semilattice;
  // a -> index of down(a)
  std::vector<Elem> embedding;

  bool improper(int idx) const {
    return idx == empty_index || idx == full_index;
  }
};

IdealLattice ideal_lattice(const JoinSemilattice& L);

// All prime ideals, in ideal-list order.
std::vector<ElemSet> prime_ideals(const JoinSemilattice& L);

// All a-maximal ideals (ideals omitting a whose proper extensions all
// contain a); the default a is the top, giving the maximal ideals. Found by
// greedy upward extension from every ideal omitting a, elements tried in id
// order, first-occurrence dedup.
std::vector<ElemSet> maximal_ideals(const JoinSemilattice& L,
                                    std::optional<Elem> relative_to = {});

// Maximal proper ideals (nonempty, contained in no larger proper ideal).
// For |L| >= 2 these coincide with the maximal ideals.
std::vector<ElemSet> maximal_proper_ideals(const JoinSemilattice& L);

}  // namespace jslat
