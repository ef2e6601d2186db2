#pragma once

#include <array>
#include <optional>
#include <vector>

#include "jslat/ideals.hpp"
#include "jslat/semilattice.hpp"
#include "jslat/topology.hpp"

namespace jslat {

// The frame-law check enumerates all subsets of Id L.
inline constexpr int kFrameLawGuard = 16;

struct DistributivityVerdict {
  bool distributive = false;
  // first (a, b0, b1) in lex id order with a <= b0 v b1 and no refinement
  std::optional<std::array<Elem, 3>> witness;
};

DistributivityVerdict is_distributive(const JoinSemilattice& L);

struct IdlDistributivity {
  bool l_distributive = false;
  bool idl_lattice_distributive = false;
  bool idl_frame_law = false;
};

// The three conditions are a theorem-backed equivalence; disagreement
// raises internal_inconsistency.
IdlDistributivity idl_distributivity_equivalence(const JoinSemilattice& L,
                                                 int guard = kFrameLawGuard);

struct PrimeSpectrum {
  int parent_size = 0;
  std::vector<ElemSet> points;    // prime ideals
  std::vector<ElemSet> spec_map;  // spec a = {p : a not in p}
  TopSpace topology;
  // J -> {p : J not subset of p} is a bijection from nonempty ideals onto
  // the topology preserving binary meets and all joins
  bool frame_isomorphism = false;
};

// Requires L distributive (not_distributive otherwise).
PrimeSpectrum prime_spectrum(const JoinSemilattice& L);

// All ideals maximal among those disjoint from the filter F. Each returned
// ideal has a filter complement. Throws not_distributive / not_a_filter.
std::vector<ElemSet> disjoint_max_prime(const JoinSemilattice& L,
                                        const ElemSet& F);

// First maximal ideal (in output order) that is not prime, if any. For
// bottomed conjunctive non-distributive L a witness is guaranteed and its
// absence raises guarantee_violated.
std::optional<ElemSet> max_not_prime_witness(const JoinSemilattice& L);

// For a finite distributive lattice F, I -> join(I) and f -> down(f) are
// mutually inverse between nonempty ideals and F.
bool check_algebraic_frame_isomorphism(const JoinSemilattice& F);

}  // namespace jslat
