#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jslat/pierce.hpp"
#include "jslat/semilattice.hpp"
#include "jslat/spectrum.hpp"
#include "jslat/topology.hpp"

namespace jslat {

inline constexpr std::size_t kDlatClosureGuard = 20000;

// A distributive lattice of subsets of a fixed universe, generated from a
// family of generators and closed under union and binary intersection.
// Join is union, meet is intersection.
struct GeneratedLattice {
  int universe = 0;
  std::vector<std::string> universe_names;
  std::vector<ElemSet> elements;
  // ground element a -> index of its generator image
  std::vector<int> generator_of;
  int top_index = 0;

  int size() const { return static_cast<int>(elements.size()); }
  int index_of(const ElemSet& s) const;  // -1 if absent
};

// The free distributive lattice with 1 over L, modeled concretely: the
// generator of b is {y : b not<= y} and the carrier is the union/meet
// closure of the generators.
GeneratedLattice free_dlat(const JoinSemilattice& L,
                           std::size_t guard = kDlatClosureGuard);

// The sublattice of the Spec_Max topology generated by the cozero sets.
// Requires L conjunctive (not_conjunctive otherwise).
GeneratedLattice wl_lattice(const JoinSemilattice& L);

struct OverlineW {
  GeneratedLattice dl;
  GeneratedLattice wl;
  // dl element -> wl element; the unique lattice morphism sending the
  // generator of b to coz b
  std::vector<int> image;
  bool surjective = false;
  bool injective = false;
  // kernel classes as lists of dl indices, ordered by least member
  std::vector<std::vector<int>> kernel_classes;
};

OverlineW overline_w(const JoinSemilattice& L);

struct DlatR1Result {
  OverlineW w;
  int dl_size = 0;
  int wl_size = 0;
  int r1_classes = 0;
  bool kernel_is_r1 = false;
  bool isomorphism = false;
};

// Computes R^1(dL) via the Pierce machinery, checks kernel(w-bar) = R^1(dL),
// and exhibits the isomorphism dL/R^1 = wL constructively. A failed
// verification (verification_failed) indicates a bug, not a valid state.
DlatR1Result dlat_r1_isomorphism(const JoinSemilattice& L);

struct UniversalPropertyResult {
  long extensions = 0;  // 1-v-^-morphisms g: dL -> B with g . d_L = f
  bool unique = false;
};

// Brute-force search over all bounded-lattice morphisms dL -> B; the free
// property says exactly one extends f.
UniversalPropertyResult universal_property_check(const JoinSemilattice& L,
                                                 const JoinSemilattice& B,
                                                 const std::vector<Elem>& f);

struct BaseClassification {
  bool is_base = false;
  bool annular = false;
  bool wallman = false;
  bool conjunctive_base = false;
  // (point, base index) violating the Wallman condition
  std::optional<std::pair<int, int>> wallman_witness;
  // (W, U) indices violating the conjunctive-base condition
  std::optional<std::pair<int, int>> conjunctive_witness;
};

// Classifies a candidate base B for a finite topology. Throws
// not_a_topology / not_a_base (the latter when B is not even a subfamily of
// the opens). wallman implies conjunctive_base is asserted
// (internal_inconsistency on violation).
BaseClassification classify_base(const TopSpace& space,
                                 const std::vector<ElemSet>& base);

struct EtaResult {
  bool injective = false;
  bool continuous = false;
  bool open_onto_image = false;
  bool dense_image = false;
  bool embedding_with_dense_image() const {
    return injective && continuous && open_onto_image && dense_image;
  }
};

// For a Wallman base B of a finite T1 space: x -> m_x into Spec_Max B is an
// embedding with dense image. Throws precondition_failed when B is not a
// Wallman base or the space is not T1.
EtaResult eta_embedding_check(const SetFamily& base);

// Views a generated lattice as a join-semilattice (join = union); names are
// rendered from the universe names.
JoinSemilattice generated_to_semilattice(const GeneratedLattice& G);

}  // namespace jslat
