#pragma once

#include <string>
#include <vector>

#include "jslat/ideals.hpp"
#include "jslat/semilattice.hpp"

namespace jslat {

// Bell(8) = 4140; full congruence enumeration beyond that is refused.
inline constexpr int kCongruenceGuard = 8;

// A join-compatible partition of the carrier. Classes are ordered by least
// member; class_of maps elements to class indices.
struct Congruence {
  int n = 0;
  std::vector<int> class_of;
  std::vector<ElemSet> classes;

  bool related(Elem a, Elem b) const { return class_of[a] == class_of[b]; }
  int num_classes() const { return static_cast<int>(classes.size()); }
  // "{0,a}|{1}"
  std::string partition_string(const JoinSemilattice& L) const;

  static Congruence equality(const JoinSemilattice& L);
  static Congruence full(const JoinSemilattice& L);
  // groups elements by equal keys
  static Congruence from_keys(const JoinSemilattice& L,
                              const std::vector<ElemSet>& keys);
  static Congruence from_class_of(const JoinSemilattice& L,
                                  std::vector<int> class_of);
};

// (Y:a) = {x : x v a in Y}
ElemSet supercomplements(const JoinSemilattice& L, const ElemSet& Y, Elem a);

// R^Y: a ~ a' iff (Y:a) = (Y:a'). Computed by bucketing on the exact
// supercomplement sets; no pairwise closure needed.
Congruence pierce_congruence(const JoinSemilattice& L, const ElemSet& Y);

// a ~ b iff a v c = b v c for a fixed... nothing; helper for R^{up(c)}.
Congruence pierce_congruence_at(const JoinSemilattice& L, Elem c);

struct QuotientResult {
  JoinSemilattice quotient;
  // element -> quotient element
  std::vector<Elem> projection;
  std::vector<std::string> class_names;

  MorphismTable projection_morphism(const JoinSemilattice& parent) const {
    return MorphismTable{&parent, &quotient, projection};
  }
};

// Throws not_a_congruence (with a witness) if R is not join-compatible.
QuotientResult quotient(const JoinSemilattice& L, const Congruence& R);

// Every join-compatible partition, in restricted-growth-string order.
std::vector<Congruence> enumerate_congruences(const JoinSemilattice& L,
                                              int guard = kCongruenceGuard);

// The six equivalent formulations of conjunctivity, evaluated
// independently; disagreement raises internal_inconsistency.
struct ConjunctivityProfile {
  bool r1_equality = false;
  bool supercomplements_injective = false;
  bool two_sided_witness = false;
  bool nleq_witness = false;
  bool strict_witness = false;
  bool principal_ideals_max_intersections = false;
  bool overall = false;
};

ConjunctivityProfile conjunctivity_profile(const JoinSemilattice& L);
bool is_conjunctive(const JoinSemilattice& L);

// All ideals W with <W u {a}> = L, as subsets of the carrier, in
// ideal-list order.
std::vector<ElemSet> ideal_supercomplements(const JoinSemilattice& L, Elem a);

// The six formulations of ideal conjunctivity (the Pierce theory of Id L
// restricted to principal ideals), evaluated independently.
struct IdealConjunctivityProfile {
  bool r1_idl_restricted_equality = false;
  bool ideal_supercomplements_injective = false;
  bool two_sided_ideal_witness = false;
  bool nleq_ideal_witness = false;
  bool strict_ideal_witness = false;
  bool principal_ideals_maxproper_intersections = false;
  bool overall = false;
};

IdealConjunctivityProfile is_ideally_conjunctive(const JoinSemilattice& L);

// All up-sets of L (2^n scan), in subset order.
std::vector<ElemSet> enumerate_upsets(const JoinSemilattice& L);
// All filters (nonempty up-sets with internal pairwise lower bounds).
std::vector<ElemSet> enumerate_filters(const JoinSemilattice& L);

}  // namespace jslat
