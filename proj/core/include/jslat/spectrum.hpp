#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "jslat/ideals.hpp"
#include "jslat/pierce.hpp"
#include "jslat/semilattice.hpp"
#include "jslat/topology.hpp"

namespace jslat {

// The maximal-ideal spectrum: points are the maximal ideals (in
// maximal_ideals output order), coz[a] = {m : a not in m}, and the topology
// is generated by the cozero sets. cozMap is injective exactly when the
// parent is conjunctive; non-conjunctive inputs are accepted and flagged so
// representation failure can be measured.
struct MaxSpectrum {
  int parent_size = 0;
  std::vector<ElemSet> points;  // each a subset of the parent carrier
  std::vector<ElemSet> coz;     // per parent element, a set of point indices
  TopSpace topology;
  bool injective = false;

  int npoints() const { return static_cast<int>(points.size()); }
};

// Throws degenerate if |L| < 2 (the representation theorem's hypothesis).
MaxSpectrum spec_max(const JoinSemilattice& L);

struct HullCover {
  ElemSet hull;  // <<B>>: intersection of all maximal ideals containing B
  bool a_in_hull = false;
  bool covers = false;         // coz a subset of union of coz b, b in B
  bool condition_iii = false;  // x v a = 1 implies some b in <B> with x v b = 1
};

HullCover hull_and_cover(const JoinSemilattice& L, Elem a, const ElemSet& B);

struct RoundtripResult {
  bool conjunctive = false;
  // x -> index of m_x among the spectrum points
  std::vector<int> point_map;
  bool homeomorphism = false;
};

// Verifies the representation round-trip for a union-closed T1 subbase
// containing the full set on a finite (hence compact) point set. Throws
// precondition_failed naming the violated hypothesis.
RoundtripResult roundtrip_representation(const SetFamily& family);

struct ConjMorphismVerdict {
  bool conjunctive = false;
  // indices (in spec_max point order of the target) of maximal ideals w
  // with phi^{-1}(w) != <<phi^{-1}(w)>>
  std::vector<int> failing_targets;
};

// Throws not_a_morphism unless f is a 1-v-morphism.
ConjMorphismVerdict is_conjunctive_morphism(const MorphismTable& f);

// Multi-valued function from target points to source points.
struct RelationQ {
  int n_source = 0;  // points of the target structure M
  int n_target = 0;  // points of the source structure L
  std::vector<ElemSet> rows;  // rows[w] = {v : phi^{-1}(w) subset of v}
};

struct QPhiReport {
  RelationQ q;
  bool join_identity = false;  // join of a-hat along Q equals phi(a)-hat
  bool coz_identity = false;   // Q^{-1}(coz a) = coz phi(a)
  // pairs (a,b) with Q^{-1}(coz a n coz b) strictly inside
  // coz phi(a) n coz phi(b)
  std::vector<std::pair<Elem, Elem>> strict_pairs;
};

// Requires both structures conjunctive and f a conjunctive morphism
// (precondition_failed otherwise).
QPhiReport q_phi_analysis(const MorphismTable& f);

}  // namespace jslat
