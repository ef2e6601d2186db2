#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jslat/semilattice.hpp"

namespace jslat {

inline constexpr int kEnumerationGuard = 7;

// Canonical representative of an isomorphism class: the lexicographically
// least join table over all relabelings consistent with invariant-refined
// element orderings.
struct CanonicalForm {
  int size = 0;
  std::vector<Elem> table;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const JoinSemilattice& L);
JoinSemilattice from_canonical(const CanonicalForm& c);

// Isomorphism by exhaustive permutation search; the oracle the canonical
// form is validated against.
bool isomorphic_bruteforce(const JoinSemilattice& A, const JoinSemilattice& B);

// Exactly one representative per isomorphism class of n-element
// join-semilattices, ordered by canonical form. Generated from naturally
// labeled posets (downset extension) filtered for join existence.
std::vector<JoinSemilattice> enumerate_semilattices(
    int n, int guard = kEnumerationGuard);

// Random union-closed families over a k-point universe; the sampling-based
// generator for sizes beyond the exhaustive guard.
std::vector<JoinSemilattice> sample_union_closed(int npoints, int count,
                                                 std::uint64_t seed);

struct PredicateInfo {
  std::string id;
  std::string description;
  // exhaustive enumeration bound for this predicate (congruence- and
  // morphism-dependent predicates are capped lower)
  int size_guard = kEnumerationGuard;
};

const std::vector<PredicateInfo>& registered_predicates();

struct WitnessRecord {
  int size = 0;
  CanonicalForm form;
  // structure document (set_family when the instance originated as a
  // family, join_table otherwise)
  std::string document_json;
  std::vector<std::string> detail;
};

struct SizeCensus {
  int size = 0;
  long tested = 0;
  long satisfied = 0;
  long violated = 0;
};

struct ConjectureReport {
  std::string predicate;
  std::string description;
  std::uint64_t seed = 0;
  int max_size = 0;
  std::vector<SizeCensus> census;
  std::vector<WitnessRecord> witnesses;
  std::vector<std::string> notes;

  long total_tested() const;
  long total_satisfied() const;
  long total_violated() const;
};

// Runs one registered predicate over all isomorphism classes with
// 1 <= n <= max_size. Throws unknown_predicate / size_guard.
ConjectureReport run_conjecture(const std::string& predicate, int max_size,
                                std::uint64_t seed = 0);

std::vector<ConjectureReport> run_conjectures(
    const std::vector<std::string>& predicates, int max_size,
    std::uint64_t seed = 0);

// Smallest-size, then canonically least structure satisfying the
// predicate's target, if any within the guard.
std::optional<JoinSemilattice> minimal_counterexample(
    const std::string& predicate, int max_size = kEnumerationGuard);

}  // namespace jslat
