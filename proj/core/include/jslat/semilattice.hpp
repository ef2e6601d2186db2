#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jslat/bitset.hpp"
#include "jslat/error.hpp"
#include "jslat/set_family.hpp"

namespace jslat {

using Elem = std::uint16_t;

// Full triple enumeration of associativity is O(n^3); construction refuses
// larger carriers unless the caller raises the guard explicitly.
inline constexpr int kDefaultValidationGuard = 64;

// A finite join-semilattice: carrier 0..n-1, a total join table, and the
// derived partial order (x <= y iff x v y = y). Immutable once built; every
// operation in the library takes structures by const reference and is safe
// to run concurrently on shared instances.
class JoinSemilattice {
 public:
  // An empty (invalid) structure; use the factories to build real ones.
  JoinSemilattice() = default;

  static JoinSemilattice from_join_table(
      std::vector<std::string> names,
      const std::vector<std::vector<Elem>>& table,
      int validation_guard = kDefaultValidationGuard);

  // Carrier = the sets of a union-closed family, join = union. The family
  // is retained so elements can be rendered (and re-serialized) as sets.
  static JoinSemilattice from_set_family(
      const SetFamily& family, int validation_guard = kDefaultValidationGuard);

  int size() const { return n_; }
  const std::string& name(Elem a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  bool leq(Elem a, Elem b) const { return up_[a].test(b); }

  // {b : a <= b} and {b : b <= a}
  const ElemSet& up(Elem a) const { return up_[a]; }
  const ElemSet& down(Elem a) const { return down_[a]; }

  Elem top() const { return top_; }
  std::optional<Elem> bottom() const { return bottom_; }
  ElemSet all() const { return ElemSet::full(n_); }

  // join of a nonempty subset
  Elem join_of(const ElemSet& s) const;

  const std::optional<SetFamily>& origin() const { return origin_; }

  const std::vector<Elem>& join_table() const { return join_; }

 private:
  void derive_order();

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Elem> join_;  // n*n row-major
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
  Elem top_ = 0;
  std::optional<Elem> bottom_;
  std::optional<SetFamily> origin_;
};

enum class OrderRel { equal, leq, geq, incomparable };

OrderRel order_query(const JoinSemilattice& L, Elem a, Elem b);

// Meets are not part of the signature; they may or may not exist. If every
// pair has a greatest lower bound the full meet table is returned, otherwise
// the first pair (in id order) lacking one.
struct MeetStructure {
  std::optional<std::vector<Elem>> table;
  std::optional<std::pair<Elem, Elem>> no_meet;

  bool is_lattice() const { return table.has_value(); }
  Elem meet(int n, Elem a, Elem b) const { return (*table)[a * n + b]; }
};

MeetStructure meet_structure(const JoinSemilattice& L);

// A total map between two carriers. Non-owning: the referenced structures
// must outlive the table.
struct MorphismTable {
  const JoinSemilattice* source = nullptr;
  const JoinSemilattice* target = nullptr;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
};

struct MorphismFlags {
  bool preserves_join = false;
  std::optional<std::pair<Elem, Elem>> join_witness;
  bool preserves_top = false;
  // present only when both sides are lattices
  std::optional<bool> preserves_meet;
  std::optional<std::pair<Elem, Elem>> meet_witness;
};

MorphismFlags check_morphism(const MorphismTable& f);

bool is_join_morphism(const MorphismTable& f);
// preserves join and maps top to top
bool is_one_join_morphism(const MorphismTable& f);

// Renders a subset of the carrier as a sorted (by id) name list, e.g.
// "{xy,∅}".
std::string render_subset(const JoinSemilattice& L, const ElemSet& s);

}  // namespace jslat
