#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jslat/semilattice.hpp"
#include "jslat/set_family.hpp"

namespace jslat {

// One theorem check on one structure. Checks that do not apply (wrong
// hypotheses, size guards) are reported as skipped rather than silently
// passing.
struct CheckRow {
  std::string suite;
  std::string check;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

std::vector<CheckRow> verify_pierce(const JoinSemilattice& L);
std::vector<CheckRow> verify_spectrum(const JoinSemilattice& L);
std::vector<CheckRow> verify_distributivity(const JoinSemilattice& L);
std::vector<CheckRow> verify_dlat(const JoinSemilattice& L);
std::vector<CheckRow> verify_suite(const std::string& suite,
                                   const JoinSemilattice& L);
// pierce + spectrum + distributivity + dlat
std::vector<CheckRow> verify_all(const JoinSemilattice& L);

// Structure-independent regression rows (the fixed morphisms and examples
// the library must keep reproducing).
std::vector<CheckRow> verify_regressions();

bool all_passed(const std::vector<CheckRow>& rows);

}  // namespace jslat
