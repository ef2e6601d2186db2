#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jslat/semilattice.hpp"

namespace jslat {

// Structure documents (shared with the CLI):
//   {"kind":"join_table","names":[...],"table":[[...]]}
//   {"kind":"set_family","universe":[...],"sets":[[...]]}
// Element order in the document fixes element ids. Malformed documents
// raise parse_error; structurally invalid ones raise the construction
// errors (axiom_violation, not_union_closed, ...).
JoinSemilattice parse_structure_text(const std::string& text);
JoinSemilattice load_structure_file(const std::string& path);
std::string structure_to_json_text(const JoinSemilattice& L);

struct SupercomplementRow {
  std::string element;
  std::vector<std::string> supercomplements;
};

struct SpectrumSummary {
  std::vector<std::vector<std::string>> points;
  std::vector<std::vector<int>> coz;  // per element, point indices
  long open_count = 0;
  bool t1 = false;
  bool discrete = false;
};

struct DlatSummary {
  int dl_size = 0;
  int wl_size = 0;
  bool wbar_surjective = false;
  bool wbar_injective = false;
  bool r1_isomorphism = false;
};

// Everything the analyze verb reports. Plain data; the machine form
// round-trips (report_from_json_text(report_to_json_text(r)) == r).
struct AnalysisReport {
  int size = 0;
  std::vector<std::string> names;
  std::string top;
  std::optional<std::string> bottom;
  bool is_lattice = false;

  bool conjunctive = false;
  bool ideally_conjunctive = false;
  bool distributive = false;
  std::optional<std::vector<std::string>> distributivity_witness;  // a,b0,b1

  std::vector<std::vector<std::string>> ideals;
  std::vector<std::vector<std::string>> prime_ideals;
  std::vector<std::vector<std::string>> maximal_ideals;
  std::vector<SupercomplementRow> supercomplements;
  std::optional<std::vector<std::string>> max_not_prime;

  std::optional<SpectrumSummary> spectrum;
  std::optional<DlatSummary> dlat;

  bool operator==(const AnalysisReport&) const = default;
};

inline bool operator==(const SupercomplementRow& a,
                       const SupercomplementRow& b) {
  return a.element == b.element && a.supercomplements == b.supercomplements;
}
inline bool operator==(const SpectrumSummary& a, const SpectrumSummary& b) {
  return a.points == b.points && a.coz == b.coz &&
         a.open_count == b.open_count && a.t1 == b.t1 &&
         a.discrete == b.discrete;
}
inline bool operator==(const DlatSummary& a, const DlatSummary& b) {
  return a.dl_size == b.dl_size && a.wl_size == b.wl_size &&
         a.wbar_surjective == b.wbar_surjective &&
         a.wbar_injective == b.wbar_injective &&
         a.r1_isomorphism == b.r1_isomorphism;
}

AnalysisReport analyze(const JoinSemilattice& L, bool with_dlat = true);

std::string report_to_json_text(const AnalysisReport& r);
AnalysisReport report_from_json_text(const std::string& text);
std::string report_to_text(const AnalysisReport& r);

}  // namespace jslat
