#include "jslat/error.hpp"

namespace jslat {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::axiom_violation: return "AxiomViolation";
    case Errc::range_error: return "RangeError";
    case Errc::not_union_closed: return "NotUnionClosed";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::size_guard: return "SizeGuard";
    case Errc::not_a_congruence: return "NotACongruence";
    case Errc::internal_inconsistency: return "InternalInconsistency";
    case Errc::degenerate: return "Degenerate";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::not_a_morphism: return "NotAMorphism";
    case Errc::not_distributive: return "NotDistributive";
    case Errc::not_a_filter: return "NotAFilter";
    case Errc::guarantee_violated: return "GuaranteeViolated";
    case Errc::not_a_topology: return "NotATopology";
    case Errc::not_a_base: return "NotABase";
    case Errc::unknown_predicate: return "UnknownPredicate";
    case Errc::unknown_suite: return "UnknownSuite";
    case Errc::parse_error: return "ParseError";
    case Errc::not_conjunctive: return "NotConjunctive";
    case Errc::verification_failed: return "VerificationFailed";
  }
  return "Error";
}

}  // namespace jslat
