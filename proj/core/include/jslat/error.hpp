#pragma once

#include <stdexcept>
#include <string>

namespace jslat {

enum class Errc {
  axiom_violation,
  range_error,
  not_union_closed,
  size_mismatch,
  size_guard,
  not_a_congruence,
  internal_inconsistency,
  degenerate,
  precondition_failed,
  not_a_morphism,
  not_distributive,
  not_a_filter,
  guarantee_violated,
  not_a_topology,
  not_a_base,
  unknown_predicate,
  unknown_suite,
  parse_error,
  not_conjunctive,
  verification_failed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace jslat
