#ifndef MPK_THEORY_HPP
#define MPK_THEORY_HPP

#include "mpk/arith.hpp"
#include "mpk/syntax.hpp"

namespace mpk {

enum class System { IL_HMP, IL_EM1, HA_EM1 };

std::string_view system_name(System s);  // il-hmp | il-em1 | ha-em1
std::optional<System> parse_system(std::string_view s);

// Signature plus, in arithmetic mode, the PR relations behind the atoms.
struct Theory {
  Signature sig;
  arith::Registry arith;

  bool arithmetic() const { return sig.arithmetic; }
};

// Empty first-order theory.
Theory il_theory();
// {0, S} plus the prelude relations.
Theory ha_theory();

// The falsity used by a theory: bot, or False0 in arithmetic.
Formula falsity(const Theory& th);
// ~A in the theory: A -> bot, or A -> False0 in arithmetic.
Formula negate(const Theory& th, Formula a);

}  // namespace mpk

#endif  // MPK_THEORY_HPP
