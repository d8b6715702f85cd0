#ifndef MPK_TYPECHECK_HPP
#define MPK_TYPECHECK_HPP

// Bidirectional, syntax-directed checkers for the three systems.
//
// Checking mode is driven by the expected formula; inference is used
// for eliminations (the head of an application, the scrutinee of a
// case, ...).  `tt` and Post instances whose premises cannot be
// synthesized are only checkable.

#include <optional>
#include <string>

#include "mpk/syntax.hpp"
#include "mpk/theory.hpp"
#include "mpk/type_error.hpp"

namespace mpk {

// Well-formedness of terms and formulas over the signature.
std::optional<TypeError> check_formula(const Theory& th, const Formula& f);
std::optional<TypeError> check_context(System sys, const Theory& th, const Context& ctx);

// Constructors outside the system; leftmost-innermost offender.
std::optional<TypeError> check_admissible(System sys, const Proof& t);

// Gamma |- t : A.  Validates the context and the goal first.
std::optional<TypeError> check(System sys, const Theory& th, const Context& ctx, const Proof& t,
                               const Formula& goal);

struct Inferred {
  Formula type;                    // set iff error is empty
  std::optional<TypeError> error;

  bool ok() const { return !error.has_value(); }
};
Inferred infer(System sys, const Theory& th, const Context& ctx, const Proof& t);

// Occurrence discipline of em1[forall_p]{a. u | a. v}: in u the free a
// occur only as hyp[a : forall_p], in v only as wit[a : W] where W is
// the matching witness formula, and no free variable of forall_p is
// bound above any of those occurrences.
std::optional<TypeError> check_discipline(const Theory& th, const Proof& u, const Proof& v,
                                          const std::string& a, const Formula& forall_p);

// No free proof or individual variables; free hypothesis variables
// occur only as Hyp with a simply universal annotation.
bool is_quasi_closed(const Proof& t);

}  // namespace mpk

#endif  // MPK_TYPECHECK_HPP
