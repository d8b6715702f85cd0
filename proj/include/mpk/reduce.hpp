#ifndef MPK_REDUCE_HPP
#define MPK_REDUCE_HPP

// One-step reduction, exception substitution and the normalization driver.
//
// The deterministic strategy picks the first redex of a preorder walk
// (leftmost-outermost).  At an em1 node the node-level rules are tried
// before anything inside its branches.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpk/syntax.hpp"
#include "mpk/theory.hpp"

namespace mpk {

struct Step {
  std::string rule;
  Path path;     // redex position in `before`
  Proof before;  // whole term
  Proof after;   // whole term
};

struct NormalizeResult {
  bool normal = false;  // false: fuel exhausted
  Proof term;           // normal form, or the partial result
  std::vector<Step> trace;
};

struct ActiveHyp {
  IndTerm m;
  Formula annot;  // all x. P
  Path path;      // of the application node, relative to u
};

// Leftmost-outermost application hyp[a : all x. P] @ m whose only free
// variable is a (so m and the annotation are closed).
std::optional<ActiveHyp> active_hyp(const Proof& u, const std::string& a);
// All of them, in preorder.
std::vector<ActiveHyp> active_hyps(const Proof& u, const std::string& a);

// v[a := m] on the witness side: each free wit[a : ex x. B] becomes
// ((m, hypo[B[m/x]]) : ex x. B), or ((m, tt) : ex x. B) in arithmetic.
// Throws TypeErrorException(DisciplineViolation) on a free hyp[a].
Proof exc_subst_wit(const Theory& th, const Proof& v, const std::string& a, const IndTerm& m);

// u[a := m] on the hypothesis side: each free hyp[a : all x. P] @ m'
// with m' alpha-equal to m becomes hypo[P[m/x]]; other occurrences are
// kept.  This is the substitution used by em1-raise.
// Throws TypeErrorException(DisciplineViolation) on a free wit[a].
Proof exc_subst_hyp(const Proof& u, const std::string& a, const IndTerm& m);

// Variant replacing every applied occurrence at its own argument.
// Throws TypeErrorException(DisciplineViolation) on a free wit[a] or on
// a hyp[a] that is not applied to an individual term.
Proof exc_subst_hyp_all(const Proof& u, const std::string& a);

std::optional<Step> step(System sys, const Theory& th, const Proof& t);

// Every one-step reduct (each redex, each choice of active hypothesis),
// deduplicated up to alpha-equivalence.  Used by the exhaustive explorer.
std::vector<Step> all_steps(System sys, const Theory& th, const Proof& t);

inline constexpr std::uint64_t kDefaultFuel = 100000;

NormalizeResult normalize(System sys, const Theory& th, const Proof& t,
                          std::uint64_t fuel = kDefaultFuel);

}  // namespace mpk

#endif  // MPK_REDUCE_HPP
