#ifndef MPK_EXTRACT_HPP
#define MPK_EXTRACT_HPP

// Head forms, Herbrand normal forms and witness extraction.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mpk/reduce.hpp"
#include "mpk/syntax.hpp"
#include "mpk/theory.hpp"
#include "mpk/type_error.hpp"

namespace mpk {

// ---------------------------------------------------------------------------
// Head forms: fun z1 ... zn => r e1 ... ek

struct Binder {
  bool individual = false;  // fun {a} rather than fun (x : A)
  std::string name;
  Formula annot;
};

enum class ElimKind { Arg, IndArg, Proj, Case, Dest };

struct Elim {
  ElimKind kind;
  Proof arg;                  // Arg
  IndTerm ind;                // IndArg
  int index = 0;              // Proj
  std::string name, name2;    // Case: x, y; Dest: a, x
  std::vector<Proof> bodies;  // Case: {u, v}; Dest: {u}
};

struct HeadForm {
  std::vector<Binder> prefix;
  Proof head;               // never an elimination
  std::vector<Elim> spine;  // innermost (first applied) first
};

HeadForm head_decompose(const Proof& t);
Proof reassemble(const HeadForm& h);

// ---------------------------------------------------------------------------
// Herbrand normal forms: em0 trees over existential introductions

struct HnfNode;
using HnfTree = std::shared_ptr<const HnfNode>;

struct HnfNode {
  // Leaf: leaf index into HerbrandNF::leaves.  Inner: the em0 node.
  int leaf = -1;
  Formula p;
  std::string name;
  HnfTree left, right;
};

struct HnfLeaf {
  IndTerm witness;
  Proof proof;     // body of the introduction
  Proof intro;     // the (m, u) node itself
};

struct HerbrandNF {
  std::vector<HnfLeaf> leaves;  // left to right
  HnfTree skeleton;
};

std::optional<HerbrandNF> is_hnf(const Proof& t);

// ---------------------------------------------------------------------------
// Extraction

enum class ExtractStatus {
  Ok,
  CheckFailed,      // the input does not check
  Precondition,     // not quasi-closed, goal open or not existential
  FuelExhausted,
  NotHNF,           // normal form has the wrong shape: kernel bug
};

struct Extraction {
  ExtractStatus status = ExtractStatus::Ok;
  std::string message;
  std::optional<TypeError> type_error;
  NormalizeResult norm;
  std::optional<HerbrandNF> hnf;
  std::vector<IndTerm> witnesses;
  bool ok() const { return status == ExtractStatus::Ok; }
};

std::string_view status_name(ExtractStatus s);

Extraction extract_witnesses(System sys, const Theory& th, const Context& ctx, const Proof& t,
                             const Formula& goal, std::uint64_t fuel = kDefaultFuel);

struct Disjunction {
  Formula formula;  // A[m1/x] | (A[m2/x] | ...)
  Proof proof;
  std::optional<TypeError> recheck;  // set iff the emitted proof fails to check
};

Disjunction herbrand_disjunction(System sys, const Theory& th, const Context& ctx,
                                 const HerbrandNF& hnf, const Formula& goal);

// ---------------------------------------------------------------------------
// Shape of normal forms

struct NormalFormReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Every hyp occurrence is applied to a closed term with no other free
// variable than its own, and t itself is not an em1 node.
NormalFormReport check_normal_form_property(System sys, const Context& ctx, const Proof& t);

}  // namespace mpk

#endif  // MPK_EXTRACT_HPP
