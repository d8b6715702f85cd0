#ifndef MPK_SEMANTICS_HPP
#define MPK_SEMANTICS_HPP

// Finite first-order models and classical (Tarski) evaluation.

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpk/syntax.hpp"

namespace mpk {

using Element = std::string;
using Tuple = std::vector<Element>;

struct Model {
  std::vector<Element> domain;
  std::map<std::string, Element> constants;
  std::map<std::string, std::map<Tuple, Element>> functions;
  // Predicates missing from the map are interpreted as empty relations.
  std::map<std::string, std::set<Tuple>> predicates;
};

using Assignment = std::map<std::string, Element>;

struct EvalError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Totality and arity against the signature; nullopt if the model is fine.
std::optional<std::string> validate_model(const Model& m, const Signature& sig);

Element eval_term(const Model& m, const Assignment& rho, const IndTerm& t);
// Throws EvalError on an unbound variable or a missing interpretation.
bool eval_formula(const Model& m, const Assignment& rho, const Formula& a);

// Every predicate empty, domain = the constants of a (or one fresh
// element if there are none), each constant denoting itself and every
// function constant-valued on the first element.
Model empty_model(const Formula& a);

// Value of a in empty_model(a).  Precondition: a = ex x. P with P
// propositional and implication-free, else EvalError.
bool empty_model_check(const Formula& a);

}  // namespace mpk

#endif  // MPK_SEMANTICS_HPP
