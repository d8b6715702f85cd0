#include "mpk/semantics.hpp"

#include <algorithm>
#include <functional>

namespace mpk {

namespace {

void symbols(const IndTerm& t, std::set<std::string>& consts, std::map<std::string, int>& funs) {
  if (t->kind == IndKind::Const) consts.insert(t->name);
  if (t->kind == IndKind::App) funs[t->name] = static_cast<int>(t->args.size());
  for (const auto& a : t->args) symbols(a, consts, funs);
}

void symbols(const Formula& f, std::set<std::string>& consts, std::map<std::string, int>& funs) {
  for (const auto& a : f->args) symbols(a, consts, funs);
  if (f->lhs) symbols(f->lhs, consts, funs);
  if (f->rhs) symbols(f->rhs, consts, funs);
}

bool contains(const std::vector<Element>& d, const Element& e) {
  return std::find(d.begin(), d.end(), e) != d.end();
}

// All tuples of the given length over the domain.
void tuples(const std::vector<Element>& d, int n, Tuple& cur, const std::function<void(const Tuple&)>& f) {
  if (static_cast<int>(cur.size()) == n) {
    f(cur);
    return;
  }
  for (const auto& e : d) {
    cur.push_back(e);
    tuples(d, n, cur, f);
    cur.pop_back();
  }
}

}  // namespace

std::optional<std::string> validate_model(const Model& m, const Signature& sig) {
  if (m.domain.empty()) return "empty domain";
  for (const auto& c : sig.constants) {
    auto it = m.constants.find(c);
    if (it == m.constants.end()) return "constant " + c + " has no interpretation";
    if (!contains(m.domain, it->second)) return "constant " + c + " denotes " + it->second + ", not in the domain";
  }
  for (const auto& [f, arity] : sig.functions) {
    auto it = m.functions.find(f);
    if (it == m.functions.end()) return "function " + f + " has no interpretation";
    std::optional<std::string> err;
    Tuple cur;
    tuples(m.domain, arity, cur, [&](const Tuple& t) {
      if (err) return;
      auto v = it->second.find(t);
      if (v == it->second.end())
        err = "function " + f + " undefined on a tuple";
      else if (!contains(m.domain, v->second))
        err = "function " + f + " leaves the domain";
    });
    if (err) return err;
  }
  for (const auto& [p, rel] : m.predicates) {
    auto it = sig.predicates.find(p);
    if (it == sig.predicates.end()) return "unknown predicate " + p;
    for (const auto& t : rel) {
      if (static_cast<int>(t.size()) != it->second) return "wrong arity in the relation for " + p;
      for (const auto& e : t)
        if (!contains(m.domain, e)) return "relation " + p + " mentions " + e + ", not in the domain";
    }
  }
  return std::nullopt;
}

Element eval_term(const Model& m, const Assignment& rho, const IndTerm& t) {
  switch (t->kind) {
    case IndKind::Var: {
      auto it = rho.find(t->name);
      if (it == rho.end()) throw EvalError("unbound variable " + t->name);
      return it->second;
    }
    case IndKind::Const: {
      auto it = m.constants.find(t->name);
      if (it == m.constants.end()) throw EvalError("constant " + t->name + " has no interpretation");
      return it->second;
    }
    case IndKind::App: {
      auto it = m.functions.find(t->name);
      if (it == m.functions.end()) throw EvalError("function " + t->name + " has no interpretation");
      Tuple args;
      for (const auto& a : t->args) args.push_back(eval_term(m, rho, a));
      auto v = it->second.find(args);
      if (v == it->second.end()) throw EvalError("function " + t->name + " undefined on a tuple");
      return v->second;
    }
  }
  return {};
}

bool eval_formula(const Model& m, const Assignment& rho, const Formula& a) {
  switch (a->kind) {
    case FormulaKind::Atom: {
      Tuple args;
      for (const auto& t : a->args) args.push_back(eval_term(m, rho, t));
      auto it = m.predicates.find(a->name);
      return it != m.predicates.end() && it->second.count(args);
    }
    case FormulaKind::Bottom:
      return false;
    case FormulaKind::And:
      return eval_formula(m, rho, a->lhs) && eval_formula(m, rho, a->rhs);
    case FormulaKind::Or:
      return eval_formula(m, rho, a->lhs) || eval_formula(m, rho, a->rhs);
    case FormulaKind::Imp:
      return !eval_formula(m, rho, a->lhs) || eval_formula(m, rho, a->rhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool all = a->kind == FormulaKind::Forall;
      Assignment r = rho;
      for (const auto& e : m.domain) {
        r[a->name] = e;
        if (eval_formula(m, r, a->lhs) != all) return !all;
      }
      return all;
    }
  }
  return false;
}

Model empty_model(const Formula& a) {
  std::set<std::string> consts;
  std::map<std::string, int> funs;
  symbols(a, consts, funs);
  Model m;
  for (const auto& c : consts) {
    m.domain.push_back(c);
    m.constants[c] = c;
  }
  if (m.domain.empty()) m.domain.push_back("e0");
  for (const auto& [f, arity] : funs) {
    auto& table = m.functions[f];
    Tuple cur;
    tuples(m.domain, arity, cur, [&](const Tuple& t) { table[t] = m.domain.front(); });
  }
  return m;
}

bool empty_model_check(const Formula& a) {
  if (a->kind != FormulaKind::Exists || !is_propositional(a->lhs) || contains_implication(a->lhs))
    throw EvalError("empty_model_check needs ex x. P with P propositional and implication-free");
  Assignment rho;
  Model m = empty_model(a);
  for (const auto& v : free_ind_vars(a)) rho[v] = m.domain.front();
  return eval_formula(m, rho, a);
}

}  // namespace mpk
