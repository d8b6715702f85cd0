#include "mpk/arith.hpp"

#include <stdexcept>

namespace mpk::arith {

namespace {

PRFun node(PRNode n) { return std::make_shared<const PRNode>(std::move(n)); }

}  // namespace

PRFun pr_zero(int arity) {
  if (arity < 0) throw std::invalid_argument("zero: negative arity");
  return node({PRKind::Zero, arity, 0, {}, {}});
}

PRFun pr_succ() { return node({PRKind::Succ, 1, 0, {}, {}}); }

PRFun pr_proj(int i, int n) {
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("proj(" + std::to_string(i) + "," + std::to_string(n) +
                                "): index out of range");
  return node({PRKind::Proj, n, i, {}, {}});
}

PRFun pr_comp(PRFun f, std::vector<PRFun> gs) {
  if (static_cast<int>(gs.size()) != f->arity)
    throw std::invalid_argument("comp: outer function has arity " + std::to_string(f->arity) +
                                " but " + std::to_string(gs.size()) + " inner functions");
  if (gs.empty())
    throw std::invalid_argument("comp: need at least one inner function");
  int n = gs[0]->arity;
  for (const auto& g : gs)
    if (g->arity != n) throw std::invalid_argument("comp: inner functions differ in arity");
  std::vector<PRFun> parts{std::move(f)};
  parts.insert(parts.end(), gs.begin(), gs.end());
  return node({PRKind::Comp, n, 0, std::move(parts), {}});
}

PRFun pr_rec(PRFun base, PRFun step) {
  if (step->arity != base->arity + 2)
    throw std::invalid_argument("rec: step arity must be base arity + 2");
  int n = base->arity + 1;
  return node({PRKind::PrimRec, n, 0, {std::move(base), std::move(step)}, {}});
}

PRFun pr_named(const PRFun& f, std::string name) {
  PRNode n = *f;
  n.ref = std::move(name);
  return node(std::move(n));
}

Num eval_pr(const PRFun& f, const std::vector<Num>& args) {
  if (static_cast<int>(args.size()) != f->arity)
    throw std::invalid_argument("eval_pr: expected " + std::to_string(f->arity) +
                                " arguments, got " + std::to_string(args.size()));
  switch (f->kind) {
    case PRKind::Zero:
      return 0;
    case PRKind::Succ:
      return args[0] + 1;
    case PRKind::Proj:
      return args[static_cast<std::size_t>(f->index - 1)];
    case PRKind::Comp: {
      std::vector<Num> inner;
      inner.reserve(f->parts.size() - 1);
      for (std::size_t i = 1; i < f->parts.size(); ++i) inner.push_back(eval_pr(f->parts[i], args));
      return eval_pr(f->parts[0], inner);
    }
    case PRKind::PrimRec: {
      std::vector<Num> rest(args.begin() + 1, args.end());
      Num acc = eval_pr(f->parts[0], rest);
      std::vector<Num> sargs(rest.size() + 2);
      std::copy(rest.begin(), rest.end(), sargs.begin() + 2);
      for (Num y = 0; y < args[0]; ++y) {
        sargs[0] = y;
        sargs[1] = acc;
        acc = eval_pr(f->parts[1], sargs);
      }
      return acc;
    }
  }
  return 0;
}

std::string show(const PRFun& f) {
  if (!f->ref.empty()) return f->ref;
  switch (f->kind) {
    case PRKind::Zero:
      return "zero(" + std::to_string(f->arity) + ")";
    case PRKind::Succ:
      return "succ";
    case PRKind::Proj:
      return "proj(" + std::to_string(f->index) + "," + std::to_string(f->arity) + ")";
    case PRKind::Comp: {
      std::string s = "comp(" + show(f->parts[0]) + ";";
      for (std::size_t i = 1; i < f->parts.size(); ++i) s += (i > 1 ? ", " : " ") + show(f->parts[i]);
      return s + ")";
    }
    case PRKind::PrimRec:
      return "rec(" + show(f->parts[0]) + "; " + show(f->parts[1]) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------

void Registry::define_fun(const std::string& name, PRFun f) {
  if (funs_.count(name)) throw std::invalid_argument("duplicate prfun '" + name + "'");
  funs_[name] = pr_named(f, name);
  fun_order_.push_back(name);
}

void Registry::define_rel(const std::string& name, const std::string& fun_name,
                          const std::string& complement) {
  const PRFun* f = fun(fun_name);
  if (!f) throw std::invalid_argument("unknown prfun '" + fun_name + "'");
  if (rels_.count(name) || rels_.count(complement) || name == complement)
    throw std::invalid_argument("duplicate prrel '" + name + "'");
  rels_[name] = PRRel{name, *f, false, complement};
  rels_[complement] = PRRel{complement, *f, true, name};
  rel_order_.push_back(name);
  rel_fun_name_[name] = fun_name;
}

const PRFun* Registry::fun(const std::string& name) const {
  auto it = funs_.find(name);
  return it == funs_.end() ? nullptr : &it->second;
}

const PRRel* Registry::rel(const std::string& name) const {
  auto it = rels_.find(name);
  return it == rels_.end() ? nullptr : &it->second;
}

std::string Registry::definition(const std::string& fun_name) const {
  PRNode n = *funs_.at(fun_name);
  n.ref.clear();
  return show(std::make_shared<const PRNode>(std::move(n)));
}

void Registry::export_to(Signature& sig) const {
  for (const auto& name : rel_order_) {
    const PRRel& r = rels_.at(name);
    if (sig.predicates.count(name)) continue;
    sig.add_complement_pair(name, r.partner, r.fun->arity);
  }
}

Registry Registry::prelude() {
  Registry r;
  r.define_fun("add", pr_rec(pr_proj(1, 1), pr_comp(pr_succ(), {pr_proj(2, 3)})));
  r.define_fun("mul", pr_rec(pr_zero(1), pr_comp(*r.fun("add"), {pr_proj(2, 3), pr_proj(3, 3)})));
  r.define_fun("pred", pr_rec(pr_zero(0), pr_proj(1, 2)));
  // sub(y, x) = x - y, recursion on y
  r.define_fun("sub", pr_rec(pr_proj(1, 1), pr_comp(*r.fun("pred"), {pr_proj(2, 3)})));
  r.define_fun("monus", pr_comp(*r.fun("sub"), {pr_proj(2, 2), pr_proj(1, 2)}));
  r.define_fun("absdiff",
               pr_comp(*r.fun("add"), {*r.fun("monus"),
                                       pr_comp(*r.fun("monus"), {pr_proj(2, 2), pr_proj(1, 2)})}));
  r.define_fun("two", pr_comp(pr_succ(), {pr_comp(pr_succ(), {pr_zero(1)})}));
  r.define_fun("absdiff2", pr_comp(*r.fun("absdiff"), {pr_proj(1, 1), *r.fun("two")}));
  r.define_fun("one0", pr_comp(pr_succ(), {pr_zero(0)}));
  r.define_rel("Eq", "absdiff", "Neq");
  r.define_rel("Le", "monus", "Gt");
  r.define_rel("False0", "one0", "True0");
  r.define_rel("AbsDiff2", "absdiff2", "NotAbsDiff2");
  return r;
}

bool eval_atomic(const Registry& reg, const Formula& atom) {
  if (atom->kind != FormulaKind::Atom) throw std::invalid_argument("eval_atomic: not an atom");
  const PRRel* r = reg.rel(atom->name);
  if (!r) throw std::invalid_argument("eval_atomic: unregistered predicate '" + atom->name + "'");
  std::vector<Num> args;
  for (const auto& t : atom->args) {
    auto n = numeral_value(t);
    if (!n) throw std::invalid_argument("eval_atomic: argument " + show(t) + " is not a numeral");
    args.push_back(*n);
  }
  Num v = eval_pr(r->fun, args);
  return r->complement ? v != 0 : v == 0;
}

// ---------------------------------------------------------------------------
// Post rules

std::optional<std::string> canonical_rule(const std::string& rule) {
  static const std::map<std::string, std::string> names = {
      {"p1", "true"},   {"true", "true"}, {"p2", "refl"},   {"refl", "refl"},
      {"p3", "sym"},    {"sym", "sym"},   {"p4", "trans"},  {"trans", "trans"},
      {"p5", "succ"},   {"succ", "succ"}, {"inj", "inj"},   {"p6", "peano"},
      {"peano", "peano"}, {"p7", "clash"}, {"clash", "clash"},
  };
  auto it = names.find(rule);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_eq(const Formula& f) {
  return f->kind == FormulaKind::Atom && f->name == kEq && f->args.size() == 2;
}

std::optional<IndTerm> pred_of(const IndTerm& t) {
  if (t->kind == IndKind::App && t->name == kSucc && t->args.size() == 1) return t->args[0];
  return std::nullopt;
}

bool is_zero(const IndTerm& t) { return t->kind == IndKind::Const && t->name == kZero; }

}  // namespace

std::optional<TypeError> post_check(const Registry& reg, const std::string& rule,
                                    const std::vector<Formula>& premises,
                                    const Formula& conclusion) {
  auto fail = [&](const std::string& why) {
    return TypeError{TypeErrorCode::BadPostInstance, {}, "post[" + rule + "]", why};
  };
  auto name = canonical_rule(rule);
  if (!name) return fail("unknown Post rule");
  if (conclusion->kind != FormulaKind::Atom) return fail("conclusion " + show(conclusion) + " is not atomic");
  for (const auto& p : premises)
    if (p->kind != FormulaKind::Atom) return fail("premise " + show(p) + " is not atomic");

  auto arity = [&](std::size_t n) -> std::optional<TypeError> {
    if (premises.size() != n)
      return fail("expects " + std::to_string(n) + " premises, got " + std::to_string(premises.size()));
    return std::nullopt;
  };
  auto eq_premises = [&]() -> std::optional<TypeError> {
    for (const auto& p : premises)
      if (!is_eq(p)) return fail("premise " + show(p) + " is not an equation");
    return std::nullopt;
  };
  auto well_formed = [&](const Formula& f) -> std::optional<TypeError> {
    const PRRel* r = reg.rel(f->name);
    if (!r) return fail("predicate '" + f->name + "' is not a registered relation");
    if (static_cast<int>(f->args.size()) != r->fun->arity) return fail("wrong arity in " + show(f));
    return std::nullopt;
  };
  if (auto e = well_formed(conclusion)) return e;
  for (const auto& p : premises)
    if (auto e = well_formed(p)) return e;

  const std::string& n = *name;
  if (n == "true") {
    if (auto e = arity(0)) return e;
    if (!is_closed(conclusion)) return fail(show(conclusion) + " is not closed");
    if (!eval_atomic(reg, conclusion)) return fail(show(conclusion) + " evaluates to false");
    return std::nullopt;
  }
  if (n == "refl") {
    if (auto e = arity(0)) return e;
    if (!is_eq(conclusion) || !alpha_equal(conclusion->args[0], conclusion->args[1]))
      return fail(show(conclusion) + " is not of the form Eq(m, m)");
    return std::nullopt;
  }
  if (n == "sym") {
    if (auto e = arity(1)) return e;
    if (auto e = eq_premises()) return e;
    const auto& p = premises[0];
    if (!is_eq(conclusion) || !alpha_equal(p->args[0], conclusion->args[1]) ||
        !alpha_equal(p->args[1], conclusion->args[0]))
      return fail(show(conclusion) + " is not the symmetric form of " + show(p));
    return std::nullopt;
  }
  if (n == "trans") {
    if (auto e = arity(2)) return e;
    if (auto e = eq_premises()) return e;
    const auto& p = premises[0];
    const auto& q = premises[1];
    if (!alpha_equal(p->args[1], q->args[0])) return fail("middle terms of the premises differ");
    if (!is_eq(conclusion) || !alpha_equal(p->args[0], conclusion->args[0]) ||
        !alpha_equal(q->args[1], conclusion->args[1]))
      return fail(show(conclusion) + " does not follow by transitivity");
    return std::nullopt;
  }
  if (n == "succ" || n == "inj") {
    if (auto e = arity(1)) return e;
    if (auto e = eq_premises()) return e;
    if (!is_eq(conclusion)) return fail("conclusion is not an equation");
    Formula small = n == "succ" ? premises[0] : conclusion;
    Formula big = n == "succ" ? conclusion : premises[0];
    auto l = pred_of(big->args[0]);
    auto r = pred_of(big->args[1]);
    if (!l || !r || !alpha_equal(*l, small->args[0]) || !alpha_equal(*r, small->args[1]))
      return fail(show(big) + " is not Eq(S m, S n) for " + show(small));
    return std::nullopt;
  }
  if (n == "peano") {
    if (auto e = arity(1)) return e;
    if (auto e = eq_premises()) return e;
    if (!pred_of(premises[0]->args[0]) || !is_zero(premises[0]->args[1]))
      return fail(show(premises[0]) + " is not of the form Eq(S m, 0)");
    return std::nullopt;
  }
  // clash
  if (auto e = arity(2)) return e;
  const auto& p = premises[0];
  const auto& q = premises[1];
  const PRRel* r = reg.rel(p->name);
  if (r->partner != q->name) return fail(q->name + " is not the complement of " + p->name);
  if (p->args.size() != q->args.size()) return fail("argument count differs");
  for (std::size_t i = 0; i < p->args.size(); ++i)
    if (!alpha_equal(p->args[i], q->args[i])) return fail("arguments of the clashing atoms differ");
  return std::nullopt;
}

}  // namespace mpk::arith
