#include "mpk/typecheck.hpp"

#include <functional>

namespace mpk {

namespace {

[[noreturn]] void fail(TypeErrorCode code, const Path& p, std::string rule, std::string msg) {
  throw TypeErrorException(TypeError{code, p, std::move(rule), std::move(msg)});
}

Path child(const Path& p, int i) {
  Path q = p;
  q.push_back(i);
  return q;
}

// ---------------------------------------------------------------------------
// Well-formedness

void wf_ind(const Theory& th, const IndTerm& t, const Path& p) {
  const Signature& sig = th.sig;
  switch (t->kind) {
    case IndKind::Var:
      return;
    case IndKind::Const:
      if (sig.arithmetic) {
        if (t->name != kZero) fail(TypeErrorCode::UnboundVar, p, "term", "constant '" + t->name + "' is not a term of arithmetic");
      } else if (!sig.constants.count(t->name)) {
        fail(TypeErrorCode::UnboundVar, p, "term", "undeclared constant '" + t->name + "'");
      }
      return;
    case IndKind::App: {
      int arity = -1;
      if (sig.arithmetic) {
        if (t->name == kSucc) arity = 1;
      } else if (auto it = sig.functions.find(t->name); it != sig.functions.end()) {
        arity = it->second;
      }
      if (arity < 0) fail(TypeErrorCode::UnboundVar, p, "term", "undeclared function '" + t->name + "'");
      if (static_cast<int>(t->args.size()) != arity)
        fail(TypeErrorCode::ArityMismatch, p, "term",
             "'" + t->name + "' expects " + std::to_string(arity) + " arguments, got " +
                 std::to_string(t->args.size()));
      for (const auto& a : t->args) wf_ind(th, a, p);
      return;
    }
  }
}

void wf_formula(const Theory& th, const Formula& f, const Path& p) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      auto it = th.sig.predicates.find(f->name);
      if (it == th.sig.predicates.end())
        fail(TypeErrorCode::UnboundVar, p, "formula", "undeclared predicate '" + f->name + "'");
      if (static_cast<int>(f->args.size()) != it->second)
        fail(TypeErrorCode::ArityMismatch, p, "formula",
             "'" + f->name + "' expects " + std::to_string(it->second) + " arguments, got " +
                 std::to_string(f->args.size()));
      for (const auto& a : f->args) wf_ind(th, a, p);
      return;
    }
    case FormulaKind::Bottom:
      if (th.arithmetic())
        fail(TypeErrorCode::BadSystemConstruct, p, "formula",
             "bot is not a formula of arithmetic; falsity is False0");
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      wf_formula(th, f->lhs, p);
      wf_formula(th, f->rhs, p);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      wf_formula(th, f->lhs, p);
      return;
  }
}

bool excluded(System sys, ProofKind k) {
  switch (sys) {
    case System::IL_HMP:
      return k == ProofKind::Em0 || k == ProofKind::Em1 || k == ProofKind::Hyp ||
             k == ProofKind::Wit || k == ProofKind::Hypz || k == ProofKind::True ||
             k == ProofKind::Rec || k == ProofKind::Post;
    case System::IL_EM1:
      return k == ProofKind::MpConst || k == ProofKind::True || k == ProofKind::Rec ||
             k == ProofKind::Post;
    case System::HA_EM1:
      return k == ProofKind::MpConst || k == ProofKind::Em0 || k == ProofKind::Hypz;
  }
  return false;
}

void admissible(System sys, const Proof& t, const Path& p) {
  for (std::size_t i = 0; i < t->kids.size(); ++i)
    admissible(sys, t->kids[i], child(p, static_cast<int>(i)));
  if (excluded(sys, t->kind))
    fail(TypeErrorCode::BadSystemConstruct, p, std::string(kind_name(t->kind)),
         std::string(kind_name(t->kind)) + " is not a construct of " + std::string(system_name(sys)));
}

// ---------------------------------------------------------------------------
// Occurrence discipline

void discipline(const Proof& t, const std::string& a, bool left, const Formula& hyp_annot,
                const Formula& wit_annot, const std::set<std::string>& shared,
                std::vector<std::string>& bound, const Path& p) {
  switch (t->kind) {
    case ProofKind::Hyp:
    case ProofKind::Wit: {
      if (t->name != a) return;
      bool is_hyp = t->kind == ProofKind::Hyp;
      if (is_hyp != left)
        fail(TypeErrorCode::DisciplineViolation, p, "EM1",
             std::string(is_hyp ? "hyp" : "wit") + "[" + a + "] occurs in the " +
                 (left ? "left" : "right") + " branch");
      const Formula& want = is_hyp ? hyp_annot : wit_annot;
      if (!alpha_equal(t->annot, want))
        fail(TypeErrorCode::DisciplineViolation, p, "EM1",
             "annotation " + show(t->annot) + " of " + a + " differs from " + show(want));
      for (const auto& b : bound)
        if (shared.count(b))
          fail(TypeErrorCode::DisciplineViolation, p, "EM1",
               "variable " + b + " of the em1 formula is bound above this occurrence of " + a);
      return;
    }
    case ProofKind::Em0:
    case ProofKind::Em1:
      if (t->name == a) return;
      break;
    default:
      break;
  }
  bool binds = t->kind == ProofKind::ILam || t->kind == ProofKind::ExElim;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    bool under = binds && (t->kind == ProofKind::ILam || i == 1);
    if (under) bound.push_back(t->name);
    discipline(t->kids[i], a, left, hyp_annot, wit_annot, shared, bound,
               child(p, static_cast<int>(i)));
    if (under) bound.pop_back();
  }
}

// ---------------------------------------------------------------------------
// The checker

class Checker {
 public:
  Checker(System sys, const Theory& th, const Context& ctx)
      : sys_(sys), th_(th), env_(ctx.entries()) {}

  void check(const Proof& t, const Formula& goal, const Path& p) {
    switch (t->kind) {
      case ProofKind::Lam: {
        if (goal->kind != FormulaKind::Imp)
          fail(TypeErrorCode::AnnotationMismatch, p, "->I", "abstraction checked against " + show(goal));
        wf_formula(th_, t->annot, p);
        expect(t->annot, goal->lhs, p, "->I");
        Push g(env_, EntryKind::ProofVar, t->name, t->annot);
        check(t->kids[0], goal->rhs, child(p, 0));
        return;
      }
      case ProofKind::ILam: {
        if (goal->kind != FormulaKind::Forall)
          fail(TypeErrorCode::AnnotationMismatch, p, "forall-I", "abstraction checked against " + show(goal));
        eigen_context(t->name, p, "forall-I");
        if (t->name != goal->name && free_ind_vars(goal).count(t->name))
          fail(TypeErrorCode::EigenvariableViolation, p, "forall-I",
               t->name + " occurs free in " + show(goal));
        check(t->kids[0], subst_ind(goal->lhs, mk_ivar(t->name), goal->name), child(p, 0));
        return;
      }
      case ProofKind::Pair:
        if (goal->kind != FormulaKind::And)
          fail(TypeErrorCode::AnnotationMismatch, p, "&I", "pair checked against " + show(goal));
        check(t->kids[0], goal->lhs, child(p, 0));
        check(t->kids[1], goal->rhs, child(p, 1));
        return;
      case ProofKind::Inj: {
        if (goal->kind != FormulaKind::Or)
          fail(TypeErrorCode::AnnotationMismatch, p, "|I", "injection checked against " + show(goal));
        wf_formula(th_, t->annot, p);
        const Formula& mine = t->index == 0 ? goal->lhs : goal->rhs;
        const Formula& other = t->index == 0 ? goal->rhs : goal->lhs;
        expect(t->annot, other, p, "|I");
        check(t->kids[0], mine, child(p, 0));
        return;
      }
      case ProofKind::Case: {
        Formula d = infer(t->kids[0], child(p, 0));
        if (d->kind != FormulaKind::Or)
          fail(TypeErrorCode::AnnotationMismatch, p, "|E", "case over a proof of " + show(d));
        {
          Push g(env_, EntryKind::ProofVar, t->name, d->lhs);
          check(t->kids[1], goal, child(p, 1));
        }
        Push g(env_, EntryKind::ProofVar, t->name2, d->rhs);
        check(t->kids[2], goal, child(p, 2));
        return;
      }
      case ProofKind::ExIntro:
        expect(exintro(t, p), goal, p, "ex-I");
        return;
      case ProofKind::ExElim:
        exelim(t, goal, p);
        return;
      case ProofKind::Em0:
        em0(t, goal, p);
        return;
      case ProofKind::Em1:
        em1(t, goal, p);
        return;
      case ProofKind::True: {
        if (goal->kind != FormulaKind::Atom)
          fail(TypeErrorCode::BadPostInstance, p, "post[true]", "tt checked against " + show(goal));
        wf_formula(th_, goal, p);
        auto e1 = arith::post_check(th_.arith, "true", {}, goal);
        if (!e1) return;
        auto e2 = arith::post_check(th_.arith, "refl", {}, goal);
        if (!e2) return;
        e1->path = p;
        throw TypeErrorException(*e1);
      }
      case ProofKind::Post:
        post(t, goal, p);
        return;
      case ProofKind::App:
        // a beta redex checks its body against the goal, so that a body
        // that only checks (tt, post) survives reduction of its context
        if (t->kids[0]->kind == ProofKind::Lam) {
          const Proof& f = t->kids[0];
          wf_formula(th_, f->annot, child(p, 0));
          {
            Push g(env_, EntryKind::ProofVar, f->name, f->annot);
            check(f->kids[0], goal, child(child(p, 0), 0));
          }
          check(t->kids[1], f->annot, child(p, 1));
          return;
        }
        expect(infer(t, p), goal, p, std::string(kind_name(t->kind)));
        return;
      case ProofKind::IApp:
        if (t->kids[0]->kind == ProofKind::ILam) {
          std::optional<TypeErrorException> first;
          try {
            expect(infer(t, p), goal, p, std::string(kind_name(t->kind)));
            return;
          } catch (const TypeErrorException& e) {
            first = e;
          }
          // (fun {y} => b) @ m against C with y not in C: b proves all y. C
          const Proof& f = t->kids[0];
          bool fits = !free_ind_vars(goal).count(f->name);
          for (const auto& e : env_) fits = fits && !free_ind_vars(e.formula).count(f->name);
          if (!fits) throw *first;
          try {
            check(f->kids[0], goal, child(child(p, 0), 0));
          } catch (const TypeErrorException&) {
            throw *first;
          }
          return;
        }
        expect(infer(t, p), goal, p, std::string(kind_name(t->kind)));
        return;
      default:
        expect(infer(t, p), goal, p, std::string(kind_name(t->kind)));
    }
  }

  Formula infer(const Proof& t, const Path& p) {
    switch (t->kind) {
      case ProofKind::Var: {
        for (auto it = env_.rbegin(); it != env_.rend(); ++it)
          if (it->kind == EntryKind::ProofVar && it->name == t->name) return it->formula;
        fail(TypeErrorCode::UnboundVar, p, "axiom", "unbound proof variable '" + t->name + "'");
      }
      case ProofKind::App: {
        Formula f = infer(t->kids[0], child(p, 0));
        if (f->kind != FormulaKind::Imp)
          fail(TypeErrorCode::AnnotationMismatch, p, "->E", "applying a proof of " + show(f));
        check(t->kids[1], f->lhs, child(p, 1));
        return f->rhs;
      }
      case ProofKind::IApp: {
        wf_ind(th_, t->ind, p);
        Formula f = infer(t->kids[0], child(p, 0));
        if (f->kind != FormulaKind::Forall)
          fail(TypeErrorCode::AnnotationMismatch, p, "forall-E",
               "instantiating a proof of " + show(f));
        return instantiate(f, t->ind);
      }
      case ProofKind::Lam: {
        wf_formula(th_, t->annot, p);
        Push g(env_, EntryKind::ProofVar, t->name, t->annot);
        return mk_imp(t->annot, infer(t->kids[0], child(p, 0)));
      }
      case ProofKind::ILam: {
        eigen_context(t->name, p, "forall-I");
        return mk_forall(t->name, infer(t->kids[0], child(p, 0)));
      }
      case ProofKind::Pair: {
        Formula a = infer(t->kids[0], child(p, 0));
        return mk_and(a, infer(t->kids[1], child(p, 1)));
      }
      case ProofKind::Proj: {
        Formula f = infer(t->kids[0], child(p, 0));
        if (f->kind != FormulaKind::And)
          fail(TypeErrorCode::AnnotationMismatch, p, "&E", "projection of a proof of " + show(f));
        return t->index == 0 ? f->lhs : f->rhs;
      }
      case ProofKind::Inj: {
        wf_formula(th_, t->annot, p);
        Formula a = infer(t->kids[0], child(p, 0));
        return t->index == 0 ? mk_or(a, t->annot) : mk_or(t->annot, a);
      }
      case ProofKind::Case: {
        Formula d = infer(t->kids[0], child(p, 0));
        if (d->kind != FormulaKind::Or)
          fail(TypeErrorCode::AnnotationMismatch, p, "|E", "case over a proof of " + show(d));
        Formula c;
        {
          Push g(env_, EntryKind::ProofVar, t->name, d->lhs);
          c = infer(t->kids[1], child(p, 1));
        }
        Push g(env_, EntryKind::ProofVar, t->name2, d->rhs);
        check(t->kids[2], c, child(p, 2));
        return c;
      }
      case ProofKind::ExIntro:
        return exintro(t, p);
      case ProofKind::ExElim:
        return exelim(t, nullptr, p);
      case ProofKind::Em0:
        return em0(t, nullptr, p);
      case ProofKind::Em1:
        return em1(t, nullptr, p);
      case ProofKind::Hyp:
      case ProofKind::Wit: {
        bool hyp = t->kind == ProofKind::Hyp;
        const char* rule = hyp ? "Hyp" : "Wit";
        wf_formula(th_, t->annot, p);
        if (t->annot->kind != (hyp ? FormulaKind::Forall : FormulaKind::Exists))
          fail(TypeErrorCode::AnnotationMismatch, p, rule,
               std::string(hyp ? "hyp" : "wit") + " annotated with " + show(t->annot));
        for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
          if (it->kind != EntryKind::HypVar || it->name != t->name) continue;
          if (!alpha_equal(it->formula, t->annot))
            fail(TypeErrorCode::AnnotationMismatch, p, rule,
                 t->name + " : " + show(it->formula) + " but annotated " + show(t->annot));
          return t->annot;
        }
        fail(TypeErrorCode::UnboundVar, p, rule, "unbound hypothesis variable '" + t->name + "'");
      }
      case ProofKind::Hypz: {
        wf_formula(th_, t->annot, p);
        require_negative(t->annot, p, "Hypz");
        for (const auto& e : env_)
          if (e.kind == EntryKind::HypVar && alpha_equal(e.formula, t->annot)) return t->annot;
        fail(TypeErrorCode::UnboundVar, p, "Hypz", "no hypothesis " + show(t->annot) + " in context");
      }
      case ProofKind::Efq:
        wf_formula(th_, t->annot, p);
        return mk_imp(falsity(th_), t->annot);
      case ProofKind::MpConst: {
        wf_formula(th_, t->annot, p);
        const Formula& e = t->annot;
        if (e->kind != FormulaKind::Exists)
          fail(TypeErrorCode::AnnotationMismatch, p, "HMP", "mp annotated with " + show(e));
        if (!is_propositional(e->lhs))
          fail(TypeErrorCode::NotPropositional, p, "HMP", show(e->lhs) + " is not propositional");
        if (contains_implication(e->lhs))
          fail(TypeErrorCode::BadSystemConstruct, p, "HMP",
               "-> occurs in " + show(e->lhs) + "; HMP needs an implication-free matrix");
        return mk_imp(mk_not(mk_not(e)), e);
      }
      case ProofKind::True:
        fail(TypeErrorCode::AnnotationMismatch, p, "post[true]",
             "cannot infer the atom proved by tt; give it an expected type");
      case ProofKind::Rec:
        return rec(t, p);
      case ProofKind::Post:
        return post(t, nullptr, p);
    }
    fail(TypeErrorCode::BadSystemConstruct, p, "?", "unknown construct");
  }

 private:
  System sys_;
  const Theory& th_;
  std::vector<ContextEntry> env_;

  struct Push {
    Push(std::vector<ContextEntry>& env, EntryKind k, const std::string& n, const Formula& f)
        : env_(env) {
      env_.push_back({k, n, f});
    }
    ~Push() { env_.pop_back(); }
    Push(const Push&) = delete;
    Push& operator=(const Push&) = delete;
    std::vector<ContextEntry>& env_;
  };

  void expect(const Formula& actual, const Formula& goal, const Path& p, const std::string& rule) {
    if (!alpha_equal(actual, goal))
      fail(TypeErrorCode::AnnotationMismatch, p, rule,
           "expected " + show(goal) + ", found " + show(actual));
  }

  void eigen_context(const std::string& v, const Path& p, const std::string& rule) {
    for (const auto& e : env_)
      if (free_ind_vars(e.formula).count(v))
        fail(TypeErrorCode::EigenvariableViolation, p, rule,
             v + " occurs free in the context entry " + e.name + " : " + show(e.formula));
  }

  void require_negative(const Formula& f, const Path& p, const std::string& rule) {
    if (!is_propositional(f))
      fail(TypeErrorCode::NotPropositional, p, rule, show(f) + " is not propositional");
    if (!is_negative(f)) fail(TypeErrorCode::NotNegative, p, rule, show(f) + " is not negative");
  }

  Formula exintro(const Proof& t, const Path& p) {
    wf_ind(th_, t->ind, p);
    wf_formula(th_, t->annot, p);
    if (t->annot->kind != FormulaKind::Exists)
      fail(TypeErrorCode::AnnotationMismatch, p, "ex-I", "witness pair annotated " + show(t->annot));
    check(t->kids[0], instantiate(t->annot, t->ind), child(p, 0));
    return t->annot;
  }

  // goal may be null (inference).
  Formula exelim(const Proof& t, const Formula& goal, const Path& p) {
    Formula e = infer(t->kids[0], child(p, 0));
    if (e->kind != FormulaKind::Exists)
      fail(TypeErrorCode::AnnotationMismatch, p, "ex-E", "destructing a proof of " + show(e));
    const std::string& a = t->name;
    eigen_context(a, p, "ex-E");
    if (free_ind_vars(e).count(a))
      fail(TypeErrorCode::EigenvariableViolation, p, "ex-E", a + " occurs free in " + show(e));
    if (goal && free_ind_vars(goal).count(a))
      fail(TypeErrorCode::EigenvariableViolation, p, "ex-E", a + " occurs free in " + show(goal));
    Push g(env_, EntryKind::ProofVar, t->name2, subst_ind(e->lhs, mk_ivar(a), e->name));
    if (goal) {
      check(t->kids[1], goal, child(p, 1));
      return goal;
    }
    Formula c = infer(t->kids[1], child(p, 1));
    if (free_ind_vars(c).count(a))
      fail(TypeErrorCode::EigenvariableViolation, p, "ex-E", a + " occurs free in " + show(c));
    return c;
  }

  Formula em0(const Proof& t, Formula goal, const Path& p) {
    wf_formula(th_, t->annot, p);
    require_negative(t->annot, p, "EM0");
    {
      Push g(env_, EntryKind::HypVar, t->name, mk_not(t->annot));
      if (goal)
        check(t->kids[0], goal, child(p, 0));
      else
        goal = infer(t->kids[0], child(p, 0));
    }
    Push g(env_, EntryKind::HypVar, t->name, t->annot);
    check(t->kids[1], goal, child(p, 1));
    return goal;
  }

  void em1_conclusion(const Formula& c, const Path& p) {
    if (c->kind != FormulaKind::Exists)
      fail(TypeErrorCode::AnnotationMismatch, p, "EM1", "em1 concludes " + show(c) + ", not an existential");
    require_negative(c->lhs, p, "EM1");
  }

  Formula em1(const Proof& t, Formula goal, const Path& p) {
    const Formula& fa = t->annot;
    wf_formula(th_, fa, p);
    if (fa->kind != FormulaKind::Forall)
      fail(TypeErrorCode::AnnotationMismatch, p, "EM1", "em1 annotated with " + show(fa));
    if (th_.arithmetic()) {
      if (fa->lhs->kind != FormulaKind::Atom)
        fail(is_propositional(fa->lhs) ? TypeErrorCode::NotNegative : TypeErrorCode::NotPropositional,
             p, "EM1", show(fa->lhs) + " is not atomic");
    } else {
      require_negative(fa->lhs, p, "EM1");
    }
    auto w = wit_annotation(fa, &th_.sig);
    if (!w) fail(TypeErrorCode::AnnotationMismatch, p, "EM1", "no complement for " + show(fa->lhs));
    if (auto e = check_discipline(th_, t->kids[0], t->kids[1], t->name, fa)) {
      Path q = p;
      q.insert(q.end(), e->path.begin(), e->path.end());
      e->path = q;
      throw TypeErrorException(*e);
    }
    if (goal) em1_conclusion(goal, p);
    {
      Push g(env_, EntryKind::HypVar, t->name, fa);
      if (goal) {
        check(t->kids[0], goal, child(p, 0));
      } else {
        goal = infer(t->kids[0], child(p, 0));
        em1_conclusion(goal, p);
      }
    }
    Push g(env_, EntryKind::HypVar, t->name, *w);
    check(t->kids[1], goal, child(p, 1));
    return goal;
  }

  Formula rec(const Proof& t, const Path& p) {
    wf_ind(th_, t->ind, p);
    Formula v = infer(t->kids[1], child(p, 1));
    if (v->kind != FormulaKind::Forall || v->lhs->kind != FormulaKind::Imp)
      fail(TypeErrorCode::AnnotationMismatch, p, "Ind", "induction step proves " + show(v));
    const std::string& b = v->name;
    Formula motive = v->lhs->lhs;
    Formula next = subst_ind(motive, mk_succ(mk_ivar(b)), b);
    if (!alpha_equal(next, v->lhs->rhs))
      fail(TypeErrorCode::AnnotationMismatch, p, "Ind",
           "induction step proves " + show(v) + ", expected conclusion " + show(next));
    check(t->kids[0], subst_ind(motive, mk_zero(), b), child(p, 0));
    return subst_ind(motive, t->ind, b);
  }

  // goal may be null (inference).
  Formula post(const Proof& t, Formula goal, const Path& p) {
    std::string label = "post[" + t->rule + "]";
    auto rule = arith::canonical_rule(t->rule);
    if (!rule) fail(TypeErrorCode::BadPostInstance, p, label, "unknown Post rule '" + t->rule + "'");
    const std::string& r = *rule;
    std::size_t n = t->kids.size();
    std::vector<Formula> prem(n);
    for (std::size_t i = 0; i < n; ++i) prem[i] = soft_infer(t->kids[i], child(p, static_cast<int>(i)));
    std::vector<bool> inferred(n);
    for (std::size_t i = 0; i < n; ++i) inferred[i] = prem[i] != nullptr;

    auto eq = [](IndTerm a, IndTerm b) { return mk_atom(arith::kEq, {std::move(a), std::move(b)}); };
    auto is_eq = [](const Formula& f) {
      return f && f->kind == FormulaKind::Atom && f->name == arith::kEq && f->args.size() == 2;
    };
    auto pred = [](const IndTerm& t) -> IndTerm {
      if (t->kind == IndKind::App && t->name == kSucc && t->args.size() == 1) return t->args[0];
      return nullptr;
    };

    if (r == "sym" && n == 1) {
      if (is_eq(prem[0]) && !goal) goal = eq(prem[0]->args[1], prem[0]->args[0]);
      if (!prem[0] && is_eq(goal)) prem[0] = eq(goal->args[1], goal->args[0]);
    } else if (r == "trans" && n == 2) {
      if (is_eq(prem[0]) && !prem[1] && is_eq(goal)) prem[1] = eq(prem[0]->args[1], goal->args[1]);
      if (is_eq(prem[1]) && !prem[0] && is_eq(goal)) prem[0] = eq(goal->args[0], prem[1]->args[0]);
      if (is_eq(prem[0]) && is_eq(prem[1]) && !goal) goal = eq(prem[0]->args[0], prem[1]->args[1]);
    } else if (r == "succ" && n == 1) {
      if (is_eq(prem[0]) && !goal)
        goal = eq(mk_succ(prem[0]->args[0]), mk_succ(prem[0]->args[1]));
      if (!prem[0] && is_eq(goal)) {
        auto l = pred(goal->args[0]);
        auto rr = pred(goal->args[1]);
        if (l && rr) prem[0] = eq(l, rr);
      }
    } else if (r == "inj" && n == 1) {
      if (is_eq(prem[0]) && !goal) {
        auto l = pred(prem[0]->args[0]);
        auto rr = pred(prem[0]->args[1]);
        if (l && rr) goal = eq(l, rr);
      }
      if (!prem[0] && is_eq(goal)) prem[0] = eq(mk_succ(goal->args[0]), mk_succ(goal->args[1]));
    } else if (r == "clash" && n == 2) {
      for (int i = 0; i < 2; ++i) {
        auto& known = prem[static_cast<std::size_t>(i)];
        auto& other = prem[static_cast<std::size_t>(1 - i)];
        if (known && !other && known->kind == FormulaKind::Atom)
          if (auto c = complement_atom(th_.sig, known)) other = *c;
      }
    }

    for (std::size_t i = 0; i < n; ++i)
      if (!prem[i])
        fail(TypeErrorCode::BadPostInstance, child(p, static_cast<int>(i)), label,
             "cannot determine premise " + std::to_string(i + 1));
    if (!goal)
      fail(TypeErrorCode::BadPostInstance, p, label, "cannot infer the conclusion; give it an expected type");
    wf_formula(th_, goal, p);
    for (std::size_t i = 0; i < n; ++i) {
      wf_formula(th_, prem[i], child(p, static_cast<int>(i)));
      if (!inferred[i]) check(t->kids[i], prem[i], child(p, static_cast<int>(i)));
    }
    if (auto e = arith::post_check(th_.arith, t->rule, prem, goal)) {
      e->path = p;
      throw TypeErrorException(*e);
    }
    return goal;
  }

  // Type of t if synthesizable, else null; errors are re-raised later
  // when t is checked against the derived premise.
  Formula soft_infer(const Proof& t, const Path& p) {
    if (t->kind == ProofKind::True) return nullptr;
    std::size_t depth = env_.size();
    try {
      return infer(t, p);
    } catch (const TypeErrorException&) {
      while (env_.size() > depth) env_.pop_back();
      return nullptr;
    }
  }
};

bool simply_universal_closed(const Formula& f) { return is_simply_universal(f) && is_closed(f); }

}  // namespace

std::optional<TypeError> check_formula(const Theory& th, const Formula& f) {
  try {
    wf_formula(th, f, {});
  } catch (const TypeErrorException& e) {
    return e.error();
  }
  return std::nullopt;
}

std::optional<TypeError> check_context(System sys, const Theory& th, const Context& ctx) {
  try {
    for (const auto& e : ctx.entries()) {
      wf_formula(th, e.formula, {});
      if (e.kind != EntryKind::HypVar) continue;
      const Formula& f = e.formula;
      bool ok = is_simply_universal(f) || is_propositional(f);
      if (f->kind == FormulaKind::Exists) {
        if (th.arithmetic())
          ok = f->lhs->kind == FormulaKind::Atom;
        else
          ok = f->lhs->kind == FormulaKind::Imp && f->lhs->rhs->kind == FormulaKind::Bottom &&
               is_negative(f->lhs->lhs);
      }
      if (sys == System::IL_HMP) ok = false;
      if (!ok)
        fail(TypeErrorCode::AnnotationMismatch, {}, "context",
             "hypothesis variable " + e.name + " cannot carry " + show(f) + " in " +
                 std::string(system_name(sys)));
    }
  } catch (const TypeErrorException& e) {
    return e.error();
  }
  return std::nullopt;
}

std::optional<TypeError> check_admissible(System sys, const Proof& t) {
  try {
    admissible(sys, t, {});
  } catch (const TypeErrorException& e) {
    return e.error();
  }
  return std::nullopt;
}

std::optional<TypeError> check(System sys, const Theory& th, const Context& ctx, const Proof& t,
                               const Formula& goal) {
  if ((sys == System::HA_EM1) != th.arithmetic())
    return TypeError{TypeErrorCode::BadSystemConstruct, {}, "system",
                     std::string(system_name(sys)) + " does not match the signature"};
  if (auto e = check_context(sys, th, ctx)) return e;
  if (auto e = check_formula(th, goal)) return e;
  if (auto e = check_admissible(sys, t)) return e;
  try {
    Checker(sys, th, ctx).check(t, goal, {});
  } catch (const TypeErrorException& e) {
    return e.error();
  }
  return std::nullopt;
}

Inferred infer(System sys, const Theory& th, const Context& ctx, const Proof& t) {
  if ((sys == System::HA_EM1) != th.arithmetic())
    return {nullptr, TypeError{TypeErrorCode::BadSystemConstruct, {}, "system",
                               std::string(system_name(sys)) + " does not match the signature"}};
  if (auto e = check_context(sys, th, ctx)) return {nullptr, e};
  if (auto e = check_admissible(sys, t)) return {nullptr, e};
  try {
    return {Checker(sys, th, ctx).infer(t, {}), std::nullopt};
  } catch (const TypeErrorException& e) {
    return {nullptr, e.error()};
  }
}

std::optional<TypeError> check_discipline(const Theory& th, const Proof& u, const Proof& v,
                                          const std::string& a, const Formula& forall_p) {
  auto w = wit_annotation(forall_p, &th.sig);
  if (!w)
    return TypeError{TypeErrorCode::DisciplineViolation, {}, "EM1",
                     "no witness formula for " + show(forall_p)};
  std::set<std::string> shared = free_ind_vars(forall_p);
  try {
    std::vector<std::string> bound;
    discipline(u, a, true, forall_p, *w, shared, bound, {0});
    discipline(v, a, false, forall_p, *w, shared, bound, {1});
  } catch (const TypeErrorException& e) {
    return e.error();
  }
  return std::nullopt;
}

bool is_quasi_closed(const Proof& t) {
  if (!free_proof_vars(t).empty() || !free_ind_vars(t).empty()) return false;
  std::function<bool(const Proof&, std::set<std::string>&)> walk =
      [&](const Proof& n, std::set<std::string>& bound) -> bool {
    if (n->kind == ProofKind::Hyp && !bound.count(n->name))
      return simply_universal_closed(n->annot);
    if (n->kind == ProofKind::Wit && !bound.count(n->name)) return false;
    bool binds = (n->kind == ProofKind::Em0 || n->kind == ProofKind::Em1) && !bound.count(n->name);
    if (binds) bound.insert(n->name);
    bool ok = true;
    for (const auto& k : n->kids)
      if (!walk(k, bound)) {
        ok = false;
        break;
      }
    if (binds) bound.erase(n->name);
    return ok;
  };
  std::set<std::string> bound;
  return walk(t, bound);
}

}  // namespace mpk
