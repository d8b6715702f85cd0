// Concrete-syntax printer.  Output always re-parses to an alpha-equal term.

#include "mpk/syntax.hpp"

namespace mpk {

std::string show(const IndTerm& t) {
  if (auto n = numeral_value(t)) return std::to_string(*n);
  switch (t->kind) {
    case IndKind::Var:
    case IndKind::Const:
      return t->name;
    case IndKind::App: {
      std::string s = t->name + "(";
      for (std::size_t i = 0; i < t->args.size(); ++i) {
        if (i) s += ", ";
        s += show(t->args[i]);
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

// 0 quantifier, 1 ->, 2 |, 3 &, 4 ~ / atoms
int fprec(const Formula& f) {
  switch (f->kind) {
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return 0;
    case FormulaKind::Imp:
      return f->rhs->kind == FormulaKind::Bottom ? 4 : 1;
    case FormulaKind::Or:
      return 2;
    case FormulaKind::And:
      return 3;
    default:
      return 4;
  }
}

std::string showf(const Formula& f, int min) {
  std::string s;
  switch (f->kind) {
    case FormulaKind::Atom:
      s = f->name;
      if (!f->args.empty()) {
        s += "(";
        for (std::size_t i = 0; i < f->args.size(); ++i) {
          if (i) s += ", ";
          s += show(f->args[i]);
        }
        s += ")";
      }
      return s;
    case FormulaKind::Bottom:
      return "bot";
    case FormulaKind::Imp:
      if (f->rhs->kind == FormulaKind::Bottom)
        s = "~" + showf(f->lhs, 4);
      else
        s = showf(f->lhs, 2) + " -> " + showf(f->rhs, 1);
      break;
    case FormulaKind::Or:
      s = showf(f->lhs, 3) + " | " + showf(f->rhs, 2);
      break;
    case FormulaKind::And:
      s = showf(f->lhs, 4) + " & " + showf(f->rhs, 3);
      break;
    case FormulaKind::Forall:
      s = "all " + f->name + ". " + showf(f->lhs, 0);
      break;
    case FormulaKind::Exists:
      s = "ex " + f->name + ". " + showf(f->lhs, 0);
      break;
  }
  if (fprec(f) < min) return "(" + s + ")";
  return s;
}

class Printer {
 public:
  explicit Printer(PrintScope scope) : scope_(std::move(scope)) {}

  // 0 binder forms, 1 application, 2 atomic
  std::string go(const Proof& t, int min) {
    int prec = 2;
    std::string s;
    switch (t->kind) {
      case ProofKind::Var:
        s = t->name;
        break;
      case ProofKind::App:
        prec = 1;
        s = go(t->kids[0], 1);
        {
          std::string arg = go(t->kids[1], 2);
          // `f @ x (u)` would read x(u) as a function term
          if (t->kids[0]->kind == ProofKind::IApp && arg.front() == '(')
            s = "(" + s + ")";
          s += " " + arg;
        }
        break;
      case ProofKind::IApp:
        prec = 1;
        s = go(t->kids[0], 1) + " @ " + show(t->ind);
        break;
      case ProofKind::Lam:
        prec = 0;
        s = "fun (" + t->name + " : " + show(t->annot) + ") => " + go(t->kids[0], 0);
        break;
      case ProofKind::ILam:
        prec = 0;
        s = "fun {" + t->name + "} => " + go(t->kids[0], 0);
        break;
      case ProofKind::Pair:
        s = "<" + go(t->kids[0], 0) + ", " + go(t->kids[1], 0) + ">";
        break;
      case ProofKind::Proj:
        prec = 1;
        s = (t->index == 0 ? "fst " : "snd ") + go(t->kids[0], 2);
        break;
      case ProofKind::Inj:
        prec = 1;
        s = (t->index == 0 ? "inl[" : "inr[") + show(t->annot) + "] " + go(t->kids[0], 2);
        break;
      case ProofKind::Case:
        prec = 0;
        s = "case " + go(t->kids[0], 0) + " of { " + t->name + " => " + go(t->kids[1], 0) +
            " | " + t->name2 + " => " + go(t->kids[2], 0) + " }";
        break;
      case ProofKind::ExIntro:
        s = "((" + show(t->ind) + ", " + go(t->kids[0], 0) + ") : " + show(t->annot) + ")";
        break;
      case ProofKind::ExElim:
        prec = 0;
        s = "dest " + go(t->kids[0], 0) + " as (" + t->name + ", " + t->name2 + ") => " +
            go(t->kids[1], 0);
        break;
      case ProofKind::Em0:
      case ProofKind::Em1:
        s = em(t);
        break;
      case ProofKind::Hyp:
        s = hypvar("hyp", t, scope_.universal);
        break;
      case ProofKind::Wit:
        s = hypvar("wit", t, scope_.existential);
        break;
      case ProofKind::Hypz:
        s = "hypo[" + show(t->annot) + "]";
        break;
      case ProofKind::Efq:
        s = "efq[" + show(t->annot) + "]";
        break;
      case ProofKind::MpConst:
        s = "mp[" + show(t->annot) + "]";
        break;
      case ProofKind::True:
        s = "tt";
        break;
      case ProofKind::Rec:
        s = "rec(" + go(t->kids[0], 0) + ", " + go(t->kids[1], 0) + ", " + show(t->ind) + ")";
        break;
      case ProofKind::Post:
        s = "post[" + t->rule + "](";
        for (std::size_t i = 0; i < t->kids.size(); ++i) {
          if (i) s += ", ";
          s += go(t->kids[i], 0);
        }
        s += ")";
        break;
    }
    if (prec < min) return "(" + s + ")";
    return s;
  }

 private:
  PrintScope scope_;

  std::string hypvar(const char* kw, const Proof& t, const std::map<std::string, Formula>& m) {
    auto it = m.find(t->name);
    if (it != m.end() && it->second && alpha_equal(it->second, t->annot))
      return std::string(kw) + "[" + t->name + "]";
    return std::string(kw) + "[" + t->name + " : " + show(t->annot) + "]";
  }

  std::string em(const Proof& t) {
    const std::string& a = t->name;
    auto saved_u = scope_.universal;
    auto saved_e = scope_.existential;
    if (t->kind == ProofKind::Em1) {
      scope_.universal[a] = t->annot;
      auto w = wit_annotation(t->annot, scope_.sig);
      if (w)
        scope_.existential[a] = *w;
      else
        scope_.existential.erase(a);
    } else {
      scope_.universal.erase(a);
      scope_.existential.erase(a);
    }
    std::string left = go(t->kids[0], 0);
    std::string right = go(t->kids[1], 0);
    scope_.universal = std::move(saved_u);
    scope_.existential = std::move(saved_e);
    return std::string(t->kind == ProofKind::Em1 ? "em1[" : "em0[") + show(t->annot) + "]{" + a +
           ". " + left + " | " + a + ". " + right + "}";
  }
};

}  // namespace

std::string show(const Formula& f) { return showf(f, 0); }

std::optional<Formula> wit_annotation(const Formula& forall_p, const Signature* sig) {
  if (!forall_p || forall_p->kind != FormulaKind::Forall) return std::nullopt;
  const Formula& p = forall_p->lhs;
  if (sig && sig->arithmetic) {
    auto c = complement_atom(*sig, p);
    if (!c) return std::nullopt;
    return mk_exists(forall_p->name, *c);
  }
  return mk_exists(forall_p->name, mk_not(p));
}

PrintScope scope_of(const Context& ctx, const Signature* sig) {
  PrintScope s;
  s.sig = sig;
  for (const auto& e : ctx.entries()) {
    if (e.kind != EntryKind::HypVar) continue;
    if (e.formula->kind == FormulaKind::Forall) s.universal[e.name] = e.formula;
    if (e.formula->kind == FormulaKind::Exists) s.existential[e.name] = e.formula;
  }
  return s;
}

std::string show(const Proof& t, const PrintScope& scope) { return Printer(scope).go(t, 0); }

}  // namespace mpk
