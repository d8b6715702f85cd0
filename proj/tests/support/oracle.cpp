#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <vector>

using namespace mpk;

namespace oracle {

namespace {

// ---------------------------------------------------------------------------
// de Bruijn keys

struct Scopes {
  std::vector<std::string> ind, prf, hyp;
};

std::string ref(const std::vector<std::string>& s, const std::string& n) {
  for (std::size_t i = s.size(); i-- > 0;)
    if (s[i] == n) return "#" + std::to_string(s.size() - 1 - i);
  return "'" + n;
}

std::string db(const IndTerm& t, Scopes& s) {
  if (t->kind == IndKind::Var) return ref(s.ind, t->name);
  std::string r = (t->kind == IndKind::Const ? "C" : "F") + t->name + "(";
  for (const auto& a : t->args) r += db(a, s) + ",";
  return r + ")";
}

std::string db(const Formula& f, Scopes& s) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      std::string r = "P" + f->name + "(";
      for (const auto& a : f->args) r += db(a, s) + ",";
      return r + ")";
    }
    case FormulaKind::Bottom: return "B";
    case FormulaKind::And: return "(" + db(f->lhs, s) + "&" + db(f->rhs, s) + ")";
    case FormulaKind::Or: return "(" + db(f->lhs, s) + "|" + db(f->rhs, s) + ")";
    case FormulaKind::Imp: return "(" + db(f->lhs, s) + ">" + db(f->rhs, s) + ")";
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      s.ind.push_back(f->name);
      std::string r = (f->kind == FormulaKind::Forall ? "A." : "E.") + db(f->lhs, s);
      s.ind.pop_back();
      return r;
    }
  }
  return "?";
}

std::string db(const Proof& t, Scopes& s) {
  std::string r = std::string(kind_name(t->kind)) + "<" + std::to_string(t->index) + t->rule;
  if (t->annot) r += "[" + db(t->annot, s) + "]";
  if (t->ind) r += "@" + db(t->ind, s);
  switch (t->kind) {
    case ProofKind::Var: return r + ref(s.prf, t->name) + ">";
    case ProofKind::Hyp:
    case ProofKind::Wit: return r + ref(s.hyp, t->name) + ">";
    case ProofKind::Lam:
      s.prf.push_back(t->name);
      r += db(t->kids[0], s);
      s.prf.pop_back();
      return r + ">";
    case ProofKind::ILam:
      s.ind.push_back(t->name);
      r += db(t->kids[0], s);
      s.ind.pop_back();
      return r + ">";
    case ProofKind::Case:
      r += db(t->kids[0], s) + ";";
      s.prf.push_back(t->name);
      r += db(t->kids[1], s) + ";";
      s.prf.pop_back();
      s.prf.push_back(t->name2);
      r += db(t->kids[2], s);
      s.prf.pop_back();
      return r + ">";
    case ProofKind::ExElim:
      r += db(t->kids[0], s) + ";";
      s.ind.push_back(t->name);
      s.prf.push_back(t->name2);
      r += db(t->kids[1], s);
      s.prf.pop_back();
      s.ind.pop_back();
      return r + ">";
    case ProofKind::Em0:
    case ProofKind::Em1:
      s.hyp.push_back(t->name);
      r += db(t->kids[0], s) + ";" + db(t->kids[1], s);
      s.hyp.pop_back();
      return r + ">";
    default:
      for (const auto& k : t->kids) r += db(k, s) + ";";
      return r + ">";
  }
}

// ---------------------------------------------------------------------------
// Renaming apart

struct Renamer {
  int counter = 0;
  std::map<std::string, std::vector<std::string>> ind, prf, hyp;

  std::string fresh() { return "_b" + std::to_string(++counter); }

  static std::string look(std::map<std::string, std::vector<std::string>>& m, const std::string& n) {
    auto it = m.find(n);
    if (it == m.end() || it->second.empty()) return n;
    return it->second.back();
  }

  IndTerm go(const IndTerm& t) {
    if (t->kind == IndKind::Var) return mk_ivar(look(ind, t->name));
    if (t->kind == IndKind::Const) return t;
    std::vector<IndTerm> args;
    for (const auto& a : t->args) args.push_back(go(a));
    return mk_iapp(t->name, args);
  }

  Formula go(const Formula& f) {
    switch (f->kind) {
      case FormulaKind::Atom: {
        std::vector<IndTerm> args;
        for (const auto& a : f->args) args.push_back(go(a));
        return mk_atom(f->name, args);
      }
      case FormulaKind::Bottom: return f;
      case FormulaKind::And: return mk_and(go(f->lhs), go(f->rhs));
      case FormulaKind::Or: return mk_or(go(f->lhs), go(f->rhs));
      case FormulaKind::Imp: return mk_imp(go(f->lhs), go(f->rhs));
      case FormulaKind::Forall:
      case FormulaKind::Exists: {
        std::string n = fresh();
        ind[f->name].push_back(n);
        Formula b = go(f->lhs);
        ind[f->name].pop_back();
        return f->kind == FormulaKind::Forall ? mk_forall(n, b) : mk_exists(n, b);
      }
    }
    return f;
  }

  Proof go(const Proof& t) {
    ProofNode n = *t;
    if (n.annot) n.annot = go(n.annot);
    if (n.ind) n.ind = go(n.ind);
    switch (t->kind) {
      case ProofKind::Var: n.name = look(prf, t->name); break;
      case ProofKind::Hyp:
      case ProofKind::Wit: n.name = look(hyp, t->name); break;
      case ProofKind::Lam:
        n.name = fresh();
        prf[t->name].push_back(n.name);
        n.kids[0] = go(t->kids[0]);
        prf[t->name].pop_back();
        break;
      case ProofKind::ILam:
        n.name = fresh();
        ind[t->name].push_back(n.name);
        n.kids[0] = go(t->kids[0]);
        ind[t->name].pop_back();
        break;
      case ProofKind::Case:
        n.kids[0] = go(t->kids[0]);
        n.name = fresh();
        prf[t->name].push_back(n.name);
        n.kids[1] = go(t->kids[1]);
        prf[t->name].pop_back();
        n.name2 = fresh();
        prf[t->name2].push_back(n.name2);
        n.kids[2] = go(t->kids[2]);
        prf[t->name2].pop_back();
        break;
      case ProofKind::ExElim:
        n.kids[0] = go(t->kids[0]);
        n.name = fresh();
        n.name2 = fresh();
        ind[t->name].push_back(n.name);
        prf[t->name2].push_back(n.name2);
        n.kids[1] = go(t->kids[1]);
        prf[t->name2].pop_back();
        ind[t->name].pop_back();
        break;
      case ProofKind::Em0:
      case ProofKind::Em1:
        n.name = fresh();
        hyp[t->name].push_back(n.name);
        n.kids[0] = go(t->kids[0]);
        n.kids[1] = go(t->kids[1]);
        hyp[t->name].pop_back();
        break;
      default:
        for (auto& k : n.kids) k = go(k);
        break;
    }
    return std::make_shared<const ProofNode>(std::move(n));
  }
};

IndTerm nsub(const IndTerm& t, const IndTerm& m, const std::string& x) {
  if (t->kind == IndKind::Var) return t->name == x ? m : t;
  if (t->kind == IndKind::Const) return t;
  std::vector<IndTerm> args;
  for (const auto& a : t->args) args.push_back(nsub(a, m, x));
  return mk_iapp(t->name, args);
}

}  // namespace

std::string debruijn(const Proof& t) {
  Scopes s;
  return db(t, s);
}

std::string debruijn(const Formula& f) {
  Scopes s;
  return db(f, s);
}

Proof barendregt(const Proof& t) { return Renamer{}.go(t); }
Formula barendregt(const Formula& f) { return Renamer{}.go(f); }

Formula naive_subst_ind(const Formula& f, const IndTerm& m, const std::string& x) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      std::vector<IndTerm> args;
      for (const auto& a : f->args) args.push_back(nsub(a, m, x));
      return mk_atom(f->name, args);
    }
    case FormulaKind::Bottom: return f;
    case FormulaKind::And: return mk_and(naive_subst_ind(f->lhs, m, x), naive_subst_ind(f->rhs, m, x));
    case FormulaKind::Or: return mk_or(naive_subst_ind(f->lhs, m, x), naive_subst_ind(f->rhs, m, x));
    case FormulaKind::Imp: return mk_imp(naive_subst_ind(f->lhs, m, x), naive_subst_ind(f->rhs, m, x));
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      if (f->name == x) return f;
      return f->kind == FormulaKind::Forall ? mk_forall(f->name, naive_subst_ind(f->lhs, m, x))
                                            : mk_exists(f->name, naive_subst_ind(f->lhs, m, x));
  }
  return f;
}

Proof naive_subst_ind(const Proof& t, const IndTerm& m, const std::string& x) {
  ProofNode n = *t;
  if (n.annot) n.annot = naive_subst_ind(n.annot, m, x);
  if (n.ind) n.ind = nsub(n.ind, m, x);
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    bool bound = (t->kind == ProofKind::ILam && t->name == x) ||
                 (t->kind == ProofKind::ExElim && i == 1 && t->name == x);
    if (!bound) n.kids[i] = naive_subst_ind(t->kids[i], m, x);
  }
  return std::make_shared<const ProofNode>(std::move(n));
}

Proof naive_subst_proof(const Proof& t, const Proof& u, const std::string& x) {
  if (t->kind == ProofKind::Var) return t->name == x ? u : t;
  ProofNode n = *t;
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    bool bound = (t->kind == ProofKind::Lam && t->name == x) ||
                 (t->kind == ProofKind::Case && ((i == 1 && t->name == x) || (i == 2 && t->name2 == x))) ||
                 (t->kind == ProofKind::ExElim && i == 1 && t->name2 == x);
    if (!bound) n.kids[i] = naive_subst_proof(t->kids[i], u, x);
  }
  return std::make_shared<const ProofNode>(std::move(n));
}

Proof wit_subst(const Proof& v, const std::string& a, const IndTerm& m, bool arithmetic) {
  if (v->kind == ProofKind::Wit && v->name == a) {
    Formula ex = barendregt(v->annot);
    Formula body = naive_subst_ind(ex->lhs, m, ex->name);
    Proof inner = arithmetic ? mk_true() : mk_hypz(body);
    return mk_exintro(m, inner, v->annot);
  }
  if ((v->kind == ProofKind::Em0 || v->kind == ProofKind::Em1) && v->name == a) return v;
  ProofNode n = *v;
  for (auto& k : n.kids) k = wit_subst(k, a, m, arithmetic);
  return std::make_shared<const ProofNode>(std::move(n));
}

Proof hyp_subst_all(const Proof& u, const std::string& a) {
  if (u->kind == ProofKind::IApp && u->kids[0]->kind == ProofKind::Hyp && u->kids[0]->name == a) {
    Formula fa = barendregt(u->kids[0]->annot);
    return mk_hypz(naive_subst_ind(fa->lhs, u->ind, fa->name));
  }
  if ((u->kind == ProofKind::Em0 || u->kind == ProofKind::Em1) && u->name == a) return u;
  ProofNode n = *u;
  for (auto& k : n.kids) k = hyp_subst_all(k, a);
  return std::make_shared<const ProofNode>(std::move(n));
}

}  // namespace oracle
