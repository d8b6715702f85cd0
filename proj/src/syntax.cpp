#include "mpk/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace mpk {

// ---------------------------------------------------------------------------
// Factories

IndTerm mk_ivar(std::string name) {
  return std::make_shared<const IndNode>(IndNode{IndKind::Var, std::move(name), {}});
}

IndTerm mk_iconst(std::string name) {
  return std::make_shared<const IndNode>(IndNode{IndKind::Const, std::move(name), {}});
}

IndTerm mk_iapp(std::string fn, std::vector<IndTerm> args) {
  return std::make_shared<const IndNode>(IndNode{IndKind::App, std::move(fn), std::move(args)});
}

IndTerm mk_zero() { return mk_iconst(std::string(kZero)); }

IndTerm mk_succ(IndTerm t) { return mk_iapp(std::string(kSucc), {std::move(t)}); }

IndTerm mk_numeral(std::uint64_t n) {
  IndTerm t = mk_zero();
  for (std::uint64_t i = 0; i < n; ++i) t = mk_succ(t);
  return t;
}

std::optional<std::uint64_t> numeral_value(const IndTerm& t) {
  std::uint64_t n = 0;
  const IndNode* cur = t.get();
  while (cur->kind == IndKind::App && cur->name == kSucc && cur->args.size() == 1) {
    ++n;
    cur = cur->args[0].get();
  }
  if (cur->kind == IndKind::Const && cur->name == kZero) return n;
  return std::nullopt;
}

namespace {

Formula mk_formula(FormulaKind k, std::string name, std::vector<IndTerm> args, Formula lhs,
                   Formula rhs) {
  return std::make_shared<const FormulaNode>(
      FormulaNode{k, std::move(name), std::move(args), std::move(lhs), std::move(rhs)});
}

Proof mk_proof(ProofNode n) { return std::make_shared<const ProofNode>(std::move(n)); }

ProofNode blank(ProofKind k) {
  ProofNode n;
  n.kind = k;
  return n;
}

}  // namespace

Formula mk_atom(std::string pred, std::vector<IndTerm> args) {
  return mk_formula(FormulaKind::Atom, std::move(pred), std::move(args), nullptr, nullptr);
}
Formula mk_bottom() {
  static const Formula bot = mk_formula(FormulaKind::Bottom, "", {}, nullptr, nullptr);
  return bot;
}
Formula mk_and(Formula a, Formula b) {
  return mk_formula(FormulaKind::And, "", {}, std::move(a), std::move(b));
}
Formula mk_or(Formula a, Formula b) {
  return mk_formula(FormulaKind::Or, "", {}, std::move(a), std::move(b));
}
Formula mk_imp(Formula a, Formula b) {
  return mk_formula(FormulaKind::Imp, "", {}, std::move(a), std::move(b));
}
Formula mk_not(Formula a) { return mk_imp(std::move(a), mk_bottom()); }
Formula mk_forall(std::string var, Formula body) {
  return mk_formula(FormulaKind::Forall, std::move(var), {}, std::move(body), nullptr);
}
Formula mk_exists(std::string var, Formula body) {
  return mk_formula(FormulaKind::Exists, std::move(var), {}, std::move(body), nullptr);
}

Proof mk_var(std::string x) {
  ProofNode n = blank(ProofKind::Var);
  n.name = std::move(x);
  return mk_proof(std::move(n));
}
Proof mk_app(Proof t, Proof u) {
  ProofNode n = blank(ProofKind::App);
  n.kids = {std::move(t), std::move(u)};
  return mk_proof(std::move(n));
}
Proof mk_iapp(Proof t, IndTerm m) {
  ProofNode n = blank(ProofKind::IApp);
  n.ind = std::move(m);
  n.kids = {std::move(t)};
  return mk_proof(std::move(n));
}
Proof mk_lam(std::string x, Formula annot, Proof body) {
  ProofNode n = blank(ProofKind::Lam);
  n.name = std::move(x);
  n.annot = std::move(annot);
  n.kids = {std::move(body)};
  return mk_proof(std::move(n));
}
Proof mk_ilam(std::string a, Proof body) {
  ProofNode n = blank(ProofKind::ILam);
  n.name = std::move(a);
  n.kids = {std::move(body)};
  return mk_proof(std::move(n));
}
Proof mk_pair(Proof t, Proof u) {
  ProofNode n = blank(ProofKind::Pair);
  n.kids = {std::move(t), std::move(u)};
  return mk_proof(std::move(n));
}
Proof mk_proj(int i, Proof t) {
  ProofNode n = blank(ProofKind::Proj);
  n.index = i;
  n.kids = {std::move(t)};
  return mk_proof(std::move(n));
}
Proof mk_inj(int i, Formula other, Proof t) {
  ProofNode n = blank(ProofKind::Inj);
  n.index = i;
  n.annot = std::move(other);
  n.kids = {std::move(t)};
  return mk_proof(std::move(n));
}
Proof mk_case(Proof t, std::string x, Proof u, std::string y, Proof v) {
  ProofNode n = blank(ProofKind::Case);
  n.name = std::move(x);
  n.name2 = std::move(y);
  n.kids = {std::move(t), std::move(u), std::move(v)};
  return mk_proof(std::move(n));
}
Proof mk_exintro(IndTerm m, Proof t, Formula exists) {
  ProofNode n = blank(ProofKind::ExIntro);
  n.ind = std::move(m);
  n.annot = std::move(exists);
  n.kids = {std::move(t)};
  return mk_proof(std::move(n));
}
Proof mk_exelim(Proof t, std::string a, std::string x, Proof u) {
  ProofNode n = blank(ProofKind::ExElim);
  n.name = std::move(a);
  n.name2 = std::move(x);
  n.kids = {std::move(t), std::move(u)};
  return mk_proof(std::move(n));
}
Proof mk_em0(Formula p, std::string a, Proof u, Proof v) {
  ProofNode n = blank(ProofKind::Em0);
  n.name = std::move(a);
  n.annot = std::move(p);
  n.kids = {std::move(u), std::move(v)};
  return mk_proof(std::move(n));
}
Proof mk_em1(Formula forall_p, std::string a, Proof u, Proof v) {
  ProofNode n = blank(ProofKind::Em1);
  n.name = std::move(a);
  n.annot = std::move(forall_p);
  n.kids = {std::move(u), std::move(v)};
  return mk_proof(std::move(n));
}
Proof mk_hyp(std::string a, Formula forall_a) {
  ProofNode n = blank(ProofKind::Hyp);
  n.name = std::move(a);
  n.annot = std::move(forall_a);
  return mk_proof(std::move(n));
}
Proof mk_wit(std::string a, Formula exists_b) {
  ProofNode n = blank(ProofKind::Wit);
  n.name = std::move(a);
  n.annot = std::move(exists_b);
  return mk_proof(std::move(n));
}
Proof mk_hypz(Formula p) {
  ProofNode n = blank(ProofKind::Hypz);
  n.annot = std::move(p);
  return mk_proof(std::move(n));
}
Proof mk_efq(Formula p) {
  ProofNode n = blank(ProofKind::Efq);
  n.annot = std::move(p);
  return mk_proof(std::move(n));
}
Proof mk_mp(Formula exists_p) {
  ProofNode n = blank(ProofKind::MpConst);
  n.annot = std::move(exists_p);
  return mk_proof(std::move(n));
}
Proof mk_true() {
  static const Proof tt = mk_proof(blank(ProofKind::True));
  return tt;
}
Proof mk_rec(Proof u, Proof v, IndTerm m) {
  ProofNode n = blank(ProofKind::Rec);
  n.ind = std::move(m);
  n.kids = {std::move(u), std::move(v)};
  return mk_proof(std::move(n));
}
Proof mk_post(std::string rule, std::vector<Proof> args) {
  ProofNode n = blank(ProofKind::Post);
  n.rule = std::move(rule);
  n.kids = std::move(args);
  return mk_proof(std::move(n));
}

Proof with_kids(const Proof& t, std::vector<Proof> kids) {
  if (kids.size() != t->kids.size()) throw std::logic_error("with_kids: arity mismatch");
  ProofNode n = *t;
  n.kids = std::move(kids);
  return mk_proof(std::move(n));
}

std::string_view kind_name(ProofKind k) {
  switch (k) {
    case ProofKind::Var: return "Var";
    case ProofKind::App: return "App";
    case ProofKind::IApp: return "IApp";
    case ProofKind::Lam: return "Lam";
    case ProofKind::ILam: return "ILam";
    case ProofKind::Pair: return "Pair";
    case ProofKind::Proj: return "Proj";
    case ProofKind::Inj: return "Inj";
    case ProofKind::Case: return "Case";
    case ProofKind::ExIntro: return "ExIntro";
    case ProofKind::ExElim: return "ExElim";
    case ProofKind::Em0: return "Em0";
    case ProofKind::Em1: return "Em1";
    case ProofKind::Hyp: return "Hyp";
    case ProofKind::Wit: return "Wit";
    case ProofKind::Hypz: return "Hypz";
    case ProofKind::Efq: return "Efq";
    case ProofKind::MpConst: return "MPconst";
    case ProofKind::True: return "True";
    case ProofKind::Rec: return "Rec";
    case ProofKind::Post: return "Post";
  }
  return "?";
}

std::size_t size(const Proof& t) {
  std::size_t n = 1;
  for (const auto& k : t->kids) n += size(k);
  return n;
}

// ---------------------------------------------------------------------------
// Paths

std::string show_path(const Path& p) {
  if (p.empty()) return "/";
  std::string s;
  for (int i : p) s += "/" + std::to_string(i);
  return s;
}

Proof subterm_at(const Proof& t, const Path& p) {
  Proof cur = t;
  for (int i : p) {
    if (i < 0 || static_cast<std::size_t>(i) >= cur->kids.size())
      throw std::out_of_range("subterm_at: bad path " + show_path(p));
    cur = cur->kids[static_cast<std::size_t>(i)];
  }
  return cur;
}

namespace {

Proof replace_from(const Proof& t, const Path& p, std::size_t depth, const Proof& r) {
  if (depth == p.size()) return r;
  auto i = static_cast<std::size_t>(p[depth]);
  if (i >= t->kids.size()) throw std::out_of_range("replace_at: bad path " + show_path(p));
  std::vector<Proof> kids = t->kids;
  kids[i] = replace_from(kids[i], p, depth + 1, r);
  return with_kids(t, std::move(kids));
}

}  // namespace

Proof replace_at(const Proof& t, const Path& p, const Proof& replacement) {
  return replace_from(t, p, 0, replacement);
}

// ---------------------------------------------------------------------------
// Signature / Context

bool Signature::declared(const std::string& name) const {
  return constants.count(name) || functions.count(name) || predicates.count(name);
}

void Signature::add_constant(const std::string& c) {
  if (declared(c)) throw std::invalid_argument("duplicate symbol '" + c + "'");
  constants.insert(c);
}

void Signature::add_function(const std::string& f, int arity) {
  if (declared(f)) throw std::invalid_argument("duplicate symbol '" + f + "'");
  functions.emplace(f, arity);
}

void Signature::add_predicate(const std::string& p, int arity) {
  if (declared(p)) throw std::invalid_argument("duplicate symbol '" + p + "'");
  predicates.emplace(p, arity);
}

void Signature::add_complement_pair(const std::string& p, const std::string& pc, int arity) {
  add_predicate(p, arity);
  add_predicate(pc, arity);
  complements[p] = pc;
  complements[pc] = p;
}

std::optional<std::string> Signature::complement_of(const std::string& p) const {
  auto it = complements.find(p);
  if (it == complements.end()) return std::nullopt;
  return it->second;
}

std::optional<Formula> complement_atom(const Signature& sig, const Formula& atom) {
  if (atom->kind != FormulaKind::Atom) return std::nullopt;
  auto c = sig.complement_of(atom->name);
  if (!c) return std::nullopt;
  return mk_atom(*c, atom->args);
}

Context::Context(std::vector<ContextEntry> entries) {
  for (auto& e : entries) add(e.kind, std::move(e.name), std::move(e.formula));
}

void Context::add(EntryKind kind, std::string name, Formula formula) {
  if (find(name)) throw std::invalid_argument("duplicate context name '" + name + "'");
  entries_.push_back({kind, std::move(name), std::move(formula)});
}

const ContextEntry* Context::find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Free variables

namespace {

void collect(const IndTerm& t, std::set<std::string>& out) {
  if (t->kind == IndKind::Var) {
    out.insert(t->name);
    return;
  }
  for (const auto& a : t->args) collect(a, out);
}

void collect(const Formula& f, std::set<std::string>& out) {
  switch (f->kind) {
    case FormulaKind::Atom:
      for (const auto& a : f->args) collect(a, out);
      return;
    case FormulaKind::Bottom:
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      collect(f->lhs, out);
      collect(f->rhs, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      std::set<std::string> inner;
      collect(f->lhs, inner);
      inner.erase(f->name);
      out.insert(inner.begin(), inner.end());
      return;
    }
  }
}

void collect_ind(const Proof& t, std::set<std::string>& out) {
  if (t->annot) collect(t->annot, out);
  if (t->ind) collect(t->ind, out);
  switch (t->kind) {
    case ProofKind::ILam: {
      std::set<std::string> inner;
      collect_ind(t->kids[0], inner);
      inner.erase(t->name);
      out.insert(inner.begin(), inner.end());
      return;
    }
    case ProofKind::ExElim: {
      collect_ind(t->kids[0], out);
      std::set<std::string> inner;
      collect_ind(t->kids[1], inner);
      inner.erase(t->name);
      out.insert(inner.begin(), inner.end());
      return;
    }
    default:
      for (const auto& k : t->kids) collect_ind(k, out);
  }
}

void collect_proof(const Proof& t, std::set<std::string>& out) {
  auto bound = [&](const Proof& body, const std::string& x) {
    std::set<std::string> inner;
    collect_proof(body, inner);
    inner.erase(x);
    out.insert(inner.begin(), inner.end());
  };
  switch (t->kind) {
    case ProofKind::Var:
      out.insert(t->name);
      return;
    case ProofKind::Lam:
      bound(t->kids[0], t->name);
      return;
    case ProofKind::Case:
      collect_proof(t->kids[0], out);
      bound(t->kids[1], t->name);
      bound(t->kids[2], t->name2);
      return;
    case ProofKind::ExElim:
      collect_proof(t->kids[0], out);
      bound(t->kids[1], t->name2);
      return;
    default:
      for (const auto& k : t->kids) collect_proof(k, out);
  }
}

void collect_hyp(const Proof& t, std::set<std::string>& out) {
  switch (t->kind) {
    case ProofKind::Hyp:
    case ProofKind::Wit:
      out.insert(t->name);
      return;
    case ProofKind::Em0:
    case ProofKind::Em1: {
      std::set<std::string> inner;
      for (const auto& k : t->kids) collect_hyp(k, inner);
      inner.erase(t->name);
      out.insert(inner.begin(), inner.end());
      return;
    }
    default:
      for (const auto& k : t->kids) collect_hyp(k, out);
  }
}

void collect_all(const IndTerm& t, std::set<std::string>& out) {
  out.insert(t->name);
  for (const auto& a : t->args) collect_all(a, out);
}

void collect_all(const Formula& f, std::set<std::string>& out) {
  if (!f->name.empty()) out.insert(f->name);
  for (const auto& a : f->args) collect_all(a, out);
  if (f->lhs) collect_all(f->lhs, out);
  if (f->rhs) collect_all(f->rhs, out);
}

void collect_all(const Proof& t, std::set<std::string>& out) {
  if (!t->name.empty()) out.insert(t->name);
  if (!t->name2.empty()) out.insert(t->name2);
  if (t->annot) collect_all(t->annot, out);
  if (t->ind) collect_all(t->ind, out);
  for (const auto& k : t->kids) collect_all(k, out);
}

}  // namespace

std::set<std::string> free_ind_vars(const IndTerm& t) {
  std::set<std::string> s;
  collect(t, s);
  return s;
}
std::set<std::string> free_ind_vars(const Formula& f) {
  std::set<std::string> s;
  collect(f, s);
  return s;
}
std::set<std::string> free_ind_vars(const Proof& t) {
  std::set<std::string> s;
  collect_ind(t, s);
  return s;
}
std::set<std::string> free_proof_vars(const Proof& t) {
  std::set<std::string> s;
  collect_proof(t, s);
  return s;
}
std::set<std::string> free_hyp_vars(const Proof& t) {
  std::set<std::string> s;
  collect_hyp(t, s);
  return s;
}
bool is_closed(const IndTerm& t) { return free_ind_vars(t).empty(); }
bool is_closed(const Formula& f) { return free_ind_vars(f).empty(); }

std::set<std::string> all_names(const Proof& t) {
  std::set<std::string> s;
  collect_all(t, s);
  return s;
}
std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> s;
  collect_all(f, s);
  return s;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  if (!avoid.count(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

// ---------------------------------------------------------------------------
// Substitution

IndTerm subst_ind(const IndTerm& target, const IndTerm& m, const std::string& var) {
  switch (target->kind) {
    case IndKind::Var:
      return target->name == var ? m : target;
    case IndKind::Const:
      return target;
    case IndKind::App: {
      std::vector<IndTerm> args;
      args.reserve(target->args.size());
      for (const auto& a : target->args) args.push_back(subst_ind(a, m, var));
      return mk_iapp(target->name, std::move(args));
    }
  }
  return target;
}

Formula subst_ind(const Formula& target, const IndTerm& m, const std::string& var) {
  switch (target->kind) {
    case FormulaKind::Atom: {
      std::vector<IndTerm> args;
      args.reserve(target->args.size());
      for (const auto& a : target->args) args.push_back(subst_ind(a, m, var));
      return mk_atom(target->name, std::move(args));
    }
    case FormulaKind::Bottom:
      return target;
    case FormulaKind::And:
      return mk_and(subst_ind(target->lhs, m, var), subst_ind(target->rhs, m, var));
    case FormulaKind::Or:
      return mk_or(subst_ind(target->lhs, m, var), subst_ind(target->rhs, m, var));
    case FormulaKind::Imp:
      return mk_imp(subst_ind(target->lhs, m, var), subst_ind(target->rhs, m, var));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      const std::string& b = target->name;
      if (b == var) return target;
      auto body_fv = free_ind_vars(target->lhs);
      if (!body_fv.count(var)) return target;
      std::string nb = b;
      Formula body = target->lhs;
      auto mfv = free_ind_vars(m);
      if (mfv.count(b)) {
        auto avoid = mfv;
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(var);
        nb = fresh_name(b, avoid);
        body = subst_ind(body, mk_ivar(nb), b);
      }
      body = subst_ind(body, m, var);
      return target->kind == FormulaKind::Forall ? mk_forall(nb, body) : mk_exists(nb, body);
    }
  }
  return target;
}

Formula instantiate(const Formula& quantified, const IndTerm& m) {
  if (!is_quantifier(quantified)) throw std::invalid_argument("instantiate: not a quantifier");
  return subst_ind(quantified->lhs, m, quantified->name);
}

Proof subst_ind(const Proof& target, const IndTerm& m, const std::string& var) {
  if (!free_ind_vars(target).count(var)) return target;
  ProofNode n = *target;
  if (n.annot) n.annot = subst_ind(n.annot, m, var);
  if (n.ind) n.ind = subst_ind(n.ind, m, var);

  auto under_binder = [&](Proof body, std::string& binder) -> Proof {
    if (binder == var) return body;
    auto mfv = free_ind_vars(m);
    if (mfv.count(binder)) {
      auto avoid = mfv;
      auto bfv = free_ind_vars(body);
      avoid.insert(bfv.begin(), bfv.end());
      avoid.insert(var);
      std::string nb = fresh_name(binder, avoid);
      body = subst_ind(body, mk_ivar(nb), binder);
      binder = nb;
    }
    return subst_ind(body, m, var);
  };

  switch (n.kind) {
    case ProofKind::ILam:
      n.kids[0] = under_binder(n.kids[0], n.name);
      break;
    case ProofKind::ExElim:
      n.kids[0] = subst_ind(n.kids[0], m, var);
      n.kids[1] = under_binder(n.kids[1], n.name);
      break;
    default:
      for (auto& k : n.kids) k = subst_ind(k, m, var);
  }
  return mk_proof(std::move(n));
}

Proof subst_proof(const Proof& target, const Proof& u, const std::string& x) {
  if (!free_proof_vars(target).count(x)) return target;
  if (target->kind == ProofKind::Var) return u;

  ProofNode n = *target;
  // Avoid capturing free names of u under the binders of target.
  auto proof_binder = [&](Proof body, std::string& y) -> Proof {
    if (y == x) return body;
    auto ufv = free_proof_vars(u);
    if (ufv.count(y) && free_proof_vars(body).count(x)) {
      auto avoid = ufv;
      auto bfv = free_proof_vars(body);
      avoid.insert(bfv.begin(), bfv.end());
      avoid.insert(x);
      std::string ny = fresh_name(y, avoid);
      body = subst_proof(body, mk_var(ny), y);
      y = ny;
    }
    return subst_proof(body, u, x);
  };
  auto ind_binder = [&](Proof body, std::string& a) -> Proof {
    auto ufv = free_ind_vars(u);
    if (ufv.count(a)) {
      auto avoid = ufv;
      auto bfv = free_ind_vars(body);
      avoid.insert(bfv.begin(), bfv.end());
      std::string na = fresh_name(a, avoid);
      body = subst_ind(body, mk_ivar(na), a);
      a = na;
    }
    return body;
  };

  switch (n.kind) {
    case ProofKind::Lam:
      n.kids[0] = proof_binder(n.kids[0], n.name);
      break;
    case ProofKind::ILam:
      n.kids[0] = subst_proof(ind_binder(n.kids[0], n.name), u, x);
      break;
    case ProofKind::Case:
      n.kids[0] = subst_proof(n.kids[0], u, x);
      n.kids[1] = proof_binder(n.kids[1], n.name);
      n.kids[2] = proof_binder(n.kids[2], n.name2);
      break;
    case ProofKind::ExElim:
      n.kids[0] = subst_proof(n.kids[0], u, x);
      n.kids[1] = ind_binder(n.kids[1], n.name);
      n.kids[1] = proof_binder(n.kids[1], n.name2);
      break;
    case ProofKind::Em0:
    case ProofKind::Em1: {
      auto uh = free_hyp_vars(u);
      if (uh.count(n.name)) {
        auto avoid = uh;
        for (const auto& k : n.kids) {
          auto s = all_names(k);
          avoid.insert(s.begin(), s.end());
        }
        std::string na = fresh_name(n.name, avoid);
        for (auto& k : n.kids) k = rename_hyp(k, n.name, na);
        n.name = na;
      }
      for (auto& k : n.kids) k = subst_proof(k, u, x);
      break;
    }
    default:
      for (auto& k : n.kids) k = subst_proof(k, u, x);
  }
  return mk_proof(std::move(n));
}

Proof rename_hyp(const Proof& t, const std::string& from, const std::string& to) {
  switch (t->kind) {
    case ProofKind::Hyp:
    case ProofKind::Wit:
      if (t->name != from) return t;
      {
        ProofNode n = *t;
        n.name = to;
        return mk_proof(std::move(n));
      }
    case ProofKind::Em0:
    case ProofKind::Em1:
      if (t->name == from) return t;
      [[fallthrough]];
    default: {
      if (t->kids.empty()) return t;
      std::vector<Proof> kids;
      kids.reserve(t->kids.size());
      for (const auto& k : t->kids) kids.push_back(rename_hyp(k, from, to));
      return with_kids(t, std::move(kids));
    }
  }
}

// ---------------------------------------------------------------------------
// Alpha-equivalence

namespace {

using Env = std::vector<std::pair<std::string, std::string>>;

bool same_var(const Env& env, const std::string& a, const std::string& b) {
  for (auto it = env.rbegin(); it != env.rend(); ++it) {
    bool ha = it->first == a, hb = it->second == b;
    if (ha || hb) return ha && hb;
  }
  return a == b;
}

bool aeq(const IndTerm& a, const IndTerm& b, const Env& env) {
  if (a->kind != b->kind) return false;
  if (a->kind == IndKind::Var) return same_var(env, a->name, b->name);
  if (a->name != b->name || a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!aeq(a->args[i], b->args[i], env)) return false;
  return true;
}

bool aeq(const Formula& a, const Formula& b, Env& env) {
  if (a == b && env.empty()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Atom:
      if (a->name != b->name || a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!aeq(a->args[i], b->args[i], env)) return false;
      return true;
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return aeq(a->lhs, b->lhs, env) && aeq(a->rhs, b->rhs, env);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      env.emplace_back(a->name, b->name);
      bool r = aeq(a->lhs, b->lhs, env);
      env.pop_back();
      return r;
    }
  }
  return false;
}

// Canonical printing: bound names become #n in binding order.
class Canon {
 public:
  std::string out;

  void ind(const IndTerm& t) {
    if (t->kind == IndKind::Var) {
      out += lookup(ind_, t->name);
      return;
    }
    out += t->kind == IndKind::Const ? "c:" : "f:";
    out += t->name;
    if (t->kind == IndKind::App) {
      out += '(';
      for (const auto& a : t->args) {
        ind(a);
        out += ',';
      }
      out += ')';
    }
  }

  void formula(const Formula& f) {
    switch (f->kind) {
      case FormulaKind::Atom:
        out += f->name + "(";
        for (const auto& a : f->args) {
          ind(a);
          out += ',';
        }
        out += ')';
        return;
      case FormulaKind::Bottom:
        out += "_|_";
        return;
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Imp:
        out += f->kind == FormulaKind::And ? "&(" : f->kind == FormulaKind::Or ? "|(" : ">(";
        formula(f->lhs);
        out += ',';
        formula(f->rhs);
        out += ')';
        return;
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        out += f->kind == FormulaKind::Forall ? "A" : "E";
        out += bind(ind_, f->name) + ".";
        formula(f->lhs);
        ind_.pop_back();
        return;
    }
  }

  void proof(const Proof& t) {
    out += kind_name(t->kind);
    out += '{';
    if (t->kind == ProofKind::Proj || t->kind == ProofKind::Inj) out += std::to_string(t->index);
    if (t->kind == ProofKind::Post) out += t->rule;
    if (t->annot) {
      out += '[';
      formula(t->annot);
      out += ']';
    }
    if (t->ind) {
      out += '<';
      ind(t->ind);
      out += '>';
    }
    switch (t->kind) {
      case ProofKind::Var:
        out += lookup(proof_, t->name);
        break;
      case ProofKind::Hyp:
      case ProofKind::Wit:
        out += lookup(hyp_, t->name);
        break;
      case ProofKind::Lam:
        out += bind(proof_, t->name);
        kid(t->kids[0]);
        proof_.pop_back();
        break;
      case ProofKind::ILam:
        out += bind(ind_, t->name);
        kid(t->kids[0]);
        ind_.pop_back();
        break;
      case ProofKind::Case:
        kid(t->kids[0]);
        out += bind(proof_, t->name);
        kid(t->kids[1]);
        proof_.pop_back();
        out += bind(proof_, t->name2);
        kid(t->kids[2]);
        proof_.pop_back();
        break;
      case ProofKind::ExElim:
        kid(t->kids[0]);
        out += bind(ind_, t->name);
        out += bind(proof_, t->name2);
        kid(t->kids[1]);
        proof_.pop_back();
        ind_.pop_back();
        break;
      case ProofKind::Em0:
      case ProofKind::Em1:
        out += bind(hyp_, t->name);
        kid(t->kids[0]);
        kid(t->kids[1]);
        hyp_.pop_back();
        break;
      default:
        for (const auto& k : t->kids) kid(k);
    }
    out += '}';
  }

 private:
  using Scope = std::vector<std::pair<std::string, std::string>>;
  Scope ind_, proof_, hyp_;
  int counter_ = 0;

  void kid(const Proof& k) {
    proof(k);
    out += ';';
  }
  std::string bind(Scope& s, const std::string& name) {
    std::string c = "#" + std::to_string(counter_++);
    s.emplace_back(name, c);
    return c;
  }
  static std::string lookup(const Scope& s, const std::string& name) {
    for (auto it = s.rbegin(); it != s.rend(); ++it)
      if (it->first == name) return it->second;
    return "'" + name;
  }
};

}  // namespace

bool alpha_equal(const IndTerm& a, const IndTerm& b) { return aeq(a, b, Env{}); }

bool alpha_equal(const Formula& a, const Formula& b) {
  Env env;
  return aeq(a, b, env);
}

bool alpha_equal(const Proof& a, const Proof& b) {
  if (a == b) return true;
  return canonical_key(a) == canonical_key(b);
}

std::string canonical_key(const Proof& t) {
  Canon c;
  c.proof(t);
  return std::move(c.out);
}

std::string canonical_key(const Formula& f) {
  Canon c;
  c.formula(f);
  return std::move(c.out);
}

// ---------------------------------------------------------------------------
// Classification

bool is_propositional(const Formula& a) {
  switch (a->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Imp:
      return is_propositional(a->lhs) && is_propositional(a->rhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return false;
  }
  return false;
}

bool is_negative(const Formula& a) {
  switch (a->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::And:
    case FormulaKind::Imp:
      return is_negative(a->lhs) && is_negative(a->rhs);
    default:
      return false;
  }
}

bool is_simply_universal(const Formula& a) {
  const FormulaNode* cur = a.get();
  while (cur->kind == FormulaKind::Forall) cur = cur->lhs.get();
  return is_negative(std::shared_ptr<const FormulaNode>(a, cur));
}

bool is_simply_existential(const Formula& a) {
  return a->kind == FormulaKind::Exists && is_propositional(a->lhs);
}

bool contains_implication(const Formula& a) {
  switch (a->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return false;
    case FormulaKind::Imp:
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
      return contains_implication(a->lhs) || contains_implication(a->rhs);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      return contains_implication(a->lhs);
  }
  return false;
}

Classification classify(const Formula& a) {
  return Classification{is_propositional(a), is_negative(a), is_simply_universal(a),
                        is_simply_existential(a)};
}

Formula godel_gentzen(const Formula& a) {
  switch (a->kind) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
      return mk_not(mk_not(a));
    case FormulaKind::And:
      return mk_and(godel_gentzen(a->lhs), godel_gentzen(a->rhs));
    case FormulaKind::Imp:
      return mk_imp(godel_gentzen(a->lhs), godel_gentzen(a->rhs));
    case FormulaKind::Or:
      return mk_not(mk_and(mk_not(godel_gentzen(a->lhs)), mk_not(godel_gentzen(a->rhs))));
    case FormulaKind::Forall:
      return mk_forall(a->name, godel_gentzen(a->lhs));
    case FormulaKind::Exists:
      return mk_not(mk_forall(a->name, mk_not(godel_gentzen(a->lhs))));
  }
  return a;
}

}  // namespace mpk
