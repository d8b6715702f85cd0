#include "mpk/extract.hpp"

#include <functional>

#include "mpk/typecheck.hpp"

namespace mpk {

HeadForm head_decompose(const Proof& t) {
  HeadForm h;
  Proof cur = t;
  while (cur->kind == ProofKind::Lam || cur->kind == ProofKind::ILam) {
    h.prefix.push_back({cur->kind == ProofKind::ILam, cur->name, cur->annot});
    cur = cur->kids[0];
  }
  std::vector<Elim> outer_first;
  for (;;) {
    Elim e;
    switch (cur->kind) {
      case ProofKind::App:
        e.kind = ElimKind::Arg;
        e.arg = cur->kids[1];
        break;
      case ProofKind::IApp:
        e.kind = ElimKind::IndArg;
        e.ind = cur->ind;
        break;
      case ProofKind::Proj:
        e.kind = ElimKind::Proj;
        e.index = cur->index;
        break;
      case ProofKind::Case:
        e.kind = ElimKind::Case;
        e.name = cur->name;
        e.name2 = cur->name2;
        e.bodies = {cur->kids[1], cur->kids[2]};
        break;
      case ProofKind::ExElim:
        e.kind = ElimKind::Dest;
        e.name = cur->name;
        e.name2 = cur->name2;
        e.bodies = {cur->kids[1]};
        break;
      default:
        h.head = cur;
        h.spine.assign(outer_first.rbegin(), outer_first.rend());
        return h;
    }
    outer_first.push_back(std::move(e));
    cur = cur->kids[0];
  }
}

Proof reassemble(const HeadForm& h) {
  Proof cur = h.head;
  for (const auto& e : h.spine) {
    switch (e.kind) {
      case ElimKind::Arg: cur = mk_app(cur, e.arg); break;
      case ElimKind::IndArg: cur = mk_iapp(cur, e.ind); break;
      case ElimKind::Proj: cur = mk_proj(e.index, cur); break;
      case ElimKind::Case: cur = mk_case(cur, e.name, e.bodies[0], e.name2, e.bodies[1]); break;
      case ElimKind::Dest: cur = mk_exelim(cur, e.name, e.name2, e.bodies[0]); break;
    }
  }
  for (auto it = h.prefix.rbegin(); it != h.prefix.rend(); ++it)
    cur = it->individual ? mk_ilam(it->name, cur) : mk_lam(it->name, it->annot, cur);
  return cur;
}

namespace {

HnfTree hnf_tree(const Proof& t, std::vector<HnfLeaf>& leaves) {
  if (t->kind == ProofKind::ExIntro) {
    auto n = std::make_shared<HnfNode>();
    n->leaf = static_cast<int>(leaves.size());
    leaves.push_back({t->ind, t->kids[0], t});
    return n;
  }
  if (t->kind != ProofKind::Em0) return nullptr;
  HnfTree l = hnf_tree(t->kids[0], leaves);
  if (!l) return nullptr;
  HnfTree r = hnf_tree(t->kids[1], leaves);
  if (!r) return nullptr;
  auto n = std::make_shared<HnfNode>();
  n->p = t->annot;
  n->name = t->name;
  n->left = l;
  n->right = r;
  return n;
}

}  // namespace

std::optional<HerbrandNF> is_hnf(const Proof& t) {
  HerbrandNF h;
  h.skeleton = hnf_tree(t, h.leaves);
  if (!h.skeleton) return std::nullopt;
  return h;
}

std::string_view status_name(ExtractStatus s) {
  switch (s) {
    case ExtractStatus::Ok: return "ok";
    case ExtractStatus::CheckFailed: return "check-failed";
    case ExtractStatus::Precondition: return "precondition";
    case ExtractStatus::FuelExhausted: return "fuel-exhausted";
    case ExtractStatus::NotHNF: return "not-hnf";
  }
  return "?";
}

Extraction extract_witnesses(System sys, const Theory& th, const Context& ctx, const Proof& t,
                             const Formula& goal, std::uint64_t fuel) {
  Extraction x;
  if (auto err = check(sys, th, ctx, t, goal)) {
    x.status = ExtractStatus::CheckFailed;
    x.type_error = err;
    x.message = err->describe();
    return x;
  }
  if (goal->kind != FormulaKind::Exists || !is_closed(goal)) {
    x.status = ExtractStatus::Precondition;
    x.message = "goal must be a closed existential formula";
    if (goal->kind == FormulaKind::Exists)
      x.type_error = TypeError{TypeErrorCode::NotClosedTerm, {}, "extract", x.message + ", got " + show(goal)};
    return x;
  }
  if (!is_quasi_closed(t)) {
    x.status = ExtractStatus::Precondition;
    x.message = "proof term is not quasi-closed";
    x.type_error = TypeError{TypeErrorCode::NotClosedTerm, {}, "extract", x.message};
    return x;
  }
  x.norm = normalize(sys, th, t, fuel);
  if (!x.norm.normal) {
    x.status = ExtractStatus::FuelExhausted;
    x.message = "no normal form within " + std::to_string(fuel) + " steps";
    return x;
  }
  x.hnf = is_hnf(x.norm.term);
  if (!x.hnf || (sys != System::IL_EM1 && x.hnf->leaves.size() != 1)) {
    x.status = ExtractStatus::NotHNF;
    x.message = "normal form is not a Herbrand normal form: " + show(x.norm.term);
    x.hnf.reset();
    return x;
  }
  for (const auto& l : x.hnf->leaves) x.witnesses.push_back(l.witness);
  return x;
}

Disjunction herbrand_disjunction(System sys, const Theory& th, const Context& ctx,
                                 const HerbrandNF& hnf, const Formula& goal) {
  const std::size_t k = hnf.leaves.size();
  // tails[i] = A[m_i] | (... | A[m_{k-1}])
  std::vector<Formula> inst, tails(k);
  for (const auto& l : hnf.leaves) inst.push_back(instantiate(goal, l.witness));
  tails[k - 1] = inst[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) tails[i] = mk_or(inst[i], tails[i + 1]);

  std::vector<Proof> wrapped;
  for (std::size_t i = 0; i < k; ++i) {
    Proof p = hnf.leaves[i].proof;
    if (i + 1 < k) p = mk_inj(0, tails[i + 1], p);
    for (std::size_t j = i; j-- > 0;) p = mk_inj(1, inst[j], p);
    wrapped.push_back(p);
  }
  std::function<Proof(const HnfTree&)> build = [&](const HnfTree& n) -> Proof {
    if (n->leaf >= 0) return wrapped[n->leaf];
    return mk_em0(n->p, n->name, build(n->left), build(n->right));
  };
  Disjunction d{tails[0], build(hnf.skeleton), std::nullopt};
  d.recheck = check(sys, th, ctx, d.proof, d.formula);
  return d;
}

NormalFormReport check_normal_form_property(System sys, const Context& ctx, const Proof& t) {
  (void)sys;
  NormalFormReport r;
  for (const auto& e : ctx.entries()) {
    bool fits = e.kind == EntryKind::ProofVar
                    ? is_propositional(e.formula) && is_negative(e.formula)
                    : is_simply_universal(e.formula);
    if (!fits) r.violations.push_back("context entry " + e.name + " is outside the restricted shape");
  }
  if (t->kind == ProofKind::Em1) r.violations.push_back("clause 2: term is an em1 node");
  std::function<void(const Proof&, Path&, bool)> walk = [&](const Proof& n, Path& p, bool applied) {
    if (n->kind == ProofKind::Hyp && !applied)
      r.violations.push_back("clause 1: hyp[" + n->name + "] at " + show_path(p) + " is not active");
    for (std::size_t i = 0; i < n->kids.size(); ++i) {
      bool app = n->kind == ProofKind::IApp && n->kids[i]->kind == ProofKind::Hyp && is_closed(n->ind) &&
                 is_closed(n->kids[i]->annot);
      p.push_back(static_cast<int>(i));
      walk(n->kids[i], p, app);
      p.pop_back();
    }
  };
  Path p;
  walk(t, p, false);
  return r;
}

}  // namespace mpk
