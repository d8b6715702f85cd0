#include "mpk/reduce.hpp"

#include <set>
#include <stdexcept>

#include "mpk/arith.hpp"
#include "mpk/type_error.hpp"

namespace mpk {

namespace {

[[noreturn]] void discipline_error(const std::string& msg) {
  throw TypeErrorException(TypeError{TypeErrorCode::DisciplineViolation, {}, "exception substitution", msg});
}

bool rebinds(const Proof& t, const std::string& a) {
  return (t->kind == ProofKind::Em0 || t->kind == ProofKind::Em1) && t->name == a;
}

bool is_hyp_of(const Proof& t, const std::string& a) {
  return t->kind == ProofKind::Hyp && t->name == a;
}

// Rebuilds t with f applied to each child; f returns the new child.
template <class F>
Proof map_kids(const Proof& t, F&& f) {
  if (t->kids.empty()) return t;
  std::vector<Proof> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (const auto& k : t->kids) {
    kids.push_back(f(k));
    changed = changed || kids.back() != k;
  }
  return changed ? with_kids(t, std::move(kids)) : t;
}

Proof wit_go(const Theory& th, const Proof& t, const std::string& a, const IndTerm& m) {
  if (t->kind == ProofKind::Wit && t->name == a) {
    if (t->annot->kind != FormulaKind::Exists) discipline_error("wit[" + a + "] without an existential annotation");
    Proof leaf = th.arithmetic() ? mk_true() : mk_hypz(instantiate(t->annot, m));
    return mk_exintro(m, leaf, t->annot);
  }
  if (is_hyp_of(t, a)) discipline_error("hyp[" + a + "] on the witness side");
  if (rebinds(t, a)) return t;
  return map_kids(t, [&](const Proof& k) { return wit_go(th, k, a, m); });
}

// key == nullptr: replace every applied occurrence.
Proof hyp_go(const Proof& t, const std::string& a, const IndTerm* key) {
  if (t->kind == ProofKind::IApp && is_hyp_of(t->kids[0], a)) {
    if (!key || alpha_equal(t->ind, *key)) return mk_hypz(instantiate(t->kids[0]->annot, t->ind));
    return t;
  }
  if (is_hyp_of(t, a)) {
    if (!key) discipline_error("hyp[" + a + "] is not applied to an individual term");
    return t;
  }
  if (t->kind == ProofKind::Wit && t->name == a) discipline_error("wit[" + a + "] on the hypothesis side");
  if (rebinds(t, a)) return t;
  return map_kids(t, [&](const Proof& k) { return hyp_go(k, a, key); });
}

// Applications hyp[a] @ m with a free, in preorder.
void hyp_apps(const Proof& t, const std::string& a, Path& path,
              std::vector<std::pair<Path, Proof>>& out) {
  if (t->kind == ProofKind::IApp && is_hyp_of(t->kids[0], a)) {
    out.emplace_back(path, t);
    return;
  }
  if (rebinds(t, a)) return;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    hyp_apps(t->kids[i], a, path, out);
    path.pop_back();
  }
}

std::vector<std::pair<Path, Proof>> hyp_apps(const Proof& u, const std::string& a) {
  std::vector<std::pair<Path, Proof>> out;
  Path p;
  hyp_apps(u, a, p, out);
  return out;
}

// Truth value of P[n/x] for hyp[a : all x. P] @ n, if closed and decidable.
std::optional<bool> closed_instance(const Theory& th, const Proof& app) {
  const Formula& fa = app->kids[0]->annot;
  if (fa->kind != FormulaKind::Forall) return std::nullopt;
  Formula inst = instantiate(fa, app->ind);
  if (inst->kind != FormulaKind::Atom || !is_closed(inst)) return std::nullopt;
  try {
    return arith::eval_atomic(th.arith, inst);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

struct Local {
  std::string rule;
  Path sub;     // redex position below the node (usually empty)
  Proof after;  // replacement for the subterm at sub
};

// Fresh name for an em0 binder that would capture free hypothesis
// variables of material moved under it.
Proof em0_safe(const Proof& em0, const std::vector<Proof>& moved) {
  std::set<std::string> fh;
  for (const auto& w : moved) {
    auto s = free_hyp_vars(w);
    fh.insert(s.begin(), s.end());
  }
  if (!fh.count(em0->name)) return em0;
  std::set<std::string> avoid = all_names(em0);
  for (const auto& w : moved) {
    auto s = all_names(w);
    avoid.insert(s.begin(), s.end());
  }
  std::string na = fresh_name(em0->name, avoid);
  return mk_em0(em0->annot, na, rename_hyp(em0->kids[0], em0->name, na),
                rename_hyp(em0->kids[1], em0->name, na));
}

// Em0 in head position of an elimination: push the elimination into
// both branches.  rebuild(x) re-creates the elimination over x.
template <class F>
Proof permute(const Proof& head, const std::vector<Proof>& moved, F&& rebuild) {
  Proof e = em0_safe(head, moved);
  return mk_em0(e->annot, e->name, rebuild(e->kids[0]), rebuild(e->kids[1]));
}

class Reducer {
 public:
  Reducer(System sys, const Theory& th) : sys_(sys), th_(th) {}

  // Node-level redexes of n, in priority order.  With all = false the
  // search stops at the first one.
  void at(const Proof& n, bool all, std::vector<Local>& out) const {
    auto emit = [&](std::string rule, Proof after, Path sub = {}) {
      out.push_back({std::move(rule), std::move(sub), std::move(after)});
    };
    bool em = sys_ == System::IL_EM1;
    switch (n->kind) {
      case ProofKind::App: {
        const Proof& f = n->kids[0];
        if (f->kind == ProofKind::Lam) emit("beta", subst_proof(f->kids[0], n->kids[1], f->name));
        if (em && f->kind == ProofKind::Em0) {
          const Proof& w = n->kids[1];
          emit("perm-app", permute(f, {w}, [&](const Proof& x) { return mk_app(x, w); }));
        }
        return;
      }
      case ProofKind::IApp: {
        const Proof& f = n->kids[0];
        if (f->kind == ProofKind::ILam) emit("beta-ind", subst_ind(f->kids[0], n->ind, f->name));
        if (em && f->kind == ProofKind::Em0)
          emit("perm-app", permute(f, {}, [&](const Proof& x) { return mk_iapp(x, n->ind); }));
        if (sys_ == System::HA_EM1 && f->kind == ProofKind::Hyp && closed_instance(th_, n) == true)
          emit("ha-hyp-true", mk_true());
        return;
      }
      case ProofKind::Proj: {
        const Proof& f = n->kids[0];
        if (f->kind == ProofKind::Pair) emit("proj", f->kids[static_cast<std::size_t>(n->index)]);
        if (em && f->kind == ProofKind::Em0)
          emit("perm-proj", permute(f, {}, [&](const Proof& x) { return mk_proj(n->index, x); }));
        return;
      }
      case ProofKind::Case: {
        const Proof& f = n->kids[0];
        if (f->kind == ProofKind::Inj) {
          if (f->index == 0)
            emit("case", subst_proof(n->kids[1], f->kids[0], n->name));
          else
            emit("case", subst_proof(n->kids[2], f->kids[0], n->name2));
        }
        if (em && f->kind == ProofKind::Em0)
          emit("perm-case", permute(f, {n->kids[1], n->kids[2]}, [&](const Proof& x) {
                 return mk_case(x, n->name, n->kids[1], n->name2, n->kids[2]);
               }));
        return;
      }
      case ProofKind::ExElim: {
        const Proof& f = n->kids[0];
        if (f->kind == ProofKind::ExIntro)
          emit("dest", subst_proof(subst_ind(n->kids[1], f->ind, n->name), f->kids[0], n->name2));
        if (em && f->kind == ProofKind::Em0)
          emit("perm-dest", permute(f, {n->kids[1]}, [&](const Proof& x) {
                 return mk_exelim(x, n->name, n->name2, n->kids[1]);
               }));
        return;
      }
      case ProofKind::Em1:
        if (sys_ == System::HA_EM1)
          ha_em1(n, all, emit);
        else
          il_em1(n, all, emit);
        return;
      case ProofKind::Rec: {
        auto v = numeral_value(n->ind);
        if (!v) return;
        if (*v == 0) {
          emit("rec-zero", n->kids[0]);
        } else {
          IndTerm k = n->ind->args[0];
          emit("rec-succ", mk_app(mk_iapp(n->kids[1], k), mk_rec(n->kids[0], n->kids[1], k)));
        }
        return;
      }
      default:
        return;
    }
  }

 private:
  System sys_;
  const Theory& th_;

  template <class Emit>
  void il_em1(const Proof& n, bool all, Emit&& emit) const {
    const std::string& a = n->name;
    const Proof& u = n->kids[0];
    if (!free_hyp_vars(u).count(a)) {
      emit("em1-drop", u);
      if (!all) return;
    }
    std::vector<ActiveHyp> acts = active_hyps(u, a);
    std::set<std::string> seen;
    for (const auto& h : acts) {
      if (!seen.insert(show(h.m)).second) continue;
      emit("em1-raise", raise(n, h.m));
      if (!all) return;
    }
  }

  Proof raise(const Proof& n, const IndTerm& m) const {
    const std::string& a = n->name;
    const Proof& u = n->kids[0];
    const Proof& v = n->kids[1];
    std::set<std::string> avoid = all_names(n);
    std::string b = fresh_name(a, avoid);
    Formula pm = instantiate(n->annot, m);
    Proof left = exc_subst_wit(th_, v, a, m);
    Proof right = mk_em1(n->annot, a, exc_subst_hyp(u, a, m), v);
    return mk_em0(pm, b, left, right);
  }

  template <class Emit>
  void ha_em1(const Proof& n, bool all, Emit&& emit) const {
    const std::string& a = n->name;
    const Proof& u = n->kids[0];
    const Proof& v = n->kids[1];
    if (!free_hyp_vars(u).count(a)) {
      emit("ha-em1-drop", u);
      if (!all) return;
    }
    auto apps = hyp_apps(u, a);
    if (!all) {
      for (const auto& [path, app] : apps)
        if (closed_instance(th_, app) == true) {
          Path sub{0};
          sub.insert(sub.end(), path.begin(), path.end());
          emit("ha-hyp-true", mk_true(), sub);
          return;
        }
    }
    std::set<std::string> seen;
    for (const auto& [path, app] : apps) {
      if (closed_instance(th_, app) != false) continue;
      if (!seen.insert(show(app->ind)).second) continue;
      emit("ha-em1-false", exc_subst_wit(th_, v, a, app->ind));
      if (!all) return;
    }
  }
};

bool first_redex(const Reducer& r, const Proof& t, Path& path, Local& found) {
  std::vector<Local> here;
  r.at(t, false, here);
  if (!here.empty()) {
    found = std::move(here.front());
    return true;
  }
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    if (first_redex(r, t->kids[i], path, found)) return true;
    path.pop_back();
  }
  return false;
}

void every_redex(const Reducer& r, const Proof& t, Path& path,
                 std::vector<std::pair<Path, Local>>& out) {
  std::vector<Local> here;
  r.at(t, true, here);
  for (auto& l : here) out.emplace_back(path, std::move(l));
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    every_redex(r, t->kids[i], path, out);
    path.pop_back();
  }
}

Step make_step(const Proof& t, Path path, Local l) {
  path.insert(path.end(), l.sub.begin(), l.sub.end());
  Step s{std::move(l.rule), path, t, nullptr};
  s.after = replace_at(t, path, l.after);
  return s;
}

void actives(const Proof& t, const std::string& a, Path& path, std::vector<ActiveHyp>& out) {
  if (t->kind == ProofKind::IApp && is_hyp_of(t->kids[0], a)) {
    const Formula& fa = t->kids[0]->annot;
    if (is_closed(fa) && is_closed(t->ind)) out.push_back({t->ind, fa, path});
    return;
  }
  if (rebinds(t, a)) return;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    path.push_back(static_cast<int>(i));
    actives(t->kids[i], a, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<ActiveHyp> active_hyps(const Proof& u, const std::string& a) {
  std::vector<ActiveHyp> out;
  Path p;
  actives(u, a, p, out);
  return out;
}

std::optional<ActiveHyp> active_hyp(const Proof& u, const std::string& a) {
  auto all = active_hyps(u, a);
  if (all.empty()) return std::nullopt;
  return all.front();
}

Proof exc_subst_wit(const Theory& th, const Proof& v, const std::string& a, const IndTerm& m) {
  return wit_go(th, v, a, m);
}

Proof exc_subst_hyp(const Proof& u, const std::string& a, const IndTerm& m) {
  return hyp_go(u, a, &m);
}

Proof exc_subst_hyp_all(const Proof& u, const std::string& a) { return hyp_go(u, a, nullptr); }

std::optional<Step> step(System sys, const Theory& th, const Proof& t) {
  Reducer r(sys, th);
  Path path;
  Local found;
  if (!first_redex(r, t, path, found)) return std::nullopt;
  return make_step(t, std::move(path), std::move(found));
}

std::vector<Step> all_steps(System sys, const Theory& th, const Proof& t) {
  Reducer r(sys, th);
  std::vector<std::pair<Path, Local>> found;
  Path path;
  every_redex(r, t, path, found);
  std::vector<Step> out;
  std::set<std::string> seen;
  for (auto& [p, l] : found) {
    Step s = make_step(t, p, std::move(l));
    if (seen.insert(canonical_key(s.after)).second) out.push_back(std::move(s));
  }
  return out;
}

NormalizeResult normalize(System sys, const Theory& th, const Proof& t, std::uint64_t fuel) {
  NormalizeResult res;
  res.term = t;
  for (std::uint64_t i = 0; i < fuel; ++i) {
    auto s = step(sys, th, res.term);
    if (!s) {
      res.normal = true;
      return res;
    }
    res.term = s->after;
    res.trace.push_back(std::move(*s));
  }
  res.normal = !step(sys, th, res.term).has_value();
  return res;
}

}  // namespace mpk
