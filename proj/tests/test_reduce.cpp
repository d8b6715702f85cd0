#include <doctest.h>

#include <filesystem>
#include <map>

#include "explore.hpp"
#include "gen.hpp"
#include "mpk/reduce.hpp"
#include "mpk/typecheck.hpp"
#include "oracle.hpp"
#include "testing.hpp"

using namespace mpk;
using testing::F;
using testing::M;
using testing::T;

namespace {

const Theory& sig() {
  static const Theory th = testing::il_sig("const c, d; pred P/1, Q/0, R/0;");
  return th;
}

Step one(System sys, const Theory& th, const std::string& src) {
  auto s = step(sys, th, T(th, src));
  REQUIRE_MESSAGE(s, src);
  return *s;
}

bool same(const Proof& a, const Proof& b) { return alpha_equal(a, b); }

std::vector<std::string> rules(const NormalizeResult& r) {
  std::vector<std::string> out;
  for (const auto& s : r.trace) out.push_back(s.rule);
  return out;
}

// preorder walk collecting applied hyp[a] nodes, written independently
void hyp_apps(const Proof& t, const std::string& a, Path& at, std::vector<Path>& out) {
  if ((t->kind == ProofKind::Em0 || t->kind == ProofKind::Em1) && t->name == a) return;
  if (t->kind == ProofKind::IApp && t->kids[0]->kind == ProofKind::Hyp && t->kids[0]->name == a &&
      is_closed(t->ind) && is_closed(t->kids[0]->annot))
    out.push_back(at);
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    // binders of a hyp name shadow it too
    at.push_back(static_cast<int>(i));
    hyp_apps(t->kids[i], a, at, out);
    at.pop_back();
  }
}

const std::vector<gen::Sample>& samples() {
  static const std::vector<gen::Sample> s = gen::samples(600, 12, 11);
  return s;
}

}  // namespace

TEST_CASE("rule examples") {
  const System il = System::IL_EM1;
  Step b = one(il, sig(), "(fun (x : Q) => <x, x>) q");
  CHECK(b.rule == "beta");
  CHECK(same(b.after, T(sig(), "<q, q>")));
  CHECK(b.path.empty());

  CHECK(one(il, sig(), "(fun {x} => fun (p : P(x)) => p) @ c").rule == "beta-ind");
  CHECK(same(one(il, sig(), "(fun {x} => fun (p : P(x)) => p) @ c").after, T(sig(), "fun (p : P(c)) => p")));
  CHECK(same(one(il, sig(), "snd <p, q>").after, T(sig(), "q")));
  CHECK(one(il, sig(), "snd <p, q>").rule == "proj");
  Step cs = one(il, sig(), "case inr[Q] r of { x => inl[R] x | y => inr[Q] y }");
  CHECK(cs.rule == "case");
  CHECK(same(cs.after, T(sig(), "inr[Q] r")));
  Step ds = one(il, sig(), "dest ((c, p) : ex x. P(x)) as (y, h) => ((y, h) : ex z. P(z))");
  CHECK(ds.rule == "dest");
  CHECK(same(ds.after, T(sig(), "((c, p) : ex z. P(z))")));

  // a redex under a binder: path into the body
  Step in = one(il, sig(), "fun (x : Q) => fst <x, x>");
  CHECK(in.path == Path{0});

  // outermost first
  Step out = one(il, sig(), "(fun (x : Q & Q) => x) (fst <<q, q>, q>)");
  CHECK(out.rule == "beta");
  CHECK(out.path.empty());
}

TEST_CASE("permutations") {
  const System il = System::IL_EM1;
  Step pa = one(il, sig(), "em0[Q]{a. f | a. g} r");
  CHECK(pa.rule == "perm-app");
  CHECK(same(pa.after, T(sig(), "em0[Q]{a. f r | a. g r}")));
  CHECK(one(il, sig(), "fst em0[Q]{a. p | a. q}").rule == "perm-proj");
  CHECK(one(il, sig(), "case em0[Q]{a. o | a. o} of { x => x | y => y }").rule == "perm-case");
  CHECK(one(il, sig(), "dest em0[Q]{a. e | a. e} as (y, h) => h").rule == "perm-dest");
  // individual application permutes as well
  CHECK(one(il, sig(), "em0[Q]{a. g | a. g} @ c").rule == "perm-app");
  // the pushed argument must not be captured by the hypothesis name
  Step cap = one(il, sig(), "em0[Q]{a. f | a. g} a");
  CHECK(cap.rule == "perm-app");
  CHECK(free_proof_vars(cap.after).count("a"));
}

TEST_CASE("em1 rules") {
  const System il = System::IL_EM1;
  // a does not occur in the left branch
  Step drop = one(il, sig(), "em1[all x. P(x)]{a. q | a. wit[a]}");
  CHECK(drop.rule == "em1-drop");
  CHECK(same(drop.after, T(sig(), "q")));

  ProofFile pf = testing::load("em1_raise.pf");
  NormalizeResult r = normalize(pf.system, pf.theory, pf.proof);
  REQUIRE(r.normal);
  // the spawned em0 keeps the copy on its right
  CHECK(rules(r) == std::vector<std::string>{"em1-raise", "dest", "em1-drop"});
  CHECK(r.trace[2].path == Path{1});
  CHECK(!check(pf.system, pf.theory, {}, r.term, pf.goal));
  CHECK(r.term->kind == ProofKind::Em0);
  CHECK(alpha_equal(r.term->annot, F(pf.theory, "P(c)")));
}

TEST_CASE("rec takes four steps on S 0") {
  const Theory& th = testing::ha();
  Proof t = T(th, "rec(post[refl](), fun {y} => fun (h : Eq(y, y)) => post[succ](h), S 0)");
  NormalizeResult r = normalize(System::HA_EM1, th, t);
  REQUIRE(r.normal);
  CHECK(rules(r) == std::vector<std::string>{"rec-succ", "beta-ind", "beta", "rec-zero"});
  // rec-succ literally: rec(u, v, S n) -> v n rec(u, v, n)
  Proof u = t->kids[0], v = t->kids[1];
  CHECK(same(r.trace[0].after, mk_app(mk_iapp(v, mk_zero()), mk_rec(u, v, mk_zero()))));
  CHECK(same(r.term, T(th, "post[succ](post[refl]())")));
  CHECK(!check(System::HA_EM1, th, {}, r.term, F(th, "Eq(1, 1)")));
  CHECK(one(System::HA_EM1, th, "rec(post[refl](), fun {y} => fun (h : Eq(y, y)) => post[succ](h), 0)").rule ==
        "rec-zero");
  // rec on an open argument is stuck
  Proof open = T(th, "fun {n} => rec(post[refl](), fun {y} => fun (h : Eq(y, y)) => post[succ](h), n)");
  CHECK_FALSE(step(System::HA_EM1, th, open));
}

TEST_CASE("HA em1 rules") {
  ProofFile pf = testing::load("markov_absdiff2.pf");
  NormalizeResult r = normalize(pf.system, pf.theory, pf.proof);
  REQUIRE(r.normal);
  std::map<std::string, int> n;
  for (const auto& s : r.trace) ++n[s.rule];
  CHECK(n["ha-hyp-true"] == 2);
  CHECK(n["ha-em1-false"] == 1);
  CHECK(r.term->kind == ProofKind::ExIntro);
  CHECK(numeral_value(r.term->ind) == 2u);
  CHECK(!check(pf.system, pf.theory, {}, r.term, pf.goal));
}

TEST_CASE("active hypotheses") {
  Formula ap = F(sig(), "all x. P(x)");
  Proof u = mk_pair(mk_iapp(mk_hyp("a", ap), mk_iconst("c")),
                    mk_lam("y", F(sig(), "Q"),
                           mk_pair(mk_iapp(mk_hyp("a", ap), mk_iconst("d")), mk_iapp(mk_hyp("a", ap), mk_iconst("c")))));
  auto all = active_hyps(u, "a");
  REQUIRE(all.size() == 3);
  CHECK(all[0].path == Path{0});
  CHECK(all[1].path == (Path{1, 0, 0}));
  CHECK(alpha_equal(all[1].m, mk_iconst("d")));
  CHECK(alpha_equal(active_hyp(u, "a")->m, mk_iconst("c")));
  // under a binder of x, hyp[a] @ x is not active
  Proof open = mk_ilam("x", mk_iapp(mk_hyp("a", ap), mk_ivar("x")));
  CHECK_FALSE(active_hyp(open, "a"));
  // shadowed by an inner em0 on the same name
  Proof sh = mk_em0(F(sig(), "Q"), "a", mk_iapp(mk_hyp("a", ap), mk_iconst("c")), mk_var("q"));
  CHECK_FALSE(active_hyp(sh, "a"));
  CHECK_FALSE(active_hyp(mk_var("q"), "a"));
}

TEST_CASE("active_hyps agrees with a preorder oracle on generated terms") {
  int seen = 0;
  for (const auto& x : gen::exc_instances(200, 5)) {
    if (x.wit_side) continue;
    std::vector<Path> want;
    Path at;
    hyp_apps(x.base.term, x.a, at, want);
    std::vector<Path> got;
    for (const auto& h : active_hyps(x.base.term, x.a)) got.push_back(h.path);
    CHECK_MESSAGE(got == want, show(x.base.term));
    seen += !want.empty();
  }
  CHECK(seen > 20);
}

TEST_CASE("exception substitution examples") {
  Formula ap = F(sig(), "all x. P(x)");
  Formula ex = F(sig(), "ex x. ~P(x)");
  Proof u = mk_pair(mk_iapp(mk_hyp("a", ap), mk_iconst("c")), mk_iapp(mk_hyp("a", ap), mk_iconst("d")));
  CHECK(same(exc_subst_hyp_all(u, "a"), T(sig(), "<hypo[P(c)], hypo[P(d)]>")));
  Proof only_c = exc_subst_hyp(u, "a", mk_iconst("c"));
  CHECK(same(only_c, mk_pair(mk_hypz(F(sig(), "P(c)")), mk_iapp(mk_hyp("a", ap), mk_iconst("d")))));
  // an unapplied hyp stays under (i), is an error when replacing all
  CHECK(same(exc_subst_hyp(mk_hyp("a", ap), "a", mk_iconst("c")), mk_hyp("a", ap)));
  CHECK_THROWS_AS(exc_subst_hyp_all(mk_hyp("a", ap), "a"), TypeErrorException);
  CHECK_THROWS_AS(exc_subst_hyp(mk_wit("a", ex), "a", mk_iconst("c")), TypeErrorException);

  Proof w = exc_subst_wit(sig(), mk_wit("a", ex), "a", mk_iconst("c"));
  CHECK(same(w, T(sig(), "((c, hypo[~P(c)]) : ex x. ~P(x))")));
  CHECK_THROWS_AS(exc_subst_wit(sig(), mk_iapp(mk_hyp("a", ap), mk_iconst("c")), "a", mk_iconst("c")),
                  TypeErrorException);
  // bound occurrences are untouched
  Proof bound = mk_em1(ap, "a", mk_iapp(mk_hyp("a", ap), mk_iconst("c")), mk_wit("a", ex));
  CHECK(same(exc_subst_hyp_all(bound, "a"), bound));
  CHECK(same(exc_subst_wit(sig(), bound, "a", mk_iconst("c")), bound));

  const Theory& th = testing::ha();
  Formula hw = F(th, "ex x. AbsDiff2(x)");
  CHECK(same(exc_subst_wit(th, mk_wit("a", hw), "a", mk_numeral(2)), T(th, "((2, tt) : ex x. AbsDiff2(x))")));
}

TEST_CASE("exception substitution agrees with the reference definitions") {
  int n = 0;
  for (const auto& x : gen::exc_instances(300, 9)) {
    const Proof& t = x.base.term;
    if (x.wit_side) {
      CHECK(same(exc_subst_wit(*x.base.th, t, x.a, x.m),
                 oracle::wit_subst(t, x.a, x.m, x.base.th->arithmetic())));
      ++n;
      continue;
    }
    Proof mine;
    try {
      mine = exc_subst_hyp_all(t, x.a);
    } catch (const TypeErrorException&) {
      CHECK_THROWS(oracle::hyp_subst_all(t, x.a));
      continue;
    }
    CHECK(same(mine, oracle::hyp_subst_all(t, x.a)));
    ++n;
  }
  CHECK(n > 100);
}

TEST_CASE("step is local and all_steps contains it") {
  for (const auto& s : samples()) {
    auto st = step(s.sys, *s.th, s.term);
    if (!st) continue;
    CHECK(same(st->before, s.term));
    Proof redex = subterm_at(s.term, st->path);
    auto inner = step(s.sys, *s.th, redex);
    CHECK(inner);
    if (inner && inner->path.empty())
      CHECK(same(replace_at(s.term, st->path, subterm_at(inner->after, {})), st->after));
    bool found = false;
    for (const auto& o : all_steps(s.sys, *s.th, s.term)) found |= same(o.after, st->after);
    CHECK_MESSAGE(found, show(s.term));
  }
}

TEST_CASE("normalize edge cases") {
  Proof nf = T(sig(), "fun (x : Q) => x");
  NormalizeResult r = normalize(System::IL_EM1, sig(), nf);
  CHECK(r.normal);
  CHECK(r.trace.empty());
  CHECK(same(r.term, nf));

  ProofFile pf = testing::load("rec_demo.pf");
  NormalizeResult cut = normalize(pf.system, pf.theory, pf.proof, 2);
  CHECK_FALSE(cut.normal);
  CHECK(cut.trace.size() == 2);
  CHECK(same(cut.term, cut.trace.back().after));
  NormalizeResult full = normalize(pf.system, pf.theory, pf.proof);
  CHECK(full.normal);
  CHECK_FALSE(step(pf.system, pf.theory, full.term));
}

TEST_CASE("subject reduction along corpus traces") {
  std::size_t steps = 0;
  for (const auto& e : std::filesystem::directory_iterator(MPK_CORPUS_DIR)) {
    if (e.path().extension() != ".pf") continue;
    ProofFile pf = parse_proof_file(read_file(e.path().string()));
    NormalizeResult r = normalize(pf.system, pf.theory, pf.proof);
    CHECK(r.normal);
    for (const auto& s : r.trace) {
      CHECK_MESSAGE(!check(pf.system, pf.theory, pf.ctx, s.after, pf.goal), std::string(e.path().filename().string() + " " + s.rule));
      ++steps;
    }
  }
  CHECK(steps >= 200);
}

TEST_CASE("subject reduction along generated traces") {
  std::size_t steps = 0;
  for (const auto& s : samples()) {
    NormalizeResult r = normalize(s.sys, *s.th, s.term, 5000);
    CHECK(r.normal);
    for (const auto& st : r.trace) {
      auto e = check(s.sys, *s.th, s.ctx, st.after, s.goal);
      CHECK_MESSAGE(!e, (show(st.before) + " -" + st.rule + "-> " + show(st.after) + ": " + (e ? e->describe() : std::string())));
      ++steps;
    }
    // every one-step reduct, not only the chosen one
    for (const auto& o : all_steps(s.sys, *s.th, s.term))
      CHECK_MESSAGE(!check(s.sys, *s.th, s.ctx, o.after, s.goal), std::string(show(s.term) + " -" + o.rule + "->"));
  }
  CHECK(steps > 300);
}

TEST_CASE("every reduction order terminates and reaches the deterministic normal form") {
  std::size_t explored = 0, worst = 0;
  for (const auto& s : samples()) {
    if (size(s.term) > 12) continue;
    auto res = explore::run(s.sys, *s.th, s.term);
    CHECK_MESSAGE(res.complete, show(s.term));
    CHECK_FALSE(res.cycle);
    NormalizeResult r = normalize(s.sys, *s.th, s.term);
    REQUIRE(r.normal);
    CHECK_MESSAGE(res.normals.count(canonical_key(r.term)), show(s.term));
    worst = std::max(worst, res.longest);
    ++explored;
  }
  CHECK(explored >= 500);
  CHECK(worst <= 1000);
}

TEST_CASE("substituted terms keep their type") {
  auto xs = gen::exc_instances(200, 13);
  REQUIRE(xs.size() >= 100);
  int all = 0;
  for (const auto& x : xs) {
    auto e = gen::check_exc_instance(x, false);
    CHECK_MESSAGE(!e, e.value_or(""));
    auto f = gen::check_exc_instance(x, true);
    if (f && *f == "skip") continue;
    CHECK_MESSAGE(!f, f.value_or(""));
    ++all;
  }
  CHECK(all > 20);
}
