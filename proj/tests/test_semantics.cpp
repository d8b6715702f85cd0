#include <doctest.h>

#include <functional>

#include "mpk/parser.hpp"
#include "mpk/semantics.hpp"
#include "testing.hpp"

using namespace mpk;
using testing::F;

namespace {

const Theory& sig() {
  static const Theory th = testing::il_sig("const a, b; pred P/1, Q/0;");
  return th;
}

Model with_p(std::set<Tuple> p) {
  Model m;
  m.domain = {"a", "b"};
  m.constants = {{"a", "a"}, {"b", "b"}};
  m.predicates["P"] = std::move(p);
  return m;
}

// every and/or formula with exactly k connectives over the leaves
void shapes(int k, const std::vector<Formula>& leaves, const std::function<void(const Formula&)>& f) {
  if (k == 0) {
    for (const auto& l : leaves) f(l);
    return;
  }
  for (int left = 0; left < k; ++left)
    shapes(left, leaves, [&](const Formula& x) {
      shapes(k - 1 - left, leaves, [&](const Formula& y) {
        f(mk_and(x, y));
        f(mk_or(x, y));
      });
    });
}

}  // namespace

TEST_CASE("evaluation examples") {
  Formula f = F(sig(), "(P(a) | P(b)) -> P(a)");
  CHECK(eval_formula(with_p({{"a"}}), {}, f));
  CHECK_FALSE(eval_formula(with_p({{"b"}}), {}, f));
  Formula g = F(sig(), "(P(a) | P(b)) -> P(b)");
  CHECK_FALSE(eval_formula(with_p({{"a"}}), {}, g));
  CHECK(eval_formula(with_p({{"b"}}), {}, g));
  // the existential itself holds in both
  Formula e = F(sig(), "ex x. ((P(a) | P(b)) -> P(x))");
  CHECK(eval_formula(with_p({{"a"}}), {}, e));
  CHECK(eval_formula(with_p({{"b"}}), {}, e));

  CHECK_FALSE(eval_formula(with_p({}), {}, F(sig(), "P(a) & Q")));
  CHECK_FALSE(eval_formula(with_p({}), {}, F(sig(), "ex x. P(x)")));
  CHECK(eval_formula(with_p({{"a"}, {"b"}}), {}, F(sig(), "all x. P(x)")));
  CHECK(eval_formula(with_p({{"a"}}), {{"y", "a"}}, F(sig(), "P(y)")));
  CHECK_FALSE(eval_formula(with_p({}), {}, F(sig(), "bot")));
  CHECK_THROWS_AS(eval_formula(with_p({}), {}, F(sig(), "P(y)")), EvalError);
}

TEST_CASE("model validation") {
  const Theory th = testing::il_sig("const a; fun f/1; pred P/1;");
  Model m;
  m.domain = {"a"};
  m.constants = {{"a", "a"}};
  CHECK(validate_model(m, th.sig));  // f is not interpreted
  m.functions["f"] = {{{"a"}, "a"}};
  CHECK_FALSE(validate_model(m, th.sig));
  m.predicates["P"] = {{"a", "a"}};
  CHECK(validate_model(m, th.sig));  // arity
  m.predicates["P"] = {{"z"}};
  CHECK(validate_model(m, th.sig));  // outside the domain
  m.predicates["P"] = {{"a"}};
  CHECK_FALSE(validate_model(m, th.sig));
  CHECK(eval_term(m, {}, F(th, "P(f(f(a)))")->args[0]) == "a");
}

TEST_CASE("model files") {
  ModelFile mf = parse_model_file("model { domain a, b; pred P = { a, (b) }; assign y = b; }", sig().sig);
  CHECK(mf.model.domain == std::vector<Element>{"a", "b"});
  CHECK(mf.model.predicates["P"] == std::set<Tuple>{{"a"}, {"b"}});
  CHECK(mf.model.constants["b"] == "b");
  CHECK(mf.assignment["y"] == "b");
  CHECK(eval_formula(mf.model, mf.assignment, F(sig(), "P(y) & P(a)")));
  // default domain: the constants
  ModelFile d = parse_model_file("model { }", sig().sig);
  CHECK(d.model.domain == std::vector<Element>{"a", "b"});
  CHECK_THROWS_AS(parse_model_file("model { pred Z = { a }; }", sig().sig), ParseError);
  CHECK_THROWS_AS(parse_model_file("model { pred P = { c }; }", sig().sig), ParseError);

  for (const char* m : {"p_is_a", "p_is_b"}) {
    FormulaFile ff = parse_formula_file(read_file(testing::corpus("semantics/two_models.f")));
    ModelFile x = parse_model_file(read_file(testing::corpus(std::string("semantics/") + m + ".model")), ff.theory.sig);
    CHECK_FALSE(validate_model(x.model, ff.theory.sig));
    CHECK(eval_formula(x.model, x.assignment, ff.formula) == (std::string(m) == "p_is_a"));
  }
}

TEST_CASE("empty model") {
  CHECK_FALSE(empty_model_check(F(sig(), "ex x. P(x)")));
  CHECK_FALSE(empty_model_check(F(sig(), "ex x. (P(x) | Q)")));
  CHECK_FALSE(empty_model_check(F(sig(), "ex x. (P(x) & Q)")));
  CHECK_FALSE(empty_model_check(F(sig(), "ex x. Q")));
  CHECK_THROWS_AS(empty_model_check(F(sig(), "ex x. (P(x) -> Q)")), EvalError);
  CHECK_THROWS_AS(empty_model_check(F(sig(), "ex x. all y. P(y)")), EvalError);
  CHECK_THROWS_AS(empty_model_check(F(sig(), "P(a)")), EvalError);
  Model m = empty_model(F(sig(), "ex x. P(a)"));
  CHECK(m.domain == std::vector<Element>{"a"});
  CHECK(empty_model(F(sig(), "ex x. Q")).domain.size() == 1);
}

TEST_CASE("no implication-free propositional matrix is valid, up to 5 connectives") {
  const Theory th = testing::il_sig("const c; pred P/1, Q/1;");
  std::vector<Formula> leaves = {F(th, "P(x)"), F(th, "Q(x)"), F(th, "P(c)"), F(th, "bot")};
  std::size_t n = 0, wrong = 0;
  for (int k = 0; k <= 5; ++k)
    shapes(k, leaves, [&](const Formula& p) {
      Formula e = mk_exists("x", p);
      // independently: in the all-empty model every atom, hence p, is false
      if (empty_model_check(e)) ++wrong;
      ++n;
    });
  CHECK(wrong == 0);
  // 4 + 32 + 512 + 10240 + 229376 + 5505024: sum over k of Cat(k) 2^k 4^(k+1)
  CHECK(n == 5745188);
}

TEST_CASE("classical equivalences hold in every model over two elements") {
  const Theory th = testing::il_sig("const a, b; pred P/1, Q/0;");
  std::vector<std::pair<const char*, const char*>> eqs = {
      {"~(P(x) & Q)", "~P(x) | ~Q"},
      {"~(P(x) | Q)", "~P(x) & ~Q"},
      {"~~P(x)", "P(x)"},
      {"~(all y. P(y))", "ex y. ~P(y)"},
      {"~(ex y. P(y))", "all y. ~P(y)"},
      {"P(x) -> Q", "~P(x) | Q"},
      {"(ex y. P(y)) -> Q", "all y. (P(y) -> Q)"},
  };
  int models = 0;
  for (int mask = 0; mask < 8; ++mask) {
    Model m;
    m.domain = {"a", "b"};
    m.constants = {{"a", "a"}, {"b", "b"}};
    if (mask & 1) m.predicates["P"].insert({"a"});
    if (mask & 2) m.predicates["P"].insert({"b"});
    if (mask & 4) m.predicates["Q"].insert({});
    REQUIRE_FALSE(validate_model(m, th.sig));
    for (const char* x : {"a", "b"})
      for (const auto& [l, r] : eqs)
        CHECK_MESSAGE(eval_formula(m, {{"x", x}}, F(th, l)) == eval_formula(m, {{"x", x}}, F(th, r)), l);
    ++models;
  }
  CHECK(models == 8);
}
