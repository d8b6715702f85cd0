#include "mpk/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace mpk {

ParseError::ParseError(int l, int c, const std::string& msg)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), column(c) {}

namespace {

enum class Tok { Ident, Number, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  int line, col;
  std::size_t begin, end;  // byte offsets
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto adv = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (c == '#' || (c == '/' && i + 1 < s.size() && s[i + 1] == '/')) {
      while (i < s.size() && s[i] != '\n') adv(1);
      continue;
    }
    Token t{Tok::Sym, "", line, col, i, i};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_' || s[j] == '\''))
        ++j;
      t.kind = Tok::Ident;
      t.text = std::string(s.substr(i, j - i));
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Number;
      t.text = std::string(s.substr(i, j - i));
    } else if ((c == '-' || c == '=') && i + 1 < s.size() && s[i + 1] == '>') {
      t.text = std::string(s.substr(i, 2));
    } else if (std::string_view("()[]{}<>,;:.|&~@/=-").find(c) != std::string_view::npos) {
      t.text = std::string(1, c);
    } else {
      throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    adv(t.text.size());
    t.end = i;
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", line, col, s.size(), s.size()});
  return out;
}

const std::set<std::string>& reserved() {
  static const std::set<std::string> words = {
      "fun", "case", "of",  "dest", "as", "em0", "em1", "hyp", "wit", "hypo", "efq",
      "mp",  "tt",   "rec", "post", "fst", "snd", "inl", "inr", "all", "ex",  "bot"};
  return words;
}

// Words that cannot start an application argument.
bool non_atomic_word(const std::string& w) {
  static const std::set<std::string> words = {"fun", "case", "of",  "dest", "as",
                                              "fst", "snd",  "inl", "inr"};
  return words.count(w) > 0;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src), toks_(lex(src)) {}

  void set_theory(const Theory* th) {
    th_ = th;
    if (th) scope_ = scope_of(Context{}, &th->sig);
  }

  void set_context(const Context& ctx) { scope_ = scope_of(ctx, &th_->sig); }

  // -------------------------------------------------------------------------
  // token helpers

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool at_sym(std::string_view s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Sym && peek(k).text == s;
  }
  bool at_word(std::string_view w, std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && peek(k).text == w;
  }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void error(const std::string& msg) const { error_at(peek(), msg); }
  [[noreturn]] static void error_at(const Token& t, const std::string& msg) {
    throw ParseError(t.line, t.col, msg);
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + t.text + "'";
  }

  void expect_sym(std::string_view s) {
    if (!at_sym(s)) error("expected '" + std::string(s) + "', found " + describe(peek()));
    next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) error("expected '" + std::string(w) + "', found " + describe(peek()));
    next();
  }
  std::string ident(const char* what) {
    if (peek().kind != Tok::Ident) error(std::string("expected ") + what + ", found " + describe(peek()));
    return next().text;
  }
  // A binder or variable name: not a keyword.
  std::string name(const char* what) {
    if (peek().kind == Tok::Ident && reserved().count(peek().text))
      error("'" + peek().text + "' is a keyword and cannot be used as " + what);
    return ident(what);
  }
  std::string ind_binder() {
    const Token& t = peek();
    std::string n = name("an individual variable");
    if (th_->sig.constants.count(n)) error_at(t, "'" + n + "' is a constant and cannot be bound");
    if (th_->arithmetic() && n == kSucc) error_at(t, "'S' is the successor and cannot be bound");
    return n;
  }
  int number(const char* what) {
    if (peek().kind != Tok::Number) error(std::string("expected ") + what + ", found " + describe(peek()));
    const Token t = next();
    try {
      return std::stoi(t.text);
    } catch (const std::exception&) {
      error_at(t, "number out of range");
    }
  }

  // -------------------------------------------------------------------------
  // individual terms

  IndTerm term() {
    const Token t = peek();
    if (t.kind == Tok::Number) {
      if (!th_->arithmetic()) error("numerals are only available in arithmetic");
      next();
      try {
        return mk_numeral(std::stoull(t.text));
      } catch (const std::exception&) {
        error_at(t, "numeral out of range");
      }
    }
    if (at_sym("(")) {
      next();
      IndTerm x = term();
      expect_sym(")");
      return x;
    }
    if (th_->arithmetic() && at_word(kSucc)) {
      next();
      return mk_succ(term());
    }
    std::string n = name("an individual term");
    // constants never take arguments: `t @ c (u)` applies t @ c to u
    if (at_sym("(") && !th_->sig.constants.count(n)) {
      if (th_->arithmetic()) error_at(t, "arithmetic terms are built from 0, S and variables only");
      next();
      std::vector<IndTerm> args;
      if (!at_sym(")")) {
        args.push_back(term());
        while (at_sym(",")) {
          next();
          args.push_back(term());
        }
      }
      expect_sym(")");
      return mk_iapp(n, std::move(args));
    }
    if (!th_->arithmetic() && th_->sig.constants.count(n)) return mk_iconst(n);
    return mk_ivar(n);
  }

  // -------------------------------------------------------------------------
  // formulas

  Formula formula() {
    Formula l = disj();
    if (at_sym("->")) {
      next();
      return mk_imp(l, formula());
    }
    return l;
  }

  Formula disj() {
    Formula l = conj();
    if (at_sym("|")) {
      next();
      return mk_or(l, disj());
    }
    return l;
  }

  Formula conj() {
    Formula l = unary();
    if (at_sym("&")) {
      next();
      return mk_and(l, conj());
    }
    return l;
  }

  Formula unary() {
    if (at_sym("~")) {
      next();
      return negate(*th_, unary());
    }
    if (at_word("all") || at_word("ex")) {
      bool all = next().text == "all";
      std::vector<std::string> vars{ind_binder()};
      while (!at_sym(".")) vars.push_back(ind_binder());
      next();
      Formula body = formula();
      for (auto it = vars.rbegin(); it != vars.rend(); ++it)
        body = all ? mk_forall(*it, body) : mk_exists(*it, body);
      return body;
    }
    if (at_sym("(")) {
      next();
      Formula f = formula();
      expect_sym(")");
      return f;
    }
    if (at_word("bot")) {
      next();
      return falsity(*th_);
    }
    std::string p = name("a predicate");
    std::vector<IndTerm> args;
    if (at_sym("(")) {
      next();
      if (!at_sym(")")) {
        args.push_back(term());
        while (at_sym(",")) {
          next();
          args.push_back(term());
        }
      }
      expect_sym(")");
    }
    return mk_atom(p, std::move(args));
  }

  Formula bracket_formula() {
    expect_sym("[");
    Formula f = formula();
    expect_sym("]");
    return f;
  }

  // -------------------------------------------------------------------------
  // proof terms

  Proof proof() {
    if (at_word("fun")) {
      next();
      struct B {
        bool ind;
        std::string n;
        Formula a;
      };
      std::vector<B> bs;
      while (at_sym("(") || at_sym("{")) {
        if (at_sym("(")) {
          next();
          std::string x = name("a proof variable");
          expect_sym(":");
          Formula a = formula();
          expect_sym(")");
          bs.push_back({false, x, a});
        } else {
          next();
          do bs.push_back({true, ind_binder(), nullptr});
          while (!at_sym("}"));
          next();
        }
      }
      if (bs.empty()) error("expected a binder '(x : A)' or '{a}' after 'fun'");
      expect_sym("=>");
      Proof body = proof();
      for (auto it = bs.rbegin(); it != bs.rend(); ++it)
        body = it->ind ? mk_ilam(it->n, body) : mk_lam(it->n, it->a, body);
      return body;
    }
    if (at_word("case")) {
      next();
      Proof t = proof();
      expect_word("of");
      expect_sym("{");
      std::string x = name("a proof variable");
      expect_sym("=>");
      Proof u = proof();
      expect_sym("|");
      std::string y = name("a proof variable");
      expect_sym("=>");
      Proof v = proof();
      expect_sym("}");
      return mk_case(t, x, u, y, v);
    }
    if (at_word("dest")) {
      next();
      Proof t = proof();
      expect_word("as");
      expect_sym("(");
      std::string a = ind_binder();
      expect_sym(",");
      std::string x = name("a proof variable");
      expect_sym(")");
      expect_sym("=>");
      Proof u = proof();
      return mk_exelim(t, a, x, u);
    }
    return app();
  }

  bool starts_atomic() const {
    const Token& t = peek();
    if (t.kind == Tok::Ident) return !non_atomic_word(t.text) && t.text != "all" && t.text != "ex";
    return at_sym("(") || at_sym("<");
  }

  Proof app() {
    Proof h = prefix();
    for (;;) {
      if (at_sym("@")) {
        next();
        h = mk_iapp(h, term());
      } else if (starts_atomic()) {
        h = mk_app(h, atomic());
      } else {
        return h;
      }
    }
  }

  Proof prefix() {
    if (at_word("fst") || at_word("snd")) {
      int i = next().text == "fst" ? 0 : 1;
      return mk_proj(i, atomic());
    }
    if (at_word("inl") || at_word("inr")) {
      int i = next().text == "inl" ? 0 : 1;
      Formula other = bracket_formula();
      return mk_inj(i, other, atomic());
    }
    return atomic();
  }

  Proof em(bool one) {
    Formula f = bracket_formula();
    if (one && f->kind != FormulaKind::Forall) error("em1 needs an annotation of the form all x. P");
    expect_sym("{");
    std::string a = name("a hypothesis variable");
    expect_sym(".");
    auto saved = scope_;
    if (one) {
      scope_.universal[a] = f;
      if (auto w = wit_annotation(f, &th_->sig))
        scope_.existential[a] = *w;
      else
        scope_.existential.erase(a);
    } else {
      scope_.universal.erase(a);
      scope_.existential.erase(a);
    }
    Proof u = proof();
    expect_sym("|");
    const Token at2 = peek();
    std::string a2 = name("a hypothesis variable");
    if (a2 != a) error_at(at2, "both branches must bind the same name, '" + a + "'");
    expect_sym(".");
    Proof v = proof();
    expect_sym("}");
    scope_ = std::move(saved);
    return one ? mk_em1(f, a, u, v) : mk_em0(f, a, u, v);
  }

  Proof hypvar(bool hyp) {
    expect_sym("[");
    const Token at = peek();
    std::string a = name("a hypothesis variable");
    Formula annot;
    if (at_sym(":")) {
      next();
      annot = formula();
    } else {
      const auto& m = hyp ? scope_.universal : scope_.existential;
      auto it = m.find(a);
      if (it == m.end() || !it->second)
        error_at(at, std::string("cannot resolve the annotation of ") + (hyp ? "hyp[" : "wit[") + a +
                         "]; write it as [" + a + " : F]");
      annot = it->second;
    }
    expect_sym("]");
    return hyp ? mk_hyp(a, annot) : mk_wit(a, annot);
  }

  Proof atomic() {
    if (at_sym("(")) {
      next();
      // (m, t) : ex a. A, or a parenthesised term
      std::size_t save = pos_;
      IndTerm m;
      try {
        m = term();
        if (!at_sym(",")) m = nullptr;
      } catch (const ParseError&) {
        m = nullptr;
      }
      if (m) {
        next();
        Proof t = proof();
        expect_sym(")");
        expect_sym(":");
        Formula f = formula();
        return mk_exintro(m, t, f);
      }
      pos_ = save;
      Proof t = proof();
      expect_sym(")");
      return t;
    }
    if (at_sym("<")) {
      next();
      Proof t = proof();
      expect_sym(",");
      Proof u = proof();
      expect_sym(">");
      return mk_pair(t, u);
    }
    if (peek().kind != Tok::Ident) error("expected a proof term, found " + describe(peek()));
    const std::string w = peek().text;
    if (w == "em0" || w == "em1") {
      next();
      return em(w == "em1");
    }
    if (w == "hyp" || w == "wit") {
      next();
      return hypvar(w == "hyp");
    }
    if (w == "hypo") {
      next();
      return mk_hypz(bracket_formula());
    }
    if (w == "efq") {
      next();
      return mk_efq(bracket_formula());
    }
    if (w == "mp") {
      next();
      return mk_mp(bracket_formula());
    }
    if (w == "tt") {
      next();
      return mk_true();
    }
    if (w == "rec") {
      next();
      expect_sym("(");
      Proof u = proof();
      expect_sym(",");
      Proof v = proof();
      expect_sym(",");
      IndTerm m = term();
      expect_sym(")");
      return mk_rec(u, v, m);
    }
    if (w == "post") {
      next();
      expect_sym("[");
      std::string rule = ident("a rule name");
      expect_sym("]");
      expect_sym("(");
      std::vector<Proof> args;
      if (!at_sym(")")) {
        args.push_back(proof());
        while (at_sym(",")) {
          next();
          args.push_back(proof());
        }
      }
      expect_sym(")");
      return mk_post(rule, std::move(args));
    }
    return mk_var(name("a proof variable"));
  }

  // -------------------------------------------------------------------------
  // primitive recursive definitions

  arith::PRFun pr(const arith::Registry& reg) {
    const Token t = peek();
    std::string w = ident("a primitive recursive function");
    try {
      if (w == "zero") {
        int k = 0;
        if (at_sym("(")) {
          next();
          k = number("an arity");
          expect_sym(")");
        }
        return arith::pr_zero(k);
      }
      if (w == "succ") return arith::pr_succ();
      if (w == "proj") {
        expect_sym("(");
        int i = number("a projection index");
        expect_sym(",");
        int n = number("an arity");
        expect_sym(")");
        return arith::pr_proj(i, n);
      }
      if (w == "comp") {
        expect_sym("(");
        arith::PRFun f = pr(reg);
        expect_sym(";");
        std::vector<arith::PRFun> gs{pr(reg)};
        while (at_sym(",")) {
          next();
          gs.push_back(pr(reg));
        }
        expect_sym(")");
        return arith::pr_comp(f, std::move(gs));
      }
      if (w == "rec") {
        expect_sym("(");
        arith::PRFun base = pr(reg);
        expect_sym(";");
        arith::PRFun step = pr(reg);
        expect_sym(")");
        return arith::pr_rec(base, step);
      }
    } catch (const std::invalid_argument& e) {
      error_at(t, e.what());
    }
    const arith::PRFun* f = reg.fun(w);
    if (!f) error_at(t, "unknown primitive recursive function '" + w + "'");
    return arith::pr_named(*f, w);
  }

  // -------------------------------------------------------------------------
  // file sections

  std::optional<System> system_line() {
    if (!at_word("system")) return std::nullopt;
    next();
    const Token t = peek();
    std::string s = ident("a system name");
    while (at_sym("-")) {
      next();
      if (peek().kind == Tok::Ident || peek().kind == Tok::Number) s += "-" + next().text;
    }
    expect_sym(";");
    auto sys = parse_system(s);
    if (!sys) error_at(t, "unknown system '" + s + "' (il-hmp, il-em1, ha-em1)");
    return sys;
  }

  void arity_decl(std::string& n, int& k, const char* what) {
    n = name(what);
    expect_sym("/");
    k = number("an arity");
  }

  void sig_block(Theory& th, std::string& text) {
    if (!at_word("sig")) return;
    std::size_t begin = peek().begin;
    next();
    expect_sym("{");
    const bool ha = th.arithmetic();
    while (!at_sym("}")) {
      const Token kw = peek();
      std::string w = ident("a declaration");
      auto first_order = [&] {
        if (ha) error_at(kw, "'" + w + "' declarations are not available in arithmetic; use prfun/prrel");
      };
      try {
        if (w == "const") {
          first_order();
          th.sig.add_constant(name("a constant"));
          while (at_sym(",")) {
            next();
            th.sig.add_constant(name("a constant"));
          }
        } else if (w == "fun") {
          first_order();
          do {
            if (at_sym(",")) next();
            std::string f;
            int k;
            arity_decl(f, k, "a function symbol");
            th.sig.add_function(f, k);
          } while (at_sym(","));
        } else if (w == "pred") {
          first_order();
          do {
            if (at_sym(",")) next();
            std::string p;
            int k;
            arity_decl(p, k, "a predicate");
            if (at_sym("~")) {
              next();
              std::string pc;
              int kc;
              const Token at = peek();
              arity_decl(pc, kc, "a predicate");
              if (kc != k) error_at(at, "complement arity differs from " + p + "/" + std::to_string(k));
              th.sig.add_complement_pair(p, pc, k);
            } else {
              th.sig.add_predicate(p, k);
            }
          } while (at_sym(","));
        } else if (w == "prfun") {
          if (!ha) error_at(kw, "prfun is only available in arithmetic");
          std::string f;
          int k;
          arity_decl(f, k, "a function name");
          expect_sym("=");
          const Token at = peek();
          arith::PRFun body = pr(th.arith);
          if (body->arity != k)
            error_at(at, "definition has arity " + std::to_string(body->arity) + ", declared " +
                             std::to_string(k));
          th.arith.define_fun(f, body);
        } else if (w == "prrel") {
          if (!ha) error_at(kw, "prrel is only available in arithmetic");
          std::string r;
          int k;
          arity_decl(r, k, "a relation name");
          expect_sym("=");
          const Token at = peek();
          std::string f = ident("a function name");
          expect_sym("~");
          std::string rc = name("a relation name");
          const arith::PRFun* fn = th.arith.fun(f);
          if (!fn) error_at(at, "unknown primitive recursive function '" + f + "'");
          if ((*fn)->arity != k)
            error_at(at, f + " has arity " + std::to_string((*fn)->arity) + ", declared " + std::to_string(k));
          th.sig.add_complement_pair(r, rc, k);
          th.arith.define_rel(r, f, rc);
        } else {
          error_at(kw, "unknown declaration '" + w + "'");
        }
      } catch (const std::invalid_argument& e) {
        error_at(kw, e.what());
      }
      expect_sym(";");
    }
    std::size_t end = peek().end;
    next();
    text = std::string(src_.substr(begin, end - begin));
  }

  void ctx_block(Context& ctx) {
    if (!at_word("ctx")) return;
    next();
    expect_sym("{");
    while (!at_sym("}")) {
      const Token at = peek();
      EntryKind k = EntryKind::ProofVar;
      if (at_word("hyp")) {
        next();
        k = EntryKind::HypVar;
      }
      std::string x = name(k == EntryKind::HypVar ? "a hypothesis variable" : "a proof variable");
      expect_sym(":");
      Formula a = formula();
      expect_sym(";");
      try {
        ctx.add(k, x, a);
      } catch (const std::invalid_argument& e) {
        error_at(at, e.what());
      }
    }
    next();
  }

  void finish() {
    if (!at_end()) error("unexpected " + describe(peek()) + " after the end of the file");
  }

  template <class F>
  auto whole(F f) {
    auto r = f();
    finish();
    return r;
  }

  // Model files

  Element element(const std::vector<Element>& domain) {
    const Token t = peek();
    std::string e = t.kind == Tok::Number ? next().text : ident("a domain element");
    if (!domain.empty() && std::find(domain.begin(), domain.end(), e) == domain.end())
      error_at(t, "'" + e + "' is not in the domain");
    return e;
  }

  Tuple tuple(const std::vector<Element>& domain) {
    // a bare element is a 1-tuple
    if (!at_sym("(")) return {element(domain)};
    next();
    Tuple t;
    if (!at_sym(")")) {
      t.push_back(element(domain));
      while (at_sym(",")) {
        next();
        t.push_back(element(domain));
      }
    }
    expect_sym(")");
    return t;
  }

  ModelFile model(const Signature& sig) {
    ModelFile mf;
    Model& m = mf.model;
    expect_word("model");
    expect_sym("{");
    bool have_domain = false;
    auto ensure_domain = [&] {
      if (have_domain) return;
      have_domain = true;
      m.domain.assign(sig.constants.begin(), sig.constants.end());
      if (m.domain.empty()) m.domain.push_back("e0");
    };
    while (!at_sym("}")) {
      const Token kw = peek();
      std::string w = ident("a model declaration");
      if (w == "domain") {
        if (have_domain) error_at(kw, "domain declared twice");
        have_domain = true;
        m.domain.push_back(element({}));
        while (at_sym(",")) {
          next();
          m.domain.push_back(element({}));
        }
      } else if (w == "const") {
        ensure_domain();
        std::string c = ident("a constant");
        if (!sig.constants.count(c)) error_at(kw, "'" + c + "' is not a constant of the signature");
        expect_sym("=");
        m.constants[c] = element(m.domain);
      } else if (w == "fun") {
        ensure_domain();
        std::string f = ident("a function symbol");
        if (!sig.functions.count(f)) error_at(kw, "'" + f + "' is not a function of the signature");
        expect_sym("=");
        expect_sym("{");
        auto& table = m.functions[f];
        while (!at_sym("}")) {
          Tuple args = tuple(m.domain);
          expect_sym("->");
          table[args] = element(m.domain);
          if (!at_sym(",")) break;
          next();
        }
        expect_sym("}");
      } else if (w == "pred") {
        ensure_domain();
        std::string p = ident("a predicate");
        if (!sig.predicates.count(p)) error_at(kw, "'" + p + "' is not a predicate of the signature");
        expect_sym("=");
        expect_sym("{");
        auto& rel = m.predicates[p];
        while (!at_sym("}")) {
          rel.insert(tuple(m.domain));
          if (!at_sym(",")) break;
          next();
        }
        expect_sym("}");
      } else if (w == "assign") {
        ensure_domain();
        std::string x = ident("a variable");
        expect_sym("=");
        mf.assignment[x] = element(m.domain);
      } else {
        error_at(kw, "unknown model declaration '" + w + "'");
      }
      expect_sym(";");
    }
    next();
    ensure_domain();
    for (const auto& c : sig.constants)
      if (!m.constants.count(c) && std::find(m.domain.begin(), m.domain.end(), c) != m.domain.end())
        m.constants[c] = c;
    finish();
    return mf;
  }

 private:
  std::size_t pos_ = 0;
  std::string_view src_;
  std::vector<Token> toks_;
  const Theory* th_ = nullptr;
  PrintScope scope_;
};

Theory theory_for(System sys) { return sys == System::HA_EM1 ? ha_theory() : il_theory(); }

}  // namespace

ProofFile parse_proof_file(std::string_view src, std::optional<System> forced) {
  Parser p(src);
  ProofFile f;
  auto declared = p.system_line();
  f.system = forced ? *forced : declared.value_or(System::IL_EM1);
  f.theory = theory_for(f.system);
  p.set_theory(&f.theory);
  p.sig_block(f.theory, f.sig_text);
  p.ctx_block(f.ctx);
  p.set_context(f.ctx);
  p.expect_word("goal");
  f.goal = p.formula();
  p.expect_sym(";");
  p.expect_word("proof");
  f.proof = p.proof();
  p.expect_sym(";");
  p.finish();
  return f;
}

FormulaFile parse_formula_file(std::string_view src, std::optional<System> forced) {
  Parser p(src);
  FormulaFile f;
  auto declared = p.system_line();
  f.system = forced ? *forced : declared.value_or(System::IL_EM1);
  f.theory = theory_for(f.system);
  p.set_theory(&f.theory);
  std::string ignored;
  p.sig_block(f.theory, ignored);
  p.expect_word("formula");
  f.formula = p.formula();
  p.expect_sym(";");
  p.finish();
  return f;
}

ModelFile parse_model_file(std::string_view src, const Signature& sig) {
  Parser p(src);
  return p.model(sig);
}

Formula parse_formula(std::string_view src, const Theory& th) {
  Parser p(src);
  p.set_theory(&th);
  return p.whole([&] { return p.formula(); });
}

IndTerm parse_ind_term(std::string_view src, const Theory& th) {
  Parser p(src);
  p.set_theory(&th);
  return p.whole([&] { return p.term(); });
}

Proof parse_proof(std::string_view src, const Theory& th, const Context& ctx) {
  Parser p(src);
  p.set_theory(&th);
  p.set_context(ctx);
  return p.whole([&] { return p.proof(); });
}

std::string write_proof_file(System sys, const Theory& th, const std::string& sig_text,
                             const Context& ctx, const Formula& goal, const Proof& proof) {
  std::ostringstream o;
  o << "system " << system_name(sys) << ";\n";
  if (!sig_text.empty()) o << sig_text << "\n";
  if (!ctx.empty()) {
    o << "ctx {\n";
    for (const auto& e : ctx.entries())
      o << "  " << (e.kind == EntryKind::HypVar ? "hyp " : "") << e.name << " : " << show(e.formula) << ";\n";
    o << "}\n";
  }
  o << "goal " << show(goal) << ";\n";
  o << "proof\n  " << show(proof, scope_of(ctx, &th.sig)) << ";\n";
  return o.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace mpk
