#ifndef MPK_SYNTAX_HPP
#define MPK_SYNTAX_HPP

// Abstract syntax for first-order formulas, individual terms and proof
// terms of the three kernels (IL+HMP, IL+EM1-, HA+EM1-).
//
// All nodes are immutable and shared through std::shared_ptr<const T>;
// every constructor goes through the mk_* factories below.  Names are
// plain strings and equality of terms is always alpha-equivalence.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mpk {

// ---------------------------------------------------------------------------
// Individual terms

struct IndNode;
using IndTerm = std::shared_ptr<const IndNode>;

enum class IndKind { Var, Const, App };

struct IndNode {
  IndKind kind;
  std::string name;
  std::vector<IndTerm> args;  // App only
};

IndTerm mk_ivar(std::string name);
IndTerm mk_iconst(std::string name);
IndTerm mk_iapp(std::string fn, std::vector<IndTerm> args);

// Arithmetic terms are Const "0" and App "S".
inline constexpr std::string_view kZero = "0";
inline constexpr std::string_view kSucc = "S";
IndTerm mk_zero();
IndTerm mk_succ(IndTerm t);
IndTerm mk_numeral(std::uint64_t n);
// Value of a closed S...S0 term.
std::optional<std::uint64_t> numeral_value(const IndTerm& t);

// ---------------------------------------------------------------------------
// Formulas

struct FormulaNode;
using Formula = std::shared_ptr<const FormulaNode>;

enum class FormulaKind { Atom, Bottom, And, Or, Imp, Forall, Exists };

struct FormulaNode {
  FormulaKind kind;
  std::string name;            // predicate (Atom) or bound variable (Forall/Exists)
  std::vector<IndTerm> args;   // Atom only
  Formula lhs;                 // And/Or/Imp left, Forall/Exists body
  Formula rhs;                 // And/Or/Imp right
};

Formula mk_atom(std::string pred, std::vector<IndTerm> args = {});
Formula mk_bottom();
Formula mk_and(Formula a, Formula b);
Formula mk_or(Formula a, Formula b);
Formula mk_imp(Formula a, Formula b);
Formula mk_not(Formula a);  // a -> bot
Formula mk_forall(std::string var, Formula body);
Formula mk_exists(std::string var, Formula body);

inline bool is_quantifier(const Formula& f) {
  return f->kind == FormulaKind::Forall || f->kind == FormulaKind::Exists;
}

// ---------------------------------------------------------------------------
// Proof terms

struct ProofNode;
using Proof = std::shared_ptr<const ProofNode>;

enum class ProofKind {
  Var,      // x
  App,      // t u                      kids {t, u}
  IApp,     // t m                      kids {t}, ind = m
  Lam,      // fun (x:A) => t           name = x, annot = A, kids {t}
  ILam,     // fun {a} => t             name = a, kids {t}
  Pair,     // <t, u>                   kids {t, u}
  Proj,     // fst t / snd t            index, kids {t}
  Inj,      // inl[B] t / inr[A] t      index, annot = other disjunct, kids {t}
  Case,     // case t of {x => u | y => v}   name = x, name2 = y, kids {t, u, v}
  ExIntro,  // (m, t) : ex a. A         ind = m, annot = ex a. A, kids {t}
  ExElim,   // dest t as (a, x) => u    name = a, name2 = x, kids {t, u}
  Em0,      // em0[P]{a. u | a. v}      name = a, annot = P, kids {u, v}
  Em1,      // em1[all a. P]{h. u | h. v}   name = h, annot = all a. P, kids {u, v}
  Hyp,      // hyp[h]                   name = h, annot = all a. A
  Wit,      // wit[h]                   name = h, annot = ex a. B
  Hypz,     // hypo[P]                  annot = P
  Efq,      // efq[P] : bot -> P        annot = P
  MpConst,  // mp[ex a. P]              annot = ex a. P
  True,     // tt
  Rec,      // rec(u, v, m)             kids {u, v}, ind = m
  Post,     // post[rule](u1..un)       rule, kids = args
};

struct ProofNode {
  ProofKind kind = ProofKind::Var;
  std::string name;
  std::string name2;
  int index = 0;
  Formula annot;
  IndTerm ind;
  std::vector<Proof> kids;
  std::string rule;
};

Proof mk_var(std::string x);
Proof mk_app(Proof t, Proof u);
Proof mk_iapp(Proof t, IndTerm m);
Proof mk_lam(std::string x, Formula annot, Proof body);
Proof mk_ilam(std::string a, Proof body);
Proof mk_pair(Proof t, Proof u);
Proof mk_proj(int i, Proof t);
Proof mk_inj(int i, Formula other, Proof t);
Proof mk_case(Proof t, std::string x, Proof u, std::string y, Proof v);
Proof mk_exintro(IndTerm m, Proof t, Formula exists);
Proof mk_exelim(Proof t, std::string a, std::string x, Proof u);
Proof mk_em0(Formula p, std::string a, Proof u, Proof v);
Proof mk_em1(Formula forall_p, std::string a, Proof u, Proof v);
Proof mk_hyp(std::string a, Formula forall_a);
Proof mk_wit(std::string a, Formula exists_b);
Proof mk_hypz(Formula p);
Proof mk_efq(Formula p);
Proof mk_mp(Formula exists_p);
Proof mk_true();
Proof mk_rec(Proof u, Proof v, IndTerm m);
Proof mk_post(std::string rule, std::vector<Proof> args);

// Same node with different children (kids.size() must match).
Proof with_kids(const Proof& t, std::vector<Proof> kids);

std::string_view kind_name(ProofKind k);

// Number of proof-term nodes (formulas and individual terms not counted).
std::size_t size(const Proof& t);

// ---------------------------------------------------------------------------
// Paths: child indices from the root.

using Path = std::vector<int>;
std::string show_path(const Path& p);
Proof subterm_at(const Proof& t, const Path& p);
Proof replace_at(const Proof& t, const Path& p, const Proof& replacement);

// ---------------------------------------------------------------------------
// Signature and context

struct Signature {
  std::set<std::string> constants;
  std::map<std::string, int> functions;
  std::map<std::string, int> predicates;
  // Paired complement symbols, registered in both directions.
  std::map<std::string, std::string> complements;
  // Arithmetic mode: terms built from 0, S and variables only.
  bool arithmetic = false;

  bool declared(const std::string& name) const;
  void add_constant(const std::string& c);
  void add_function(const std::string& f, int arity);
  void add_predicate(const std::string& p, int arity);
  void add_complement_pair(const std::string& p, const std::string& pc, int arity);
  std::optional<std::string> complement_of(const std::string& p) const;
};

// P(t..)^perp for atoms over a signature with complements.
std::optional<Formula> complement_atom(const Signature& sig, const Formula& atom);

enum class EntryKind { ProofVar, HypVar };

struct ContextEntry {
  EntryKind kind;
  std::string name;
  Formula formula;
};

// Ordered context; names are pairwise distinct across both kinds.
class Context {
 public:
  Context() = default;
  explicit Context(std::vector<ContextEntry> entries);

  // Throws std::invalid_argument on a duplicate name.
  void add(EntryKind kind, std::string name, Formula formula);
  const std::vector<ContextEntry>& entries() const { return entries_; }
  const ContextEntry* find(const std::string& name) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<ContextEntry> entries_;
};

// ---------------------------------------------------------------------------
// Free variables and fresh names

std::set<std::string> free_ind_vars(const IndTerm& t);
std::set<std::string> free_ind_vars(const Formula& f);
std::set<std::string> free_ind_vars(const Proof& t);
std::set<std::string> free_proof_vars(const Proof& t);
std::set<std::string> free_hyp_vars(const Proof& t);
bool is_closed(const IndTerm& t);
bool is_closed(const Formula& f);

// Every name (free or bound, any namespace) mentioned in the term.
std::set<std::string> all_names(const Proof& t);
std::set<std::string> all_names(const Formula& f);

// base, base1, base2, ... first one not in avoid.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// ---------------------------------------------------------------------------
// Substitution (capture-avoiding)

IndTerm subst_ind(const IndTerm& target, const IndTerm& m, const std::string& var);
Formula subst_ind(const Formula& target, const IndTerm& m, const std::string& var);
Proof subst_ind(const Proof& target, const IndTerm& m, const std::string& var);

// target[u/x] for a proof variable x.
Proof subst_proof(const Proof& target, const Proof& u, const std::string& x);

// Renames the hypothesis variable `from` to `to` at its free occurrences.
Proof rename_hyp(const Proof& t, const std::string& from, const std::string& to);

// Body of a quantifier instantiated at m.
Formula instantiate(const Formula& quantified, const IndTerm& m);

// ---------------------------------------------------------------------------
// Alpha-equivalence

bool alpha_equal(const IndTerm& a, const IndTerm& b);
bool alpha_equal(const Formula& a, const Formula& b);
bool alpha_equal(const Proof& a, const Proof& b);

// Canonical text with bound names replaced by positional names; two
// terms are alpha-equivalent iff their keys coincide.
std::string canonical_key(const Proof& t);
std::string canonical_key(const Formula& f);

// ---------------------------------------------------------------------------
// Classification and translation

struct Classification {
  bool propositional = false;
  bool negative = false;
  bool simply_universal = false;
  bool simply_existential = false;
};

Classification classify(const Formula& a);
bool is_propositional(const Formula& a);
bool is_negative(const Formula& a);
bool is_simply_universal(const Formula& a);
bool is_simply_existential(const Formula& a);
bool contains_implication(const Formula& a);

// Goedel-Gentzen negative translation.
Formula godel_gentzen(const Formula& a);

// ---------------------------------------------------------------------------
// Printing

std::string show(const IndTerm& t);
std::string show(const Formula& f);

// Hypothesis bindings visible to the printer, used to decide whether
// hyp[a] / wit[a] can be printed without their annotation.
struct PrintScope {
  const Signature* sig = nullptr;
  std::map<std::string, Formula> universal;   // a -> all x. A
  std::map<std::string, Formula> existential; // a -> ex x. B
};
PrintScope scope_of(const Context& ctx, const Signature* sig);
std::string show(const Proof& t, const PrintScope& scope = {});

// Expected annotation of wit[a] under em1[all x. P]: ex x. ~P, or
// ex x. P^perp in arithmetic mode.
std::optional<Formula> wit_annotation(const Formula& forall_p, const Signature* sig);

}  // namespace mpk

#endif  // MPK_SYNTAX_HPP
