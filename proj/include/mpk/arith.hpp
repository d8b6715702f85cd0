#ifndef MPK_ARITH_HPP
#define MPK_ARITH_HPP

// Primitive recursive functions and relations behind the atoms of the
// arithmetic kernel, plus the fixed list of Post rules.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mpk/syntax.hpp"
#include "mpk/type_error.hpp"

namespace mpk::arith {

struct PRNode;
using PRFun = std::shared_ptr<const PRNode>;

enum class PRKind { Zero, Succ, Proj, Comp, PrimRec };

struct PRNode {
  PRKind kind;
  int arity = 0;
  int index = 0;              // Proj: 1-based
  std::vector<PRFun> parts;   // Comp: {f, g1..gk}; PrimRec: {base, step}
  std::string ref;            // name this node was referenced by, if any
};

// All factories throw std::invalid_argument on inconsistent arities.
PRFun pr_zero(int arity);
PRFun pr_succ();
PRFun pr_proj(int i, int n);
PRFun pr_comp(PRFun f, std::vector<PRFun> gs);
// h(0, x..) = base(x..);  h(y+1, x..) = step(y, h(y, x..), x..)
PRFun pr_rec(PRFun base, PRFun step);
// Same function, printed by name.
PRFun pr_named(const PRFun& f, std::string name);

using Num = std::uint64_t;

// Throws std::invalid_argument if args.size() != f->arity.
Num eval_pr(const PRFun& f, const std::vector<Num>& args);

// Combinator syntax, using names for referenced definitions.
std::string show(const PRFun& f);

struct PRRel {
  std::string name;
  PRFun fun;
  bool complement = false;  // holds iff fun != 0
  std::string partner;      // the complement symbol
};

class Registry {
 public:
  // add, mul, pred, sub, monus, absdiff, two, absdiff2, one0 and the
  // relations Eq~Neq, Le~Gt, False0~True0, AbsDiff2~NotAbsDiff2.
  static Registry prelude();

  void define_fun(const std::string& name, PRFun f);
  // Registers name and complement together; both arities = fun arity.
  void define_rel(const std::string& name, const std::string& fun_name,
                  const std::string& complement);

  const PRFun* fun(const std::string& name) const;
  const PRRel* rel(const std::string& name) const;

  const std::vector<std::string>& fun_order() const { return fun_order_; }
  const std::vector<std::string>& rel_order() const { return rel_order_; }
  const std::map<std::string, PRRel>& relations() const { return rels_; }

  // Registers every relation pair in the signature.
  void export_to(Signature& sig) const;

 private:
  std::map<std::string, PRFun> funs_;
  std::map<std::string, PRRel> rels_;
  std::vector<std::string> fun_order_;
  std::vector<std::string> rel_order_;  // direct symbols only
  std::map<std::string, std::string> rel_fun_name_;

 public:
  const std::string& rel_fun_name(const std::string& rel) const { return rel_fun_name_.at(rel); }
  // Body of a definition in combinator syntax.
  std::string definition(const std::string& fun_name) const;
};

// Truth of a closed atom.  Throws std::invalid_argument on an
// unregistered predicate or a non-closed / non-numeral argument.
bool eval_atomic(const Registry& reg, const Formula& atom);

// Post rules:
//   p1 true    []                     |- P         P closed and true
//   p2 refl    []                     |- Eq(m,m)
//   p3 sym     [Eq(m,n)]              |- Eq(n,m)
//   p4 trans   [Eq(m,n), Eq(n,k)]     |- Eq(m,k)
//   p5 succ    [Eq(m,n)]              |- Eq(S m, S n)
//      inj     [Eq(S m, S n)]         |- Eq(m,n)
//   p6 peano   [Eq(S m, 0)]           |- any atom
//   p7 clash   [P(t..), P^perp(t..)]  |- any atom
// Aliases p1..p7 are accepted; p5 means succ.
std::optional<TypeError> post_check(const Registry& reg, const std::string& rule,
                                    const std::vector<Formula>& premises,
                                    const Formula& conclusion);

// Canonical rule name, or nullopt for an unknown rule.
std::optional<std::string> canonical_rule(const std::string& rule);

inline constexpr const char* kEq = "Eq";
inline constexpr const char* kFalse = "False0";

}  // namespace mpk::arith

#endif  // MPK_ARITH_HPP
