#ifndef MPK_TESTS_GEN_HPP
#define MPK_TESTS_GEN_HPP

// Type-directed random generation of small well-typed proof terms, with
// redexes sprinkled in so that reduction has something to do.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mpk/syntax.hpp"
#include "mpk/theory.hpp"

namespace gen {

struct Sample {
  mpk::System sys;
  const mpk::Theory* th;
  mpk::Context ctx;
  mpk::Formula goal;
  mpk::Proof term;
};

// const c, d; pred P/1, Q/0, R/0.
const mpk::Theory& il_theory();
// The prelude.
const mpk::Theory& ha_theory();
const mpk::Theory& theory_for(mpk::System sys);

class Generator {
 public:
  Generator(mpk::System sys, std::uint32_t seed);
  // A checked term of at most max_nodes nodes, or nullopt after a
  // failed attempt.  `hyps` are extra hypothesis entries (all x. P are
  // used through hyp, ex x. B through wit); `goal` overrides the random
  // choice.
  std::optional<Sample> next(std::size_t max_nodes, const std::vector<mpk::ContextEntry>& hyps = {},
                             mpk::Formula goal = nullptr);

 private:
  enum class Tag { Proof, Em0, Hyp, Wit };
  struct Entry {
    Tag tag;
    std::string name;
    mpk::Formula formula;
  };
  using Env = std::vector<Entry>;

  mpk::System sys_;
  const mpk::Theory& th_;
  std::mt19937 rng_;
  int counter_ = 0;
  std::vector<std::string> eigen_;  // individual variables in scope

  int pick(int n);
  bool coin(int percent);
  std::string fresh(const char* base);
  std::vector<mpk::IndTerm> pool() const;
  mpk::Formula falsity() const;

  mpk::Proof go(const Env& env, const mpk::Formula& goal, int budget);
  mpk::Proof leaf(const Env& env, const mpk::Formula& goal);
  mpk::Proof intro(const Env& env, const mpk::Formula& goal, int budget);
  mpk::Proof elim(const Env& env, const mpk::Formula& goal, int budget);
  mpk::Proof redex(const Env& env, const mpk::Formula& goal, int budget);
  mpk::Proof classical(const Env& env, const mpk::Formula& goal, int budget);
  mpk::Proof arith(const Env& env, const mpk::Formula& goal, int budget);
};

// A term typed under a : all x. P (hyp side) or a : W (wit side, W the
// witness formula of all x. P), and the individual m to substitute.
struct ExcInstance {
  Sample base;  // base.ctx contains the entry for a
  std::string a;
  mpk::Formula forall_p;
  bool wit_side;
  mpk::IndTerm m;
};

std::vector<ExcInstance> exc_instances(std::size_t count, std::uint32_t seed);

// Re-checks the substituted term in the shifted context:
//   wit side   Gamma, ~P[m/x] |- v[a := m] : C  (no entry needed in HA, where
//              the replacement is tt at a true atom)
//   hyp side   Gamma, a : all x. P, P[m/x] |- u[a := m] : C          (all_reading false)
//              Gamma, P[m'/x] for every argument m' |- u[a := *] : C  (all_reading true)
// Returns nullopt on success, "skip" when the instance does not fit the
// reading, else a description of the failure.
std::optional<std::string> check_exc_instance(const ExcInstance& x, bool all_reading);

// count distinct checked samples (up to alpha, per system), at most
// max_nodes nodes each, spread over the three systems.
std::vector<Sample> samples(std::size_t count, std::size_t max_nodes, std::uint32_t seed);

}  // namespace gen

#endif  // MPK_TESTS_GEN_HPP
