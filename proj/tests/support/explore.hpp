#ifndef MPK_TESTS_EXPLORE_HPP
#define MPK_TESTS_EXPLORE_HPP

// Exhaustive exploration of every reduction order from a term.

#include <cstddef>
#include <set>
#include <string>

#include "mpk/reduce.hpp"

namespace explore {

struct Result {
  bool complete = true;           // false: state or depth budget hit, or a cycle
  bool cycle = false;
  std::size_t states = 0;         // distinct terms up to alpha
  std::size_t longest = 0;        // longest reduction path
  std::set<std::string> normals;  // canonical keys of reachable normal forms
};

Result run(mpk::System sys, const mpk::Theory& th, const mpk::Proof& t,
           std::size_t max_depth = 1000, std::size_t max_states = 100000);

}  // namespace explore

#endif  // MPK_TESTS_EXPLORE_HPP
