#ifndef MPK_PARSER_HPP
#define MPK_PARSER_HPP

// Text front end: proof files, formula files and model files.
//
//   proof file    [system S;] [sig {..}] [ctx {..}] goal A; proof t;
//   formula file  [system S;] [sig {..}] formula A;
//   model file    model { domain a, b; const c = a; fun f = {(a) -> b, ..};
//                         pred P = {(a), b, ..}; assign x = a; }
//
// Comments run from // or # to the end of the line.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mpk/semantics.hpp"
#include "mpk/syntax.hpp"
#include "mpk/theory.hpp"

namespace mpk {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(int line, int column, const std::string& msg);
};

struct ProofFile {
  System system = System::IL_EM1;
  Theory theory;
  std::string sig_text;  // the sig block as written, for re-emission
  Context ctx;
  Formula goal;
  Proof proof;
};

// The system is taken from `forced` if given, else from the file's
// system line, else il-em1.
ProofFile parse_proof_file(std::string_view src, std::optional<System> forced = std::nullopt);

struct FormulaFile {
  System system = System::IL_EM1;
  Theory theory;
  Formula formula;
};
FormulaFile parse_formula_file(std::string_view src, std::optional<System> forced = std::nullopt);

struct ModelFile {
  Model model;
  Assignment assignment;
};
// Omitted domain: the signature's constants, or {e0} if there are none.
// Omitted constant interpretations default to the element of that name.
ModelFile parse_model_file(std::string_view src, const Signature& sig);

// Fragments, used by tests.
Formula parse_formula(std::string_view src, const Theory& th);
IndTerm parse_ind_term(std::string_view src, const Theory& th);
Proof parse_proof(std::string_view src, const Theory& th, const Context& ctx = {});

// A file that parse_proof_file reads back to the same system,
// signature, context, goal and (alpha-equal) proof.
std::string write_proof_file(System sys, const Theory& th, const std::string& sig_text,
                             const Context& ctx, const Formula& goal, const Proof& proof);

// Throws std::runtime_error if the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace mpk

#endif  // MPK_PARSER_HPP
