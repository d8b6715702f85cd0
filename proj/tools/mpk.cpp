// mpk: check, normalize and extract witnesses from proof-term files.

#include <iostream>

#include <CLI11.hpp>

#include "mpk/driver.hpp"

#ifndef MPK_CORPUS_DIR
#define MPK_CORPUS_DIR "corpus"
#endif

int main(int argc, char** argv) {
  using namespace mpk;
  CLI::App app{"proof-term kernel for IL+HMP, IL+EM1- and HA+EM1-"};
  app.require_subcommand(1);

  Options o;
  o.fuel = default_fuel();
  std::string system, file, model;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--system", system, "il-hmp, il-em1 or ha-em1 (default: the file's system line)");
    sub->add_option("--fuel", o.fuel, "maximum number of reduction steps (env MPK_FUEL)");
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* check = app.add_subcommand("check", "type-check a proof file");
  check->add_option("file", file)->required();
  add_common(check);

  auto* norm = app.add_subcommand("normalize", "normalize a proof file");
  norm->add_option("file", file)->required();
  norm->add_flag("--trace", o.trace, "print every step");
  add_common(norm);

  std::string emit;
  auto* extract = app.add_subcommand("extract", "normalize and print the witnesses");
  extract->add_option("file", file)->required();
  extract->add_option("--emit-disjunction", emit, "write the Herbrand disjunction proof here");
  add_common(extract);

  auto* eval = app.add_subcommand("eval", "evaluate a formula file in a finite model");
  eval->add_option("file", file)->required();
  eval->add_option("--model", model, "model file")->required();
  add_common(eval);

  std::string dir = MPK_CORPUS_DIR;
  auto* corpus = app.add_subcommand("corpus", "run every corpus file");
  corpus->add_option("dir", dir, "corpus directory");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  if (!system.empty()) {
    o.system = parse_system(system);
    if (!o.system) {
      std::cerr << "error: unknown system '" << system << "' (il-hmp, il-em1, ha-em1)\n";
      return kExitParse;
    }
  }
  if (!emit.empty()) o.emit_disjunction = emit;
  if (!model.empty()) o.model = model;

  if (check->parsed()) return cmd_check(file, o, std::cout, std::cerr);
  if (norm->parsed()) return cmd_normalize(file, o, std::cout, std::cerr);
  if (extract->parsed()) return cmd_extract(file, o, std::cout, std::cerr);
  if (eval->parsed()) return cmd_eval(file, o, std::cout, std::cerr);
  return print_corpus(cmd_corpus(dir, o), o, std::cout);
}
