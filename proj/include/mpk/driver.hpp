#ifndef MPK_DRIVER_HPP
#define MPK_DRIVER_HPP

// Subcommands behind the mpk tool, kept out of main() so tests can call
// them on in-memory streams.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mpk/reduce.hpp"
#include "mpk/theory.hpp"

namespace mpk {

// Process exit codes.
enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitParse = 2, kExitFuel = 3 };

struct Options {
  std::optional<System> system;
  std::uint64_t fuel = kDefaultFuel;
  bool trace = false;
  bool json = false;
  std::optional<std::string> emit_disjunction;
  std::optional<std::string> model;
};

// MPK_FUEL if set and numeric, else kDefaultFuel.
std::uint64_t default_fuel();

struct FileReport {
  std::string path;
  std::string system;
  std::string status = "ok";  // ok | parse-error | check-failed | fuel-exhausted | extract-failed
  std::string check = "ok";   // "ok" or the type error
  std::string error;
  std::uint64_t steps = 0;
  std::string normal_form;    // kind of the normal form's root
  std::vector<std::string> witnesses;
  bool extracted = false;
  bool ok() const { return status == "ok"; }
  int exit_code() const;
};

struct RunReport {
  std::vector<FileReport> files;  // sorted by path
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::uint64_t steps = 0;
  void tally();
};

nlohmann::json to_json(const FileReport& f);
nlohmann::json to_json(const RunReport& r);
// Throws nlohmann::json::exception or std::invalid_argument on a
// document outside the schema.
RunReport run_report_from_json(const nlohmann::json& j);

int cmd_check(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
int cmd_normalize(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
int cmd_extract(const std::string& path, const Options& o, std::ostream& out, std::ostream& err);
int cmd_eval(const std::string& formula_path, const Options& o, std::ostream& out, std::ostream& err);

// check + normalize + extract on one file; the system comes from the
// file unless o.system is set.
FileReport run_file(const std::string& path, const Options& o);
// Every *.pf file under dir.
RunReport cmd_corpus(const std::string& dir, const Options& o);
int print_corpus(const RunReport& r, const Options& o, std::ostream& out);

}  // namespace mpk

#endif  // MPK_DRIVER_HPP
