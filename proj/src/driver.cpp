#include "mpk/driver.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "mpk/extract.hpp"
#include "mpk/parser.hpp"
#include "mpk/semantics.hpp"
#include "mpk/typecheck.hpp"

namespace mpk {

using nlohmann::json;

std::uint64_t default_fuel() {
  const char* s = std::getenv("MPK_FUEL");
  if (!s || !*s) return kDefaultFuel;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0') return kDefaultFuel;
  return v;
}

int FileReport::exit_code() const {
  if (status == "ok") return kExitOk;
  if (status == "parse-error") return kExitParse;
  if (status == "fuel-exhausted") return kExitFuel;
  return kExitFailure;
}

void RunReport::tally() {
  passed = failed = 0;
  steps = 0;
  for (const auto& f : files) {
    (f.ok() ? passed : failed) += 1;
    steps += f.steps;
  }
}

json to_json(const FileReport& f) {
  return json{{"path", f.path},         {"system", f.system},     {"status", f.status},
              {"check", f.check},       {"error", f.error},       {"steps", f.steps},
              {"normal_form", f.normal_form}, {"witnesses", f.witnesses}, {"extracted", f.extracted}};
}

json to_json(const RunReport& r) {
  json files = json::array();
  for (const auto& f : r.files) files.push_back(to_json(f));
  return json{{"files", files},
              {"total", r.files.size()},
              {"passed", r.passed},
              {"failed", r.failed},
              {"steps", r.steps}};
}

RunReport run_report_from_json(const json& j) {
  RunReport r;
  for (const auto& f : j.at("files")) {
    FileReport x;
    x.path = f.at("path").get<std::string>();
    x.system = f.at("system").get<std::string>();
    x.status = f.at("status").get<std::string>();
    x.check = f.at("check").get<std::string>();
    x.error = f.at("error").get<std::string>();
    x.steps = f.at("steps").get<std::uint64_t>();
    x.normal_form = f.at("normal_form").get<std::string>();
    x.witnesses = f.at("witnesses").get<std::vector<std::string>>();
    x.extracted = f.at("extracted").get<bool>();
    r.files.push_back(std::move(x));
  }
  r.passed = j.at("passed").get<std::size_t>();
  r.failed = j.at("failed").get<std::size_t>();
  r.steps = j.at("steps").get<std::uint64_t>();
  if (j.at("total").get<std::size_t>() != r.files.size())
    throw std::invalid_argument("total does not match the number of files");
  return r;
}

namespace {

struct Loaded {
  std::optional<ProofFile> file;
  FileReport report;
};

Loaded load(const std::string& path, const Options& o) {
  Loaded l;
  l.report.path = path;
  try {
    l.file = parse_proof_file(read_file(path), o.system);
    l.report.system = std::string(system_name(l.file->system));
  } catch (const ParseError& e) {
    l.report.status = "parse-error";
    l.report.error = path + ":" + e.what();
  } catch (const std::runtime_error& e) {
    l.report.status = "parse-error";
    l.report.error = e.what();
  }
  return l;
}

bool check_file(Loaded& l) {
  const ProofFile& f = *l.file;
  if (auto err = check(f.system, f.theory, f.ctx, f.proof, f.goal)) {
    l.report.status = "check-failed";
    l.report.check = err->describe();
    l.report.error = err->describe();
    return false;
  }
  return true;
}

bool extractable(const ProofFile& f) {
  return f.goal->kind == FormulaKind::Exists && is_closed(f.goal) && is_quasi_closed(f.proof);
}

void emit(const FileReport& r, const Options& o, std::ostream& out, std::ostream& err) {
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
    return;
  }
  if (!r.ok()) err << "error: " << r.error << "\n";
}

}  // namespace

int cmd_check(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(path, o);
  std::optional<TypeError> te;
  if (l.file) te = check(l.file->system, l.file->theory, l.file->ctx, l.file->proof, l.file->goal);
  if (te) {
    l.report.status = "check-failed";
    l.report.check = l.report.error = te->describe();
  }
  if (!o.json) {
    if (l.report.ok()) out << "ok: " << show(l.file->goal) << "\n";
    emit(l.report, o, out, err);
    return l.report.exit_code();
  }
  // {ok, error{code, path, message}}; a parse error has code ParseError
  json j{{"ok", l.report.ok()}, {"error", nullptr}};
  if (te)
    j["error"] = {{"code", std::string(code_name(te->code))},
                  {"path", show_path(te->path)},
                  {"rule", te->rule},
                  {"message", te->message}};
  else if (!l.file)
    j["error"] = {{"code", "ParseError"}, {"path", ""}, {"message", l.report.error}};
  j["system"] = l.report.system;
  if (l.file) j["goal"] = show(l.file->goal);
  out << j.dump(2) << "\n";
  return l.report.exit_code();
}

int cmd_normalize(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(path, o);
  if (!l.file || !check_file(l)) {
    emit(l.report, o, out, err);
    return l.report.exit_code();
  }
  const ProofFile& f = *l.file;
  NormalizeResult n = normalize(f.system, f.theory, f.proof, o.fuel);
  PrintScope scope = scope_of(f.ctx, &f.theory.sig);
  l.report.steps = n.trace.size();
  l.report.normal_form = std::string(kind_name(n.term->kind));
  if (!n.normal) {
    l.report.status = "fuel-exhausted";
    l.report.error = "no normal form within " + std::to_string(o.fuel) + " steps";
  }
  if (o.json) {
    json j = to_json(l.report);
    j["term"] = show(n.term, scope);
    if (o.trace) {
      json tr = json::array();
      for (const auto& s : n.trace)
        tr.push_back({{"rule", s.rule}, {"path", show_path(s.path)}, {"after", show(s.after, scope)}});
      j["trace"] = tr;
    }
    out << j.dump(2) << "\n";
    return l.report.exit_code();
  }
  if (o.trace)
    for (std::size_t i = 0; i < n.trace.size(); ++i)
      out << (i + 1) << " " << n.trace[i].rule << " " << show_path(n.trace[i].path) << " → "
          << show(n.trace[i].after, scope) << "\n";
  out << show(n.term, scope) << "\n";
  emit(l.report, o, out, err);
  return l.report.exit_code();
}

int cmd_extract(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  Loaded l = load(path, o);
  if (!l.file) {
    emit(l.report, o, out, err);
    return l.report.exit_code();
  }
  const ProofFile& f = *l.file;
  Extraction x = extract_witnesses(f.system, f.theory, f.ctx, f.proof, f.goal, o.fuel);
  l.report.steps = x.norm.trace.size();
  if (x.norm.term) l.report.normal_form = std::string(kind_name(x.norm.term->kind));
  switch (x.status) {
    case ExtractStatus::Ok: break;
    case ExtractStatus::CheckFailed:
      l.report.status = "check-failed";
      l.report.check = x.message;
      break;
    case ExtractStatus::FuelExhausted: l.report.status = "fuel-exhausted"; break;
    default: l.report.status = "extract-failed"; break;
  }
  l.report.error = x.message;
  if (x.ok()) {
    l.report.extracted = true;
    for (const auto& w : x.witnesses) l.report.witnesses.push_back(show(w));
    Disjunction d = herbrand_disjunction(f.system, f.theory, f.ctx, *x.hnf, f.goal);
    if (d.recheck) {
      l.report.status = "extract-failed";
      l.report.error = "Herbrand disjunction does not re-check: " + d.recheck->describe();
    } else if (o.emit_disjunction) {
      std::ofstream file(*o.emit_disjunction);
      file << write_proof_file(f.system, f.theory, f.sig_text, f.ctx, d.formula, d.proof);
      if (!file) {
        l.report.status = "extract-failed";
        l.report.error = "cannot write " + *o.emit_disjunction;
      }
    }
  }
  if (!o.json)
    for (const auto& w : l.report.witnesses) out << w << "\n";
  emit(l.report, o, out, err);
  return l.report.exit_code();
}

int cmd_eval(const std::string& formula_path, const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.model) {
    err << "error: eval needs --model\n";
    return kExitFailure;
  }
  FormulaFile ff;
  ModelFile mf;
  try {
    ff = parse_formula_file(read_file(formula_path), o.system);
    mf = parse_model_file(read_file(*o.model), ff.theory.sig);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (auto bad = validate_model(mf.model, ff.theory.sig)) {
    err << "error: " << *bad << "\n";
    return kExitFailure;
  }
  try {
    bool v = eval_formula(mf.model, mf.assignment, ff.formula);
    if (o.json)
      out << json{{"formula", show(ff.formula)}, {"value", v}}.dump(2) << "\n";
    else
      out << (v ? "true" : "false") << "\n";
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

FileReport run_file(const std::string& path, const Options& o) {
  Loaded l = load(path, o);
  if (!l.file || !check_file(l)) return l.report;
  const ProofFile& f = *l.file;
  if (extractable(f)) {
    Extraction x = extract_witnesses(f.system, f.theory, f.ctx, f.proof, f.goal, o.fuel);
    l.report.steps = x.norm.trace.size();
    if (x.norm.term) l.report.normal_form = std::string(kind_name(x.norm.term->kind));
    if (!x.ok()) {
      l.report.status = x.status == ExtractStatus::FuelExhausted ? "fuel-exhausted" : "extract-failed";
      l.report.error = x.message;
      return l.report;
    }
    l.report.extracted = true;
    for (const auto& w : x.witnesses) l.report.witnesses.push_back(show(w));
    Disjunction d = herbrand_disjunction(f.system, f.theory, f.ctx, *x.hnf, f.goal);
    if (d.recheck) {
      l.report.status = "extract-failed";
      l.report.error = "Herbrand disjunction does not re-check: " + d.recheck->describe();
    }
    return l.report;
  }
  NormalizeResult n = normalize(f.system, f.theory, f.proof, o.fuel);
  l.report.steps = n.trace.size();
  l.report.normal_form = std::string(kind_name(n.term->kind));
  if (!n.normal) {
    l.report.status = "fuel-exhausted";
    l.report.error = "no normal form within " + std::to_string(o.fuel) + " steps";
    return l.report;
  }
  // Closed disjunctions outside the parallel system must end in an injection.
  bool closed = free_proof_vars(f.proof).empty() && free_hyp_vars(f.proof).empty() && f.ctx.empty();
  if (closed && f.goal->kind == FormulaKind::Or && f.system != System::IL_EM1 &&
      n.term->kind != ProofKind::Inj) {
    l.report.status = "extract-failed";
    l.report.error = "closed proof of a disjunction normalized to " + l.report.normal_form;
  }
  return l.report;
}

RunReport cmd_corpus(const std::string& dir, const Options& o) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  std::error_code ec;
  for (const auto& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file() && e.path().extension() == ".pf") paths.push_back(e.path().string());
  std::sort(paths.begin(), paths.end());
  RunReport r;
  if (ec) {
    FileReport f;
    f.path = dir;
    f.status = "parse-error";
    f.error = "cannot read directory " + dir + ": " + ec.message();
    r.files.push_back(f);
  }
  for (const auto& p : paths) {
    // The file's own system line decides, whatever --system says.
    Options per = o;
    per.system.reset();
    r.files.push_back(run_file(p, per));
  }
  r.tally();
  return r;
}

int print_corpus(const RunReport& r, const Options& o, std::ostream& out) {
  if (o.json) {
    out << to_json(r).dump(2) << "\n";
  } else {
    for (const auto& f : r.files) {
      out << (f.ok() ? "PASS " : "FAIL ") << f.path << " [" << f.system << "] steps=" << f.steps;
      if (!f.normal_form.empty()) out << " nf=" << f.normal_form;
      if (f.extracted) {
        out << " witnesses=";
        for (std::size_t i = 0; i < f.witnesses.size(); ++i) out << (i ? "," : "") << f.witnesses[i];
      }
      if (!f.ok()) out << " : " << f.error;
      out << "\n";
    }
    out << r.passed << "/" << r.files.size() << " passed, " << r.steps << " steps\n";
  }
  return r.failed == 0 && !r.files.empty() ? kExitOk : kExitFailure;
}

}  // namespace mpk
