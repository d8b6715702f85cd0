#include "mpk/theory.hpp"

namespace mpk {

std::string_view system_name(System s) {
  switch (s) {
    case System::IL_HMP: return "il-hmp";
    case System::IL_EM1: return "il-em1";
    case System::HA_EM1: return "ha-em1";
  }
  return "?";
}

std::optional<System> parse_system(std::string_view s) {
  if (s == "il-hmp" || s == "IL_HMP") return System::IL_HMP;
  if (s == "il-em1" || s == "IL_EM1") return System::IL_EM1;
  if (s == "ha-em1" || s == "HA_EM1") return System::HA_EM1;
  return std::nullopt;
}

Theory il_theory() { return Theory{}; }

Theory ha_theory() {
  Theory th;
  th.sig.arithmetic = true;
  th.arith = arith::Registry::prelude();
  th.arith.export_to(th.sig);
  return th;
}

Formula falsity(const Theory& th) {
  if (th.arithmetic()) return mk_atom(arith::kFalse);
  return mk_bottom();
}

Formula negate(const Theory& th, Formula a) { return mk_imp(std::move(a), falsity(th)); }

}  // namespace mpk
