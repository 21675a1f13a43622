#ifndef GRADMULT_REPORT_HPP
#define GRADMULT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "gradmult/rational.hpp"

namespace gradmult {

enum class Verdict { pass, fail, evidence_only };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    default:
      return "evidence-only";
  }
}

struct CheckEntry {
  std::string label;
  Rat lhs, rhs;
  bool ok = true;
};

/// Structured result of a theorem or axiom check. A pass in exact mode is an
/// exact rational identity/inequality; evidence-only marks horizon-bounded or
/// sequence-mode conclusions.
struct CheckReport {
  std::string name;
  std::string instance;
  bool exact_mode = true;
  Verdict verdict = Verdict::pass;
  std::vector<CheckEntry> entries;
  std::vector<std::string> witnesses;        // failure witnesses
  std::map<std::string, std::string> notes;  // horizon stamps, flags

  void add(std::string label, Rat lhs, Rat rhs, bool ok) {
    if (!ok) witnesses.push_back(label);
    entries.push_back({std::move(label), std::move(lhs), std::move(rhs), ok});
  }

  /// pass/fail from the entries; evidence-only when not in exact mode.
  void finish() {
    bool all_ok = true;
    for (const auto& e : entries) all_ok = all_ok && e.ok;
    verdict = !all_ok ? Verdict::fail : (exact_mode ? Verdict::pass : Verdict::evidence_only);
  }

  bool passed() const { return verdict != Verdict::fail; }
};

}  // namespace gradmult

#endif
