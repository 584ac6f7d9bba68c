#pragma once

#include <map>
#include <string>
#include <vector>

#include "normcat/extreal.hpp"

namespace normcat {

enum class Verdict { Pass, Fail, Skipped };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "SKIPPED";
  }
}

/// Axiom tags the auditors can rule on. MCFull is diagnostic only: the
/// triangle axioms deliberately stop short of it, so its failure never
/// fails an audit.
enum class Tag {
  CatLaws,
  MC1,
  MC2,
  MC3,
  MCFull,
  K1,
  K2,
  N1,
  N2,
  N3,
  Q1,
  Q2,
  FunctorLaws,
  Contraction,
  NonExpansive,
};

inline const char* to_string(Tag t) {
  switch (t) {
    case Tag::CatLaws: return "CAT-LAWS";
    case Tag::MC1: return "MC1";
    case Tag::MC2: return "MC2";
    case Tag::MC3: return "MC3";
    case Tag::MCFull: return "MCFULL";
    case Tag::K1: return "K1";
    case Tag::K2: return "K2";
    case Tag::N1: return "N1";
    case Tag::N2: return "N2";
    case Tag::N3: return "N3";
    case Tag::Q1: return "Q1";
    case Tag::Q2: return "Q2";
    case Tag::FunctorLaws: return "FUNCTOR-LAWS";
    case Tag::Contraction: return "CONTRACTION";
    default: return "NONEXPANSIVE";
  }
}

/// Witness of a violated inequality: the participating arrows/objects and
/// the numeric values on both sides (lhs <= rhs was expected). `values`
/// carries the individual norms that entered the inequality, by name.
struct Counterexample {
  std::string witness;
  ExtReal lhs;
  ExtReal rhs;
  std::vector<std::pair<std::string, ExtReal>> values;
  bool delta_warned = false;  // an inf - inf showed up in a report delta
};

struct TagResult {
  Verdict verdict = Verdict::Skipped;
  std::vector<Counterexample> counterexamples;
  std::string note;
};

struct AuditReport {
  std::map<Tag, TagResult> results;
  double tolerance = 0.0;
  std::vector<std::string> warnings;

  static constexpr std::size_t kMaxCounterexamples = 8;

  TagResult& at(Tag t) { return results[t]; }
  bool has(Tag t) const { return results.count(t) != 0; }
  Verdict verdict(Tag t) const {
    auto it = results.find(t);
    return it == results.end() ? Verdict::Skipped : it->second.verdict;
  }

  void record_failure(Tag t, Counterexample ce) {
    auto& r = results[t];
    r.verdict = Verdict::Fail;
    if (r.counterexamples.size() < kMaxCounterexamples) r.counterexamples.push_back(std::move(ce));
  }

  /// Overall outcome. MCFull is excluded by design; Skipped does not fail.
  bool passed() const {
    for (const auto& [tag, res] : results)
      if (tag != Tag::MCFull && res.verdict == Verdict::Fail) return false;
    return true;
  }
};

}  // namespace normcat
