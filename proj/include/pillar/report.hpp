#pragma once

#include <string>
#include <vector>

#include "pillar/automorphism.hpp"

namespace pillar {

struct Mismatch {
  std::string generator;  // generator name, or a step label for chain replays
  Word lhs;
  Word rhs;
};

struct CaseResult {
  std::string name;
  std::vector<Mismatch> mismatches;

  bool holds() const { return mismatches.empty(); }
};

struct VerificationReport {
  int genus = 0;
  std::vector<CaseResult> cases;

  bool holds() const {
    for (const auto& c : cases)
      if (!c.holds()) return false;
    return true;
  }
};

// Per-generator comparison of two morphisms with the same domain and codomain.
CaseResult compare_morphisms(std::string name, const FreeMorphism& lhs,
                             const FreeMorphism& rhs);

// Appends the cases of other to report (genus must agree).
void merge_into(VerificationReport& report, VerificationReport other);

}  // namespace pillar
