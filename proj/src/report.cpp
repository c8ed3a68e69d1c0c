#include "pillar/report.hpp"

namespace pillar {

CaseResult compare_morphisms(std::string name, const FreeMorphism& lhs,
                             const FreeMorphism& rhs) {
  CaseResult result{std::move(name), {}};
  for (Symbol s : differing_generators(lhs, rhs))
    result.mismatches.push_back({symbol_name(s), lhs.image(s), rhs.image(s)});
  return result;
}

void merge_into(VerificationReport& report, VerificationReport other) {
  if (report.genus != other.genus)
    throw Error(ErrorCode::invalid_argument, "cannot merge reports of different genus");
  for (auto& c : other.cases) report.cases.push_back(std::move(c));
}

}  // namespace pillar
