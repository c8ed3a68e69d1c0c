#pragma once

#include <string>
#include <string_view>

#include "pillar/automorphism.hpp"
#include "pillar/report.hpp"

namespace pillar {

// {"basis": {"kind": "xy"|"yz"|"abstract", "genus_or_rank": n},
//  "images": {"<generator>": "<word text>", ...}}
// Keys are emitted in sorted order. Only endomorphisms can be exported.
std::string morphism_to_json(const FreeMorphism& f, int indent = 2);
FreeMorphism morphism_from_json(std::string_view text);

// {"genus": g, "cases": [{"name", "holds", "mismatches": [{"generator",
// "lhs", "rhs"}]}]}
std::string report_to_json(const VerificationReport& r, int indent = 2);
std::string report_to_text(const VerificationReport& r);

}  // namespace pillar
