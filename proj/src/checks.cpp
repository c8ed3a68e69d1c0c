#include "pillar/checks.hpp"

#include "pillar/braid.hpp"
#include "pillar/mcg.hpp"

namespace pillar {

namespace {

std::vector<TwistSymbol> all_twists(int genus) {
  std::vector<TwistSymbol> out;
  for (TwistKind k : {TwistKind::a, TwistKind::b, TwistKind::w}) {
    int top = k == TwistKind::w ? genus - 1 : genus;
    for (int i = 1; i <= top; ++i) out.push_back({k, i, +1});
  }
  return out;
}

// A one-entry case recording "lhs should equal rhs".
CaseResult word_case(std::string name, const std::string& label, const Word& lhs,
                     const Word& rhs) {
  CaseResult c{std::move(name), {}};
  if (lhs != rhs) c.mismatches.push_back({label, lhs, rhs});
  return c;
}

CaseResult identity_case(std::string name, const FreeMorphism& f) {
  return compare_morphisms(std::move(name), f, FreeMorphism::identity(f.domain()));
}

// Both composites of f and h, compared against the identity.
CaseResult inverse_pair_case(std::string name, const FreeMorphism& f, const FreeMorphism& h) {
  CaseResult c = identity_case(name, compose(f, h));
  CaseResult d = identity_case(name, compose(h, f));
  c.mismatches.insert(c.mismatches.end(), d.mismatches.begin(), d.mismatches.end());
  return c;
}

}  // namespace

VerificationReport relator_invariance_report(int genus) {
  VerificationReport report{genus, {}};
  const Word r = fundamental_relator(genus);
  for (TwistSymbol s : all_twists(genus)) {
    for (int sign : {+1, -1}) {
      s.sign = sign;
      report.cases.push_back(word_case(twist_symbol_name(s) + " fixes R", "R",
                                       apply(dehn_twist_action(s, genus), r), r));
    }
  }
  if (genus >= 2)
    for (int j = 0; j < genus; ++j)
      report.cases.push_back(word_case("sigma" + std::to_string(j) + " fixes R", "R",
                                       apply(pillar_switching_action(j, genus), r), r));
  return report;
}

VerificationReport inverse_certification_report(int genus) {
  VerificationReport report{genus, {}};
  for (TwistSymbol s : all_twists(genus))
    report.cases.push_back(inverse_pair_case(twist_symbol_name(s) + " inverse pair",
                                             dehn_twist_action(s, genus),
                                             dehn_twist_action({s.kind, s.index, -1}, genus)));
  if (genus >= 2)
    for (int j = 0; j < genus; ++j)
      report.cases.push_back(inverse_pair_case(
          "sigma" + std::to_string(j) + " inverse pair", pillar_switching_action(j, genus),
          evaluate_twist_word(inverse(pillar_switching_twist_word(j, genus)))));
  return report;
}

VerificationReport artin_restriction_report(int genus) {
  VerificationReport report{genus, {}};
  for (int i = 1; i <= genus - 1; ++i) {
    const std::string tag = "sigma" + std::to_string(i);
    FreeMorphism conj = conjugate_to_yz(pillar_switching_action(i, genus));
    report.cases.push_back(
        compare_morphisms(tag + " {y,z} conjugate matches native formula", conj,
                          pillar_switching_yz(i, genus)));

    CaseResult restriction{tag + " restricted to z subgroup is Artin beta" + std::to_string(i),
                           {}};
    try {
      FreeMorphism psi_yz =
          conjugate_to_yz(psi_action(BraidWord(genus, {{i, +1}}), genus));
      FreeMorphism restricted = restrict_to_z(psi_yz);
      FreeMorphism artin = artin_action(BraidWord(genus, {{i, +1}}));
      restriction = compare_morphisms(restriction.name, restricted, artin);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::not_z_stable) throw;
      restriction.mismatches.push_back(
          {e.what(), Word(Basis::abstract(genus)), Word(Basis::abstract(genus))});
    }
    report.cases.push_back(std::move(restriction));
  }
  return report;
}

VerificationReport yz_roundtrip_report(int genus, std::uint64_t seed, std::size_t samples) {
  VerificationReport report{genus, {}};
  FreeMorphism fwd = xy_to_yz(genus);
  FreeMorphism back = yz_to_xy(genus);
  report.cases.push_back(identity_case("from_yz . to_yz = id on generators", compose(back, fwd)));
  report.cases.push_back(identity_case("to_yz . from_yz = id on generators", compose(fwd, back)));

  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(genus));
  std::uniform_int_distribution<std::size_t> len(0, 40);
  const Basis xy = Basis::xy(genus), yz = Basis::yz(genus);
  CaseResult xy_trip{"random XY words round-trip through {y,z}", {}};
  CaseResult yz_trip{"random YZ words round-trip through {x,y}", {}};
  for (std::size_t n = 0; n < samples; ++n) {
    Word w = random_word(xy, len(rng), rng);
    Word back_w = from_yz(to_yz(w));
    if (back_w != w) xy_trip.mismatches.push_back({format_word(w), back_w, w});
    Word v = random_word(yz, len(rng), rng);
    Word back_v = to_yz(from_yz(v));
    if (back_v != v) yz_trip.mismatches.push_back({format_word(v), back_v, v});
  }
  report.cases.push_back(std::move(xy_trip));
  report.cases.push_back(std::move(yz_trip));
  return report;
}

}  // namespace pillar
