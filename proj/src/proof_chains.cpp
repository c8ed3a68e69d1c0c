// Published chains of twist actions on the surface group, transcribed word
// for word. Each step names the twist applied to the previous word and lists
// every displayed form of the result (a raw substitution followed by its
// simplification when both are shown). z<k> abbreviates
// x_k^-1 y_{k+1} x_{k+1} y_{k+1}^-1. Case 2 is parametrized by i, case 3 by g.

#include <string>
#include <string_view>
#include <vector>

#include "pillar/mcg.hpp"

namespace pillar {

namespace {

struct ChainStep {
  std::string_view twist;
  std::vector<std::string_view> forms;
};

struct ProofChain {
  int sigma_case;  // 1: sigma_0, 2: sigma_{i-1}, 3: sigma_{g-1}
  std::string_view start;
  std::vector<ChainStep> steps;
};

const std::vector<ProofChain>& chains() {
  static const std::vector<ProofChain> table = {
      // sigma_0 = a2^-1 w1 a1 b1 w1 a1 b1
      {1, "x1",
       {{"b1", {"x1 y1"}},
        {"a1", {"x1 y1 x1^-1"}},
        {"w1", {"z1^-1 y2 x2 y2^-1 y1 z1 y2 x2^-1 y2^-1 z1", "z1^-1 y2 x2 y2^-1 y1 x1^-1 z1"}},
        {"b1", {"z1^-1 y1 y2 x2 y2^-1 x1^-1 y1^-1 z1"}},
        {"a1", {"z1^-1 y1 z1 y1^-1 z1"}},
        {"w1", {"z1^-1 y1 z1 y1^-1 z1"}},
        {"a2^-1", {"z1^-1 y1 z1 y1^-1 z1"}}}},
      {1, "y1",
       {{"b1", {"y1"}},
        {"a1", {"y1 x1^-1"}},
        {"w1", {"y1 z1 y2 x2^-1 y2^-1 z1"}},
        {"b1", {"z1 y2 x2^-1 y2^-1 y1^-1 z1"}},
        {"a1", {"y1^-1 z1"}},
        {"w1", {"z1^-1 y1^-1 z1"}},
        {"a2^-1", {"z1^-1 y1^-1 z1"}}}},
      {1, "y2",
       {{"b1", {"y2"}},
        {"a1", {"y2"}},
        {"w1", {"z1^-1 y2"}},
        {"b1", {"z1^-1 y1 y2"}},
        {"a1", {"z1^-1 y1 x1^-1 y2"}},
        {"w1", {"z1^-1 y1 z1 y2 x2^-1 y2^-1 z1 z1^-1 y2", "z1^-1 y1 z1 y2 x2^-1"}},
        {"a2^-1", {"z1^-1 y1 z1 y2 x2 x2^-1", "z1^-1 y1 z1 y2"}}}},
      {1, "z1",
       {{"b1", {"y1^-1 z1"}},
        {"a1", {"x1 y1^-1 z1"}},
        {"w1", {"z1^-1 y2 x2 y2^-1 z1^-1 y1^-1 z1"}},
        {"b1",
         {"z1^-1 y1 y2 x2 y2^-1 z1^-1 y1 y1^-1 y1^-1 z1",
          "z1^-1 y1 y2 x2 y2^-1 z1^-1 y1^-1 z1"}},
        {"a1", {"z1^-1 y1 x1^-1 y2 x2 y2^-1 z1^-1 x1 y1^-1 z1"}},
        {"w1",
         {"z1^-1 y1 z1 y2 x2^-1 y2^-1 z1 z1^-1 y2 x2 y2^-1 z1 z1^-1 z1^-1 y2 x2 y2^-1 z1^-1 "
          "y1^-1 z1",
          "z1^-1 y1 y2 x2 y2^-1 z1^-1 y1^-1 z1"}},
        {"a2^-1", {"z1^-1 y1 x1 y1^-1 z1"}}}},

      // sigma_{i-1} = a{i+1}^-1 a{i} b{i} w{i} w{i-1} a{i-1}^-1 b{i} a{i}
      {2, "x{i-1}",
       {{"a{i}", {"x{i-1}"}},
        {"b{i}", {"x{i-1}"}},
        {"a{i-1}^-1", {"x{i-1}"}},
        {"w{i-1}", {"z{i-1}^-1 y{i} x{i} y{i}^-1"}},
        {"w{i}",
         {"z{i-1}^-1 y{i} z{i} z{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1",
          "z{i-1}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1"}},
        {"b{i}",
         {"y{i}^-1 z{i-1}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i} y{i}^-1",
          "y{i}^-1 z{i-1}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1"}},
        {"a{i}",
         {"x{i} y{i}^-1 z{i-1}^-1 y{i} x{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1",
          "y{i}^-1 x{i-1} y{i}"}},
        {"a{i+1}^-1", {"y{i}^-1 x{i-1} y{i}"}}}},
      {2, "x{i}",
       {{"a{i}", {"x{i}"}},
        {"b{i}", {"x{i} y{i}"}},
        {"a{i-1}^-1", {"x{i} y{i}"}},
        {"w{i-1}", {"x{i} z{i-1}^-1 y{i}"}},
        {"w{i}", {"z{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i-1}^-1 y{i} z{i}"}},
        {"b{i}",
         {"z{i}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 y{i}^-1 z{i-1}^-1 y{i} y{i}^-1 z{i}",
          "z{i}^-1 y{i} y{i+1} x{i+1} y{i+1}^-1 y{i}^-1 z{i-1}^-1 z{i}"}},
        {"a{i}",
         {"z{i}^-1 y{i} x{i}^-1 y{i+1} x{i+1} y{i+1}^-1 x{i} y{i}^-1 z{i-1}^-1 z{i}",
          "z{i}^-1 y{i} z{i} y{i}^-1 x{i-1} z{i}"}},
        {"a{i+1}^-1", {"z{i}^-1 y{i} z{i} y{i}^-1 x{i-1} z{i}"}}}},
      {2, "y{i-1}",
       {{"a{i}", {"y{i-1}"}},
        {"b{i}", {"y{i-1}"}},
        {"a{i-1}^-1", {"y{i-1} x{i-1}"}},
        {"w{i-1}", {"y{i-1} z{i-1} z{i-1}^-1 y{i} x{i} y{i}^-1", "y{i-1} y{i} x{i} y{i}^-1"}},
        {"w{i}",
         {"y{i-1} y{i} z{i} z{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1",
          "y{i-1} y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i}^-1"}},
        {"b{i}",
         {"y{i-1} y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1 y{i} y{i}^-1",
          "y{i-1} y{i} y{i+1} x{i+1} y{i+1}^-1 z{i}^-1"}},
        {"a{i}", {"y{i-1} y{i} x{i}^-1 y{i+1} x{i+1} y{i+1}^-1 z{i}^-1", "y{i-1} y{i}"}},
        {"a{i+1}^-1", {"y{i-1} y{i}"}}}},
      {2, "y{i}",
       {{"a{i}", {"y{i} x{i}^-1"}},
        {"b{i}", {"y{i} y{i}^-1 x{i}^-1", "x{i}^-1"}},
        {"a{i-1}^-1", {"x{i}^-1"}},
        {"w{i-1}", {"x{i}^-1"}},
        {"w{i}", {"y{i+1} x{i+1}^-1 y{i+1}^-1 z{i}"}},
        {"b{i}", {"y{i+1} x{i+1}^-1 y{i+1}^-1 y{i}^-1 z{i}"}},
        {"a{i}", {"y{i+1} x{i+1}^-1 y{i+1}^-1 x{i} y{i}^-1 z{i}", "z{i}^-1 y{i}^-1 z{i}"}},
        {"a{i+1}^-1", {"z{i}^-1 y{i}^-1 z{i}"}}}},
      {2, "y{i+1}",
       {{"a{i}", {"y{i+1}"}},
        {"b{i}", {"y{i+1}"}},
        {"a{i-1}^-1", {"y{i+1}"}},
        {"w{i-1}", {"y{i+1}"}},
        {"w{i}", {"z{i}^-1 y{i+1}"}},
        {"b{i}", {"z{i}^-1 y{i} y{i+1}"}},
        {"a{i}", {"z{i}^-1 y{i} x{i}^-1 y{i+1}"}},
        {"a{i+1}^-1", {"z{i}^-1 y{i} x{i}^-1 y{i+1} x{i+1}", "z{i}^-1 y{i} z{i} y{i+1}"}}}},
      {2, "z{i-1}",
       {{"a{i}", {"z{i-1}"}},
        {"b{i}", {"z{i-1} y{i}"}},
        {"a{i-1}^-1", {"z{i-1} y{i}"}},
        {"w{i-1}", {"z{i-1} z{i-1}^-1 y{i}", "y{i}"}},
        {"w{i}", {"y{i} z{i}"}},
        {"b{i}", {"y{i} y{i}^-1 z{i}", "z{i}"}},
        {"a{i}", {"z{i}"}},
        {"a{i+1}^-1", {"z{i}"}}}},
      {2, "z{i}",
       {{"a{i}", {"z{i}"}},
        {"b{i}", {"y{i}^-1 z{i}"}},
        {"a{i-1}^-1", {"y{i}^-1 z{i}"}},
        {"w{i-1}", {"y{i}^-1 z{i-1} z{i}"}},
        {"w{i}", {"z{i}^-1 y{i}^-1 z{i-1} z{i}"}},
        {"b{i}", {"z{i}^-1 y{i} y{i}^-1 z{i-1} y{i} y{i}^-1 z{i}", "z{i}^-1 z{i-1} z{i}"}},
        {"a{i}", {"z{i}^-1 z{i-1} z{i}"}},
        {"a{i+1}^-1", {"z{i}^-1 z{i-1} z{i}"}}}},

      // sigma_{g-1} = w{g-1} a{g} b{g} w{g-1} a{g} b{g} a{g-1}^-1
      {3, "x{g-1}",
       {{"a{g-1}^-1", {"x{g-1}"}},
        {"b{g}", {"x{g-1}"}},
        {"a{g}", {"x{g-1}"}},
        {"w{g-1}", {"z{g-1}^-1 y{g} x{g} y{g}^-1"}},
        {"b{g}", {"y{g}^-1 z{g-1}^-1 y{g} x{g} y{g} y{g}^-1", "y{g}^-1 z{g-1}^-1 y{g} x{g}"}},
        {"a{g}", {"x{g} y{g}^-1 z{g-1}^-1 y{g} x{g}^-1 x{g}", "y{g}^-1 x{g-1} y{g}"}},
        {"w{g-1}",
         {"y{g}^-1 z{g-1} z{g-1}^-1 y{g} x{g} y{g}^-1 z{g-1}^-1 y{g}",
          "x{g} y{g}^-1 z{g-1}^-1 y{g}", "y{g}^-1 x{g-1} y{g}"}}}},
      {3, "x{g}",
       {{"a{g-1}^-1", {"x{g}"}},
        {"b{g}", {"x{g} y{g}"}},
        {"a{g}", {"x{g} y{g} x{g}^-1"}},
        {"w{g-1}", {"x{g} z{g-1}^-1 y{g} x{g}^-1"}},
        {"b{g}",
         {"x{g} y{g} y{g}^-1 z{g-1}^-1 y{g} y{g}^-1 x{g}^-1", "x{g} z{g-1}^-1 x{g}^-1"}},
        {"a{g}", {"x{g} z{g-1}^-1 x{g}^-1"}},
        {"w{g-1}", {"x{g} z{g-1}^-1 x{g}^-1"}}}},
      {3, "y{g-1}",
       {{"a{g-1}^-1", {"y{g-1} x{g-1}"}},
        {"b{g}", {"y{g-1} x{g-1}"}},
        {"a{g}", {"y{g-1} x{g-1}"}},
        {"w{g-1}", {"y{g-1} z{g-1} z{g-1}^-1 y{g} x{g} y{g}^-1", "y{g-1} y{g} x{g} y{g}^-1"}},
        {"b{g}", {"y{g-1} y{g} x{g} y{g} y{g}^-1", "y{g-1} y{g} x{g}"}},
        {"a{g}", {"y{g-1} y{g} x{g}^-1 x{g}", "y{g-1} y{g}"}},
        {"w{g-1}", {"y{g-1} z{g-1} z{g-1}^-1 y{g}", "y{g-1} y{g}"}}}},
      {3, "y{g}",
       {{"a{g-1}^-1", {"y{g}"}},
        {"b{g}", {"y{g}"}},
        {"a{g}", {"y{g} x{g}^-1"}},
        {"w{g-1}", {"z{g-1}^-1 y{g} x{g}^-1"}},
        {"b{g}", {"y{g}^-1 z{g-1}^-1 y{g} y{g}^-1 x{g}^-1", "y{g}^-1 z{g-1}^-1 x{g}^-1"}},
        {"a{g}", {"x{g} y{g}^-1 z{g-1}^-1 x{g}^-1"}},
        {"w{g-1}", {"x{g} y{g}^-1 z{g-1} z{g-1}^-1 x{g}^-1", "x{g} y{g}^-1 x{g}^-1"}}}},
      {3, "z{g-1}",
       {{"a{g-1}^-1", {"z{g-1}"}},
        {"b{g}", {"z{g-1} y{g}"}},
        {"a{g}", {"z{g-1} y{g} x{g}^-1"}},
        {"w{g-1}", {"z{g-1} z{g-1}^-1 y{g} x{g}^-1", "y{g} x{g}^-1"}},
        {"b{g}", {"y{g} y{g}^-1 x{g}^-1", "x{g}^-1"}},
        {"a{g}", {"x{g}^-1"}},
        {"w{g-1}", {"x{g}^-1"}}}},
  };
  return table;
}

// Substitutes the placeholders {i-1}, {i}, {i+1}, {g-1}, {g}.
std::string instantiate(std::string_view pattern, int i, int g) {
  std::string out;
  for (std::size_t pos = 0; pos < pattern.size();) {
    if (pattern[pos] != '{') {
      out += pattern[pos++];
      continue;
    }
    std::size_t close = pattern.find('}', pos);
    std::string_view key = pattern.substr(pos + 1, close - pos - 1);
    int value = key[0] == 'i' ? i : g;
    if (key.size() == 3) value += key[1] == '+' ? 1 : -1;
    out += std::to_string(value);
    pos = close + 1;
  }
  return out;
}

struct Instance {
  const ProofChain* chain;
  int i;  // only meaningful for case 2
  int sigma_index;
};

std::vector<Instance> instances(int genus) {
  std::vector<Instance> out;
  for (const auto& c : chains()) {
    switch (c.sigma_case) {
      case 1: out.push_back({&c, 0, 0}); break;
      case 2:
        for (int i = 2; i <= genus - 1; ++i) out.push_back({&c, i, i - 1});
        break;
      case 3: out.push_back({&c, 0, genus - 1}); break;
    }
  }
  return out;
}

}  // namespace

VerificationReport replay_proof_chains(int genus) {
  if (genus < 2) throw Error(ErrorCode::invalid_argument, "proof chains need genus at least 2");
  SurfaceWords W(genus);
  VerificationReport report{genus, {}};

  for (const auto& inst : instances(genus)) {
    const ProofChain& c = *inst.chain;
    std::string start = instantiate(c.start, inst.i, genus);
    CaseResult result{"sigma" + std::to_string(inst.sigma_index) + " chain on " + start, {}};

    Word current = W.parse(start);
    std::string applied;
    for (const auto& step : c.steps) {
      std::string twist = instantiate(step.twist, inst.i, genus);
      TwistWord tw = parse_twist_word(twist, genus);
      current = apply(dehn_twist_action(tw.symbols.at(0), genus), current);
      applied += applied.empty() ? twist : " then " + twist;
      for (std::size_t k = 0; k < step.forms.size(); ++k) {
        Word printed = W.parse(instantiate(step.forms[k], inst.i, genus));
        if (printed != current)
          result.mismatches.push_back(
              {start + " after " + applied + " (form " + std::to_string(k + 1) + ")", current,
               printed});
      }
    }
    // The chain's end point must also agree with the stated sigma action.
    Word expected = apply(pillar_switching_action(inst.sigma_index, genus), W.parse(start));
    if (expected != current)
      result.mismatches.push_back({start + " final vs sigma action", current, expected});
    report.cases.push_back(std::move(result));
  }
  return report;
}

std::size_t proof_chain_comparisons(int genus) {
  std::size_t n = 0;
  for (const auto& inst : instances(genus))
    for (const auto& step : inst.chain->steps) n += step.forms.size();
  return n;
}

}  // namespace pillar
