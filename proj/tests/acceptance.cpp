// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "braid_moves.hpp"
#include "pillar/braid.hpp"
#include "pillar/checks.hpp"
#include "pillar/mcg.hpp"

using namespace pillar;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome all_genera(int lo, int hi, const std::function<VerificationReport(int)>& run) {
  std::size_t cases = 0;
  for (int g = lo; g <= hi; ++g) {
    const auto r = run(g);
    cases += r.cases.size();
    for (const auto& c : r.cases)
      if (!c.holds()) return {false, "genus " + std::to_string(g) + ": " + c.name};
  }
  return {true, std::to_string(cases) + " cases, g=" + std::to_string(lo) + ".." + std::to_string(hi)};
}

Outcome factorizations() {
  return all_genera(2, 12, [](int g) { return verify_twist_factorizations(g); });
}

Outcome chains() {
  std::size_t lines = 0;
  for (int g : {2, 4}) {
    const auto r = replay_proof_chains(g);
    for (const auto& c : r.cases)
      if (!c.holds()) return {false, "genus " + std::to_string(g) + ": " + c.name};
    lines += proof_chain_comparisons(g);
  }
  return {true, std::to_string(lines) + " displayed forms at g=2 and g=4"};
}

Outcome relator() {
  return all_genera(2, 12, [](int g) { return relator_invariance_report(g); });
}

Outcome relations() {
  return all_genera(2, 10, [](int g) { return verify_psi_relations(g); });
}

Outcome artin_restriction() {
  return all_genera(2, 8, [](int g) { return artin_restriction_report(g); });
}

Outcome roundtrip() {
  return all_genera(2, 8, [](int g) { return yz_roundtrip_report(g, 0, 1000); });
}

Outcome word_problem() {
  std::mt19937_64 rng(0);
  for (int pair = 0; pair < 200; ++pair) {
    const int n = 3 + pair % 3;
    const auto [u, v] = testing::equivalent_pair(n, rng);
    if (!endo_equals(artin_action(u), artin_action(v)) || !is_trivial_braid(u * v.inverse()))
      return {false, "pair " + std::to_string(pair) + ": " + format_braid_word(u) + " vs " +
                         format_braid_word(v)};
  }
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      for (int k = 1; k <= 4; ++k) {
        BraidWord b(n, std::vector<BraidLetter>(static_cast<std::size_t>(k), BraidLetter{i, 1}));
        if (is_trivial_braid(b)) return {false, format_braid_word(b) + " judged trivial"};
      }
  if (!is_trivial_braid(parse_braid_word("b1 b2 b1 b2^-1 b1^-1 b2^-1", 3)))
    return {false, "braid relation word judged nontrivial"};
  return {true, "200 pairs in B3..B5, powers b_i^1..4 nontrivial"};
}

Outcome inverses() {
  return all_genera(2, 12, [](int g) { return inverse_certification_report(g); });
}

Outcome convention() {
  const auto passing = passing_commutator_conventions(2);
  if (passing.size() != 1) return {false, std::to_string(passing.size()) + " conventions pass"};
  if (passing.front() != kRelatorConvention) return {false, "shipped convention does not pass"};
  return {true, kRelatorConvention == CommutatorConvention::uv_uinv_vinv ? "[u,v] = u v u^-1 v^-1"
                                                                        : "[u,v] = u^-1 v^-1 u v"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"twist factorizations of pillar switchings", factorizations},
      {"proof chain replay", chains},
      {"relator invariance", relator},
      {"braid relations among pillar switchings", relations},
      {"Artin restriction on the z subgroup", artin_restriction},
      {"basis change round trips", roundtrip},
      {"braid word problem", word_problem},
      {"inverse certification", inverses},
      {"commutator convention oracle", convention},
  };
  int failures = 0;
  int number = 0;
  for (const auto& c : criteria) {
    ++number;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %d  %-42s %6.2fs  %s\n", o.pass ? "PASS" : "FAIL", number, c.name, secs,
                o.detail.c_str());
    failures += !o.pass;
  }
  std::printf("%d/%d criteria passed\n", number - failures, number);
  return failures == 0 ? 0 : 1;
}
