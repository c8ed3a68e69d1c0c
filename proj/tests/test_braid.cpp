#include <random>

#include "braid_moves.hpp"
#include "doctest.h"
#include "pillar/braid.hpp"
#include "pillar/mcg.hpp"

using namespace pillar;

namespace {

std::string act(const FreeMorphism& f, const char* word) {
  return format_word(apply(f, parse_word(word, f.domain())));
}

}  // namespace

TEST_CASE("braid word grammar") {
  const auto b = parse_braid_word("b1 b2^-1 b1", 3);
  REQUIRE(b.letters().size() == 3);
  CHECK(b.letters()[1] == BraidLetter{2, -1});
  CHECK(format_braid_word(b) == "b1 b2^-1 b1");
  CHECK(format_braid_word(b.inverse()) == "b1^-1 b2 b1^-1");
  try {
    parse_braid_word("b1 b3", 3);
    FAIL("b3 is out of range in B3");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::index_out_of_range);
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_braid_word("a1", 3), ParseError);
}

TEST_CASE("Artin action") {
  const auto b1 = artin_action(parse_braid_word("b1", 3));
  CHECK(act(b1, "al1") == "al2");
  CHECK(act(b1, "al2") == "al2^-1 al1 al2");
  CHECK(act(b1, "al3") == "al3");
  CHECK(artin_action(parse_braid_word("b1 b1^-1", 3)).is_identity());
  CHECK(endo_equals(artin_action(parse_braid_word("b1 b2 b1", 3)),
                    artin_action(parse_braid_word("b2 b1 b2", 3))));
  for (int n = 2; n <= 5; ++n)
    for (int i = 1; i < n; ++i)
      CHECK(verify_inverse_pair(artin_generator(i, 1, n), artin_generator(i, -1, n)));
}

TEST_CASE("psi action") {
  CHECK(endo_equals(psi_action(parse_braid_word("b1", 2), 2), pillar_switching_action(1, 2)));
  CHECK(psi_action(BraidWord(3), 3).is_identity());
  CHECK(endo_equals(psi_action(parse_braid_word("b1", 4), 4),
                    evaluate_twist_word(parse_twist_word("a3^-1 a2 b2 w2 w1 a1^-1 b2 a2", 4))));
  CHECK(endo_equals(psi_action(parse_braid_word("b2", 4), 4),
                    evaluate_twist_word(parse_twist_word("a4^-1 a3 b3 w3 w2 a2^-1 b3 a3", 4))));
  CHECK_THROWS_AS(psi_action(parse_braid_word("b1", 3), 2), Error);
}

TEST_CASE("psi is a homomorphism into relator-fixing maps") {
  std::mt19937_64 rng(31);
  for (int g = 2; g <= 4; ++g) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto u = testing::random_braid(g, rng() % 5, rng);
      const auto v = testing::random_braid(g, rng() % 5, rng);
      const auto pu = psi_action(u, g), pv = psi_action(v, g);
      CHECK(endo_equals(psi_action(u * v, g), compose(pu, pv)));
      CHECK(fixes_relator(pu));
    }
  }
}

TEST_CASE("word problem") {
  CHECK(is_trivial_braid(parse_braid_word("b1 b1^-1", 3)));
  CHECK(is_trivial_braid(parse_braid_word("b1 b2 b1 b2^-1 b1^-1 b2^-1", 3)));
  CHECK_FALSE(is_trivial_braid(parse_braid_word("b1", 3)));
  CHECK(is_trivial_braid(parse_braid_word("b1 b3 b1^-1 b3^-1", 4)));
  CHECK_FALSE(is_trivial_braid(parse_braid_word("b1 b2 b1^-1 b2^-1", 3)));
  std::mt19937_64 rng(37);
  for (int n = 3; n <= 5; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto [u, v] = testing::equivalent_pair(n, rng);
      CHECK(endo_equals(artin_action(u), artin_action(v)));
      CHECK(is_trivial_braid(u * v.inverse()));
    }
}

TEST_CASE("braid relations among pillar switchings") {
  const auto r2 = verify_psi_relations(2);
  CHECK(r2.cases.size() == 1);
  CHECK(r2.holds());
  CHECK(verify_psi_relations(3).holds());
  const auto r4 = verify_psi_relations(4);
  CHECK(r4.holds());
  // Three braid relations and three far commutations (0-2, 0-3, 1-3).
  CHECK(r4.cases.size() == 6);
}

TEST_CASE("restriction to the z subgroup") {
  for (int i = 1; i <= 3; ++i)
    CHECK(endo_equals(restrict_to_z(pillar_switching_yz(i, 4)),
                      artin_generator(i, 1, 4)));
  CHECK(restrict_to_z(FreeMorphism::identity(Basis::yz(3))).is_identity());
  const Basis b = Basis::yz(3);
  const auto bad = FreeMorphism::with_images(b, {{Symbol{Family::z, 1}, parse_word("y1 z1", b)}});
  try {
    restrict_to_z(bad);
    FAIL("expected not_z_stable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_z_stable);
    CHECK(std::string(e.what()).find("z1") != std::string::npos);
  }
}
