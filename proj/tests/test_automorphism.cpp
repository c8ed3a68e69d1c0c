#include <random>

#include "doctest.h"
#include "pillar/automorphism.hpp"
#include "pillar/checks.hpp"
#include "pillar/mcg.hpp"

using namespace pillar;

namespace {

FreeMorphism twist(const char* text, int g) { return evaluate_twist_word(parse_twist_word(text, g)); }

std::string act(const FreeMorphism& f, const char* word) {
  return format_word(apply(f, parse_word(word, f.domain())));
}

}  // namespace

TEST_CASE("apply examples") {
  const auto a1 = twist("a1", 2);
  CHECK(act(a1, "y1") == "y1 x1^-1");
  for (const char* fixed : {"x1", "x2", "y2"}) CHECK(act(a1, fixed) == fixed);

  const Word w = parse_word("x1 y2^-1 x2", Basis::xy(2));
  CHECK(apply(FreeMorphism::identity(Basis::xy(2)), w) == w);

  CHECK(act(twist("w1", 2), "y2") == "y2 x2^-1 y2^-1 x1 y2");
}

TEST_CASE("compose examples") {
  const auto a1 = twist("a1", 2), b1 = twist("b1", 2);
  CHECK(act(compose(a1, b1), "x1") == "x1 y1 x1^-1");
  CHECK(act(compose(b1, b1), "x1") == "x1 y1 y1");
}

TEST_CASE("endo_equals examples") {
  const auto id = FreeMorphism::identity(Basis::xy(2));
  CHECK(endo_equals(id, id));
  CHECK_FALSE(endo_equals(twist("a1", 2), twist("b1", 2)));
  CHECK(endo_equals(twist("a2^-1 w1 a1 b1 w1 a1 b1", 2), pillar_switching_action(0, 2)));
}

TEST_CASE("verify_inverse_pair examples") {
  const Basis b = Basis::xy(2);
  const auto id = FreeMorphism::identity(b);
  CHECK(verify_inverse_pair(id, id));

  // Inverse of a1 written out by hand, independent of the twist tables.
  const auto a1 = twist("a1", 2);
  const auto a1_inv = FreeMorphism::with_images(b, {{Symbol{Family::y, 1}, parse_word("y1 x1", b)}});
  CHECK(verify_inverse_pair(a1, a1_inv));
  CHECK(endo_equals(a1_inv, twist("a1^-1", 2)));
  CHECK_FALSE(verify_inverse_pair(a1, twist("b1", 2)));
}

TEST_CASE("power") {
  const auto f = compose(twist("w1", 2), compose(twist("a1", 2), twist("b1", 2)));
  CHECK(power(f, 0).is_identity());
  CHECK(power(f, 1) == f);
  // Explicit six-fold product w1 a1 b1 w1 a1 b1.
  FreeMorphism six = twist("b1", 2);
  for (const char* s : {"a1", "w1", "b1", "a1", "w1"}) six = compose(twist(s, 2), six);
  CHECK(endo_equals(power(f, 2), six));
}

TEST_CASE("homomorphism, associativity and equality spot checks") {
  std::mt19937_64 rng(23);
  const int g = 3;
  const Basis b = Basis::xy(g);
  const char* gens[] = {"a1", "a2", "a3", "b1", "b2", "b3", "w1", "w2",
                        "a1^-1", "b2^-1", "w1^-1", "w2^-1"};
  auto random_twist = [&] {
    std::string text;
    const int len = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < len; ++k) text += std::string(gens[rng() % std::size(gens)]) + " ";
    return evaluate_twist_word(parse_twist_word(text, g));
  };
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = random_twist(), h = random_twist(), k = random_twist();
    const Word u = random_word(b, rng() % 12, rng), v = random_word(b, rng() % 12, rng);
    CHECK(apply(f, u * v) == apply(f, u) * apply(f, v));
    CHECK(apply(f, invert(u)) == invert(apply(f, u)));
    CHECK(endo_equals(compose(compose(f, h), k), compose(f, compose(h, k))));
    CHECK(apply(compose(f, h), u) == apply(f, apply(h, u)));
    const auto same = compose(f, FreeMorphism::identity(b));
    REQUIRE(endo_equals(f, same));
    CHECK(apply(f, u) == apply(same, u));
  }
}

TEST_CASE("letter budget") {
  const auto f = twist("a1 b1^-1", 2);
  try {
    power(f, 30, 10'000);
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}

TEST_CASE("differing generators and basis checks") {
  const auto a1 = twist("a1", 2);
  const auto id = FreeMorphism::identity(Basis::xy(2));
  const auto diff = differing_generators(a1, id);
  REQUIRE(diff.size() == 1);
  CHECK(symbol_name(diff[0]) == "y1");
  CHECK_THROWS_AS(compose(a1, FreeMorphism::identity(Basis::xy(3))), Error);
}
