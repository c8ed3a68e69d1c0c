#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pillar/automorphism.hpp"
#include "pillar/report.hpp"

namespace pillar {

// Standard Dehn twist generators of the mapping class group of a genus-g
// surface with one boundary circle: a_1..a_g, b_1..b_g, w_1..w_{g-1}.
enum class TwistKind { a, b, w };

struct TwistSymbol {
  TwistKind kind;
  int index;
  int sign = +1;

  friend bool operator==(const TwistSymbol&, const TwistSymbol&) = default;
};

std::string twist_symbol_name(TwistSymbol s);

// A product of twists. Evaluation is rightmost-first: the last symbol acts
// on the surface group before the others.
struct TwistWord {
  int genus = 1;
  std::vector<TwistSymbol> symbols;

  friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

// Tokens "a<k>", "b<k>", "w<k>" with optional "^-1"; "1" is the empty word.
TwistWord parse_twist_word(std::string_view text, int genus);
std::string format_twist_word(const TwistWord& tw);
TwistWord inverse(const TwistWord& tw);

// Words over XY(genus) built from generator names; z(k) is the loop
// x_k^-1 y_{k+1} x_{k+1} y_{k+1}^-1 for k < g and x_g^-1 for k = g.
class SurfaceWords {
 public:
  explicit SurfaceWords(int genus);

  int genus() const { return genus_; }
  const Basis& basis() const { return basis_; }

  Word x(int k) const;
  Word y(int k) const;
  Word z(int k) const;
  Word one() const { return Word(basis_); }

  // Parses text that may also use z<k> tokens and expands them.
  Word parse(std::string_view text) const;

 private:
  int genus_;
  Basis basis_;
};

// Action of a single twist on the surface group. Sign -1 gives the inverse
// action, which is certified by the test suite.
FreeMorphism dehn_twist_action(TwistSymbol s, int genus);

FreeMorphism evaluate_twist_word(const TwistWord& tw,
                                 std::size_t budget = kDefaultLetterBudget);

// Pillar switching sigma_index, 0 <= index <= g-1, g >= 2, over XY(g).
FreeMorphism pillar_switching_action(int index, int genus);

// Inverse of sigma_index, obtained from the inverted twist factorization and
// certified with verify_inverse_pair before it is returned.
FreeMorphism pillar_switching_inverse(int index, int genus,
                                      std::size_t budget = kDefaultLetterBudget);

// The Dehn twist product that factors sigma_index.
TwistWord pillar_switching_twist_word(int index, int genus);

enum class CommutatorConvention {
  uv_uinv_vinv,  // [u,v] = u v u^-1 v^-1
  uinv_vinv_uv,  // [u,v] = u^-1 v^-1 u v
};

inline constexpr CommutatorConvention kRelatorConvention =
    CommutatorConvention::uv_uinv_vinv;

// R = [y_1,x_1] ... [y_g,x_g].
Word fundamental_relator(int genus,
                         CommutatorConvention c = kRelatorConvention);

bool fixes_relator(const FreeMorphism& f,
                   CommutatorConvention c = kRelatorConvention);

// Runs every twist generator and its inverse at genus 2 against both
// conventions and returns the unique convention they all fix. Throws if zero
// or two conventions pass.
CommutatorConvention select_commutator_convention();
std::vector<CommutatorConvention> passing_commutator_conventions(int genus = 2);

// Basis change between {x,y} and {y,z}.
FreeMorphism xy_to_yz(int genus);  // XY(g) -> YZ(g), generator images of to_yz
FreeMorphism yz_to_xy(int genus);  // YZ(g) -> XY(g), generator images of from_yz
Word to_yz(const Word& w);
Word from_yz(const Word& w);

// to_yz . f . from_yz for an endomorphism f of XY(g).
FreeMorphism conjugate_to_yz(const FreeMorphism& f,
                             std::size_t budget = kDefaultLetterBudget);

// The action of sigma_index (1 <= index <= g-1) written natively in the
// {y,z} basis.
FreeMorphism pillar_switching_yz(int index, int genus);

// Compares each sigma with its twist factorization.
VerificationReport verify_twist_factorizations(
    int genus, std::size_t budget = kDefaultLetterBudget);

// Steps through the published chains of twist actions one twist at a time
// and checks every displayed intermediate word.
VerificationReport replay_proof_chains(int genus);

// Number of displayed words that replay_proof_chains compares at this genus.
std::size_t proof_chain_comparisons(int genus);

}  // namespace pillar
