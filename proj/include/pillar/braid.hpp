#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pillar/automorphism.hpp"
#include "pillar/report.hpp"

namespace pillar {

struct BraidLetter {
  int index;  // generator beta_index, 1 <= index <= strands-1
  int sign = +1;

  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A word in the standard generators of the braid group on `strands` strands.
// As with twist words, the rightmost letter acts first.
class BraidWord {
 public:
  explicit BraidWord(int strands, std::vector<BraidLetter> letters = {});

  int strands() const { return strands_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;

  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<BraidLetter> letters_;
};

// Tokens "b<k>" with optional "^-1"; "1" is the empty braid.
BraidWord parse_braid_word(std::string_view text, int strands);
std::string format_braid_word(const BraidWord& b);

// al_i -> al_{i+1}, al_{i+1} -> al_{i+1}^-1 al_i al_{i+1}, and its inverse
// al_i -> al_i al_{i+1} al_i^-1, al_{i+1} -> al_i.
FreeMorphism artin_generator(int index, int sign, int strands);

FreeMorphism artin_action(const BraidWord& b,
                          std::size_t budget = kDefaultLetterBudget);

// beta_i -> sigma_i over XY(genus); requires strands == genus.
FreeMorphism psi_action(const BraidWord& b, int genus,
                        std::size_t budget = kDefaultLetterBudget);

// Word problem through the faithful Artin representation.
bool is_trivial_braid(const BraidWord& b,
                      std::size_t budget = kDefaultLetterBudget);

// Braid and far-commutation relations among sigma_0..sigma_{g-1}.
VerificationReport verify_psi_relations(
    int genus, std::size_t budget = kDefaultLetterBudget);

// Restriction of a YZ(g) endomorphism to the subgroup generated by z_1..z_g,
// written over abstract(g) with al_j standing for z_j. Throws not_z_stable
// if some z_j has an image with a y letter.
FreeMorphism restrict_to_z(const FreeMorphism& f);

}  // namespace pillar
