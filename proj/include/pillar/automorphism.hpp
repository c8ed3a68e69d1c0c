#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pillar/freegroup.hpp"

namespace pillar {

// Upper bound on the total number of letters across all images produced by a
// single composition or application.
inline constexpr std::size_t kDefaultLetterBudget = 10'000'000;

// A homomorphism between free groups, stored as the image of every positive
// generator of the domain. Images of inverse letters are inverted on demand.
// When domain == codomain this is an endomorphism, which is how mapping
// classes and braids are represented.
class FreeMorphism {
 public:
  FreeMorphism(Basis domain, Basis codomain, std::vector<Word> images);

  static FreeMorphism identity(Basis basis);

  // Endomorphism of basis that sends each listed generator to the given word
  // and fixes every other generator.
  static FreeMorphism with_images(Basis basis,
                                  std::vector<std::pair<Symbol, Word>> changes);

  const Basis& domain() const { return domain_; }
  const Basis& codomain() const { return codomain_; }
  bool is_endomorphism() const { return domain_ == codomain_; }

  const Word& image(Symbol generator) const;
  std::span<const Word> images() const { return images_; }
  std::size_t total_letters() const;
  bool is_identity() const;

  friend bool operator==(const FreeMorphism&, const FreeMorphism&) = default;

 private:
  Basis domain_;
  Basis codomain_;
  std::vector<Word> images_;  // indexed by domain_.slot()
};

// Letterwise substitution; result is reduced.
Word apply(const FreeMorphism& f, const Word& w,
           std::size_t budget = kDefaultLetterBudget);

// h first, then f: compose(f, h)(w) = f(h(w)).
FreeMorphism compose(const FreeMorphism& f, const FreeMorphism& h,
                     std::size_t budget = kDefaultLetterBudget);

bool endo_equals(const FreeMorphism& f, const FreeMorphism& h);

// True iff f and h are mutually inverse; works across bases as long as
// f: A -> B and h: B -> A.
bool verify_inverse_pair(const FreeMorphism& f, const FreeMorphism& h,
                         std::size_t budget = kDefaultLetterBudget);

FreeMorphism power(const FreeMorphism& f, int k,
                   std::size_t budget = kDefaultLetterBudget);

// Generators on which f and h disagree, in basis order.
std::vector<Symbol> differing_generators(const FreeMorphism& f,
                                         const FreeMorphism& h);

}  // namespace pillar
