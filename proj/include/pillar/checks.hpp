#pragma once

#include <cstdint>
#include <random>

#include "pillar/freegroup.hpp"
#include "pillar/report.hpp"

namespace pillar {

// Uniformly random freely reduced word of exactly `length` letters.
template <class URBG>
Word random_word(const Basis& basis, std::size_t length, URBG& rng) {
  std::uniform_int_distribution<std::size_t> slot(0, static_cast<std::size_t>(basis.rank()) - 1);
  std::bernoulli_distribution flip(0.5);
  WordBuilder b(basis);
  b.reserve(length);
  while (b.size() < length) b.push(Letter(basis.generator(slot(rng)), flip(rng) ? 1 : -1));
  return std::move(b).finish();
}

// Every twist generator (both signs) and every sigma fixes the relator.
VerificationReport relator_invariance_report(int genus);

// Every twist generator has an inverse passing verify_inverse_pair, and so
// does every sigma.
VerificationReport inverse_certification_report(int genus);

// For each 1 <= i <= g-1: the {y,z} conjugate of sigma_i equals the native
// {y,z} formula, it preserves the z subgroup, and its restriction equals the
// Artin generator beta_i.
VerificationReport artin_restriction_report(int genus);

// Basis-change substitutions compose to identities in both directions, and
// to_yz/from_yz round-trip `samples` random words of lengths 0..40.
VerificationReport yz_roundtrip_report(int genus, std::uint64_t seed,
                                       std::size_t samples = 1000);

}  // namespace pillar
