#include "pillar/automorphism.hpp"

#include <string>

namespace pillar {

namespace {

void require_same(const Basis& a, const Basis& b, const char* what) {
  if (a != b)
    throw Error(ErrorCode::basis_mismatch,
                std::string(what) + ": " + a.describe() + " vs " + b.describe());
}

[[noreturn]] void over_budget(std::size_t budget) {
  throw Error(ErrorCode::budget_exceeded,
              "image size exceeds letter budget of " + std::to_string(budget));
}

}  // namespace

FreeMorphism::FreeMorphism(Basis domain, Basis codomain, std::vector<Word> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (images_.size() != static_cast<std::size_t>(domain_.rank()))
    throw Error(ErrorCode::invalid_argument,
                "expected " + std::to_string(domain_.rank()) + " images, got " +
                    std::to_string(images_.size()));
  for (const auto& w : images_) require_same(w.basis(), codomain_, "image basis");
}

FreeMorphism FreeMorphism::identity(Basis basis) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(basis.rank()));
  for (Symbol s : basis.generators()) images.push_back(Word::generator(basis, s));
  return FreeMorphism(basis, basis, std::move(images));
}

FreeMorphism FreeMorphism::with_images(
    Basis basis, std::vector<std::pair<Symbol, Word>> changes) {
  FreeMorphism f = identity(basis);
  for (auto& [s, w] : changes) {
    if (!basis.admits(s))
      throw Error(ErrorCode::index_out_of_range,
                  symbol_name(s) + " is not a generator of " + basis.describe());
    require_same(w.basis(), basis, "image basis");
    f.images_[basis.slot(s)] = std::move(w);
  }
  return f;
}

const Word& FreeMorphism::image(Symbol generator) const {
  if (!domain_.admits(generator))
    throw Error(ErrorCode::basis_mismatch,
                symbol_name(generator) + " is not a generator of " + domain_.describe());
  return images_[domain_.slot(generator)];
}

std::size_t FreeMorphism::total_letters() const {
  std::size_t n = 0;
  for (const auto& w : images_) n += w.size();
  return n;
}

bool FreeMorphism::is_identity() const {
  if (!is_endomorphism()) return false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    auto ls = images_[i].letters();
    if (ls.size() != 1 || ls[0] != Letter(domain_.generator(i))) return false;
  }
  return true;
}

namespace {

void substitute(const FreeMorphism& f, const Word& w, WordBuilder& out,
                std::size_t budget) {
  const Basis& dom = f.domain();
  auto images = f.images();
  for (Letter l : w.letters()) {
    const Word& img = images[dom.slot(l.symbol())];
    if (l.sign() > 0)
      out.append(img);
    else
      out.append_inverse(img);
    if (out.size() > budget) over_budget(budget);
  }
}

}  // namespace

Word apply(const FreeMorphism& f, const Word& w, std::size_t budget) {
  require_same(f.domain(), w.basis(), "apply");
  WordBuilder out(f.codomain());
  substitute(f, w, out, budget);
  return std::move(out).finish();
}

FreeMorphism compose(const FreeMorphism& f, const FreeMorphism& h, std::size_t budget) {
  require_same(f.domain(), h.codomain(), "compose");
  std::vector<Word> images;
  images.reserve(h.images().size());
  std::size_t total = 0;
  for (const Word& hw : h.images()) {
    WordBuilder out(f.codomain());
    substitute(f, hw, out, budget);
    total += out.size();
    if (total > budget) over_budget(budget);
    images.push_back(std::move(out).finish());
  }
  return FreeMorphism(h.domain(), f.codomain(), std::move(images));
}

bool endo_equals(const FreeMorphism& f, const FreeMorphism& h) {
  require_same(f.domain(), h.domain(), "endo_equals domain");
  require_same(f.codomain(), h.codomain(), "endo_equals codomain");
  return f == h;
}

bool verify_inverse_pair(const FreeMorphism& f, const FreeMorphism& h, std::size_t budget) {
  require_same(f.domain(), h.codomain(), "verify_inverse_pair");
  require_same(h.domain(), f.codomain(), "verify_inverse_pair");
  return compose(f, h, budget).is_identity() && compose(h, f, budget).is_identity();
}

FreeMorphism power(const FreeMorphism& f, int k, std::size_t budget) {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "power exponent must be non-negative");
  if (!f.is_endomorphism())
    throw Error(ErrorCode::basis_mismatch, "power of a non-endomorphism");
  FreeMorphism result = FreeMorphism::identity(f.domain());
  for (int i = 0; i < k; ++i) result = compose(result, f, budget);
  return result;
}

std::vector<Symbol> differing_generators(const FreeMorphism& f, const FreeMorphism& h) {
  require_same(f.domain(), h.domain(), "differing_generators");
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < f.images().size(); ++i)
    if (f.images()[i] != h.images()[i]) out.push_back(f.domain().generator(i));
  return out;
}

}  // namespace pillar
