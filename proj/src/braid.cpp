#include "pillar/braid.hpp"

#include <cctype>
#include <map>
#include <utility>

#include "pillar/mcg.hpp"

namespace pillar {

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw Error(ErrorCode::invalid_argument, "a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index >= strands_)
      throw Error(ErrorCode::index_out_of_range,
                  "b" + std::to_string(l.index) + " does not exist with " +
                      std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1)
      throw Error(ErrorCode::invalid_argument, "braid exponent must be +1 or -1");
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back({it->index, -it->sign});
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands_ != v.strands_)
    throw Error(ErrorCode::invalid_argument, "braid words with different strand counts");
  std::vector<BraidLetter> out = u.letters_;
  out.insert(out.end(), v.letters_.begin(), v.letters_.end());
  return BraidWord(u.strands_, std::move(out));
}

BraidWord parse_braid_word(std::string_view text, int strands) {
  if (strands < 1) throw Error(ErrorCode::invalid_argument, "a braid needs at least one strand");
  std::vector<BraidLetter> letters;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError(ErrorCode::parse, pos, "empty braid word (use \"1\")");
  if (text[pos] == '1') {
    ++pos;
    skip_space();
    if (pos != text.size()) throw ParseError(ErrorCode::parse, pos, "\"1\" must stand alone");
    return BraidWord(strands);
  }
  while (pos < text.size()) {
    std::size_t start = pos;
    if (text[pos] != 'b') throw ParseError(ErrorCode::parse, pos, "expected a braid generator b<k>");
    ++pos;
    std::size_t digits = pos;
    long index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > 1'000'000) throw ParseError(ErrorCode::parse, start, "braid index too large");
      ++pos;
    }
    if (pos == digits) throw ParseError(ErrorCode::parse, pos, "expected a braid index");
    int sign = +1;
    if (text.compare(pos, 3, "^-1") == 0) {
      sign = -1;
      pos += 3;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError(ErrorCode::parse, pos, "unexpected character");
    if (index < 1 || index >= strands)
      throw ParseError(ErrorCode::index_out_of_range, start,
                       "b" + std::to_string(index) + " does not exist with " +
                           std::to_string(strands) + " strands");
    letters.push_back({static_cast<int>(index), sign});
    skip_space();
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid_word(const BraidWord& b) {
  if (b.empty()) return "1";
  std::string out;
  for (const auto& l : b.letters()) {
    if (!out.empty()) out += ' ';
    out += "b" + std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

FreeMorphism artin_generator(int index, int sign, int strands) {
  BraidWord check(strands, {{index, sign}});
  const Basis B = Basis::abstract(strands);
  auto a = [&](int k) { return Word::generator(B, {Family::alpha, k}); };
  const Symbol lo{Family::alpha, index}, hi{Family::alpha, index + 1};
  if (sign > 0)
    return FreeMorphism::with_images(
        B, {{lo, a(index + 1)}, {hi, a(index + 1).inverse() * a(index) * a(index + 1)}});
  return FreeMorphism::with_images(
      B, {{lo, a(index) * a(index + 1) * a(index).inverse()}, {hi, a(index)}});
}

FreeMorphism artin_action(const BraidWord& b, std::size_t budget) {
  FreeMorphism acc = FreeMorphism::identity(Basis::abstract(b.strands()));
  for (const auto& l : b.letters())
    acc = compose(acc, artin_generator(l.index, l.sign, b.strands()), budget);
  return acc;
}

FreeMorphism psi_action(const BraidWord& b, int genus, std::size_t budget) {
  if (genus != b.strands())
    throw Error(ErrorCode::invalid_argument,
                "psi needs strands == genus, got " + std::to_string(b.strands()) +
                    " strands at genus " + std::to_string(genus));
  if (genus < 2) throw Error(ErrorCode::invalid_argument, "psi needs genus at least 2");

  std::map<std::pair<int, int>, FreeMorphism> cache;
  auto factor = [&](const BraidLetter& l) -> const FreeMorphism& {
    auto key = std::make_pair(l.index, l.sign);
    auto it = cache.find(key);
    if (it == cache.end()) {
      FreeMorphism f = l.sign > 0 ? pillar_switching_action(l.index, genus)
                                  : pillar_switching_inverse(l.index, genus, budget);
      it = cache.emplace(key, std::move(f)).first;
    }
    return it->second;
  };

  FreeMorphism acc = FreeMorphism::identity(Basis::xy(genus));
  for (const auto& l : b.letters()) acc = compose(acc, factor(l), budget);
  return acc;
}

bool is_trivial_braid(const BraidWord& b, std::size_t budget) {
  return artin_action(b, budget).is_identity();
}

VerificationReport verify_psi_relations(int genus, std::size_t budget) {
  if (genus < 2) throw Error(ErrorCode::invalid_argument, "relations need genus at least 2");
  std::vector<FreeMorphism> sigma;
  for (int j = 0; j < genus; ++j) sigma.push_back(pillar_switching_action(j, genus));
  auto name = [](int j) { return "sigma" + std::to_string(j); };

  VerificationReport report{genus, {}};
  for (int i = 0; i + 1 < genus; ++i) {
    const auto &s = sigma[i], &t = sigma[i + 1];
    report.cases.push_back(compare_morphisms(
        name(i) + " " + name(i + 1) + " " + name(i) + " = " + name(i + 1) + " " + name(i) +
            " " + name(i + 1),
        compose(s, compose(t, s, budget), budget), compose(t, compose(s, t, budget), budget)));
  }
  for (int i = 0; i < genus; ++i)
    for (int j = i + 2; j < genus; ++j)
      report.cases.push_back(compare_morphisms(
          name(i) + " " + name(j) + " = " + name(j) + " " + name(i),
          compose(sigma[i], sigma[j], budget), compose(sigma[j], sigma[i], budget)));
  return report;
}

FreeMorphism restrict_to_z(const FreeMorphism& f) {
  if (!f.is_endomorphism() || f.domain().kind() != Basis::Kind::yz)
    throw Error(ErrorCode::basis_mismatch,
                "restrict_to_z expects a YZ endomorphism, got " + f.domain().describe());
  const int g = f.domain().parameter();
  const Basis target = Basis::abstract(g);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(g));
  for (int k = 1; k <= g; ++k) {
    const Word& w = f.image({Family::z, k});
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (Letter l : w.letters()) {
      if (l.symbol().family != Family::z)
        throw Error(ErrorCode::not_z_stable,
                    "image of z" + std::to_string(k) + " leaves the z subgroup: " +
                        format_word(w));
      letters.push_back(Letter({Family::alpha, l.symbol().index}, l.sign()));
    }
    images.push_back(reduce(letters, target));
  }
  return FreeMorphism(target, target, std::move(images));
}

}  // namespace pillar
