#include "pillar/mcg.hpp"

#include <cctype>

namespace pillar {

namespace {

void require_genus(int genus, int min) {
  if (genus < min)
    throw Error(ErrorCode::invalid_argument,
                "genus must be at least " + std::to_string(min) + ", got " +
                    std::to_string(genus));
}

int max_index(TwistKind k, int genus) { return k == TwistKind::w ? genus - 1 : genus; }

void validate(TwistSymbol s, int genus) {
  if (s.sign != 1 && s.sign != -1)
    throw Error(ErrorCode::invalid_argument, "twist exponent must be +1 or -1");
  if (s.index < 1 || s.index > max_index(s.kind, genus))
    throw Error(ErrorCode::index_out_of_range,
                twist_symbol_name(s) + " does not exist at genus " + std::to_string(genus));
}

}  // namespace

std::string twist_symbol_name(TwistSymbol s) {
  const char* prefix = s.kind == TwistKind::a ? "a" : s.kind == TwistKind::b ? "b" : "w";
  std::string out = prefix + std::to_string(s.index);
  if (s.sign < 0) out += "^-1";
  return out;
}

TwistWord parse_twist_word(std::string_view text, int genus) {
  require_genus(genus, 1);
  TwistWord tw{genus, {}};
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos == text.size()) throw ParseError(ErrorCode::parse, pos, "empty twist word (use \"1\")");
  if (text[pos] == '1') {
    ++pos;
    skip_space();
    if (pos != text.size()) throw ParseError(ErrorCode::parse, pos, "\"1\" must stand alone");
    return tw;
  }
  while (pos < text.size()) {
    std::size_t start = pos;
    TwistKind kind;
    switch (text[pos]) {
      case 'a': kind = TwistKind::a; break;
      case 'b': kind = TwistKind::b; break;
      case 'w': kind = TwistKind::w; break;
      default: throw ParseError(ErrorCode::parse, pos, "expected a twist name (a, b or w)");
    }
    ++pos;
    std::size_t digits = pos;
    long index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > 1'000'000) throw ParseError(ErrorCode::parse, start, "twist index too large");
      ++pos;
    }
    if (pos == digits) throw ParseError(ErrorCode::parse, pos, "expected a twist index");
    int sign = +1;
    if (text.compare(pos, 3, "^-1") == 0) {
      sign = -1;
      pos += 3;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError(ErrorCode::parse, pos, "unexpected character");
    TwistSymbol s{kind, static_cast<int>(index), sign};
    if (s.index < 1 || s.index > max_index(kind, genus))
      throw ParseError(ErrorCode::index_out_of_range, start,
                       twist_symbol_name(s) + " does not exist at genus " + std::to_string(genus));
    tw.symbols.push_back(s);
    skip_space();
  }
  return tw;
}

std::string format_twist_word(const TwistWord& tw) {
  if (tw.symbols.empty()) return "1";
  std::string out;
  for (const auto& s : tw.symbols) {
    if (!out.empty()) out += ' ';
    out += twist_symbol_name(s);
  }
  return out;
}

TwistWord inverse(const TwistWord& tw) {
  TwistWord out{tw.genus, {}};
  for (auto it = tw.symbols.rbegin(); it != tw.symbols.rend(); ++it)
    out.symbols.push_back({it->kind, it->index, -it->sign});
  return out;
}

SurfaceWords::SurfaceWords(int genus) : genus_(genus), basis_(Basis::xy(genus)) {}

Word SurfaceWords::x(int k) const { return Word::generator(basis_, {Family::x, k}); }
Word SurfaceWords::y(int k) const { return Word::generator(basis_, {Family::y, k}); }

Word SurfaceWords::z(int k) const {
  if (k < 1 || k > genus_)
    throw Error(ErrorCode::index_out_of_range,
                "z" + std::to_string(k) + " does not exist at genus " + std::to_string(genus_));
  if (k == genus_) return x(k).inverse();
  return x(k).inverse() * y(k + 1) * x(k + 1) * y(k + 1).inverse();
}

Word SurfaceWords::parse(std::string_view text) const {
  WordBuilder out(basis_);
  for (const auto& p : parse_letters(text)) {
    Symbol s = p.letter.symbol();
    if (s.index > genus_ || s.family == Family::alpha)
      throw ParseError(s.family == Family::alpha ? ErrorCode::basis_mismatch
                                                 : ErrorCode::index_out_of_range,
                       p.position, symbol_name(s) + " is not available at genus " +
                                       std::to_string(genus_));
    if (s.family == Family::z) {
      if (p.letter.sign() > 0)
        out.append(z(s.index));
      else
        out.append_inverse(z(s.index));
    } else {
      out.push(p.letter);
    }
  }
  return std::move(out).finish();
}

FreeMorphism dehn_twist_action(TwistSymbol s, int genus) {
  require_genus(genus, 1);
  validate(s, genus);
  SurfaceWords W(genus);
  const int i = s.index;
  const Symbol xi{Family::x, i}, yi{Family::y, i};
  const bool forward = s.sign > 0;

  switch (s.kind) {
    case TwistKind::a:
      // y_i -> y_i x_i^-1
      return FreeMorphism::with_images(
          W.basis(), {{yi, forward ? W.y(i) * W.x(i).inverse() : W.y(i) * W.x(i)}});
    case TwistKind::b:
      // x_i -> x_i y_i
      return FreeMorphism::with_images(
          W.basis(), {{xi, forward ? W.x(i) * W.y(i) : W.x(i) * W.y(i).inverse()}});
    case TwistKind::w: {
      // w_i fixes z_i, conjugates x_i by z_i, and multiplies y_i, y_{i+1}
      // by z_i on the outside; the inverse uses z_i^-1 throughout.
      const Symbol next{Family::y, i + 1};
      Word zi = W.z(i);
      Word zinv = zi.inverse();
      if (forward)
        return FreeMorphism::with_images(
            W.basis(), {{xi, zinv * W.y(i + 1) * W.x(i + 1) * W.y(i + 1).inverse()},
                        {yi, W.y(i) * zi},
                        {next, zinv * W.y(i + 1)}});
      return FreeMorphism::with_images(
          W.basis(), {{xi, zi * W.x(i) * zinv}, {yi, W.y(i) * zinv}, {next, zi * W.y(i + 1)}});
    }
  }
  throw Error(ErrorCode::invalid_argument, "unknown twist kind");
}

FreeMorphism evaluate_twist_word(const TwistWord& tw, std::size_t budget) {
  require_genus(tw.genus, 1);
  FreeMorphism acc = FreeMorphism::identity(Basis::xy(tw.genus));
  // Left to right: acc . t keeps the rightmost symbol acting first.
  for (const auto& s : tw.symbols) acc = compose(acc, dehn_twist_action(s, tw.genus), budget);
  return acc;
}

FreeMorphism pillar_switching_action(int index, int genus) {
  require_genus(genus, 2);
  if (index < 0 || index > genus - 1)
    throw Error(ErrorCode::index_out_of_range,
                "sigma" + std::to_string(index) + " does not exist at genus " +
                    std::to_string(genus));
  SurfaceWords W(genus);
  const Basis& B = W.basis();
  auto X = [](int k) { return Symbol{Family::x, k}; };
  auto Y = [](int k) { return Symbol{Family::y, k}; };

  if (index == 0) {
    Word z1 = W.z(1), z1i = W.z(1).inverse();
    return FreeMorphism::with_images(
        B, {{X(1), z1i * W.y(1) * z1 * W.y(1).inverse() * z1},
            {Y(1), z1i * W.y(1).inverse() * z1},
            {Y(2), z1i * W.y(1) * z1 * W.y(2)}});
  }
  if (index == genus - 1) {
    const int g = genus;
    return FreeMorphism::with_images(
        B, {{X(g - 1), W.y(g).inverse() * W.x(g - 1) * W.y(g)},
            {X(g), W.x(g) * W.z(g - 1).inverse() * W.x(g).inverse()},
            {Y(g - 1), W.y(g - 1) * W.y(g)},
            {Y(g), W.x(g) * W.y(g).inverse() * W.x(g).inverse()}});
  }
  // sigma_{i-1} with 2 <= i <= g-1
  const int i = index + 1;
  Word zi = W.z(i), zii = W.z(i).inverse();
  return FreeMorphism::with_images(
      B, {{X(i - 1), W.y(i).inverse() * W.x(i - 1) * W.y(i)},
          {X(i), zii * W.y(i) * zi * W.y(i).inverse() * W.x(i - 1) * zi},
          {Y(i - 1), W.y(i - 1) * W.y(i)},
          {Y(i), zii * W.y(i).inverse() * zi},
          {Y(i + 1), zii * W.y(i) * zi * W.y(i + 1)}});
}

TwistWord pillar_switching_twist_word(int index, int genus) {
  require_genus(genus, 2);
  if (index < 0 || index > genus - 1)
    throw Error(ErrorCode::index_out_of_range,
                "sigma" + std::to_string(index) + " does not exist at genus " +
                    std::to_string(genus));
  using K = TwistKind;
  TwistWord tw{genus, {}};
  if (index == 0) {
    // a_2^-1 (w_1 a_1 b_1)^2
    tw.symbols = {{K::a, 2, -1}, {K::w, 1}, {K::a, 1}, {K::b, 1},
                  {K::w, 1},     {K::a, 1}, {K::b, 1}};
  } else if (index == genus - 1) {
    // (w_{g-1} a_g b_g)^2 a_{g-1}^-1
    const int g = genus;
    tw.symbols = {{K::w, g - 1}, {K::a, g}, {K::b, g},        {K::w, g - 1},
                  {K::a, g},     {K::b, g}, {K::a, g - 1, -1}};
  } else {
    // a_{i+1}^-1 a_i b_i w_i w_{i-1} a_{i-1}^-1 b_i a_i for sigma_{i-1}
    const int i = index + 1;
    tw.symbols = {{K::a, i + 1, -1}, {K::a, i},         {K::b, i}, {K::w, i},
                  {K::w, i - 1},     {K::a, i - 1, -1}, {K::b, i}, {K::a, i}};
  }
  return tw;
}

FreeMorphism pillar_switching_inverse(int index, int genus, std::size_t budget) {
  FreeMorphism candidate =
      evaluate_twist_word(inverse(pillar_switching_twist_word(index, genus)), budget);
  if (!verify_inverse_pair(pillar_switching_action(index, genus), candidate, budget))
    throw Error(ErrorCode::invalid_argument,
                "inverse of sigma" + std::to_string(index) + " at genus " +
                    std::to_string(genus) + " failed certification");
  return candidate;
}

Word fundamental_relator(int genus, CommutatorConvention c) {
  require_genus(genus, 1);
  SurfaceWords W(genus);
  WordBuilder out(W.basis());
  for (int k = 1; k <= genus; ++k) {
    Word u = W.y(k), v = W.x(k);
    if (c == CommutatorConvention::uv_uinv_vinv) {
      out.append(u);
      out.append(v);
      out.append_inverse(u);
      out.append_inverse(v);
    } else {
      out.append_inverse(u);
      out.append_inverse(v);
      out.append(u);
      out.append(v);
    }
  }
  return std::move(out).finish();
}

bool fixes_relator(const FreeMorphism& f, CommutatorConvention c) {
  if (!f.is_endomorphism() || f.domain().kind() != Basis::Kind::xy)
    throw Error(ErrorCode::basis_mismatch,
                "relator check needs an endomorphism of an XY basis, got " +
                    f.domain().describe());
  Word r = fundamental_relator(f.domain().parameter(), c);
  return apply(f, r) == r;
}

std::vector<CommutatorConvention> passing_commutator_conventions(int genus) {
  std::vector<FreeMorphism> twists;
  for (TwistKind k : {TwistKind::a, TwistKind::b, TwistKind::w})
    for (int i = 1; i <= max_index(k, genus); ++i)
      for (int sign : {+1, -1}) twists.push_back(dehn_twist_action({k, i, sign}, genus));

  std::vector<CommutatorConvention> out;
  for (auto c : {CommutatorConvention::uv_uinv_vinv, CommutatorConvention::uinv_vinv_uv}) {
    bool all = true;
    for (const auto& t : twists) all = all && fixes_relator(t, c);
    if (all) out.push_back(c);
  }
  return out;
}

CommutatorConvention select_commutator_convention() {
  auto passing = passing_commutator_conventions(2);
  if (passing.size() != 1)
    throw Error(ErrorCode::invalid_argument,
                std::to_string(passing.size()) +
                    " commutator conventions are fixed by every twist; expected exactly one");
  return passing.front();
}

FreeMorphism xy_to_yz(int genus) {
  require_genus(genus, 1);
  const Basis yz = Basis::yz(genus);
  auto y = [&](int k) { return Word::generator(yz, {Family::y, k}); };
  auto zinv = [&](int k) { return Word::generator(yz, {Family::z, k}, -1); };

  // x_g = z_g^-1 and x_i = y_{i+1} x_{i+1} y_{i+1}^-1 z_i^-1, descending.
  std::vector<Word> xs(static_cast<std::size_t>(genus), Word(yz));
  xs[genus - 1] = zinv(genus);
  for (int i = genus - 1; i >= 1; --i)
    xs[i - 1] = y(i + 1) * xs[i] * y(i + 1).inverse() * zinv(i);

  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(2 * genus));
  for (int k = 1; k <= genus; ++k) images.push_back(xs[k - 1]);
  for (int k = 1; k <= genus; ++k) images.push_back(y(k));
  return FreeMorphism(Basis::xy(genus), yz, std::move(images));
}

FreeMorphism yz_to_xy(int genus) {
  require_genus(genus, 1);
  SurfaceWords W(genus);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(2 * genus));
  for (int k = 1; k <= genus; ++k) images.push_back(W.y(k));
  for (int k = 1; k <= genus; ++k) images.push_back(W.z(k));
  return FreeMorphism(Basis::yz(genus), W.basis(), std::move(images));
}

Word to_yz(const Word& w) {
  if (w.basis().kind() != Basis::Kind::xy)
    throw Error(ErrorCode::basis_mismatch, "to_yz expects an XY word, got " + w.basis().describe());
  return apply(xy_to_yz(w.basis().parameter()), w);
}

Word from_yz(const Word& w) {
  if (w.basis().kind() != Basis::Kind::yz)
    throw Error(ErrorCode::basis_mismatch, "from_yz expects a YZ word, got " + w.basis().describe());
  return apply(yz_to_xy(w.basis().parameter()), w);
}

FreeMorphism conjugate_to_yz(const FreeMorphism& f, std::size_t budget) {
  if (!f.is_endomorphism() || f.domain().kind() != Basis::Kind::xy)
    throw Error(ErrorCode::basis_mismatch,
                "conjugate_to_yz expects an XY endomorphism, got " + f.domain().describe());
  const int g = f.domain().parameter();
  return compose(xy_to_yz(g), compose(f, yz_to_xy(g), budget), budget);
}

FreeMorphism pillar_switching_yz(int index, int genus) {
  require_genus(genus, 2);
  if (index < 1 || index > genus - 1)
    throw Error(ErrorCode::index_out_of_range,
                "no {y,z} form of sigma" + std::to_string(index) + " at genus " +
                    std::to_string(genus));
  const Basis B = Basis::yz(genus);
  auto y = [&](int k) { return Word::generator(B, {Family::y, k}); };
  auto z = [&](int k) { return Word::generator(B, {Family::z, k}); };
  auto Y = [](int k) { return Symbol{Family::y, k}; };
  auto Z = [](int k) { return Symbol{Family::z, k}; };

  // sigma_{i-1}, i = index + 1; the last switching has no y_{i+1} entry.
  const int i = index + 1;
  std::vector<std::pair<Symbol, Word>> images = {
      {Y(i - 1), y(i - 1) * y(i)},
      {Y(i), z(i).inverse() * y(i).inverse() * z(i)},
      {Z(i - 1), z(i)},
      {Z(i), z(i).inverse() * z(i - 1) * z(i)},
  };
  if (i < genus) images.push_back({Y(i + 1), z(i).inverse() * y(i) * z(i) * y(i + 1)});
  return FreeMorphism::with_images(B, std::move(images));
}

VerificationReport verify_twist_factorizations(int genus, std::size_t budget) {
  require_genus(genus, 2);
  VerificationReport report{genus, {}};
  for (int j = 0; j <= genus - 1; ++j) {
    TwistWord tw = pillar_switching_twist_word(j, genus);
    report.cases.push_back(compare_morphisms(
        "sigma" + std::to_string(j) + " = " + format_twist_word(tw),
        pillar_switching_action(j, genus), evaluate_twist_word(tw, budget)));
  }
  return report;
}

}  // namespace pillar
