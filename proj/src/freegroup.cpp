#include "pillar/freegroup.hpp"

#include <cctype>

namespace pillar {

namespace {

// Keeps (index << 2) well inside int32.
constexpr int kMaxIndex = 1 << 24;

const char* family_prefix(Family f) {
  switch (f) {
    case Family::x: return "x";
    case Family::y: return "y";
    case Family::z: return "z";
    case Family::alpha: return "al";
  }
  return "?";
}

}  // namespace

std::string symbol_name(Symbol s) {
  return family_prefix(s.family) + std::to_string(s.index);
}

Basis Basis::xy(int genus) {
  if (genus < 1) throw Error(ErrorCode::invalid_argument, "genus must be at least 1");
  return Basis(Kind::xy, genus);
}

Basis Basis::yz(int genus) {
  if (genus < 1) throw Error(ErrorCode::invalid_argument, "genus must be at least 1");
  return Basis(Kind::yz, genus);
}

Basis Basis::abstract(int rank) {
  if (rank < 1) throw Error(ErrorCode::invalid_argument, "rank must be at least 1");
  return Basis(Kind::abstract, rank);
}

bool Basis::admits(Symbol s) const {
  if (s.index < 1 || s.index > n_) return false;
  switch (kind_) {
    case Kind::xy: return s.family == Family::x || s.family == Family::y;
    case Kind::yz: return s.family == Family::y || s.family == Family::z;
    case Kind::abstract: return s.family == Family::alpha;
  }
  return false;
}

std::size_t Basis::slot(Symbol s) const {
  auto k = static_cast<std::size_t>(s.index - 1);
  switch (kind_) {
    case Kind::xy: return s.family == Family::x ? k : k + n_;
    case Kind::yz: return s.family == Family::y ? k : k + n_;
    case Kind::abstract: return k;
  }
  return k;
}

Symbol Basis::generator(std::size_t slot) const {
  int k = static_cast<int>(slot);
  switch (kind_) {
    case Kind::xy: return k < n_ ? Symbol{Family::x, k + 1} : Symbol{Family::y, k - n_ + 1};
    case Kind::yz: return k < n_ ? Symbol{Family::y, k + 1} : Symbol{Family::z, k - n_ + 1};
    case Kind::abstract: return Symbol{Family::alpha, k + 1};
  }
  return Symbol{Family::alpha, k + 1};
}

std::vector<Symbol> Basis::generators() const {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(rank()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(rank()); ++i)
    out.push_back(generator(i));
  return out;
}

std::string Basis::describe() const {
  switch (kind_) {
    case Kind::xy: return "XY(" + std::to_string(n_) + ")";
    case Kind::yz: return "YZ(" + std::to_string(n_) + ")";
    case Kind::abstract: return "ABSTRACT(" + std::to_string(n_) + ")";
  }
  return "?";
}

Word Word::generator(Basis basis, Symbol s, int sign) {
  Letter l(s, sign);
  return reduce(std::span<const Letter>(&l, 1), basis);
}

Word Word::inverse() const { return invert(*this); }

void WordBuilder::append(const Word& w) {
  for (Letter l : w.letters()) push(l);
}

void WordBuilder::append_inverse(const Word& w) {
  auto ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(it->inverse());
}

Word WordBuilder::finish() && {
  Word w(basis_);
  w.letters_ = std::move(stack_);
  return w;
}

Word reduce(std::span<const Letter> letters, Basis basis) {
  WordBuilder b(basis);
  b.reserve(letters.size());
  for (Letter l : letters) {
    if (!basis.admits(l.symbol()))
      throw Error(ErrorCode::basis_mismatch,
                  "letter " + symbol_name(l.symbol()) + " is not in basis " +
                      basis.describe());
    b.push(l);
  }
  return std::move(b).finish();
}

Word multiply(const Word& u, const Word& v) {
  if (u.basis() != v.basis())
    throw Error(ErrorCode::basis_mismatch,
                "cannot multiply words over " + u.basis().describe() + " and " +
                    v.basis().describe());
  WordBuilder b(u.basis());
  b.reserve(u.size() + v.size());
  b.append(u);
  b.append(v);
  return std::move(b).finish();
}

Word invert(const Word& w) {
  WordBuilder b(w.basis());
  b.reserve(w.size());
  b.append_inverse(w);
  return std::move(b).finish();
}

std::vector<ParsedLetter> parse_letters(std::string_view text) {
  std::vector<ParsedLetter> out;
  std::size_t pos = 0;
  bool saw_identity = false;
  bool saw_token = false;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  if (pos == text.size()) throw ParseError(ErrorCode::parse, pos, "empty word (use \"1\" for the identity)");

  while (pos < text.size()) {
    std::size_t start = pos;
    if (saw_identity)
      throw ParseError(ErrorCode::parse, start, "\"1\" must stand alone");

    Family family;
    if (text.compare(pos, 2, "al") == 0) {
      family = Family::alpha;
      pos += 2;
    } else if (text[pos] == 'x') {
      family = Family::x;
      ++pos;
    } else if (text[pos] == 'y') {
      family = Family::y;
      ++pos;
    } else if (text[pos] == 'z') {
      family = Family::z;
      ++pos;
    } else if (text[pos] == '1' && !saw_token &&
               (pos + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[pos + 1])))) {
      saw_identity = true;
      ++pos;
      skip_space();
      continue;
    } else {
      throw ParseError(ErrorCode::parse, start, "expected a generator name");
    }

    std::size_t digits = pos;
    long long index = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      index = index * 10 + (text[pos] - '0');
      if (index > kMaxIndex) throw ParseError(ErrorCode::parse, start, "generator index too large");
      ++pos;
    }
    if (pos == digits) throw ParseError(ErrorCode::parse, pos, "expected a generator index");
    if (index < 1) throw ParseError(ErrorCode::parse, digits, "generator index must be at least 1");

    int sign = +1;
    if (text.compare(pos, 3, "^-1") == 0) {
      sign = -1;
      pos += 3;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError(ErrorCode::parse, pos, "unexpected character");

    out.push_back({Letter(Symbol{family, static_cast<int>(index)}, sign), start});
    saw_token = true;
    skip_space();
  }
  return out;
}

Word parse_word(std::string_view text, Basis basis) {
  auto parsed = parse_letters(text);
  WordBuilder b(basis);
  b.reserve(parsed.size());
  for (const auto& p : parsed) {
    Symbol s = p.letter.symbol();
    if (!basis.admits(s)) {
      bool family_ok = basis.admits(Symbol{s.family, 1});
      throw ParseError(family_ok ? ErrorCode::index_out_of_range : ErrorCode::basis_mismatch,
                       p.position,
                       symbol_name(s) + " is not a generator of " + basis.describe());
    }
    b.push(p.letter);
  }
  return std::move(b).finish();
}

std::string format_letters(std::span<const Letter> letters) {
  if (letters.empty()) return "1";
  std::string out;
  for (Letter l : letters) {
    if (!out.empty()) out += ' ';
    out += symbol_name(l.symbol());
    if (l.sign() < 0) out += "^-1";
  }
  return out;
}

std::string format_word(const Word& w) { return format_letters(w.letters()); }

}  // namespace pillar
