#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pillar/error.hpp"

namespace pillar {

enum class Family : std::uint8_t { x = 0, y = 1, z = 2, alpha = 3 };

struct Symbol {
  Family family;
  int index;  // 1-based

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

std::string symbol_name(Symbol s);

// A generator occurrence x_k or x_k^-1, packed into one signed integer:
// |code| = (index << 2) | family, and the sign of code is the exponent.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Symbol s, int sign = +1)
      : code_((static_cast<std::int32_t>(s.index) << 2 |
               static_cast<std::int32_t>(s.family)) *
              (sign < 0 ? -1 : 1)) {}

  static constexpr Letter from_code(std::int32_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }

  constexpr std::int32_t code() const { return code_; }
  constexpr int sign() const { return code_ < 0 ? -1 : 1; }
  constexpr Symbol symbol() const {
    std::int32_t a = code_ < 0 ? -code_ : code_;
    return Symbol{static_cast<Family>(a & 3), static_cast<int>(a >> 2)};
  }
  constexpr Letter inverse() const { return from_code(-code_); }

  friend constexpr bool operator==(Letter, Letter) = default;

 private:
  std::int32_t code_ = 0;
};

inline constexpr Letter x(int k, int sign = +1) { return Letter({Family::x, k}, sign); }
inline constexpr Letter y(int k, int sign = +1) { return Letter({Family::y, k}, sign); }
inline constexpr Letter z(int k, int sign = +1) { return Letter({Family::z, k}, sign); }
inline constexpr Letter al(int k, int sign = +1) { return Letter({Family::alpha, k}, sign); }

// A free basis. XY(g) = {x_1..x_g, y_1..y_g}, YZ(g) = {y_1..y_g, z_1..z_g},
// abstract(n) = {al_1..al_n}.
class Basis {
 public:
  enum class Kind : std::uint8_t { xy, yz, abstract };

  static Basis xy(int genus);
  static Basis yz(int genus);
  static Basis abstract(int rank);

  Kind kind() const { return kind_; }
  // genus for xy/yz, rank for abstract
  int parameter() const { return n_; }
  int rank() const { return kind_ == Kind::abstract ? n_ : 2 * n_; }

  bool admits(Symbol s) const;
  // Position of s among the generators; s must be admitted.
  std::size_t slot(Symbol s) const;
  Symbol generator(std::size_t slot) const;
  std::vector<Symbol> generators() const;

  std::string describe() const;

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  Basis(Kind k, int n) : kind_(k), n_(n) {}

  Kind kind_;
  int n_;
};

class WordBuilder;

// A freely reduced word. The reduced invariant holds for every instance, so
// equality is plain sequence comparison.
class Word {
 public:
  explicit Word(Basis basis) : basis_(basis) {}

  static Word generator(Basis basis, Symbol s, int sign = +1);

  const Basis& basis() const { return basis_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  friend class WordBuilder;

  Basis basis_;
  std::vector<Letter> letters_;
};

// Stack-based free reduction. Letters are cancelled as they are pushed, so
// the buffer is reduced at every point.
class WordBuilder {
 public:
  explicit WordBuilder(Basis basis) : basis_(basis) {}

  void push(Letter l) {
    if (!stack_.empty() && stack_.back().code() == -l.code())
      stack_.pop_back();
    else
      stack_.push_back(l);
  }
  void append(const Word& w);
  void append_inverse(const Word& w);

  std::size_t size() const { return stack_.size(); }
  void reserve(std::size_t n) { stack_.reserve(n); }

  Word finish() &&;

 private:
  Basis basis_;
  std::vector<Letter> stack_;
};

// Throws Error(basis_mismatch) if some letter is not admitted by basis.
Word reduce(std::span<const Letter> letters, Basis basis);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& w);

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

// A token of the word grammar together with its byte offset in the source.
struct ParsedLetter {
  Letter letter;
  std::size_t position;
};

// Tokenizes without any basis check. "1" yields an empty sequence.
std::vector<ParsedLetter> parse_letters(std::string_view text);

Word parse_word(std::string_view text, Basis basis);
std::string format_word(const Word& w);
std::string format_letters(std::span<const Letter> letters);

}  // namespace pillar
