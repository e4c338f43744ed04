#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fpg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& token, std::size_t position);

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

/// A generator x_index raised to sign (+1 or -1).
struct Letter {
  std::uint32_t index = 0;
  int sign = 1;

  Letter inverse() const noexcept { return {index, -sign}; }
  bool positive() const noexcept { return sign > 0; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Letters are stored densely, left to right. The empty word is the identity.
using Word = std::vector<Letter>;

inline Letter gen(std::uint32_t index, int sign = 1) { return {index, sign}; }

bool is_positive(const Word& w) noexcept;

/// True iff every subscript is at most p - 1.
bool uses_finite_alphabet(const Word& w, int p) noexcept;

/// Grammar: WORD := "1" | TOKEN (WS+ TOKEN)*, TOKEN := "x" DIGITS ("^-1")?.
/// Blank text is the empty word. No reduction is performed.
Word parse_word(std::string_view text);

/// Inverse of parse_word; the empty word prints as "1".
std::string format_word(const Word& w);

/// Single stack pass cancelling every adjacent x_i^e x_i^-e.
Word free_reduce(const Word& w);

Word inverse(const Word& w);

Word concat(const Word& a, const Word& b);

}  // namespace fpg
