#include "fpg/words.hpp"

#include <algorithm>
#include <limits>

namespace fpg {

ParseError::ParseError(const std::string& token, std::size_t position)
    : Error("malformed token '" + token + "' at position " +
            std::to_string(position)),
      token_(token),
      position_(position) {}

bool is_positive(const Word& w) noexcept {
  return std::all_of(w.begin(), w.end(),
                     [](const Letter& l) { return l.positive(); });
}

bool uses_finite_alphabet(const Word& w, int p) noexcept {
  return std::all_of(w.begin(), w.end(), [p](const Letter& l) {
    return l.index <= static_cast<std::uint32_t>(p - 1);
  });
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Letter parse_token(std::string_view token, std::size_t position) {
  auto fail = [&] { throw ParseError(std::string(token), position); };
  if (token.size() < 2 || token[0] != 'x') fail();
  std::size_t i = 1;
  std::uint64_t index = 0;
  while (i < token.size() && is_digit(token[i])) {
    index = index * 10 + static_cast<std::uint64_t>(token[i] - '0');
    if (index > std::numeric_limits<std::uint32_t>::max()) fail();
    ++i;
  }
  if (i == 1) fail();
  int sign = 1;
  std::string_view rest = token.substr(i);
  if (rest == "^-1") {
    sign = -1;
  } else if (!rest.empty()) {
    fail();
  }
  return {static_cast<std::uint32_t>(index), sign};
}

}  // namespace

Word parse_word(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_blank(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !is_blank(text[i])) ++i;
    tokens.emplace_back(text.substr(start, i - start), start);
  }

  Word w;
  if (tokens.size() == 1 && tokens.front().first == "1") return w;
  w.reserve(tokens.size());
  for (auto [token, position] : tokens) {
    w.push_back(parse_token(token, position));
  }
  return w;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(l.index);
    if (!l.positive()) out += "^-1";
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word stack;
  stack.reserve(w.size());
  for (const Letter& l : w) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return stack;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace fpg
