#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nccomb {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Letter 0 is always the constant symbol "1"; symbols are 1..size().
inline constexpr Letter kConstant = 0;
inline constexpr std::string_view kConstantName = "1";

class UnknownSymbolError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  /// a, b, c, ... (at most 26).
  static Alphabet letters(std::size_t count);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::string_view name(Letter l) const;
  std::optional<Letter> find(std::string_view symbol) const;
  Letter letter(std::string_view symbol) const;

  /// Space-separated tokens, or (without spaces) the longest-match split
  /// of the text into symbol names. "1" is the constant symbol.
  Word parse(std::string_view text) const;
  /// Concatenated names when every name is one character, else space-separated.
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

Word strip_constants(const Word& w);
bool has_constant(const Word& w);

/// Letters at the positions set in mask (bit i = position i+1).
Word subword(const Word& w, std::uint64_t mask);

/// All words of length n over letters 1..k, lexicographic.
std::vector<Word> all_words(std::size_t k, std::size_t n);

}  // namespace nccomb
