#include "nccomb/words.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace nccomb {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("empty symbol name");
    if (s == kConstantName) throw std::invalid_argument("symbol name '1' is reserved for the constant");
    if (s.find_first_of(" \t/,") != std::string::npos) {
      throw std::invalid_argument("symbol name '" + s + "' contains a separator");
    }
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate symbol '" + s + "'");
  }
}

Alphabet Alphabet::letters(std::size_t count) {
  if (count > 26) throw std::invalid_argument("at most 26 single-letter symbols");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(names));
}

std::string_view Alphabet::name(Letter l) const {
  if (l == kConstant) return kConstantName;
  if (l > symbols_.size()) throw UnknownSymbolError("letter index " + std::to_string(l) + " out of range");
  return symbols_[l - 1];
}

std::optional<Letter> Alphabet::find(std::string_view symbol) const {
  if (symbol == kConstantName) return kConstant;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == symbol) return static_cast<Letter>(i + 1);
  }
  return std::nullopt;
}

Letter Alphabet::letter(std::string_view symbol) const {
  if (auto l = find(symbol)) return *l;
  throw UnknownSymbolError("unknown symbol '" + std::string(symbol) + "'");
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  if (text.find_first_of(" \t") != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
      std::size_t end = pos;
      while (end < text.size() && text[end] != ' ' && text[end] != '\t') ++end;
      if (end > pos) out.push_back(letter(text.substr(pos, end - pos)));
      pos = end;
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    Letter best_letter = kConstant;
    if (text[pos] == '1') {
      best = 1;
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      const auto& s = symbols_[i];
      if (s.size() > best && text.substr(pos, s.size()) == s) {
        best = s.size();
        best_letter = static_cast<Letter>(i + 1);
      }
    }
    if (best == 0) {
      throw UnknownSymbolError("unknown symbol at '" + std::string(text.substr(pos)) + "'");
    }
    out.push_back(best_letter);
    pos += best;
  }
  return out;
}

std::string Alphabet::format(const Word& w) const {
  const bool short_names = std::all_of(symbols_.begin(), symbols_.end(), [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !short_names) out += ' ';
    out += name(w[i]);
  }
  return out;
}

Word strip_constants(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (l != kConstant) out.push_back(l);
  }
  return out;
}

bool has_constant(const Word& w) { return std::find(w.begin(), w.end(), kConstant) != w.end(); }

Word subword(const Word& w, std::uint64_t mask) {
  Word out;
  for (; mask; mask &= mask - 1) out.push_back(w[std::countr_zero(mask)]);
  return out;
}

std::vector<Word> all_words(std::size_t k, std::size_t n) {
  std::vector<Word> out;
  if (k == 0) return n == 0 ? std::vector<Word>{Word{}} : out;
  Word w(n, 1);
  while (true) {
    out.push_back(w);
    std::size_t i = n;
    while (i > 0 && w[i - 1] == k) w[--i] = 1;
    if (i == 0) break;
    ++w[i - 1];
  }
  return out;
}

}  // namespace nccomb
