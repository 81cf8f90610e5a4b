#include "rwa/alphabet.hpp"

#include <algorithm>

namespace rwa {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty())
    throw Error("alphabet must be nonempty");
  std::sort(symbols_.begin(), symbols_.end());
  if (std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end())
    throw Error("duplicate symbol in alphabet");
  for (const auto& s : symbols_)
    if (s.empty())
      throw Error("alphabet symbols must be nonempty strings");
}

Symbol Alphabet::symbol(std::string_view name) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end() || *it != name)
    throw Error("unknown symbol '" + std::string(name) + "'");
  return static_cast<Symbol>(it - symbols_.begin());
}

bool Alphabet::contains(std::string_view name) const {
  return std::binary_search(symbols_.begin(), symbols_.end(), name);
}

Word Alphabet::parse_word(std::string_view text) const {
  Word w;
  w.reserve(text.size());
  for (char c : text)
    w.push_back(symbol(std::string_view(&c, 1)));
  return w;
}

Word Alphabet::word_from_symbols(const std::vector<std::string>& names) const {
  Word w;
  w.reserve(names.size());
  for (const auto& n : names)
    w.push_back(symbol(n));
  return w;
}

std::string Alphabet::format(const Word& w) const {
  bool single = std::all_of(symbols_.begin(), symbols_.end(),
                            [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i > 0)
      out += ' ';
    out += name(w[i]);
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t letters, std::size_t max_length) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_length && letters > 0; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i)
      for (Symbol c = 0; c < letters; ++c) {
        Word w = out[i];
        w.push_back(c);
        out.push_back(std::move(w));
      }
    begin = end;
  }
  return out;
}

} // namespace rwa
