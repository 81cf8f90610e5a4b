#ifndef RWA_ALPHABET_HPP
#define RWA_ALPHABET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rwa {

/// Raised for malformed input and violated preconditions throughout the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Symbol = std::uint32_t;
using StateId = std::uint32_t;
using Word = std::vector<Symbol>;

/// A nonempty finite set of opaque string symbols.
///
/// Symbols are kept in lexicographic order; a Symbol is the position of the
/// symbol in that order, so iteration over an alphabet is deterministic.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& name(Symbol s) const { return symbols_.at(s); }

  /// Throws Error for symbols outside the alphabet.
  Symbol symbol(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Splits `text` into single-character symbols. "" is the empty word.
  Word parse_word(std::string_view text) const;
  Word word_from_symbols(const std::vector<std::string>& names) const;

  /// Concatenation when every symbol is one character, space separated otherwise.
  std::string format(const Word& w) const;

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<std::string> symbols_;
};

/// All words over an alphabet of `letters` symbols with length <= max_length,
/// in length-lexicographic order.
std::vector<Word> words_up_to(std::size_t letters, std::size_t max_length);

} // namespace rwa

#endif // RWA_ALPHABET_HPP
