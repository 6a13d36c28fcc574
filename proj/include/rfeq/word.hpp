#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rfeq/errors.hpp"

namespace rfeq {

// A letter is a generator or an inverse generator, encoded as
//   2*index     for  s_index
//   2*index + 1 for  s_index^-1
// so that the natural order on codes is s1 < s1^-1 < s2 < s2^-1 < ...,
// the order used for word enumeration and relator normalization.
using Letter = std::uint32_t;

constexpr Letter make_letter(std::size_t index, bool inverse) {
  return static_cast<Letter>(2 * index + (inverse ? 1 : 0));
}
constexpr Letter inverse_letter(Letter x) { return x ^ 1u; }
constexpr std::size_t letter_index(Letter x) { return x >> 1; }
constexpr bool letter_is_inverse(Letter x) { return (x & 1u) != 0; }

// Ordered list of distinct generator names.  Names match
// [a-zA-Z][a-zA-Z0-9_]* ; the token "1" is reserved for the empty word.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  // s1, s2, ..., sk — the abstract naming alphabet for generating tuples.
  static Alphabet abstract(std::size_t k);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> names_;
};

// A freely reduced word.  The empty word is the identity.  Reduction is
// enforced at construction, so equality of group elements is structural
// equality of letter sequences.
class Word {
 public:
  Word() = default;

  // Reduces an arbitrary letter sequence.
  static Word reduce(std::span<const Letter> raw);
  // Same, but rejects letters outside the alphabet.
  static Word reduce(const Alphabet& alphabet, std::span<const Letter> raw);
  static Word single(std::size_t index, bool inverse = false);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;

  // Concatenation followed by free reduction.
  friend Word operator*(const Word& a, const Word& b);

  bool operator==(const Word&) const = default;

  // Largest generator index occurring, or nullopt for the empty word.
  std::optional<std::size_t> max_index() const;

 private:
  struct reduced_tag {};
  Word(reduced_tag, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend class WordBuilder;
};

// Incremental reduced-word accumulator; keeps the running word reduced.
class WordBuilder {
 public:
  void push(Letter x);
  void append(const Word& w);
  void append_inverse(const Word& w);
  Word take();

 private:
  std::vector<Letter> letters_;
};

// s^-1 r s
Word conjugate(const Word& r, const Word& s);
// [x, y] = x^-1 y^-1 x y
Word commutator(const Word& x, const Word& y);
// Exact in a free group: true iff [x, y] reduces to the empty word.
bool commutes(const Word& x, const Word& y);

Word cyclically_reduce(const Word& w);

// Length first, then lexicographic on letter codes.  Returns <0, 0, >0.
int compare_length_lex(const Word& a, const Word& b);

// Text form: whitespace-separated tokens `name`, `name^-1`, `name^k`
// (k a nonzero integer); the token `1` denotes the empty word.
// Round-trips bit-exactly on reduced words.
std::string format_word(const Alphabet& alphabet, const Word& w);
Word parse_word(const Alphabet& alphabet, std::string_view text);

}  // namespace rfeq
