#include "rfeq/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_set>

namespace rfeq {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!valid_name(n)) throw ParseError("invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw ParseError("duplicate generator name '" + n + "'");
  }
}

Alphabet Alphabet::abstract(std::size_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back("s" + std::to_string(i + 1));
  return Alphabet(std::move(names));
}

std::optional<std::size_t> Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

void WordBuilder::push(Letter x) {
  if (!letters_.empty() && letters_.back() == inverse_letter(x))
    letters_.pop_back();
  else
    letters_.push_back(x);
}

void WordBuilder::append(const Word& w) {
  for (Letter x : w.letters()) push(x);
}

void WordBuilder::append_inverse(const Word& w) {
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) push(inverse_letter(*it));
}

Word WordBuilder::take() {
  return Word(Word::reduced_tag{}, std::move(letters_));
}

Word Word::reduce(std::span<const Letter> raw) {
  WordBuilder b;
  for (Letter x : raw) b.push(x);
  return b.take();
}

Word Word::reduce(const Alphabet& alphabet, std::span<const Letter> raw) {
  for (Letter x : raw) {
    if (letter_index(x) >= alphabet.size())
      throw ParseError("letter index " + std::to_string(letter_index(x)) +
                       " outside alphabet of size " +
                       std::to_string(alphabet.size()));
  }
  return reduce(raw);
}

Word Word::single(std::size_t index, bool inverse) {
  return Word(reduced_tag{}, {make_letter(index, inverse)});
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(inverse_letter(*it));
  return Word(reduced_tag{}, std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  WordBuilder out;
  out.append(a);
  out.append(b);
  return out.take();
}

std::optional<std::size_t> Word::max_index() const {
  std::optional<std::size_t> m;
  for (Letter x : letters_) {
    std::size_t i = letter_index(x);
    if (!m || i > *m) m = i;
  }
  return m;
}

Word conjugate(const Word& r, const Word& s) {
  WordBuilder out;
  out.append_inverse(s);
  out.append(r);
  out.append(s);
  return out.take();
}

Word commutator(const Word& x, const Word& y) {
  WordBuilder out;
  out.append_inverse(x);
  out.append_inverse(y);
  out.append(x);
  out.append(y);
  return out.take();
}

bool commutes(const Word& x, const Word& y) { return commutator(x, y).empty(); }

Word cyclically_reduce(const Word& w) {
  const auto& ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo] == inverse_letter(ls[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word::reduce(std::span<const Letter>(ls.data() + lo, hi - lo));
}

int compare_length_lex(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  const auto& x = a.letters();
  const auto& y = b.letters();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
  }
  return 0;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  std::size_t i = 0;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    // in a reduced word a run of one generator has a single sign
    long long k = static_cast<long long>(j - i);
    if (letter_is_inverse(ls[i])) k = -k;
    if (!out.empty()) out += ' ';
    out += alphabet.name(letter_index(ls[i]));
    if (k != 1) out += "^" + std::to_string(k);
    i = j;
  }
  return out;
}

namespace {

constexpr std::size_t kMaxExpandedLetters = 1u << 20;

void parse_token(const Alphabet& alphabet, std::string_view tok,
                 std::vector<Letter>& out) {
  if (tok == "1") return;
  std::string_view name = tok;
  long long k = 1;
  if (auto pos = tok.find('^'); pos != std::string_view::npos) {
    name = tok.substr(0, pos);
    std::string_view exp = tok.substr(pos + 1);
    if (!exp.empty() && exp[0] == '+') exp.remove_prefix(1);
    auto [p, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), k);
    if (ec != std::errc() || p != exp.data() + exp.size())
      throw ParseError("bad exponent in token '" + std::string(tok) + "'");
    if (k == 0) throw ParseError("zero exponent in token '" + std::string(tok) + "'");
  }
  auto idx = alphabet.index_of(name);
  if (!idx) throw ParseError("unknown generator '" + std::string(name) + "'");
  std::size_t count = static_cast<std::size_t>(k < 0 ? -k : k);
  if (out.size() + count > kMaxExpandedLetters)
    throw ParseError("word too long after expanding powers");
  Letter x = make_letter(*idx, k < 0);
  out.insert(out.end(), count, x);
}

}  // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) parse_token(alphabet, text.substr(i, j - i), raw);
    i = j;
  }
  return Word::reduce(raw);
}

}  // namespace rfeq
