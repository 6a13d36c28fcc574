#include "rfeq/product.hpp"

#include <algorithm>

#include "rfeq/stallings.hpp"

namespace rfeq {

namespace {

std::vector<long long> exponent_vector(const Word& w, std::size_t rank) {
  std::vector<long long> e(rank, 0);
  for (Letter x : w.letters()) e[letter_index(x)] += letter_is_inverse(x) ? -1 : 1;
  return e;
}

Word word_of_exponents(const std::vector<long long>& e) {
  std::vector<Letter> ls;
  for (std::size_t i = 0; i < e.size(); ++i) {
    long long k = e[i];
    Letter x = make_letter(i, k < 0);
    for (long long t = 0; t < (k < 0 ? -k : k); ++t) ls.push_back(x);
  }
  return Word::reduce(ls);
}

Word abelianize(const Word& w, std::size_t rank) {
  return word_of_exponents(exponent_vector(w, rank));
}

void check_component(const Factor& f, const Word& w) {
  if (auto mi = w.max_index(); mi && *mi >= f.generators.size())
    throw ParseError("component uses generator outside its factor alphabet");
}

}  // namespace

ProductSubgroup::ProductSubgroup(std::vector<Factor> factors,
                                 std::vector<GeneratorTuple> generators,
                                 Alphabet names)
    : factors_(std::move(factors)),
      generators_(std::move(generators)),
      names_(std::move(names)) {
  if (generators_.size() != names_.size())
    throw ParseError("generator count does not match naming alphabet");
  for (auto& tup : generators_) {
    if (tup.components.size() != factors_.size())
      throw ParseError("generator tuple has wrong number of components");
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      check_component(factors_[i], tup.components[i]);
      if (factors_[i].kind == FactorKind::free_abelian)
        tup.components[i] =
            abelianize(tup.components[i], factors_[i].generators.size());
    }
  }
  is_abelian_.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].kind == FactorKind::free_abelian) {
      is_abelian_[i] = true;
    } else {
      auto proj = project(*this, i);
      is_abelian_[i] = is_abelian_tuple(proj);
    }
    if (is_abelian_[i]) abelian_indices_.push_back(i);
  }
}

std::vector<Word> project(const ProductSubgroup& ps, std::size_t i) {
  if (i >= ps.factors().size()) throw Error("factor index out of range");
  std::vector<Word> out;
  out.reserve(ps.generators().size());
  for (const auto& tup : ps.generators()) out.push_back(tup.components[i]);
  return out;
}

ProductSubgroup nonabelian_restriction(const ProductSubgroup& ps) {
  std::vector<Factor> factors;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ps.factors().size(); ++i) {
    if (!ps.factor_is_abelian(i)) {
      keep.push_back(i);
      factors.push_back(ps.factors()[i]);
    }
  }
  std::vector<GeneratorTuple> gens;
  gens.reserve(ps.generators().size());
  for (const auto& tup : ps.generators()) {
    GeneratorTuple t;
    for (std::size_t i : keep) t.components.push_back(tup.components[i]);
    gens.push_back(std::move(t));
  }
  return ProductSubgroup(std::move(factors), std::move(gens), ps.names());
}

GeneratorTuple evaluate(const ProductSubgroup& ps, const Word& w) {
  if (auto mi = w.max_index(); mi && *mi >= ps.names().size())
    throw ParseError("word uses generator outside the naming alphabet");
  GeneratorTuple out;
  out.components.reserve(ps.factors().size());
  for (std::size_t i = 0; i < ps.factors().size(); ++i) {
    if (ps.factors()[i].kind == FactorKind::free_group) {
      WordBuilder acc;
      for (Letter x : w.letters()) {
        const Word& img = ps.generators()[letter_index(x)].components[i];
        if (letter_is_inverse(x))
          acc.append_inverse(img);
        else
          acc.append(img);
      }
      out.components.push_back(acc.take());
    } else {
      std::size_t rank = ps.factors()[i].generators.size();
      std::vector<long long> sum(rank, 0);
      for (Letter x : w.letters()) {
        const Word& img = ps.generators()[letter_index(x)].components[i];
        long long sign = letter_is_inverse(x) ? -1 : 1;
        for (Letter y : img.letters())
          sum[letter_index(y)] += sign * (letter_is_inverse(y) ? -1 : 1);
      }
      out.components.push_back(word_of_exponents(sum));
    }
  }
  return out;
}

bool is_trivial_in_g(const ProductSubgroup& ps, const Word& w) {
  GeneratorTuple v = evaluate(ps, w);
  return std::all_of(v.components.begin(), v.components.end(),
                     [](const Word& c) { return c.empty(); });
}

bool is_central(const ProductSubgroup& ps, const Word& w) {
  GeneratorTuple v = evaluate(ps, w);
  for (std::size_t i = 0; i < ps.factors().size(); ++i)
    if (!ps.factor_is_abelian(i) && !v.components[i].empty()) return false;
  return true;
}

std::optional<Word> ReducedWordEnumerator::next() {
  if (k_ == 0) return std::nullopt;
  const Letter top = static_cast<Letter>(2 * k_);
  if (current_.empty()) {
    current_.push_back(0);
    return Word::reduce(current_);
  }
  std::size_t pos = current_.size();
  while (pos > 0) {
    --pos;
    Letter forbidden = pos > 0 ? inverse_letter(current_[pos - 1]) : top;
    Letter c = current_[pos];
    while (++c < top) {
      if (c == forbidden) continue;
      current_[pos] = c;
      for (std::size_t q = pos + 1; q < current_.size(); ++q)
        current_[q] = inverse_letter(current_[q - 1]) == 0 ? 1 : 0;
      return Word::reduce(current_);
    }
  }
  // length exhausted; restart with s1^(len+1)
  current_.assign(current_.size() + 1, 0);
  return Word::reduce(current_);
}

TrivialWordStream::Scan TrivialWordStream::next(std::uint64_t budget) {
  Scan out;
  while (out.scanned < budget) {
    auto w = enumerator_.next();
    if (!w) return out;  // empty alphabet: nothing will ever be yielded
    ++out.scanned;
    if (is_trivial_in_g(ps_, *w)) {
      out.word = std::move(w);
      return out;
    }
  }
  return out;
}

}  // namespace rfeq
