#include "rfeq/naeq.hpp"

#include <algorithm>
#include <stdexcept>

#include "rfeq/stallings.hpp"

namespace rfeq {

namespace {

std::vector<Word> conjugates_raw(const Word& r, std::size_t name_count) {
  std::vector<Word> out;
  out.reserve(name_count + 1);
  out.push_back(r);  // conjugator 1 first
  for (std::size_t i = 0; i < name_count; ++i)
    out.push_back(conjugate(r, Word::single(i)));
  return out;
}

}  // namespace

RelatorSet::RelatorSet(std::vector<Word> words) {
  words_.reserve(words.size());
  for (auto& w : words) {
    if (w.empty()) continue;
    if (std::find(words_.begin(), words_.end(), w) != words_.end()) continue;
    words_.push_back(std::move(w));
  }
}

RelatorSet conjugate_closure(const RelatorSet& r, std::size_t name_count) {
  std::vector<Word> raw;
  raw.reserve(r.size() * (name_count + 1));
  for (const Word& w : r.words()) {
    auto cs = conjugates_raw(w, name_count);
    raw.insert(raw.end(), cs.begin(), cs.end());
  }
  return RelatorSet(std::move(raw));
}

RelatorSet commutator_set(const RelatorSet& a, const RelatorSet& b) {
  std::vector<Word> raw;
  raw.reserve(a.size() * b.size());
  for (const Word& x : a.words())
    for (const Word& y : b.words()) raw.push_back(commutator(x, y));
  return RelatorSet(std::move(raw));
}

TildeResult tilde_r(std::span<const RelatorSet> relator_sets,
                    std::size_t name_count) {
  if (relator_sets.size() < 2)
    throw Error("tilde_r needs at least two relator sets");
  // raw pipeline: no dedup until the end, so the multiset size is exactly
  // |R1| * prod |Ri|*(|S|+1)
  std::vector<Word> acc(relator_sets[0].words());
  for (std::size_t i = 1; i < relator_sets.size(); ++i) {
    std::vector<Word> closure;
    closure.reserve(relator_sets[i].size() * (name_count + 1));
    for (const Word& r : relator_sets[i].words()) {
      auto cs = conjugates_raw(r, name_count);
      closure.insert(closure.end(), cs.begin(), cs.end());
    }
    std::vector<Word> next;
    next.reserve(closure.size() * acc.size());
    for (const Word& x : closure)
      for (const Word& y : acc) next.push_back(commutator(x, y));
    acc = std::move(next);
  }
  TildeResult out;
  out.raw_count = acc.size();
  out.relators = RelatorSet(std::move(acc));
  return out;
}

NaEquationsResult na_equations(const ProductSubgroup& ps) {
  NaEquationsResult out{Presentation(ps.names()), ps.factors().size(), 0, {}, 0};
  ProductSubgroup restricted = nonabelian_restriction(ps);
  out.kept_count = restricted.factors().size();

  const Alphabet& names = ps.names();
  if (out.kept_count == 0) {
    std::vector<Word> rels;
    for (std::size_t i = 0; i < names.size(); ++i)
      rels.push_back(Word::single(i));
    out.presentation = Presentation(names, std::move(rels));
    return out;
  }

  for (std::size_t i = 0; i < restricted.factors().size(); ++i) {
    auto tuple = project(restricted, i);
    auto tp = presentation_of_tuple(
        tuple, names, restricted.factors()[i].generators.size());
    out.factor_relators.emplace_back(std::move(tp.relators));
  }

  if (out.kept_count == 1) {
    out.presentation = Presentation(names, out.factor_relators[0].words());
  } else {
    TildeResult tilde = tilde_r(out.factor_relators, names.size());
    out.raw_count = tilde.raw_count;
    out.presentation = Presentation(names, tilde.relators.words());
  }

  // quotient soundness: n' = 1 relators present p_1(G), so they die in the
  // restricted spec; nested commutators (n' >= 2) also die in the original
  // spec because abelian coordinates kill commutators
  for (const Word& r : out.presentation.relators()) {
    if (!is_trivial_in_g(restricted, r) ||
        (out.kept_count >= 2 && !is_trivial_in_g(ps, r)))
      throw std::logic_error("na_equations produced a non-trivial relator");
  }
  return out;
}

}  // namespace rfeq
