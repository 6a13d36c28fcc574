#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rfeq/presentation.hpp"
#include "rfeq/product.hpp"
#include "rfeq/word.hpp"

namespace rfeq {

// Duplicate-free list of reduced nonempty words in construction order.
class RelatorSet {
 public:
  RelatorSet() = default;
  explicit RelatorSet(std::vector<Word> words);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  bool operator==(const RelatorSet&) const = default;

 private:
  std::vector<Word> words_;
};

// { r^s : r in R, s in S0 } with S0 = {1} union S, in (r, s) construction
// order, conjugates reduced, duplicates removed.
RelatorSet conjugate_closure(const RelatorSet& r, std::size_t name_count);

// { [x, y] : x in a, y in b }, reduced, duplicates and empties removed.
RelatorSet commutator_set(const RelatorSet& a, const RelatorSet& b);

struct TildeResult {
  RelatorSet relators;
  // multiset size before dedup/empty-drop: |R1| * prod_{i>=2} |Ri|*(|S|+1)
  std::uint64_t raw_count = 0;
};

// The nested commutator set [Rn^{S0}, [R_{n-1}^{S0}, ... [R2^{S0}, R1]...]]
// computed exactly as written (R1 is not conjugated); dedup happens only
// at the end so raw_count matches the product formula.  Requires n >= 2.
TildeResult tilde_r(std::span<const RelatorSet> relator_sets,
                    std::size_t name_count);

struct NaEquationsResult {
  Presentation presentation;
  std::size_t factor_count = 0;  // n, before dropping abelian indices
  std::size_t kept_count = 0;    // n'
  std::vector<RelatorSet> factor_relators;  // R_i per kept factor, in order
  std::uint64_t raw_count = 0;              // nonzero only when n' >= 2
};

// na-equations for RF_na(G): drop abelian indices, present each surviving
// projection, then nest.  n' = 0 presents the trivial group as <S | S>;
// n' = 1 returns <S | R1>; n' >= 2 returns <S | tilde R>.
// Every emitted relator is checked trivial in the restricted and the
// original subgroup; a failure is an internal error.
NaEquationsResult na_equations(const ProductSubgroup& ps);

}  // namespace rfeq
