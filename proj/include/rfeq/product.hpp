#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rfeq/word.hpp"

namespace rfeq {

enum class FactorKind { free_group, free_abelian };

struct Factor {
  FactorKind kind = FactorKind::free_group;
  Alphabet generators;

  bool operator==(const Factor&) const = default;
};

// One component per ambient factor.  Components of free-abelian factors
// are stored in abelianized normal form (generators in alphabet order,
// one signed run each), so structural equality is element equality there
// too.
struct GeneratorTuple {
  std::vector<Word> components;

  bool operator==(const GeneratorTuple&) const = default;
};

// Subgroup G = <S> of L1 x ... x Ln with every factor free or
// free-abelian.  Immutable after construction; the set of abelian factor
// indices is computed once.
class ProductSubgroup {
 public:
  ProductSubgroup(std::vector<Factor> factors,
                  std::vector<GeneratorTuple> generators, Alphabet names);

  const std::vector<Factor>& factors() const { return factors_; }
  const std::vector<GeneratorTuple>& generators() const { return generators_; }
  const Alphabet& names() const { return names_; }

  // indices i with p_i(G) abelian: free-abelian factors, and free factors
  // whose projected tuple commutes pairwise
  const std::vector<std::size_t>& abelian_indices() const {
    return abelian_indices_;
  }
  bool factor_is_abelian(std::size_t i) const { return is_abelian_[i]; }

  bool operator==(const ProductSubgroup&) const = default;

 private:
  std::vector<Factor> factors_;
  std::vector<GeneratorTuple> generators_;
  Alphabet names_;
  std::vector<bool> is_abelian_;
  std::vector<std::size_t> abelian_indices_;
};

// i-th components of all generator tuples, i.e. p_i(S) in order
std::vector<Word> project(const ProductSubgroup& ps, std::size_t i);

// Spec with the abelian factors removed (components dropped from every
// tuple); idempotent.  All projections of G are abelian -> zero factors.
ProductSubgroup nonabelian_restriction(const ProductSubgroup& ps);

// Image of a word over the names under S: componentwise substitution,
// freely reduced in free factors, abelianized in free-abelian ones.
GeneratorTuple evaluate(const ProductSubgroup& ps, const Word& w);

// word problem of G
bool is_trivial_in_g(const ProductSubgroup& ps, const Word& w);

// trivial at every non-abelian coordinate
bool is_central(const ProductSubgroup& ps, const Word& w);

// All nonempty reduced words over k generators in length-lex order
// (s1 < s1^-1 < s2 < s2^-1 < ...).  Single-consumer stateful iterator.
class ReducedWordEnumerator {
 public:
  explicit ReducedWordEnumerator(std::size_t generator_count)
      : k_(generator_count) {}

  // nullopt only when the alphabet is empty
  std::optional<Word> next();

 private:
  std::size_t k_;
  std::vector<Letter> current_;
};

// Nonempty reduced words w over S with is_trivial_in_g(ps, w), in
// enumeration order; every trivial word appears exactly once, eventually.
class TrivialWordStream {
 public:
  explicit TrivialWordStream(ProductSubgroup ps)
      : ps_(std::move(ps)), enumerator_(ps_.names().size()) {}

  struct Scan {
    std::optional<Word> word;   // empty if the budget ran out first
    std::uint64_t scanned = 0;  // candidates consumed in this call
  };

  // Scans at most `budget` candidate words for the next trivial one.
  Scan next(std::uint64_t budget);

 private:
  ProductSubgroup ps_;
  ReducedWordEnumerator enumerator_;
};

}  // namespace rfeq
