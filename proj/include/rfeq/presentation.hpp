#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <vector>

#include "rfeq/word.hpp"

namespace rfeq {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arbitrary-precision entries.
// Intermediate blowup in Smith reduction is real even for small inputs,
// so fixed-width integers are not an option here.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  // d1 | d2 | ... , entries nonnegative, length min(rows, cols).
  std::vector<BigInt> diagonal;
  std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithForm smith_normal_form(IntMatrix m);

// Finite presentation <S | R>.  Relators are reduced, nonempty and
// duplicate-free; construction enforces all three.
class Presentation {
 public:
  explicit Presentation(Alphabet generators, std::vector<Word> relators = {});

  const Alphabet& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  bool operator==(const Presentation&) const = default;

 private:
  Alphabet generators_;
  std::vector<Word> relators_;
};

// New presentation with w appended; empty and duplicate relators are
// silently dropped, so the result may equal the input.
Presentation add_relator(const Presentation& p, const Word& w);

// |R| x |S| matrix of exponent sums: entry (i, j) is the signed count of
// generator j in relator i.
IntMatrix abelianization_matrix(const Presentation& p);

// Torsion-free rank of the abelianization: |S| - rank of the relation matrix.
int b1(const Presentation& p);

}  // namespace rfeq
