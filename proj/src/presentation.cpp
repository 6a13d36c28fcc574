#include "rfeq/presentation.hpp"

#include <algorithm>
#include <limits>

namespace rfeq {

namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row a -= q * row b, from column `from` on (earlier columns are zero)
void row_sub(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& q,
             std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) m.at(a, j) -= q * m.at(b, j);
}

void col_sub(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& q,
             std::size_t from) {
  for (std::size_t i = from; i < m.rows(); ++i) m.at(i, a) -= q * m.at(i, b);
}

void row_add(IntMatrix& m, std::size_t a, std::size_t b, std::size_t from) {
  for (std::size_t j = from; j < m.cols(); ++j) m.at(a, j) += m.at(b, j);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t r = m.rows(), c = m.cols();
  const std::size_t n = std::min(r, c);
  SmithForm out;
  out.diagonal.assign(n, BigInt(0));

  std::size_t k = 0;
  for (; k < n; ++k) {
    // pivot: nonzero entry of minimal |value| in the trailing submatrix,
    // ties broken by lowest row then column index
    std::size_t pi = r, pj = c;
    BigInt best;
    for (std::size_t i = k; i < r; ++i) {
      for (std::size_t j = k; j < c; ++j) {
        if (m.at(i, j) == 0) continue;
        BigInt v = abs(m.at(i, j));
        if (pi == r || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == r) break;  // trailing submatrix is zero
    swap_rows(m, k, pi);
    swap_cols(m, k, pj);

    bool again = true;
    while (again) {
      again = false;
      // clear column k; a nonzero remainder is strictly smaller than the
      // pivot and becomes the new pivot
      for (std::size_t i = k + 1; i < r; ++i) {
        if (m.at(i, k) == 0) continue;
        BigInt q = m.at(i, k) / m.at(k, k);
        if (q != 0) row_sub(m, i, k, q, k);
        if (m.at(i, k) != 0) {
          swap_rows(m, k, i);
          again = true;
        }
      }
      if (again) continue;
      for (std::size_t j = k + 1; j < c; ++j) {
        if (m.at(k, j) == 0) continue;
        BigInt q = m.at(k, j) / m.at(k, k);
        if (q != 0) col_sub(m, j, k, q, k);
        if (m.at(k, j) != 0) {
          swap_cols(m, k, j);
          again = true;
        }
      }
      if (again) continue;
      // divisibility: the pivot must divide every remaining entry, else
      // pull the offending row in and reduce again
      for (std::size_t i = k + 1; i < r && !again; ++i) {
        for (std::size_t j = k + 1; j < c && !again; ++j) {
          if (m.at(i, j) % m.at(k, k) != 0) {
            row_add(m, k, i, k);
            again = true;
          }
        }
      }
    }
    if (m.at(k, k) < 0) m.at(k, k) = -m.at(k, k);
    out.diagonal[k] = m.at(k, k);
  }
  out.rank = k;
  return out;
}

Presentation::Presentation(Alphabet generators, std::vector<Word> relators)
    : generators_(std::move(generators)) {
  relators_.reserve(relators.size());
  for (auto& w : relators) {
    if (w.empty()) continue;
    if (auto mi = w.max_index(); mi && *mi >= generators_.size())
      throw ParseError("relator uses generator outside the alphabet");
    if (std::find(relators_.begin(), relators_.end(), w) != relators_.end())
      continue;
    relators_.push_back(std::move(w));
  }
}

Presentation add_relator(const Presentation& p, const Word& w) {
  if (w.empty()) return p;
  if (auto mi = w.max_index(); mi && *mi >= p.generators().size())
    throw ParseError("relator uses generator outside the alphabet");
  if (std::find(p.relators().begin(), p.relators().end(), w) !=
      p.relators().end())
    return p;
  auto relators = p.relators();
  relators.push_back(w);
  return Presentation(p.generators(), std::move(relators));
}

IntMatrix abelianization_matrix(const Presentation& p) {
  IntMatrix m(p.relators().size(), p.generators().size());
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    for (Letter x : p.relators()[i].letters()) {
      m.at(i, letter_index(x)) += letter_is_inverse(x) ? -1 : 1;
    }
  }
  return m;
}

int b1(const Presentation& p) {
  SmithForm snf = smith_normal_form(abelianization_matrix(p));
  return static_cast<int>(p.generators().size()) - static_cast<int>(snf.rank);
}

}  // namespace rfeq
