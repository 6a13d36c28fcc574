#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rfeq/presentation.hpp"
#include "rfeq/word.hpp"

namespace rfeq {

// Folded core graph of a finitely generated subgroup of a free group,
// based at vertex 0.  Vertices are numbered canonically (breadth-first
// from the base, edges visited in label order, outgoing before incoming),
// so structural equality is graph isomorphism over the base point.
class StallingsGraph {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  StallingsGraph(std::size_t ambient_rank, std::size_t vertex_count,
                 std::vector<std::size_t> out, std::vector<std::size_t> in,
                 std::size_t edge_count);

  std::size_t ambient_rank() const { return rank_; }
  std::size_t vertex_count() const { return nv_; }
  std::size_t edge_count() const { return ne_; }
  std::size_t base() const { return 0; }

  // target of the g-labeled edge leaving v, or npos
  std::size_t out(std::size_t v, std::size_t g) const {
    return out_[v * rank_ + g];
  }
  // source of the g-labeled edge entering v, or npos
  std::size_t in(std::size_t v, std::size_t g) const {
    return in_[v * rank_ + g];
  }

  bool operator==(const StallingsGraph&) const = default;

 private:
  std::size_t rank_ = 0;
  std::size_t nv_ = 0;
  std::size_t ne_ = 0;
  std::vector<std::size_t> out_, in_;
};

// Folded core graph of the subgroup generated by `generators` inside the
// free group of the given rank.  Deterministic for a fixed input order;
// the canonical vertex numbering makes the result order-independent as a
// value.
StallingsGraph build_core_graph(std::size_t ambient_rank,
                                std::span<const Word> generators);

// true iff the reduced word traces a closed path at the base vertex
bool contains(const StallingsGraph& g, const Word& w);

// free rank of the subgroup: |E| - |V| + 1
int graph_rank(const StallingsGraph& g);

// true iff all pairs commute; exact for tuples in a free group
bool is_abelian_tuple(std::span<const Word> words);

// Presentation of the subgroup generated by a tuple, on abstract names:
// the kernel of F(names) -> <tuple> is the normal closure of `relators`,
// and basis_rank is the free rank of the subgroup.
struct TuplePresentation {
  std::vector<Word> relators;
  int basis_rank = 0;
};

// Relators are produced by folding the wedge of the tuple's petals while
// carrying words over `names` on the edges: each fold of parallel edges
// contributes one relator.  Entries that are the empty word contribute
// their name directly.  Relators are cyclically reduced and rotated to
// the length-lex least form among the relator and its inverse.
TuplePresentation presentation_of_tuple(std::span<const Word> tuple,
                                        const Alphabet& names,
                                        std::size_t ambient_rank);

// Cyclic reduction plus the least rotation among the word and its inverse.
Word normalize_relator(const Word& w);

}  // namespace rfeq
