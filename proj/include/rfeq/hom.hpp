#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rfeq/naeq.hpp"
#include "rfeq/presentation.hpp"
#include "rfeq/product.hpp"
#include "rfeq/rng.hpp"
#include "rfeq/word.hpp"

namespace rfeq {

// Target of every sampled homomorphism: the rank-2 free group F(a, b).
// Rank 2 suffices since every countable free group embeds in it.
const Alphabet& hom_target_alphabet();

// phi: F(S) -> F(a, b), given by one image per name.
struct FreeHom {
  std::vector<Word> images;
  std::uint64_t seed = 0;
  int max_len = 0;
};

// One image per name, each an independently drawn uniformly random
// reduced word: length uniform in [0, max_len], then uniform reduced word
// of that length.  Streams are keyed by (seed, name index).
FreeHom random_hom(const Alphabet& names, int max_len, std::uint64_t seed);

bool has_nonabelian_image(const FreeHom& h);

// substitute images for names and reduce
Word apply_hom(const FreeHom& h, const Word& w);
bool kills(const FreeHom& h, const Word& w);
bool kills(const FreeHom& h, const RelatorSet& r);

struct Violation {
  std::uint64_t sample = 0;
  std::string kind;  // which asserted direction or check failed
};

struct OracleReport {
  std::uint64_t tested = 0;
  std::uint64_t nonabelian_count = 0;
  std::vector<Violation> violations;
};

// Samples homomorphisms and checks, per sample:
//   kills some R_i  =>  kills tilde_r(R_1..R_n)          (all samples)
//   kills tilde_r   =>  kills some R_i                   (non-abelian image)
// Violations list counterexamples; a correct relator family yields none.
// Sample t uses random_hom(names, max_len, mix_key(seed, t)).
OracleReport check_factorization_equivalence(
    std::span<const RelatorSet> relator_sets, const Alphabet& names,
    std::uint64_t samples, int max_len, std::uint64_t seed);

// Same checks against an explicit candidate tilde set (used to show that
// corrupted relator families are rejected).
OracleReport check_factorization_against(
    std::span<const RelatorSet> relator_sets, const RelatorSet& tilde,
    const Alphabet& names, std::uint64_t samples, int max_len,
    std::uint64_t seed);

// true iff every relator of p is trivial in G
bool check_quotient(const ProductSubgroup& ps, const Presentation& p);

// Sampled homomorphism defined on one factor's generators.  Free factors
// draw independent images; free-abelian factors draw powers of a common
// word so the images commute.
FreeHom random_factor_hom(const Factor& factor, int max_len,
                          std::uint64_t seed);

// Image of w under psi o p_i, where psi is a homomorphism on factor i.
Word apply_through_factor(const ProductSubgroup& ps, std::size_t factor,
                          const FreeHom& psi, const Word& w);

// For every factor i and sampled psi, the composition psi o p_i factors
// through G and therefore must kill every relator of p.  Samples homs per
// factor; returns the aggregate report.
OracleReport check_projection_kill(const ProductSubgroup& ps,
                                   const Presentation& p,
                                   std::uint64_t samples_per_factor,
                                   int max_len, std::uint64_t seed);

}  // namespace rfeq
