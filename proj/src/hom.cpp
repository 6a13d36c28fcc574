#include "rfeq/hom.hpp"

#include <algorithm>

namespace rfeq {

Word random_reduced_word(std::size_t rank, std::size_t length, SplitMix64& g) {
  std::vector<Letter> ls;
  ls.reserve(length);
  if (rank == 0) return Word();
  for (std::size_t i = 0; i < length; ++i) {
    if (ls.empty()) {
      ls.push_back(static_cast<Letter>(g.below(2 * rank)));
    } else {
      Letter forbidden = inverse_letter(ls.back());
      Letter c = static_cast<Letter>(g.below(2 * rank - 1));
      if (c >= forbidden) ++c;
      ls.push_back(c);
    }
  }
  return Word::reduce(ls);
}

const Alphabet& hom_target_alphabet() {
  static const Alphabet target({"a", "b"});
  return target;
}

FreeHom random_hom(const Alphabet& names, int max_len, std::uint64_t seed) {
  if (max_len < 0) throw Error("max image length must be nonnegative");
  FreeHom h;
  h.seed = seed;
  h.max_len = max_len;
  h.images.reserve(names.size());
  for (std::size_t j = 0; j < names.size(); ++j) {
    SplitMix64 g(mix_key(seed, j));
    std::size_t len = g.below(static_cast<std::uint64_t>(max_len) + 1);
    h.images.push_back(random_reduced_word(2, len, g));
  }
  return h;
}

bool has_nonabelian_image(const FreeHom& h) {
  for (std::size_t i = 0; i < h.images.size(); ++i)
    for (std::size_t j = i + 1; j < h.images.size(); ++j)
      if (!commutes(h.images[i], h.images[j])) return true;
  return false;
}

Word apply_hom(const FreeHom& h, const Word& w) {
  WordBuilder acc;
  for (Letter x : w.letters()) {
    const Word& img = h.images[letter_index(x)];
    if (letter_is_inverse(x))
      acc.append_inverse(img);
    else
      acc.append(img);
  }
  return acc.take();
}

bool kills(const FreeHom& h, const Word& w) { return apply_hom(h, w).empty(); }

bool kills(const FreeHom& h, const RelatorSet& r) {
  return std::all_of(r.words().begin(), r.words().end(),
                     [&](const Word& w) { return kills(h, w); });
}

OracleReport check_factorization_against(
    std::span<const RelatorSet> relator_sets, const RelatorSet& tilde,
    const Alphabet& names, std::uint64_t samples, int max_len,
    std::uint64_t seed) {
  OracleReport report;
  for (std::uint64_t t = 0; t < samples; ++t) {
    FreeHom h = random_hom(names, max_len, mix_key(seed, t));
    ++report.tested;
    bool kills_some = std::any_of(
        relator_sets.begin(), relator_sets.end(),
        [&](const RelatorSet& r) { return kills(h, r); });
    bool nonabelian = has_nonabelian_image(h);
    if (nonabelian) ++report.nonabelian_count;
    if (!kills_some && !nonabelian) continue;  // nothing asserted
    bool kills_tilde = kills(h, tilde);
    if (kills_some && !kills_tilde)
      report.violations.push_back({t, "kills some R_i but not tilde R"});
    if (nonabelian && kills_tilde && !kills_some)
      report.violations.push_back(
          {t, "non-abelian image kills tilde R but no R_i"});
  }
  return report;
}

OracleReport check_factorization_equivalence(
    std::span<const RelatorSet> relator_sets, const Alphabet& names,
    std::uint64_t samples, int max_len, std::uint64_t seed) {
  if (relator_sets.size() < 2)
    throw Error("factorization check needs at least two relator sets");
  if (samples == 0) throw Error("factorization check needs samples >= 1");
  TildeResult tilde = tilde_r(relator_sets, names.size());
  return check_factorization_against(relator_sets, tilde.relators, names,
                                     samples, max_len, seed);
}

bool check_quotient(const ProductSubgroup& ps, const Presentation& p) {
  if (p.generators().size() != ps.names().size()) return false;
  return std::all_of(p.relators().begin(), p.relators().end(),
                     [&](const Word& r) { return is_trivial_in_g(ps, r); });
}

FreeHom random_factor_hom(const Factor& factor, int max_len,
                          std::uint64_t seed) {
  if (max_len < 0) throw Error("max image length must be nonnegative");
  FreeHom h;
  h.seed = seed;
  h.max_len = max_len;
  std::size_t k = factor.generators.size();
  h.images.reserve(k);
  if (factor.kind == FactorKind::free_group) {
    for (std::size_t j = 0; j < k; ++j) {
      SplitMix64 g(mix_key(seed, j));
      std::size_t len = g.below(static_cast<std::uint64_t>(max_len) + 1);
      h.images.push_back(random_reduced_word(2, len, g));
    }
  } else {
    // homomorphism from Z^k: all images must commute, so take powers of a
    // common random word
    SplitMix64 g(mix_key(seed, ~std::uint64_t{0}));
    std::size_t len = g.below(static_cast<std::uint64_t>(max_len) + 1);
    Word base = random_reduced_word(2, len, g);
    for (std::size_t j = 0; j < k; ++j) {
      SplitMix64 gj(mix_key(seed, j));
      long long e = static_cast<long long>(gj.below(5)) - 2;  // in [-2, 2]
      Word img;
      Word step = e < 0 ? base.inverse() : base;
      for (long long t = 0; t < (e < 0 ? -e : e); ++t) img = img * step;
      h.images.push_back(std::move(img));
    }
  }
  return h;
}

Word apply_through_factor(const ProductSubgroup& ps, std::size_t factor,
                          const FreeHom& psi, const Word& w) {
  GeneratorTuple v = evaluate(ps, w);
  return apply_hom(psi, v.components[factor]);
}

OracleReport check_projection_kill(const ProductSubgroup& ps,
                                   const Presentation& p,
                                   std::uint64_t samples_per_factor,
                                   int max_len, std::uint64_t seed) {
  OracleReport report;
  for (std::size_t i = 0; i < ps.factors().size(); ++i) {
    for (std::uint64_t t = 0; t < samples_per_factor; ++t) {
      FreeHom psi =
          random_factor_hom(ps.factors()[i], max_len, mix_key(seed, i * 1000003 + t));
      ++report.tested;
      // image of psi o p_i is generated by the images of p_i(S)
      FreeHom composed;
      composed.images.reserve(ps.names().size());
      for (std::size_t j = 0; j < ps.names().size(); ++j)
        composed.images.push_back(
            apply_hom(psi, ps.generators()[j].components[i]));
      if (has_nonabelian_image(composed)) ++report.nonabelian_count;
      for (const Word& r : p.relators()) {
        if (!apply_through_factor(ps, i, psi, r).empty()) {
          report.violations.push_back(
              {t, "projection hom through factor " + std::to_string(i + 1) +
                      " does not kill a relator"});
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace rfeq
