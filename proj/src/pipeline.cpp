#include "rfeq/pipeline.hpp"

#include <cassert>

#include "rfeq/stallings.hpp"

namespace rfeq {

namespace {

Presentation seed_presentation(const ProductSubgroup& ps, std::size_t& n_kept,
                               std::size_t& seed_count, bool& exact) {
  const Alphabet& names = ps.names();
  NaEquationsResult na = na_equations(ps);
  n_kept = na.kept_count;
  exact = false;
  if (na.kept_count >= 2) {
    seed_count = na.presentation.relators().size();
    return na.presentation;
  }
  if (na.kept_count == 1) {
    if (ps.factors().size() == 1) {
      // G itself is a subgroup of a free group; the presentation is exact
      exact = true;
      seed_count = na.presentation.relators().size();
      return na.presentation;
    }
    // duplication rule: R1 in both slots keeps every relator a commutator,
    // so G stays a quotient, and the factorization argument still applies
    const RelatorSet& r1 = na.factor_relators[0];
    RelatorSet seed =
        commutator_set(conjugate_closure(r1, names.size()), r1);
    seed_count = seed.size();
    return Presentation(names, seed.words());
  }
  // all projections abelian: free-abelian seed
  std::vector<Word> rels;
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      rels.push_back(commutator(Word::single(i), Word::single(j)));
  Presentation seed(names, std::move(rels));
  seed_count = seed.relators().size();
  return seed;
}

}  // namespace

DefiningEquationsResult defining_equations(const ProductSubgroup& ps,
                                           int b1_target,
                                           std::uint64_t budget) {
  if (b1_target < 0) throw Error("b1 target must be nonnegative");

  SaturationReport report;
  std::size_t n_kept = 0;
  bool exact = false;
  Presentation p = seed_presentation(ps, n_kept, report.seed_relator_count, exact);

  int current = b1(p);
  report.b1_trace.push_back(current);

  if (exact) {
    // single free ambient factor: b1 of the presented group is b1(G)
    if (current != b1_target)
      throw InconsistentTargetError(
          "b1 target " + std::to_string(b1_target) +
              " does not match the presented group's b1 " +
              std::to_string(current),
          std::move(report));
    report.terminated = true;
    return {std::move(p), std::move(report)};
  }

  if (current < b1_target)
    throw InconsistentTargetError(
        "b1 target " + std::to_string(b1_target) + " exceeds seed b1 " +
            std::to_string(current),
        std::move(report));

  if (current == b1_target) {
    report.terminated = true;
    return {std::move(p), std::move(report)};
  }

  TrivialWordStream stream(ps);
  while (report.scanned < budget) {
    auto scan = stream.next(budget - report.scanned);
    report.scanned += scan.scanned;
    if (!scan.word) break;  // budget consumed (or empty alphabet)
    Presentation next = add_relator(p, *scan.word);
    if (next == p) continue;  // already a relator
    p = std::move(next);
    current = b1(p);
    assert(current >= b1_target);  // one relator drops b1 by at most one
    report.added_relators.push_back(*scan.word);
    report.b1_trace.push_back(current);
    if (current == b1_target) {
      report.terminated = true;
      return {std::move(p), std::move(report)};
    }
  }
  throw BudgetExhaustedError(
      "scan budget of " + std::to_string(budget) +
          " words exhausted at b1 = " + std::to_string(current) +
          " (target " + std::to_string(b1_target) +
          "; a wrong target cannot be distinguished from a slow enumeration)",
      std::move(report), std::move(p));
}

}  // namespace rfeq
