#pragma once

#include <cstdint>
#include <vector>

#include "rfeq/naeq.hpp"
#include "rfeq/presentation.hpp"
#include "rfeq/product.hpp"

namespace rfeq {

struct SaturationReport {
  std::size_t seed_relator_count = 0;
  std::vector<Word> added_relators;
  // b1 of the seed, then b1 after each actual addition; non-increasing
  std::vector<int> b1_trace;
  bool terminated = false;
  std::uint64_t scanned = 0;  // candidate words consumed from the stream
};

// The supplied b1 target exceeds what any quotient chain can reach (or,
// for a single free ambient factor, differs from the presented group's b1).
struct InconsistentTargetError : Error {
  explicit InconsistentTargetError(std::string msg, SaturationReport r)
      : Error(std::move(msg)), report(std::move(r)) {}
  SaturationReport report;
};

// The scan budget ran out before b1 reached the target.  A wrong target
// is indistinguishable from a slow enumeration, so this is the only way
// the loop ever gives up.
struct BudgetExhaustedError : Error {
  BudgetExhaustedError(std::string msg, SaturationReport r, Presentation p)
      : Error(std::move(msg)), report(std::move(r)), partial(std::move(p)) {}
  SaturationReport report;
  Presentation partial;
};

struct DefiningEquationsResult {
  Presentation presentation;
  SaturationReport report;
};

// Defining equations for G: seed a presentation with RF_na equal to
// RF_na(G) and G a quotient, then add enumerated trivial words of G until
// b1 reaches the supplied target.  Seed by number of non-abelian factor
// indices n' (n ambient factors):
//   n' >= 2          <S | tilde R>
//   n' = 1, n >= 2   <S | [R1^{S0}, R1]>
//   n' = 1, n = 1    <S | R1>, exact; the loop is skipped
//   n' = 0           <S | [si, sj], i < j>
DefiningEquationsResult defining_equations(const ProductSubgroup& ps,
                                           int b1_target,
                                           std::uint64_t budget);

}  // namespace rfeq
