#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>

#include "rfeq/formats.hpp"
#include "rfeq/hom.hpp"
#include "rfeq/naeq.hpp"
#include "rfeq/pipeline.hpp"
#include "rfeq/presentation.hpp"
#include "rfeq/stallings.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;  // oracle violation, budget, bad target
constexpr int kExitBadInput = 2;   // malformed input, missing file, usage

int cmd_b1(const std::string& path) {
  rfeq::Presentation p = rfeq::read_presentation_file(path);
  rfeq::SmithForm snf =
      rfeq::smith_normal_form(rfeq::abelianization_matrix(p));
  std::cout << "b1 = " << rfeq::b1(p) << "\n";
  std::cout << "diagonal = (";
  bool first = true;
  for (const auto& d : snf.diagonal) {
    if (d == 0) continue;  // print the invariant factors only
    if (!first) std::cout << ", ";
    std::cout << d;
    first = false;
  }
  std::cout << ")\n";
  return kExitOk;
}

int cmd_present(const std::string& path, std::size_t factor) {
  rfeq::ProductSubgroup ps = rfeq::read_subgroup_file(path);
  if (factor < 1 || factor > ps.factors().size()) {
    std::cerr << path << ": factor index " << factor << " out of range [1, "
              << ps.factors().size() << "]\n";
    return kExitBadInput;
  }
  const rfeq::Factor& f = ps.factors()[factor - 1];
  if (f.kind != rfeq::FactorKind::free_group) {
    std::cerr << path << ": factor " << factor
              << " is free-abelian; tuple presentations are computed for "
                 "free factors only\n";
    return kExitBadInput;
  }
  auto tuple = rfeq::project(ps, factor - 1);
  auto tp = rfeq::presentation_of_tuple(tuple, ps.names(),
                                        f.generators.size());
  std::cout << "# tuple presentation of factor " << factor << " projection\n";
  std::cout << "# basis rank = " << tp.basis_rank << "\n";
  rfeq::write_presentation(
      std::cout, rfeq::Presentation(ps.names(), tp.relators));
  return kExitOk;
}

int cmd_naeq(const std::string& path) {
  rfeq::ProductSubgroup ps = rfeq::read_subgroup_file(path);
  rfeq::NaEquationsResult na = rfeq::na_equations(ps);
  std::cout << "# na-equations\n";
  std::cout << "# factors = " << na.factor_count
            << ", kept = " << na.kept_count << "\n";
  for (std::size_t i = 0; i < na.factor_relators.size(); ++i)
    std::cout << "# |R_" << (i + 1) << "| = " << na.factor_relators[i].size()
              << "\n";
  if (na.kept_count >= 2)
    std::cout << "# raw count = " << na.raw_count << "\n";
  rfeq::write_presentation(std::cout, na.presentation);
  return kExitOk;
}

int cmd_defeq(const std::string& path, int b1_target, std::uint64_t budget) {
  rfeq::ProductSubgroup ps = rfeq::read_subgroup_file(path);
  auto print_report = [&](const rfeq::SaturationReport& r) {
    std::cout << "# saturation report\n";
    std::cout << "# seed relators = " << r.seed_relator_count << "\n";
    std::cout << "# added relators = " << r.added_relators.size() << "\n";
    std::cout << "# b1 trace =";
    for (int v : r.b1_trace) std::cout << ' ' << v;
    std::cout << "\n";
    for (const auto& w : r.added_relators)
      std::cout << "# added: " << rfeq::format_word(ps.names(), w) << "\n";
    std::cout << "# scanned = " << r.scanned << "\n";
    std::cout << "# terminated = " << (r.terminated ? "true" : "false")
              << "\n";
  };
  try {
    auto result = rfeq::defining_equations(ps, b1_target, budget);
    rfeq::write_presentation(std::cout, result.presentation);
    print_report(result.report);
    return kExitOk;
  } catch (const rfeq::BudgetExhaustedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    rfeq::write_presentation(std::cout, e.partial);
    print_report(e.report);
    return kExitViolation;
  } catch (const rfeq::InconsistentTargetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_report(e.report);
    return kExitViolation;
  }
}

int cmd_word_query(const std::string& path, const std::string& word,
                   bool central) {
  rfeq::ProductSubgroup ps = rfeq::read_subgroup_file(path);
  rfeq::Word w = rfeq::parse_word(ps.names(), word);
  bool yes = central ? rfeq::is_central(ps, w) : rfeq::is_trivial_in_g(ps, w);
  std::cout << (yes ? "yes" : "no") << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, std::uint64_t samples, int max_len,
               std::uint64_t seed) {
  rfeq::ProductSubgroup ps = rfeq::read_subgroup_file(path);
  rfeq::NaEquationsResult na = rfeq::na_equations(ps);

  std::uint64_t tested = 0, nonabelian = 0, violations = 0;
  std::cout << "# randomized falsification oracle (sampling, not proof)\n";

  bool quotient_ok = true;
  if (na.kept_count >= 2) {
    // the n' >= 2 relators are trivial in the full spec as well
    quotient_ok = rfeq::check_quotient(ps, na.presentation);
    rfeq::OracleReport fact = rfeq::check_factorization_equivalence(
        na.factor_relators, ps.names(), samples, max_len, seed);
    std::cout << "# factorization: tested = " << fact.tested
              << ", nonabelian = " << fact.nonabelian_count
              << ", violations = " << fact.violations.size() << "\n";
    tested += fact.tested;
    nonabelian += fact.nonabelian_count;
    violations += fact.violations.size();
  } else {
    std::cout << "# factorization: skipped (fewer than two non-abelian "
                 "projections)\n";
  }

  // the factor-through family lives on the restriction: for n' < 2 the
  // na-equations present RF_na(G), whose relators die only there
  rfeq::ProductSubgroup restricted = rfeq::nonabelian_restriction(ps);
  rfeq::OracleReport proj = rfeq::check_projection_kill(
      restricted, na.presentation, samples, max_len,
      rfeq::mix_key(seed, 0x70726f6a));
  std::cout << "# projection-kill: tested = " << proj.tested
            << ", nonabelian = " << proj.nonabelian_count
            << ", violations = " << proj.violations.size() << "\n";
  tested += proj.tested;
  nonabelian += proj.nonabelian_count;
  violations += proj.violations.size();

  if (!quotient_ok) {
    std::cout << "# quotient check failed: a relator is not trivial in G\n";
    ++violations;
  }

  std::cout << "tested = " << tested << "\n";
  std::cout << "nonabelianCount = " << nonabelian << "\n";
  std::cout << "violations = " << violations << "\n";
  return violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Equations for finitely generated subgroups of products of free and "
      "free-abelian groups"};
  app.require_subcommand(1);

  std::string path, word;
  std::size_t factor = 1;
  int b1_target = 0;
  std::uint64_t budget = 100000;
  std::uint64_t samples = 1000;
  int max_len = 4;
  std::uint64_t seed = 1;

  auto* b1cmd = app.add_subcommand("b1", "b1 and SNF diagonal of a presentation");
  b1cmd->add_option("file", path, "presentation file")->required();

  auto* present = app.add_subcommand(
      "present", "presentation of one projection of the generating tuple");
  present->add_option("file", path, "subgroup spec file")->required();
  present->add_option("--factor", factor, "1-based factor index")->required();

  auto* naeq = app.add_subcommand("naeq", "na-equations for RF_na(G)");
  naeq->add_option("file", path, "subgroup spec file")->required();

  auto* defeq =
      app.add_subcommand("defeq", "defining equations for G, given b1(G)");
  defeq->add_option("file", path, "subgroup spec file")->required();
  defeq->add_option("--b1", b1_target, "known b1 of G (never inferred)")
      ->required();
  defeq->add_option("--budget", budget, "max candidate words to scan");

  auto* trivial = app.add_subcommand("trivial", "is the word trivial in G?");
  trivial->add_option("file", path, "subgroup spec file")->required();
  trivial->add_option("--word", word, "word over s1, s2, ...")->required();

  auto* central = app.add_subcommand("central", "is the word central in G?");
  central->add_option("file", path, "subgroup spec file")->required();
  central->add_option("--word", word, "word over s1, s2, ...")->required();

  auto* verify = app.add_subcommand("verify", "randomized oracle checks");
  verify->add_option("file", path, "subgroup spec file")->required();
  verify->add_option("--samples", samples, "homomorphisms per check");
  verify->add_option("--maxlen", max_len, "max image length");
  verify->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (b1cmd->parsed()) return cmd_b1(path);
    if (present->parsed()) return cmd_present(path, factor);
    if (naeq->parsed()) return cmd_naeq(path);
    if (defeq->parsed()) return cmd_defeq(path, b1_target, budget);
    if (trivial->parsed()) return cmd_word_query(path, word, false);
    if (central->parsed()) return cmd_word_query(path, word, true);
    if (verify->parsed()) return cmd_verify(path, samples, max_len, seed);
  } catch (const rfeq::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const rfeq::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitBadInput;
}
