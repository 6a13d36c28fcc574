#include "rfeq/formats.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace rfeq {

namespace {

[[noreturn]] void fail(const std::string& filename, std::size_t line,
                       const std::string& msg) {
  throw ParseError(filename + ":" + std::to_string(line) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Presentation read_presentation(std::istream& in, const std::string& filename) {
  std::string line;
  std::size_t lineno = 0;
  bool have_gens = false;
  Alphabet gens;
  std::vector<Word> relators;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "gens") {
      if (have_gens) fail(filename, lineno, "duplicate gens line");
      try {
        gens = Alphabet(std::vector<std::string>(toks.begin() + 1, toks.end()));
      } catch (const ParseError& e) {
        fail(filename, lineno, e.what());
      }
      have_gens = true;
    } else if (toks[0] == "rel") {
      if (!have_gens) fail(filename, lineno, "rel before gens line");
      std::string body;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (i > 1) body += ' ';
        body += toks[i];
      }
      try {
        relators.push_back(parse_word(gens, body));
      } catch (const ParseError& e) {
        fail(filename, lineno, e.what());
      }
    } else {
      fail(filename, lineno, "expected 'gens' or 'rel', got '" + toks[0] + "'");
    }
  }
  if (!have_gens) fail(filename, lineno, "missing gens line");
  return Presentation(std::move(gens), std::move(relators));
}

void write_presentation(std::ostream& out, const Presentation& p) {
  out << "gens";
  for (const auto& n : p.generators().names()) out << ' ' << n;
  out << '\n';
  for (const Word& r : p.relators())
    out << "rel " << format_word(p.generators(), r) << '\n';
}

ProductSubgroup read_subgroup(std::istream& in, const std::string& filename) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<Factor> factors;
  std::vector<GeneratorTuple> gens;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "factor") {
      if (!gens.empty()) fail(filename, lineno, "factor line after gen lines");
      if (toks.size() < 2)
        fail(filename, lineno, "factor line needs a kind (free or abelian)");
      FactorKind kind;
      if (toks[1] == "free")
        kind = FactorKind::free_group;
      else if (toks[1] == "abelian")
        kind = FactorKind::free_abelian;
      else
        fail(filename, lineno, "unknown factor kind '" + toks[1] + "'");
      try {
        factors.push_back(
            {kind, Alphabet(std::vector<std::string>(toks.begin() + 2,
                                                     toks.end()))});
      } catch (const ParseError& e) {
        fail(filename, lineno, e.what());
      }
    } else if (toks[0] == "gen") {
      if (factors.empty()) fail(filename, lineno, "gen line before factors");
      std::vector<std::string> segments(1);
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (toks[i] == "|") {
          segments.emplace_back();
        } else {
          if (!segments.back().empty()) segments.back() += ' ';
          segments.back() += toks[i];
        }
      }
      if (segments.size() != factors.size())
        fail(filename, lineno,
             "expected " + std::to_string(factors.size()) +
                 " components, got " + std::to_string(segments.size()));
      GeneratorTuple tup;
      for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].empty())
          fail(filename, lineno, "empty component (use 1 for the identity)");
        try {
          tup.components.push_back(parse_word(factors[i].generators, segments[i]));
        } catch (const ParseError& e) {
          fail(filename, lineno, e.what());
        }
      }
      gens.push_back(std::move(tup));
    } else {
      fail(filename, lineno, "expected 'factor' or 'gen', got '" + toks[0] + "'");
    }
  }
  if (factors.empty()) fail(filename, lineno, "no factor lines");
  try {
    return ProductSubgroup(std::move(factors), std::move(gens),
                           Alphabet::abstract(gens.size()));
  } catch (const ParseError& e) {
    fail(filename, lineno, e.what());
  }
}

void write_subgroup(std::ostream& out, const ProductSubgroup& ps) {
  for (const Factor& f : ps.factors()) {
    out << "factor "
        << (f.kind == FactorKind::free_group ? "free" : "abelian");
    for (const auto& n : f.generators.names()) out << ' ' << n;
    out << '\n';
  }
  for (const auto& tup : ps.generators()) {
    out << "gen";
    for (std::size_t i = 0; i < tup.components.size(); ++i) {
      if (i > 0) out << " |";
      out << ' ' << format_word(ps.factors()[i].generators, tup.components[i]);
    }
    out << '\n';
  }
}

Presentation read_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_presentation(in, path);
}

ProductSubgroup read_subgroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_subgroup(in, path);
}

}  // namespace rfeq
