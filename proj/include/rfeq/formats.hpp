#pragma once

#include <iosfwd>
#include <string>

#include "rfeq/presentation.hpp"
#include "rfeq/product.hpp"

namespace rfeq {

// Presentation file (UTF-8 text): one `gens s1 s2 ...` line, then one
// `rel <word>` line per relator; `#` starts a comment.  Writing then
// reading is the identity on presentations (relators are reduced).
Presentation read_presentation(std::istream& in, const std::string& filename);
void write_presentation(std::ostream& out, const Presentation& p);

// Subgroup spec file: one line per factor, `factor free a b` or
// `factor abelian x y`; then one `gen <w1> | ... | <wn>` line per
// generator of S, with `1` for trivial components.  Names s1, s2, ... are
// assigned in order.  Comments start with `#`.
ProductSubgroup read_subgroup(std::istream& in, const std::string& filename);
void write_subgroup(std::ostream& out, const ProductSubgroup& ps);

Presentation read_presentation_file(const std::string& path);
ProductSubgroup read_subgroup_file(const std::string& path);

}  // namespace rfeq
