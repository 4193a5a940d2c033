#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyforge/word.hpp"

namespace polyforge {

// A finitely presented group: generators plus relator words. Relators are
// kept freely reduced and nonempty; generators occurring as a g^2 relator
// are flagged as involutions and their words are sign-normalized.
struct Presentation {
  int generator_count = 0;
  std::vector<std::string> generator_names;
  std::vector<Word> relators;

  // True at index k when some relator is exactly g_k g_k.
  std::vector<bool> involution_mask() const;

  // Checks index ranges, free reduction and nonemptiness of relators.
  // Throws InvalidArgumentError on violation.
  void check() const;
};

// Marker for an omitted (infinite) branch label in a string Coxeter diagram.
inline constexpr int kInfiniteLabel = 0;

// Parses the presentation file format:
//
//   # comment
//   gens r0 r1 r2
//   rel r0^2, r1^2, r2^2
//   rel (r0 r1)^4, [ (r0 r1)^2, r2 ]
//
// Words are whitespace-separated generator names with (w)^k power grouping
// (k may be negative) and [a,b] commutator shorthand for a^-1 b^-1 a b.
// Throws ParseError with line/column on malformed input.
Presentation parse_presentation(std::string_view text);

// Normalized form: one `gens` line, one flat `rel` line per relator.
// parse -> serialize -> parse is the identity on this form.
std::string serialize_presentation(const Presentation& p);

// String Coxeter presentation <r_0..r_{d-1} | r_i^2, (r_i r_{i+1})^{p_{i+1}},
// (r_i r_j)^2 for |i-j| >= 2> for labels {p_1,...,p_{d-1}}, d = labels+1.
// A label of kInfiniteLabel omits that power relator. Labels must otherwise
// be >= 2, and d >= 2.
Presentation coxeter_string_presentation(const std::vector<int>& labels);

}  // namespace polyforge
