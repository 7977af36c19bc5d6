#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gri/finite_group.hpp"
#include "gri/words.hpp"

namespace gri {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Grammar: '<' gens '|' rels '>' where gens is a comma-separated identifier
// list and each relator is `word` or `word = word` (stored as w1 w2^-1).
// Throws Error(Syntax) with a position, or Error(UnknownGenerator).
Presentation parse_presentation(std::string_view text);

// Inverse of parse_presentation up to relator normalization.
std::string format_presentation(const Presentation& p);

inline constexpr std::size_t kDefaultMaxCosets = 10000;

// Coset enumeration over the trivial subgroup. Elements of the result are
// numbered in breadth-first order of the standardized coset table; the named
// generators of the result are the presentation's generators.
// Throws Error(CosetLimitExceeded) once more than max_cosets cosets are defined.
FiniteGroup todd_coxeter(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets,
                         std::string name = "presented");

}  // namespace gri
