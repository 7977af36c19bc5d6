#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gri {

// One syllable g^e of a word, with e != 0.
struct Letter {
  int generator = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Parses a concatenation of `gen` / `gen^int` syllables over the given
// generator names. Names are matched longest-first; an uppercase single
// letter whose lowercase form is a generator (and which is not itself a
// generator) denotes the inverse. "1" is the empty word. Whitespace is
// ignored. `offset` shifts reported error positions.
Word parse_word(std::string_view text, const std::vector<std::string>& generators,
                std::size_t offset = 0);

Word inverse_word(const Word& w);

// Merges adjacent syllables on the same generator and drops zero exponents.
Word reduce_word(const Word& w);

// "a^2 b a^-1"; the empty word prints as "1".
std::string format_word(const Word& w, const std::vector<std::string>& generators,
                        bool spaced = true);

}  // namespace gri
