#include "gri/words.hpp"

#include <cctype>
#include <limits>

#include "gri/error.hpp"

namespace gri {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Word parse_word(std::string_view text, const std::vector<std::string>& generators,
                std::size_t offset) {
  Word word;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip();
  if (pos == text.size()) {
    throw Error(ErrorCode::Syntax, "expected a word at position " + std::to_string(offset + pos),
                offset + pos);
  }
  while (pos < text.size()) {
    if (text[pos] == '1') {
      ++pos;
      skip();
      continue;
    }
    std::size_t best = 0;
    int gen = -1;
    int sign = 1;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const auto& name = generators[i];
      if (name.size() > best && text.substr(pos, name.size()) == name) {
        best = name.size();
        gen = static_cast<int>(i);
      }
    }
    if (gen < 0 && std::isupper(static_cast<unsigned char>(text[pos]))) {
      const std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos]))));
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == lower) {
          gen = static_cast<int>(i);
          best = 1;
          sign = -1;
        }
      }
    }
    if (gen < 0) {
      if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t end = pos;
        while (end < text.size() && (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_')) ++end;
        throw Error(ErrorCode::UnknownGenerator,
                    "unknown generator '" + std::string(text.substr(pos, end - pos)) +
                        "' at position " + std::to_string(offset + pos),
                    offset + pos);
      }
      throw Error(ErrorCode::Syntax,
                  "unexpected character '" + std::string(1, text[pos]) + "' at position " +
                      std::to_string(offset + pos),
                  offset + pos);
    }
    pos += best;
    skip();
    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      long s = 1;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        if (text[pos] == '-') s = -1;
        ++pos;
        skip();
      }
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw Error(ErrorCode::Syntax, "expected exponent at position " + std::to_string(offset + pos),
                    offset + pos);
      }
      long value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > std::numeric_limits<int>::max()) {
          throw Error(ErrorCode::Syntax, "exponent too large at position " + std::to_string(offset + pos),
                      offset + pos);
        }
        ++pos;
      }
      exponent = s * value;
      skip();
    }
    exponent *= sign;
    if (exponent != 0) word.push_back({gen, static_cast<int>(exponent)});
  }
  return word;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->generator, -it->exponent});
  return out;
}

Word reduce_word(const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else if (l.exponent != 0) {
      out.push_back(l);
    }
  }
  return out;
}

std::string format_word(const Word& w, const std::vector<std::string>& generators, bool spaced) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && spaced) out += ' ';
    out += generators[w[i].generator];
    if (w[i].exponent != 1) out += "^" + std::to_string(w[i].exponent);
  }
  return out;
}

}  // namespace gri
