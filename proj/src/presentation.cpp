#include "gri/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gri/error.hpp"

namespace gri {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

[[noreturn]] void syntax(const std::string& what, std::size_t pos) {
  throw Error(ErrorCode::Syntax, what + " at position " + std::to_string(pos), pos);
}

// Splits [begin, end) of text at top-level commas, returning (offset, piece).
std::vector<std::pair<std::size_t, std::string_view>> split_commas(std::string_view text, std::size_t begin,
                                                                   std::size_t end) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t start = begin;
  for (std::size_t i = begin; i <= end; ++i) {
    if (i == end || text[i] == ',') {
      out.emplace_back(start, text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_space);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos >= text.size() || text[pos] != '<') syntax("expected '<'", pos);
  const std::size_t open = pos;
  const std::size_t bar = text.find('|', open);
  if (bar == std::string_view::npos) syntax("expected '|'", text.size());
  const std::size_t close = text.find('>', bar);
  if (close == std::string_view::npos) syntax("expected '>'", text.size());
  for (std::size_t i = close + 1; i < text.size(); ++i)
    if (!is_space(text[i])) syntax("unexpected trailing input", i);

  Presentation p;
  for (const auto& [offset, piece] : split_commas(text, open + 1, bar)) {
    std::size_t a = 0;
    while (a < piece.size() && is_space(piece[a])) ++a;
    std::size_t b = piece.size();
    while (b > a && is_space(piece[b - 1])) --b;
    const std::string_view id = piece.substr(a, b - a);
    if (id.empty()) syntax("expected a generator name", offset + a);
    if (!std::isalpha(static_cast<unsigned char>(id[0]))) syntax("generator names must start with a letter", offset + a);
    for (std::size_t k = 0; k < id.size(); ++k) {
      if (!std::isalnum(static_cast<unsigned char>(id[k])) && id[k] != '_') {
        syntax("invalid character in generator name", offset + a + k);
      }
    }
    if (std::find(p.generators.begin(), p.generators.end(), id) != p.generators.end()) {
      syntax("duplicate generator '" + std::string(id) + "'", offset + a);
    }
    p.generators.emplace_back(id);
  }

  const std::string_view rels = text.substr(bar + 1, close - bar - 1);
  if (blank(rels)) return p;
  for (const auto& [offset, piece] : split_commas(text, bar + 1, close)) {
    const std::size_t eq = piece.find('=');
    if (eq == std::string_view::npos) {
      p.relators.push_back(parse_word(piece, p.generators, offset));
      continue;
    }
    if (piece.find('=', eq + 1) != std::string_view::npos) syntax("more than one '=' in relator", offset + eq);
    const Word lhs = parse_word(piece.substr(0, eq), p.generators, offset);
    const Word rhs = parse_word(piece.substr(eq + 1), p.generators, offset + eq + 1);
    Word rel = lhs;
    const Word inv = inverse_word(rhs);
    rel.insert(rel.end(), inv.begin(), inv.end());
    p.relators.push_back(std::move(rel));
  }
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i) out += ",";
    out += p.generators[i];
  }
  out += " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out += i ? ", " : " ";
    out += format_word(p.relators[i], p.generators);
  }
  out += ">";
  return out;
}

namespace {

// Hasse-Lee-Todd enumeration with coincidence processing. Column 2i acts by
// generator i, column 2i+1 by its inverse.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& p, std::size_t max_cosets)
      : cols_(2 * static_cast<int>(p.generators.size())), max_cosets_(max_cosets) {
    for (const auto& rel : p.relators) {
      std::vector<int> letters;
      for (const auto& l : rel) {
        const int col = 2 * l.generator + (l.exponent < 0 ? 1 : 0);
        for (int k = 0; k < std::abs(l.exponent); ++k) letters.push_back(col);
      }
      if (!letters.empty()) relators_.push_back(std::move(letters));
    }
    new_coset();
  }

  void run() {
    for (int c = 0; c < static_cast<int>(forward_.size()); ++c) {
      if (!live(c)) continue;
      for (const auto& rel : relators_) {
        scan_and_fill(c, rel);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x)
        if (at(c, x) < 0) define(c, x);
    }
  }

  // Standardized table in breadth-first order from coset 0.
  FiniteGroup to_group(const Presentation& p, std::string name) {
    std::vector<int> order_of(forward_.size(), -1);
    std::vector<int> cosets{0};
    std::vector<int> parent{-1}, via{-1};
    order_of[0] = 0;
    for (std::size_t i = 0; i < cosets.size(); ++i) {
      for (int x = 0; x < cols_; ++x) {
        const int d = at(cosets[i], x);
        if (order_of[d] >= 0) continue;
        order_of[d] = static_cast<int>(cosets.size());
        cosets.push_back(d);
        parent.push_back(static_cast<int>(i));
        via.push_back(x);
      }
    }
    const int n = static_cast<int>(cosets.size());
    std::vector<int> flat(static_cast<std::size_t>(n) * n);
    // i * w_j = (i * w_parent(j)) . letter(j)
    for (int i = 0; i < n; ++i) {
      flat[static_cast<std::size_t>(i) * n] = i;
      for (int j = 1; j < n; ++j) {
        const int prefix = flat[static_cast<std::size_t>(i) * n + parent[j]];
        flat[static_cast<std::size_t>(i) * n + j] = order_of[at(cosets[prefix], via[j])];
      }
    }
    std::vector<NamedGenerator> gens;
    for (std::size_t g = 0; g < p.generators.size(); ++g) {
      gens.push_back({p.generators[g], order_of[at(0, 2 * static_cast<int>(g))]});
    }
    return FiniteGroup::from_trusted_table(std::move(name), std::move(flat), n, {}, std::move(gens));
  }

 private:
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  static int inverse_col(int x) { return x ^ 1; }
  bool live(int c) const { return forward_[c] == c; }

  int new_coset() {
    if (forward_.size() >= max_cosets_) {
      throw Error(ErrorCode::CosetLimitExceeded,
                  "coset enumeration exceeded " + std::to_string(max_cosets_) +
                      " cosets (group too large or infinite)");
    }
    const int c = static_cast<int>(forward_.size());
    forward_.push_back(c);
    table_.resize(table_.size() + cols_, -1);
    return c;
  }

  void define(int c, int x) {
    const int d = new_coset();
    at(c, x) = d;
    at(d, inverse_col(x)) = c;
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inverse_col(w[j])) >= 0) b = at(b, inverse_col(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inverse_col(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int k) {
    int r = k;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[k] != r) {
      const int next = forward_[k];
      forward_[k] = r;
      k = next;
    }
    return r;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    const int a = rep(k), b = rep(l);
    if (a == b) return;
    const int lo = std::min(a, b), hi = std::max(a, b);
    forward_[hi] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int e = queue[q];
      for (int x = 0; x < cols_; ++x) {
        const int f = at(e, x);
        if (f < 0) continue;
        at(f, inverse_col(x)) = -1;
        const int e1 = rep(e), f1 = rep(f);
        if (at(e1, x) >= 0) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, inverse_col(x)) >= 0) {
          merge(e1, at(f1, inverse_col(x)), queue);
        } else {
          at(e1, x) = f1;
          at(f1, inverse_col(x)) = e1;
        }
      }
    }
  }

  int cols_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> forward_;
  std::vector<int> table_;
};

}  // namespace

FiniteGroup todd_coxeter(const Presentation& p, std::size_t max_cosets, std::string name) {
  if (max_cosets == 0) throw Error(ErrorCode::InvalidArgument, "max_cosets must be positive");
  CosetEnumerator e(p, max_cosets);
  e.run();
  return e.to_group(p, std::move(name));
}

}  // namespace gri
