#include "gri/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "gri/error.hpp"
#include "gri/words.hpp"

namespace gri {

namespace {

[[noreturn]] void bad_table(const std::string& what) { throw Error(ErrorCode::InvalidTable, what); }

std::vector<std::string> generator_names(const FiniteGroup& g) {
  std::vector<std::string> names;
  for (const auto& gen : g.generators()) names.push_back(gen.name);
  return names;
}

int evaluate(const FiniteGroup& g, const Word& w) {
  int x = g.identity();
  for (const auto& l : w) x = g.mul(x, g.power(g.generators()[l.generator].element, l.exponent));
  return x;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<int>>& table,
                                    std::vector<std::string> labels,
                                    std::vector<NamedGenerator> generators) {
  const int n = static_cast<int>(table.size());
  if (n == 0) bad_table("group table is empty");
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      bad_table("row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), table[i].begin(), table[i].end());
  }
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.table_ = std::move(flat);
  g.labels_ = std::move(labels);
  g.generators_ = std::move(generators);
  g.finish(true);
  return g;
}

FiniteGroup FiniteGroup::from_trusted_table(std::string name, std::vector<int> flat, int order,
                                            std::vector<std::string> labels,
                                            std::vector<NamedGenerator> generators) {
  if (order <= 0 || flat.size() != static_cast<std::size_t>(order) * order) {
    bad_table("table size does not match order " + std::to_string(order));
  }
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = order;
  g.table_ = std::move(flat);
  g.labels_ = std::move(labels);
  g.generators_ = std::move(generators);
  g.finish(false);
  return g;
}

void FiniteGroup::finish(bool check_associativity) {
  const int n = order_;
  for (int v : table_) {
    if (v < 0 || v >= n) bad_table("table entry " + std::to_string(v) + " out of range");
  }
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[mul(i, j)]++) bad_table("row " + std::to_string(i) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[mul(j, i)]++) bad_table("column " + std::to_string(i) + " is not a permutation");
    }
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = mul(e, i) == i && mul(i, e) == i;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) bad_table("table has no two-sided identity");
  inverses_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mul(i, j) == identity_) {
        if (mul(j, i) != identity_) bad_table("element " + std::to_string(i) + " has no two-sided inverse");
        inverses_[i] = j;
        break;
      }
    }
  }
  if (check_associativity) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int ij = mul(i, j);
        for (int k = 0; k < n; ++k) {
          if (mul(ij, k) != mul(i, mul(j, k))) {
            bad_table("associativity fails for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + ")");
          }
        }
      }
  }
  for (const auto& gen : generators_) {
    if (gen.element < 0 || gen.element >= n) bad_table("generator '" + gen.name + "' out of range");
  }
  if (labels_.empty()) {
    if (!generators_.empty()) {
      labels_ = word_labels(*this);
    } else {
      labels_.resize(n);
      for (int i = 0; i < n; ++i) labels_[i] = i == identity_ ? "1" : "g" + std::to_string(i);
    }
  } else if (static_cast<int>(labels_.size()) != n) {
    bad_table("expected " + std::to_string(n) + " labels, got " + std::to_string(labels_.size()));
  }
}

int FiniteGroup::power(int a, long exponent) const {
  if (exponent < 0) {
    a = inv(a);
    exponent = -exponent;
  }
  exponent %= element_order(a);
  int x = identity_;
  for (long i = 0; i < exponent; ++i) x = mul(x, a);
  return x;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::optional<int> FiniteGroup::find_label(std::string_view label) const {
  for (int i = 0; i < order_; ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

int FiniteGroup::element_from_text(std::string_view text) const {
  std::string trimmed(text);
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
  if (auto hit = find_label(trimmed)) return *hit;
  if (generators_.empty()) {
    throw Error(ErrorCode::NotFound, "no element labelled '" + trimmed + "' in " + name_);
  }
  return evaluate(*this, parse_word(trimmed, generator_names(*this)));
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

Subgroup::Subgroup(int parent_order, std::vector<int> members)
    : members_(std::move(members)), mask_(parent_order, 0) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int m : members_) mask_[m] = 1;
}

std::vector<std::string> word_labels(const FiniteGroup& g) {
  const auto names = generator_names(g);
  const bool compact = std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
  std::vector<Word> words(g.order());
  std::vector<char> seen(g.order(), 0);
  std::deque<int> queue{g.identity()};
  seen[g.identity()] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < names.size(); ++i) {
      const int y = g.mul(x, g.generators()[i].element);
      if (seen[y]) continue;
      seen[y] = 1;
      Word w = words[x];
      w.push_back({static_cast<int>(i), 1});
      words[y] = reduce_word(w);
      queue.push_back(y);
    }
  }
  std::vector<std::string> labels(g.order());
  for (int i = 0; i < g.order(); ++i) {
    labels[i] = seen[i] ? format_word(words[i], names, !compact) : "g" + std::to_string(i);
  }
  return labels;
}

FiniteGroup make_cyclic(int n, std::string generator) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be >= 1");
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
  std::vector<NamedGenerator> gens;
  if (n > 1) gens.push_back({generator, 1});
  return FiniteGroup::from_trusted_table("C" + std::to_string(n), std::move(flat), n, {}, std::move(gens));
}

// Element a^k b^e is stored at index k + n*e; b a = a^-1 b.
FiniteGroup make_dihedral(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "dihedral parameter must be >= 2");
  const int order = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int k1 = x % n, e1 = x / n, k2 = y % n, e2 = y / n;
      const int k = ((e1 == 0 ? k1 + k2 : k1 - k2) % n + n) % n;
      flat[static_cast<std::size_t>(x) * order + y] = k + n * ((e1 + e2) % 2);
    }
  std::string name = n == 3 ? "S3" : "D" + std::to_string(n);
  return FiniteGroup::from_trusted_table(std::move(name), std::move(flat), order, {},
                                         {{"a", 1}, {"b", n}});
}

// Q_{4m} = <a, b | a^{2m}, b^2 = a^m, b^-1 a b = a^-1>; a^k b^e at index k + 2m*e.
FiniteGroup make_quaternion(int m) {
  if (m < 2) throw Error(ErrorCode::InvalidArgument, "quaternion parameter must be >= 2");
  const int n = 2 * m;
  const int order = 2 * n;
  std::vector<int> flat(static_cast<std::size_t>(order) * order);
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y) {
      const int k1 = x % n, e1 = x / n, k2 = y % n, e2 = y / n;
      int k = e1 == 0 ? k1 + k2 : k1 - k2;
      int e = e1 + e2;
      if (e == 2) {
        k += m;
        e = 0;
      }
      flat[static_cast<std::size_t>(x) * order + y] = ((k % n + n) % n) + n * e;
    }
  if (m == 2) {
    return FiniteGroup::from_trusted_table("Q8", std::move(flat), order,
                                           {"1", "i", "-1", "-i", "j", "k", "-j", "-k"},
                                           {{"i", 1}, {"j", n}});
  }
  return FiniteGroup::from_trusted_table("Q" + std::to_string(order), std::move(flat), order, {},
                                         {{"a", 1}, {"b", n}});
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      flat[static_cast<std::size_t>(x) * n + y] = g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh);

  std::vector<NamedGenerator> gens;
  std::vector<std::string> used;
  for (const auto& gen : g.generators()) {
    gens.push_back({gen.name, gen.element * nh + h.identity()});
    used.push_back(gen.name);
  }
  for (const auto& gen : h.generators()) {
    std::string name = gen.name;
    if (std::find(used.begin(), used.end(), name) != used.end()) {
      for (char c = 'a'; c <= 'z'; ++c) {
        if (std::find(used.begin(), used.end(), std::string(1, c)) == used.end()) {
          name = std::string(1, c);
          break;
        }
      }
    }
    used.push_back(name);
    gens.push_back({name, g.identity() * nh + gen.element});
  }
  std::vector<std::string> labels(n);
  for (int x = 0; x < n; ++x) labels[x] = "(" + g.label(x / nh) + "," + h.label(x % nh) + ")";
  labels[g.identity() * nh + h.identity()] = "1";
  return FiniteGroup::from_trusted_table(g.name() + "x" + h.name(), std::move(flat), n, std::move(labels),
                                         std::move(gens));
}

FiniteGroup from_permutations(std::string name, const std::vector<std::vector<int>>& permutations,
                              const std::vector<std::string>& generator_names_in) {
  if (permutations.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one permutation");
  const std::size_t points = permutations.front().size();
  std::vector<int> id(points);
  std::iota(id.begin(), id.end(), 0);
  // (p*q)(x) = q(p(x)): apply p first.
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(points);
    for (std::size_t x = 0; x < points; ++x) r[x] = q[p[x]];
    return r;
  };
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& p : permutations) {
      auto next = compose(elements[i], p);
      if (!index.count(next)) {
        index[next] = static_cast<int>(elements.size());
        elements.push_back(std::move(next));
      }
    }
  }
  const int n = static_cast<int>(elements.size());
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) flat[static_cast<std::size_t>(x) * n + y] = index.at(compose(elements[x], elements[y]));
  std::vector<NamedGenerator> gens;
  for (std::size_t i = 0; i < permutations.size(); ++i) {
    gens.push_back({i < generator_names_in.size() ? generator_names_in[i] : "g" + std::to_string(i),
                    index.at(permutations[i])});
  }
  return FiniteGroup::from_trusted_table(std::move(name), std::move(flat), n, {}, std::move(gens));
}

bool has_limited_commutativity(const FiniteGroup& g, const Subgroup& center) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) {
      const int xy = g.mul(x, y);
      if (xy != g.mul(y, x)) continue;
      if (!center.contains(x) && !center.contains(y) && !center.contains(xy)) return false;
    }
  return true;
}

StructureAnalysis analyze(const FiniteGroup& g) {
  const int n = g.order();
  StructureAnalysis out;
  std::vector<int> center;
  std::vector<char> is_commutator(n, 0);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n; ++y) {
      const int xy = g.mul(x, y);
      const int yx = g.mul(y, x);
      if (xy != yx) central = false;
      // x^-1 y^-1 x y = (yx)^-1 (xy)
      is_commutator[g.mul(g.inv(yx), xy)] = 1;
    }
    if (central) center.push_back(x);
  }
  out.center = Subgroup(n, std::move(center));
  for (int x = 0; x < n; ++x)
    if (is_commutator[x]) out.commutator_set.push_back(x);
  out.derived_subgroup = subgroup_generated(g, out.commutator_set);
  out.is_abelian = out.commutator_set.size() == 1;
  if (out.commutator_set.size() == 2) {
    out.unique_commutator = out.commutator_set[0] == g.identity() ? out.commutator_set[1] : out.commutator_set[0];
    if (has_limited_commutativity(g, out.center)) out.slc = SlcInfo{*out.unique_commutator, true};
  }
  return out;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  // Closure under right multiplication by generators suffices in a finite group.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      const int y = g.mul(members[i], s);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g.order(), std::move(members));
}

bool is_subgroup(const FiniteGroup& g, std::span<const int> members) {
  std::vector<char> in(g.order(), 0);
  for (int m : members) {
    if (m < 0 || m >= g.order()) return false;
    in[m] = 1;
  }
  if (!in[g.identity()]) return false;
  for (int x : members)
    for (int y : members)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

std::vector<Subgroup> index2_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  if (n % 2 != 0) return {};
  std::vector<int> gens;
  for (int x = 0; x < n; ++x) {
    gens.push_back(g.mul(x, x));
    for (int y = 0; y < n; ++y) gens.push_back(g.mul(g.inv(g.mul(y, x)), g.mul(x, y)));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  const Subgroup m = subgroup_generated(g, gens);
  if (m.size() == n) return {};

  // G/M is an elementary abelian 2-group; give each coset coordinates in F_2^k.
  std::vector<int> coset_of(n, -1);
  std::vector<int> coset_rep;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    const int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(x);
    for (int y : m.members()) coset_of[g.mul(x, y)] = id;
  }
  const int cosets = static_cast<int>(coset_rep.size());
  std::vector<long> coord(cosets, -1);
  coord[coset_of[g.identity()]] = 0;
  std::vector<int> spanned{coset_of[g.identity()]};
  int rank = 0;
  for (int x = 0; x < n; ++x) {
    if (coord[coset_of[x]] >= 0) continue;
    const std::size_t before = spanned.size();
    for (std::size_t i = 0; i < before; ++i) {
      const int c = coset_of[g.mul(coset_rep[spanned[i]], x)];
      coord[c] = coord[spanned[i]] | (1L << rank);
      spanned.push_back(c);
    }
    ++rank;
  }
  std::vector<Subgroup> out;
  for (long f = 1; f < (1L << rank); ++f) {
    std::vector<int> kernel;
    for (int x = 0; x < n; ++x)
      if (__builtin_popcountl(static_cast<unsigned long>(coord[coset_of[x]] & f)) % 2 == 0) kernel.push_back(x);
    out.emplace_back(n, std::move(kernel));
  }
  std::sort(out.begin(), out.end());
  return out;
}

InducedGroup induced_group(const FiniteGroup& g, const Subgroup& sub) {
  InducedGroup out{FiniteGroup::from_trusted_table("1", {0}, 1), sub.members(), std::vector<int>(g.order(), -1)};
  const int n = sub.size();
  for (int i = 0; i < n; ++i) out.local[sub.members()[i]] = i;
  std::vector<int> flat(static_cast<std::size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(out.embedding[i]);
    for (int j = 0; j < n; ++j) {
      const int local = out.local[g.mul(out.embedding[i], out.embedding[j])];
      if (local < 0) throw Error(ErrorCode::InvalidArgument, "member list is not closed under the group law");
      flat[static_cast<std::size_t>(i) * n + j] = local;
    }
  }
  out.group = FiniteGroup::from_trusted_table(g.name() + "/sub", std::move(flat), n, std::move(labels));
  return out;
}

}  // namespace gri
