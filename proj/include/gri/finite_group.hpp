#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gri {

// A named generator of a group, used to address elements by words and to
// specify maps by generator images.
struct NamedGenerator {
  std::string name;
  int element = 0;
};

// A finite group stored as its Cayley table. Elements are the indices
// 0..order-1; table(i, j) is the index of g_i g_j. Immutable once built.
class FiniteGroup {
 public:
  // Validates the identity, inverse, latin-square and associativity laws.
  // Throws Error(InvalidTable) on any violation.
  static FiniteGroup from_table(std::string name,
                                const std::vector<std::vector<int>>& table,
                                std::vector<std::string> labels = {},
                                std::vector<NamedGenerator> generators = {});

  // Same as from_table but skips the O(n^3) associativity scan. Only for
  // tables that are associative by construction (regular representations).
  static FiniteGroup from_trusted_table(std::string name, std::vector<int> flat,
                                        int order,
                                        std::vector<std::string> labels = {},
                                        std::vector<NamedGenerator> generators = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverses_[a]; }
  int power(int a, long exponent) const;
  int element_order(int a) const;

  std::span<const int> row(int a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_,
            static_cast<std::size_t>(order_)};
  }
  const std::vector<int>& inverses() const { return inverses_; }

  const std::string& name() const { return name_; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<NamedGenerator>& generators() const { return generators_; }
  std::optional<int> find_label(std::string_view label) const;

  // Parses a word over the named generators ("a^2b", "b a^-1", "1") and
  // evaluates it. Falls back to an exact label match first.
  int element_from_text(std::string_view text) const;

  // Equality of Cayley tables; names and labels are cosmetic.
  bool same_table(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

  FiniteGroup renamed(std::string name) const;

 private:
  FiniteGroup() = default;
  void finish(bool check_associativity);

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<std::string> labels_;
  std::vector<NamedGenerator> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

// A subgroup as a sorted member list plus a membership mask over the parent.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(int parent_order, std::vector<int> members);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int parent_order() const { return static_cast<int>(mask_.size()); }
  bool contains(int g) const { return mask_[g] != 0; }
  int index() const { return parent_order() / size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.members_ < b.members_; }

 private:
  std::vector<int> members_;
  std::vector<char> mask_;
};

struct SlcInfo {
  int s = 0;
  bool is_lc = false;
};

struct StructureAnalysis {
  Subgroup center;
  std::vector<int> commutator_set;  // sorted, all values g^-1 h^-1 g h
  Subgroup derived_subgroup;
  bool is_abelian = false;
  // Set when the commutator set is exactly {1, s} with s != 1 (LC not required).
  std::optional<int> unique_commutator;
  // Set when additionally the limited-commutativity predicate holds.
  std::optional<SlcInfo> slc;
  bool is_central(int g) const { return center.contains(g); }
};

FiniteGroup make_cyclic(int n, std::string generator = "a");
FiniteGroup make_dihedral(int n);
FiniteGroup make_quaternion(int m);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// Closure of the given generators under products; generators_of lists the
// elements used as generators for naming purposes.
FiniteGroup from_permutations(std::string name,
                              const std::vector<std::vector<int>>& permutations,
                              const std::vector<std::string>& generator_names);

StructureAnalysis analyze(const FiniteGroup& g);

// The limited-commutativity predicate: whenever gh = hg one of g, h, gh is central.
bool has_limited_commutativity(const FiniteGroup& g, const Subgroup& center);

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens);
bool is_subgroup(const FiniteGroup& g, std::span<const int> members);

// All subgroups of index exactly 2, sorted by member list.
std::vector<Subgroup> index2_subgroups(const FiniteGroup& g);

// A subgroup as a group in its own right. `embedding[i]` is the parent index
// of the subgroup's element i; elements are numbered in parent order.
struct InducedGroup {
  FiniteGroup group;
  std::vector<int> embedding;
  std::vector<int> local;  // parent index -> subgroup index or -1
};
InducedGroup induced_group(const FiniteGroup& g, const Subgroup& sub);

// Shortlex word for every element over the named generators, e.g. "a^2b".
std::vector<std::string> word_labels(const FiniteGroup& g);

}  // namespace gri
