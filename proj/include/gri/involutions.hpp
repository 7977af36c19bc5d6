#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gri/finite_group.hpp"

namespace gri {

using ElementMap = std::vector<int>;

// An involutive anti-automorphism g -> g* of a finite group. An
// anti-automorphism of higher order can be held too, via anti_automorphism(),
// so that compatibility can be checked on it; everything that builds group
// ring data from a config requires is_involutive().
class GroupInvolution {
 public:
  // Checks (gh)* = h*g* and (g*)* = g exhaustively; throws Error(InvalidInvolution).
  GroupInvolution(GroupPtr group, ElementMap map);
  // Checks (gh)* = h*g* and bijectivity only.
  static GroupInvolution anti_automorphism(GroupPtr group, ElementMap map);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  const ElementMap& map() const { return map_; }
  int operator()(int g) const { return map_[g]; }

  bool is_inversion() const;
  bool is_identity() const;
  bool is_involutive() const { return involutive_; }

  friend bool operator==(const GroupInvolution& a, const GroupInvolution& b) { return a.map_ == b.map_; }

 private:
  GroupInvolution(GroupPtr group, ElementMap map, bool require_involutive);

  GroupPtr group_;
  ElementMap map_;
  bool involutive_ = true;
};

// Returns the offending pair or element when `map` is not an involution
// (or, with require_involutive = false, not an anti-automorphism).
std::optional<std::string> involution_violation(const FiniteGroup& g, const ElementMap& map,
                                                bool require_involutive = true);

GroupInvolution inversion(const GroupPtr& g);

// g -> g if central, g -> s g otherwise. Throws Error(NotSLC).
GroupInvolution canonical_involution(const GroupPtr& g, const StructureAnalysis& analysis);
GroupInvolution canonical_involution(const GroupPtr& g);

// Extends generator images such as "a->a^-1, b->ab" to an anti-automorphism
// via (x g)* = g* x*, then validates it. Unassigned generators are fixed.
// With require_involutive = false an anti-automorphism of any order is accepted.
GroupInvolution involution_from_assignment(const GroupPtr& g, std::string_view assignment,
                                           bool require_involutive = true);

// A homomorphism G -> {+1, -1}; `trivial()` is the constant +1 map.
class Orientation {
 public:
  // Builds the orientation with kernel `kernel`; the kernel must be a
  // subgroup of index 1 or 2. Throws Error(InvalidOrientation).
  Orientation(GroupPtr group, Subgroup kernel);
  static Orientation trivial(GroupPtr group);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int sign(int g) const { return sign_[g]; }
  const std::vector<int>& signs() const { return sign_; }
  const Subgroup& kernel() const { return kernel_; }
  bool is_trivial() const { return kernel_.size() == group_->order(); }

  friend bool operator==(const Orientation& a, const Orientation& b) { return a.kernel_ == b.kernel_; }

 private:
  GroupPtr group_;
  Subgroup kernel_;
  std::vector<int> sign_;
};

// "kernel=a^2,b" (subgroup generated by the listed elements) or a decimal
// index into orientations(g).
Orientation orientation_from_selector(const GroupPtr& g, std::string_view selector);

struct CompatibilityResult {
  bool compatible = true;
  // Lowest-index g with sigma(g) = -1 and sigma(g*) = +1. Such a g exists
  // whenever the pair is incompatible, since g* fails iff g fails.
  std::optional<int> witness;
};

CompatibilityResult is_compatible(const GroupInvolution& inv, const Orientation& ori);

// The same predicate phrased as invariance of the kernel and its complement.
bool kernel_and_complement_invariant(const GroupInvolution& inv, const Orientation& ori);

struct OrientedInvolutionConfig {
  GroupInvolution involution;
  Orientation orientation;
  bool compatible = false;
  int involution_index = -1;   // position in involutions(G), when known
  int orientation_index = -1;  // position in orientations(G), when known

  OrientedInvolutionConfig(GroupInvolution inv, Orientation ori, int inv_index = -1, int ori_index = -1);
  const FiniteGroup& group() const { return involution.group(); }
  const GroupPtr& group_ptr() const { return involution.group_ptr(); }
  int star(int g) const { return involution(g); }
  int sign(int g) const { return orientation.sign(g); }
  bool in_kernel(int g) const { return orientation.kernel().contains(g); }
};

// All bijective homomorphisms G -> G, sorted lexicographically.
std::vector<ElementMap> automorphisms(const FiniteGroup& g);

// A small generating set chosen greedily (largest subgroup gain, lowest index first).
std::vector<int> greedy_generating_set(const FiniteGroup& g);

// All involutions of G, sorted lexicographically by their maps. Built as
// g* = phi(g^-1) for every automorphism phi with phi o phi = id.
std::vector<GroupInvolution> involutions(const GroupPtr& g);

// One orientation per index-2 subgroup, in index2_subgroups order.
std::vector<Orientation> orientations(const GroupPtr& g);

// Compatible-pair counts under every combination of three counting choices.
// Counting over all orientations including the trivial one, and over all
// involutions other than inversion, gives 16 for D4 and 24 for Q8; no other
// combination gives both. That combination is the `selected` one.
struct PairCountInterpretation {
  bool include_trivial_orientation = false;
  bool include_inversion = false;
  bool compatible_only = false;
  long count = 0;
  std::string name() const;
};

struct PairEnumeration {
  int involution_count = 0;
  int orientation_count = 0;  // nontrivial orientations
  // Full cross product involutions x nontrivial orientations with flags.
  std::vector<OrientedInvolutionConfig> pairs;
  std::vector<PairCountInterpretation> interpretations;
  long selected_count() const;
  long compatible_count() const;  // nontrivial orientations, all involutions
};

inline constexpr bool kSelectedIncludesTrivialOrientation = true;
inline constexpr bool kSelectedIncludesInversion = false;

PairEnumeration enumerate_compatible_pairs(const GroupPtr& g);

}  // namespace gri
