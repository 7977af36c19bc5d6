#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gri/coefficient_ring.hpp"
#include "gri/finite_group.hpp"
#include "gri/involutions.hpp"

namespace gri {

// An element sum_g alpha_g g of RG, stored densely: the residue of
// component c of alpha_g lives at index g * components + c.
class GroupRingElement {
 public:
  GroupRingElement(GroupPtr group, RingPtr ring);  // zero

  static GroupRingElement basis(GroupPtr group, RingPtr ring, int element);
  static GroupRingElement basis(GroupPtr group, RingPtr ring, int element, const RingElement& coeff);

  const FiniteGroup& group() const { return *group_; }
  const CoefficientRing& ring() const { return *ring_; }
  const GroupPtr& group_ptr() const { return group_; }
  const RingPtr& ring_ptr() const { return ring_; }

  RingElement coeff(int g) const;
  void set_coeff(int g, const RingElement& r);
  void add_to_coeff(int g, const RingElement& r);
  bool coeff_is_zero(int g) const;
  std::span<const int> raw() const { return coeffs_; }
  std::span<int> raw() { return coeffs_; }

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator<(const GroupRingElement& a, const GroupRingElement& b) { return a.coeffs_ < b.coeffs_; }

 private:
  GroupPtr group_;
  RingPtr ring_;
  std::vector<int> coeffs_;
};

// All binary operations throw Error(MismatchedCarrier) unless both operands
// share the group table and the coefficient ring.
GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement scale(const RingElement& r, const GroupRingElement& a);

GroupRingElement one(GroupPtr group, RingPtr ring);

// alpha^# = sum sigma(g) alpha_g g*.
GroupRingElement sharp(const GroupRingElement& a, const OrientedInvolutionConfig& cfg);

// uv - vu == 0 and uv + vu == 0, computed without materializing both products twice.
bool commutes(const GroupRingElement& u, const GroupRingElement& v);
bool anticommutes(const GroupRingElement& u, const GroupRingElement& v);

// S1 = {n in N : n* = n}, S2 = {n in N : n* != n},
// S3 = {x not in N : x* = x}, S4 = {x not in N : x* != x}.
struct ElementPartition {
  std::vector<int> s1, s2, s3, s4;
};

ElementPartition partition(const OrientedInvolutionConfig& cfg);

enum class ElementKind { Symmetric, Skew };

const char* to_string(ElementKind kind);

struct GeneratorProvenance {
  std::string family;         // "S1".."S4" or "T1".."T4"
  std::vector<int> elements;  // the group element(s) it was built from
  RingElement coefficient;    // 1 unless the family uses 2-torsion coefficients
};

struct SpanningSet {
  ElementKind kind = ElementKind::Symmetric;
  std::vector<GroupRingElement> generators;
  std::vector<GeneratorProvenance> provenance;
};

// Generators of (RG)^- and (RG)^+ respectively. S1/T3 use every nonzero
// 2-torsion coefficient; pair families emit one generator per unordered pair
// {g, g*}. Each generator is checked against sharp. Throws Error(IncompatibleConfig).
SpanningSet skew_spanning_set(const OrientedInvolutionConfig& cfg, const RingPtr& ring);
SpanningSet symmetric_spanning_set(const OrientedInvolutionConfig& cfg, const RingPtr& ring);

struct PairVerdict {
  bool holds = true;
  // Generator indices (i, j), i <= j, of the first failing pair in lexicographic order.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

PairVerdict pairwise_commute(const SpanningSet& s);
PairVerdict pairwise_anticommute(const SpanningSet& s);

inline constexpr std::uint64_t kDefaultOracleBudget = 100000;

// |R|^|G|, saturating at UINT64_MAX.
std::uint64_t group_ring_size(const FiniteGroup& g, const CoefficientRing& r);

// Every alpha in RG with alpha^# = alpha (Symmetric) or -alpha (Skew), by
// exhaustive enumeration. Throws Error(BudgetExceeded) when |R|^|G| > budget.
std::vector<GroupRingElement> bruteforce_elements(const OrientedInvolutionConfig& cfg, const RingPtr& ring,
                                                  ElementKind kind, std::uint64_t budget = kDefaultOracleBudget);

struct OracleVerdict {
  bool holds = true;
  std::size_t set_size = 0;
  std::optional<std::pair<GroupRingElement, GroupRingElement>> witness;
};

// Commutativity (Symmetric) or anticommutativity (Skew) of the whole
// filtered set, checked over every pair including self-pairs.
OracleVerdict membrane_bruteforce(const OrientedInvolutionConfig& cfg, const RingPtr& ring, ElementKind kind,
                                  std::uint64_t budget = kDefaultOracleBudget);

}  // namespace gri
