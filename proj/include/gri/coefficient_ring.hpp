#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gri {

// An element of Z/m_1 x ... x Z/m_k, one residue per component.
struct RingElement {
  std::vector<int> residues;
  friend bool operator==(const RingElement&, const RingElement&) = default;
  friend bool operator<(const RingElement& a, const RingElement& b) { return a.residues < b.residues; }
};

// The finite commutative ring Z/m_1 x ... x Z/m_k.
class CoefficientRing {
 public:
  // Every modulus must be >= 2 and the list nonempty; throws Error(InvalidArgument).
  explicit CoefficientRing(std::vector<int> moduli);

  // "Z4", "Z4xZ2", "Z12" (case-insensitive 'z', optional spaces around 'x').
  static CoefficientRing parse(std::string_view text);

  const std::vector<int>& moduli() const { return moduli_; }
  int components() const { return static_cast<int>(moduli_.size()); }
  long characteristic() const { return characteristic_; }
  long size() const;
  std::string name() const;

  RingElement zero() const;
  RingElement one() const;
  RingElement from_int(long v) const;
  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  bool is_zero(const RingElement& a) const;
  bool contains(const RingElement& a) const;

  // All elements in lexicographic residue order.
  std::vector<RingElement> elements() const;

  // {r : 2r = 0}, in lexicographic order.
  std::vector<RingElement> two_torsion() const;

  // Whether every product of two 2-torsion elements vanishes.
  bool r2_squared_zero() const;

  // Inverse of 2 when the characteristic is odd.
  RingElement half() const;

  std::string format(const RingElement& a) const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<int> moduli_;
  long characteristic_ = 1;
};

using RingPtr = std::shared_ptr<const CoefficientRing>;

inline RingPtr share(CoefficientRing r) { return std::make_shared<const CoefficientRing>(std::move(r)); }

}  // namespace gri
