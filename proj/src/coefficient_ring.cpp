#include "gri/coefficient_ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "gri/error.hpp"

namespace gri {

CoefficientRing::CoefficientRing(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw Error(ErrorCode::InvalidArgument, "a coefficient ring needs at least one modulus");
  for (int m : moduli_) {
    if (m < 2) throw Error(ErrorCode::InvalidArgument, "modulus " + std::to_string(m) + " must be >= 2");
    characteristic_ = std::lcm(characteristic_, static_cast<long>(m));
  }
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  std::vector<int> moduli;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorCode::Syntax, "ring '" + std::string(text) + "': " + what + " at position " + std::to_string(pos), pos);
  };
  for (;;) {
    skip();
    if (pos >= text.size() || (text[pos] != 'Z' && text[pos] != 'z')) throw fail("expected 'Z'");
    ++pos;
    if (pos < text.size() && text[pos] == '/') ++pos;
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail("expected modulus");
    long m = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      m = m * 10 + (text[pos++] - '0');
      if (m > 1000000) throw fail("modulus too large");
    }
    moduli.push_back(static_cast<int>(m));
    skip();
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*') throw fail("expected 'x'");
    ++pos;
  }
  return CoefficientRing(std::move(moduli));
}

long CoefficientRing::size() const {
  long s = 1;
  for (int m : moduli_) s *= m;
  return s;
}

std::string CoefficientRing::name() const {
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(moduli_[i]);
  }
  return s;
}

RingElement CoefficientRing::zero() const { return {std::vector<int>(moduli_.size(), 0)}; }
RingElement CoefficientRing::one() const { return from_int(1); }

RingElement CoefficientRing::from_int(long v) const {
  RingElement r{std::vector<int>(moduli_.size())};
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.residues[i] = static_cast<int>(((v % moduli_[i]) + moduli_[i]) % moduli_[i]);
  return r;
}

RingElement CoefficientRing::add(const RingElement& a, const RingElement& b) const {
  RingElement r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.residues[i] = (a.residues[i] + b.residues[i]) % moduli_[i];
  return r;
}

RingElement CoefficientRing::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement CoefficientRing::neg(const RingElement& a) const {
  RingElement r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) r.residues[i] = (moduli_[i] - a.residues[i]) % moduli_[i];
  return r;
}

RingElement CoefficientRing::mul(const RingElement& a, const RingElement& b) const {
  RingElement r = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r.residues[i] = static_cast<int>((static_cast<long>(a.residues[i]) * b.residues[i]) % moduli_[i]);
  }
  return r;
}

bool CoefficientRing::is_zero(const RingElement& a) const {
  for (int v : a.residues)
    if (v != 0) return false;
  return true;
}

bool CoefficientRing::contains(const RingElement& a) const {
  if (a.residues.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (a.residues[i] < 0 || a.residues[i] >= moduli_[i]) return false;
  return true;
}

std::vector<RingElement> CoefficientRing::elements() const {
  std::vector<RingElement> out;
  RingElement r = zero();
  for (;;) {
    out.push_back(r);
    int i = components() - 1;
    while (i >= 0 && ++r.residues[i] == moduli_[i]) r.residues[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::vector<RingElement> CoefficientRing::two_torsion() const {
  // Componentwise: {0} for odd m, {0, m/2} for even m.
  std::vector<RingElement> out{zero()};
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (moduli_[i] % 2 != 0) continue;
    const std::size_t before = out.size();
    for (std::size_t k = 0; k < before; ++k) {
      RingElement r = out[k];
      r.residues[i] = moduli_[i] / 2;
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CoefficientRing::r2_squared_zero() const {
  const auto r2 = two_torsion();
  for (const auto& a : r2)
    for (const auto& b : r2)
      if (!is_zero(mul(a, b))) return false;
  return true;
}

RingElement CoefficientRing::half() const {
  if (characteristic_ % 2 == 0) throw Error(ErrorCode::InvalidArgument, "2 is not invertible in " + name());
  return from_int((characteristic_ + 1) / 2);
}

std::string CoefficientRing::format(const RingElement& a) const {
  if (a.residues.size() == 1) return std::to_string(a.residues[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a.residues[i]);
  }
  return s + ")";
}

}  // namespace gri
