#include "gri/group_ring.hpp"

#include <limits>
#include <stdexcept>

#include "gri/error.hpp"

namespace gri {

namespace {

void check_carrier(const GroupRingElement& a, const GroupRingElement& b) {
  const bool same_group = a.group_ptr() == b.group_ptr() || a.group().same_table(b.group());
  const bool same_ring = a.ring_ptr() == b.ring_ptr() || a.ring() == b.ring();
  if (!same_group || !same_ring) {
    throw Error(ErrorCode::MismatchedCarrier, "group ring elements over " + a.ring().name() + "[" + a.group().name() +
                                                  "] and " + b.ring().name() + "[" + b.group().name() + "]");
  }
}

void check_config(const GroupRingElement& a, const OrientedInvolutionConfig& cfg) {
  if (a.group_ptr() != cfg.group_ptr() && !a.group().same_table(cfg.group())) {
    throw Error(ErrorCode::MismatchedCarrier, "element over " + a.group().name() + " used with a config on " +
                                                  cfg.group().name());
  }
}

// out += a * b for dense coefficient arrays.
void multiply_into(const FiniteGroup& g, const std::vector<int>& moduli, std::span<const int> a,
                   std::span<const int> b, std::span<int> out) {
  const int n = g.order();
  const int k = static_cast<int>(moduli.size());
  std::vector<int> nonzero_b;
  for (int h = 0; h < n; ++h) {
    for (int c = 0; c < k; ++c)
      if (b[h * k + c]) {
        nonzero_b.push_back(h);
        break;
      }
  }
  for (int x = 0; x < n; ++x) {
    bool any = false;
    for (int c = 0; c < k && !any; ++c) any = a[x * k + c] != 0;
    if (!any) continue;
    const auto row = g.row(x);
    for (int h : nonzero_b) {
      const int target = row[h];
      for (int c = 0; c < k; ++c) {
        const long prod = static_cast<long>(a[x * k + c]) * b[h * k + c];
        out[target * k + c] = static_cast<int>((out[target * k + c] + prod) % moduli[c]);
      }
    }
  }
}

}  // namespace

GroupRingElement::GroupRingElement(GroupPtr group, RingPtr ring)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(static_cast<std::size_t>(group_->order()) * ring_->components(), 0) {}

GroupRingElement GroupRingElement::basis(GroupPtr group, RingPtr ring, int element) {
  const RingElement one = ring->one();
  return basis(std::move(group), std::move(ring), element, one);
}

GroupRingElement GroupRingElement::basis(GroupPtr group, RingPtr ring, int element, const RingElement& coeff) {
  GroupRingElement a(std::move(group), std::move(ring));
  a.set_coeff(element, coeff);
  return a;
}

RingElement GroupRingElement::coeff(int g) const {
  const int k = ring_->components();
  return {std::vector<int>(coeffs_.begin() + g * k, coeffs_.begin() + (g + 1) * k)};
}

void GroupRingElement::set_coeff(int g, const RingElement& r) {
  if (!ring_->contains(r)) throw Error(ErrorCode::InvalidArgument, "coefficient not in " + ring_->name());
  const int k = ring_->components();
  for (int c = 0; c < k; ++c) coeffs_[g * k + c] = r.residues[c];
}

void GroupRingElement::add_to_coeff(int g, const RingElement& r) { set_coeff(g, ring_->add(coeff(g), r)); }

bool GroupRingElement::coeff_is_zero(int g) const {
  const int k = ring_->components();
  for (int c = 0; c < k; ++c)
    if (coeffs_[g * k + c]) return false;
  return true;
}

bool GroupRingElement::is_zero() const {
  for (int v : coeffs_)
    if (v) return false;
  return true;
}

std::string GroupRingElement::to_string() const {
  std::string s;
  for (int g = 0; g < group_->order(); ++g) {
    if (coeff_is_zero(g)) continue;
    if (!s.empty()) s += " + ";
    const RingElement c = coeff(g);
    if (!(c == ring_->one())) s += ring_->format(c);
    s += "[" + group_->label(g) + "]";
  }
  return s.empty() ? "0" : s;
}

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  check_carrier(a, b);
  GroupRingElement out = a;
  const auto& m = a.ring().moduli();
  const int k = a.ring().components();
  auto dst = out.raw();
  const auto src = b.raw();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (dst[i] + src[i]) % m[i % k];
  return out;
}

GroupRingElement operator-(const GroupRingElement& a) {
  GroupRingElement out = a;
  const auto& m = a.ring().moduli();
  const int k = a.ring().components();
  auto dst = out.raw();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = (m[i % k] - dst[i]) % m[i % k];
  return out;
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + (-b); }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  check_carrier(a, b);
  GroupRingElement out(a.group_ptr(), a.ring_ptr());
  multiply_into(a.group(), a.ring().moduli(), a.raw(), b.raw(), out.raw());
  return out;
}

GroupRingElement scale(const RingElement& r, const GroupRingElement& a) {
  GroupRingElement out = a;
  for (int g = 0; g < a.group().order(); ++g) out.set_coeff(g, a.ring().mul(r, a.coeff(g)));
  return out;
}

GroupRingElement one(GroupPtr group, RingPtr ring) {
  const int e = group->identity();
  return GroupRingElement::basis(std::move(group), std::move(ring), e);
}

GroupRingElement sharp(const GroupRingElement& a, const OrientedInvolutionConfig& cfg) {
  check_config(a, cfg);
  GroupRingElement out(a.group_ptr(), a.ring_ptr());
  const auto& m = a.ring().moduli();
  const int k = a.ring().components();
  const auto src = a.raw();
  auto dst = out.raw();
  for (int g = 0; g < a.group().order(); ++g) {
    const int target = cfg.star(g);
    for (int c = 0; c < k; ++c) {
      const int v = src[g * k + c];
      dst[target * k + c] = cfg.sign(g) > 0 ? v : (m[c] - v) % m[c];
    }
  }
  return out;
}

bool commutes(const GroupRingElement& u, const GroupRingElement& v) { return u * v == v * u; }

bool anticommutes(const GroupRingElement& u, const GroupRingElement& v) { return (u * v + v * u).is_zero(); }

ElementPartition partition(const OrientedInvolutionConfig& cfg) {
  ElementPartition p;
  for (int g = 0; g < cfg.group().order(); ++g) {
    const bool fixed = cfg.star(g) == g;
    if (cfg.in_kernel(g)) {
      (fixed ? p.s1 : p.s2).push_back(g);
    } else {
      (fixed ? p.s3 : p.s4).push_back(g);
    }
  }
  return p;
}

const char* to_string(ElementKind kind) { return kind == ElementKind::Symmetric ? "symmetric" : "skew"; }

namespace {

void require_compatible(const OrientedInvolutionConfig& cfg) {
  if (!cfg.compatible) {
    const auto c = is_compatible(cfg.involution, cfg.orientation);
    throw Error(ErrorCode::IncompatibleConfig,
                "involution and orientation are not compatible (witness " + cfg.group().label(*c.witness) + ")");
  }
  if (!cfg.involution.is_involutive()) {
    throw Error(ErrorCode::InvalidInvolution, "the anti-automorphism is not an involution of " + cfg.group().name());
  }
}

class SpanBuilder {
 public:
  SpanBuilder(const OrientedInvolutionConfig& cfg, const RingPtr& ring, ElementKind kind)
      : cfg_(cfg), ring_(ring) {
    set_.kind = kind;
  }

  void single(const std::string& family, int g, const RingElement& coeff) {
    push(family, {g}, coeff, GroupRingElement::basis(cfg_.group_ptr(), ring_, g, coeff));
  }

  // g + sign * g*, once per unordered pair.
  void pair(const std::string& family, int g, int sign) {
    const int h = cfg_.star(g);
    if (h < g) return;
    auto a = GroupRingElement::basis(cfg_.group_ptr(), ring_, g);
    auto b = GroupRingElement::basis(cfg_.group_ptr(), ring_, h);
    push(family, {g, h}, ring_->one(), sign > 0 ? a + b : a - b);
  }

  SpanningSet take() { return std::move(set_); }

 private:
  void push(const std::string& family, std::vector<int> elements, const RingElement& coeff, GroupRingElement e) {
    const GroupRingElement image = sharp(e, cfg_);
    const bool ok = set_.kind == ElementKind::Symmetric ? image == e : image == -e;
    if (!ok) {
      throw std::logic_error("spanning generator " + e.to_string() + " from " + family + " is not " +
                             to_string(set_.kind));
    }
    set_.generators.push_back(std::move(e));
    set_.provenance.push_back({family, std::move(elements), coeff});
  }

  const OrientedInvolutionConfig& cfg_;
  RingPtr ring_;
  SpanningSet set_;
};

std::vector<RingElement> nonzero_two_torsion(const CoefficientRing& r) {
  std::vector<RingElement> out;
  for (auto& t : r.two_torsion())
    if (!r.is_zero(t)) out.push_back(std::move(t));
  return out;
}

}  // namespace

SpanningSet skew_spanning_set(const OrientedInvolutionConfig& cfg, const RingPtr& ring) {
  require_compatible(cfg);
  const ElementPartition p = partition(cfg);
  const auto r2 = nonzero_two_torsion(*ring);
  SpanBuilder b(cfg, ring, ElementKind::Skew);
  for (int n : p.s1)
    for (const auto& r : r2) b.single("S1", n, r);
  for (int n : p.s2) b.pair("S2", n, -1);
  for (int x : p.s3) b.single("S3", x, ring->one());
  for (int x : p.s4) b.pair("S4", x, +1);
  return b.take();
}

SpanningSet symmetric_spanning_set(const OrientedInvolutionConfig& cfg, const RingPtr& ring) {
  require_compatible(cfg);
  const ElementPartition p = partition(cfg);
  const auto r2 = nonzero_two_torsion(*ring);
  SpanBuilder b(cfg, ring, ElementKind::Symmetric);
  for (int n : p.s1) b.single("T1", n, ring->one());
  for (int n : p.s2) b.pair("T2", n, +1);
  for (int x : p.s3)
    for (const auto& r : r2) b.single("T3", x, r);
  for (int x : p.s4) b.pair("T4", x, -1);
  return b.take();
}

PairVerdict pairwise_commute(const SpanningSet& s) {
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = i + 1; j < s.generators.size(); ++j)
      if (!commutes(s.generators[i], s.generators[j])) return {false, std::make_pair(i, j)};
  return {};
}

PairVerdict pairwise_anticommute(const SpanningSet& s) {
  for (std::size_t i = 0; i < s.generators.size(); ++i)
    for (std::size_t j = i; j < s.generators.size(); ++j)
      if (!anticommutes(s.generators[i], s.generators[j])) return {false, std::make_pair(i, j)};
  return {};
}

std::uint64_t group_ring_size(const FiniteGroup& g, const CoefficientRing& r) {
  std::uint64_t total = 1;
  const auto base = static_cast<std::uint64_t>(r.size());
  for (int i = 0; i < g.order(); ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    total *= base;
  }
  return total;
}

std::vector<GroupRingElement> bruteforce_elements(const OrientedInvolutionConfig& cfg, const RingPtr& ring,
                                                  ElementKind kind, std::uint64_t budget) {
  const FiniteGroup& g = cfg.group();
  const std::uint64_t total = group_ring_size(g, *ring);
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded, "|R|^|G| = " + (total == std::numeric_limits<std::uint64_t>::max()
                                                                ? std::string("overflow")
                                                                : std::to_string(total)) +
                                               " exceeds the oracle budget " + std::to_string(budget));
  }
  const auto values = ring->elements();
  const int n = g.order();
  std::vector<int> digit(n, 0);
  std::vector<GroupRingElement> out;
  GroupRingElement alpha(cfg.group_ptr(), ring);
  for (;;) {
    for (int x = 0; x < n; ++x) alpha.set_coeff(x, values[digit[x]]);
    const GroupRingElement image = sharp(alpha, cfg);
    if (kind == ElementKind::Symmetric ? image == alpha : image == -alpha) out.push_back(alpha);
    int x = n - 1;
    while (x >= 0 && ++digit[x] == static_cast<int>(values.size())) digit[x--] = 0;
    if (x < 0) break;
  }
  return out;
}

OracleVerdict membrane_bruteforce(const OrientedInvolutionConfig& cfg, const RingPtr& ring, ElementKind kind,
                                  std::uint64_t budget) {
  const auto set = bruteforce_elements(cfg, ring, kind, budget);
  OracleVerdict v;
  v.set_size = set.size();
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i; j < set.size(); ++j) {
      const bool ok = kind == ElementKind::Symmetric ? commutes(set[i], set[j]) : anticommutes(set[i], set[j]);
      if (!ok) {
        v.holds = false;
        v.witness = std::make_pair(set[i], set[j]);
        return v;
      }
    }
  return v;
}

}  // namespace gri
