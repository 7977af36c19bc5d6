#include "gri/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "gri/error.hpp"

namespace gri {

const char* to_string(SkewCase c) {
  switch (c) {
    case SkewCase::None: return "none";
    case SkewCase::Case1Abelian: return "1";
    case SkewCase::Case2Slc: return "2";
  }
  return "?";
}

const char* to_string(SymmetricCase c) {
  switch (c) {
    case SymmetricCase::None: return "none";
    case SymmetricCase::Abelian: return "abelian";
    case SymmetricCase::Case1: return "1";
    case SymmetricCase::Case2: return "2";
    case SymmetricCase::Case3: return "3";
    case SymmetricCase::Case4: return "4";
  }
  return "?";
}

const char* to_string(UnorientedSkewCase c) {
  switch (c) {
    case UnorientedSkewCase::None: return "none";
    case UnorientedSkewCase::AbelianIdentity: return "abelian-identity";
    case UnorientedSkewCase::AbelianCharFour: return "abelian-char4";
    case UnorientedSkewCase::UniqueCommutatorCharFour: return "unique-commutator-char4";
  }
  return "?";
}

namespace {

void check_preconditions(const OrientedInvolutionConfig& cfg, const CoefficientRing& ring) {
  if (!cfg.compatible) {
    const auto c = is_compatible(cfg.involution, cfg.orientation);
    throw Error(ErrorCode::IncompatibleConfig,
                "involution and orientation are not compatible (witness " + cfg.group().label(*c.witness) + ")");
  }
  if (!cfg.involution.is_involutive()) {
    throw Error(ErrorCode::InvalidInvolution, "the anti-automorphism is not an involution of " + cfg.group().name());
  }
  if (cfg.orientation.is_trivial()) {
    throw Error(ErrorCode::InvalidOrientation, "verification requires a nontrivial orientation");
  }
  if (ring.characteristic() == 2) {
    throw Error(ErrorCode::CharTwoRing, ring.name() + " has characteristic 2");
  }
}

// Structure of G and of N = ker(sigma), in parent indices.
struct Facts {
  StructureAnalysis g;
  InducedGroup n;
  StructureAnalysis n_local;

  explicit Facts(const OrientedInvolutionConfig& cfg)
      : g(analyze(cfg.group())), n(induced_group(cfg.group(), cfg.orientation.kernel())), n_local(analyze(n.group)) {}

  bool n_abelian() const { return n_local.is_abelian; }
  bool n_slc() const { return n_local.slc.has_value(); }
  int n_commutator() const { return n.embedding[n_local.slc->s]; }
  bool central_in_n(int parent) const { return n_local.is_central(n.local[parent]); }
};

template <class Pred>
bool all_outside(const OrientedInvolutionConfig& cfg, Pred pred) {
  for (int x = 0; x < cfg.group().order(); ++x)
    if (!cfg.in_kernel(x) && !pred(x)) return false;
  return true;
}

template <class Pred>
bool all_inside(const OrientedInvolutionConfig& cfg, Pred pred) {
  for (int x = 0; x < cfg.group().order(); ++x)
    if (cfg.in_kernel(x) && !pred(x)) return false;
  return true;
}

bool is_canonical_on_group(const OrientedInvolutionConfig& cfg, const StructureAnalysis& a) {
  if (!a.slc) return false;
  const FiniteGroup& g = cfg.group();
  for (int x = 0; x < g.order(); ++x) {
    const int expected = a.is_central(x) ? x : g.mul(a.slc->s, x);
    if (cfg.star(x) != expected) return false;
  }
  return true;
}

bool is_canonical_on_kernel(const OrientedInvolutionConfig& cfg, const Facts& f) {
  if (!f.n_slc()) return false;
  const int s = f.n_commutator();
  return all_inside(cfg, [&](int x) {
    return cfg.star(x) == (f.central_in_n(x) ? x : cfg.group().mul(s, x));
  });
}

// n* = a^-1 n a for every n in N and every a outside N.
bool star_is_conjugation_on_kernel(const OrientedInvolutionConfig& cfg) {
  const FiniteGroup& g = cfg.group();
  for (int a = 0; a < g.order(); ++a) {
    if (cfg.in_kernel(a)) continue;
    const bool ok = all_inside(cfg, [&](int n) { return cfg.star(n) == g.mul(g.mul(g.inv(a), n), a); });
    if (!ok) return false;
  }
  return true;
}

}  // namespace

SkewPrediction classify_skew(const OrientedInvolutionConfig& cfg, const CoefficientRing& ring) {
  check_preconditions(cfg, ring);
  if (ring.characteristic() != 4) return {};
  const Facts f(cfg);
  const bool moves_outside = all_outside(cfg, [&](int x) { return cfg.star(x) != x; });
  if (f.g.is_abelian && all_inside(cfg, [&](int n) { return cfg.star(n) == n; }) && moves_outside) {
    return {true, SkewCase::Case1Abelian};
  }
  if (f.g.slc && is_canonical_on_group(cfg, f.g) && moves_outside) return {true, SkewCase::Case2Slc};
  return {};
}

SymmetricPrediction classify_symmetric(const OrientedInvolutionConfig& cfg, const CoefficientRing& ring) {
  check_preconditions(cfg, ring);
  const bool r2_zero = ring.r2_squared_zero();
  const bool char4 = ring.characteristic() == 4;
  const Facts f(cfg);
  const FiniteGroup& g = cfg.group();
  if (f.g.is_abelian) return {true, SymmetricCase::Abelian};

  if (r2_zero && f.n_abelian() && all_outside(cfg, [&](int x) { return cfg.star(x) == x; }) &&
      star_is_conjugation_on_kernel(cfg)) {
    return {true, SymmetricCase::Case1};
  }
  if (char4 && f.n_abelian() && f.g.unique_commutator) {
    const int s = *f.g.unique_commutator;
    if (all_outside(cfg, [&](int x) { return cfg.star(x) == g.mul(s, x); }) && star_is_conjugation_on_kernel(cfg)) {
      return {true, SymmetricCase::Case2};
    }
  }
  if (r2_zero && f.n_slc() && is_canonical_on_kernel(cfg, f)) {
    const int s = f.n_commutator();
    for (int a = 0; a < g.order(); ++a) {
      if (!cfg.in_kernel(a) && f.g.is_central(a) && cfg.star(a) == g.mul(s, a)) return {true, SymmetricCase::Case3};
    }
  }
  if (char4 && f.n_slc() && f.g.slc && is_canonical_on_group(cfg, f.g) && is_canonical_on_kernel(cfg, f)) {
    return {true, SymmetricCase::Case4};
  }
  return {};
}

UnorientedSkewPrediction classify_skew_unoriented(const GroupInvolution& inv, const CoefficientRing& ring) {
  if (ring.characteristic() == 2) throw Error(ErrorCode::CharTwoRing, ring.name() + " has characteristic 2");
  const FiniteGroup& g = inv.group();
  const bool char4 = ring.characteristic() == 4;
  const StructureAnalysis a = analyze(g);
  if (a.is_abelian && inv.is_identity()) return {true, UnorientedSkewCase::AbelianIdentity};
  if (!char4) return {};
  auto star_in_identity_or_shift = [&](int s) {
    for (int x = 0; x < g.order(); ++x)
      if (inv(x) != x && inv(x) != g.mul(s, x)) return false;
    return true;
  };
  if (a.is_abelian) {
    for (int s = 0; s < g.order(); ++s) {
      if (g.mul(s, s) == g.identity() && star_in_identity_or_shift(s)) return {true, UnorientedSkewCase::AbelianCharFour};
    }
    return {};
  }
  if (a.unique_commutator && star_in_identity_or_shift(*a.unique_commutator)) {
    return {true, UnorientedSkewCase::UniqueCommutatorCharFour};
  }
  return {};
}

GroupInvolution restrict_to_kernel(const OrientedInvolutionConfig& cfg) {
  InducedGroup n = induced_group(cfg.group(), cfg.orientation.kernel());
  ElementMap map(n.group.order());
  for (int i = 0; i < n.group.order(); ++i) {
    const int image = n.local[cfg.star(n.embedding[i])];
    if (image < 0) throw Error(ErrorCode::IncompatibleConfig, "the kernel is not invariant under the involution");
    map[i] = image;
  }
  return GroupInvolution(share(std::move(n.group)), std::move(map));
}

std::string InstanceKey::to_string() const {
  return group + "/inv" + std::to_string(involution) + "/ker" + kernel + "/" + ring;
}

InstanceKey make_instance_key(const OrientedInvolutionConfig& cfg, const CoefficientRing& ring) {
  InstanceKey key;
  const FiniteGroup& g = cfg.group();
  key.group = g.name();
  key.involution = cfg.involution_index;
  for (int x = 0; x < g.order(); ++x) {
    if (x) key.involution_map += ", ";
    key.involution_map += g.label(x) + "->" + g.label(cfg.star(x));
  }
  key.kernel = "{";
  for (std::size_t i = 0; i < cfg.orientation.kernel().members().size(); ++i) {
    if (i) key.kernel += ",";
    key.kernel += g.label(cfg.orientation.kernel().members()[i]);
  }
  key.kernel += "}";
  key.ring = ring.name();
  return key;
}

namespace {

std::string describe_witness(const SpanningSet& s, std::size_t i, std::size_t j) {
  auto one = [&](std::size_t k) { return s.provenance[k].family + ":" + s.generators[k].to_string(); };
  return one(i) + " & " + one(j);
}

}  // namespace

ClassificationReport verify_instance(const OrientedInvolutionConfig& cfg, const RingPtr& ring,
                                     std::uint64_t oracle_budget) {
  check_preconditions(cfg, *ring);
  ClassificationReport report;
  report.key = make_instance_key(cfg, *ring);
  report.compatible = cfg.compatible;

  const SpanningSet sym = symmetric_spanning_set(cfg, ring);
  const PairVerdict sym_verdict = pairwise_commute(sym);
  const SymmetricPrediction sym_pred = classify_symmetric(cfg, *ring);
  report.symmetric.bruteforce = sym_verdict.holds;
  report.symmetric.predicted = sym_pred.commutes;
  report.symmetric.matched_case = to_string(sym_pred.matched_case);
  report.symmetric.generator_count = sym.generators.size();
  if (sym_verdict.witness) report.symmetric.witness = describe_witness(sym, sym_verdict.witness->first, sym_verdict.witness->second);

  const SpanningSet skew = skew_spanning_set(cfg, ring);
  const PairVerdict skew_verdict = pairwise_anticommute(skew);
  const SkewPrediction skew_pred = classify_skew(cfg, *ring);
  report.skew.bruteforce = skew_verdict.holds;
  report.skew.predicted = skew_pred.anticommutes;
  report.skew.matched_case = to_string(skew_pred.matched_case);
  report.skew.generator_count = skew.generators.size();
  if (skew_verdict.witness) report.skew.witness = describe_witness(skew, skew_verdict.witness->first, skew_verdict.witness->second);

  report.agreement = report.symmetric.bruteforce == report.symmetric.predicted &&
                     report.skew.bruteforce == report.skew.predicted;

  if (oracle_budget > 0 && group_ring_size(cfg.group(), *ring) <= oracle_budget) {
    const OracleVerdict o_sym = membrane_bruteforce(cfg, ring, ElementKind::Symmetric, oracle_budget);
    const OracleVerdict o_skew = membrane_bruteforce(cfg, ring, ElementKind::Skew, oracle_budget);
    report.symmetric.oracle = o_sym.holds;
    report.symmetric.oracle_set_size = o_sym.set_size;
    report.skew.oracle = o_skew.holds;
    report.skew.oracle_set_size = o_skew.set_size;
    report.agreement = report.agreement && o_sym.holds == report.symmetric.bruteforce &&
                       o_skew.holds == report.skew.bruteforce;
  }
  return report;
}

SurveyResult survey(const std::vector<GroupPtr>& groups, const std::vector<RingPtr>& rings,
                    const SurveyOptions& options) {
  std::vector<OrientedInvolutionConfig> configs;
  for (const auto& g : groups) {
    const auto invs = involutions(g);
    const auto oris = orientations(g);
    for (std::size_t i = 0; i < invs.size(); ++i)
      for (std::size_t k = 0; k < oris.size(); ++k) {
        OrientedInvolutionConfig cfg(invs[i], oris[k], static_cast<int>(i), static_cast<int>(k));
        if (cfg.compatible) configs.push_back(std::move(cfg));
      }
  }

  SurveyResult result;
  const std::size_t total = configs.size() * rings.size();
  result.reports.resize(total);
  std::atomic<std::size_t> next{0};
  std::vector<char> done(total, 0);
  std::size_t emitted = 0;
  std::mutex emit_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const auto& cfg = configs[i / rings.size()];
      const auto& ring = rings[i % rings.size()];
      ClassificationReport& row = result.reports[i];
      try {
        row = verify_instance(cfg, ring, options.oracle_budget);
      } catch (const std::exception& e) {
        row.key = make_instance_key(cfg, *ring);
        row.compatible = cfg.compatible;
        row.agreement = false;
        row.error = e.what();
      }
      std::lock_guard lock(emit_mutex);
      done[i] = 1;
      while (emitted < total && done[emitted]) {
        if (options.on_report) options.on_report(result.reports[emitted]);
        ++emitted;
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : result.reports) {
    ++result.summary.instances;
    if (r.error) {
      ++result.summary.errors;
    } else if (r.agreement) {
      ++result.summary.agreements;
    } else {
      ++result.summary.disagreements;
    }
  }
  return result;
}

}  // namespace gri
