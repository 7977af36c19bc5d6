// One PASS/FAIL line per acceptance criterion; exit status is nonzero when
// any criterion fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "gri/catalog.hpp"
#include "gri/classifier.hpp"
#include "gri/error.hpp"
#include "gri/presentation.hpp"
#include "oracles.hpp"

using namespace gri;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RingPtr ring(const char* spec) { return share(CoefficientRing::parse(spec)); }

std::vector<OrientedInvolutionConfig> compatible_configs(const GroupPtr& g) {
  std::vector<OrientedInvolutionConfig> out;
  const auto invs = involutions(g);
  const auto oris = orientations(g);
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t k = 0; k < oris.size(); ++k) {
      OrientedInvolutionConfig c(invs[i], oris[k], static_cast<int>(i), static_cast<int>(k));
      if (c.compatible) out.push_back(std::move(c));
    }
  return out;
}

void pair_counts() {
  const auto t0 = Clock::now();
  const long d4 = enumerate_compatible_pairs(catalog_group("D4")).selected_count();
  const long q8 = enumerate_compatible_pairs(catalog_group("Q8")).selected_count();
  const double t = seconds_since(t0);
  std::ostringstream os;
  os << "D4=" << d4 << " Q8=" << q8 << " in " << t << " s";
  report(1, "compatible-pair counts", d4 == 16 && q8 == 24 && t < 1.0, os.str());
}

void incompatibility_witness() {
  const auto d4 = catalog_group("D4");
  const auto inv = involution_from_assignment(d4, "a->a^-1,b->ab", false);
  const auto ori = orientation_from_selector(d4, "kernel=a^2,b");
  const auto c = is_compatible(inv, ori);
  const bool signs = ori.sign(d4->element_from_text("a")) == -1 && ori.sign(d4->element_from_text("b")) == 1;
  const std::string w = c.witness ? d4->label(*c.witness) : "none";
  report(2, "incompatibility witness", signs && !c.compatible && w == "ab",
         std::string(c.compatible ? "compatible" : "incompatible") + ", witness " + w);
}

void cross_validation() {
  const auto t0 = Clock::now();
  std::vector<GroupPtr> groups;
  for (const auto& name : catalog_names())
    if (catalog_group(name)->order() <= 16) groups.push_back(catalog_group(name));
  const std::vector<RingPtr> rings{ring("Z3"), ring("Z4"), ring("Z5"), ring("Z8"), ring("Z12"), ring("Z4xZ2")};
  SurveyOptions opts;
  opts.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto result = survey(groups, rings, opts);
  const double t = seconds_since(t0);
  for (const auto& r : result.reports) {
    if (r.agreement) continue;
    std::printf("  disagreement %s [%s]: %s\n", r.key.to_string().c_str(), r.key.involution_map.c_str(),
                r.error ? r.error->c_str()
                        : ("symmetric bf=" + std::to_string(r.symmetric.bruteforce) + " pred=" +
                           std::to_string(r.symmetric.predicted) + " skew bf=" + std::to_string(r.skew.bruteforce) +
                           " pred=" + std::to_string(r.skew.predicted) + " witness " +
                           r.symmetric.witness.value_or(r.skew.witness.value_or("-")))
                              .c_str());
  }
  std::ostringstream os;
  os << result.summary.agreements << "/" << result.summary.instances << " instances agree, "
     << result.summary.errors << " errors, " << groups.size() << " groups, " << t << " s";
  const bool ok = result.summary.instances > 0 && result.summary.agreements == result.summary.instances && t <= 600;
  report(3, "theorem cross-validation", ok, os.str());
}

void oracle_equivalence() {
  const auto z4 = ring("Z4");
  int configs = 0, mismatches = 0;
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    if (g->order() > 4) continue;
    for (const auto& cfg : compatible_configs(g)) {
      ++configs;
      if (membrane_bruteforce(cfg, z4, ElementKind::Symmetric).holds !=
          pairwise_commute(symmetric_spanning_set(cfg, z4)).holds)
        ++mismatches;
      if (membrane_bruteforce(cfg, z4, ElementKind::Skew).holds !=
          pairwise_anticommute(skew_spanning_set(cfg, z4)).holds)
        ++mismatches;
    }
  }
  const auto c2 = catalog_group("C2");
  const OrientedInvolutionConfig cfg(involution_from_assignment(c2, ""), orientations(c2).at(0));
  const std::size_t sym_size = bruteforce_elements(cfg, z4, ElementKind::Symmetric).size();
  std::ostringstream os;
  os << configs << " configs, " << mismatches << " mismatches, |(Z4[C2])^+| = " << sym_size;
  report(4, "oracle equivalence", configs > 0 && mismatches == 0 && sym_size == 8, os.str());
}

void sharp_laws() {
  std::mt19937 rng(20240601);
  std::vector<std::pair<GroupPtr, std::vector<OrientedInvolutionConfig>>> pool;
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    if (g->order() > 12) continue;
    std::vector<OrientedInvolutionConfig> cfgs;
    const auto invs = involutions(g);
    auto oris = orientations(g);
    oris.push_back(Orientation::trivial(g));
    for (const auto& i : invs)
      for (const auto& o : oris) cfgs.emplace_back(i, o);
    pool.emplace_back(g, std::move(cfgs));
  }
  const std::vector<RingPtr> rings{ring("Z3"), ring("Z4"), ring("Z8"), ring("Z4xZ2")};
  int anti_failures = 0;
  const int trials = 10000;
  for (int k = 0; k < trials; ++k) {
    const auto& [g, cfgs] = pool[rng() % pool.size()];
    const auto& cfg = cfgs[rng() % cfgs.size()];
    const auto& r = rings[rng() % rings.size()];
    GroupRingElement a(g, r), b(g, r);
    const auto elems = r->elements();
    for (int x = 0; x < g->order(); ++x) {
      a.set_coeff(x, elems[rng() % elems.size()]);
      b.set_coeff(x, elems[rng() % elems.size()]);
    }
    if (sharp(a * b, cfg) != sharp(b, cfg) * sharp(a, cfg)) ++anti_failures;
  }

  // sharp o sharp = id exactly on compatible configs.
  int involutive_mismatches = 0;
  const auto z5 = ring("Z5");
  for (const auto& [g, cfgs] : pool)
    for (const auto& cfg : cfgs) {
      bool identity = true;
      for (int x = 0; x < g->order() && identity; ++x) {
        const auto e = GroupRingElement::basis(g, z5, x);
        identity = sharp(sharp(e, cfg), cfg) == e;
      }
      if (identity != cfg.compatible) ++involutive_mismatches;
    }

  const auto d4 = catalog_group("D4");
  const OrientedInvolutionConfig bad(involution_from_assignment(d4, "a->a^-1,b->ab", false),
                                     orientation_from_selector(d4, "kernel=a^2,b"));
  std::string moved;
  for (int x = 0; x < d4->order(); ++x) {
    const auto e = GroupRingElement::basis(d4, z5, x);
    if (sharp(sharp(e, bad), bad) != e) moved += (moved.empty() ? "" : ",") + d4->label(x);
  }
  const int ab = d4->element_from_text("ab");
  const bool moves_ab = sharp(sharp(GroupRingElement::basis(d4, z5, ab), bad), bad) != GroupRingElement::basis(d4, z5, ab);
  std::ostringstream os;
  os << trials << " triples, " << anti_failures << " anti-multiplicativity failures, " << involutive_mismatches
     << " involutivity mismatches, sharp o sharp on the D4 config moves {" << moved << "}";
  report(5, "involution-law properties", anti_failures == 0 && involutive_mismatches == 0 && moves_ab,
         os.str());
}

void known_instances() {
  // Frozen after independent derivation with the brute-force decider.
  struct Fixture {
    const char* group;
    const char* involution;
    const char* kernel;
    const char* ring;
    bool skew_question;
    bool expected;
    const char* expected_case;
  };
  const Fixture fixtures[] = {
      {"Q8", "canonical", "kernel=i", "Z4", false, true, "2"},
      {"Q8", "canonical", "kernel=i", "Z4", true, true, "2"},
      {"Q8", "canonical", "kernel=i", "Z8", true, false, "none"},
      {"C4", "inversion", "kernel=a^2", "Z5", true, false, "none"},
      {"C4", "inversion", "kernel=a^2", "Z4", true, true, "1"},
  };
  int ok = 0, total = 0;
  std::string bad;
  for (const auto& f : fixtures) {
    ++total;
    const auto g = catalog_group(f.group);
    const OrientedInvolutionConfig cfg(std::string(f.involution) == "canonical" ? canonical_involution(g) : inversion(g),
                                       orientation_from_selector(g, f.kernel));
    const auto r = verify_instance(cfg, ring(f.ring));
    const auto& q = f.skew_question ? r.skew : r.symmetric;
    if (q.bruteforce == f.expected && q.predicted == f.expected && q.matched_case == f.expected_case) {
      ++ok;
    } else {
      bad += std::string(" ") + f.group + "/" + f.ring + (f.skew_question ? "/skew" : "/symmetric");
    }
  }
  report(6, "known instances", ok == total, std::to_string(ok) + "/" + std::to_string(total) + " match" + bad);
}

void todd_coxeter_checks() {
  std::string detail;
  bool ok = true;
  const auto d4 = todd_coxeter(parse_presentation("<a,b | a^4, b^2, b a = a^-1 b>"));
  const auto q8 = todd_coxeter(parse_presentation("<a,b | a^4, a^2 b^-2, b^-1 a b a>"));
  const bool d4_iso = oracle::isomorphism(d4, *catalog_group("D4")).has_value();
  const bool q8_iso = oracle::isomorphism(q8, *catalog_group("Q8")).has_value();
  ok = ok && d4.order() == 8 && q8.order() == 8 && d4_iso && q8_iso;
  detail += "D4 order " + std::to_string(d4.order()) + (d4_iso ? " (isomorphic)" : " (not isomorphic)");
  detail += ", Q8 order " + std::to_string(q8.order()) + (q8_iso ? " (isomorphic)" : " (not isomorphic)");
  const int trivial = todd_coxeter(parse_presentation("<a | a>")).order();
  ok = ok && trivial == 1;
  detail += ", trivial order " + std::to_string(trivial);
  bool limit = false;
  try {
    todd_coxeter(parse_presentation("<a,b |>"));
  } catch (const Error& e) {
    limit = e.code() == ErrorCode::CosetLimitExceeded;
  }
  ok = ok && limit;
  detail += limit ? ", <a,b |> hits CosetLimitExceeded" : ", <a,b |> did not hit the coset limit";
  report(7, "Todd-Coxeter", ok, detail);
}

template <class F>
void guard(int id, const char* title, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  guard(1, "compatible-pair counts", pair_counts);
  guard(2, "incompatibility witness", incompatibility_witness);
  guard(3, "theorem cross-validation", cross_validation);
  guard(4, "oracle equivalence", oracle_equivalence);
  guard(5, "involution-law properties", sharp_laws);
  guard(6, "known instances", known_instances);
  guard(7, "Todd-Coxeter", todd_coxeter_checks);
  return failures == 0 ? 0 : 1;
}
