#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "gri/catalog.hpp"
#include "gri/error.hpp"
#include "gri/group_ring.hpp"

using namespace gri;

namespace {

GroupRingElement random_element(const GroupPtr& g, const RingPtr& r, std::mt19937& rng) {
  GroupRingElement e(g, r);
  const auto all = r->elements();
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int x = 0; x < g->order(); ++x) e.set_coeff(x, all[pick(rng)]);
  return e;
}

std::vector<OrientedInvolutionConfig> all_configs(const GroupPtr& g, bool compatible_only) {
  std::vector<OrientedInvolutionConfig> out;
  const auto invs = involutions(g);
  const auto oris = orientations(g);
  for (std::size_t i = 0; i < invs.size(); ++i)
    for (std::size_t k = 0; k < oris.size(); ++k) {
      OrientedInvolutionConfig c(invs[i], oris[k], static_cast<int>(i), static_cast<int>(k));
      if (c.compatible || !compatible_only) out.push_back(std::move(c));
    }
  return out;
}

// R-linear span, by closing {0} under adding r * generator.
std::set<GroupRingElement> span(const SpanningSet& s, const GroupPtr& g, const RingPtr& r) {
  std::set<GroupRingElement> seen{GroupRingElement(g, r)};
  std::vector<GroupRingElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<GroupRingElement> next;
    for (const auto& e : frontier)
      for (const auto& gen : s.generators)
        for (const auto& c : r->elements()) {
          auto sum = e + scale(c, gen);
          if (seen.insert(sum).second) next.push_back(std::move(sum));
        }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("multiplication is associative and unital") {
  std::mt19937 rng(1);
  const auto g = catalog_group("Q8");
  const auto r = share(CoefficientRing::parse("Z4xZ2"));
  for (int k = 0; k < 200; ++k) {
    const auto a = random_element(g, r, rng);
    const auto b = random_element(g, r, rng);
    const auto c = random_element(g, r, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * one(g, r) == a);
  }
}

TEST_CASE("basis products follow the group table") {
  const auto g = catalog_group("S3");
  const auto r = share(CoefficientRing::parse("Z5"));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(GroupRingElement::basis(g, r, x) * GroupRingElement::basis(g, r, y) ==
            GroupRingElement::basis(g, r, g->mul(x, y)));
}

TEST_CASE("mismatched carriers are rejected") {
  const auto r = share(CoefficientRing::parse("Z4"));
  const auto a = one(catalog_group("C4"), r);
  const auto b = one(catalog_group("C2xC2"), r);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * one(catalog_group("C4"), share(CoefficientRing::parse("Z5"))), Error);
}

TEST_CASE("sharp is anti-multiplicative on random triples") {
  std::mt19937 rng(2024);
  std::vector<std::pair<GroupPtr, std::vector<OrientedInvolutionConfig>>> pool;
  for (const char* name : {"C4", "S3", "D4", "Q8", "C4xC2", "D6"}) {
    const auto g = catalog_group(name);
    pool.emplace_back(g, all_configs(g, false));
  }
  const std::vector<RingPtr> rings{share(CoefficientRing::parse("Z4")), share(CoefficientRing::parse("Z5")),
                                   share(CoefficientRing::parse("Z4xZ2"))};
  int checked = 0;
  for (int k = 0; k < 2000; ++k) {
    const auto& [g, cfgs] = pool[k % pool.size()];
    const auto& cfg = cfgs[rng() % cfgs.size()];
    const auto& r = rings[rng() % rings.size()];
    const auto a = random_element(g, r, rng);
    const auto b = random_element(g, r, rng);
    CHECK(sharp(a * b, cfg) == sharp(b, cfg) * sharp(a, cfg));
    ++checked;
  }
  CHECK(checked == 2000);
}

TEST_CASE("sharp is an involution exactly on compatible configs") {
  const auto r = share(CoefficientRing::parse("Z5"));
  for (const char* name : {"C4", "D4", "Q8", "C2xC2"}) {
    const auto g = catalog_group(name);
    for (const auto& cfg : all_configs(g, false)) {
      bool identity = true;
      for (int x = 0; x < g->order(); ++x) {
        const auto e = GroupRingElement::basis(g, r, x);
        if (sharp(sharp(e, cfg), cfg) != e) identity = false;
      }
      CHECK(identity == cfg.compatible);
    }
  }
}

TEST_CASE("odd characteristic splits into symmetric and skew parts") {
  std::mt19937 rng(3);
  const auto g = catalog_group("D4");
  const auto r = share(CoefficientRing::parse("Z15"));
  const auto h = r->half();
  for (const auto& cfg : all_configs(g, true)) {
    const auto a = random_element(g, r, rng);
    const auto sym = scale(h, a + sharp(a, cfg));
    const auto skew = scale(h, a - sharp(a, cfg));
    CHECK(sym + skew == a);
    CHECK(sharp(sym, cfg) == sym);
    CHECK(sharp(skew, cfg) == -skew);
  }
}

TEST_CASE("partition covers the group") {
  const auto g = catalog_group("Q8");
  for (const auto& cfg : all_configs(g, true)) {
    const auto p = partition(cfg);
    CHECK(p.s1.size() + p.s2.size() + p.s3.size() + p.s4.size() == 8);
    for (int x : p.s1) CHECK((cfg.in_kernel(x) && cfg.star(x) == x));
    for (int x : p.s4) CHECK((!cfg.in_kernel(x) && cfg.star(x) != x));
  }
}

TEST_CASE("spanning sets span exactly the filtered sets") {
  struct Case {
    const char* group;
    const char* ring;
  };
  for (auto [gname, rname] : {Case{"C2", "Z4"}, Case{"C4", "Z4"}, Case{"C2xC2", "Z4"}, Case{"C4", "Z4xZ2"},
                              Case{"S3", "Z3"}, Case{"C4", "Z12"}, Case{"D4", "Z3"}, Case{"C2xC2", "Z8"}}) {
    const auto g = catalog_group(gname);
    const auto r = share(CoefficientRing::parse(rname));
    for (const auto& cfg : all_configs(g, true)) {
      for (auto kind : {ElementKind::Symmetric, ElementKind::Skew}) {
        const auto s = kind == ElementKind::Symmetric ? symmetric_spanning_set(cfg, r) : skew_spanning_set(cfg, r);
        const auto brute = bruteforce_elements(cfg, r, kind, 1000000);
        const auto closure = span(s, g, r);
        CAPTURE(gname);
        CAPTURE(rname);
        CAPTURE(to_string(kind));
        CHECK(closure == std::set<GroupRingElement>(brute.begin(), brute.end()));
      }
    }
  }
}

TEST_CASE("incompatible configs have no spanning sets") {
  const auto g = catalog_group("D4");
  const auto r = share(CoefficientRing::parse("Z4"));
  const OrientedInvolutionConfig cfg(involution_from_assignment(g, "a->a^-1,b->ab", false),
                                     orientation_from_selector(g, "kernel=a^2,b"));
  CHECK_FALSE(cfg.compatible);
  CHECK_THROWS_AS(symmetric_spanning_set(cfg, r), Error);
  CHECK_THROWS_AS(skew_spanning_set(cfg, r), Error);
}

TEST_CASE("symmetric set of (Z/4)[C2] with sigma(g) = -1 and identity involution") {
  const auto g = catalog_group("C2");
  const auto r = share(CoefficientRing::parse("Z4"));
  const OrientedInvolutionConfig cfg(involution_from_assignment(g, ""), orientations(g).at(0));
  REQUIRE(cfg.compatible);
  // alpha = x + y g is symmetric iff -y = y, so x is free and y is in {0, 2}.
  CHECK(bruteforce_elements(cfg, r, ElementKind::Symmetric).size() == 8);
  CHECK(membrane_bruteforce(cfg, r, ElementKind::Symmetric).set_size == 8);
}

TEST_CASE("oracle agrees with the pairwise deciders for |G| <= 4 over Z/4") {
  const auto r = share(CoefficientRing::parse("Z4"));
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    if (g->order() > 4) continue;
    for (const auto& cfg : all_configs(g, true)) {
      CHECK(membrane_bruteforce(cfg, r, ElementKind::Symmetric).holds ==
            pairwise_commute(symmetric_spanning_set(cfg, r)).holds);
      CHECK(membrane_bruteforce(cfg, r, ElementKind::Skew).holds ==
            pairwise_anticommute(skew_spanning_set(cfg, r)).holds);
    }
  }
}

TEST_CASE("oracle budget") {
  const auto g = catalog_group("D4");
  const auto r = share(CoefficientRing::parse("Z4"));
  const auto cfgs = all_configs(g, true);
  CHECK(group_ring_size(*g, *r) == 65536);
  CHECK(group_ring_size(*catalog_group("Q8xC2"), *share(CoefficientRing::parse("Z12"))) == 184884258895036416ULL);
  CHECK_THROWS_AS(bruteforce_elements(cfgs.front(), r, ElementKind::Skew, 1000), Error);
}
