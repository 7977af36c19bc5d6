#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gri/catalog.hpp"
#include "gri/error.hpp"
#include "gri/finite_group.hpp"
#include "gri/involutions.hpp"
#include "oracles.hpp"

using namespace gri;

namespace {

std::vector<std::vector<int>> table_of(const FiniteGroup& g) {
  std::vector<std::vector<int>> t;
  for (int a = 0; a < g.order(); ++a) t.emplace_back(g.row(a).begin(), g.row(a).end());
  return t;
}

// 2-rank of G / <squares, commutators>, computed from the oracle's subgroup list.
int frattini_two_rank(const FiniteGroup& g) {
  std::vector<int> gens;
  for (int x = 0; x < g.order(); ++x) {
    gens.push_back(g.mul(x, x));
    for (int y = 0; y < g.order(); ++y) gens.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  }
  const int q = g.order() / subgroup_generated(g, gens).size();
  return static_cast<int>(std::lround(std::log2(q)));
}

}  // namespace

TEST_CASE("catalog covers the required groups") {
  for (const char* name : {"C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8", "C12",
                           "D6", "A4", "D8", "Q16", "D4xC2", "Q8xC2"}) {
    CAPTURE(name);
    CHECK(find_catalog_group(name).has_value());
  }
  CHECK(catalog_group("C2^2")->order() == 4);
  CHECK(catalog_group("C2^3")->order() == 8);
  CHECK_THROWS_AS(catalog_group("nope"), Error);
}

TEST_CASE("catalog orders") {
  const std::vector<std::pair<const char*, int>> expected{{"S3", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}, {"D6", 12},
                                                          {"D8", 16}, {"Q16", 16}, {"D4xC2", 16}, {"Q8xC2", 16}};
  for (auto [name, n] : expected) CHECK(catalog_group(name)->order() == n);
}

TEST_CASE("table validation rejects a mutated entry") {
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    if (g->order() < 3) continue;
    auto t = table_of(*g);
    CHECK_NOTHROW(FiniteGroup::from_table("copy", t));
    std::swap(t[1][1], t[1][2]);
    CAPTURE(name);
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", t), Error);
    auto u = table_of(*g);
    u[1][2] = u[1][1];
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", u), Error);
  }
}

TEST_CASE("non-associative latin square is rejected") {
  // A loop of order 5 that is not a group.
  const std::vector<std::vector<int>> t{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup::from_table("loop", t);
    FAIL("expected InvalidTable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidTable);
  }
}

TEST_CASE("analysis of D4 and Q8") {
  const auto d4 = catalog_group("D4");
  const auto a = analyze(*d4);
  CHECK_FALSE(a.is_abelian);
  CHECK(a.center.size() == 2);
  CHECK(a.commutator_set.size() == 2);
  REQUIRE(a.unique_commutator);
  CHECK(*a.unique_commutator == d4->element_from_text("a^2"));
  CHECK(a.slc.has_value());

  const auto q8 = catalog_group("Q8");
  const auto b = analyze(*q8);
  REQUIRE(b.slc);
  CHECK(q8->label(b.slc->s) == "-1");
}

TEST_CASE("SLC status across the catalog") {
  // SLC groups of order <= 16 are exactly the nonabelian ones with G' = {1, s}
  // and the LC property; checked here against a direct scan.
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    const auto a = analyze(*g);
    std::vector<int> comms;
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y) comms.push_back(g->mul(g->mul(g->inv(x), g->inv(y)), g->mul(x, y)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    CAPTURE(name);
    CHECK(comms == a.commutator_set);
    bool lc = true;
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y)
        if (g->mul(x, y) == g->mul(y, x) && !a.is_central(x) && !a.is_central(y) && !a.is_central(g->mul(x, y)))
          lc = false;
    const bool slc = !a.is_abelian && comms.size() == 2 && lc;
    CHECK(a.slc.has_value() == slc);
  }
  CHECK(analyze(*catalog_group("D6")).slc.has_value() == false);
  CHECK(analyze(*catalog_group("A4")).slc.has_value() == false);
  CHECK(analyze(*catalog_group("D4xC2")).slc.has_value() == true);
}

TEST_CASE("direct product with C2 preserves commutativity") {
  const auto c2 = catalog_group("C2");
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    if (g->order() > 8) continue;
    CHECK(analyze(direct_product(*g, *c2)).is_abelian == analyze(*g).is_abelian);
  }
}

TEST_CASE("index-2 subgroups match exhaustive subgroup enumeration") {
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    CAPTURE(name);
    const auto subs = index2_subgroups(*g);
    std::vector<std::vector<int>> got;
    for (const auto& s : subs) got.push_back(s.members());
    CHECK(got == oracle::index2_subgroups(*g));
    CHECK(static_cast<long>(subs.size()) == (1L << frattini_two_rank(*g)) - 1);
  }
}

TEST_CASE("subgroup generation") {
  const auto d4 = catalog_group("D4");
  CHECK(subgroup_generated(*d4, std::vector<int>{}).size() == 1);
  CHECK(subgroup_generated(*d4, std::vector<int>{d4->element_from_text("a")}).size() == 4);
  const auto q8 = catalog_group("Q8");
  CHECK(subgroup_generated(*q8, std::vector<int>{q8->element_from_text("i"), q8->element_from_text("j")}).size() == 8);
}

TEST_CASE("canonical involution of every SLC catalog group satisfies the laws") {
  for (const auto& name : catalog_names()) {
    const auto g = catalog_group(name);
    if (!analyze(*g).slc) {
      CHECK_THROWS_AS(canonical_involution(g), Error);
      continue;
    }
    const auto inv = canonical_involution(g);
    for (int x = 0; x < g->order(); ++x) {
      CHECK(inv(inv(x)) == x);
      for (int y = 0; y < g->order(); ++y) CHECK(inv(g->mul(x, y)) == g->mul(inv(y), inv(x)));
    }
  }
}

TEST_CASE("induced subgroup") {
  const auto d4 = catalog_group("D4");
  const auto subs = index2_subgroups(*d4);
  for (const auto& s : subs) {
    const auto n = induced_group(*d4, s);
    CHECK(n.group.order() == 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(n.embedding[n.group.mul(i, j)] == d4->mul(n.embedding[i], n.embedding[j]));
  }
}

TEST_CASE("element text") {
  const auto q8 = catalog_group("Q8");
  CHECK(q8->label(q8->element_from_text("i j")) == "k");
  CHECK(q8->label(q8->element_from_text("-1")) == "-1");
  CHECK(q8->element_from_text("i^4") == q8->identity());
  const auto d4 = catalog_group("D4");
  CHECK(d4->label(d4->element_from_text("a b")) == "ab");
}
