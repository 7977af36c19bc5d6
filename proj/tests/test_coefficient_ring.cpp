#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gri/coefficient_ring.hpp"
#include "gri/error.hpp"

using namespace gri;

TEST_CASE("parsing and naming") {
  CHECK(CoefficientRing::parse("Z4").moduli() == std::vector<int>{4});
  CHECK(CoefficientRing::parse("Z4xZ2").moduli() == std::vector<int>{4, 2});
  CHECK(CoefficientRing::parse("z4 x z2").name() == "Z4xZ2");
  for (const char* bad : {"", "Z", "Z1", "Zx", "Q4", "Z4x", "Z4xZ"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CoefficientRing::parse(bad), Error);
  }
}

TEST_CASE("characteristic is the lcm of the moduli") {
  CHECK(CoefficientRing::parse("Z4xZ2").characteristic() == 4);
  CHECK(CoefficientRing::parse("Z4xZ6").characteristic() == 12);
  CHECK(CoefficientRing::parse("Z3xZ5").characteristic() == 15);
  CHECK(CoefficientRing::parse("Z12").characteristic() == 12);
}

TEST_CASE("two-torsion") {
  CHECK(CoefficientRing::parse("Z5").two_torsion().size() == 1);
  CHECK(CoefficientRing::parse("Z4").two_torsion().size() == 2);
  CHECK(CoefficientRing::parse("Z4xZ2").two_torsion().size() == 4);
  CHECK(CoefficientRing::parse("Z12").two_torsion().size() == 2);
}

TEST_CASE("R2 squared vanishing against a direct scan") {
  for (const char* spec : {"Z3", "Z4", "Z5", "Z8", "Z12", "Z4xZ2", "Z2xZ3", "Z6", "Z16", "Z8xZ4"}) {
    const auto r = CoefficientRing::parse(spec);
    bool zero = true;
    for (const auto& a : r.elements()) {
      if (!r.is_zero(r.add(a, a))) continue;
      for (const auto& b : r.elements())
        if (r.is_zero(r.add(b, b)) && !r.is_zero(r.mul(a, b))) zero = false;
    }
    CAPTURE(spec);
    CHECK(r.r2_squared_zero() == zero);
  }
  CHECK(CoefficientRing::parse("Z4").r2_squared_zero());
  CHECK(CoefficientRing::parse("Z8").r2_squared_zero());
  CHECK_FALSE(CoefficientRing::parse("Z4xZ2").r2_squared_zero());
  CHECK(CoefficientRing::parse("Z12").r2_squared_zero());
  CHECK(CoefficientRing::parse("Z5").r2_squared_zero());
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(7);
  for (const char* spec : {"Z4", "Z12", "Z4xZ2", "Z3xZ5"}) {
    const auto r = CoefficientRing::parse(spec);
    const auto all = r.elements();
    CHECK(static_cast<long>(all.size()) == r.size());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int k = 0; k < 500; ++k) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto& c = all[pick(rng)];
      CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
      CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
      CHECK(r.add(a, r.neg(a)) == r.zero());
      CHECK(r.mul(a, r.one()) == a);
      CHECK(r.sub(a, b) == r.add(a, r.neg(b)));
    }
  }
}

TEST_CASE("half in odd characteristic") {
  const auto r = CoefficientRing::parse("Z3xZ5");
  CHECK(r.mul(r.half(), r.from_int(2)) == r.one());
  CHECK_THROWS_AS(CoefficientRing::parse("Z4").half(), Error);
}
