#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tbc/duality.hpp"

using namespace tbc;

namespace {

void check_all_pass(const CheckReport& rep) {
  for (const auto& e : rep.entries) {
    CAPTURE(rep.suite);
    CAPTURE(e.name);
    CAPTURE(e.expected);
    CAPTURE(e.observed);
    CHECK(e.pass);
  }
}

}  // namespace

TEST_CASE("twisted Poincare symmetry") {
  // degenerate pass on the hyperbolic model (all spaces vanish)
  BasicComplex c1(ModelSpec::carriere(3), 16);
  check_all_pass(poincare_check(c1));
  // (1,2,1) on the minimal model
  BasicComplex c2(ModelSpec::taut(), 16);
  check_all_pass(poincare_check(c2));
  // (1,4,6,4,1) on the product
  BasicComplex c3(ModelSpec::product(ModelSpec::taut(), ModelSpec::taut()),
                  8);
  check_all_pass(poincare_check(c3));
}

TEST_CASE("untwisted duality across the two flavors") {
  BasicComplex c1(ModelSpec::carriere(3), 16);
  check_all_pass(twisted_duality_check(c1));
  BasicComplex c2(ModelSpec::taut(), 16);
  check_all_pass(twisted_duality_check(c2));
}

TEST_CASE("Serre-type duality of the twisted Dolbeault table") {
  for (auto model : {ModelSpec::carriere(3), ModelSpec::taut()}) {
    BasicComplex c(model, 16);
    check_all_pass(kodaira_serre_check(c));
  }
  BasicComplex cp(ModelSpec::product(ModelSpec::taut(), ModelSpec::taut()),
                  6);
  check_all_pass(kodaira_serre_check(cp));
}

TEST_CASE("graded dimensions refine into bidegrees") {
  BasicComplex c1(ModelSpec::carriere(3), 16);
  check_all_pass(hodge_sum_check(c1));
  BasicComplex c2(ModelSpec::taut(), 16);
  auto rep = hodge_sum_check(c2);
  check_all_pass(rep);
  // h^1 = 2 = 1 + 1 on the minimal model
  bool found = false;
  for (const auto& e : rep.entries)
    if (e.name == "degree 1 refines") {
      CHECK(e.expected == "2");
      found = true;
    }
  CHECK(found);
  BasicComplex c3(ModelSpec::product(ModelSpec::taut(), ModelSpec::taut()),
                  6);
  auto rep3 = hodge_sum_check(c3);
  check_all_pass(rep3);
  for (const auto& e : rep3.entries)
    if (e.name == "degree 2 refines") CHECK(e.expected == "6");
}

TEST_CASE("tautness equivalence through the twisted kernel") {
  BasicComplex c1(ModelSpec::carriere(3), 16);
  check_all_pass(tautness_check(c1));
  BasicComplex c2(ModelSpec::taut(), 16);
  check_all_pass(tautness_check(c2));
  // oscillating mean curvature with zero mean is still taut, detected by the
  // coupled kernel
  BasicComplex c3(ModelSpec::suspension(0.0, FourierScalar::cosine(1, 0.1)),
                  12);
  auto rep = tautness_check(c3);
  check_all_pass(rep);
  CHECK(rep.entries[0].observed == "h0=1 hq=1");
  // nontaut perturbed model has empty twisted kernels
  BasicComplex c4(
      ModelSpec::suspension(std::log(2.0), FourierScalar::cosine(1, 0.2)),
      12);
  check_all_pass(tautness_check(c4));
}

TEST_CASE("Lefschetz power ranks between twisted harmonic spaces") {
  BasicComplex c1(ModelSpec::carriere(3), 12);
  check_all_pass(hard_lefschetz_check(c1));
  BasicComplex c2(ModelSpec::taut(), 12);
  check_all_pass(hard_lefschetz_check(c2));
  BasicComplex c3(ModelSpec::product(ModelSpec::taut(), ModelSpec::taut()),
                  6);
  auto rep = hard_lefschetz_check(c3);
  check_all_pass(rep);
  // the middle power carries degree 1 onto degree 3 bijectively (4 -> 4) and
  // the square carries degree 0 onto degree 4 (1 -> 1)
  bool bij13 = false, bij04 = false;
  for (const auto& e : rep.entries) {
    if (e.name == "L^1 on twisted degree 1 is bijective") {
      CHECK(e.observed == "4");
      bij13 = true;
    }
    if (e.name == "L^2 on twisted degree 0 is bijective") {
      CHECK(e.observed == "1");
      bij04 = true;
    }
  }
  CHECK(bij13);
  CHECK(bij04);
}

TEST_CASE("pointwise primitive structure") {
  BasicComplex c1(ModelSpec::carriere(3), 4);
  auto rep1 = primitive_decomposition_check(c1);
  check_all_pass(rep1);
  // n = 1: nothing primitive above degree 1, and all of degree 1 primitive
  for (const auto& e : rep1.entries) {
    if (e.name == "no primitive forms in degree 2") CHECK(e.observed == "0");
    if (e.name == "primitive rank in degree 1") CHECK(e.observed == "2");
  }
  BasicComplex c2(ModelSpec::product(ModelSpec::taut(), ModelSpec::taut()),
                  2);
  auto rep2 = primitive_decomposition_check(c2);
  check_all_pass(rep2);
  // n = 2: the middle degree splits off one Lefschetz direction: 6 - 1 = 5
  for (const auto& e : rep2.entries)
    if (e.name == "primitive rank in degree 2") CHECK(e.observed == "5");
}

TEST_CASE("closed forms inside the conjugated image") {
  for (auto model : {ModelSpec::carriere(3), ModelSpec::taut()}) {
    BasicComplex c(model, 32);
    auto rep = ddc_lemma_check(c);
    for (const auto& e : rep.entries) {
      CAPTURE(e.name);
      CHECK(e.pass);
      CHECK(e.residual <= 1e-10);
    }
  }
  BasicComplex cp(ModelSpec::product(ModelSpec::taut(), ModelSpec::taut()),
                  4);
  check_all_pass(ddc_lemma_check(cp));
}

TEST_CASE("holomorphic kernels equal harmonic spaces on (r,0)") {
  BasicComplex c1(ModelSpec::carriere(3), 16);
  auto rep1 = holomorphic_harmonic_check(c1);
  check_all_pass(rep1);
  for (const auto& e : rep1.entries)
    if (e.name.find("(1,0)") != std::string::npos) CHECK(e.observed == "0");
  BasicComplex c2(ModelSpec::taut(), 16);
  auto rep2 = holomorphic_harmonic_check(c2);
  check_all_pass(rep2);
  for (const auto& e : rep2.entries) CHECK(e.expected == "1");
  // coupled model
  BasicComplex c3(ModelSpec::suspension(0.0, FourierScalar::cosine(1, 0.1)),
                  10);
  check_all_pass(holomorphic_harmonic_check(c3));
}

TEST_CASE("untwisted symmetries break on the nontaut model") {
  BasicComplex c(ModelSpec::carriere(3), 16);
  auto rep = negative_controls(c);
  REQUIRE(rep.entries.size() == 3);
  check_all_pass(rep);  // controls pass exactly when the symmetry fails
  for (const auto& e : rep.entries) CHECK(e.observed != "symmetric");
  // on a taut model the controls do not apply
  BasicComplex ct(ModelSpec::taut(), 8);
  CHECK(negative_controls(ct).entries.empty());
}

TEST_CASE("full suite on the three reference models") {
  for (auto model : {ModelSpec::carriere(3), ModelSpec::taut()}) {
    BasicComplex c(model, 16);
    auto rep = duality_suite(c);
    check_all_pass(rep);
  }
  BasicComplex cp(ModelSpec::product(ModelSpec::taut(), ModelSpec::taut()),
                  8);
  check_all_pass(duality_suite(cp));
}

TEST_CASE("full suite on coupled models") {
  BasicComplex c(
      ModelSpec::suspension(std::log(2.0), FourierScalar::cosine(1, 0.2)),
      10);
  check_all_pass(duality_suite(c));
  BasicComplex ct(ModelSpec::suspension(0.0, FourierScalar::cosine(1, 0.1)),
                  10);
  check_all_pass(duality_suite(ct));
}
