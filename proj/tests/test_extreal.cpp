#include <catch2/catch.hpp>

#include "normcat/extreal.hpp"

using normcat::ExtReal;

TEST_CASE("extended reals reject invalid payloads") {
  CHECK_THROWS_AS(ExtReal(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal(std::nan("")), std::invalid_argument);
  CHECK_THROWS_AS(ExtReal::infinity().finite_value(), std::logic_error);
}

TEST_CASE("addition saturates at infinity") {
  ExtReal two(2.0), three(3.0);
  CHECK((two + three).raw() == 5.0);
  CHECK((two + ExtReal::infinity()).is_inf());
  CHECK((ExtReal::infinity() + ExtReal::infinity()).is_inf());
}

TEST_CASE("total order puts every finite value below infinity") {
  CHECK(ExtReal(1e300) < ExtReal::infinity());
  CHECK(ExtReal::zero() <= ExtReal(0.0));
  CHECK(ExtReal::infinity() <= ExtReal::infinity());
}

TEST_CASE("tolerant comparison saturates") {
  CHECK(leq_with_tol(ExtReal(1.0), ExtReal(1.0), 0.0));
  CHECK(leq_with_tol(ExtReal(1.0 + 1e-12), ExtReal(1.0), 1e-9));
  CHECK_FALSE(leq_with_tol(ExtReal(1.1), ExtReal(1.0), 1e-9));
  CHECK(leq_with_tol(ExtReal::infinity(), ExtReal::infinity(), 0.0));
  CHECK_FALSE(leq_with_tol(ExtReal::infinity(), ExtReal(1.0), 1e9));
}

TEST_CASE("deltas flag the indeterminate inf - inf case") {
  auto d1 = normcat::abs_delta(ExtReal(3.0), ExtReal(1.0));
  CHECK(d1.value.raw() == 2.0);
  CHECK_FALSE(d1.warned);
  auto d2 = normcat::abs_delta(ExtReal::infinity(), ExtReal(1.0));
  CHECK(d2.value.is_inf());
  CHECK_FALSE(d2.warned);
  auto d3 = normcat::abs_delta(ExtReal::infinity(), ExtReal::infinity());
  CHECK(d3.value.is_inf());
  CHECK(d3.warned);
}

TEST_CASE("rendering is fixed-format") {
  CHECK(ExtReal::infinity().str() == "inf");
  CHECK(ExtReal(0.5).str() == "0.5");
  CHECK(ExtReal(1.0 / 3.0).str() == "0.33333333333333331");
}
