#include "doctest.h"

#include "taftcross/cyclotomic.hpp"

#include <random>

using namespace taftcross;

namespace {

std::vector<long long> as_ll(const std::vector<BigInt>& v) {
  std::vector<long long> out;
  for (const auto& c : v) out.push_back(static_cast<long long>(c));
  return out;
}

CycScalar random_scalar(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<BigRational> c;
  for (int i = 0; i < euler_phi(order); ++i) c.emplace_back(num(rng), den(rng));
  return CycScalar::from_coeffs(order, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(as_ll(cyclotomic_polynomial(1)) == std::vector<long long>{-1, 1});
  CHECK(as_ll(cyclotomic_polynomial(2)) == std::vector<long long>{1, 1});
  CHECK(as_ll(cyclotomic_polynomial(6)) == std::vector<long long>{1, -1, 1});
  CHECK(as_ll(cyclotomic_polynomial(12)) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(as_ll(cyclotomic_polynomial(15)) == std::vector<long long>{1, -1, 0, 1, -1, 1, 0, -1, 1});
}

TEST_CASE("Phi_N vanishes at zeta_N") {
  for (int n = 1; n <= 24; ++n) {
    const auto phi = cyclotomic_polynomial(n);
    CycScalar acc;
    for (std::size_t i = 0; i < phi.size(); ++i) acc += CycScalar(BigRational(phi[i])) * root_of_unity(n, i);
    CHECK_MESSAGE(acc.is_zero(), "N = " << n);
  }
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(2, 1) == CycScalar(-1));
  CHECK(root_of_unity(4, 2) == CycScalar(-1));
  CHECK(root_of_unity(3, 1) + root_of_unity(3, 2) == CycScalar(-1));
  CHECK(root_of_unity(6, -1) == root_of_unity(6, 5));
  for (int L : {1, 2, 3, 4, 5, 6, 8, 12})
    for (int k = 0; k < L; ++k) {
      CHECK(root_of_unity(L, k).pow(L).is_one());
      CHECK(field_arith(FieldOp::invert, root_of_unity(L, k)) == root_of_unity(L, L - k));
    }
}

TEST_CASE("field arithmetic") {
  const CycScalar z = root_of_unity(3, 1);
  CHECK(field_arith(FieldOp::multiply, CycScalar(1) + z, CycScalar(1) + z * z).is_one());
  CHECK(field_arith(FieldOp::multiply, z, CycScalar()).is_zero());
  CHECK(field_arith(FieldOp::negate, z) + z == CycScalar());
  CHECK_THROWS_AS(field_arith(FieldOp::invert, CycScalar()), std::domain_error);

  std::mt19937 rng(7);
  for (int order : {1, 3, 4, 5, 12, 24}) {
    for (int trial = 0; trial < 40; ++trial) {
      const CycScalar a = random_scalar(rng, order), b = random_scalar(rng, order), c = random_scalar(rng, order);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }
}

TEST_CASE("mixed orders embed into the lcm field") {
  const CycScalar i = root_of_unity(4, 1);
  const CycScalar w = root_of_unity(3, 1);
  const CycScalar p = i * w;
  CHECK(p.order() == 12);
  CHECK(p == root_of_unity(12, 7));
  CHECK(root_of_unity(6, 2) == w);
  CHECK(root_of_unity(12, 4) == w);
  CHECK(w.embed(12).order() == 12);
  CHECK(CycScalar(2) == CycScalar(2).embed(6));
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(CycScalar(-1)) == 2);
  CHECK(multiplicative_order(root_of_unity(6, 1)) == 6);
  CHECK(multiplicative_order(root_of_unity(12, 4)) == 3);
  CHECK(multiplicative_order(root_of_unity(3, 1)) == 3);
  CHECK(multiplicative_order(-root_of_unity(3, 1)) == 6);
  CHECK_FALSE(multiplicative_order(CycScalar(2)).has_value());
  CHECK_FALSE(multiplicative_order(CycScalar(1) + root_of_unity(4, 1)).has_value());
  CHECK_THROWS(multiplicative_order(CycScalar()));
}

TEST_CASE("roots of unity groups") {
  CHECK(roots_of_unity_group(2, 2) == std::vector<CycScalar>{CycScalar(1), CycScalar(-1)});
  CHECK(roots_of_unity_group(1, 6) == std::vector<CycScalar>{CycScalar(1)});
  const auto u3 = roots_of_unity_group(3, 3);
  REQUIRE(u3.size() == 3);
  CHECK(u3[1] == root_of_unity(3, 1));
  CHECK(u3[2] == root_of_unity(3, 2));
  CHECK_THROWS_AS(roots_of_unity_group(4, 6), std::invalid_argument);
  CHECK(nu(3, 3) == 3);
  CHECK(nu(2, 12) == 2);
  CHECK(nu(1, 6) == 1);
  CHECK(nu(2, 6) == 2);
  CHECK(nu(3, 6) == 3);
  CHECK(nu(6, 6) == 6);
  CHECK(nu(6, 3) == 6);
  CHECK(nu(4, 3) == 2);
  CHECK(nu(4, 10) == 2);
}

TEST_CASE("printing and parsing") {
  CHECK(CycScalar(-3).to_string() == "-3");
  CHECK(parse_rational("1/2") == BigRational(1, 2));
  CHECK(parse_rational("-4") == BigRational(-4));
  CHECK_THROWS(parse_rational("x"));
}
