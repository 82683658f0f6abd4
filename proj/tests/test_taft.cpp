#include "doctest.h"

#include "taftcross/taft.hpp"

#include <numeric>

using namespace taftcross;

namespace {

TaftDescriptor taft(int m, int k = 1) { return TaftDescriptor(m, root_of_unity(m, k)); }

}  // namespace

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(TaftDescriptor(1, CycScalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(TaftDescriptor(4, CycScalar(-1)), std::invalid_argument);
  CHECK_THROWS_AS(TaftDescriptor(6, root_of_unity(6, 2)), std::invalid_argument);
  CHECK_NOTHROW(TaftDescriptor(6, root_of_unity(6, 5)));
}

TEST_CASE("multiplication relations") {
  for (int m : {2, 3, 4, 6}) {
    const auto d = taft(m);
    const auto h = TaftElement::h(d), x = TaftElement::x(d);
    CHECK(x * h == d.q * (h * x));
    CHECK((TaftElement::monomial(d, 0, m - 1) * x).is_zero());
    CHECK(TaftElement::monomial(d, m - 1, 0) * h == TaftElement::one(d));
  }
  const auto d = taft(3);
  // (h x^2)(h^2 x^0) = q^{2*2} h^3 x^2 = q h^0 x^2 in T_9.
  CHECK(TaftElement::monomial(d, 1, 2) * TaftElement::monomial(d, 2, 0) == TaftElement::monomial(d, 0, 2, d.q));
}

TEST_CASE("comultiplication") {
  const auto d = taft(3);
  const auto one = TaftElement::one(d), h = TaftElement::h(d), x = TaftElement::x(d);
  CHECK(taft_comultiply(one) == TensorElement::pure(one, one));
  CHECK(taft_comultiply(x) == TensorElement::pure(x, h) + TensorElement::pure(one, x));
  const auto x2 = TaftElement::monomial(d, 0, 2);
  const auto h2 = TaftElement::monomial(d, 2, 0);
  const auto hx = TaftElement::monomial(d, 1, 1);
  const TensorElement expected = TensorElement::pure(x2, h2) +
                                 TensorElement::pure((CycScalar(1) + d.q) * x, hx) +
                                 TensorElement::pure(one, x2);
  CHECK(taft_comultiply(x2) == expected);
  for (const auto& g : group_likes(d)) CHECK(taft_comultiply(g) == TensorElement::pure(g, g));
}

TEST_CASE("counit and antipode") {
  const auto d = taft(4);
  CHECK(taft_counit(TaftElement::h(d)).is_one());
  CHECK(taft_counit(TaftElement::x(d)).is_zero());
  CHECK(taft_counit(TaftElement::monomial(d, 2, 1)).is_zero());
  CHECK(taft_antipode(TaftElement::h(d)) == TaftElement::monomial(d, 3, 0));
  CHECK(taft_antipode(TaftElement::x(d)) == TaftElement::monomial(d, 3, 1, -d.q.pow(3)));
  CHECK(taft_antipode(TaftElement::one(d)) == TaftElement::one(d));
}

TEST_CASE("group-likes and skew-primitives") {
  CHECK(group_likes(taft(2)).size() == 2);
  CHECK(group_likes(taft(3)).size() == 3);
  const auto d = taft(3);
  const auto p0 = skew_primitives(d, 0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].is_zero());
  const auto p1 = skew_primitives(d, 1);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0] == TaftElement::h(d) - TaftElement::one(d));
  CHECK(p1[1] == TaftElement::x(d));
  CHECK(skew_primitives(d, 2).size() == 1);
  CHECK_THROWS(skew_primitives(d, 3));
  // Each returned element y satisfies Delta(y) = y (x) h^j + 1 (x) y.
  for (int j = 0; j < 3; ++j)
    for (const auto& y : skew_primitives(d, j))
      CHECK(taft_comultiply(y) ==
            TensorElement::pure(y, TaftElement::monomial(d, j, 0)) + TensorElement::pure(TaftElement::one(d), y));
}

TEST_CASE("Hopf axioms of T(m, q)") {
  for (int m : {2, 3, 4, 6}) {
    for (int k = 1; k < m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const auto report = verify_hopf(hopf_structure(taft(m, k)));
      CHECK_MESSAGE(report.pass(), "m = " << m << ", k = " << k);
      CHECK(report.checks() > 0);
    }
  }
}

TEST_CASE("dual algebra and psi") {
  for (int m : {2, 3, 4}) {
    const auto d = taft(m);
    const TaftDual td = taft_dual(d);
    CHECK(verify_hopf(*td.dual).pass());
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const auto e = TaftElement::monomial(d, i, j);
        CHECK(td.h_star.evaluate(e) == (j == 0 ? d.q.pow(i) : CycScalar()));
        CHECK(td.x_star.evaluate(e) == CycScalar(j == 1 ? 1 : 0));
        CHECK(td.as_dual(td.psi.apply(SparseVec::basis(0))).evaluate(e) == taft_counit(e));
        for (int k = 0; k < m; ++k)
          for (int l = 0; l < m; ++l)
            CHECK(td.pairing(SparseVec::basis(d.index(i, j)), SparseVec::basis(d.index(k, l))) ==
                  CycScalar(i == k && j == l ? 1 : 0));
      }
    CHECK(td.as_dual(td.psi.apply(SparseVec::basis(d.index(0, 1)))).evaluate(TaftElement::monomial(d, 1, 1)).is_one());
  }
}

TEST_CASE("structural isomorphisms") {
  for (int m : {2, 3, 4}) {
    const auto d = taft(m);
    const StructuralIsos isos = structural_isos(d);
    CHECK(rank(isos.psi.columns) == d.dim());
    CHECK(rank(isos.phi.columns) == d.dim());
    CHECK(isos.phi.columns[d.index(1, 0)] == SparseVec::basis(d.index(m - 1, 0)));
    CHECK(isos.phi.columns[d.index(0, 1)] == SparseVec::basis(d.index(m - 1, 1), -d.q.pow(m - 1)));
  }
  const auto d2 = taft(2);
  CHECK(d2.q.pow(1) == d2.q);
}
