#include "doctest.h"

#include "taftcross/morphism.hpp"

#include <algorithm>
#include <numeric>

using namespace taftcross;

namespace {

PresentationParams ts(int n, int m, int qbar_exp, int q_exp, int sigma_exp) {
  const int d = std::gcd(n, m);
  return PresentationParams::t_sigma(n, m, root_of_unity(n, qbar_exp), root_of_unity(m, q_exp),
                                     root_of_unity(d, sigma_exp));
}

SparseVec mono(const HopfStructure& s, int i, int j, int k, int l) { return SparseVec::basis(s.index_of({i, j, k, l})); }

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("identity quadruple") {
  const Factorization f = factorization(ts(2, 4, 1, 1, 1));
  const Quadruple qd = make_quadruple({FamilyTag::diagonal, 1, 1}, f.pair, f.pair);
  CHECK(check_quadruple(qd, f.pair, f.pair).pass());
  CHECK(quadruple_to_morphism(qd, f, f) == identity_map(f.structure));
}

TEST_CASE("diagonal quadruple on generators") {
  const Factorization f = factorization(ts(3, 3, 1, 1, 1));
  const CycScalar beta(2), eta = -root_of_unity(3, 1);
  const LinearMap psi = quadruple_to_morphism(make_quadruple({FamilyTag::diagonal, beta, eta}, f.pair, f.pair), f, f);
  const HopfStructure& S = *f.structure;
  CHECK(psi.apply(mono(S, 0, 1, 0, 0)) == beta * mono(S, 0, 1, 0, 0));
  CHECK(psi.apply(mono(S, 0, 0, 0, 1)) == eta * mono(S, 0, 0, 0, 1));
  CHECK(psi.apply(mono(S, 1, 0, 1, 0)) == mono(S, 1, 0, 1, 0));
  CHECK(is_hopf_iso(psi));
}

TEST_CASE("swap quadruple maps x to X") {
  const Factorization f = factorization(ts(3, 3, 1, 1, 1));
  const Factorization g = factorization(ts(3, 3, 1, 1, 2));
  const CycScalar gamma(-1), zeta(2);
  const LinearMap psi = quadruple_to_morphism(make_quadruple({FamilyTag::swap_i, zeta, gamma}, f.pair, g.pair), f, g);
  const HopfStructure& S = *g.structure;
  CHECK(psi.apply(mono(*f.structure, 0, 0, 0, 1)) == gamma * mono(S, 0, 1, 0, 0));
  CHECK(psi.apply(mono(*f.structure, 0, 1, 0, 0)) == zeta * mono(S, 0, 0, 0, 1));
  CHECK(is_hopf_iso(psi));
}

TEST_CASE("conditions C1-C8 for diagonal and swap quadruples") {
  const Factorization s1 = factorization(ts(3, 3, 1, 1, 1));
  const Factorization s2 = factorization(ts(3, 3, 1, 1, 2));
  const Factorization s0 = factorization(ts(3, 3, 1, 1, 0));
  CHECK(check_quadruple(make_quadruple({FamilyTag::diagonal, 2, -1}, s1.pair, s1.pair), s1.pair, s1.pair).pass());

  const AxiomReport bad = check_quadruple(make_quadruple({FamilyTag::diagonal, 1, 1}, s1.pair, s2.pair), s1.pair, s2.pair);
  REQUIRE(bad.has_failure("C7"));
  bool at_h_x = false;
  for (const auto& f : bad.failures())
    if (f.axiom == "C7" && f.location == std::vector<std::string>{"h", "X"}) at_h_x = true;
  CHECK(at_h_x);

  // sigma sigma' = 1
  CHECK(check_quadruple(make_quadruple({FamilyTag::swap_i, 1, 1}, s1.pair, s2.pair), s1.pair, s2.pair).pass());
  CHECK_FALSE(check_quadruple(make_quadruple({FamilyTag::swap_i, 1, 1}, s1.pair, s1.pair), s1.pair, s1.pair).pass());
  CHECK(check_quadruple(make_quadruple({FamilyTag::swap_i, 1, 1}, s0.pair, s0.pair), s0.pair, s0.pair).pass());
}

TEST_CASE("non-coalgebra components are rejected") {
  const Factorization f = factorization(ts(3, 3, 2, 1, 1));  // qbar != q
  const Quadruple qd = make_quadruple({FamilyTag::swap_i, 1, 1}, f.pair, f.pair);
  CHECK(check_quadruple(qd, f.pair, f.pair).has_failure("p-coalgebra"));
  CHECK_THROWS_AS(quadruple_to_morphism(qd, f, f), std::invalid_argument);
}

TEST_CASE("quadruple conditions agree with the direct morphism check") {
  const std::vector<CycScalar> grid = {1, -1, 2};
  std::vector<std::pair<PresentationParams, PresentationParams>> cases = {
      {ts(2, 2, 1, 1, 0), ts(2, 2, 1, 1, 1)},
      {ts(2, 4, 1, 1, 1), ts(2, 4, 1, 1, 0)},
      {ts(3, 3, 1, 1, 1), ts(3, 3, 1, 1, 2)},
      {ts(3, 3, 2, 1, 1), ts(3, 3, 2, 1, 1)},
      {PresentationParams::q_alpha(3, root_of_unity(3, 1), 1), ts(3, 3, 2, 1, 0)},
      {PresentationParams::q_alpha(2, -1, 1), PresentationParams::q_alpha(2, -1, 1)},
  };
  for (const auto& [ps, pt] : cases) {
    const Factorization src = factorization(ps), tgt = factorization(pt);
    std::vector<FamilyTag> tags = {FamilyTag::diagonal};
    if (ps.n == ps.m && ps.qbar == ps.q) tags = {FamilyTag::diagonal, FamilyTag::swap_i, FamilyTag::swap_ii, FamilyTag::swap_iii};
    for (FamilyTag tag : tags)
      for (const auto& x : grid)
        for (const auto& y : grid) {
          const QuadrupleFamily fam{tag, x, y};
          CAPTURE(ps.name());
          CAPTURE(pt.name());
          CAPTURE(fam.to_string());
          const Quadruple qd = make_quadruple(fam, src.pair, tgt.pair);
          const bool by_conditions = check_quadruple(qd, src.pair, tgt.pair).pass();
          const bool direct = hopf_morphism_report(quadruple_to_morphism(qd, src, tgt)).pass();
          CHECK(by_conditions == direct);
        }
  }
}

TEST_CASE("isomorphism decisions for T^sigma") {
  SUBCASE("m != n or qbar != q: iff sigma = sigma'") {
    for (const auto& [n, m, qe] : {std::tuple{2, 4, 1}, std::tuple{3, 3, 2}, std::tuple{3, 2, 1}}) {
      const int d = std::gcd(n, m);
      for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
          CAPTURE(n);
          CAPTURE(m);
          const IsoResult r = iso_search(factorization(ts(n, m, qe, 1, s)), factorization(ts(n, m, qe, 1, t)));
          CHECK(r.isomorphic() == (s == t));
        }
    }
  }
  SUBCASE("m = n, qbar = q: iff sigma' in {sigma, sigma^-1}") {
    for (int n : {2, 3, 4})
      for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
          CAPTURE(n);
          CAPTURE(s);
          CAPTURE(t);
          const IsoResult r = iso_search(factorization(ts(n, n, 1, 1, s)), factorization(ts(n, n, 1, 1, t)));
          CHECK(r.isomorphic() == (s == t || (s + t) % n == 0));
          if (r.isomorphic() && s != t) CHECK(r.witness_family->tag == FamilyTag::swap_i);
        }
  }
  CHECK_THROWS_AS(iso_search(factorization(ts(2, 2, 1, 1, 0)), factorization(ts(2, 4, 1, 1, 0))), std::invalid_argument);
}

TEST_CASE("Q^1 is not isomorphic to any T^sigma") {
  for (int n : {2, 3}) {
    const CycScalar q = root_of_unity(n, 1);
    const Factorization Q = factorization(PresentationParams::q_alpha(n, q, 1));
    for (const auto& sigma : roots_of_unity_group(n, n)) {
      const Factorization T = factorization(PresentationParams::t_sigma(n, n, q.pow(n - 1), q, sigma));
      const IsoResult r = iso_search(Q, T);
      CHECK_FALSE(r.isomorphic());
      REQUIRE_FALSE(r.refutations.empty());
      for (const auto& ref : r.refutations) {
        CAPTURE(ref.family.to_string());
        CHECK((has(ref.failed, "C7") || has(ref.failed, "bijectivity")));
        if (ref.family.tag == FamilyTag::diagonal) {
          REQUIRE_FALSE(ref.first_failures.empty());
          CHECK(ref.first_failures[0].location == std::vector<std::string>{"x", "X"});
          CHECK(ref.first_failures[0].residual == "-1 + H");
        }
      }
    }
  }
}

TEST_CASE("Q^alpha is isomorphic to Q^1") {
  for (int n : {2, 3}) {
    const CycScalar q = root_of_unity(n, 1);
    const Factorization one = factorization(PresentationParams::q_alpha(n, q, 1));
    for (const CycScalar& alpha : {CycScalar(-1), CycScalar(2), CycScalar(parse_rational("1/2"))}) {
      CAPTURE(n);
      CAPTURE(alpha.to_string());
      const Factorization qa = factorization(PresentationParams::q_alpha(n, q, alpha));
      const LinearMap phi = q_normalization(qa, one);
      CHECK(is_hopf_iso(phi));
      CHECK(phi.apply(mono(*qa.structure, 0, 1, 0, 0)) == alpha * mono(*one.structure, 0, 1, 0, 0));
    }
  }
}

TEST_CASE("Drinfeld double is isomorphic to Q^1") {
  for (int n : {2, 3}) {
    const CycScalar q = root_of_unity(n, 1);
    const DrinfeldDouble dd = drinfeld_double(n, q);
    const Factorization minus = factorization(PresentationParams::q_alpha(n, q, -1));
    const Factorization one = factorization(PresentationParams::q_alpha(n, q, 1));
    const LinearMap w = compose(q_normalization(minus, one), double_to_transported(dd, minus.structure));
    CHECK(is_hopf_iso(w));
  }
}

TEST_CASE("zero on X is not an isomorphism") {
  const Factorization f = factorization(PresentationParams::q_alpha(2, -1, 1));
  const Factorization g = factorization(ts(2, 2, 1, 1, 0));
  const LinearMap psi = quadruple_to_morphism(make_quadruple({FamilyTag::swap_ii, 1, 1}, f.pair, g.pair), f, g);
  CHECK(hopf_morphism_report(psi).pass());
  CHECK(psi.apply(mono(*f.structure, 0, 1, 0, 0)) == mono(*g.structure, 0, 0, 0, 1));
  CHECK_FALSE(is_hopf_iso(psi));
}

TEST_CASE("excluded shapes are falsified") {
  for (const auto& p : {ts(2, 4, 1, 1, 1), ts(3, 3, 1, 1, 1), ts(3, 3, 2, 1, 0), ts(4, 4, 1, 1, 1), ts(4, 2, 1, 1, 1),
                        PresentationParams::q_alpha(3, root_of_unity(3, 1), 1)}) {
    const std::vector<ShapeVerdict> verdicts = excluded_shape_sweep(factorization(p));
    CHECK(verdicts.size() >= 10);
    for (const auto& v : verdicts) {
      CAPTURE(p.name());
      CAPTURE(v.shape.to_string());
      CHECK(v.falsified());
    }
  }
}

TEST_CASE("classification counts") {
  const CycScalar z = root_of_unity(3, 1);
  CHECK(classify(2, 2, -1, -1).count == 3);
  CHECK(classify(3, 3, z, z).count == 2);
  CHECK(classify(3, 3, z * z, z).count == 4);
  CHECK(classify(3, 2, z, -1).count == 1);
  const ClassReport r = classify(4, 4, root_of_unity(4, 1), root_of_unity(4, 1));
  CHECK(r.count == 3);
  CHECK(r.formula_count == 3);
  CHECK(formula_count(5, 5, root_of_unity(5, 1), root_of_unity(5, 1)) == 3);
  CHECK(formula_count(5, 5, root_of_unity(5, 2), root_of_unity(5, 1)) == 5);
  CHECK(formula_count(4, 6, root_of_unity(4, 1), root_of_unity(6, 1)) == 2);
}

TEST_CASE("automorphism groups") {
  const CycScalar z = root_of_unity(3, 1);
  SUBCASE("sigma^2 = 1") {
    const AutomorphismReport a = automorphisms(ts(2, 2, 1, 1, 0));
    CHECK(a.pass());
    CHECK(a.group == "(k* x k*) x|_tau Z2");
  }
  SUBCASE("sigma^2 != 1") {
    const AutomorphismReport a = automorphisms(PresentationParams::t_sigma(3, 3, z, z, z));
    CHECK(a.pass());
    CHECK(a.group == "k* x k*");
  }
  SUBCASE("m != n") {
    const AutomorphismReport a = automorphisms(ts(2, 4, 1, 1, 1));
    CHECK(a.pass());
    CHECK(a.group == "k* x k*");
  }
  SUBCASE("Q^1_3") {
    const AutomorphismReport a = automorphisms(PresentationParams::q_alpha(3, z, 1));
    CHECK(a.pass());
    CHECK(a.group == "k*");
    CHECK_FALSE(a.externally_sourced);
  }
  SUBCASE("Q^1_2") {
    const AutomorphismReport a = automorphisms(PresentationParams::q_alpha(2, -1, 1));
    CHECK(a.pass());
    CHECK(a.externally_sourced);
  }
  CHECK_THROWS_AS(automorphisms(PresentationParams::q_alpha(3, z, 2)), std::invalid_argument);
}
