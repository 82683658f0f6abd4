#include "doctest.h"

#include "taftcross/matched_pair.hpp"

#include <numeric>
#include <random>

using namespace taftcross;

namespace {

struct Instance {
  int n, m;
  CycScalar qbar, q;
};

// q = zeta_m, qbar = zeta_n^k inside Q(zeta_lcm).
Instance instance(int n, int m, int qbar_exp = 1, int q_exp = 1) {
  return {n, m, root_of_unity(n, qbar_exp), root_of_unity(m, q_exp)};
}

CycScalar geometric(const CycScalar& q, int t) {
  CycScalar s;
  for (int i = 0; i < t; ++i) s += q.pow(i);
  return s;
}

}  // namespace

TEST_CASE("sigma family tables") {
  const CycScalar z = root_of_unity(3, 1);
  const MatchedPair mp = family_sigma(3, 3, z, z, z);
  const TaftDescriptor& A = *mp.a_desc();
  const TaftDescriptor& H = *mp.h_desc();
  CHECK(act_right(mp, TaftElement::x(H), 1, 0) == z * TaftElement::x(H));
  CHECK(act_right(mp, TaftElement::h(H), 1, 0) == TaftElement::h(H));
  CHECK(act_right(mp, TaftElement::x(H), 0, 1).is_zero());
  CHECK(act_left(mp, 1, 0, TaftElement::x(A)) == z * TaftElement::x(A));
  CHECK(act_left(mp, 0, 1, TaftElement::x(A)).is_zero());
  CHECK(act_left(mp, 0, 0, TaftElement::monomial(A, 2, 1)) == TaftElement::monomial(A, 2, 1));
  CHECK(act_right(mp, TaftElement::monomial(H, 1, 2), 0, 0) == TaftElement::monomial(H, 1, 2));
  CHECK_THROWS_AS(family_sigma(3, 3, z, z, root_of_unity(6, 1)), std::invalid_argument);
  CHECK_THROWS_AS(family_sigma(2, 3, CycScalar(-1), z, CycScalar(-1)), std::invalid_argument);

  const MatchedPair trivial = family_sigma(2, 4, CycScalar(-1), root_of_unity(4, 1), CycScalar(1));
  for (Index g = 0; g < trivial.dim_h(); ++g)
    for (Index a = 0; a < trivial.dim_a(); ++a) {
      CHECK(trivial.left(g, a) == trivial.h_structure()->counit[g] * SparseVec::basis(a));
      CHECK(trivial.right(g, a) == trivial.a_structure()->counit[a] * SparseVec::basis(g));
    }
  CHECK(verify_matched_pair(trivial).pass());
}

TEST_CASE("alpha family closed forms") {
  for (int n : {2, 3, 4}) {
    const CycScalar q = root_of_unity(n, 1);
    for (const CycScalar& alpha : {CycScalar(1), CycScalar(-1), CycScalar(BigRational(2, 3))}) {
      const MatchedPair mp = family_alpha(n, q, alpha);
      const TaftDescriptor& A = *mp.a_desc();
      const TaftDescriptor& H = *mp.h_desc();
      CHECK(A.q == q.pow(n - 1));
      for (int t = 1; t < n; ++t) {
        const CycScalar s = geometric(q, t);
        // alpha [t]_q (1 - H) X^(t-1)
        const TaftElement expected_left = (alpha * s) * TaftElement::monomial(A, 0, t - 1) -
                                          (alpha * s) * TaftElement::monomial(A, 1, t - 1);
        CHECK(act_left(mp, 0, 1, TaftElement::monomial(A, 0, t)) == expected_left);
        // alpha [t]_q x^(t-1) (1 - h)
        const TaftElement expected_right = (alpha * s) * TaftElement::monomial(H, 0, t - 1) -
                                           (alpha * q.pow(t - 1) * s) * TaftElement::monomial(H, 1, t - 1);
        CHECK(act_right(mp, TaftElement::monomial(H, 0, t), 0, 1) == expected_right);
      }
      // Both closed forms vanish at t = n, matching x^n = 0 and X^n = 0.
      CHECK(geometric(q, n).is_zero());
      if (n == 3) {
        // x |> X^2 carries -alpha(1 + q) on HX, not -alpha q (1 + q).
        const TaftElement r = act_left(mp, 0, 1, TaftElement::monomial(A, 0, 2));
        CHECK(r.coeff(1, 1) == -(alpha * (CycScalar(1) + q)));
        CHECK(r.coeff(1, 1) != -(alpha * q * (CycScalar(1) + q)));
      }
    }
  }
  CHECK_THROWS_AS(family_alpha(3, root_of_unity(3, 1), CycScalar()), std::invalid_argument);
}

TEST_CASE("verification of family pairs") {
  const CycScalar z = root_of_unity(3, 1);
  CHECK(verify_matched_pair(family_sigma(3, 3, z, z, z)).pass());
  CHECK(verify_matched_pair(family_alpha(3, z, CycScalar(-1))).pass());
  CHECK(verify_matched_pair(family_alpha(2, CycScalar(-1), CycScalar(2))).pass());
}

TEST_CASE("tampered tables are rejected") {
  // Sigma family with sigma = 1 != q and x <| X = 1 - h.
  const Instance in = instance(3, 3);
  AnsatzParams p{CycScalar(), CycScalar(1), CycScalar(), CycScalar(), CycScalar(), CycScalar(1), CycScalar(1)};
  const GeneratorTables t = ansatz_tables(in.n, in.m, in.qbar, in.q, p);
  const MatchedPair mp = MatchedPair::from_generator_tables(TaftDescriptor(3, in.qbar, "H", "X"),
                                                            TaftDescriptor(3, in.q), t);
  const AxiomReport rep = verify_matched_pair(mp);
  CHECK_FALSE(rep.pass());
  CHECK(rep.has_failure("mp3"));
  CHECK_FALSE(residuals_vanish(ansatz_residuals(in.n, in.m, in.qbar, in.q, p)));
}

TEST_CASE("ansatz residuals") {
  std::mt19937 rng(2024);
  const std::vector<Instance> instances{instance(2, 2), instance(2, 3), instance(3, 2), instance(2, 4),
                                        instance(3, 3), instance(3, 3, 2), instance(4, 6), instance(4, 4, 3)};
  for (const auto& in : instances) {
    const int d = std::gcd(in.n, in.m);
    const int L = std::lcm(in.n, in.m);
    for (const auto& sigma : roots_of_unity_group(d, L)) {
      const AnsatzParams p{CycScalar(), sigma, CycScalar(), CycScalar(), CycScalar(), sigma, CycScalar()};
      CHECK(residuals_vanish(ansatz_residuals(in.n, in.m, in.qbar, in.q, p)));
    }
    const bool alpha_case = in.n == in.m && in.qbar == in.q.pow(in.n - 1);
    for (const auto& alpha : default_alpha_samples()) {
      const AnsatzParams p{CycScalar(), in.q, alpha, CycScalar(), CycScalar(), in.q, alpha};
      CHECK(residuals_vanish(ansatz_residuals(in.n, in.m, in.qbar, in.q, p)) == alpha_case);
    }
    // Off-family perturbations of a valid point.
    std::uniform_int_distribution<int> which(0, 6), val(1, 5);
    for (int trial = 0; trial < 12; ++trial) {
      AnsatzParams p{CycScalar(), CycScalar(1), CycScalar(), CycScalar(), CycScalar(), CycScalar(1), CycScalar()};
      const CycScalar bump(BigRational(val(rng), 7));
      switch (which(rng)) {
        case 0: p.a += bump; break;
        case 1: p.b += bump; break;
        case 2: p.alpha += bump; break;
        case 3: p.beta += bump; break;
        case 4: p.gamma += bump; break;
        case 5: p.sigma += bump; break;
        default: p.mu += bump; break;
      }
      CHECK_FALSE(residuals_vanish(ansatz_residuals(in.n, in.m, in.qbar, in.q, p)));
    }
  }
}

TEST_CASE("residuals agree with the exhaustive check") {
  const Instance in = instance(2, 2);
  const std::vector<AnsatzParams> samples{
      {CycScalar(), CycScalar(-1), CycScalar(), CycScalar(), CycScalar(), CycScalar(-1), CycScalar()},
      {CycScalar(), CycScalar(-1), CycScalar(3), CycScalar(), CycScalar(), CycScalar(-1), CycScalar(3)},
      {CycScalar(), CycScalar(-1), CycScalar(3), CycScalar(), CycScalar(), CycScalar(-1), CycScalar(2)},
      {CycScalar(1), CycScalar(1), CycScalar(), CycScalar(), CycScalar(), CycScalar(1), CycScalar()},
      {CycScalar(), CycScalar(1), CycScalar(), CycScalar(1), CycScalar(), CycScalar(1), CycScalar()},
      {CycScalar(), CycScalar(1), CycScalar(), CycScalar(), CycScalar(1), CycScalar(1), CycScalar()},
  };
  for (const auto& p : samples) {
    const bool expected = residuals_vanish(ansatz_residuals(in.n, in.m, in.qbar, in.q, p));
    bool verified = false;
    try {
      const MatchedPair mp = MatchedPair::from_generator_tables(TaftDescriptor(2, in.qbar, "H", "X"),
                                                                TaftDescriptor(2, in.q),
                                                                ansatz_tables(in.n, in.m, in.qbar, in.q, p));
      verified = verify_matched_pair(mp).pass();
    } catch (const std::domain_error&) {
      verified = false;
    }
    CHECK(verified == expected);
  }
}

TEST_CASE("enumeration") {
  const CycScalar z3 = root_of_unity(3, 1);
  CHECK(enumerate_matched_pairs(3, 2, z3, CycScalar(-1)).size() == 1);
  const auto sweedler = enumerate_matched_pairs(2, 2, CycScalar(-1), CycScalar(-1));
  CHECK(sweedler.size() == 2 + default_alpha_samples().size());
  CHECK(sweedler[0].family() == PairFamily::sigma);
  CHECK(sweedler.back().family() == PairFamily::alpha);
  CHECK(enumerate_matched_pairs(3, 3, z3, z3).size() == 3);
  CHECK(enumerate_matched_pairs(3, 3, z3 * z3, z3).size() == 3 + default_alpha_samples().size());
}
