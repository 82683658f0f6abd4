#include "doctest.h"

#include "taftcross/bicrossed.hpp"

#include <numeric>
#include <random>

using namespace taftcross;

namespace {

SparseVec mono(const PresentationParams& p, int i, int j, int k, int l) {
  return SparseVec::basis(p.index({i, j, k, l}));
}

PresentationParams sigma_params(int n, int m, int sigma_exp) {
  const int d = std::gcd(n, m);
  return PresentationParams::t_sigma(n, m, root_of_unity(n, 1), root_of_unity(m, 1), root_of_unity(d, sigma_exp));
}

}  // namespace

TEST_CASE("bicrossed product on generators") {
  SUBCASE("sigma") {
    const PresentationParams p = sigma_params(3, 3, 1);
    const CycScalar sigma = p.param;
    const HopfStructure B = bicrossed_product(p.matched_pair());
    const SparseVec xX = B.multiply(mono(p, 0, 0, 0, 1), mono(p, 0, 1, 0, 0));
    CHECK(xX == sigma * mono(p, 0, 1, 0, 1));
  }
  SUBCASE("alpha") {
    const CycScalar q = root_of_unity(3, 1), alpha(2);
    const PresentationParams p = PresentationParams::q_alpha(3, q, alpha);
    const HopfStructure B = bicrossed_product(p.matched_pair());
    const SparseVec xX = B.multiply(mono(p, 0, 0, 0, 1), mono(p, 0, 1, 0, 0));
    CHECK(xX == q * mono(p, 0, 1, 0, 1) + alpha * mono(p, 0, 0, 0, 0) - alpha * mono(p, 1, 0, 1, 0));
  }
  SUBCASE("A is a subalgebra") {
    const PresentationParams p = sigma_params(2, 4, 1);
    const HopfStructure B = bicrossed_product(p.matched_pair());
    const HopfStructure A = hopf_structure(TaftDescriptor(2, p.qbar, "H", "X"));
    for (Index a = 0; a < A.dim; ++a)
      for (Index c = 0; c < A.dim; ++c) {
        std::vector<Term> t;
        for (const auto& e : A.product(a, c).terms()) t.push_back({e.index * 16, e.coeff});
        CHECK(B.product(a * 16, c * 16) == SparseVec::from_terms(std::move(t)));
      }
  }
}

TEST_CASE("straightening") {
  const PresentationParams ts = sigma_params(3, 6, 1);
  CHECK(straighten(ts, "xH") == ts.param * mono(ts, 1, 0, 0, 1));
  CHECK(straighten(ts, "hH") == mono(ts, 1, 0, 1, 0));
  CHECK(straighten(ts, "xh") == ts.q * mono(ts, 0, 0, 1, 1));
  CHECK(straighten(ts, "XH") == ts.qbar * mono(ts, 1, 1, 0, 0));
  CHECK(straighten(ts, "Xx") == mono(ts, 0, 1, 0, 1));
  CHECK(straighten(ts, "HHH").is_zero() == false);
  CHECK(straighten(ts, "HHH") == mono(ts, 0, 0, 0, 0));
  CHECK(straighten(ts, "XXX").is_zero());
  CHECK(straighten(ts, "hhhhhh") == mono(ts, 0, 0, 0, 0));
  CHECK(straighten(ts, "").is_zero() == false);

  const CycScalar q = root_of_unity(4, 1), alpha = CycScalar(parse_rational("1/2"));
  const PresentationParams qa = PresentationParams::q_alpha(4, q, alpha);
  CHECK(straighten(qa, "xX") == q * mono(qa, 0, 1, 0, 1) + alpha * mono(qa, 0, 0, 0, 0) - alpha * mono(qa, 1, 0, 1, 0));
  CHECK(straighten(qa, "xH") == q * mono(qa, 1, 0, 0, 1));
  CHECK(normal_word({1, 2, 0, 1}) == "HXXx");
}

TEST_CASE("straightening confluence") {
  std::mt19937 rng(20261018);
  const std::string letters = "HXhx";
  const std::vector<PresentationParams> params = {
      sigma_params(3, 3, 2),
      sigma_params(2, 4, 1),
      PresentationParams::q_alpha(3, root_of_unity(3, 2), CycScalar(-1)),
      PresentationParams::q_alpha(4, root_of_unity(4, 1), CycScalar(parse_rational("1/2"))),
  };
  for (int w = 0; w < 200; ++w) {
    const PresentationParams& p = params[w % params.size()];
    std::string word;
    const int len = std::uniform_int_distribution<int>(0, 8)(rng);
    for (int i = 0; i < len; ++i) word += letters[std::uniform_int_distribution<int>(0, 3)(rng)];
    CAPTURE(word);
    CHECK(straighten(p, word, RewriteStrategy::leftmost) == straighten(p, word, RewriteStrategy::rightmost));
  }
}

TEST_CASE("presentations are Hopf algebras") {
  for (const auto& p : {sigma_params(2, 2, 1), sigma_params(3, 3, 1), sigma_params(2, 4, 1),
                        PresentationParams::q_alpha(2, CycScalar(-1), CycScalar(1)),
                        PresentationParams::q_alpha(3, root_of_unity(3, 1), CycScalar(2))}) {
    CAPTURE(p.name());
    CHECK(verify_hopf(presentation(p)).pass());
  }
}

TEST_CASE("corrupted relation breaks bialgebra compatibility") {
  PresentationParams p = sigma_params(3, 3, 1);
  p.xX_override = root_of_unity(3, 2);
  const AxiomReport rep = verify_hopf(presentation(p));
  CHECK_FALSE(rep.pass());
  CHECK(rep.has_failure("comult-multiplicative"));
}

TEST_CASE("sigma = 1 is the tensor product") {
  const PresentationParams p = sigma_params(2, 4, 0);
  const HopfStructure A = hopf_structure(TaftDescriptor(2, p.qbar, "H", "X"));
  const HopfStructure T = hopf_structure(TaftDescriptor(4, p.q));
  CHECK(structures_equal(presentation(p), tensor_product(A, T)));
}

TEST_CASE("bicrossed product agrees with presentation") {
  for (const auto& p : {sigma_params(2, 2, 1), sigma_params(3, 3, 2), sigma_params(2, 6, 1), sigma_params(4, 2, 1),
                        PresentationParams::q_alpha(2, CycScalar(-1), CycScalar(1)),
                        PresentationParams::q_alpha(3, root_of_unity(3, 1), CycScalar(1)),
                        PresentationParams::q_alpha(3, root_of_unity(3, 2), CycScalar(parse_rational("-1/2")))}) {
    CAPTURE(p.name());
    const HopfStructure B = bicrossed_product(p.matched_pair());
    CHECK(verify_hopf(B).pass());
    CHECK(structures_equal(B, presentation(p)));
  }
  const HopfStructure s1 = presentation(sigma_params(3, 3, 1)), s2 = presentation(sigma_params(3, 3, 2));
  std::vector<Index> ident(s1.dim);
  std::iota(ident.begin(), ident.end(), Index{0});
  CHECK_FALSE(structures_equal(s1, s2, ident));
  CHECK_THROWS(structures_equal(s1, presentation(sigma_params(2, 2, 1)), ident));
}

TEST_CASE("antipode on generators") {
  SUBCASE("sigma") {
    const PresentationParams p = sigma_params(3, 6, 1);
    const HopfStructure P = presentation(p);
    CHECK(P.antipode_of(mono(p, 0, 1, 0, 0)) == -(p.qbar.pow(2)) * mono(p, 2, 1, 0, 0));
    CHECK(P.antipode_of(mono(p, 0, 0, 0, 1)) == -(p.q.pow(5)) * mono(p, 0, 0, 5, 1));
    CHECK(P.antipode_of(mono(p, 1, 0, 0, 0)) == mono(p, 2, 0, 0, 0));
  }
  SUBCASE("alpha") {
    const CycScalar q = root_of_unity(3, 1);
    const PresentationParams p = PresentationParams::q_alpha(3, q, CycScalar(2));
    const HopfStructure P = presentation(p);
    CHECK(P.antipode_of(mono(p, 0, 1, 0, 0)) == -q * mono(p, 2, 1, 0, 0));
    CHECK(P.antipode_of(mono(p, 0, 0, 0, 1)) == -(q.pow(2)) * mono(p, 0, 0, 2, 1));
  }
}

TEST_CASE("Drinfeld double") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    const CycScalar q = root_of_unity(n, 1);
    const DrinfeldDouble dd = drinfeld_double(n, q);
    const HopfStructure& T = *dd.taft;
    const HopfStructure& A = *dd.dual_cop;
    CHECK(verify_matched_pair(dd.pair).pass());
    CHECK(verify_hopf(*dd.structure).pass());
    CHECK(is_hopf_iso(dd.theta));

    const Index h = T.index_of({0, 0, 1, 0}), x = T.index_of({0, 0, 0, 1});
    const Index X = dd.theta.domain->index_of({0, 0, 0, 1});
    const SparseVec one = SparseVec::basis(T.index_of({0, 0, 0, 0}));
    const SparseVec hv = SparseVec::basis(h);
    CHECK(dd.pair.act_right(SparseVec::basis(x), dd.theta.columns[X]) == hv - one);

    const TaftDual td = taft_dual(TaftDescriptor(n, q));
    const SparseVec& h_star = td.h_star.coeffs;
    CHECK(dd.pair.act_right(hv, h_star) == hv);
    for (Index g = 0; g < T.dim; ++g) CHECK(dd.pair.act_right(SparseVec::basis(g), A.unit) == SparseVec::basis(g));

    CHECK(same_actions(transport(dd.pair, dd.theta), family_alpha(n, q, CycScalar(-1))));
    auto target = std::make_shared<const HopfStructure>(presentation(PresentationParams::q_alpha(n, q, CycScalar(-1))));
    CHECK(is_hopf_iso(double_to_transported(dd, target)));
  }
}
