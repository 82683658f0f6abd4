#pragma once

#include "taftcross/axiom_report.hpp"
#include "taftcross/bicrossed.hpp"
#include "taftcross/linear_map.hpp"
#include "taftcross/matched_pair.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taftcross {

/// A bicrossed product together with the matched pair it is built from.
struct Factorization {
  PresentationParams params;
  MatchedPair pair;
  std::shared_ptr<const HopfStructure> structure;
};

Factorization factorization(const PresentationParams& p, unsigned jobs = 0);

/// u: A -> A', p: A -> H', r: H -> A', v: H -> H'.
struct Quadruple {
  LinearMap u, p, r, v;
};

/// e -> eps(e) 1.
LinearMap trivial_map(std::shared_ptr<const HopfStructure> domain, std::shared_ptr<const HopfStructure> codomain);
/// g^i y^j -> c^j g'^i y'^j between Taft algebras of the same dimension.
LinearMap scaling_map(std::shared_ptr<const HopfStructure> domain, std::shared_ptr<const HopfStructure> codomain,
                      const CycScalar& c);

enum class FamilyTag { diagonal, swap_i, swap_ii, swap_iii, q_diagonal };

/// diagonal(beta, eta): u = beta-scaling, v = eta-scaling, p and r trivial.
/// swap_i(zeta, gamma): p = zeta-swap, r = gamma-swap, u and v trivial.
/// swap_ii(zeta, eta): p = zeta-swap, v = eta-scaling.
/// swap_iii(beta, gamma): u = beta-scaling, r = gamma-swap.
/// q_diagonal(beta): diagonal(beta, beta^-1).
struct QuadrupleFamily {
  FamilyTag tag = FamilyTag::diagonal;
  CycScalar first = 1;
  CycScalar second = 1;

  std::string to_string() const;
};

std::string tag_name(FamilyTag tag);

Quadruple make_quadruple(const QuadrupleFamily& family, const MatchedPair& src, const MatchedPair& tgt);

/// Unit, counit and comultiplicativity of a single map.
AxiomReport coalgebra_map_report(const LinearMap& f, const std::string& name);

/// The four coalgebra-map checks (axioms "u-coalgebra", ...) and conditions
/// C1 to C8 on all basis elements and pairs.
AxiomReport check_quadruple(const Quadruple& qd, const MatchedPair& src, const MatchedPair& tgt, unsigned jobs = 0);

/// psi(a # g) = u(a1) (p(a2) |>' r(g1)) # (p(a3) <|' r(g2)) v(g3) on every
/// basis element. Throws std::invalid_argument unless all four components are
/// unital coalgebra maps.
LinearMap quadruple_to_morphism(const Quadruple& qd, const Factorization& src, const Factorization& tgt);

struct Refutation {
  QuadrupleFamily family;
  std::vector<std::string> failed;       // failed axioms, or "bijectivity"
  std::vector<AxiomFailure> first_failures;
  std::size_t rank = 0;                  // rank of the induced map, 0 if not built
};

struct IsoResult {
  std::optional<QuadrupleFamily> witness_family;
  std::optional<LinearMap> witness;
  std::vector<Refutation> refutations;

  bool isomorphic() const { return witness.has_value(); }
};

/// Structured families applicable between two factorizations over the same
/// pair of Taft algebras, with parameters in {1, -1}.
std::vector<QuadrupleFamily> search_families(const Factorization& src, const Factorization& tgt);

/// First family member whose quadruple passes C1 to C8 and whose map is a
/// bijective Hopf morphism; otherwise the refutation of every member.
/// Throws std::invalid_argument when the Taft factors differ.
IsoResult iso_search(const Factorization& src, const Factorization& tgt, unsigned jobs = 0);

/// phi: Q^alpha_n -> Q^1_n, X -> alpha X, other generators fixed.
LinearMap q_normalization(const Factorization& q_alpha, const Factorization& q_one);

/// Shapes I to IX of (u, p) on generators: u(H) = H^a, u(X) = u_x,
/// p(H) = h^b, p(X) = p_x.
struct UpShape {
  int shape = 1;  // 1..9
  int a = 1, b = 1;
  CycScalar alpha, beta;
  SparseVec u_x, p_x;

  std::string to_string() const;
};

struct ShapeVerdict {
  UpShape shape;
  std::string co1_residual;  // empty when the identity holds
  std::string co2_residual;
  bool kills_x = false;      // u(X) = p(X) = 0, so X # 1 -> 0
  bool falsified() const { return kills_x || !co1_residual.empty() || !co2_residual.empty(); }
};

/// The excluded shapes I, III..IX (IV only when it is not the swap case) on the
/// grid alpha in {0, 1, -1, 2}, 2 <= a < n, 2 <= b < m, each evaluated against
/// the compatibilities obtained from C3 and C4 at (X, H) and (H, X).
std::vector<ShapeVerdict> excluded_shape_sweep(const Factorization& f);

struct ClassPair {
  std::size_t i, j;
  bool isomorphic = false;
  std::optional<QuadrupleFamily> witness;
  std::vector<Refutation> refutations;
};

struct ClassReport {
  int n, m;
  CycScalar qbar, q;
  std::vector<PresentationParams> representatives;
  std::vector<std::vector<std::size_t>> classes;
  std::size_t count = 0;
  std::size_t formula_count = 0;
  std::vector<ClassPair> pairs;
};

/// Closed-form number of isomorphism types factoring through T_{n^2}(qbar)
/// and T_{m^2}(q).
std::size_t formula_count(int n, int m, const CycScalar& qbar, const CycScalar& q);

/// Representatives T^sigma for sigma in U_d (plus Q^1_n when m = n and
/// qbar = q^(n-1)), pairwise iso_search and union-find classes. Throws
/// std::logic_error if the partition disagrees with formula_count.
ClassReport classify(int n, int m, const CycScalar& qbar, const CycScalar& q, unsigned jobs = 0);

struct LawCheck {
  std::string law;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct AutomorphismReport {
  PresentationParams params;
  std::string group;
  std::vector<std::string> families;
  std::vector<CycScalar> grid;
  std::size_t verified_automorphisms = 0;
  std::vector<std::string> rejected;  // family members that are not automorphisms
  std::vector<LawCheck> laws;
  bool externally_sourced = false;

  bool pass() const;
};

/// Parameterized automorphism families with their composition laws, checked
/// on the grid {1, -1, 2, zeta_d}.
AutomorphismReport automorphisms(const PresentationParams& p, unsigned jobs = 0);

}  // namespace taftcross
