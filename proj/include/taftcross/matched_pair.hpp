#pragma once

#include "taftcross/axiom_report.hpp"
#include "taftcross/hopf_structure.hpp"
#include "taftcross/linear_map.hpp"
#include "taftcross/taft.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taftcross {

enum class PairFamily { sigma, alpha, custom };

std::string family_name(PairFamily f);

/// Generator-level action values. Index 0 is the group-like letter, 1 the
/// nilpotent one: left[g][a] = g |> a in A, right[g][a] = g <| a in H.
struct GeneratorTables {
  std::array<std::array<SparseVec, 2>, 2> left;
  std::array<std::array<SparseVec, 2>, 2> right;
};

/// A matched pair (A, H, <|, |>) with both actions tabulated on all basis pairs.
/// left(g, a) = g |> a and right(g, a) = g <| a for basis indices g of H and a of A.
class MatchedPair {
 public:
  /// Extends generator tables to all basis pairs. Both algebras must be Taft
  /// algebras (basis h^k x^l). Throws std::domain_error when the recursion does
  /// not close.
  static MatchedPair from_generator_tables(const TaftDescriptor& a, const TaftDescriptor& h, const GeneratorTables& tables,
                                           PairFamily family = PairFamily::custom, CycScalar param = CycScalar());

  /// Wraps precomputed full tables (indexed g * dim(A) + a).
  static MatchedPair from_full_tables(std::shared_ptr<const HopfStructure> a, std::shared_ptr<const HopfStructure> h,
                                      std::vector<SparseVec> left, std::vector<SparseVec> right);

  const std::shared_ptr<const HopfStructure>& a_structure() const { return a_; }
  const std::shared_ptr<const HopfStructure>& h_structure() const { return h_; }
  const std::optional<TaftDescriptor>& a_desc() const { return a_desc_; }
  const std::optional<TaftDescriptor>& h_desc() const { return h_desc_; }
  const std::optional<GeneratorTables>& generators() const { return gens_; }
  PairFamily family() const { return family_; }
  const CycScalar& param() const { return param_; }

  std::size_t dim_a() const { return a_->dim; }
  std::size_t dim_h() const { return h_->dim; }
  const SparseVec& left(Index g, Index a) const { return left_[g * a_->dim + a]; }
  const SparseVec& right(Index g, Index a) const { return right_[g * a_->dim + a]; }
  const std::vector<SparseVec>& left_table() const { return left_; }
  const std::vector<SparseVec>& right_table() const { return right_; }

  /// Bilinear extensions.
  SparseVec act_left(const SparseVec& g, const SparseVec& a) const;
  SparseVec act_right(const SparseVec& g, const SparseVec& a) const;

 private:
  std::shared_ptr<const HopfStructure> a_, h_;
  std::optional<TaftDescriptor> a_desc_, h_desc_;
  std::optional<GeneratorTables> gens_;
  PairFamily family_ = PairFamily::custom;
  CycScalar param_;
  std::vector<SparseVec> left_, right_;
};

/// Tables agree entry by entry (the algebras are assumed to share a basis).
bool same_actions(const MatchedPair& a, const MatchedPair& b);

MatchedPair family_sigma(int n, int m, const CycScalar& qbar, const CycScalar& q, const CycScalar& sigma);
MatchedPair family_alpha(int n, const CycScalar& q, const CycScalar& alpha);

/// g |> a for a basis monomial g of H and an element a of A.
TaftElement act_left(const MatchedPair& mp, int k, int l, const TaftElement& a);
/// g <| a for an element g of H and a basis monomial a = H^i X^j of A.
TaftElement act_right(const MatchedPair& mp, const TaftElement& g, int i, int j);

/// Module and unit axioms, coalgebra-map and counit conditions of both
/// actions, and the compatibilities mp1-mp4, on all basis pairs and triples.
AxiomReport verify_matched_pair(const MatchedPair& mp, unsigned jobs = 0);

/// Unknowns of the generic ansatz
///   h |> X = a(1 - H) + bX,  x |> X = alpha(1 - H) + beta X,
///   x <| H = gamma(1 - h) + sigma x,  x <| X = mu(1 - h),
/// with h |> H = H, x |> H = 0, h <| H = h, h <| X = 0.
struct AnsatzParams {
  CycScalar a, b, alpha, beta;
  CycScalar gamma, sigma, mu;
};

struct AnsatzResidual {
  std::string constraint;
  CycScalar value;
};

/// The full constraint system of the ansatz; every value vanishes iff the
/// ansatz defines a matched pair.
std::vector<AnsatzResidual> ansatz_residuals(int n, int m, const CycScalar& qbar, const CycScalar& q, const AnsatzParams& p);
bool residuals_vanish(const std::vector<AnsatzResidual>& r);
GeneratorTables ansatz_tables(int n, int m, const CycScalar& qbar, const CycScalar& q, const AnsatzParams& p);

std::vector<CycScalar> default_alpha_samples();

/// family_sigma for every sigma in U_d, then family_alpha for each sample when
/// m = n and qbar = q^(n-1). Every returned pair has passed verify_matched_pair.
std::vector<MatchedPair> enumerate_matched_pairs(int n, int m, const CycScalar& qbar, const CycScalar& q,
                                                 const std::vector<CycScalar>& alpha_samples = default_alpha_samples(),
                                                 unsigned jobs = 0);

/// Moves the pair along a bijective Hopf map theta: A' -> A, giving the pair on
/// (A', H) with g |>' a = theta^-1(g |> theta(a)) and g <|' a = g <| theta(a).
MatchedPair transport(const MatchedPair& mp, const LinearMap& theta);

}  // namespace taftcross
