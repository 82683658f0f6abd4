#pragma once

#include "taftcross/axiom_report.hpp"
#include "taftcross/hopf_structure.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace taftcross {

/// Linear map between two Hopf structures, stored column-wise: columns[b] is the
/// image of domain basis element b.
struct LinearMap {
  std::shared_ptr<const HopfStructure> domain;
  std::shared_ptr<const HopfStructure> codomain;
  std::vector<SparseVec> columns;

  SparseVec apply(const SparseVec& v) const;
  /// (f (x) f) on a domain tensor.
  SparseVec apply_tensor(const SparseVec& t) const;
};

LinearMap identity_map(std::shared_ptr<const HopfStructure> h);
/// f o g.
LinearMap compose(const LinearMap& f, const LinearMap& g);
bool operator==(const LinearMap& a, const LinearMap& b);

/// Algebra map determined by the images of H, X, h, x. The domain basis must
/// consist of normal monomials H^i X^j h^k x^l, which holds for presentations,
/// bicrossed products and Taft algebras. Letters missing from the domain are
/// ignored.
LinearMap algebra_map_from_generators(std::shared_ptr<const HopfStructure> domain,
                                      std::shared_ptr<const HopfStructure> codomain,
                                      const std::array<SparseVec, 4>& letter_images);

/// Rank of the matrix with the given columns (fraction-free elimination,
/// first nonzero pivot).
std::size_t rank(const std::vector<SparseVec>& columns);

/// Inverse of a square matrix given by columns, or nullopt when singular.
std::optional<std::vector<SparseVec>> invert(const std::vector<SparseVec>& columns, std::size_t dim);

/// Multiplicativity, unit, comultiplicativity and counit on all basis pairs.
AxiomReport hopf_morphism_report(const LinearMap& f, unsigned jobs = 0);
bool is_bijective(const LinearMap& f);
bool is_hopf_iso(const LinearMap& f, unsigned jobs = 0);

}  // namespace taftcross
