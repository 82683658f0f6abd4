#pragma once

#include "taftcross/axiom_report.hpp"
#include "taftcross/sparse.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace taftcross {

/// Exponents (i, j, k, l) of the basis monomial H^i X^j h^k x^l. A single Taft
/// algebra uses (0, 0, i, j) for h^i x^j.
using Label = std::array<int, 4>;

/// A finite-dimensional Hopf algebra given by exact structure constants.
///
/// Tensor elements of H (x) H are SparseVecs keyed by r * dim + s; elements of
/// H (x) H (x) H by (r * dim + s) * dim + t.
struct HopfStructure {
  std::string name;
  std::size_t dim = 0;
  std::vector<Label> basis;
  std::vector<std::string> basis_names;
  std::vector<SparseVec> mult;      // e_r e_s stored at r * dim + s
  std::vector<SparseVec> comult;    // Delta(e_r)
  std::vector<CycScalar> counit;    // eps(e_r)
  std::vector<SparseVec> antipode;  // S(e_r)
  SparseVec unit;

  const SparseVec& product(Index r, Index s) const { return mult[r * dim + s]; }

  SparseVec multiply(const SparseVec& a, const SparseVec& b) const;
  SparseVec comultiply(const SparseVec& a) const;
  /// (Delta (x) id) Delta(a).
  SparseVec comultiply_twice(const SparseVec& a) const;
  CycScalar counit_of(const SparseVec& a) const;
  SparseVec antipode_of(const SparseVec& a) const;
  /// Product in the algebra H (x) H.
  SparseVec tensor_multiply(const SparseVec& x, const SparseVec& y) const;

  Index index_of(const Label& label) const;

  std::string format(const SparseVec& v) const;
  std::string format_tensor(const SparseVec& t) const;
};

/// Same algebra with flipped comultiplication; the antipode becomes S^-1.
HopfStructure cop(const HopfStructure& h);

/// The tensor product Hopf algebra on A (x) B, basis index a * dim(B) + b and
/// labels (A.k, A.l, B.k, B.l).
HopfStructure tensor_product(const HopfStructure& a, const HopfStructure& b);

struct HopfCheckOptions {
  unsigned jobs = 0;
  std::size_t exhaustive_triple_limit = 256;  // dimension above which triples are sampled
  std::size_t sampled_triples = 10000;
  std::uint64_t seed = 0x5eed7af7ULL;
};

/// Associativity, unit, coassociativity, counit, multiplicativity of Delta
/// and eps, and both antipode identities.
AxiomReport verify_hopf(const HopfStructure& h, const HopfCheckOptions& options = {});

/// Printable monomial for a label, e.g. "H^2*X*x"; "1" for the unit.
std::string monomial_name(const Label& label, const std::array<std::string, 4>& letters = {"H", "X", "h", "x"});

}  // namespace taftcross
