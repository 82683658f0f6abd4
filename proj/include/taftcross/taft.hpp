#pragma once

#include "taftcross/hopf_structure.hpp"
#include "taftcross/linear_map.hpp"

#include <memory>
#include <string>
#include <vector>

namespace taftcross {

/// T_{m^2}(q): generated by a group-like g and a (g,1)-primitive y with
/// g^m = 1, y^m = 0, yg = q gy. The letters only affect printing; the second
/// Taft algebra of a bicrossed product uses "H", "X".
struct TaftDescriptor {
  int m = 2;
  CycScalar q;
  std::string group_letter = "h";
  std::string nil_letter = "x";

  TaftDescriptor() : q(-1) {}
  TaftDescriptor(int m, CycScalar q, std::string group_letter = "h", std::string nil_letter = "x");

  std::size_t dim() const { return static_cast<std::size_t>(m) * m; }
  Index index(int i, int j) const { return static_cast<Index>(i) * m + j; }
  std::string monomial(Index idx) const;
};

bool same_algebra(const TaftDescriptor& a, const TaftDescriptor& b);

/// Element of T_{m^2}(q) on the basis h^i x^j (index i*m + j).
struct TaftElement {
  TaftDescriptor desc;
  SparseVec coeffs;

  static TaftElement zero(const TaftDescriptor& d) { return {d, {}}; }
  static TaftElement one(const TaftDescriptor& d) { return monomial(d, 0, 0); }
  static TaftElement monomial(const TaftDescriptor& d, int i, int j, CycScalar c = CycScalar(1));
  static TaftElement h(const TaftDescriptor& d) { return monomial(d, 1, 0); }
  static TaftElement x(const TaftDescriptor& d) { return monomial(d, 0, 1); }

  CycScalar coeff(int i, int j) const { return coeffs.coeff(desc.index(i, j)); }
  bool is_zero() const { return coeffs.is_zero(); }
  std::string to_string() const;

  TaftElement& operator+=(const TaftElement& o);
  TaftElement& operator-=(const TaftElement& o);
  friend TaftElement operator+(TaftElement a, const TaftElement& b) { return a += b; }
  friend TaftElement operator-(TaftElement a, const TaftElement& b) { return a -= b; }
  friend TaftElement operator*(const CycScalar& c, TaftElement a) {
    a.coeffs *= c;
    return a;
  }
  friend TaftElement operator*(const TaftElement& a, const TaftElement& b);
  friend bool operator==(const TaftElement& a, const TaftElement& b);
  friend bool operator!=(const TaftElement& a, const TaftElement& b) { return !(a == b); }
};

/// Element of T (x) T', keyed by left_index * dim(T') + right_index.
struct TensorElement {
  TaftDescriptor left;
  TaftDescriptor right;
  SparseVec coeffs;

  static TensorElement pure(const TaftElement& a, const TaftElement& b);
  CycScalar coeff(int i, int j, int k, int l) const;
  std::string to_string() const;

  friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b);
};

/// Functional sum c_ij (h^i x^j)^* on T_{m^2}(q).
struct DualElement {
  TaftDescriptor desc;
  SparseVec coeffs;

  CycScalar evaluate(const TaftElement& a) const;
};

TaftElement taft_multiply(const TaftElement& a, const TaftElement& b);
TensorElement taft_comultiply(const TaftElement& a);
CycScalar taft_counit(const TaftElement& a);
TaftElement taft_antipode(const TaftElement& a);

std::vector<TaftElement> group_likes(const TaftDescriptor& d);
/// Spanning set of the (h^j, 1)-primitives: {h^j - 1}, plus x when j = 1.
std::vector<TaftElement> skew_primitives(const TaftDescriptor& d, int j);

HopfStructure hopf_structure(const TaftDescriptor& d);

struct TaftDual {
  TaftDescriptor desc;
  std::shared_ptr<const HopfStructure> algebra;  // T
  std::shared_ptr<const HopfStructure> dual;     // T^*, basis (h^i x^j)^*
  DualElement h_star;
  DualElement x_star;
  LinearMap psi;                                 // T -> T^*, h -> h^*, x -> x^*

  /// Pairing of a dual basis vector with a basis vector (both by index).
  CycScalar pairing(const SparseVec& functional, const SparseVec& element) const;
  DualElement as_dual(const SparseVec& v) const { return {desc, v}; }
};

/// Dual Hopf algebra by transposing structure constants.
HopfStructure dual_structure(const HopfStructure& h, const std::string& name);
TaftDual taft_dual(const TaftDescriptor& d);

struct StructuralIsos {
  LinearMap psi;  // T(q) -> T(q)^*
  LinearMap phi;  // T(q)^cop -> T(q^{m-1}), h -> h^{m-1}, x -> -q^{m-1} h^{m-1} x
};

/// Both maps, each checked to be a bijective Hopf morphism (throws otherwise).
StructuralIsos structural_isos(const TaftDescriptor& d);

}  // namespace taftcross
