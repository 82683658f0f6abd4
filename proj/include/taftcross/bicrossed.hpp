#pragma once

#include "taftcross/hopf_structure.hpp"
#include "taftcross/linear_map.hpp"
#include "taftcross/matched_pair.hpp"
#include "taftcross/taft.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace taftcross {

/// A (x) H with the twisted product (a # g)(c # g') = a(g1 |> c1) # (g2 <| c2)g',
/// the tensor coalgebra, and S(a # g) = S(g2) |> S(a2) # S(g1) <| S(a1).
/// Basis index a * dim(H) + g; for two Taft algebras this is the normal
/// monomial H^i X^j h^k x^l.
HopfStructure bicrossed_product(const MatchedPair& mp, unsigned jobs = 0);

enum class PresentationKind { t_sigma, q_alpha };

/// Parameters of T^sigma_{n,m}(qbar, q) or Q^alpha_n(q).
struct PresentationParams {
  PresentationKind kind = PresentationKind::t_sigma;
  int n = 2;
  int m = 2;
  CycScalar qbar;
  CycScalar q;
  CycScalar param;  // sigma or alpha
  /// Replaces the coefficient c in the rule xX -> c Xx (+ correction for Q).
  /// Only used to build deliberately broken algebras.
  std::optional<CycScalar> xX_override;

  static PresentationParams t_sigma(int n, int m, CycScalar qbar, CycScalar q, CycScalar sigma);
  static PresentationParams q_alpha(int n, CycScalar q, CycScalar alpha);

  std::size_t dim() const { return static_cast<std::size_t>(n) * n * m * m; }
  Index index(const Label& l) const { return ((static_cast<Index>(l[0]) * n + l[1]) * m + l[2]) * m + l[3]; }
  Label label(Index idx) const;
  std::string name() const;
  /// The matched pair whose bicrossed product this presents.
  MatchedPair matched_pair() const;
};

bool operator==(const PresentationParams& a, const PresentationParams& b);

enum class RewriteStrategy { leftmost, rightmost };

/// Rewrites a word over {H, X, h, x} into normal monomials H^i X^j h^k x^l,
/// returned on the presentation's basis indices.
SparseVec straighten(const PresentationParams& p, const std::string& word,
                     RewriteStrategy strategy = RewriteStrategy::leftmost);

/// The normal word of a basis label, e.g. (1, 2, 0, 1) -> "HXXx".
std::string normal_word(const Label& label);

/// Structure constants from the relations; coalgebra from H, h group-like, X
/// (H,1)-primitive, x (h,1)-primitive; antipode from the generator formulas.
HopfStructure presentation(const PresentationParams& p, unsigned jobs = 0);

/// True iff every table agrees after sending basis element i of h1 to ident[i]
/// of h2. Throws on a dimension mismatch.
bool structures_equal(const HopfStructure& h1, const HopfStructure& h2, const std::vector<Index>& ident);
/// Relabeling by identical basis labels.
bool structures_equal(const HopfStructure& h1, const HopfStructure& h2);

struct DrinfeldDouble {
  int n;
  CycScalar q;
  std::shared_ptr<const HopfStructure> taft;       // T_{n^2}(q)
  std::shared_ptr<const HopfStructure> dual_cop;   // (T^*)^cop
  MatchedPair pair;                                // ((T^*)^cop, T)
  std::shared_ptr<const HopfStructure> structure;  // D(T)
  /// Hopf isomorphism T_{n^2}(q^(n-1)) -> (T^*)^cop: psi o Phi^-1 followed by
  /// X -> cX, with c chosen so the transported pair is the alpha = -1 pair.
  LinearMap theta;
};

/// D(T_{n^2}(q)) = (T^*)^cop |><| T with the actions
///   g <| f = <f, S^-1(g3) g1> g2,   (g |> f)(y) = <f, S^-1(g2) y g1>.
DrinfeldDouble drinfeld_double(int n, const CycScalar& q, unsigned jobs = 0);

/// theta^-1 (x) id from D(T) onto the bicrossed product of the pair transported
/// along theta (any structure on that basis, e.g. the presentation of Q^-1_n).
LinearMap double_to_transported(const DrinfeldDouble& dd, std::shared_ptr<const HopfStructure> codomain);

}  // namespace taftcross
