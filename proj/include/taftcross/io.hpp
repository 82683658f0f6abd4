#pragma once

#include "taftcross/axiom_report.hpp"
#include "taftcross/bicrossed.hpp"
#include "taftcross/hopf_structure.hpp"
#include "taftcross/linear_map.hpp"
#include "taftcross/matched_pair.hpp"
#include "taftcross/morphism.hpp"
#include "taftcross/taft.hpp"

#include <json.hpp>

namespace taftcross {

using Json = nlohmann::ordered_json;

/// {"order": L, "coeffs": [["num", "den"], ...]}, big integers as decimal strings.
Json to_json(const CycScalar& c);
CycScalar cyc_from_json(const Json& j);

/// [[index, CycScalar], ...] in increasing index order.
Json to_json(const SparseVec& v);
SparseVec sparse_from_json(const Json& j);

/// {"m": m, "q": CycScalar, "terms": [{"i", "j", "c"}]}.
Json to_json(const TaftElement& e);
TaftElement taft_element_from_json(const Json& j);

/// {"pass", "checks": {axiom: n}, "failure_count", "failures": [{"axiom", "location", "residual"}]}.
Json to_json(const AxiomReport& r);

/// {"family", "n", "m", "qbar", "q", "param", "tables": {"left": {...}, "right": {...}}}; the
/// tables hold the generator values, e.g. "x|>X".
Json to_json(const MatchedPair& mp);

/// {"dim", "basis", "mult": [[r, s, t, c]], "comult": [[r, s, t, c]], "counit": [c],
/// "antipode": [[r, t, c]]}, every list in lexicographic index order.
Json to_json(const HopfStructure& h);
HopfStructure hopf_from_json(const Json& j);

Json to_json(const PresentationParams& p);
Json to_json(const LinearMap& f);
Json to_json(const QuadrupleFamily& f);
Json to_json(const Refutation& r);
Json to_json(const IsoResult& r);
Json to_json(const ClassReport& r);
Json to_json(const AutomorphismReport& r);

}  // namespace taftcross
