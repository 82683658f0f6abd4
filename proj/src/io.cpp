#include "taftcross/io.hpp"

#include <stdexcept>

namespace taftcross {

namespace {

std::string text(const BigInt& v) { return v.str(); }

const char* kGroupLetter[2] = {"H", "h"};
const char* kNilLetter[2] = {"X", "x"};

}  // namespace

Json to_json(const CycScalar& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs())
    coeffs.push_back(Json::array({text(boost::multiprecision::numerator(r)), text(boost::multiprecision::denominator(r))}));
  Json j;
  j["order"] = c.order();
  j["coeffs"] = std::move(coeffs);
  return j;
}

CycScalar cyc_from_json(const Json& j) {
  const int order = j.at("order").get<int>();
  std::vector<BigRational> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("scalar coefficient must be [num, den]");
    const BigInt den(c[1].get<std::string>());
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    coeffs.emplace_back(BigInt(c[0].get<std::string>()), den);
  }
  return CycScalar::from_coeffs(order, coeffs);
}

Json to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& t : v.terms()) out.push_back(Json::array({t.index, to_json(t.coeff)}));
  return out;
}

SparseVec sparse_from_json(const Json& j) {
  std::vector<Term> terms;
  for (const auto& t : j) terms.push_back({t.at(0).get<Index>(), cyc_from_json(t.at(1))});
  return SparseVec::from_terms(std::move(terms));
}

Json to_json(const TaftElement& e) {
  Json terms = Json::array();
  const Index m = static_cast<Index>(e.desc.m);
  for (const auto& t : e.coeffs.terms()) {
    Json term;
    term["i"] = t.index / m;
    term["j"] = t.index % m;
    term["c"] = to_json(t.coeff);
    terms.push_back(std::move(term));
  }
  Json j;
  j["m"] = e.desc.m;
  j["q"] = to_json(e.desc.q);
  j["terms"] = std::move(terms);
  return j;
}

TaftElement taft_element_from_json(const Json& j) {
  const TaftDescriptor d(j.at("m").get<int>(), cyc_from_json(j.at("q")));
  TaftElement out = TaftElement::zero(d);
  for (const auto& t : j.at("terms")) {
    const int i = t.at("i").get<int>(), k = t.at("j").get<int>();
    if (i < 0 || k < 0 || i >= d.m || k >= d.m) throw std::invalid_argument("Taft exponent out of range");
    out += TaftElement::monomial(d, i, k, cyc_from_json(t.at("c")));
  }
  return out;
}

Json to_json(const AxiomReport& r) {
  Json checks = Json::object();
  for (const auto& [axiom, n] : r.checks_by_axiom()) checks[axiom] = n;
  Json failures = Json::array();
  for (const auto& f : r.failures()) {
    Json e;
    e["axiom"] = f.axiom;
    e["location"] = f.location;
    e["residual"] = f.residual;
    failures.push_back(std::move(e));
  }
  Json j;
  j["pass"] = r.pass();
  j["checks"] = std::move(checks);
  j["failure_count"] = r.failure_count();
  j["failed_axioms"] = r.failed_axioms();
  j["failures"] = std::move(failures);
  return j;
}

Json to_json(const MatchedPair& mp) {
  Json j;
  j["family"] = family_name(mp.family());
  const auto& ad = mp.a_desc();
  const auto& hd = mp.h_desc();
  if (ad && hd) {
    j["n"] = ad->m;
    j["m"] = hd->m;
    j["qbar"] = to_json(ad->q);
    j["q"] = to_json(hd->q);
  }
  j["param"] = to_json(mp.param());
  Json tables;
  if (const auto& g = mp.generators()) {
    Json left = Json::object(), right = Json::object();
    for (int h = 0; h < 2; ++h)
      for (int a = 0; a < 2; ++a) {
        const std::string hl = h == 0 ? kGroupLetter[1] : kNilLetter[1];
        const std::string al = a == 0 ? kGroupLetter[0] : kNilLetter[0];
        left[hl + "|>" + al] = to_json(g->left[h][a]);
        right[hl + "<|" + al] = to_json(g->right[h][a]);
      }
    tables["left"] = std::move(left);
    tables["right"] = std::move(right);
  } else {
    Json left = Json::array(), right = Json::array();
    for (Index g = 0; g < mp.dim_h(); ++g)
      for (Index a = 0; a < mp.dim_a(); ++a) {
        if (!mp.left(g, a).is_zero()) left.push_back(Json::array({g, a, to_json(mp.left(g, a))}));
        if (!mp.right(g, a).is_zero()) right.push_back(Json::array({g, a, to_json(mp.right(g, a))}));
      }
    tables["left"] = std::move(left);
    tables["right"] = std::move(right);
  }
  j["tables"] = std::move(tables);
  return j;
}

Json to_json(const HopfStructure& h) {
  const Index d = h.dim;
  Json basis = Json::array(), mult = Json::array(), comult = Json::array(), counit = Json::array(),
       antipode = Json::array();
  for (const auto& l : h.basis) basis.push_back(l);
  for (Index r = 0; r < d; ++r)
    for (Index s = 0; s < d; ++s)
      for (const auto& t : h.product(r, s).terms()) mult.push_back(Json::array({r, s, t.index, to_json(t.coeff)}));
  for (Index r = 0; r < d; ++r)
    for (const auto& t : h.comult[r].terms())
      comult.push_back(Json::array({r, t.index / d, t.index % d, to_json(t.coeff)}));
  for (const auto& c : h.counit) counit.push_back(to_json(c));
  for (Index r = 0; r < d; ++r)
    for (const auto& t : h.antipode[r].terms()) antipode.push_back(Json::array({r, t.index, to_json(t.coeff)}));
  Json j;
  j["name"] = h.name;
  j["dim"] = d;
  j["basis"] = std::move(basis);
  j["unit"] = to_json(h.unit);
  j["mult"] = std::move(mult);
  j["comult"] = std::move(comult);
  j["counit"] = std::move(counit);
  j["antipode"] = std::move(antipode);
  return j;
}

HopfStructure hopf_from_json(const Json& j) {
  HopfStructure h;
  h.name = j.value("name", std::string());
  h.dim = j.at("dim").get<std::size_t>();
  const Index d = h.dim;
  for (const auto& l : j.at("basis")) {
    h.basis.push_back(l.get<Label>());
    h.basis_names.push_back(monomial_name(h.basis.back()));
  }
  if (h.basis.size() != d) throw std::invalid_argument("basis size differs from dim");
  auto idx = [d](const Json& v) {
    const Index i = v.get<Index>();
    if (i >= d) throw std::invalid_argument("basis index out of range");
    return i;
  };
  std::vector<std::vector<Term>> mult(d * d), comult(d), antipode(d);
  for (const auto& e : j.at("mult")) mult[idx(e.at(0)) * d + idx(e.at(1))].push_back({idx(e.at(2)), cyc_from_json(e.at(3))});
  for (const auto& e : j.at("comult")) comult[idx(e.at(0))].push_back({idx(e.at(1)) * d + idx(e.at(2)), cyc_from_json(e.at(3))});
  for (const auto& e : j.at("antipode")) antipode[idx(e.at(0))].push_back({idx(e.at(1)), cyc_from_json(e.at(2))});
  for (auto& t : mult) h.mult.push_back(SparseVec::from_terms(std::move(t)));
  for (auto& t : comult) h.comult.push_back(SparseVec::from_terms(std::move(t)));
  for (auto& t : antipode) h.antipode.push_back(SparseVec::from_terms(std::move(t)));
  for (const auto& c : j.at("counit")) h.counit.push_back(cyc_from_json(c));
  if (h.counit.size() != d) throw std::invalid_argument("counit size differs from dim");
  h.unit = sparse_from_json(j.at("unit"));
  return h;
}

Json to_json(const PresentationParams& p) {
  Json j;
  j["kind"] = p.kind == PresentationKind::t_sigma ? "sigma" : "alpha";
  j["name"] = p.name();
  j["n"] = p.n;
  j["m"] = p.m;
  j["qbar"] = to_json(p.qbar);
  j["q"] = to_json(p.q);
  j["param"] = to_json(p.param);
  return j;
}

Json to_json(const LinearMap& f) {
  Json cols = Json::array();
  for (Index b = 0; b < f.columns.size(); ++b)
    for (const auto& t : f.columns[b].terms()) cols.push_back(Json::array({b, t.index, to_json(t.coeff)}));
  Json images = Json::object();
  for (const char* letter : {"H", "X", "h", "x"}) {
    for (Index b = 0; b < f.domain->dim; ++b)
      if (f.domain->basis_names[b] == letter) images[letter] = f.codomain->format(f.columns[b]);
  }
  Json j;
  j["domain"] = f.domain->name;
  j["codomain"] = f.codomain->name;
  j["generator_images"] = std::move(images);
  j["columns"] = std::move(cols);
  return j;
}

Json to_json(const QuadrupleFamily& f) {
  Json j;
  j["family"] = tag_name(f.tag);
  j["first"] = to_json(f.first);
  if (f.tag != FamilyTag::q_diagonal) j["second"] = to_json(f.second);
  j["text"] = f.to_string();
  return j;
}

Json to_json(const Refutation& r) {
  Json failures = Json::array();
  for (const auto& f : r.first_failures) {
    Json e;
    e["axiom"] = f.axiom;
    e["location"] = f.location;
    e["residual"] = f.residual;
    failures.push_back(std::move(e));
  }
  Json j;
  j["quadruple"] = to_json(r.family);
  j["failed"] = r.failed;
  j["first_failures"] = std::move(failures);
  j["rank"] = r.rank;
  return j;
}

Json to_json(const IsoResult& r) {
  Json j;
  j["isomorphic"] = r.isomorphic();
  j["witness_family"] = r.witness_family ? to_json(*r.witness_family) : Json();
  j["witness"] = r.witness ? to_json(*r.witness) : Json();
  Json refs = Json::array();
  for (const auto& x : r.refutations) refs.push_back(to_json(x));
  j["refutations"] = std::move(refs);
  return j;
}

Json to_json(const ClassReport& r) {
  Json instance;
  instance["n"] = r.n;
  instance["m"] = r.m;
  instance["qbar"] = to_json(r.qbar);
  instance["q"] = to_json(r.q);
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json members = Json::array();
    for (std::size_t i : c) members.push_back(to_json(r.representatives[i]));
    classes.push_back(std::move(members));
  }
  Json witnesses = Json::array(), refutations = Json::array();
  for (const auto& p : r.pairs) {
    Json e;
    e["source"] = r.representatives[p.i].name();
    e["target"] = r.representatives[p.j].name();
    if (p.isomorphic) {
      e["quadruple"] = p.witness ? to_json(*p.witness) : Json();
      witnesses.push_back(std::move(e));
    } else {
      Json refs = Json::array();
      for (const auto& x : p.refutations) refs.push_back(to_json(x));
      e["refutations"] = std::move(refs);
      refutations.push_back(std::move(e));
    }
  }
  Json j;
  j["instance"] = std::move(instance);
  j["classes"] = std::move(classes);
  j["count"] = r.count;
  j["formula_count"] = r.formula_count;
  j["witnesses"] = std::move(witnesses);
  j["refutations"] = std::move(refutations);
  return j;
}

Json to_json(const AutomorphismReport& r) {
  Json grid = Json::array(), laws = Json::array();
  for (const auto& c : r.grid) grid.push_back(c.to_string());
  for (const auto& l : r.laws) {
    Json e;
    e["law"] = l.law;
    e["checked"] = l.checked;
    e["failed"] = l.failed;
    laws.push_back(std::move(e));
  }
  Json j;
  j["instance"] = to_json(r.params);
  j["group"] = r.group;
  j["families"] = r.families;
  j["grid"] = std::move(grid);
  j["verified_automorphisms"] = r.verified_automorphisms;
  j["rejected"] = r.rejected;
  j["laws"] = std::move(laws);
  j["externally_sourced"] = r.externally_sourced;
  j["pass"] = r.pass();
  return j;
}

}  // namespace taftcross
