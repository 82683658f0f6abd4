#include "taftcross/taft.hpp"

#include <stdexcept>

namespace taftcross {

TaftDescriptor::TaftDescriptor(int m_, CycScalar q_, std::string group_letter_, std::string nil_letter_)
    : m(m_), q(std::move(q_)), group_letter(std::move(group_letter_)), nil_letter(std::move(nil_letter_)) {
  if (m < 2) throw std::invalid_argument("Taft algebra needs m >= 2");
  if (q.is_zero() || multiplicative_order(q) != m)
    throw std::invalid_argument("q = " + q.to_string() + " is not a primitive " + std::to_string(m) + "-th root of unity");
}

std::string TaftDescriptor::monomial(Index idx) const {
  const int i = static_cast<int>(idx / m), j = static_cast<int>(idx % m);
  return monomial_name({0, 0, i, j}, {"", "", group_letter, nil_letter});
}

bool same_algebra(const TaftDescriptor& a, const TaftDescriptor& b) { return a.m == b.m && a.q == b.q; }

namespace {

void require_same(const TaftDescriptor& a, const TaftDescriptor& b) {
  if (!same_algebra(a, b)) throw std::invalid_argument("Taft elements from different algebras");
}

// (h^i x^j)(h^k x^l) = q^{jk} h^{i+k} x^{j+l}, zero once j + l >= m.
bool monomial_product(const TaftDescriptor& d, Index r, Index s, Index& out, CycScalar& c) {
  const int i = static_cast<int>(r / d.m), j = static_cast<int>(r % d.m);
  const int k = static_cast<int>(s / d.m), l = static_cast<int>(s % d.m);
  if (j + l >= d.m) return false;
  out = d.index((i + k) % d.m, j + l);
  c = d.q.pow((static_cast<long long>(j) * k) % d.m);
  return true;
}

SparseVec multiply_vecs(const TaftDescriptor& d, const SparseVec& a, const SparseVec& b) {
  Accumulator acc(d.dim());
  Index idx;
  CycScalar c;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      if (monomial_product(d, ta.index, tb.index, idx, c)) acc.add(idx, ta.coeff * tb.coeff * c);
  return acc.take();
}

}  // namespace

TaftElement TaftElement::monomial(const TaftDescriptor& d, int i, int j, CycScalar c) {
  if (i < 0 || j < 0 || i >= d.m || j >= d.m) throw std::invalid_argument("Taft exponent out of range");
  return {d, SparseVec::basis(d.index(i, j), std::move(c))};
}

std::string TaftElement::to_string() const {
  HopfStructure names;
  names.basis_names.resize(desc.dim());
  for (Index r = 0; r < desc.dim(); ++r) names.basis_names[r] = desc.monomial(r);
  return names.format(coeffs);
}

TaftElement& TaftElement::operator+=(const TaftElement& o) {
  require_same(desc, o.desc);
  coeffs += o.coeffs;
  return *this;
}

TaftElement& TaftElement::operator-=(const TaftElement& o) {
  require_same(desc, o.desc);
  coeffs -= o.coeffs;
  return *this;
}

TaftElement operator*(const TaftElement& a, const TaftElement& b) { return taft_multiply(a, b); }

bool operator==(const TaftElement& a, const TaftElement& b) {
  return same_algebra(a.desc, b.desc) && a.coeffs == b.coeffs;
}

TensorElement TensorElement::pure(const TaftElement& a, const TaftElement& b) {
  std::vector<Term> terms;
  for (const auto& ta : a.coeffs.terms())
    for (const auto& tb : b.coeffs.terms()) terms.push_back({ta.index * b.desc.dim() + tb.index, ta.coeff * tb.coeff});
  return {a.desc, b.desc, SparseVec::from_terms(std::move(terms))};
}

CycScalar TensorElement::coeff(int i, int j, int k, int l) const {
  return coeffs.coeff(left.index(i, j) * right.dim() + right.index(k, l));
}

std::string TensorElement::to_string() const {
  if (coeffs.is_zero()) return "0";
  std::string out;
  for (const auto& t : coeffs.terms()) {
    const TaftElement a{left, SparseVec::basis(t.index / right.dim(), t.coeff)};
    if (!out.empty()) out += " + ";
    out += "(" + a.to_string() + ") (x) " + right.monomial(t.index % right.dim());
  }
  return out;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  require_same(a.left, b.left);
  require_same(a.right, b.right);
  return {a.left, a.right, a.coeffs + b.coeffs};
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  require_same(a.left, b.left);
  require_same(a.right, b.right);
  const Index dr = a.right.dim();
  Accumulator acc(a.left.dim() * dr);
  Index l, r;
  CycScalar cl, cr;
  for (const auto& ta : a.coeffs.terms())
    for (const auto& tb : b.coeffs.terms()) {
      if (!monomial_product(a.left, ta.index / dr, tb.index / dr, l, cl)) continue;
      if (!monomial_product(a.right, ta.index % dr, tb.index % dr, r, cr)) continue;
      acc.add(l * dr + r, ta.coeff * tb.coeff * cl * cr);
    }
  return {a.left, a.right, acc.take()};
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return same_algebra(a.left, b.left) && same_algebra(a.right, b.right) && a.coeffs == b.coeffs;
}

CycScalar DualElement::evaluate(const TaftElement& a) const {
  require_same(desc, a.desc);
  CycScalar out;
  for (const auto& t : a.coeffs.terms()) {
    const CycScalar c = coeffs.coeff(t.index);
    if (!c.is_zero()) out += c * t.coeff;
  }
  return out;
}

TaftElement taft_multiply(const TaftElement& a, const TaftElement& b) {
  require_same(a.desc, b.desc);
  return {a.desc, multiply_vecs(a.desc, a.coeffs, b.coeffs)};
}

TensorElement taft_comultiply(const TaftElement& a) {
  const TaftDescriptor& d = a.desc;
  const TaftElement one = TaftElement::one(d), h = TaftElement::h(d), x = TaftElement::x(d);
  const TensorElement dh = TensorElement::pure(h, h);
  const TensorElement dx = TensorElement::pure(x, h) + TensorElement::pure(one, x);
  TensorElement out{d, d, {}};
  for (const auto& t : a.coeffs.terms()) {
    const int i = static_cast<int>(t.index / d.m), j = static_cast<int>(t.index % d.m);
    TensorElement p = TensorElement::pure(one, one);
    for (int e = 0; e < i; ++e) p = p * dh;
    for (int e = 0; e < j; ++e) p = p * dx;
    p.coeffs *= t.coeff;
    out = out + p;
  }
  return out;
}

CycScalar taft_counit(const TaftElement& a) {
  CycScalar out;
  for (const auto& t : a.coeffs.terms())
    if (t.index % a.desc.m == 0) out += t.coeff;
  return out;
}

TaftElement taft_antipode(const TaftElement& a) {
  const TaftDescriptor& d = a.desc;
  const TaftElement s_h = TaftElement::monomial(d, d.m - 1, 0);
  const TaftElement s_x = CycScalar(-1) * (TaftElement::x(d) * s_h);
  TaftElement out = TaftElement::zero(d);
  for (const auto& t : a.coeffs.terms()) {
    const int i = static_cast<int>(t.index / d.m), j = static_cast<int>(t.index % d.m);
    TaftElement p = TaftElement::one(d);
    for (int e = 0; e < j; ++e) p = p * s_x;
    for (int e = 0; e < i; ++e) p = p * s_h;
    out += t.coeff * p;
  }
  return out;
}

std::vector<TaftElement> group_likes(const TaftDescriptor& d) {
  std::vector<TaftElement> out;
  for (int i = 0; i < d.m; ++i) out.push_back(TaftElement::monomial(d, i, 0));
  return out;
}

std::vector<TaftElement> skew_primitives(const TaftDescriptor& d, int j) {
  if (j < 0 || j >= d.m) throw std::invalid_argument("skew_primitives: j out of range");
  std::vector<TaftElement> out{TaftElement::monomial(d, j, 0) - TaftElement::one(d)};
  if (j == 1) out.push_back(TaftElement::x(d));
  return out;
}

HopfStructure hopf_structure(const TaftDescriptor& d) {
  HopfStructure out;
  out.name = "T(" + std::to_string(d.m) + ", " + d.q.to_string() + ")";
  const Index n = d.dim();
  out.dim = n;
  for (Index r = 0; r < n; ++r) {
    out.basis.push_back({0, 0, static_cast<int>(r / d.m), static_cast<int>(r % d.m)});
    out.basis_names.push_back(d.monomial(r));
  }
  out.mult.resize(n * n);
  Index idx;
  CycScalar c;
  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s)
      if (monomial_product(d, r, s, idx, c)) out.mult[r * n + s] = SparseVec::basis(idx, c);
  for (Index r = 0; r < n; ++r) {
    const TaftElement e{d, SparseVec::basis(r)};
    out.comult.push_back(taft_comultiply(e).coeffs);
    out.counit.push_back(taft_counit(e));
    out.antipode.push_back(taft_antipode(e).coeffs);
  }
  out.unit = SparseVec::basis(0);
  return out;
}

HopfStructure dual_structure(const HopfStructure& h, const std::string& name) {
  const Index n = h.dim;
  HopfStructure out;
  out.name = name;
  out.dim = n;
  out.basis = h.basis;
  for (const auto& b : h.basis_names) out.basis_names.push_back("(" + b + ")*");
  std::vector<std::vector<Term>> mult(n * n), comult(n), antipode(n);
  for (Index t = 0; t < n; ++t)
    for (const auto& c : h.comult[t].terms()) mult[c.index].push_back({t, c.coeff});
  for (Index rs = 0; rs < n * n; ++rs)
    for (const auto& c : h.mult[rs].terms()) comult[c.index].push_back({rs, c.coeff});
  for (Index r = 0; r < n; ++r)
    for (const auto& c : h.antipode[r].terms()) antipode[c.index].push_back({r, c.coeff});
  for (auto& v : mult) out.mult.push_back(SparseVec::from_terms(std::move(v)));
  for (auto& v : comult) out.comult.push_back(SparseVec::from_terms(std::move(v)));
  for (auto& v : antipode) out.antipode.push_back(SparseVec::from_terms(std::move(v)));
  // eps_{H*}(f) = f(1); the unit of H* is eps_H.
  out.counit.assign(n, CycScalar());
  for (const auto& t : h.unit.terms()) out.counit[t.index] = t.coeff;
  std::vector<Term> unit;
  for (Index r = 0; r < n; ++r) unit.push_back({r, h.counit[r]});
  out.unit = SparseVec::from_terms(std::move(unit));
  return out;
}

CycScalar TaftDual::pairing(const SparseVec& functional, const SparseVec& element) const {
  return DualElement{desc, functional}.evaluate(TaftElement{desc, element});
}

TaftDual taft_dual(const TaftDescriptor& d) {
  auto algebra = std::make_shared<const HopfStructure>(hopf_structure(d));
  auto dual = std::make_shared<const HopfStructure>(dual_structure(*algebra, algebra->name + "^*"));
  DualElement h_star{d, {}}, x_star{d, {}};
  for (int i = 0; i < d.m; ++i) {
    h_star.coeffs += SparseVec::basis(d.index(i, 0), d.q.pow(i));
    x_star.coeffs += SparseVec::basis(d.index(i, 1));
  }
  LinearMap psi = algebra_map_from_generators(algebra, dual, {SparseVec(), SparseVec(), h_star.coeffs, x_star.coeffs});
  return {d, algebra, dual, h_star, x_star, std::move(psi)};
}

StructuralIsos structural_isos(const TaftDescriptor& d) {
  TaftDual td = taft_dual(d);
  if (!is_hopf_iso(td.psi)) throw std::logic_error("psi: T -> T^* failed verification");

  auto cop_algebra = std::make_shared<const HopfStructure>(cop(*td.algebra));
  const TaftDescriptor target(d.m, d.q.pow(d.m - 1), d.group_letter, d.nil_letter);
  auto target_algebra = std::make_shared<const HopfStructure>(hopf_structure(target));
  const SparseVec img_h = SparseVec::basis(target.index(d.m - 1, 0));
  const SparseVec img_x = SparseVec::basis(target.index(d.m - 1, 1), -d.q.pow(d.m - 1));
  LinearMap phi = algebra_map_from_generators(cop_algebra, target_algebra, {SparseVec(), SparseVec(), img_h, img_x});
  if (!is_hopf_iso(phi)) throw std::logic_error("T^cop -> T(q^{m-1}) failed verification");
  return {std::move(td.psi), std::move(phi)};
}

}  // namespace taftcross
