#include "taftcross/linear_map.hpp"

#include "taftcross/parallel.hpp"

#include <stdexcept>

namespace taftcross {

SparseVec LinearMap::apply(const SparseVec& v) const {
  Accumulator acc(codomain->dim);
  for (const auto& t : v.terms()) acc.add(columns[t.index], t.coeff);
  return acc.take();
}

SparseVec LinearMap::apply_tensor(const SparseVec& t) const {
  const Index d = domain->dim, e = codomain->dim;
  Accumulator acc(e * e);
  for (const auto& term : t.terms()) {
    const SparseVec& a = columns[term.index / d];
    const SparseVec& b = columns[term.index % d];
    for (const auto& ta : a.terms()) {
      const CycScalar k = term.coeff * ta.coeff;
      for (const auto& tb : b.terms()) acc.add(ta.index * e + tb.index, k * tb.coeff);
    }
  }
  return acc.take();
}

LinearMap identity_map(std::shared_ptr<const HopfStructure> h) {
  LinearMap f{h, h, {}};
  for (Index i = 0; i < h->dim; ++i) f.columns.push_back(SparseVec::basis(i));
  return f;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (g.codomain->dim != f.domain->dim) throw std::invalid_argument("compose: dimension mismatch");
  LinearMap out{g.domain, f.codomain, {}};
  for (const auto& col : g.columns) out.columns.push_back(f.apply(col));
  return out;
}

bool operator==(const LinearMap& a, const LinearMap& b) { return a.columns == b.columns; }

LinearMap algebra_map_from_generators(std::shared_ptr<const HopfStructure> domain,
                                      std::shared_ptr<const HopfStructure> codomain,
                                      const std::array<SparseVec, 4>& letter_images) {
  LinearMap f{domain, codomain, {}};
  f.columns.reserve(domain->dim);
  for (const auto& label : domain->basis) {
    SparseVec img = codomain->unit;
    for (int letter = 0; letter < 4; ++letter)
      for (int e = 0; e < label[letter]; ++e) img = codomain->multiply(img, letter_images[letter]);
    f.columns.push_back(std::move(img));
  }
  return f;
}

namespace {

std::vector<SparseVec> rows_of(const std::vector<SparseVec>& columns) {
  Index nrows = 0;
  for (const auto& c : columns)
    for (const auto& t : c.terms()) nrows = std::max(nrows, t.index + 1);
  std::vector<std::vector<Term>> rows(nrows);
  for (Index j = 0; j < columns.size(); ++j)
    for (const auto& t : columns[j].terms()) rows[t.index].push_back({j, t.coeff});
  std::vector<SparseVec> out;
  out.reserve(nrows);
  for (auto& r : rows) out.push_back(SparseVec::from_terms(std::move(r)));
  return out;
}

}  // namespace

std::size_t rank(const std::vector<SparseVec>& columns) {
  std::vector<SparseVec> rows = rows_of(columns);
  CycScalar prev(1);
  std::size_t r = 0;
  for (Index col = 0; col < columns.size() && r < rows.size(); ++col) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!rows[i].coeff(col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const CycScalar p = rows[r].coeff(col);
    const CycScalar ratio = p / prev;
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const CycScalar a = rows[i].coeff(col);
      if (a.is_zero()) {
        rows[i] *= ratio;
        continue;
      }
      SparseVec next = p * rows[i] - a * rows[r];
      next *= prev.inverse();
      rows[i] = std::move(next);
    }
    prev = p;
    ++r;
  }
  return r;
}

std::optional<std::vector<SparseVec>> invert(const std::vector<SparseVec>& columns, std::size_t dim) {
  if (columns.size() != dim) throw std::invalid_argument("invert: matrix is not square");
  // Gauss-Jordan on [M | I]; augmented columns are offset by dim.
  std::vector<SparseVec> rows = rows_of(columns);
  rows.resize(dim);
  for (Index i = 0; i < dim; ++i) rows[i] += SparseVec::basis(dim + i);
  for (Index col = 0; col < dim; ++col) {
    std::size_t pivot = dim;
    for (std::size_t i = col; i < dim; ++i)
      if (!rows[i].coeff(col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot == dim) return std::nullopt;
    std::swap(rows[col], rows[pivot]);
    rows[col] *= rows[col].coeff(col).inverse();
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == col) continue;
      const CycScalar a = rows[i].coeff(col);
      if (!a.is_zero()) rows[i] -= a * rows[col];
    }
  }
  std::vector<std::vector<Term>> inv_cols(dim);
  for (Index i = 0; i < dim; ++i)
    for (const auto& t : rows[i].terms())
      if (t.index >= dim) inv_cols[t.index - dim].push_back({i, t.coeff});
  std::vector<SparseVec> out;
  out.reserve(dim);
  for (auto& c : inv_cols) out.push_back(SparseVec::from_terms(std::move(c)));
  return out;
}

AxiomReport hopf_morphism_report(const LinearMap& f, unsigned jobs) {
  const HopfStructure& a = *f.domain;
  const HopfStructure& b = *f.codomain;
  const Index d = a.dim;
  AxiomReport report;
  auto fail = [](AxiomReport& rep, const char* axiom, std::vector<std::string> loc, std::string res) {
    rep.record_failure({axiom, std::move(loc), std::move(res)});
  };

  report.record_check("unital");
  const SparseVec du = f.apply(a.unit) - b.unit;
  if (!du.is_zero()) fail(report, "unital", {"1"}, b.format(du));

  if (!jobs) jobs = default_jobs();
  std::vector<AxiomReport> partial(jobs);
  parallel_for(d, jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    AxiomReport& rep = partial[w];
    for (Index r = begin; r < end; ++r) {
      const std::string& rn = a.basis_names[r];
      rep.record_check("comultiplicative");
      const SparseVec dc = b.comultiply(f.columns[r]) - f.apply_tensor(a.comult[r]);
      if (!dc.is_zero()) fail(rep, "comultiplicative", {rn}, b.format_tensor(dc));
      rep.record_check("counital");
      const CycScalar de = b.counit_of(f.columns[r]) - a.counit[r];
      if (!de.is_zero()) fail(rep, "counital", {rn}, de.to_string());
      for (Index s = 0; s < d; ++s) {
        rep.record_check("multiplicative");
        const SparseVec dm = f.apply(a.product(r, s)) - b.multiply(f.columns[r], f.columns[s]);
        if (!dm.is_zero()) fail(rep, "multiplicative", {rn, a.basis_names[s]}, b.format(dm));
      }
    }
  });
  for (const auto& p : partial) report.merge(p);
  return report;
}

bool is_bijective(const LinearMap& f) {
  return f.domain->dim == f.codomain->dim && rank(f.columns) == f.domain->dim;
}

bool is_hopf_iso(const LinearMap& f, unsigned jobs) {
  return is_bijective(f) && hopf_morphism_report(f, jobs).pass();
}

}  // namespace taftcross
