#include "taftcross/hopf_structure.hpp"

#include "taftcross/linear_map.hpp"
#include "taftcross/parallel.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace taftcross {

SparseVec HopfStructure::multiply(const SparseVec& a, const SparseVec& b) const {
  Accumulator acc(dim);
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms()) acc.add(product(ta.index, tb.index), ta.coeff * tb.coeff);
  return acc.take();
}

SparseVec HopfStructure::comultiply(const SparseVec& a) const {
  Accumulator acc(dim * dim);
  for (const auto& t : a.terms()) acc.add(comult[t.index], t.coeff);
  return acc.take();
}

SparseVec HopfStructure::comultiply_twice(const SparseVec& a) const {
  Accumulator acc(dim * dim * dim);
  for (const auto& t : a.terms()) {
    for (const auto& c : comult[t.index].terms()) {
      const Index left = c.index / dim;
      const Index right = c.index % dim;
      const CycScalar k = t.coeff * c.coeff;
      for (const auto& d : comult[left].terms()) acc.add(d.index * dim + right, k * d.coeff);
    }
  }
  return acc.take();
}

CycScalar HopfStructure::counit_of(const SparseVec& a) const {
  CycScalar out;
  for (const auto& t : a.terms())
    if (!counit[t.index].is_zero()) out += t.coeff * counit[t.index];
  return out;
}

SparseVec HopfStructure::antipode_of(const SparseVec& a) const {
  Accumulator acc(dim);
  for (const auto& t : a.terms()) acc.add(antipode[t.index], t.coeff);
  return acc.take();
}

SparseVec HopfStructure::tensor_multiply(const SparseVec& x, const SparseVec& y) const {
  Accumulator acc(dim * dim);
  for (const auto& tx : x.terms()) {
    const Index x1 = tx.index / dim, x2 = tx.index % dim;
    for (const auto& ty : y.terms()) {
      const Index y1 = ty.index / dim, y2 = ty.index % dim;
      const CycScalar k = tx.coeff * ty.coeff;
      for (const auto& p1 : product(x1, y1).terms())
        for (const auto& p2 : product(x2, y2).terms()) acc.add(p1.index * dim + p2.index, k * p1.coeff * p2.coeff);
    }
  }
  return acc.take();
}

Index HopfStructure::index_of(const Label& label) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return i;
  throw std::invalid_argument(name + ": no basis element with the requested label");
}

namespace {

std::string coeff_prefix(const CycScalar& c, bool first) {
  std::string s = c.to_string();
  const bool simple = c.is_rational();
  std::string out;
  if (simple) {
    const bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    out = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (s != "1") out += s + "*";
  } else {
    out = (first ? "" : " + ") + std::string("(") + s + ")*";
  }
  return out;
}

}  // namespace

std::string HopfStructure::format(const SparseVec& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : v.terms()) {
    out += coeff_prefix(t.coeff, first) + basis_names[t.index];
    first = false;
  }
  return out;
}

std::string HopfStructure::format_tensor(const SparseVec& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : v.terms()) {
    out += coeff_prefix(t.coeff, first) + "(" + basis_names[t.index / dim] + " (x) " + basis_names[t.index % dim] + ")";
    first = false;
  }
  return out;
}

std::string monomial_name(const Label& label, const std::array<std::string, 4>& letters) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (label[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += letters[i];
    if (label[i] > 1) out += "^" + std::to_string(label[i]);
  }
  return out.empty() ? "1" : out;
}

HopfStructure cop(const HopfStructure& h) {
  HopfStructure out = h;
  out.name = h.name + "^cop";
  const Index d = h.dim;
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<Term> flipped;
    for (const auto& t : h.comult[r].terms()) flipped.push_back({(t.index % d) * d + t.index / d, t.coeff});
    out.comult[r] = SparseVec::from_terms(std::move(flipped));
  }
  auto inv = invert(h.antipode, d);
  if (!inv) throw std::logic_error("cop: antipode is not invertible");
  out.antipode = std::move(*inv);
  return out;
}

HopfStructure tensor_product(const HopfStructure& a, const HopfStructure& b) {
  HopfStructure out;
  out.name = a.name + " (x) " + b.name;
  const Index da = a.dim, db = b.dim, d = da * db;
  out.dim = d;
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) {
      out.basis.push_back({a.basis[i][2], a.basis[i][3], b.basis[j][2], b.basis[j][3]});
      out.basis_names.push_back(monomial_name(out.basis.back()));
    }
  auto combine = [&](const SparseVec& x, const SparseVec& y) {
    std::vector<Term> terms;
    for (const auto& tx : x.terms())
      for (const auto& ty : y.terms()) terms.push_back({tx.index * db + ty.index, tx.coeff * ty.coeff});
    return SparseVec::from_terms(std::move(terms));
  };
  out.mult.resize(d * d);
  for (Index r = 0; r < d; ++r)
    for (Index s = 0; s < d; ++s)
      out.mult[r * d + s] = combine(a.product(r / db, s / db), b.product(r % db, s % db));
  for (Index r = 0; r < d; ++r) {
    const Index ra = r / db, rb = r % db;
    std::vector<Term> terms;
    for (const auto& ta : a.comult[ra].terms())
      for (const auto& tb : b.comult[rb].terms()) {
        const Index a1 = ta.index / da, a2 = ta.index % da;
        const Index b1 = tb.index / db, b2 = tb.index % db;
        terms.push_back({(a1 * db + b1) * d + (a2 * db + b2), ta.coeff * tb.coeff});
      }
    out.comult.push_back(SparseVec::from_terms(std::move(terms)));
    out.counit.push_back(a.counit[ra] * b.counit[rb]);
    out.antipode.push_back(combine(a.antipode[ra], b.antipode[rb]));
  }
  out.unit = combine(a.unit, b.unit);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class HopfChecker {
 public:
  explicit HopfChecker(const HopfStructure& h) : h_(h), d_(h.dim) {}

  void check_unit(AxiomReport& report) const {
    for (Index r = 0; r < d_; ++r) {
      const SparseVec e = SparseVec::basis(r);
      report.record_check("unit", 2);
      const SparseVec left = h_.multiply(h_.unit, e) - e;
      if (!left.is_zero()) fail(report, "unit", {name(r)}, h_.format(left));
      const SparseVec right = h_.multiply(e, h_.unit) - e;
      if (!right.is_zero()) fail(report, "unit", {name(r)}, h_.format(right));
    }
    report.record_check("comult-multiplicative");
    SparseVec unit_tensor;
    {
      Accumulator acc(d_ * d_);
      for (const auto& a : h_.unit.terms())
        for (const auto& b : h_.unit.terms()) acc.add(a.index * d_ + b.index, a.coeff * b.coeff);
      unit_tensor = acc.take();
    }
    const SparseVec du = h_.comultiply(h_.unit) - unit_tensor;
    if (!du.is_zero()) fail(report, "comult-multiplicative", {"1"}, h_.format_tensor(du));
    report.record_check("counit-multiplicative");
    if (!h_.counit_of(h_.unit).is_one())
      fail(report, "counit-multiplicative", {"1"}, (h_.counit_of(h_.unit) - CycScalar(1)).to_string());
  }

  void check_associativity(Index r, Index s, Index t, Accumulator& acc, AxiomReport& report) const {
    report.record_check("associativity");
    for (const auto& u : h_.product(r, s).terms()) acc.add(h_.product(u.index, t), u.coeff);
    for (const auto& v : h_.product(s, t).terms()) acc.add(h_.product(r, v.index), -v.coeff);
    const SparseVec res = acc.take();
    if (!res.is_zero()) fail(report, "associativity", {name(r), name(s), name(t)}, h_.format(res));
  }

  void check_single(Index r, Accumulator& acc3, AxiomReport& report) const {
    const SparseVec& dr = h_.comult[r];
    // coassociativity
    report.record_check("coassociativity");
    for (const auto& t : dr.terms()) {
      const Index a = t.index / d_, b = t.index % d_;
      for (const auto& u : h_.comult[a].terms()) acc3.add(u.index * d_ + b, t.coeff * u.coeff);
      for (const auto& u : h_.comult[b].terms()) acc3.add(a * d_ * d_ + u.index, -(t.coeff * u.coeff));
    }
    const SparseVec coassoc = acc3.take();
    if (!coassoc.is_zero()) fail(report, "coassociativity", {name(r)}, std::to_string(coassoc.size()) + " nonzero terms");

    // counit
    report.record_check("counit", 2);
    Accumulator acc(d_);
    for (const auto& t : dr.terms()) acc.add(t.index % d_, t.coeff * h_.counit[t.index / d_]);
    acc.add(r, CycScalar(-1));
    SparseVec res = acc.take();
    if (!res.is_zero()) fail(report, "counit", {name(r)}, h_.format(res));
    for (const auto& t : dr.terms()) acc.add(t.index / d_, t.coeff * h_.counit[t.index % d_]);
    acc.add(r, CycScalar(-1));
    res = acc.take();
    if (!res.is_zero()) fail(report, "counit", {name(r)}, h_.format(res));

    // antipode
    report.record_check("antipode-left");
    report.record_check("antipode-right");
    for (const auto& t : dr.terms()) {
      const Index a = t.index / d_, b = t.index % d_;
      for (const auto& s : h_.antipode[a].terms()) acc.add(h_.product(s.index, b), t.coeff * s.coeff);
    }
    acc.add(h_.unit, -h_.counit[r]);
    res = acc.take();
    if (!res.is_zero()) fail(report, "antipode-left", {name(r)}, h_.format(res));
    for (const auto& t : dr.terms()) {
      const Index a = t.index / d_, b = t.index % d_;
      for (const auto& s : h_.antipode[b].terms()) acc.add(h_.product(a, s.index), t.coeff * s.coeff);
    }
    acc.add(h_.unit, -h_.counit[r]);
    res = acc.take();
    if (!res.is_zero()) fail(report, "antipode-right", {name(r)}, h_.format(res));
  }

  void check_pair(Index r, Index s, Accumulator& acc2, AxiomReport& report) const {
    // Delta(e_r e_s) = Delta(e_r) Delta(e_s)
    report.record_check("comult-multiplicative");
    for (const auto& tr : h_.comult[r].terms()) {
      const Index r1 = tr.index / d_, r2 = tr.index % d_;
      for (const auto& ts : h_.comult[s].terms()) {
        const Index s1 = ts.index / d_, s2 = ts.index % d_;
        const CycScalar k = tr.coeff * ts.coeff;
        const SparseVec& p1 = h_.product(r1, s1);
        if (p1.is_zero()) continue;
        const SparseVec& p2 = h_.product(r2, s2);
        for (const auto& u : p1.terms()) {
          const CycScalar ku = k * u.coeff;
          for (const auto& v : p2.terms()) acc2.add(u.index * d_ + v.index, ku * v.coeff);
        }
      }
    }
    const SparseVec& rs = h_.product(r, s);
    for (const auto& w : rs.terms()) acc2.add(h_.comult[w.index], -w.coeff);
    const SparseVec res = acc2.take();
    if (!res.is_zero()) fail(report, "comult-multiplicative", {name(r), name(s)}, h_.format_tensor(res));

    report.record_check("counit-multiplicative");
    const CycScalar diff = h_.counit_of(rs) - h_.counit[r] * h_.counit[s];
    if (!diff.is_zero()) fail(report, "counit-multiplicative", {name(r), name(s)}, diff.to_string());
  }

 private:
  const std::string& name(Index r) const { return h_.basis_names[r]; }
  static void fail(AxiomReport& report, const std::string& axiom, std::vector<std::string> loc, std::string residual) {
    report.record_failure({axiom, std::move(loc), std::move(residual)});
  }

  const HopfStructure& h_;
  const Index d_;
};

}  // namespace

AxiomReport verify_hopf(const HopfStructure& h, const HopfCheckOptions& options) {
  const HopfChecker checker(h);
  const Index d = h.dim;
  AxiomReport report;
  checker.check_unit(report);

  const unsigned jobs = options.jobs ? options.jobs : default_jobs();
  std::vector<AxiomReport> partial(jobs);
  parallel_for(d, jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    Accumulator acc1(d), acc2(d * d), acc3(d * d * d);
    for (std::size_t r = begin; r < end; ++r) {
      checker.check_single(r, acc3, partial[w]);
      for (Index s = 0; s < d; ++s) checker.check_pair(r, s, acc2, partial[w]);
      if (d <= options.exhaustive_triple_limit)
        for (Index s = 0; s < d; ++s)
          for (Index t = 0; t < d; ++t) checker.check_associativity(r, s, t, acc1, partial[w]);
    }
  });
  for (const auto& p : partial) report.merge(p);

  if (d > options.exhaustive_triple_limit) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Index> pick(0, d - 1);
    std::vector<std::array<Index, 3>> triples(options.sampled_triples);
    for (auto& t : triples) t = {pick(rng), pick(rng), pick(rng)};
    std::vector<AxiomReport> sampled(jobs);
    parallel_for(triples.size(), jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
      Accumulator acc(d);
      for (std::size_t i = begin; i < end; ++i)
        checker.check_associativity(triples[i][0], triples[i][1], triples[i][2], acc, sampled[w]);
    });
    for (const auto& p : sampled) report.merge(p);
  }
  return report;
}

}  // namespace taftcross
