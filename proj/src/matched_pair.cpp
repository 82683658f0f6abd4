#include "taftcross/matched_pair.hpp"

#include "taftcross/parallel.hpp"

#include <numeric>
#include <stdexcept>

namespace taftcross {

std::string family_name(PairFamily f) {
  switch (f) {
    case PairFamily::sigma: return "sigma";
    case PairFamily::alpha: return "alpha";
    case PairFamily::custom: return "custom";
  }
  return "custom";
}

namespace {

// Recursive extension of generator tables. Monomials of H are h^k x^l, of A
// H^i X^j; both read off the structure labels.
class ActionExtender {
 public:
  ActionExtender(const HopfStructure& a, const HopfStructure& h, const GeneratorTables& gens)
      : a_(a), h_(h), gens_(gens), da_(a.dim), left_(a.dim * h.dim), right_(a.dim * h.dim),
        left_state_(a.dim * h.dim, 0), right_state_(a.dim * h.dim, 0) {
    a_letter_ = {a.index_of({0, 0, 1, 0}), a.index_of({0, 0, 0, 1})};
    h_letter_ = {h.index_of({0, 0, 1, 0}), h.index_of({0, 0, 0, 1})};
  }

  void run() {
    for (Index g = 0; g < h_.dim; ++g)
      for (Index c = 0; c < da_; ++c) {
        left(g, c);
        right(g, c);
      }
  }

  std::vector<SparseVec> take_left() { return std::move(left_); }
  std::vector<SparseVec> take_right() { return std::move(right_); }

 private:
  static int degree(const Label& l) { return l[2] + l[3]; }
  static bool is_unit(const Label& l) { return degree(l) == 0; }

  // First letter and remaining monomial of g = letter * rest.
  void split_first(Index g, int& letter, Index& rest) const {
    const Label& l = h_.basis[g];
    if (l[2] > 0) {
      letter = 0;
      rest = h_.index_of({0, 0, l[2] - 1, l[3]});
    } else {
      letter = 1;
      rest = h_.index_of({0, 0, 0, l[3] - 1});
    }
  }

  // c = rest * letter.
  void split_last(Index c, int& letter, Index& rest) const {
    const Label& l = a_.basis[c];
    if (l[3] > 0) {
      letter = 1;
      rest = a_.index_of({0, 0, l[2], l[3] - 1});
    } else {
      letter = 0;
      rest = a_.index_of({0, 0, l[2] - 1, 0});
    }
  }

  int letter_of(const Label& l) const { return l[2] == 1 ? 0 : 1; }

  void enter(std::vector<std::uint8_t>& state, Index key) {
    if (state[key] == 1) throw std::domain_error("action tables do not determine a terminating extension");
    state[key] = 1;
  }

  // g |> c
  const SparseVec& left(Index g, Index c) {
    const Index key = g * da_ + c;
    if (left_state_[key] == 2) return left_[key];
    enter(left_state_, key);
    const Label& gl = h_.basis[g];
    const Label& cl = a_.basis[c];
    SparseVec out;
    if (is_unit(cl)) {
      out = h_.counit[g] * a_.unit;
    } else if (is_unit(gl)) {
      out = SparseVec::basis(c);
    } else if (degree(gl) >= 2) {
      int letter;
      Index rest;
      split_first(g, letter, rest);
      const SparseVec inner = left(rest, c);
      Accumulator acc(da_);
      for (const auto& t : inner.terms()) acc.add(left(h_letter_[letter], t.index), t.coeff);
      out = acc.take();
    } else if (degree(cl) >= 2) {
      // g |> (rest * last) = (g1 |> rest1)((g2 <| rest2) |> last)
      int last;
      Index rest;
      split_last(c, last, rest);
      Accumulator acc(da_);
      for (const auto& tg : h_.comult[g].terms()) {
        const Index g1 = tg.index / h_.dim, g2 = tg.index % h_.dim;
        for (const auto& tr : a_.comult[rest].terms()) {
          const Index r1 = tr.index / da_, r2 = tr.index % da_;
          const SparseVec p = left(g1, r1);
          if (p.is_zero()) continue;
          const SparseVec acted = right(g2, r2);
          Accumulator inner(da_);
          for (const auto& t : acted.terms()) inner.add(left(t.index, a_letter_[last]), t.coeff);
          const SparseVec rhs = inner.take();
          acc.add(a_.multiply(p, rhs), tg.coeff * tr.coeff);
        }
      }
      out = acc.take();
    } else {
      out = gens_.left[letter_of(gl)][letter_of(cl)];
    }
    left_[key] = std::move(out);
    left_state_[key] = 2;
    return left_[key];
  }

  // g <| c
  const SparseVec& right(Index g, Index c) {
    const Index key = g * da_ + c;
    if (right_state_[key] == 2) return right_[key];
    enter(right_state_, key);
    const Label& gl = h_.basis[g];
    const Label& cl = a_.basis[c];
    SparseVec out;
    if (is_unit(gl)) {
      out = a_.counit[c] * h_.unit;
    } else if (is_unit(cl)) {
      out = SparseVec::basis(g);
    } else if (degree(cl) >= 2) {
      int last;
      Index rest;
      split_last(c, last, rest);
      const SparseVec inner = right(g, rest);
      Accumulator acc(h_.dim);
      for (const auto& t : inner.terms()) acc.add(right(t.index, a_letter_[last]), t.coeff);
      out = acc.take();
    } else if (degree(gl) >= 2) {
      // (first * rest) <| c = (first <| (rest1 |> c1)) (rest2 <| c2)
      int first;
      Index rest;
      split_first(g, first, rest);
      Accumulator acc(h_.dim);
      for (const auto& tr : h_.comult[rest].terms()) {
        const Index r1 = tr.index / h_.dim, r2 = tr.index % h_.dim;
        for (const auto& tc : a_.comult[c].terms()) {
          const Index c1 = tc.index / da_, c2 = tc.index % da_;
          const SparseVec q = right(r2, c2);
          if (q.is_zero()) continue;
          const SparseVec moved = left(r1, c1);
          Accumulator inner(h_.dim);
          for (const auto& t : moved.terms()) inner.add(right(h_letter_[first], t.index), t.coeff);
          const SparseVec lhs = inner.take();
          acc.add(h_.multiply(lhs, q), tr.coeff * tc.coeff);
        }
      }
      out = acc.take();
    } else {
      out = gens_.right[letter_of(gl)][letter_of(cl)];
    }
    right_[key] = std::move(out);
    right_state_[key] = 2;
    return right_[key];
  }

  const HopfStructure& a_;
  const HopfStructure& h_;
  const GeneratorTables& gens_;
  const Index da_;
  std::array<Index, 2> a_letter_{}, h_letter_{};
  std::vector<SparseVec> left_, right_;
  std::vector<std::uint8_t> left_state_, right_state_;
};

}  // namespace

MatchedPair MatchedPair::from_generator_tables(const TaftDescriptor& a, const TaftDescriptor& h,
                                               const GeneratorTables& tables, PairFamily family, CycScalar param) {
  MatchedPair mp;
  mp.a_ = std::make_shared<const HopfStructure>(hopf_structure(a));
  mp.h_ = std::make_shared<const HopfStructure>(hopf_structure(h));
  mp.a_desc_ = a;
  mp.h_desc_ = h;
  mp.gens_ = tables;
  mp.family_ = family;
  mp.param_ = std::move(param);
  ActionExtender ext(*mp.a_, *mp.h_, tables);
  ext.run();
  mp.left_ = ext.take_left();
  mp.right_ = ext.take_right();
  return mp;
}

MatchedPair MatchedPair::from_full_tables(std::shared_ptr<const HopfStructure> a, std::shared_ptr<const HopfStructure> h,
                                          std::vector<SparseVec> left, std::vector<SparseVec> right) {
  if (left.size() != a->dim * h->dim || right.size() != a->dim * h->dim)
    throw std::invalid_argument("action tables have the wrong size");
  MatchedPair mp;
  mp.a_ = std::move(a);
  mp.h_ = std::move(h);
  mp.left_ = std::move(left);
  mp.right_ = std::move(right);
  return mp;
}

SparseVec MatchedPair::act_left(const SparseVec& g, const SparseVec& a) const {
  Accumulator acc(a_->dim);
  for (const auto& tg : g.terms())
    for (const auto& ta : a.terms()) acc.add(left(tg.index, ta.index), tg.coeff * ta.coeff);
  return acc.take();
}

SparseVec MatchedPair::act_right(const SparseVec& g, const SparseVec& a) const {
  Accumulator acc(h_->dim);
  for (const auto& tg : g.terms())
    for (const auto& ta : a.terms()) acc.add(right(tg.index, ta.index), tg.coeff * ta.coeff);
  return acc.take();
}

bool same_actions(const MatchedPair& a, const MatchedPair& b) {
  return a.dim_a() == b.dim_a() && a.dim_h() == b.dim_h() && a.left_table() == b.left_table() &&
         a.right_table() == b.right_table();
}

namespace {

TaftDescriptor a_side(int n, const CycScalar& qbar) { return TaftDescriptor(n, qbar, "H", "X"); }
TaftDescriptor h_side(int m, const CycScalar& q) { return TaftDescriptor(m, q, "h", "x"); }

}  // namespace

MatchedPair family_sigma(int n, int m, const CycScalar& qbar, const CycScalar& q, const CycScalar& sigma) {
  const TaftDescriptor a = a_side(n, qbar), h = h_side(m, q);
  const int d = std::gcd(n, m);
  if (sigma.is_zero() || !sigma.pow(d).is_one())
    throw std::invalid_argument("sigma = " + sigma.to_string() + " is not a " + std::to_string(d) + "-th root of unity");
  GeneratorTables t;
  t.right[0][0] = SparseVec::basis(h.index(1, 0));
  t.right[1][0] = SparseVec::basis(h.index(0, 1), sigma);
  t.left[0][0] = SparseVec::basis(a.index(1, 0));
  t.left[0][1] = SparseVec::basis(a.index(0, 1), sigma);
  return MatchedPair::from_generator_tables(a, h, t, PairFamily::sigma, sigma);
}

MatchedPair family_alpha(int n, const CycScalar& q, const CycScalar& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("alpha = 0 gives the sigma family; use family_sigma");
  const TaftDescriptor a = a_side(n, q.pow(n - 1)), h = h_side(n, q);
  GeneratorTables t;
  t.right[0][0] = SparseVec::basis(h.index(1, 0));
  t.right[1][0] = SparseVec::basis(h.index(0, 1), q);
  t.right[1][1] = SparseVec::basis(0, alpha) - SparseVec::basis(h.index(1, 0), alpha);
  t.left[0][0] = SparseVec::basis(a.index(1, 0));
  t.left[0][1] = SparseVec::basis(a.index(0, 1), q);
  t.left[1][1] = SparseVec::basis(0, alpha) - SparseVec::basis(a.index(1, 0), alpha);
  return MatchedPair::from_generator_tables(a, h, t, PairFamily::alpha, alpha);
}

TaftElement act_left(const MatchedPair& mp, int k, int l, const TaftElement& a) {
  if (!mp.h_desc() || !mp.a_desc()) throw std::invalid_argument("act_left needs a pair of Taft algebras");
  const TaftDescriptor& hd = *mp.h_desc();
  if (!same_algebra(a.desc, *mp.a_desc())) throw std::invalid_argument("act_left: element is not in A");
  return {a.desc, mp.act_left(SparseVec::basis(hd.index(k, l)), a.coeffs)};
}

TaftElement act_right(const MatchedPair& mp, const TaftElement& g, int i, int j) {
  if (!mp.h_desc() || !mp.a_desc()) throw std::invalid_argument("act_right needs a pair of Taft algebras");
  const TaftDescriptor& ad = *mp.a_desc();
  if (!same_algebra(g.desc, *mp.h_desc())) throw std::invalid_argument("act_right: element is not in H");
  return {g.desc, mp.act_right(g.coeffs, SparseVec::basis(ad.index(i, j)))};
}

// ---------------------------------------------------------------------------

namespace {

class PairChecker {
 public:
  explicit PairChecker(const MatchedPair& mp)
      : mp_(mp), a_(*mp.a_structure()), h_(*mp.h_structure()), da_(a_.dim), dh_(h_.dim) {}

  // Everything indexed by a single basis element g of H.
  void check(Index g, AxiomReport& rep) const {
    for (Index a = 0; a < da_; ++a) check_pair(g, a, rep);
    for (Index a = 0; a < da_; ++a)
      for (Index b = 0; b < da_; ++b) check_triple_a(g, a, b, rep);
    for (Index t = 0; t < dh_; ++t)
      for (Index a = 0; a < da_; ++a) check_triple_h(g, t, a, rep);
  }

 private:
  std::vector<std::string> loc(std::initializer_list<std::string> names) const { return names; }
  const std::string& gn(Index g) const { return h_.basis_names[g]; }
  const std::string& an(Index a) const { return a_.basis_names[a]; }

  void fail(AxiomReport& rep, const char* axiom, std::vector<std::string> where, std::string residual) const {
    rep.record_failure({axiom, std::move(where), std::move(residual)});
  }

  void check_pair(Index g, Index a, AxiomReport& rep) const {
    const SparseVec& gl = mp_.left(g, a);
    const SparseVec& gr = mp_.right(g, a);

    // unit actions and mp1
    if (a == 0) {
      const SparseVec gv = SparseVec::basis(g);
      rep.record_check("right-unit");
      const SparseVec r = mp_.act_right(gv, a_.unit) - gv;
      if (!r.is_zero()) fail(rep, "right-unit", {gn(g), "1"}, h_.format(r));
      rep.record_check("mp1");
      const SparseVec r1 = mp_.act_left(gv, a_.unit) - h_.counit[g] * a_.unit;
      if (!r1.is_zero()) fail(rep, "mp1", {gn(g), "1"}, a_.format(r1));
    }
    if (g == 0) {
      const SparseVec av = SparseVec::basis(a);
      rep.record_check("left-unit");
      const SparseVec r = mp_.act_left(h_.unit, av) - av;
      if (!r.is_zero()) fail(rep, "left-unit", {"1", an(a)}, a_.format(r));
      rep.record_check("mp1");
      const SparseVec r1 = mp_.act_right(h_.unit, av) - a_.counit[a] * h_.unit;
      if (!r1.is_zero()) fail(rep, "mp1", {"1", an(a)}, h_.format(r1));
    }

    // coalgebra maps
    Accumulator acc_h(dh_ * dh_), acc_a(da_ * da_), acc_mix(dh_ * da_);
    rep.record_check("right-coalgebra");
    rep.record_check("left-coalgebra");
    rep.record_check("mp4");
    for (const auto& tg : h_.comult[g].terms()) {
      const Index g1 = tg.index / dh_, g2 = tg.index % dh_;
      for (const auto& ta : a_.comult[a].terms()) {
        const Index a1 = ta.index / da_, a2 = ta.index % da_;
        const CycScalar k = tg.coeff * ta.coeff;
        const SparseVec& r1 = mp_.right(g1, a1);
        const SparseVec& r2 = mp_.right(g2, a2);
        const SparseVec& l1 = mp_.left(g1, a1);
        const SparseVec& l2 = mp_.left(g2, a2);
        for (const auto& x : r1.terms())
          for (const auto& y : r2.terms()) acc_h.add(x.index * dh_ + y.index, k * x.coeff * y.coeff);
        for (const auto& x : l1.terms())
          for (const auto& y : l2.terms()) acc_a.add(x.index * da_ + y.index, k * x.coeff * y.coeff);
        // mp4: g1 <| a1 (x) g2 |> a2 - g2 <| a2 (x) g1 |> a1
        for (const auto& x : r1.terms())
          for (const auto& y : l2.terms()) acc_mix.add(x.index * da_ + y.index, k * x.coeff * y.coeff);
        for (const auto& x : r2.terms())
          for (const auto& y : l1.terms()) acc_mix.add(x.index * da_ + y.index, -(k * x.coeff * y.coeff));
      }
    }
    acc_h.add(h_.comultiply(gr), CycScalar(-1));
    acc_a.add(a_.comultiply(gl), CycScalar(-1));
    const SparseVec rh = acc_h.take(), ra = acc_a.take(), rm = acc_mix.take();
    if (!rh.is_zero()) fail(rep, "right-coalgebra", {gn(g), an(a)}, h_.format_tensor(rh));
    if (!ra.is_zero()) fail(rep, "left-coalgebra", {gn(g), an(a)}, a_.format_tensor(ra));
    if (!rm.is_zero()) fail(rep, "mp4", {gn(g), an(a)}, std::to_string(rm.size()) + " nonzero terms");

    rep.record_check("right-counit");
    rep.record_check("left-counit");
    const CycScalar e = h_.counit[g] * a_.counit[a];
    const CycScalar er = h_.counit_of(gr) - e, el = a_.counit_of(gl) - e;
    if (!er.is_zero()) fail(rep, "right-counit", {gn(g), an(a)}, er.to_string());
    if (!el.is_zero()) fail(rep, "left-counit", {gn(g), an(a)}, el.to_string());
  }

  // Right module axiom g <| (ab) = (g <| a) <| b, and mp2.
  void check_triple_a(Index g, Index a, Index b, AxiomReport& rep) const {
    rep.record_check("right-module");
    const SparseVec lhs = mp_.act_right(SparseVec::basis(g), a_.product(a, b));
    const SparseVec rhs = mp_.act_right(mp_.right(g, a), SparseVec::basis(b));
    const SparseVec r = lhs - rhs;
    if (!r.is_zero()) fail(rep, "right-module", {gn(g), an(a), an(b)}, h_.format(r));

    // g |> (ab) = (g1 |> a1)((g2 <| a2) |> b)
    rep.record_check("mp2");
    Accumulator acc(da_);
    acc.add(mp_.act_left(SparseVec::basis(g), a_.product(a, b)));
    const SparseVec eb = SparseVec::basis(b);
    for (const auto& tg : h_.comult[g].terms()) {
      const Index g1 = tg.index / dh_, g2 = tg.index % dh_;
      for (const auto& ta : a_.comult[a].terms()) {
        const Index a1 = ta.index / da_, a2 = ta.index % da_;
        const SparseVec& p = mp_.left(g1, a1);
        if (p.is_zero()) continue;
        const SparseVec q = mp_.act_left(mp_.right(g2, a2), eb);
        acc.add(a_.multiply(p, q), -(tg.coeff * ta.coeff));
      }
    }
    const SparseVec r2 = acc.take();
    if (!r2.is_zero()) fail(rep, "mp2", {gn(g), an(a), an(b)}, a_.format(r2));
  }

  // Left module axiom (gt) |> a = g |> (t |> a), and mp3.
  void check_triple_h(Index g, Index t, Index a, AxiomReport& rep) const {
    rep.record_check("left-module");
    const SparseVec lhs = mp_.act_left(h_.product(g, t), SparseVec::basis(a));
    const SparseVec rhs = mp_.act_left(SparseVec::basis(g), mp_.left(t, a));
    const SparseVec r = lhs - rhs;
    if (!r.is_zero()) fail(rep, "left-module", {gn(g), gn(t), an(a)}, a_.format(r));

    // (gt) <| a = (g <| (t1 |> a1)) (t2 <| a2)
    rep.record_check("mp3");
    Accumulator acc(dh_);
    acc.add(mp_.act_right(h_.product(g, t), SparseVec::basis(a)));
    const SparseVec eg = SparseVec::basis(g);
    for (const auto& tt : h_.comult[t].terms()) {
      const Index t1 = tt.index / dh_, t2 = tt.index % dh_;
      for (const auto& ta : a_.comult[a].terms()) {
        const Index a1 = ta.index / da_, a2 = ta.index % da_;
        const SparseVec& q = mp_.right(t2, a2);
        if (q.is_zero()) continue;
        const SparseVec p = mp_.act_right(eg, mp_.left(t1, a1));
        acc.add(h_.multiply(p, q), -(tt.coeff * ta.coeff));
      }
    }
    const SparseVec r3 = acc.take();
    if (!r3.is_zero()) fail(rep, "mp3", {gn(g), gn(t), an(a)}, h_.format(r3));
  }

  const MatchedPair& mp_;
  const HopfStructure& a_;
  const HopfStructure& h_;
  const Index da_, dh_;
};

}  // namespace

AxiomReport verify_matched_pair(const MatchedPair& mp, unsigned jobs) {
  const PairChecker checker(mp);
  if (!jobs) jobs = default_jobs();
  std::vector<AxiomReport> partial(jobs);
  parallel_for(mp.dim_h(), jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t g = begin; g < end; ++g) checker.check(g, partial[w]);
  });
  AxiomReport report;
  for (const auto& p : partial) report.merge(p);
  return report;
}

// ---------------------------------------------------------------------------

namespace {

CycScalar geometric(const CycScalar& b, int terms) {
  CycScalar sum, p(1);
  for (int i = 0; i < terms; ++i) {
    sum += p;
    p *= b;
  }
  return sum;
}

}  // namespace

std::vector<AnsatzResidual> ansatz_residuals(int n, int m, const CycScalar& qbar, const CycScalar& q,
                                             const AnsatzParams& p) {
  const CycScalar one(1);
  return {
      {"b^m = 1", p.b.pow(m) - one},
      {"a(1 + b + ... + b^(m-1)) = 0", p.a * geometric(p.b, m)},
      {"q(alpha + a beta) = b alpha", q * (p.alpha + p.a * p.beta) - p.b * p.alpha},
      {"b beta (q - 1) = 0", p.b * p.beta * (q - one)},
      {"sigma^n = 1", p.sigma.pow(n) - one},
      {"mu(1 - qbar sigma) = 0", p.mu * (one - qbar * p.sigma)},
      {"gamma(1 + sigma + ... + sigma^(n-1)) = 0", p.gamma * geometric(p.sigma, n)},
      {"gamma(q - 1) = 0", p.gamma * (q - one)},
      {"a(sigma - 1) = 0", p.a * (p.sigma - one)},
      {"mu(b - q) = 0", p.mu * (p.b - q)},
      {"a(qbar - 1) = 0", p.a * (qbar - one)},
      {"alpha(1 - sigma qbar) = 0", p.alpha * (one - p.sigma * qbar)},
      {"b = sigma", p.b - p.sigma},
      {"alpha = mu", p.alpha - p.mu},
  };
}

bool residuals_vanish(const std::vector<AnsatzResidual>& r) {
  for (const auto& x : r)
    if (!x.value.is_zero()) return false;
  return true;
}

GeneratorTables ansatz_tables(int n, int m, const CycScalar& qbar, const CycScalar& q, const AnsatzParams& p) {
  const TaftDescriptor a = a_side(n, qbar), h = h_side(m, q);
  const Index A1 = 0, AH = a.index(1, 0), AX = a.index(0, 1);
  const Index H1 = 0, Hh = h.index(1, 0), Hx = h.index(0, 1);
  GeneratorTables t;
  t.left[0][0] = SparseVec::basis(AH);
  t.left[0][1] = SparseVec::basis(A1, p.a) - SparseVec::basis(AH, p.a) + SparseVec::basis(AX, p.b);
  t.left[1][1] = SparseVec::basis(A1, p.alpha) - SparseVec::basis(AH, p.alpha) + SparseVec::basis(AX, p.beta);
  t.right[0][0] = SparseVec::basis(Hh);
  t.right[1][0] = SparseVec::basis(H1, p.gamma) - SparseVec::basis(Hh, p.gamma) + SparseVec::basis(Hx, p.sigma);
  t.right[1][1] = SparseVec::basis(H1, p.mu) - SparseVec::basis(Hh, p.mu);
  return t;
}

std::vector<CycScalar> default_alpha_samples() {
  return {CycScalar(1), CycScalar(-1), CycScalar(2), CycScalar(BigRational(1, 2))};
}

std::vector<MatchedPair> enumerate_matched_pairs(int n, int m, const CycScalar& qbar, const CycScalar& q,
                                                 const std::vector<CycScalar>& alpha_samples, unsigned jobs) {
  const int d = std::gcd(n, m);
  std::vector<MatchedPair> out;
  for (const auto& sigma : roots_of_unity_group(d, std::lcm(n, m))) out.push_back(family_sigma(n, m, qbar, q, sigma));
  if (m == n && qbar == q.pow(n - 1))
    for (const auto& alpha : alpha_samples) out.push_back(family_alpha(n, q, alpha));
  for (const auto& mp : out) {
    const AxiomReport rep = verify_matched_pair(mp, jobs);
    if (!rep.pass())
      throw std::logic_error(family_name(mp.family()) + " pair with parameter " + mp.param().to_string() +
                             " failed verification");
  }
  return out;
}

MatchedPair transport(const MatchedPair& mp, const LinearMap& theta) {
  const Index da = mp.dim_a(), dh = mp.dim_h();
  if (theta.domain->dim != da || theta.codomain->dim != da) throw std::invalid_argument("transport: dimension mismatch");
  const auto inv = invert(theta.columns, da);
  if (!inv) throw std::invalid_argument("transport: map is not bijective");
  const LinearMap theta_inv{theta.codomain, theta.domain, *inv};
  std::vector<SparseVec> left(da * dh), right(da * dh);
  for (Index g = 0; g < dh; ++g)
    for (Index a = 0; a < da; ++a) {
      const SparseVec ta = theta.columns[a];
      left[g * da + a] = theta_inv.apply(mp.act_left(SparseVec::basis(g), ta));
      right[g * da + a] = mp.act_right(SparseVec::basis(g), ta);
    }
  return MatchedPair::from_full_tables(theta.domain, mp.h_structure(), std::move(left), std::move(right));
}

}  // namespace taftcross
