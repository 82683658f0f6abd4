#include "taftcross/morphism.hpp"

#include "taftcross/parallel.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace taftcross {

namespace {

using Sweep = std::function<void(std::size_t, AxiomReport&)>;

AxiomReport sweep(std::size_t count, unsigned jobs, const Sweep& body) {
  if (!jobs) jobs = default_jobs();
  std::vector<AxiomReport> parts(jobs);
  parallel_for(count, jobs, [&](std::size_t begin, std::size_t end, unsigned w) {
    for (std::size_t i = begin; i < end; ++i) body(i, parts[w]);
  });
  AxiomReport out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

struct Term3 {
  Index a, b, c;
  CycScalar k;
};

std::vector<Term3> split3(const HopfStructure& s, Index e) {
  std::vector<Term3> out;
  const Index d = s.dim;
  const SparseVec t = s.comultiply_twice(SparseVec::basis(e));
  for (const auto& x : t.terms()) out.push_back({x.index / (d * d), (x.index / d) % d, x.index % d, x.coeff});
  return out;
}

// a (x) b in the tensor space keyed a * db + b
SparseVec tensor(const SparseVec& a, const SparseVec& b, Index db) {
  std::vector<Term> t;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) t.push_back({x.index * db + y.index, x.coeff * y.coeff});
  return SparseVec::from_terms(std::move(t));
}

void check(AxiomReport& rep, const char* axiom, const SparseVec& residual, std::vector<std::string> where,
           const std::function<std::string(const SparseVec&)>& fmt) {
  rep.record_check(axiom);
  if (!residual.is_zero()) rep.record_failure({axiom, std::move(where), fmt(residual)});
}

bool same_taft_factors(const PresentationParams& a, const PresentationParams& b) {
  return a.n == b.n && a.m == b.m && a.qbar == b.qbar && a.q == b.q;
}

}  // namespace

Factorization factorization(const PresentationParams& p, unsigned jobs) {
  MatchedPair mp = p.matched_pair();
  auto s = std::make_shared<const HopfStructure>(bicrossed_product(mp, jobs));
  return {p, std::move(mp), std::move(s)};
}

LinearMap trivial_map(std::shared_ptr<const HopfStructure> domain, std::shared_ptr<const HopfStructure> codomain) {
  LinearMap f{domain, codomain, {}};
  for (Index e = 0; e < domain->dim; ++e) f.columns.push_back(domain->counit[e] * codomain->unit);
  return f;
}

LinearMap scaling_map(std::shared_ptr<const HopfStructure> domain, std::shared_ptr<const HopfStructure> codomain,
                      const CycScalar& c) {
  if (domain->dim != codomain->dim) throw std::invalid_argument("scaling_map: dimension mismatch");
  LinearMap f{domain, codomain, {}};
  for (Index e = 0; e < domain->dim; ++e) {
    const Label& l = domain->basis[e];
    f.columns.push_back(c.pow(l[3]) * SparseVec::basis(codomain->index_of(l)));
  }
  return f;
}

std::string tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::diagonal: return "diagonal";
    case FamilyTag::swap_i: return "swap-I";
    case FamilyTag::swap_ii: return "swap-II";
    case FamilyTag::swap_iii: return "swap-III";
    case FamilyTag::q_diagonal: return "q-diagonal";
  }
  return "?";
}

std::string QuadrupleFamily::to_string() const {
  if (tag == FamilyTag::q_diagonal) return tag_name(tag) + "(" + first.to_string() + ")";
  return tag_name(tag) + "(" + first.to_string() + ", " + second.to_string() + ")";
}

Quadruple make_quadruple(const QuadrupleFamily& family, const MatchedPair& src, const MatchedPair& tgt) {
  const auto& A = src.a_structure();
  const auto& H = src.h_structure();
  const auto& A2 = tgt.a_structure();
  const auto& H2 = tgt.h_structure();
  const CycScalar& s = family.first;
  const CycScalar& t = family.second;
  switch (family.tag) {
    case FamilyTag::diagonal:
      return {scaling_map(A, A2, s), trivial_map(A, H2), trivial_map(H, A2), scaling_map(H, H2, t)};
    case FamilyTag::q_diagonal:
      return {scaling_map(A, A2, s), trivial_map(A, H2), trivial_map(H, A2), scaling_map(H, H2, s.inverse())};
    case FamilyTag::swap_i:
      return {trivial_map(A, A2), scaling_map(A, H2, s), scaling_map(H, A2, t), trivial_map(H, H2)};
    case FamilyTag::swap_ii:
      return {trivial_map(A, A2), scaling_map(A, H2, s), trivial_map(H, A2), scaling_map(H, H2, t)};
    case FamilyTag::swap_iii:
      return {scaling_map(A, A2, s), trivial_map(A, H2), scaling_map(H, A2, t), trivial_map(H, H2)};
  }
  throw std::invalid_argument("unknown quadruple family");
}

AxiomReport coalgebra_map_report(const LinearMap& f, const std::string& name) {
  const HopfStructure& D = *f.domain;
  const HopfStructure& C = *f.codomain;
  const std::string axiom = name + "-coalgebra";
  AxiomReport rep;
  rep.record_check(axiom);
  const SparseVec du = f.apply(D.unit) - C.unit;
  if (!du.is_zero()) rep.record_failure({axiom, {"1"}, C.format(du)});
  for (Index e = 0; e < D.dim; ++e) {
    rep.record_check(axiom, 2);
    const CycScalar de = C.counit_of(f.columns[e]) - D.counit[e];
    if (!de.is_zero()) rep.record_failure({axiom, {D.basis_names[e], "counit"}, de.to_string()});
    const SparseVec dc = C.comultiply(f.columns[e]) - f.apply_tensor(D.comult[e]);
    if (!dc.is_zero()) rep.record_failure({axiom, {D.basis_names[e], "comult"}, C.format_tensor(dc)});
  }
  return rep;
}

AxiomReport check_quadruple(const Quadruple& qd, const MatchedPair& src, const MatchedPair& tgt, unsigned jobs) {
  const HopfStructure& A = *src.a_structure();
  const HopfStructure& H = *src.h_structure();
  const HopfStructure& A2 = *tgt.a_structure();
  const HopfStructure& H2 = *tgt.h_structure();
  const Index da = A.dim, dh = H.dim, dh2 = H2.dim;
  const auto& u = qd.u.columns;
  const auto& p = qd.p.columns;
  const auto& r = qd.r.columns;
  const auto& v = qd.v.columns;
  auto fa = [&](const SparseVec& x) { return A2.format(x); };
  auto fh = [&](const SparseVec& x) { return H2.format(x); };
  auto fmix = [&](const SparseVec& x) {
    std::string s;
    for (const auto& t : x.terms()) {
      if (!s.empty()) s += " + ";
      s += "(" + t.coeff.to_string() + ") " + A2.basis_names[t.index / dh2] + " (x) " + H2.basis_names[t.index % dh2];
    }
    return s;
  };

  AxiomReport rep;
  rep.merge(coalgebra_map_report(qd.u, "u"));
  rep.merge(coalgebra_map_report(qd.p, "p"));
  rep.merge(coalgebra_map_report(qd.r, "r"));
  rep.merge(coalgebra_map_report(qd.v, "v"));

  // C1, C2
  for (Index a = 0; a < da; ++a) {
    SparseVec res;
    for (const auto& t : A.comult[a].terms()) {
      const Index a1 = t.index / da, a2 = t.index % da;
      res += t.coeff * (tensor(u[a1], p[a2], dh2) - tensor(u[a2], p[a1], dh2));
    }
    check(rep, "C1", res, {A.basis_names[a]}, fmix);
  }
  for (Index g = 0; g < dh; ++g) {
    SparseVec res;
    for (const auto& t : H.comult[g].terms()) {
      const Index g1 = t.index / dh, g2 = t.index % dh;
      res += t.coeff * (tensor(r[g1], v[g2], dh2) - tensor(r[g2], v[g1], dh2));
    }
    check(rep, "C2", res, {H.basis_names[g]}, fmix);
  }

  // C3, C4 over pairs (a, b) of A
  rep.merge(sweep(da, jobs, [&](std::size_t a, AxiomReport& out) {
    for (Index b = 0; b < da; ++b) {
      const SparseVec ab = A.product(a, b);
      SparseVec c3 = qd.u.apply(ab);
      for (const auto& t : A.comult[a].terms()) {
        const Index a1 = t.index / da, a2 = t.index % da;
        c3 -= t.coeff * A2.multiply(u[a1], tgt.act_left(p[a2], u[b]));
      }
      check(out, "C3", c3, {A.basis_names[a], A.basis_names[b]}, fa);
      SparseVec c4 = qd.p.apply(ab);
      for (const auto& t : A.comult[b].terms()) {
        const Index b1 = t.index / da, b2 = t.index % da;
        c4 -= t.coeff * H2.multiply(tgt.act_right(p[a], u[b1]), p[b2]);
      }
      check(out, "C4", c4, {A.basis_names[a], A.basis_names[b]}, fh);
    }
  }));

  // C5, C6 over pairs (t, g) of H
  rep.merge(sweep(dh, jobs, [&](std::size_t t0, AxiomReport& out) {
    for (Index g = 0; g < dh; ++g) {
      const SparseVec tg = H.product(t0, g);
      SparseVec c5 = qd.r.apply(tg);
      for (const auto& t : H.comult[t0].terms()) {
        const Index t1 = t.index / dh, t2 = t.index % dh;
        c5 -= t.coeff * A2.multiply(r[t1], tgt.act_left(v[t2], r[g]));
      }
      check(out, "C5", c5, {H.basis_names[t0], H.basis_names[g]}, fa);
      SparseVec c6 = qd.v.apply(tg);
      for (const auto& t : H.comult[g].terms()) {
        const Index g1 = t.index / dh, g2 = t.index % dh;
        c6 -= t.coeff * H2.multiply(tgt.act_right(v[t0], r[g1]), v[g2]);
      }
      check(out, "C6", c6, {H.basis_names[t0], H.basis_names[g]}, fh);
    }
  }));

  // C7, C8 over pairs (g, b) in H x A
  std::vector<std::vector<Term3>> d2a(da), d2h(dh);
  for (Index a = 0; a < da; ++a) d2a[a] = split3(A, a);
  for (Index g = 0; g < dh; ++g) d2h[g] = split3(H, g);
  rep.merge(sweep(dh, jobs, [&](std::size_t g, AxiomReport& out) {
    for (Index b = 0; b < da; ++b) {
      SparseVec c7, c8;
      for (const auto& t : H.comult[g].terms()) {
        const Index g1 = t.index / dh, g2 = t.index % dh;
        c7 += t.coeff * A2.multiply(r[g1], tgt.act_left(v[g2], u[b]));
      }
      for (const auto& t : A.comult[b].terms()) {
        const Index b1 = t.index / da, b2 = t.index % da;
        c8 += t.coeff * H2.multiply(tgt.act_right(v[g], u[b1]), p[b2]);
      }
      for (const auto& tg : d2h[g])
        for (const auto& tb : d2a[b]) {
          const CycScalar k = tg.k * tb.k;
          const SparseVec pl2 = qd.p.apply(src.left(tg.b, tb.b));
          if (pl2.is_zero()) continue;
          const SparseVec rr3 = qd.r.apply(src.right(tg.c, tb.c));
          c7 -= k * A2.multiply(qd.u.apply(src.left(tg.a, tb.a)), tgt.act_left(pl2, rr3));
        }
      for (const auto& tg : d2h[g])
        for (const auto& tb : d2a[b]) {
          const CycScalar k = tg.k * tb.k;
          const SparseVec pl1 = qd.p.apply(src.left(tg.a, tb.a));
          if (pl1.is_zero()) continue;
          const SparseVec rr2 = qd.r.apply(src.right(tg.b, tb.b));
          const SparseVec vr3 = qd.v.apply(src.right(tg.c, tb.c));
          c8 -= k * H2.multiply(tgt.act_right(pl1, rr2), vr3);
        }
      check(out, "C7", c7, {H.basis_names[g], A.basis_names[b]}, fa);
      check(out, "C8", c8, {H.basis_names[g], A.basis_names[b]}, fh);
    }
  }));
  return rep;
}

LinearMap quadruple_to_morphism(const Quadruple& qd, const Factorization& src, const Factorization& tgt) {
  for (const auto& [f, name] : {std::pair{&qd.u, "u"}, {&qd.p, "p"}, {&qd.r, "r"}, {&qd.v, "v"}}) {
    const AxiomReport rep = coalgebra_map_report(*f, name);
    if (!rep.pass())
      throw std::invalid_argument(std::string(name) + " is not a unital coalgebra map");
  }
  const HopfStructure& A = *src.pair.a_structure();
  const HopfStructure& H = *src.pair.h_structure();
  const HopfStructure& A2 = *tgt.pair.a_structure();
  const HopfStructure& H2 = *tgt.pair.h_structure();
  const MatchedPair& mp2 = tgt.pair;
  const Index da = A.dim, dh = H.dim, dh2 = H2.dim;

  std::vector<std::vector<Term3>> d2a(da), d2h(dh);
  for (Index a = 0; a < da; ++a) d2a[a] = split3(A, a);
  for (Index g = 0; g < dh; ++g) d2h[g] = split3(H, g);

  LinearMap f{src.structure, tgt.structure, std::vector<SparseVec>(da * dh)};
  parallel_for(da, 0, [&](std::size_t begin, std::size_t end, unsigned) {
    for (Index a = begin; a < end; ++a)
      for (Index g = 0; g < dh; ++g) {
        Accumulator acc(A2.dim * dh2);
        for (const auto& ta : d2a[a]) {
          const SparseVec& pa2 = qd.p.columns[ta.b];
          const SparseVec& pa3 = qd.p.columns[ta.c];
          for (const auto& tg : d2h[g]) {
            const SparseVec left = A2.multiply(qd.u.columns[ta.a], mp2.act_left(pa2, qd.r.columns[tg.a]));
            if (left.is_zero()) continue;
            const SparseVec right = H2.multiply(mp2.act_right(pa3, qd.r.columns[tg.b]), qd.v.columns[tg.c]);
            acc.add(tensor(left, right, dh2), ta.k * tg.k);
          }
        }
        f.columns[a * dh + g] = acc.take();
      }
  });
  return f;
}

std::vector<QuadrupleFamily> search_families(const Factorization& src, const Factorization& tgt) {
  const PresentationParams& s = src.params;
  const std::vector<CycScalar> reps = {CycScalar(1), CycScalar(-1)};
  std::vector<QuadrupleFamily> out;
  const bool both_q = s.kind == PresentationKind::q_alpha && tgt.params.kind == PresentationKind::q_alpha;
  if (both_q)
    for (const auto& b : reps) out.push_back({FamilyTag::q_diagonal, b, b.inverse()});
  for (const auto& b : reps)
    for (const auto& e : reps) out.push_back({FamilyTag::diagonal, b, e});
  if (s.n == s.m && s.qbar == s.q)
    for (FamilyTag tag : {FamilyTag::swap_i, FamilyTag::swap_ii, FamilyTag::swap_iii})
      for (const auto& x : reps)
        for (const auto& y : reps) out.push_back({tag, x, y});
  return out;
}

IsoResult iso_search(const Factorization& src, const Factorization& tgt, unsigned jobs) {
  if (!same_taft_factors(src.params, tgt.params))
    throw std::invalid_argument("iso_search: the structures factor through different Taft algebras");
  IsoResult out;
  for (const auto& fam : search_families(src, tgt)) {
    const Quadruple qd = make_quadruple(fam, src.pair, tgt.pair);
    const AxiomReport rep = check_quadruple(qd, src.pair, tgt.pair, jobs);
    Refutation ref{fam, {}, {}, 0};
    if (!rep.pass()) {
      ref.failed = rep.failed_axioms();
      for (const auto& ax : ref.failed)
        for (const auto& f : rep.failures())
          if (f.axiom == ax) {
            ref.first_failures.push_back(f);
            break;
          }
      out.refutations.push_back(std::move(ref));
      continue;
    }
    LinearMap psi = quadruple_to_morphism(qd, src, tgt);
    ref.rank = rank(psi.columns);
    if (ref.rank < psi.domain->dim) {
      ref.failed = {"bijectivity"};
      out.refutations.push_back(std::move(ref));
      continue;
    }
    const AxiomReport direct = hopf_morphism_report(psi, jobs);
    if (!direct.pass())
      throw std::logic_error("quadruple " + fam.to_string() + " passes C1-C8 but its map is not a Hopf morphism");
    out.witness_family = fam;
    out.witness = std::move(psi);
    return out;
  }
  return out;
}

LinearMap q_normalization(const Factorization& q_alpha, const Factorization& q_one) {
  const HopfStructure& T = *q_one.structure;
  const CycScalar& alpha = q_alpha.params.param;
  return algebra_map_from_generators(q_alpha.structure, q_one.structure,
                                     {SparseVec::basis(T.index_of({1, 0, 0, 0})),
                                      alpha * SparseVec::basis(T.index_of({0, 1, 0, 0})),
                                      SparseVec::basis(T.index_of({0, 0, 1, 0})),
                                      SparseVec::basis(T.index_of({0, 0, 0, 1}))});
}

// ---------------------------------------------------------------------------

std::string UpShape::to_string() const {
  static const char* roman[] = {"", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  std::string s = std::string(roman[shape]) + "(a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                  ", alpha=" + alpha.to_string();
  if (shape == 4) s += ", beta=" + beta.to_string();
  return s + ")";
}

std::vector<ShapeVerdict> excluded_shape_sweep(const Factorization& f) {
  const HopfStructure& A = *f.pair.a_structure();
  const HopfStructure& H = *f.pair.h_structure();
  const int n = f.params.n, m = f.params.m;
  const CycScalar& qbar = f.params.qbar;
  const bool swap_case = n == m && f.params.qbar == f.params.q;
  auto Hp = [&](int a) { return SparseVec::basis(A.index_of({0, 0, ((a % n) + n) % n, 0})); };
  auto hp = [&](int b) { return SparseVec::basis(H.index_of({0, 0, ((b % m) + m) % m, 0})); };
  const SparseVec x = SparseVec::basis(H.index_of({0, 0, 0, 1}));
  const std::vector<CycScalar> alphas = {CycScalar(0), CycScalar(1), CycScalar(-1), CycScalar(2)};

  std::vector<UpShape> shapes;
  auto add = [&](int shape, int a, int b, const CycScalar& alpha, const CycScalar& beta) {
    UpShape s{shape, a, b, alpha, beta, {}, {}};
    s.u_x = a == 0 ? SparseVec() : alpha * (A.unit - Hp(a));
    s.p_x = b == 0 ? SparseVec() : alpha * (H.unit - hp(b));
    if (shape == 4) s.p_x += beta * x;
    shapes.push_back(std::move(s));
  };
  std::vector<int> big_a, big_b;
  for (int a = 2; a < n; ++a) big_a.push_back(a);
  for (int b = 2; b < m; ++b) big_b.push_back(b);
  for (const auto& al : alphas) {
    add(1, 1, 1, al, 0);
    for (int b : big_b) add(3, 1, b, al, 0);
    for (const auto& be : alphas) {
      if (swap_case && al.is_zero() && !be.is_zero()) continue;
      add(4, 0, 1, al, be);
    }
    for (int a : big_a) add(5, a, 1, al, 0);
    for (int b : big_b) add(7, 0, b, al, 0);
    for (int a : big_a) add(8, a, 0, al, 0);
    for (int a : big_a)
      for (int b : big_b) add(9, a, b, al, 0);
  }
  add(6, 0, 0, 0, 0);

  std::vector<ShapeVerdict> out;
  for (auto& s : shapes) {
    const SparseVec Ha = Hp(s.a), hb = hp(s.b);
    const SparseVec co1 = A.multiply(s.u_x, f.pair.act_left(hb, Ha)) + f.pair.act_left(s.p_x, Ha) -
                          qbar * A.multiply(Ha, f.pair.act_left(hb, s.u_x));
    const SparseVec co2 = H.multiply(f.pair.act_right(s.p_x, Ha), hb) -
                          qbar * H.multiply(f.pair.act_right(hb, s.u_x), hb) - qbar * H.multiply(hb, s.p_x);
    ShapeVerdict v;
    v.kills_x = s.u_x.is_zero() && s.p_x.is_zero();
    if (!co1.is_zero()) v.co1_residual = A.format(co1);
    if (!co2.is_zero()) v.co2_residual = H.format(co2);
    v.shape = std::move(s);
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t formula_count(int n, int m, const CycScalar& qbar, const CycScalar& q) {
  const int d = std::gcd(n, m);
  const std::size_t v = static_cast<std::size_t>(nu(d, std::lcm(n, m)));
  if (m == 2 && n == 2) return 3;
  if (m != n) return v;
  if (qbar == q) return v % 2 == 0 ? v / 2 + 1 : (v + 1) / 2;
  if (qbar == q.pow(n - 1)) return v + 1;
  return v;
}

ClassReport classify(int n, int m, const CycScalar& qbar, const CycScalar& q, unsigned jobs) {
  ClassReport rep{n, m, qbar, q, {}, {}, 0, formula_count(n, m, qbar, q), {}};
  const int d = std::gcd(n, m);
  for (const auto& sigma : roots_of_unity_group(d, std::lcm(n, m)))
    rep.representatives.push_back(PresentationParams::t_sigma(n, m, qbar, q, sigma));
  if (m == n && qbar == q.pow(n - 1)) rep.representatives.push_back(PresentationParams::q_alpha(n, q, CycScalar(1)));

  std::vector<Factorization> fs;
  for (const auto& p : rep.representatives) fs.push_back(factorization(p, jobs));
  const std::size_t k = fs.size();
  std::vector<std::size_t> parent(k);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      IsoResult r = iso_search(fs[i], fs[j], jobs);
      ClassPair cp{i, j, r.isomorphic(), r.witness_family, std::move(r.refutations)};
      if (cp.isomorphic) parent[find(j)] = find(i);
      rep.pairs.push_back(std::move(cp));
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < k; ++i) groups[find(i)].push_back(i);
  for (auto& [root, members] : groups) rep.classes.push_back(std::move(members));
  std::sort(rep.classes.begin(), rep.classes.end());
  rep.count = rep.classes.size();
  if (rep.count != rep.formula_count)
    throw std::logic_error("classification found " + std::to_string(rep.count) + " classes, formula gives " +
                           std::to_string(rep.formula_count));
  return rep;
}

// ---------------------------------------------------------------------------

bool AutomorphismReport::pass() const {
  if (verified_automorphisms == 0) return false;
  for (const auto& l : laws)
    if (l.failed) return false;
  return true;
}

namespace {

struct AutContext {
  const Factorization& f;
  unsigned jobs;
  std::map<std::string, LinearMap> cache;

  const LinearMap& get(const QuadrupleFamily& fam) {
    const std::string key = fam.to_string();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const Quadruple qd = make_quadruple(fam, f.pair, f.pair);
    return cache.emplace(key, quadruple_to_morphism(qd, f, f)).first->second;
  }

  bool verify(const QuadrupleFamily& fam) {
    const Quadruple qd = make_quadruple(fam, f.pair, f.pair);
    if (!check_quadruple(qd, f.pair, f.pair, jobs).pass()) return false;
    return is_hopf_iso(get(fam), jobs);
  }
};

// Element of the semidirect product K x| Z2 with K = k* or k* x k*.
struct Graded {
  CycScalar a, b;
  int s;
};

}  // namespace

AutomorphismReport automorphisms(const PresentationParams& p, unsigned jobs) {
  if (p.kind == PresentationKind::q_alpha && !p.param.is_one())
    throw std::invalid_argument("automorphisms: only Q^1_n is in scope");
  AutomorphismReport rep;
  rep.params = p;
  const int d = p.kind == PresentationKind::q_alpha ? p.n : std::gcd(p.n, p.m);
  for (const auto& c : {CycScalar(1), CycScalar(-1), CycScalar(2), root_of_unity(d, 1)})
    if (std::find(rep.grid.begin(), rep.grid.end(), c) == rep.grid.end()) rep.grid.push_back(c);
  const auto& G = rep.grid;

  const Factorization f = factorization(p, jobs);
  AutContext ctx{f, jobs, {}};
  auto expect = [&](const QuadrupleFamily& fam, bool automorphism) {
    const bool ok = ctx.verify(fam);
    if (ok) ++rep.verified_automorphisms;
    if (!ok) rep.rejected.push_back(fam.to_string());
    return ok == automorphism;
  };
  auto law = [&](const std::string& name) {
    rep.laws.push_back({name, 0, 0});
    return rep.laws.size() - 1;
  };
  auto tally = [&](std::size_t l, bool ok) {
    ++rep.laws[l].checked;
    if (!ok) ++rep.laws[l].failed;
  };
  using F = QuadrupleFamily;

  if (p.kind == PresentationKind::t_sigma) {
    const bool swap = p.n == p.m && p.qbar == p.q && (p.param * p.param).is_one();
    rep.families.push_back("psi(beta, eta): X -> beta X, x -> eta x, H -> H, h -> h");
    const std::size_t members = law("psi(beta, eta) is an automorphism");
    for (const auto& b : G)
      for (const auto& e : G) tally(members, expect({FamilyTag::diagonal, b, e}, true));
    const std::size_t comp = law("psi(b, e) o psi(b', e') = psi(b b', e e')");
    for (const auto& b : G)
      for (const auto& e : G)
        for (const auto& b2 : G)
          for (const auto& e2 : G)
            tally(comp, compose(ctx.get(F{FamilyTag::diagonal, b, e}), ctx.get(F{FamilyTag::diagonal, b2, e2})) ==
                            ctx.get(F{FamilyTag::diagonal, b * b2, e * e2}));
    if (p.n == p.m && p.qbar == p.q) {
      const std::size_t sw = law(swap ? "phi(zeta, gamma) is an automorphism" : "swap quadruples are not automorphisms");
      for (const auto& z : G)
        for (const auto& g : G) tally(sw, expect({FamilyTag::swap_i, z, g}, swap));
    }
    if (swap) {
      rep.group = "(k* x k*) x|_tau Z2";
      rep.families.push_back("phi(zeta, gamma): X -> zeta x, x -> gamma X, H -> h, h -> H");
      const std::size_t pp = law("phi(z, g) o phi(z', g') = psi(z' g, z g')");
      const std::size_t pq = law("phi(z, g) o psi(b, e) = phi(b z, e g)");
      const std::size_t qp = law("psi(b, e) o phi(z, g) = phi(z e, g b)");
      for (const auto& z : G)
        for (const auto& g : G)
          for (const auto& s : G)
            for (const auto& t : G) {
              const LinearMap& phi = ctx.get(F{FamilyTag::swap_i, z, g});
              tally(pp, compose(phi, ctx.get(F{FamilyTag::swap_i, s, t})) ==
                            ctx.get(F{FamilyTag::diagonal, s * g, z * t}));
              tally(pq, compose(phi, ctx.get(F{FamilyTag::diagonal, s, t})) ==
                            ctx.get(F{FamilyTag::swap_i, s * z, t * g}));
              tally(qp, compose(ctx.get(F{FamilyTag::diagonal, s, t}), phi) ==
                            ctx.get(F{FamilyTag::swap_i, z * t, g * s}));
            }
      // Upsilon(psi(b, e)) = ((b, e), 0), Upsilon(phi(z, g)) = ((g, z), 1)
      const std::size_t ups = law("Upsilon is a homomorphism onto (k* x k*) x|_tau Z2");
      auto mul = [](const Graded& x, const Graded& y) {
        return x.s == 0 ? Graded{x.a * y.a, x.b * y.b, y.s} : Graded{x.a * y.b, x.b * y.a, 1 - y.s};
      };
      auto upsilon = [](const F& fam) {
        return fam.tag == FamilyTag::diagonal ? Graded{fam.first, fam.second, 0} : Graded{fam.second, fam.first, 1};
      };
      // composition laws above, read on parameters
      auto compose_params = [](const F& x, const F& y) -> F {
        if (x.tag == FamilyTag::diagonal && y.tag == FamilyTag::diagonal)
          return {FamilyTag::diagonal, x.first * y.first, x.second * y.second};
        if (x.tag == FamilyTag::swap_i && y.tag == FamilyTag::swap_i)
          return {FamilyTag::diagonal, y.first * x.second, x.first * y.second};
        if (x.tag == FamilyTag::swap_i) return {FamilyTag::swap_i, y.first * x.first, y.second * x.second};
        return {FamilyTag::swap_i, y.first * x.second, y.second * x.first};
      };
      std::vector<F> elems;
      for (const auto& s : G)
        for (const auto& t : G) {
          elems.push_back({FamilyTag::diagonal, s, t});
          elems.push_back({FamilyTag::swap_i, s, t});
        }
      for (const auto& x : elems)
        for (const auto& y : elems) {
          const Graded lhs = upsilon(compose_params(x, y)), rhs = mul(upsilon(x), upsilon(y));
          const bool ok = lhs.a == rhs.a && lhs.b == rhs.b && lhs.s == rhs.s &&
                          compose(ctx.get(x), ctx.get(y)) == ctx.get(compose_params(x, y));
          tally(ups, ok);
        }
    } else {
      rep.group = "k* x k*";
    }
    return rep;
  }

  // Q^1_n
  rep.families.push_back("phi(beta): X -> beta X, x -> beta^-1 x, H -> H, h -> h");
  const std::size_t members = law("phi(beta) is an automorphism");
  for (const auto& b : G) tally(members, expect({FamilyTag::q_diagonal, b, b.inverse()}, true));
  const std::size_t off = law("psi(beta, eta) with beta eta != 1 is not an automorphism");
  for (const auto& b : G)
    for (const auto& e : G)
      if (!(b * e).is_one()) tally(off, expect({FamilyTag::diagonal, b, e}, false));
  const std::size_t comp = law("phi(b) o phi(b') = phi(b b')");
  for (const auto& b : G)
    for (const auto& b2 : G)
      tally(comp, compose(ctx.get(F{FamilyTag::q_diagonal, b, b.inverse()}),
                          ctx.get(F{FamilyTag::q_diagonal, b2, b2.inverse()})) ==
                      ctx.get(F{FamilyTag::q_diagonal, b * b2, (b * b2).inverse()}));
  if (p.n >= 3) {
    rep.group = "k*";
    return rep;
  }
  rep.group = "k* x|_kappa Z2";
  rep.externally_sourced = true;
  rep.families.push_back("chi(beta): X -> beta x, x -> beta^-1 X, H -> h, h -> H");
  auto chi = [](const CycScalar& b) { return F{FamilyTag::swap_i, b, b.inverse()}; };
  auto phi = [](const CycScalar& b) { return F{FamilyTag::q_diagonal, b, b.inverse()}; };
  const std::size_t cm = law("chi(beta) is an automorphism");
  for (const auto& b : G) tally(cm, expect(chi(b), true));
  const std::size_t co = law("swap (zeta, gamma) with zeta gamma != 1 is not an automorphism");
  for (const auto& z : G)
    for (const auto& g : G)
      if (!(z * g).is_one()) tally(co, expect({FamilyTag::swap_i, z, g}, false));
  const std::size_t cc = law("chi(b) o chi(b') = phi(b' / b)");
  const std::size_t cp = law("chi(b) o phi(g) = chi(g b)");
  const std::size_t pc = law("phi(g) o chi(b) = chi(b / g)");
  const std::size_t ups = law("Upsilon is a homomorphism onto k* x|_kappa Z2");
  auto mul = [](const Graded& x, const Graded& y) {
    return Graded{x.s == 0 ? x.a * y.a : x.a * y.a.inverse(), 1, (x.s + y.s) % 2};
  };
  for (const auto& b : G)
    for (const auto& b2 : G) {
      tally(cc, compose(ctx.get(chi(b)), ctx.get(chi(b2))) == ctx.get(phi(b2 / b)));
      tally(cp, compose(ctx.get(chi(b)), ctx.get(phi(b2))) == ctx.get(chi(b2 * b)));
      tally(pc, compose(ctx.get(phi(b2)), ctx.get(chi(b))) == ctx.get(chi(b / b2)));
      // Upsilon(phi(b)) = (b, 0), Upsilon(chi(b)) = (b^-1, 1)
      const Graded cb{b.inverse(), 1, 1}, cb2{b2.inverse(), 1, 1}, pb2{b2, 1, 0};
      const Graded x1 = mul(cb, cb2), x2 = mul(cb, pb2), x3 = mul(pb2, cb);
      tally(ups, x1.s == 0 && x1.a == b2 / b);
      tally(ups, x2.s == 1 && x2.a == (b2 * b).inverse());
      tally(ups, x3.s == 1 && x3.a == (b / b2).inverse());
    }
  return rep;
}

}  // namespace taftcross
