#include "taftcross/bicrossed.hpp"

#include "taftcross/parallel.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace taftcross {

namespace {

std::string pair_basis_name(const HopfStructure& a, Index ai, const HopfStructure& h, Index gi, bool taft_pair) {
  if (taft_pair) {
    const Label& la = a.basis[ai];
    const Label& lh = h.basis[gi];
    return monomial_name({la[2], la[3], lh[2], lh[3]});
  }
  const std::string& an = a.basis_names[ai];
  const std::string& gn = h.basis_names[gi];
  return gn == "1" ? an : an + " # " + gn;
}

}  // namespace

HopfStructure bicrossed_product(const MatchedPair& mp, unsigned jobs) {
  const HopfStructure& A = *mp.a_structure();
  const HopfStructure& H = *mp.h_structure();
  const Index da = A.dim, dh = H.dim, d = da * dh;
  const bool taft_pair = mp.a_desc().has_value();

  HopfStructure out;
  out.name = taft_pair ? A.name + " |><| " + H.name : "(" + A.name + ") |><| " + H.name;
  out.dim = d;
  for (Index a = 0; a < da; ++a)
    for (Index g = 0; g < dh; ++g) {
      out.basis.push_back({A.basis[a][2], A.basis[a][3], H.basis[g][2], H.basis[g][3]});
      out.basis_names.push_back(pair_basis_name(A, a, H, g, taft_pair));
    }

  // exch(g, c) = sum (g1 |> c1) (x) (g2 <| c2), keyed a * dh + h
  std::vector<SparseVec> exch(dh * da);
  if (!jobs) jobs = default_jobs();
  parallel_for(dh, jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    Accumulator acc(d);
    for (Index g = begin; g < end; ++g)
      for (Index c = 0; c < da; ++c) {
        for (const auto& tg : H.comult[g].terms()) {
          const Index g1 = tg.index / dh, g2 = tg.index % dh;
          for (const auto& tc : A.comult[c].terms()) {
            const Index c1 = tc.index / da, c2 = tc.index % da;
            const SparseVec& l = mp.left(g1, c1);
            if (l.is_zero()) continue;
            const SparseVec& r = mp.right(g2, c2);
            const CycScalar k = tg.coeff * tc.coeff;
            for (const auto& tl : l.terms())
              for (const auto& tr : r.terms()) acc.add(tl.index * dh + tr.index, k * tl.coeff * tr.coeff);
          }
        }
        exch[g * da + c] = acc.take();
      }
  });

  out.mult.resize(d * d);
  parallel_for(d, jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    Accumulator acc(d);
    for (Index r = begin; r < end; ++r) {
      const Index a = r / dh, g = r % dh;
      for (Index s = 0; s < d; ++s) {
        const Index c = s / dh, g2 = s % dh;
        for (const auto& t : exch[g * da + c].terms()) {
          const SparseVec& left = A.product(a, t.index / dh);
          if (left.is_zero()) continue;
          const SparseVec& right = H.product(t.index % dh, g2);
          for (const auto& tl : left.terms())
            for (const auto& tr : right.terms()) acc.add(tl.index * dh + tr.index, t.coeff * tl.coeff * tr.coeff);
        }
        out.mult[r * d + s] = acc.take();
      }
    }
  });

  out.comult.resize(d);
  out.counit.resize(d);
  out.antipode.resize(d);
  parallel_for(d, jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    Accumulator acc2(d * d), acc(d);
    for (Index r = begin; r < end; ++r) {
      const Index a = r / dh, g = r % dh;
      for (const auto& ta : A.comult[a].terms()) {
        const Index a1 = ta.index / da, a2 = ta.index % da;
        for (const auto& tg : H.comult[g].terms()) {
          const Index g1 = tg.index / dh, g2 = tg.index % dh;
          acc2.add((a1 * dh + g1) * d + (a2 * dh + g2), ta.coeff * tg.coeff);
          // S(g2) |> S(a2) # S(g1) <| S(a1)
          const SparseVec l = mp.act_left(H.antipode[g2], A.antipode[a2]);
          if (l.is_zero()) continue;
          const SparseVec rr = mp.act_right(H.antipode[g1], A.antipode[a1]);
          const CycScalar k = ta.coeff * tg.coeff;
          for (const auto& tl : l.terms())
            for (const auto& tr : rr.terms()) acc.add(tl.index * dh + tr.index, k * tl.coeff * tr.coeff);
        }
      }
      out.comult[r] = acc2.take();
      out.antipode[r] = acc.take();
      out.counit[r] = A.counit[a] * H.counit[g];
    }
  });

  Accumulator unit(d);
  for (const auto& ta : A.unit.terms())
    for (const auto& tg : H.unit.terms()) unit.add(ta.index * dh + tg.index, ta.coeff * tg.coeff);
  out.unit = unit.take();
  return out;
}

// ---------------------------------------------------------------------------

PresentationParams PresentationParams::t_sigma(int n, int m, CycScalar qbar, CycScalar q, CycScalar sigma) {
  PresentationParams p;
  p.kind = PresentationKind::t_sigma;
  p.n = n;
  p.m = m;
  p.qbar = std::move(qbar);
  p.q = std::move(q);
  p.param = std::move(sigma);
  (void)TaftDescriptor(n, p.qbar);
  (void)TaftDescriptor(m, p.q);
  const int d = std::gcd(n, m);
  if (p.param.is_zero() || !p.param.pow(d).is_one())
    throw std::invalid_argument("sigma = " + p.param.to_string() + " is not a " + std::to_string(d) + "-th root of unity");
  return p;
}

PresentationParams PresentationParams::q_alpha(int n, CycScalar q, CycScalar alpha) {
  PresentationParams p;
  p.kind = PresentationKind::q_alpha;
  p.n = n;
  p.m = n;
  p.q = std::move(q);
  (void)TaftDescriptor(n, p.q);
  p.qbar = p.q.pow(n - 1);
  p.param = std::move(alpha);
  if (p.param.is_zero()) throw std::invalid_argument("alpha must be nonzero");
  return p;
}

Label PresentationParams::label(Index idx) const {
  const int l = static_cast<int>(idx % m);
  idx /= m;
  const int k = static_cast<int>(idx % m);
  idx /= m;
  const int j = static_cast<int>(idx % n);
  return {static_cast<int>(idx / n), j, k, l};
}

std::string PresentationParams::name() const {
  if (kind == PresentationKind::q_alpha)
    return "Q^{" + param.to_string() + "}_" + std::to_string(n) + "(" + q.to_string() + ")";
  return "T^{" + param.to_string() + "}_{" + std::to_string(n) + "," + std::to_string(m) + "}(" + qbar.to_string() +
         ", " + q.to_string() + ")";
}

MatchedPair PresentationParams::matched_pair() const {
  if (kind == PresentationKind::q_alpha) return family_alpha(n, q, param);
  return family_sigma(n, m, qbar, q, param);
}

bool operator==(const PresentationParams& a, const PresentationParams& b) {
  return a.kind == b.kind && a.n == b.n && a.m == b.m && a.qbar == b.qbar && a.q == b.q && a.param == b.param &&
         a.xX_override == b.xX_override;
}

std::string normal_word(const Label& label) {
  std::string w;
  const char letters[4] = {'H', 'X', 'h', 'x'};
  for (int i = 0; i < 4; ++i) w.append(static_cast<std::size_t>(label[i]), letters[i]);
  return w;
}

namespace {

int rank_of(char c) {
  switch (c) {
    case 'H': return 0;
    case 'X': return 1;
    case 'h': return 2;
    case 'x': return 3;
  }
  throw std::invalid_argument(std::string("unknown letter '") + c + "'");
}

class Rewriter {
 public:
  explicit Rewriter(const PresentationParams& p) : p_(p) {
    const bool q_family = p.kind == PresentationKind::q_alpha;
    twist_ = q_family ? p.q : p.param;
    xX_ = p.xX_override ? *p.xX_override : twist_;
    limit_ = {p.n, p.n, p.m, p.m};
    correction_ = q_family ? p.param : CycScalar();
  }

  SparseVec run(const std::string& word, RewriteStrategy strategy) const {
    for (char c : word) rank_of(c);
    std::map<std::string, CycScalar> pending{{word, CycScalar(1)}};
    Accumulator out(p_.dim());
    while (!pending.empty()) {
      auto node = pending.extract(pending.begin());
      const std::string& w = node.key();
      const CycScalar& c = node.mapped();
      const std::ptrdiff_t pos = find_redex(w, strategy);
      if (pos < 0) {
        out.add(p_.index(label_of(w)), c);
        continue;
      }
      for (auto& [next, k] : rewrite(w, static_cast<std::size_t>(pos))) {
        auto& slot = pending[next];
        slot += c * k;
        if (slot.is_zero()) pending.erase(next);
      }
    }
    return out.take();
  }

 private:
  bool run_at(const std::string& w, std::size_t i) const {
    const int lim = limit_[rank_of(w[i])];
    if (i + lim > w.size()) return false;
    for (std::size_t k = i + 1; k < i + lim; ++k)
      if (w[k] != w[i]) return false;
    return true;
  }

  bool redex_at(const std::string& w, std::size_t i) const {
    if (run_at(w, i)) return true;
    return i + 1 < w.size() && rank_of(w[i]) > rank_of(w[i + 1]);
  }

  std::ptrdiff_t find_redex(const std::string& w, RewriteStrategy s) const {
    if (s == RewriteStrategy::leftmost) {
      for (std::size_t i = 0; i < w.size(); ++i)
        if (redex_at(w, i)) return static_cast<std::ptrdiff_t>(i);
    } else {
      for (std::size_t i = w.size(); i-- > 0;)
        if (redex_at(w, i)) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  }

  std::vector<std::pair<std::string, CycScalar>> rewrite(const std::string& w, std::size_t i) const {
    const std::string head = w.substr(0, i);
    if (run_at(w, i)) {
      const char c = w[i];
      if (c == 'X' || c == 'x') return {};
      return {{head + w.substr(i + limit_[rank_of(c)]), CycScalar(1)}};
    }
    const std::string tail = w.substr(i + 2);
    const char b = w[i], a = w[i + 1];
    const std::string swapped = head + a + b + tail;
    const std::string pair{b, a};
    if (pair == "XH") return {{swapped, p_.qbar}};
    if (pair == "hH") return {{swapped, CycScalar(1)}};
    if (pair == "hX" || pair == "xH") return {{swapped, twist_}};
    if (pair == "xh") return {{swapped, p_.q}};
    // xX -> c Xx + alpha (1 - Hh)
    std::vector<std::pair<std::string, CycScalar>> out{{swapped, xX_}};
    if (!correction_.is_zero()) {
      out.push_back({head + tail, correction_});
      out.push_back({head + "Hh" + tail, -correction_});
    }
    return out;
  }

  Label label_of(const std::string& w) const {
    Label l{0, 0, 0, 0};
    for (char c : w) ++l[rank_of(c)];
    return l;
  }

  const PresentationParams& p_;
  CycScalar twist_, xX_, correction_;
  std::array<int, 4> limit_{};
};

}  // namespace

SparseVec straighten(const PresentationParams& p, const std::string& word, RewriteStrategy strategy) {
  return Rewriter(p).run(word, strategy);
}

HopfStructure presentation(const PresentationParams& p, unsigned jobs) {
  const Index d = p.dim();
  const Rewriter rw(p);
  HopfStructure out;
  out.name = p.name();
  out.dim = d;
  for (Index i = 0; i < d; ++i) {
    out.basis.push_back(p.label(i));
    out.basis_names.push_back(monomial_name(out.basis.back()));
  }
  if (!jobs) jobs = default_jobs();

  // right multiplication by a letter: rmul[letter][b] = b * letter
  const char letters[4] = {'H', 'X', 'h', 'x'};
  std::array<std::vector<SparseVec>, 4> rmul;
  for (auto& v : rmul) v.resize(d);
  parallel_for(d, jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    for (Index b = begin; b < end; ++b) {
      const std::string w = normal_word(out.basis[b]);
      for (int l = 0; l < 4; ++l) rmul[l][b] = rw.run(w + letters[l], RewriteStrategy::leftmost);
    }
  });
  auto times_letter = [&](const SparseVec& v, int letter, Accumulator& acc) {
    for (const auto& t : v.terms()) acc.add(rmul[letter][t.index], t.coeff);
    return acc.take();
  };

  out.mult.resize(d * d);
  parallel_for(d, jobs, [&](std::size_t begin, std::size_t end, unsigned) {
    Accumulator acc(d);
    for (Index u = begin; u < end; ++u) {
      SparseVec ci = SparseVec::basis(u);
      for (int i = 0; i < p.n; ++i) {
        if (i) ci = times_letter(ci, 0, acc);
        SparseVec cj = ci;
        for (int j = 0; j < p.n; ++j) {
          if (j) cj = times_letter(cj, 1, acc);
          SparseVec ck = cj;
          for (int k = 0; k < p.m; ++k) {
            if (k) ck = times_letter(ck, 2, acc);
            SparseVec cl = ck;
            for (int l = 0; l < p.m; ++l) {
              if (l) cl = times_letter(cl, 3, acc);
              out.mult[u * d + p.index({i, j, k, l})] = cl;
            }
          }
        }
      }
    }
  });

  // Generators
  const Index iH = p.index({1, 0, 0, 0}), iX = p.index({0, 1, 0, 0});
  const Index ih = p.index({0, 0, 1, 0}), ix = p.index({0, 0, 0, 1});
  auto pure = [d](Index a, Index b, CycScalar c = CycScalar(1)) { return SparseVec::basis(a * d + b, std::move(c)); };
  std::array<SparseVec, 4> gen_comult{pure(iH, iH), pure(iX, iH) + pure(0, iX), pure(ih, ih), pure(ix, ih) + pure(0, ix)};
  const SparseVec sH = SparseVec::basis(p.index({p.n - 1, 0, 0, 0}));
  const SparseVec sh = SparseVec::basis(p.index({0, 0, p.m - 1, 0}));
  const CycScalar x_coeff = -p.q.pow(p.m - 1);
  const CycScalar X_coeff = p.kind == PresentationKind::q_alpha ? -p.q : -p.qbar.pow(p.n - 1);
  std::array<SparseVec, 4> gen_antipode{sH, SparseVec::basis(p.index({p.n - 1, 1, 0, 0}), X_coeff), sh,
                                        SparseVec::basis(p.index({0, 0, p.m - 1, 1}), x_coeff)};

  // Delta(rest * letter) = Delta(rest) Delta(letter); S(rest * letter) = S(letter) S(rest).
  out.comult.resize(d);
  out.antipode.resize(d);
  out.counit.resize(d);
  out.comult[0] = pure(0, 0);
  out.antipode[0] = SparseVec::basis(0);
  out.counit[0] = CycScalar(1);
  for (Index b = 1; b < d; ++b) {
    Label rest = out.basis[b];
    int letter = 3;
    while (rest[letter] == 0) --letter;
    --rest[letter];
    const Index r = p.index(rest);
    out.comult[b] = out.tensor_multiply(out.comult[r], gen_comult[letter]);
    out.antipode[b] = out.multiply(gen_antipode[letter], out.antipode[r]);
    out.counit[b] = (out.basis[b][1] == 0 && out.basis[b][3] == 0) ? CycScalar(1) : CycScalar();
  }
  out.unit = SparseVec::basis(0);
  return out;
}

bool structures_equal(const HopfStructure& h1, const HopfStructure& h2, const std::vector<Index>& ident) {
  if (h1.dim != h2.dim || ident.size() != h1.dim) throw std::invalid_argument("structures_equal: dimension mismatch");
  const Index d = h1.dim;
  auto map_vec = [&](const SparseVec& v) {
    std::vector<Term> t;
    for (const auto& x : v.terms()) t.push_back({ident[x.index], x.coeff});
    return SparseVec::from_terms(std::move(t));
  };
  auto map_tensor = [&](const SparseVec& v) {
    std::vector<Term> t;
    for (const auto& x : v.terms()) t.push_back({ident[x.index / d] * d + ident[x.index % d], x.coeff});
    return SparseVec::from_terms(std::move(t));
  };
  if (map_vec(h1.unit) != h2.unit) return false;
  for (Index r = 0; r < d; ++r) {
    if (h1.counit[r] != h2.counit[ident[r]]) return false;
    if (map_vec(h1.antipode[r]) != h2.antipode[ident[r]]) return false;
    if (map_tensor(h1.comult[r]) != h2.comult[ident[r]]) return false;
    for (Index s = 0; s < d; ++s)
      if (map_vec(h1.product(r, s)) != h2.product(ident[r], ident[s])) return false;
  }
  return true;
}

bool structures_equal(const HopfStructure& h1, const HopfStructure& h2) {
  if (h1.dim != h2.dim) throw std::invalid_argument("structures_equal: dimension mismatch");
  std::map<Label, Index> where;
  for (Index i = 0; i < h2.dim; ++i) where[h2.basis[i]] = i;
  std::vector<Index> ident;
  for (const auto& l : h1.basis) {
    auto it = where.find(l);
    if (it == where.end()) return false;
    ident.push_back(it->second);
  }
  return structures_equal(h1, h2, ident);
}

// ---------------------------------------------------------------------------

DrinfeldDouble drinfeld_double(int n, const CycScalar& q, unsigned jobs) {
  const TaftDescriptor desc(n, q);
  const TaftDual td = taft_dual(desc);
  const HopfStructure& T = *td.algebra;
  auto dual_cop = std::make_shared<const HopfStructure>(cop(*td.dual));
  const Index d = T.dim;
  const auto s_inv = invert(T.antipode, d);
  if (!s_inv) throw std::logic_error("Taft antipode is not invertible");

  std::vector<SparseVec> left(d * d), right(d * d);
  for (Index g = 0; g < d; ++g) {
    // g <| e*_r = sum <e*_r, S^-1(g3) g1> g2
    std::vector<std::vector<Term>> rterms(d);
    const SparseVec delta2 = T.comultiply_twice(SparseVec::basis(g));
    for (const auto& t : delta2.terms()) {
      const Index g1 = t.index / (d * d), g2 = (t.index / d) % d, g3 = t.index % d;
      const SparseVec y = T.multiply((*s_inv)[g3], SparseVec::basis(g1));
      for (const auto& ty : y.terms()) rterms[ty.index].push_back({g2, t.coeff * ty.coeff});
    }
    // (g |> e*_r)(e_s) = e*_r(S^-1(g2) e_s g1)
    std::vector<std::vector<Term>> lterms(d);
    for (const auto& t : T.comult[g].terms()) {
      const Index g1 = t.index / d, g2 = t.index % d;
      for (Index s = 0; s < d; ++s) {
        const SparseVec z = T.multiply(T.multiply((*s_inv)[g2], SparseVec::basis(s)), SparseVec::basis(g1));
        for (const auto& tz : z.terms()) lterms[tz.index].push_back({s, t.coeff * tz.coeff});
      }
    }
    for (Index r = 0; r < d; ++r) {
      right[g * d + r] = SparseVec::from_terms(std::move(rterms[r]));
      left[g * d + r] = SparseVec::from_terms(std::move(lterms[r]));
    }
  }
  MatchedPair pair = MatchedPair::from_full_tables(dual_cop, td.algebra, std::move(left), std::move(right));
  auto structure = std::make_shared<const HopfStructure>(bicrossed_product(pair, jobs));

  // theta = psi o Phi^-1 : T(q^(n-1)) -> T(q)^cop -> (T^*)^cop
  const StructuralIsos isos = structural_isos(desc);
  const auto phi_inv = invert(isos.phi.columns, d);
  if (!phi_inv) throw std::logic_error("structural isomorphism is not invertible");
  auto source = std::make_shared<const HopfStructure>(hopf_structure(TaftDescriptor(n, q.pow(n - 1), "H", "X")));
  LinearMap theta{source, dual_cop, {}};
  for (const auto& col : *phi_inv) theta.columns.push_back(isos.psi.apply(col));
  // rescale X so that x <| theta(X) = -(1 - h)
  const Index X = source->index_of({0, 0, 0, 1}), x = T.index_of({0, 0, 0, 1});
  const CycScalar alpha0 = pair.act_right(SparseVec::basis(x), theta.columns[X]).coeff(0);
  if (alpha0.is_zero()) throw std::logic_error("degenerate transported pair");
  const CycScalar c = CycScalar(-1) / alpha0;
  for (Index i = 0; i < d; ++i) theta.columns[i] *= c.pow(source->basis[i][3]);

  return {n, q, td.algebra, dual_cop, std::move(pair), std::move(structure), std::move(theta)};
}

LinearMap double_to_transported(const DrinfeldDouble& dd, std::shared_ptr<const HopfStructure> codomain) {
  const Index da = dd.dual_cop->dim, dh = dd.taft->dim;
  if (codomain->dim != da * dh) throw std::invalid_argument("double_to_transported: dimension mismatch");
  const auto inv = invert(dd.theta.columns, da);
  if (!inv) throw std::logic_error("theta is not invertible");
  LinearMap f{dd.structure, std::move(codomain), {}};
  for (Index a = 0; a < da; ++a)
    for (Index g = 0; g < dh; ++g) {
      std::vector<Term> t;
      for (const auto& x : (*inv)[a].terms()) t.push_back({x.index * dh + g, x.coeff});
      f.columns.push_back(SparseVec::from_terms(std::move(t)));
    }
  return f;
}

}  // namespace taftcross
