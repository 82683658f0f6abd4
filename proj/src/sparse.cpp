#include "taftcross/sparse.hpp"

#include <algorithm>

namespace taftcross {

SparseVec SparseVec::basis(Index i, CycScalar c) {
  SparseVec v;
  if (!c.is_zero()) v.terms_.push_back({i, std::move(c)});
  return v;
}

SparseVec SparseVec::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.index < b.index; });
  SparseVec v;
  for (auto& t : terms) {
    if (!v.terms_.empty() && v.terms_.back().index == t.index) {
      v.terms_.back().coeff += t.coeff;
      if (v.terms_.back().coeff.is_zero()) v.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      v.terms_.push_back(std::move(t));
    }
  }
  return v;
}

CycScalar SparseVec::coeff(Index i) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), i, [](const Term& t, Index k) { return t.index < k; });
  if (it != terms_.end() && it->index == i) return it->coeff;
  return CycScalar();
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, subtract ? -b[j].coeff : b[j].coeff});
      ++j;
    } else {
      CycScalar c = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back({a[i].index, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVec& SparseVec::operator+=(const SparseVec& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

SparseVec& SparseVec::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

SparseVec SparseVec::operator-() const {
  SparseVec r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const SparseVec& a, const SparseVec& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].index != b.terms_[i].index || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

Accumulator::Accumulator(Index index_space) : dense_(index_space <= kDenseLimit) {
  if (dense_) pos_.assign(index_space, -1);
}

CycScalar& Accumulator::slot(Index i) {
  std::int32_t* p;
  if (dense_) {
    p = &pos_[i];
  } else {
    auto [it, inserted] = map_.try_emplace(i, -1);
    p = &it->second;
  }
  if (*p < 0) {
    *p = static_cast<std::int32_t>(entries_.size());
    entries_.push_back({i, CycScalar()});
  }
  return entries_[static_cast<std::size_t>(*p)].coeff;
}

void Accumulator::add(Index i, const CycScalar& c) {
  if (c.is_zero()) return;
  slot(i) += c;
}

void Accumulator::add(const SparseVec& v) {
  for (const auto& t : v.terms()) add(t.index, t.coeff);
}

void Accumulator::add(const SparseVec& v, const CycScalar& scale) {
  if (scale.is_zero()) return;
  if (scale.is_one()) {
    add(v);
    return;
  }
  for (const auto& t : v.terms()) add(t.index, t.coeff * scale);
}

SparseVec Accumulator::take() {
  if (dense_) {
    for (const auto& e : entries_) pos_[e.index] = -1;
  } else {
    map_.clear();
  }
  std::vector<Term> terms;
  terms.swap(entries_);
  return SparseVec::from_terms(std::move(terms));
}

}  // namespace taftcross
