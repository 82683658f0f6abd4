#pragma once

#include "taftcross/cyclotomic.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace taftcross {

using Index = std::uint64_t;

struct Term {
  Index index;
  CycScalar coeff;
};

/// Sparse vector over CycScalar: terms sorted by index, zero coefficients never stored.
/// Tensor elements use the same type with packed indices (see pack()).
class SparseVec {
 public:
  SparseVec() = default;

  static SparseVec basis(Index i, CycScalar c = CycScalar(1));
  /// Builds from unsorted terms with possible repeats.
  static SparseVec from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  CycScalar coeff(Index i) const;

  SparseVec& operator+=(const SparseVec& o);
  SparseVec& operator-=(const SparseVec& o);
  SparseVec& operator*=(const CycScalar& c);
  SparseVec operator-() const;

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const CycScalar& c, SparseVec v) { return v *= c; }
  friend bool operator==(const SparseVec& a, const SparseVec& b);
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

inline Index pack(Index a, Index b, Index dim_b) { return a * dim_b + b; }

/// Collects many scaled contributions and emits a canonical SparseVec.
/// A dense position table is used when the index space is small enough, a hash map otherwise.
class Accumulator {
 public:
  explicit Accumulator(Index index_space);

  void add(Index i, const CycScalar& c);
  void add(const SparseVec& v);
  void add(const SparseVec& v, const CycScalar& scale);
  SparseVec take();

 private:
  static constexpr Index kDenseLimit = Index{1} << 22;
  CycScalar& slot(Index i);

  bool dense_;
  std::vector<std::int32_t> pos_;
  std::unordered_map<Index, std::int32_t> map_;
  std::vector<Term> entries_;
};

}  // namespace taftcross
