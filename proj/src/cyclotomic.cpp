#include "taftcross/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace taftcross {

namespace {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly rem = num;
  const std::size_t dn = den.size() - 1;
  if (rem.size() < den.size()) throw std::logic_error("divide_exact: degree too small");
  IntPoly quot(rem.size() - dn, 0);
  for (std::size_t k = rem.size(); k-- > dn;) {
    const BigInt c = rem[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t i = 0; i <= dn; ++i) rem[k - dn + i] -= c * den[i];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("divide_exact: nonzero remainder");
  trim(quot);
  return quot;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be >= 1");
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPoly result(n + 1, 0);
  result[0] = -1;
  result[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) result = divide_exact(result, cyclotomic_polynomial(d));
  std::lock_guard lock(mu);
  cache.emplace(n, result);
  return result;
}

namespace detail {

struct FieldInfo {
  int order = 1;
  int degree = 1;
  std::vector<long long> phi;                    // monic, constant term first
  std::vector<std::vector<long long>> powers;    // zeta^e reduced, e in [0, order)
};

namespace {

std::unique_ptr<FieldInfo> build_field(int order) {
  auto f = std::make_unique<FieldInfo>();
  f->order = order;
  const IntPoly phi = cyclotomic_polynomial(order);
  f->degree = static_cast<int>(phi.size()) - 1;
  for (const auto& c : phi) f->phi.push_back(static_cast<long long>(c));
  const int d = f->degree;
  std::vector<long long> cur(d, 0);
  cur[0] = 1;
  for (int e = 0; e < order; ++e) {
    f->powers.push_back(cur);
    // multiply by zeta and reduce
    std::vector<long long> next(d + 1, 0);
    for (int i = 0; i < d; ++i) next[i + 1] = cur[i];
    const long long top = next[d];
    for (int i = 0; i < d; ++i) next[i] -= top * f->phi[i];
    next.pop_back();
    cur = std::move(next);
  }
  return f;
}

}  // namespace

const FieldInfo& field_info(int order) {
  if (order < 1) throw std::invalid_argument("field order must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldInfo>> fields;
  std::lock_guard lock(mu);
  auto& slot = fields[order];
  if (!slot) slot = build_field(order);
  return *slot;
}

}  // namespace detail

// ---------------------------------------------------------------------------

CycScalar::CycScalar() : field_(&detail::field_info(1)), num_(1, 0), den_(1) {}

CycScalar::CycScalar(long long value) : field_(&detail::field_info(1)), num_(1, value), den_(1) {}

CycScalar::CycScalar(const BigRational& value)
    : field_(&detail::field_info(1)),
      num_(1, boost::multiprecision::numerator(value)),
      den_(boost::multiprecision::denominator(value)) {}

CycScalar::CycScalar(const detail::FieldInfo* field, Coeffs num, BigInt den)
    : field_(field), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

CycScalar CycScalar::from_coeffs(int order, const std::vector<BigRational>& coeffs) {
  const auto& f = detail::field_info(order);
  if (static_cast<int>(coeffs.size()) != f.degree)
    throw std::invalid_argument("CycScalar: coefficient count must equal phi(order)");
  BigInt den = 1;
  for (const auto& c : coeffs) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(c));
  Coeffs num;
  for (const auto& c : coeffs)
    num.push_back(boost::multiprecision::numerator(c) * (den / boost::multiprecision::denominator(c)));
  return CycScalar(&f, std::move(num), std::move(den));
}

CycScalar CycScalar::zeta(int order, long long exponent) {
  const auto& f = detail::field_info(order);
  long long e = exponent % order;
  if (e < 0) e += order;
  Coeffs num;
  for (long long c : f.powers[static_cast<std::size_t>(e)]) num.push_back(c);
  return CycScalar(&f, std::move(num), 1);
}

int CycScalar::order() const { return field_->order; }
int CycScalar::degree() const { return field_->degree; }

BigRational CycScalar::coeff(int i) const { return BigRational(num_.at(static_cast<std::size_t>(i)), den_); }

std::vector<BigRational> CycScalar::coeffs() const {
  std::vector<BigRational> out;
  out.reserve(num_.size());
  for (const auto& c : num_) out.emplace_back(c, den_);
  return out;
}

bool CycScalar::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycScalar::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

bool CycScalar::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

void CycScalar::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  if (den_ == 1) return;
  BigInt g = den_;
  bool zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    zero = false;
    g = boost::multiprecision::gcd(g, c);
    if (g == 1) return;
  }
  if (zero) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) c /= g;
  den_ /= g;
}

CycScalar CycScalar::embed(int target) const {
  if (target == order()) return *this;
  if (target % order() != 0) throw std::invalid_argument("CycScalar::embed: order must divide target");
  const auto& f = detail::field_info(target);
  Coeffs num(static_cast<std::size_t>(f.degree), 0);
  num[0] = num_[0];
  const int step = target / order();
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    const auto& p = f.powers[static_cast<std::size_t>(static_cast<int>(i) * step % target)];
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0) num[k] += num_[i] * p[k];
  }
  return CycScalar(&f, std::move(num), den_);
}

int CycScalar::common_order(const CycScalar& a, const CycScalar& b) {
  const int x = a.order();
  const int y = b.order();
  if (x == y) return x;
  return std::lcm(x, y);
}

void CycScalar::add_scaled(const CycScalar& other, int sign) {
  if (other.is_zero()) return;
  const int target = common_order(*this, other);
  if (target != order()) *this = embed(target);
  const CycScalar embedded = other.order() == target ? CycScalar() : other.embed(target);
  const CycScalar& src = other.order() == target ? other : embedded;
  if (den_ == src.den_) {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      if (src.num_[i] == 0) continue;
      if (sign > 0)
        num_[i] += src.num_[i];
      else
        num_[i] -= src.num_[i];
    }
  } else {
    for (std::size_t i = 0; i < num_.size(); ++i) {
      num_[i] *= src.den_;
      if (sign > 0)
        num_[i] += src.num_[i] * den_;
      else
        num_[i] -= src.num_[i] * den_;
    }
    den_ *= src.den_;
  }
  normalize();
}

CycScalar CycScalar::scaled(const BigInt& num, const BigInt& den) const {
  CycScalar r = *this;
  for (auto& c : r.num_) c *= num;
  r.den_ *= den;
  r.normalize();
  return r;
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  add_scaled(o, +1);
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  add_scaled(o, -1);
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (a.is_zero() || b.is_zero()) return CycScalar();
  if (a.order() != b.order()) {
    if (a.order() == 1) return b.scaled(a.num_[0], a.den_);
    if (b.order() == 1) return a.scaled(b.num_[0], b.den_);
    const int target = CycScalar::common_order(a, b);
    return a.embed(target) * b.embed(target);
  }
  const auto* f = a.field_;
  const int d = f->degree;
  boost::container::small_vector<BigInt, 8> prod(static_cast<std::size_t>(2 * d - 1), 0);
  for (int i = 0; i < d; ++i) {
    if (a.num_[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (b.num_[j] != 0) prod[i + j] += a.num_[i] * b.num_[j];
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0) continue;
    const BigInt c = prod[k];
    for (int i = 0; i < d; ++i)
      if (f->phi[i] != 0) prod[k - d + i] -= c * f->phi[i];
    prod[k] = 0;
  }
  CycScalar::Coeffs num(prod.begin(), prod.begin() + d);
  return CycScalar(f, std::move(num), a.den_ * b.den_);
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  *this = *this * o;
  return *this;
}

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

bool is_zero_poly(const RatPoly& p) { return p.size() == 1 && p[0] == 0; }

// Returns (q, r) with a = q*b + r.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() - 1 < db || is_zero_poly(a)) return {RatPoly{0}, a};
  RatPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const BigRational c = a[k] / b[db];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  a.resize(std::max<std::size_t>(db, 1));
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b) {
  RatPoly out(std::max(a.size(), q.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  trim(out);
  return out;
}

}  // namespace

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: division by zero");
  // Extended Euclid on (a, Phi_L): s*a + t*Phi = 1.
  RatPoly a;
  for (const auto& c : num_) a.emplace_back(c, den_);
  trim(a);
  RatPoly phi;
  for (long long c : field_->phi) phi.emplace_back(c);
  RatPoly r0 = phi, r1 = a;
  RatPoly s0{0}, s1{1};
  while (!is_zero_poly(r1)) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("CycScalar::inverse: gcd with Phi_L is not constant");
  const BigRational lead = r0[0];
  std::vector<BigRational> coeffs(static_cast<std::size_t>(field_->degree), 0);
  // s0 may have degree >= phi(L) only in degenerate cases; reduce anyway.
  auto [qq, rem] = divmod(s0, phi);
  for (std::size_t i = 0; i < rem.size() && i < coeffs.size(); ++i) coeffs[i] = rem[i] / lead;
  return from_coeffs(order(), coeffs);
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  *this = *this * o.inverse();
  return *this;
}

CycScalar CycScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar result(1);
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.order() == b.order()) return a.den_ == b.den_ && a.num_ == b.num_;
  const int target = CycScalar::common_order(a, b);
  return a.embed(target) == b.embed(target);
}

std::string CycScalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    BigRational c(num_[i], den_);
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "z" << order();
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

CycScalar field_arith(FieldOp op, const CycScalar& a, const CycScalar& b) {
  switch (op) {
    case FieldOp::add:
      return a + b;
    case FieldOp::negate:
      return -a;
    case FieldOp::multiply:
      return a * b;
    case FieldOp::invert:
      return a.inverse();
  }
  throw std::invalid_argument("field_arith: unknown op");
}

CycScalar root_of_unity(int order, long long k) { return CycScalar::zeta(order, k); }

std::optional<int> multiplicative_order(const CycScalar& a) {
  if (a.is_zero()) throw std::invalid_argument("multiplicative_order: zero has no order");
  const int bound = std::lcm(2, a.order());
  CycScalar p = a;
  for (int t = 1; t <= bound; ++t) {
    if (p.is_one()) return t;
    p *= a;
  }
  return std::nullopt;
}

std::vector<CycScalar> roots_of_unity_group(int d, int ambient_order) {
  if (d < 1 || ambient_order < 1 || ambient_order % d != 0)
    throw std::invalid_argument("roots_of_unity_group: d must divide the ambient order");
  std::vector<CycScalar> out;
  out.reserve(static_cast<std::size_t>(d));
  const int step = ambient_order / d;
  for (int j = 0; j < d; ++j) out.push_back(CycScalar::zeta(ambient_order, static_cast<long long>(step) * j));
  return out;
}

int nu(int d, int ambient_order) {
  // The roots of unity in Q(zeta_L) form a cyclic group of order lcm(2, L),
  // generated by zeta_L for even L and by -zeta_L for odd L.
  const int full = std::lcm(2, ambient_order);
  const CycScalar gen = ambient_order % 2 == 0 ? CycScalar::zeta(ambient_order, 1) : -CycScalar::zeta(ambient_order, 1);
  int count = 0;
  CycScalar w(1);
  for (int k = 0; k < full; ++k) {
    if (w.pow(d).is_one()) ++count;
    w *= gen;
  }
  return count;
}

BigRational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return BigRational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
}

}  // namespace taftcross
