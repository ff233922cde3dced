// SPDX-License-Identifier: Apache-2.0

#include "wreathchar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wreathchar {

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  unsigned long result = n;
  unsigned long m = n;
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// ---------------------------------------------------------------------------
// Plain rational polynomials (ascending coefficients), used only to build
// Phi_r and reduction data.  Not exposed; UniPoly is the public face.
// ---------------------------------------------------------------------------

using QPoly = std::vector<Rational>;

void qp_trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

// Long division: a = q*b + rem with deg rem < deg b.  b must be nonzero.
QPoly qp_divmod(QPoly a, const QPoly& b, QPoly* rem_out) {
  qp_trim(a);
  if (b.empty()) throw std::domain_error("qp_divmod: division by zero polynomial");
  QPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const size_t shift = a.size() - b.size();
    const Rational f = a.back() * lead_inv;
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    qp_trim(a);  // kills at least the leading term each round
  }
  if (rem_out) *rem_out = a;
  qp_trim(q);
  return q;
}

QPoly qp_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qp_trim(a);
  return a;
}

// Memoized Phi_r over Q, ascending coefficients, monic.
const QPoly& phi_poly(unsigned long r);

std::map<unsigned long, QPoly>& phi_cache() {
  static std::map<unsigned long, QPoly> cache;
  return cache;
}
std::mutex& phi_mutex() {
  static std::mutex m;
  return m;
}

QPoly phi_poly_nolock(unsigned long r) {
  auto& cache = phi_cache();
  if (auto it = cache.find(r); it != cache.end()) return it->second;
  // x^r - 1 divided by the product of Phi_d over proper divisors d of r.
  QPoly p(r + 1, Rational(0));
  p[0] = Rational(-1);
  p[r] = Rational(1);
  for (unsigned long d = 1; d < r; ++d) {
    if (r % d != 0) continue;
    QPoly rem;
    p = qp_divmod(p, phi_poly_nolock(d), &rem);
    if (!rem.empty())
      throw std::logic_error("phi_poly: non-exact division, cyclotomic table corrupt");
  }
  cache[r] = p;
  return p;
}

struct Ctx {
  unsigned long r = 1;
  unsigned long phi = 1;
  QPoly modpoly;                // Phi_r, size phi+1, monic
  std::vector<QPoly> powrow;    // powrow[t] = x^t mod Phi_r, each of size phi
};

std::shared_ptr<const Ctx> context(unsigned long r) {
  static std::map<unsigned long, std::shared_ptr<const Ctx>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  if (auto it = cache.find(r); it != cache.end()) return it->second;

  auto ctx = std::make_shared<Ctx>();
  ctx->r = r;
  {
    std::lock_guard<std::mutex> plock(phi_mutex());
    ctx->modpoly = phi_poly_nolock(r);
  }
  ctx->phi = ctx->modpoly.size() - 1;
  const unsigned long phi = ctx->phi;
  // Products of two reduced elements reach degree 2*phi-2; root_power asks
  // for exponents up to r-1.  Precompute rows covering both.
  const unsigned long maxpow = std::max(r >= 1 ? r - 1 : 0, 2 * phi >= 2 ? 2 * phi - 2 : 0);
  ctx->powrow.resize(maxpow + 1, QPoly(phi, Rational(0)));
  ctx->powrow[0][0] = Rational(1);
  for (unsigned long t = 1; t <= maxpow; ++t) {
    const QPoly& prev = ctx->powrow[t - 1];
    QPoly cur(phi, Rational(0));
    // Multiply by x, folding the overflow coefficient back via Phi_r.
    const Rational overflow = prev[phi - 1];
    for (unsigned long i = 0; i + 1 < phi; ++i) cur[i + 1] = prev[i];
    if (!overflow.is_zero()) {
      for (unsigned long i = 0; i < phi; ++i)
        cur[i] -= overflow * ctx->modpoly[i];
    }
    ctx->powrow[t] = std::move(cur);
  }
  cache[r] = ctx;
  return ctx;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cyclotomic
// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(unsigned long order) : order_(order) {
  if (order == 0) throw std::invalid_argument("Cyclotomic: order must be positive");
  c_.assign(euler_phi(order), Rational(0));
}

Cyclotomic Cyclotomic::one(unsigned long order) {
  Cyclotomic z(order);
  z.c_[0] = Rational(1);
  return z;
}

Cyclotomic Cyclotomic::from_rational(const Rational& q, unsigned long order) {
  Cyclotomic z(order);
  z.c_[0] = q;
  return z;
}

Cyclotomic Cyclotomic::root_power(unsigned long order, long e) {
  Cyclotomic z(order);
  const long r = static_cast<long>(order);
  long em = e % r;
  if (em < 0) em += r;
  const auto ctx = context(order);
  const QPoly& row = ctx->powrow[static_cast<unsigned long>(em)];
  for (unsigned long i = 0; i < z.c_.size(); ++i) z.c_[i] = row[i];
  return z;
}

Cyclotomic Cyclotomic::from_strings(const std::vector<std::string>& coeffs,
                                    unsigned long order) {
  Cyclotomic z(order);
  if (coeffs.size() != z.c_.size())
    throw std::invalid_argument("Cyclotomic: expected " +
                                std::to_string(z.c_.size()) +
                                " coefficients for order " + std::to_string(order));
  for (size_t i = 0; i < coeffs.size(); ++i) z.c_[i] = Rational::parse(coeffs[i]);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational())
    throw std::domain_error("Cyclotomic: not a rational value: " + str());
  return c_[0];
}

Cyclotomic Cyclotomic::lifted(unsigned long order) const {
  if (order_ == order) return *this;
  if (order_ != 1)
    throw std::invalid_argument("Cyclotomic: cannot mix orders " +
                                std::to_string(order_) + " and " +
                                std::to_string(order));
  return from_rational(c_[0], order);
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
  if (a.order_ == b.order_) return;
  if (a.order_ == 1) {
    a = a.lifted(b.order_);
  } else {
    b = b.lifted(a.order_);
  }
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z(*this);
  for (auto& x : z.c_) x = -x;
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  Cyclotomic rhs(o);
  align(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  Cyclotomic rhs(o);
  align(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  Cyclotomic rhs(o);
  align(*this, rhs);
  const unsigned long phi = c_.size();
  // Convolve, then fold the high part back through the power table.
  std::vector<Rational> conv(2 * phi >= 1 ? 2 * phi - 1 : 1, Rational(0));
  for (unsigned long i = 0; i < phi; ++i) {
    if (c_[i].is_zero()) continue;
    for (unsigned long j = 0; j < phi; ++j) {
      if (rhs.c_[j].is_zero()) continue;
      conv[i + j] += c_[i] * rhs.c_[j];
    }
  }
  const auto ctx = context(order_);
  std::vector<Rational> out(phi, Rational(0));
  for (unsigned long t = 0; t < conv.size(); ++t) {
    if (conv[t].is_zero()) continue;
    if (t < phi) {
      out[t] += conv[t];
    } else {
      const QPoly& row = ctx->powrow[t];
      for (unsigned long i = 0; i < phi; ++i) out[i] += conv[t] * row[i];
    }
  }
  c_ = std::move(out);
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
  if (is_rational()) return from_rational(c_[0].inverse(), order_);
  const auto ctx = context(order_);
  // Extended Euclid in Q[x] between the representative and Phi_r.  Phi_r is
  // irreducible over Q, so the gcd is a nonzero constant c with
  // u * rep + v * Phi_r = c, giving rep^{-1} = u / c in the quotient.
  QPoly r0(c_.begin(), c_.end());
  qp_trim(r0);
  QPoly r1 = ctx->modpoly;
  QPoly u0 = {Rational(1)};
  QPoly u1 = {};
  while (!r1.empty()) {
    QPoly rem;
    QPoly q = qp_divmod(r0, r1, &rem);
    r0 = std::move(r1);
    r1 = std::move(rem);
    QPoly u2 = qp_sub(u0, qp_mul(q, u1));
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.size() != 1)
    throw std::logic_error("Cyclotomic: gcd with Phi_r not constant");
  const Rational inv_c = r0[0].inverse();
  // u0 may have degree up to phi-1 + the quotient's; reduce through powrows.
  const unsigned long phi = ctx->phi;
  Cyclotomic out(order_);
  for (unsigned long t = 0; t < u0.size(); ++t) {
    if (u0[t].is_zero()) continue;
    const Rational coef = u0[t] * inv_c;
    if (t < phi) {
      out.c_[t] += coef;
    } else {
      const QPoly& row = ctx->powrow[t];
      for (unsigned long i = 0; i < phi; ++i) out.c_[i] += coef * row[i];
    }
  }
  return out;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  Cyclotomic rhs(o);
  align(*this, rhs);
  return *this *= rhs.inverse();
}

Cyclotomic Cyclotomic::conjugate() const {
  if (order_ <= 2) return *this;  // real subfields
  Cyclotomic out(order_);
  for (unsigned long j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) continue;
    Cyclotomic term = root_power(order_, -static_cast<long>(j));
    for (unsigned long i = 0; i < out.c_.size(); ++i)
      out.c_[i] += c_[j] * term.c_[i];
  }
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  Cyclotomic a(*this), b(o);
  align(a, b);
  return a.c_ == b.c_;
}

std::vector<std::string> Cyclotomic::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.str());
  return out;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (unsigned long j = 0; j < c_.size(); ++j) {
    const Rational& a = c_[j];
    if (a.is_zero()) continue;
    const bool neg = a.sign() < 0;
    const Rational mag = neg ? -a : a;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (j == 0) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << "z";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
  return os << z.str();
}

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::string var, std::vector<Cyclotomic> coeffs)
    : var_(std::move(var)), order_(1), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.order() == 1) continue;
    if (order_ == 1) {
      order_ = c.order();
    } else if (order_ != c.order()) {
      throw std::invalid_argument("UniPoly: mixed coefficient orders");
    }
  }
  if (order_ != 1)
    for (auto& c : c_)
      if (c.order() == 1) c = Cyclotomic::from_rational(c.rational_part(), order_);
  trim();
}

UniPoly UniPoly::monomial(const Cyclotomic& c, unsigned long power,
                          std::string var) {
  std::vector<Cyclotomic> coeffs(power + 1, Cyclotomic::zero(c.order()));
  coeffs[power] = c;
  return UniPoly(std::move(var), std::move(coeffs));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Cyclotomic UniPoly::coeff(unsigned long i) const {
  if (i < c_.size()) return c_[i];
  return Cyclotomic::zero(order_);
}

UniPoly UniPoly::operator-() const {
  UniPoly p(*this);
  for (auto& c : p.c_) c = -c;
  return p;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Cyclotomic::zero(order_));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  if (order_ == 1 && o.order_ != 1) order_ = o.order_;
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += -o; }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly(var_, std::max(order_, o.order_));
  std::vector<Cyclotomic> out(c_.size() + o.c_.size() - 1,
                              Cyclotomic::zero(std::max(order_, o.order_)));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return UniPoly(var_, std::move(out));
}

Cyclotomic UniPoly::eval(const Cyclotomic& x) const {
  Cyclotomic acc = Cyclotomic::zero(std::max(order_, x.order()));
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Cyclotomic& c = c_[i];
    if (c.is_zero()) continue;
    std::string coef;
    bool neg = false;
    if (c.is_rational()) {
      Rational a = c.rational_part();
      neg = a.sign() < 0;
      const Rational mag = neg ? -a : a;
      coef = (mag.is_one() && i > 0) ? "" : mag.str();
    } else {
      coef = "(" + c.str() + ")";
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << coef;
    if (i > 0) {
      os << var_;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) {
  return os << p.str();
}

UniPoly cyclotomic_polynomial(unsigned long r) {
  if (r == 0) throw std::invalid_argument("cyclotomic_polynomial: r must be positive");
  QPoly p;
  {
    std::lock_guard<std::mutex> lock(phi_mutex());
    p = phi_poly_nolock(r);
  }
  std::vector<Cyclotomic> coeffs;
  coeffs.reserve(p.size());
  for (const auto& x : p) coeffs.push_back(Cyclotomic::from_rational(x));
  return UniPoly("x", std::move(coeffs));
}

}  // namespace wreathchar
