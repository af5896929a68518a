#include "immvar/cyclotomic.hpp"

#include "immvar/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace immvar {

namespace {

using RatPoly = std::vector<Rat>; // ascending coefficients

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Division with remainder; b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat lead = b.back();
  while (a.size() >= b.size()) {
    const Rat c = a.back() / lead;
    const std::size_t shift = a.size() - b.size();
    q[shift] += c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    trim(a); // the leading term cancels, so the degree strictly drops
    if (a.empty()) break;
  }
  return {q, a};
}

// Integer-coefficient exact division (used for cyclotomic polynomials).
std::vector<Int> exact_div(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> rem = a;
  std::vector<Int> q(a.size() - b.size() + 1);
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    Int c = rem[shift + b.size() - 1] / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
  }
  for (const Int& r : rem)
    if (r != 0) throw CheckError("cyclotomic division left a remainder");
  return q;
}

std::vector<unsigned> divisors(unsigned m) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d != m / d) out.push_back(m / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reduce raw coefficients mod the (monic, integer) cyclotomic polynomial.
void reduce_mod_cyclotomic(RatPoly& v, const std::vector<Int>& phi_poly) {
  const std::size_t deg = phi_poly.size() - 1;
  for (std::size_t i = v.size(); i-- > deg;) {
    Rat c = v[i];
    if (c == 0) continue;
    v[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) v[i - deg + j] -= c * Rat(phi_poly[j]);
  }
  v.resize(deg);
}

} // namespace

unsigned euler_phi(unsigned m) {
  if (m == 0) throw InvalidArgumentError("euler_phi: m must be positive");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Int> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw InvalidArgumentError("cyclotomic_polynomial: m must be positive");
  static std::map<unsigned, std::vector<Int>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  auto compute = [](auto&& self, unsigned mm) -> const std::vector<Int>& {
    auto it = cache.find(mm);
    if (it != cache.end()) return it->second;
    std::vector<Int> num(mm + 1); // x^mm - 1
    num[0] = -1;
    num[mm] = 1;
    for (unsigned d : divisors(mm)) {
      if (d == mm) continue;
      num = exact_div(num, self(self, d));
    }
    return cache.emplace(mm, std::move(num)).first->second;
  };
  return compute(compute, m);
}

CycloNum CycloNum::root_of_unity(unsigned m, long long e) {
  if (m == 0) throw InvalidArgumentError("root_of_unity: m must be positive");
  long long r = e % static_cast<long long>(m);
  if (r < 0) r += m;
  std::vector<Rat> raw(static_cast<std::size_t>(r) + 1);
  raw.back() = 1;
  return from_coeffs(m, std::move(raw));
}

CycloNum CycloNum::from_coeffs(unsigned m, std::vector<Rat> raw) {
  if (m == 0) throw InvalidArgumentError("CycloNum: conductor must be positive");
  const std::vector<Int> phi_poly = cyclotomic_polynomial(m);
  const std::size_t deg = phi_poly.size() - 1;
  if (raw.size() > deg) reduce_mod_cyclotomic(raw, phi_poly);
  raw.resize(deg);
  return CycloNum(m, std::move(raw));
}

bool CycloNum::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycloNum::is_one() const {
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

bool CycloNum::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rat& r) { return r == 0; });
}

Rat CycloNum::to_rational() const {
  if (!is_rational()) throw InvalidArgumentError("not a rational number: " + to_string());
  return c_[0];
}

CycloNum CycloNum::lifted(unsigned M) const {
  if (M % m_ != 0) throw InvalidArgumentError("lift requires a conductor multiple");
  if (M == m_) return *this;
  const unsigned step = M / m_;
  std::vector<Rat> raw((c_.size() - 1) * step + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  return from_coeffs(M, std::move(raw));
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (Rat& r : out.c_) r = -r;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  const unsigned M = std::lcm(m_, o.m_);
  if (m_ != M) *this = lifted(M);
  if (o.m_ != M) {
    CycloNum tmp = o.lifted(M);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += tmp.c_[i];
  } else {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  }
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  const unsigned M = std::lcm(a.m_, b.m_);
  const CycloNum& la = (a.m_ == M) ? a : a.lifted(M);
  CycloNum lb_store;
  const CycloNum* lb = &b;
  if (b.m_ != M) {
    lb_store = b.lifted(M);
    lb = &lb_store;
  }
  std::vector<Rat> raw(la.c_.size() + lb->c_.size() - 1);
  for (std::size_t i = 0; i < la.c_.size(); ++i) {
    if (la.c_[i] == 0) continue;
    for (std::size_t j = 0; j < lb->c_.size(); ++j) raw[i + j] += la.c_[i] * lb->c_[j];
  }
  return CycloNum::from_coeffs(M, std::move(raw));
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum operator*(const Rat& r, const CycloNum& a) {
  CycloNum out = a;
  for (Rat& c : out.c_) c *= r;
  return out;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw InvalidArgumentError("division by zero in Q(zeta)");
  if (is_rational()) return CycloNum(m_, [&] {
    std::vector<Rat> v(c_.size());
    v[0] = Rat(1) / c_[0];
    return v;
  }());
  // Extended Euclid against the cyclotomic polynomial, which is irreducible,
  // so the gcd is a nonzero constant.
  const std::vector<Int> phi_int = cyclotomic_polynomial(m_);
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1(c_.begin(), c_.end());
  trim(r1);
  RatPoly u0{}, u1{Rat(1)}; // coefficients of *this in the Bezout identity
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    RatPoly qu = mul(q, u1);
    RatPoly u2 = u0;
    if (u2.size() < qu.size()) u2.resize(qu.size());
    for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    trim(u2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r0.size() != 1) throw CheckError("cyclotomic gcd was not constant");
  const Rat scale = Rat(1) / r0[0];
  for (Rat& c : u0) c *= scale;
  return from_coeffs(m_, std::move(u0));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  const unsigned M = std::lcm(a.m_, b.m_);
  const CycloNum la = (a.m_ == M) ? a : a.lifted(M);
  const CycloNum lb = (b.m_ == M) ? b : b.lifted(M);
  return la.c_ == lb.c_;
}

std::string CycloNum::to_string() const {
  if (is_rational()) return immvar::to_string(c_[0]);
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& coef = c_[i];
    if (coef == 0) continue;
    const bool negative = coef < 0;
    Rat mag = negative ? Rat(-coef) : coef;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = (mag == 1) && i != 0;
    if (!unit) out << immvar::to_string(mag);
    if (i != 0) {
      if (!unit) out << '*';
      out << "z_" << m_;
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

} // namespace immvar
