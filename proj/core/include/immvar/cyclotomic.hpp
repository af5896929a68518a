#pragma once

#include "immvar/rational.hpp"

#include <string>
#include <vector>

namespace immvar {

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, ascending degree, computed
// by exact division of x^m - 1 by the proper-divisor cyclotomics. Cached.
std::vector<Int> cyclotomic_polynomial(unsigned m);

// An element of Q(zeta_m), stored as a residue mod the m-th cyclotomic
// polynomial: coefficient vector of length phi(m) over the power basis
// 1, z, ..., z^{phi(m)-1}. Field operations are exact; mixed-conductor
// operands are lifted to the lcm conductor automatically.
class CycloNum {
public:
  CycloNum() : m_(1), c_(1) {}
  explicit CycloNum(const Rat& r) : m_(1), c_{r} {}
  explicit CycloNum(long v) : m_(1), c_{Rat(v)} {}

  static CycloNum zero() { return CycloNum(); }
  static CycloNum one() { return CycloNum(1); }

  // zeta_m^e, any integer exponent.
  static CycloNum root_of_unity(unsigned m, long long e);

  // Builds from raw coefficients of any length (reduced mod the cyclotomic).
  static CycloNum from_coeffs(unsigned m, std::vector<Rat> raw);

  unsigned conductor() const { return m_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // True exactly when the element lies in Q (all power-basis coefficients
  // beyond the constant vanish).
  bool is_rational() const;
  Rat to_rational() const; // throws InvalidArgumentError when not rational

  // Image under Q(zeta_m) -> Q(zeta_M), zeta_m |-> zeta_M^{M/m}. Requires m | M.
  CycloNum lifted(unsigned M) const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const Rat& r, const CycloNum& a);

  CycloNum inverse() const; // throws InvalidArgumentError on zero

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  // Rational elements print as "p/q"; the rest as polynomials in z_m with
  // powers descending, e.g. "z_6 - 1" or "-1/2*z_12^3 + 2".
  std::string to_string() const;

private:
  CycloNum(unsigned m, std::vector<Rat> reduced) : m_(m), c_(std::move(reduced)) {}

  unsigned m_;
  std::vector<Rat> c_; // size phi(m_)
};

} // namespace immvar
