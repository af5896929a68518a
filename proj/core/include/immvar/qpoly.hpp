#pragma once

#include "immvar/rational.hpp"

#include <string>
#include <vector>

namespace immvar {

// Univariate polynomial in q with integer coefficients; used for rank
// generating functions and Hilbert-type bounds.
class QPoly {
public:
  QPoly() = default;
  explicit QPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

  static QPoly one() { return QPoly({Int(1)}); }
  static QPoly q_power(unsigned e);
  // The q-analogue [n]_{q^step} = 1 + q^step + ... + q^{(n-1)step}.
  static QPoly bracket(unsigned n, unsigned step);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coefficients() const { return c_; }

  QPoly& operator+=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly pow(unsigned e) const;
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  // Divides every coefficient by d; throws CheckError if any is not divisible.
  void divide_exact(const Int& d);

  Int value_at_one() const;
  // Coefficient vector between its first and last nonzero entries reads the
  // same in both directions.
  bool palindromic() const;

  // Descending powers: "q^4 + 3*q^3 + 4*q^2 + 3*q + 1"; zero prints as "0".
  std::string to_string() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_; // ascending, trimmed
};

} // namespace immvar
