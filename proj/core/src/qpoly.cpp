#include "immvar/qpoly.hpp"

#include "immvar/errors.hpp"

#include <sstream>

namespace immvar {

QPoly QPoly::q_power(unsigned e) {
  std::vector<Int> c(e + 1);
  c[e] = 1;
  return QPoly(std::move(c));
}

QPoly QPoly::bracket(unsigned n, unsigned step) {
  if (step == 0) throw InvalidArgumentError("bracket: step must be positive");
  std::vector<Int> c;
  if (n > 0) {
    c.assign((n - 1) * step + 1, Int(0));
    for (unsigned i = 0; i < n; ++i) c[i * step] = 1;
  }
  return QPoly(std::move(c));
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(c));
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result = QPoly::one();
  QPoly base = *this;
  while (e != 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

void QPoly::divide_exact(const Int& d) {
  if (d == 0) throw InvalidArgumentError("divide_exact: zero divisor");
  for (Int& c : c_) {
    if (c % d != 0) throw CheckError("coefficient not divisible by " + immvar::to_string(d));
    c /= d;
  }
}

Int QPoly::value_at_one() const {
  Int sum = 0;
  for (const Int& c : c_) sum += c;
  return sum;
}

bool QPoly::palindromic() const {
  if (c_.empty()) return true;
  std::size_t lo = 0;
  while (c_[lo] == 0) ++lo; // trimmed, so a nonzero entry exists
  std::size_t hi = c_.size() - 1;
  while (lo < hi) {
    if (c_[lo] != c_[hi]) return false;
    ++lo;
    --hi;
  }
  return true;
}

std::string QPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Int& coef = c_[i];
    if (coef == 0) continue;
    const bool negative = coef < 0;
    Int mag = negative ? Int(-coef) : coef;
    if (first) {
      if (negative) out << '-';
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = (mag == 1) && i != 0;
    if (!unit) out << mag.str();
    if (i != 0) {
      if (!unit) out << '*';
      out << 'q';
      if (i > 1) out << '^' << i;
    }
  }
  return out.str();
}

} // namespace immvar
