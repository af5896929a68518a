#pragma once

#include "immvar/cyclotomic.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace immvar {

using VarsPtr = std::shared_ptr<const std::vector<std::string>>;

VarsPtr make_vars(std::vector<std::string> names);

// Sparse multivariate polynomial over Q(zeta): exponent vectors mapped to
// cyclotomic coefficients. Terms are kept in graded lexicographic order
// (higher total degree first, then lex on the declared variable order), which
// is also the printing order. Binary operations require the same variable
// list.
class MVPoly {
public:
  using Exponents = std::vector<int>;

  // Graded-lex "greater" packaged as a strict weak order so that map
  // iteration visits the leading term first.
  struct TermOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, CycloNum, TermOrder>;

  MVPoly() : vars_(empty_vars()) {}
  static MVPoly zero(VarsPtr vars) { return MVPoly(std::move(vars)); }
  static MVPoly constant(VarsPtr vars, CycloNum c);
  static MVPoly variable(VarsPtr vars, std::size_t index);
  static MVPoly monomial(VarsPtr vars, Exponents exps, CycloNum c);

  const std::vector<std::string>& variables() const { return *vars_; }
  VarsPtr vars_ptr() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const; // -1 for zero
  CycloNum coeff(const Exponents& e) const;

  MVPoly operator-() const;
  MVPoly& operator+=(const MVPoly& o);
  MVPoly& operator-=(const MVPoly& o);
  friend MVPoly operator+(MVPoly a, const MVPoly& b) { return a += b; }
  friend MVPoly operator-(MVPoly a, const MVPoly& b) { return a -= b; }
  friend MVPoly operator*(const MVPoly& a, const MVPoly& b);
  friend MVPoly operator*(const MVPoly& a, const CycloNum& c);
  friend MVPoly operator*(const CycloNum& c, const MVPoly& a) { return a * c; }

  bool operator==(const MVPoly& o) const;
  bool operator!=(const MVPoly& o) const { return !(*this == o); }

  // Exact evaluation; point must list one value per variable.
  CycloNum evaluate(const std::vector<CycloNum>& point) const;

  // Sets the flagged variables to zero.
  MVPoly with_zeroed(const std::vector<bool>& zeroed) const;

  // Relabels variables within the same list: old index i becomes new_index[i]
  // (a permutation of the variable positions).
  MVPoly renamed(const std::vector<std::size_t>& new_index) const;

  // Graded-lex descending, e.g. "2*a_1_1*a_1_2*a_2_3 - a_1_1*a_2_2*a_1_3".
  // Non-rational coefficients are parenthesized. Zero prints as "0".
  std::string to_string() const;

private:
  explicit MVPoly(VarsPtr vars) : vars_(std::move(vars)) {}
  static VarsPtr empty_vars();
  void require_same_vars(const MVPoly& o) const;
  void insert_term(const Exponents& e, const CycloNum& c);

  VarsPtr vars_;
  TermMap terms_;
};

} // namespace immvar
