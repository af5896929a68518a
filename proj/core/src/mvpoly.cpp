#include "immvar/mvpoly.hpp"

#include "immvar/errors.hpp"

#include <numeric>
#include <sstream>

namespace immvar {

VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool MVPoly::TermOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b; // lex-larger first within a degree
}

VarsPtr MVPoly::empty_vars() {
  static const VarsPtr empty = make_vars({});
  return empty;
}

MVPoly MVPoly::constant(VarsPtr vars, CycloNum c) {
  MVPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_->size(), 0), std::move(c));
  return p;
}

MVPoly MVPoly::variable(VarsPtr vars, std::size_t index) {
  if (index >= vars->size()) throw InvalidArgumentError("MVPoly: variable index out of range");
  MVPoly p(std::move(vars));
  Exponents e(p.vars_->size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), CycloNum::one());
  return p;
}

MVPoly MVPoly::monomial(VarsPtr vars, Exponents exps, CycloNum c) {
  if (exps.size() != vars->size())
    throw InvalidArgumentError("MVPoly: exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw InvalidArgumentError("MVPoly: negative exponent");
  MVPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

int MVPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& lead = terms_.begin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0);
}

CycloNum MVPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNum() : it->second;
}

void MVPoly::require_same_vars(const MVPoly& o) const {
  if (vars_ == o.vars_) return;
  if (*vars_ != *o.vars_)
    throw InvalidArgumentError("MVPoly: operands declare different variable lists");
}

void MVPoly::insert_term(const Exponents& e, const CycloNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MVPoly MVPoly::operator-() const {
  MVPoly out(vars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MVPoly& MVPoly::operator+=(const MVPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) insert_term(e, c);
  return *this;
}

MVPoly& MVPoly::operator-=(const MVPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) insert_term(e, -c);
  return *this;
}

MVPoly operator*(const MVPoly& a, const MVPoly& b) {
  a.require_same_vars(b);
  MVPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MVPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

MVPoly operator*(const MVPoly& a, const CycloNum& c) {
  MVPoly out(a.vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, coef] : a.terms_) out.insert_term(e, coef * c);
  return out;
}

bool MVPoly::operator==(const MVPoly& o) const {
  if (vars_ != o.vars_ && *vars_ != *o.vars_) return false;
  return terms_ == o.terms_;
}

CycloNum MVPoly::evaluate(const std::vector<CycloNum>& point) const {
  if (point.size() != vars_->size())
    throw InvalidArgumentError("MVPoly: evaluation point length mismatch");
  CycloNum sum;
  for (const auto& [e, c] : terms_) {
    CycloNum term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int p = 0; p < e[i]; ++p) term *= point[i];
    sum += term;
  }
  return sum;
}

MVPoly MVPoly::with_zeroed(const std::vector<bool>& zeroed) const {
  if (zeroed.size() != vars_->size())
    throw InvalidArgumentError("MVPoly: zero mask length mismatch");
  MVPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    bool killed = false;
    for (std::size_t i = 0; i < e.size() && !killed; ++i) killed = zeroed[i] && e[i] > 0;
    if (!killed) out.terms_.emplace(e, c);
  }
  return out;
}

MVPoly MVPoly::renamed(const std::vector<std::size_t>& new_index) const {
  if (new_index.size() != vars_->size())
    throw InvalidArgumentError("MVPoly: rename map length mismatch");
  MVPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents moved(e.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (new_index[i] >= e.size()) throw InvalidArgumentError("MVPoly: rename map out of range");
      moved[new_index[i]] += e[i];
    }
    out.insert_term(moved, c);
  }
  return out;
}

std::string MVPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::ostringstream mono;
    bool has_var = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << '*';
      mono << (*vars_)[i];
      if (e[i] > 1) mono << '^' << e[i];
      has_var = true;
    }
    if (c.is_rational()) {
      const Rat r = c.to_rational();
      const bool negative = r < 0;
      const Rat mag = negative ? Rat(-r) : r;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      if (mag != 1 || !has_var) out << immvar::to_string(mag) << (has_var ? "*" : "");
      out << mono.str();
    } else {
      if (!first) out << " + ";
      out << '(' << c.to_string() << ')' << (has_var ? "*" : "") << mono.str();
    }
    first = false;
  }
  return out.str();
}

} // namespace immvar
