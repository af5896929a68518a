#include "immvar/immanant.hpp"

#include "immvar/errors.hpp"
#include "immvar/symtensor.hpp"

#include <string>

namespace immvar {

namespace {

void validate_indices(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                      int rows, int cols) {
  const int k = chi.group().k();
  if (x.k() != k || y.k() != k)
    throw InvalidArgumentError("immanant: index length differs from the group's k");
  validate_multi_index(x, rows);
  validate_multi_index(y, cols);
}

CycloNum scale_entry(const CycloNum& chi_value, const Rat& t) { return chi_value * CycloNum(t); }
CycloNum scale_entry(const CycloNum& chi_value, const CycloNum& t) { return chi_value * t; }
MVPoly scale_entry(const CycloNum& chi_value, const MVPoly& t) { return t * chi_value; }

template <typename R>
auto immanant_impl(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                   const Matrix<R>& m) {
  validate_indices(chi, x, y, m.rows(), m.cols());
  const PermGroup& g = chi.group();
  using Out = decltype(scale_entry(chi.value(0), m.at(1, 1)));
  Out sum{};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (chi.value(i).is_zero()) continue;
    const MultiIndex gx = act(g.element(i), x);
    R entry = m.at(gx[0], y[0]);
    for (int pos = 1; pos < x.k(); ++pos) entry = entry * m.at(gx[pos], y[pos]);
    sum += scale_entry(chi.value(i), entry);
  }
  return sum;
}

} // namespace

CycloNum immanant(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                  const Matrix<Rat>& m) {
  return immanant_impl(chi, x, y, m);
}

CycloNum immanant(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                  const Matrix<CycloNum>& m) {
  return immanant_impl(chi, x, y, m);
}

MVPoly immanant(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                const Matrix<MVPoly>& m) {
  MVPoly sum = MVPoly::zero(m.at(1, 1).vars_ptr());
  validate_indices(chi, x, y, m.rows(), m.cols());
  const PermGroup& g = chi.group();
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (chi.value(i).is_zero()) continue;
    const MultiIndex gx = act(g.element(i), x);
    MVPoly entry = m.at(gx[0], y[0]);
    for (int pos = 1; pos < x.k(); ++pos) entry = entry * m.at(gx[pos], y[pos]);
    sum += entry * chi.value(i);
  }
  return sum;
}

bool check_immanant_identity(const Character& chi, const Matrix<Rat>& m,
                             const MultiIndex& x, const MultiIndex& y) {
  validate_indices(chi, x, y, m.rows(), m.cols());
  const SymTensor projected = apply_idempotent(chi, SymTensor::basis(m.cols(), y));
  CycloNum lhs;
  for (const auto& [z, c] : projected.coeffs()) lhs += c * CycloNum(tensor_entry(m, x, z));
  const CycloNum rhs =
      Rat(chi.degree(), static_cast<long>(chi.group().size())) * immanant(chi, x, y, m);
  return lhs == rhs;
}

VarsPtr generic_vars(int n, int k) {
  if (n < 1 || k < 1) throw InvalidArgumentError("generic_vars: dimensions must be positive");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j)
      names.push_back("a_" + std::to_string(i) + "_" + std::to_string(j));
  return make_vars(std::move(names));
}

Matrix<MVPoly> generic_matrix(int n, int k) {
  const VarsPtr vars = generic_vars(n, k);
  Matrix<MVPoly> a(n, k, MVPoly::zero(vars));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j)
      a.at(i, j) = MVPoly::variable(vars, static_cast<std::size_t>((i - 1) * k + (j - 1)));
  return a;
}

std::map<MultiIndex, MVPoly> parametric_equations(const Character& chi, int n,
                                                  const Bounds& bounds) {
  const int k = chi.group().k();
  checked_power(n, k, bounds.enumeration);
  const Matrix<MVPoly> a = generic_matrix(n, k);
  const MultiIndex cols = MultiIndex::iota(k);
  std::map<MultiIndex, MVPoly> out;
  MultiIndexRange range(n, k);
  range.for_each([&](const MultiIndex& z) { out.emplace(z, immanant(chi, z, cols, a)); });
  return out;
}

} // namespace immvar
