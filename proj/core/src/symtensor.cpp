#include "immvar/symtensor.hpp"

#include "immvar/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace immvar {

SymTensor::SymTensor(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n < 1) throw InvalidArgumentError("SymTensor: k and n must be positive");
}

SymTensor SymTensor::basis(int n, const MultiIndex& x) {
  validate_multi_index(x, n);
  SymTensor v(x.k(), n);
  v.coeffs_.emplace(x, CycloNum::one());
  return v;
}

SymTensor SymTensor::decomposable(const std::vector<std::vector<Rat>>& factors) {
  if (factors.empty()) throw InvalidArgumentError("decomposable: no factors");
  const std::size_t n = factors.front().size();
  if (n == 0) throw InvalidArgumentError("decomposable: empty factor");
  for (const auto& f : factors) {
    if (f.size() != n) throw InvalidArgumentError("decomposable: factor lengths differ");
    if (std::all_of(f.begin(), f.end(), [](const Rat& r) { return r == 0; }))
      throw InvalidArgumentError("decomposable: zero factor");
  }
  const int k = static_cast<int>(factors.size());
  SymTensor v(k, static_cast<int>(n));
  MultiIndex x = MultiIndex::constant(k, 1);
  for (;;) {
    Rat c(1);
    for (int j = 0; j < k; ++j) c *= factors[static_cast<std::size_t>(j)][static_cast<std::size_t>(x[j] - 1)];
    if (c != 0) v.coeffs_.emplace(x, CycloNum(c));
    int pos = k - 1;
    while (pos >= 0 && x.v[static_cast<std::size_t>(pos)] == static_cast<int>(n)) {
      x.v[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++x.v[static_cast<std::size_t>(pos)];
  }
  return v;
}

CycloNum SymTensor::coeff(const MultiIndex& x) const {
  auto it = coeffs_.find(x);
  return it == coeffs_.end() ? CycloNum() : it->second;
}

void SymTensor::add_term(const MultiIndex& x, const CycloNum& c) {
  if (x.k() != k_) throw InvalidArgumentError("SymTensor: index length mismatch");
  validate_multi_index(x, n_);
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void SymTensor::require_compatible(const SymTensor& o) const {
  if (k_ != o.k_ || n_ != o.n_)
    throw InvalidArgumentError("SymTensor: operands live in different tensor spaces");
}

SymTensor SymTensor::operator-() const {
  SymTensor out(k_, n_);
  for (const auto& [x, c] : coeffs_) out.coeffs_.emplace(x, -c);
  return out;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  require_compatible(o);
  for (const auto& [x, c] : o.coeffs_) add_term(x, c);
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  require_compatible(o);
  for (const auto& [x, c] : o.coeffs_) add_term(x, -c);
  return *this;
}

SymTensor operator*(const SymTensor& v, const CycloNum& c) {
  SymTensor out(v.k_, v.n_);
  if (c.is_zero()) return out;
  for (const auto& [x, coef] : v.coeffs_) {
    CycloNum prod = coef * c;
    if (!prod.is_zero()) out.coeffs_.emplace(x, std::move(prod));
  }
  return out;
}

std::string SymTensor::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [x, c] : coeffs_) {
    if (c.is_rational()) {
      const Rat r = c.to_rational();
      const bool negative = r < 0;
      const Rat mag = negative ? Rat(-r) : r;
      if (first) {
        if (negative) out << '-';
      } else {
        out << (negative ? " - " : " + ");
      }
      if (mag != 1) out << immvar::to_string(mag) << '*';
      out << 'e' << x.to_string();
    } else {
      if (!first) out << " + ";
      out << '(' << c.to_string() << ")*e" << x.to_string();
    }
    first = false;
  }
  return out.str();
}

SymTensor apply_perm(const Perm& w, const SymTensor& v) {
  if (w.k() != v.k()) throw InvalidArgumentError("apply_perm: length mismatch");
  SymTensor out(v.k(), v.n());
  for (const auto& [x, c] : v.coeffs()) out.add_term(act(w, x), c);
  return out;
}

SymTensor apply_idempotent(const Character& chi, const SymTensor& v) {
  const PermGroup& g = chi.group();
  if (g.k() != v.k())
    throw InvalidArgumentError("apply_idempotent: character degree k differs from tensor k");
  const std::vector<CycloNum> coeffs = chi.idempotent_coefficients();
  SymTensor out(v.k(), v.n());
  for (const auto& [x, c] : v.coeffs()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      out.add_term(act(g.element(i), x), coeffs[i] * c);
    }
  }
  return out;
}

bool stabilizer_in_kernel(const Character& chi, const MultiIndex& x) {
  if (!chi.one_dimensional())
    throw InvalidArgumentError("stabilizer_in_kernel: character is not one-dimensional");
  for (std::size_t i : chi.group().stabilizer_indices(x))
    if (!chi.value(i).is_one()) return false;
  return true;
}

std::vector<MultiIndex> canonical_index_set(const Character& chi, int n, const Bounds& bounds) {
  if (!chi.one_dimensional())
    throw InvalidArgumentError("canonical_index_set: character is not one-dimensional");
  const PermGroup& g = chi.group();
  checked_power(n, g.k(), bounds.enumeration);
  std::vector<MultiIndex> out;
  MultiIndexRange range(n, g.k());
  range.for_each([&](const MultiIndex& x) {
    bool canonical = true;
    bool kernel_ok = true;
    for (std::size_t i = 0; i < g.size() && canonical; ++i) {
      const MultiIndex y = act(g.element(i), x);
      if (y < x) canonical = false;
      else if (y == x && !chi.value(i).is_one()) kernel_ok = false;
    }
    if (canonical && kernel_ok) out.push_back(x);
  });
  return out;
}

Int dim_formula(const Character& chi, int n) {
  if (n < 1) throw InvalidArgumentError("dim_formula: n must be positive");
  const PermGroup& g = chi.group();
  CycloNum sum;
  for (std::size_t i = 0; i < g.size(); ++i)
    sum += chi.value(i) * CycloNum(Rat(int_pow(Int(n), g.element(i).cycle_count())));
  const CycloNum scaled = Rat(chi.degree(), static_cast<long>(g.size())) * sum;
  if (!scaled.is_rational())
    throw CheckError("dim_formula: character sum is not rational (not a class function?)");
  const Rat value = scaled.to_rational();
  if (!is_integer(value) || value < 0)
    throw CheckError("dim_formula: value " + immvar::to_string(value) +
                     " is not a non-negative integer");
  return to_integer(value);
}

std::map<MultiIndex, CycloNum> coords_in_basis(const Character& chi, const SymTensor& v) {
  if (!chi.one_dimensional())
    throw InvalidArgumentError("coords_in_basis: character is not one-dimensional");
  const PermGroup& g = chi.group();
  if (g.k() != v.k())
    throw InvalidArgumentError("coords_in_basis: character k differs from tensor k");
  if (!(apply_idempotent(chi, v) == v))
    throw InvalidArgumentError("coords_in_basis: tensor is not fixed by the idempotent");
  std::map<MultiIndex, CycloNum> out;
  for (const auto& [x, c] : v.coeffs()) {
    if (!(g.canonical_rep(x) == x)) continue;
    const auto stab = g.stabilizer_indices(x);
    const Rat scale(static_cast<long>(g.size()),
                    static_cast<long>(stab.size()) * chi.degree());
    out.emplace(x, scale * c);
  }
  return out;
}

std::vector<MultiIndex> support(const Character& chi, const SymTensor& v) {
  std::vector<MultiIndex> out;
  for (const auto& [x, a] : coords_in_basis(chi, v)) out.push_back(x);
  return out;
}

namespace {

// One sparse row of the idempotent's matrix, sorted by column index.
using SparseRow = std::vector<std::pair<std::uint64_t, CycloNum>>;

SparseRow axpy(const SparseRow& r, const CycloNum& c, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(r.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < r.size() && r[i].first < pivot[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || pivot[j].first < r[i].first) {
      out.emplace_back(pivot[j].first, c * pivot[j].second);
      ++j;
    } else {
      CycloNum sum = r[i].second + c * pivot[j].second;
      if (!sum.is_zero()) out.emplace_back(r[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  return out;
}

} // namespace

Int rank_of_image(const Character& chi, int n, const Bounds& bounds) {
  const PermGroup& g = chi.group();
  const int k = g.k();
  checked_power(n, k, bounds.enumeration);
  MultiIndexRange range(n, k);
  std::map<std::uint64_t, SparseRow> pivots;
  range.for_each([&](const MultiIndex& x) {
    const SymTensor image = apply_idempotent(chi, SymTensor::basis(n, x));
    SparseRow row;
    for (const auto& [y, c] : image.coeffs()) row.emplace_back(range.index_of(y), c);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = axpy(row, -row.front().second, it->second);
    }
    if (!row.empty()) {
      const CycloNum inv = row.front().second.inverse();
      for (auto& [col, c] : row) c = inv * c;
      const std::uint64_t lead = row.front().first;
      pivots.emplace(lead, std::move(row));
    }
  });
  return Int(pivots.size());
}

} // namespace immvar
