#pragma once

#include "immvar/bounds.hpp"
#include "immvar/character.hpp"
#include "immvar/matrix.hpp"
#include "immvar/mvpoly.hpp"
#include "immvar/perm.hpp"

#include <map>

namespace immvar {

// (M^{otimes k})_{u,v} = product_i M(u_i, v_i).
template <typename R>
R tensor_entry(const Matrix<R>& m, const MultiIndex& u, const MultiIndex& v) {
  if (u.k() != v.k()) throw InvalidArgumentError("tensor_entry: index length mismatch");
  if (u.k() == 0) throw InvalidArgumentError("tensor_entry: empty index");
  R out = m.at(u[0], v[0]);
  for (int i = 1; i < u.k(); ++i) out = out * m.at(u[i], v[i]);
  return out;
}

// The chi_{x,y}-immanant sum_{g in G} chi(g) (M^{otimes k})_{g(x),y}, with x
// over the rows of M and y over its columns. Rational and cyclotomic entries
// promote to CycloNum; polynomial entries stay polynomials.
CycloNum immanant(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                  const Matrix<Rat>& m);
CycloNum immanant(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                  const Matrix<CycloNum>& m);
MVPoly immanant(const Character& chi, const MultiIndex& x, const MultiIndex& y,
                const Matrix<MVPoly>& m);

// Verifies (M^{otimes k} P_chi)_{x,y} = (chi(e)/|G|) chi_{x,y}(M) exactly,
// with M an m x n rational matrix, x in [m]^k, y in [n]^k.
bool check_immanant_identity(const Character& chi, const Matrix<Rat>& m,
                             const MultiIndex& x, const MultiIndex& y);

// The parametric system {x_z = chi_{z,(1..k)}(A) : z in [n]^k} over the
// generic n x k matrix A. The idempotent's global scalar chi(e)/|G| is
// omitted: the equations describe a projective image.
std::map<MultiIndex, MVPoly> parametric_equations(const Character& chi, int n,
                                                  const Bounds& bounds = {});

} // namespace immvar
