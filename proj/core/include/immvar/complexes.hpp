#pragma once

#include "immvar/bounds.hpp"
#include "immvar/bposet.hpp"
#include "immvar/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace immvar {

// A finite simplicial complex presented by its facets. Construction sorts
// each facet, drops faces contained in other facets, and orders the facet
// list, so structurally equal inputs canonicalize identically.
class SimplicialComplex {
public:
  static SimplicialComplex from_facets(std::vector<std::vector<int>> facets);

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  std::vector<int> vertices() const;
  // Largest facet size minus one; -1 when there are no facets.
  int dimension() const;

  // f[i] = number of i-dimensional faces.
  std::vector<Int> f_vector(const Bounds& bounds = {}) const;
  // Reduced Euler characteristic: sum (-1)^i f_i - 1; the empty complex
  // gives -1, matching mu on cover intervals via the order-complex bridge.
  Int reduced_euler(const Bounds& bounds = {}) const;

private:
  std::vector<std::vector<int>> facets_;
};

// Facets are the maximal chains; vertices are poset element indices.
SimplicialComplex order_complex(const BPoset& p, const Bounds& bounds = {});
SimplicialComplex order_complex(const BPoset& p, const std::vector<std::size_t>& subset,
                                const Bounds& bounds = {});

enum class ShellVerdict { Yes, No, Unknown };

struct ShellResult {
  ShellVerdict verdict = ShellVerdict::Unknown;
  std::vector<std::size_t> order; // a shelling order of facet indices when Yes
  std::uint64_t steps = 0;        // extension checks performed
};

// Backtracking search for a shelling order under the nonpure condition: each
// facet added must meet the union of its predecessors in a pure subcomplex of
// codimension one inside itself. Complexes within the facet cap are searched
// exhaustively (Yes/No); larger ones run under the step budget and may come
// back Unknown.
ShellResult shellable(const SimplicialComplex& c, const Bounds& bounds = {});

std::string to_string(ShellVerdict v);

} // namespace immvar
