#pragma once

#include "immvar/matrix.hpp"
#include "immvar/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace immvar {

// Deterministic generator for randomized checks. mt19937_64 has a fully
// specified output sequence, so seeded runs agree across platforms; the
// standard library distributions do not carry that guarantee and are
// avoided here.
class SmallRng {
public:
    explicit SmallRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t below(std::uint64_t n);

    // Uniform-ish over {-3,-2,-1,1,2,3}.
    Rat small_nonzero();

    Matrix<Rat> rat_matrix(int rows, int cols);

    // k factor vectors of length n with all entries nonzero.
    std::vector<std::vector<Rat>> factors(int k, int n);

private:
    std::mt19937_64 eng_;
};

} // namespace immvar
