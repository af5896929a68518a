#include "immvar/rng.hpp"

#include "immvar/errors.hpp"

namespace immvar {

std::uint64_t SmallRng::below(std::uint64_t n) {
    if (n == 0)
        throw InvalidArgumentError("SmallRng::below: empty range");
    return eng_() % n;
}

Rat SmallRng::small_nonzero() {
    static const int table[6] = {-3, -2, -1, 1, 2, 3};
    return Rat(table[below(6)]);
}

Matrix<Rat> SmallRng::rat_matrix(int rows, int cols) {
    Matrix<Rat> m(rows, cols);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            m.at(i, j) = small_nonzero();
    return m;
}

std::vector<std::vector<Rat>> SmallRng::factors(int k, int n) {
    std::vector<std::vector<Rat>> out(static_cast<std::size_t>(k));
    for (auto& f : out) {
        f.resize(static_cast<std::size_t>(n));
        for (auto& entry : f)
            entry = small_nonzero();
    }
    return out;
}

} // namespace immvar
