#include "immvar/oracles.hpp"

#include "immvar/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace immvar {

namespace {

Rat det_rec(const Matrix<Rat>& m, std::vector<int>& cols, int row) {
    if (cols.empty())
        return Rat(1);
    Rat acc(0);
    for (std::size_t pick = 0; pick < cols.size(); ++pick) {
        const Rat& entry = m.at(row, cols[pick]);
        if (entry == 0)
            continue;
        int col = cols[pick];
        cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(pick));
        Rat sub = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(pick), col);
        if (pick % 2 == 0)
            acc += entry * sub;
        else
            acc -= entry * sub;
    }
    return acc;
}

} // namespace

Rat determinant_cofactor(const Matrix<Rat>& m) {
    if (m.rows() != m.cols())
        throw InvalidArgumentError("determinant_cofactor: matrix is not square");
    std::vector<int> cols;
    for (int j = 1; j <= m.cols(); ++j)
        cols.push_back(j);
    return det_rec(m, cols, 1);
}

Rat permanent_ryser(const Matrix<Rat>& m) {
    if (m.rows() != m.cols())
        throw InvalidArgumentError("permanent_ryser: matrix is not square");
    int n = m.rows();
    if (n == 0)
        return Rat(1);
    if (n > 20)
        throw InvalidArgumentError("permanent_ryser: matrix too large");
    Rat total(0);
    std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        Rat prod(1);
        for (int i = 1; i <= n && prod != 0; ++i) {
            Rat rowsum(0);
            for (int j = 1; j <= n; ++j)
                if (mask & (1u << (j - 1)))
                    rowsum += m.at(i, j);
            prod *= rowsum;
        }
        int popcount = 0;
        for (std::uint32_t b = mask; b; b >>= 1)
            popcount += static_cast<int>(b & 1u);
        if ((n - popcount) % 2 == 0)
            total += prod;
        else
            total -= prod;
    }
    return total;
}

bool matroid_basis_exchange(const std::vector<std::vector<int>>& bases) {
    if (bases.empty())
        return false;
    std::vector<std::vector<int>> fam = bases;
    for (auto& b : fam) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    std::sort(fam.begin(), fam.end());
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    std::size_t size = fam.front().size();
    for (const auto& b : fam)
        if (b.size() != size)
            return false;
    auto is_basis = [&](const std::vector<int>& b) {
        return std::binary_search(fam.begin(), fam.end(), b);
    };
    for (const auto& a : fam) {
        for (const auto& b : fam) {
            for (int x : a) {
                if (std::binary_search(b.begin(), b.end(), x))
                    continue;
                bool exchanged = false;
                for (int y : b) {
                    if (std::binary_search(a.begin(), a.end(), y))
                        continue;
                    std::vector<int> swapped;
                    swapped.reserve(size);
                    for (int z : a)
                        if (z != x)
                            swapped.push_back(z);
                    swapped.push_back(y);
                    std::sort(swapped.begin(), swapped.end());
                    if (is_basis(swapped)) {
                        exchanged = true;
                        break;
                    }
                }
                if (!exchanged)
                    return false;
            }
        }
    }
    return true;
}

} // namespace immvar
