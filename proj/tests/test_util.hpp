#pragma once

#include <random>

#include "lieblocks/gf_matrix.hpp"

namespace lieblocks::testutil {

inline GFMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint16_t p,
                              std::uint32_t seed,
                              GFMatrix::Storage storage = GFMatrix::Storage::Auto) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    GFMatrix m(rows, cols, p, storage);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<std::uint16_t>(dist(rng)));
    return m;
}

} // namespace lieblocks::testutil
