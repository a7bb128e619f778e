#pragma once

#include <cstdint>
#include <vector>

namespace lieblocks::reference {

/// Plain serial implementations over a naive int-vector representation.
///
/// This is the oracle the optimized kernels are tested against and the
/// baseline the benchmark compares them with.  It shares no code with the
/// GFMatrix path: textbook triple-loop product, textbook elimination, `%` for
/// every reduction, no packing, no threads.  Keep it boring.
struct SimpleMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint16_t p = 2;
    std::vector<std::uint16_t> a; // row-major

    std::uint16_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint16_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

SimpleMat make(std::size_t rows, std::size_t cols, std::uint16_t p);

SimpleMat mat_mul_serial(const SimpleMat& x, const SimpleMat& y);

struct SerialRref {
    SimpleMat r;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

SerialRref rref_serial(SimpleMat m);

} // namespace lieblocks::reference
