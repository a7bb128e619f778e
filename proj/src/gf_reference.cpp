#include "lieblocks/gf_reference.hpp"

#include "lieblocks/errors.hpp"

namespace lieblocks::reference {

SimpleMat make(std::size_t rows, std::size_t cols, std::uint16_t p) {
    SimpleMat m;
    m.rows = rows;
    m.cols = cols;
    m.p = p;
    m.a.assign(rows * cols, 0);
    return m;
}

SimpleMat mat_mul_serial(const SimpleMat& x, const SimpleMat& y) {
    if (x.cols != y.rows || x.p != y.p) throw domain_error("mat_mul_serial: shape mismatch");
    SimpleMat c = make(x.rows, y.cols, x.p);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < x.cols; ++k)
                s += std::uint64_t(x.at(i, k)) * y.at(k, j) % x.p;
            c.at(i, j) = static_cast<std::uint16_t>(s % x.p);
        }
    return c;
}

SerialRref rref_serial(SimpleMat m) {
    SerialRref out;
    const std::uint16_t p = m.p;
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
        std::size_t pr = m.rows;
        for (std::size_t i = r; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pr = i; break; }
        if (pr == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
        // normalize: find inverse by scanning (p is tiny here)
        std::uint16_t v = m.at(r, col), inv = 1;
        for (std::uint16_t t = 1; t < p; ++t)
            if (t * v % p == 1) { inv = t; break; }
        for (std::size_t j = 0; j < m.cols; ++j)
            m.at(r, j) = static_cast<std::uint16_t>(m.at(r, j) * inv % p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, col) == 0) continue;
            std::uint16_t f = m.at(i, col);
            for (std::size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = static_cast<std::uint16_t>((m.at(i, j) + (p - f) * m.at(r, j)) % p);
        }
        out.pivots.push_back(col);
        ++r;
    }
    out.rank = r;
    out.r = std::move(m);
    return out;
}

} // namespace lieblocks::reference
