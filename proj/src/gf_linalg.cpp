#include "lieblocks/gf_linalg.hpp"

#include <cstring>

#include "lieblocks/errors.hpp"

namespace lieblocks {

namespace {

// ---------------------------------------------------------------------------
// Low-level row kernels.  These loops carry nearly all of the pipeline's
// runtime (n = 8 means eliminations on 5040 x 40320 operands), so they are
// written to auto-vectorize: straight-line index arithmetic, no branches in
// the inner loop, Barrett reduction instead of integer division.
// ---------------------------------------------------------------------------

void xor_row(std::uint64_t* dst, const std::uint64_t* src, std::size_t nw) {
    for (std::size_t w = 0; w < nw; ++w) dst[w] ^= src[w];
}

// dst = (dst + f * src) mod p, entries in [0, p), f in [1, p).
void axpy_row(std::uint8_t* dst, const std::uint8_t* src, std::size_t n, std::uint32_t f,
              BarrettU16 red) {
    const std::uint32_t p = red.p, magic = red.magic;
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t t = dst[j] + f * src[j];
        std::uint32_t q = (t * magic) >> 16;
        std::uint32_t r = t - q * p;
        r = r >= p ? r - p : r;
        dst[j] = static_cast<std::uint8_t>(r);
    }
}

void scale_row(std::uint8_t* row, std::size_t n, std::uint32_t f, BarrettU16 red) {
    const std::uint32_t p = red.p, magic = red.magic;
    for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t t = f * row[j];
        std::uint32_t q = (t * magic) >> 16;
        std::uint32_t r = t - q * p;
        r = r >= p ? r - p : r;
        row[j] = static_cast<std::uint8_t>(r);
    }
}

// ---------------------------------------------------------------------------
// GF(2) matrix product.  Above the size threshold the "method of four
// Russians" is used: the k-range is cut into 8-bit groups, each group gets a
// 256-entry table of row combinations (built in Gray-code order, one XOR per
// entry), and every output row then costs one table lookup per group instead
// of one row XOR per set bit.
// ---------------------------------------------------------------------------

GFMatrix mul_packed_simple(const GFMatrix& a, const GFMatrix& b) {
    GFMatrix c(a.rows(), b.cols(), 2, GFMatrix::Storage::Packed);
    const std::size_t wb = b.words_per_row();
#pragma omp parallel for schedule(static) if (a.rows() > 64)
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::uint64_t* crow = c.word_row(i);
        const std::uint64_t* arow = a.word_row(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits) {
                unsigned bit = static_cast<unsigned>(__builtin_ctzll(bits));
                bits &= bits - 1;
                xor_row(crow, b.word_row(w * 64 + bit), wb);
            }
        }
    }
    return c;
}

GFMatrix mul_packed_m4r(const GFMatrix& a, const GFMatrix& b) {
    GFMatrix c(a.rows(), b.cols(), 2, GFMatrix::Storage::Packed);
    const std::size_t wb = b.words_per_row();
    const std::size_t groups = (a.cols() + 7) / 8;
    std::vector<std::uint64_t> table(256 * wb);

    for (std::size_t g = 0; g < groups; ++g) {
        // table[m] = XOR of B rows selected by the bits of m
        std::memset(table.data(), 0, wb * 8);
        for (std::uint32_t m = 1; m < 256; ++m) {
            unsigned low = static_cast<unsigned>(__builtin_ctz(m));
            const std::uint64_t* prev = table.data() + (m & (m - 1)) * wb;
            std::uint64_t* cur = table.data() + m * wb;
            std::size_t k = g * 8 + low;
            if (k < b.rows()) {
                const std::uint64_t* brow = b.word_row(k);
                for (std::size_t w = 0; w < wb; ++w) cur[w] = prev[w] ^ brow[w];
            } else {
                std::memcpy(cur, prev, wb * 8);
            }
        }
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const std::uint8_t* abytes = reinterpret_cast<const std::uint8_t*>(a.word_row(i));
            std::uint8_t idx = abytes[g];
            if (idx) xor_row(c.word_row(i), table.data() + std::size_t(idx) * wb, wb);
        }
    }
    return c;
}

// Byte-entry product with 32-bit accumulators.  With p <= 251 and inner
// dimension <= 68000 the accumulator cannot overflow, so reduction happens
// once per output entry.  A-rows are processed in stripes so each pass over B
// feeds several accumulator rows.
constexpr std::size_t kMicroRows = 4;

GFMatrix mul_bytes(const GFMatrix& a, const GFMatrix& b) {
    if (a.cols() > 68000) throw capacity_error("byte matmul inner dimension too large");
    GFMatrix c(a.rows(), b.cols(), a.modulus(), GFMatrix::Storage::Bytes);
    const std::size_t n = b.cols(), kk = a.cols();
    const std::uint16_t p = a.modulus();

#pragma omp parallel if (a.rows() * n * kk > (std::size_t(1) << 16))
    {
        std::vector<std::uint32_t> acc(kMicroRows * n);
#pragma omp for schedule(static)
        for (std::size_t i0 = 0; i0 < a.rows(); i0 += kMicroRows) {
            const std::size_t mr = std::min(kMicroRows, a.rows() - i0);
            std::memset(acc.data(), 0, mr * n * 4);
            for (std::size_t k = 0; k < kk; ++k) {
                const std::uint8_t* brow = b.byte_row(k);
                std::uint32_t f[kMicroRows] = {0, 0, 0, 0};
                std::uint32_t any = 0;
                for (std::size_t u = 0; u < mr; ++u) any |= f[u] = a.byte_row(i0 + u)[k];
                if (!any) continue;
                for (std::size_t u = 0; u < mr; ++u) {
                    if (!f[u]) continue;
                    std::uint32_t* arow = acc.data() + u * n;
                    const std::uint32_t fu = f[u];
                    for (std::size_t j = 0; j < n; ++j) arow[j] += fu * brow[j];
                }
            }
            for (std::size_t u = 0; u < mr; ++u) {
                std::uint8_t* crow = c.byte_row(i0 + u);
                const std::uint32_t* arow = acc.data() + u * n;
                for (std::size_t j = 0; j < n; ++j)
                    crow[j] = static_cast<std::uint8_t>(arow[j] % p);
            }
        }
    }
    return c;
}

void require_same_field(const GFMatrix& a, const GFMatrix& b, const char* op) {
    if (a.modulus() != b.modulus())
        throw domain_error(std::string(op) + ": modulus mismatch");
}

} // namespace

GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b) {
    require_same_field(a, b, "mat_mul");
    if (a.cols() != b.rows())
        throw domain_error("mat_mul: inner dimensions " + std::to_string(a.cols()) + " vs " +
                           std::to_string(b.rows()));
    if (a.packed() != b.packed())
        return mat_mul(a, b.repacked(a.packed() ? GFMatrix::Storage::Packed
                                                : GFMatrix::Storage::Bytes));
    if (a.packed())
        return (a.cols() >= 256 && a.rows() >= 64) ? mul_packed_m4r(a, b)
                                                   : mul_packed_simple(a, b);
    return mul_bytes(a, b);
}

GFMatrix mat_add(const GFMatrix& a, const GFMatrix& b) {
    GFMatrix c = a;
    mat_add_inplace(c, b);
    return c;
}

void mat_add_inplace(GFMatrix& acc, const GFMatrix& m) {
    mat_add_scaled_inplace(acc, m, 1);
}

void mat_add_scaled_inplace(GFMatrix& acc, const GFMatrix& m, std::uint16_t c) {
    require_same_field(acc, m, "mat_add");
    if (acc.rows() != m.rows() || acc.cols() != m.cols())
        throw domain_error("mat_add: shape mismatch");
    c = static_cast<std::uint16_t>(c % acc.modulus());
    if (c == 0) return;
    if (acc.packed() != m.packed()) {
        mat_add_scaled_inplace(acc,
                               m.repacked(acc.packed() ? GFMatrix::Storage::Packed
                                                       : GFMatrix::Storage::Bytes),
                               c);
        return;
    }
    if (acc.packed()) {
#pragma omp parallel for schedule(static) if (acc.rows() > 256)
        for (std::size_t i = 0; i < acc.rows(); ++i)
            xor_row(acc.word_row(i), m.word_row(i), acc.words_per_row());
    } else {
        BarrettU16 red(acc.modulus());
#pragma omp parallel for schedule(static) if (acc.rows() > 256)
        for (std::size_t i = 0; i < acc.rows(); ++i)
            axpy_row(acc.byte_row(i), m.byte_row(i), acc.cols(), c, red);
    }
}

GFMatrix add_scaled_identity(const GFMatrix& m, std::uint16_t c) {
    if (m.rows() != m.cols()) throw domain_error("add_scaled_identity: matrix not square");
    GFMatrix r = m;
    const std::uint16_t p = m.modulus();
    for (std::size_t i = 0; i < m.rows(); ++i)
        r.set(i, i, static_cast<std::uint16_t>((r.get(i, i) + c) % p));
    return r;
}

RrefResult rref(GFMatrix a) {
    const std::size_t nr = a.rows(), nc = a.cols();
    const std::uint16_t p = a.modulus();
    BarrettU16 red(p);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;

    for (std::size_t col = 0; col < nc && r < nr; ++col) {
        std::size_t pr = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a.get(i, col) != 0) { pr = i; break; }
        if (pr == nr) continue;
        a.swap_rows(r, pr);

        if (!a.packed()) {
            std::uint16_t inv = gf_inverse(a.get(r, col), p);
            if (inv != 1) scale_row(a.byte_row(r), nc, inv, red);
        }

        if (a.packed()) {
            const std::uint64_t* prow = a.word_row(r);
            const std::size_t wpr = a.words_per_row();
#pragma omp parallel for schedule(static) if (nr * wpr > (std::size_t(1) << 14))
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == r || a.get(i, col) == 0) continue;
                xor_row(a.word_row(i), prow, wpr);
            }
        } else {
            const std::uint8_t* prow = a.byte_row(r);
#pragma omp parallel for schedule(static) if (nr * nc > (std::size_t(1) << 14))
            for (std::size_t i = 0; i < nr; ++i) {
                if (i == r) continue;
                std::uint16_t f = a.get(i, col);
                if (f == 0) continue;
                axpy_row(a.byte_row(i), prow, nc, p - f, red);
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return RrefResult{std::move(a), std::move(pivots), r};
}

std::size_t rank_of(GFMatrix a) { return rref(std::move(a)).rank; }

GFMatrix row_basis(GFMatrix a) {
    RrefResult rr = rref(std::move(a));
    return rr.r.row_slice(0, rr.rank);
}

std::optional<GFMatrix> solve_in_rowspace(const RrefResult& rr, const GFMatrix& v) {
    if (v.rows() != 1 || v.cols() != rr.r.cols())
        throw domain_error("solve_in_rowspace: vector length mismatch");
    if (v.modulus() != rr.r.modulus())
        throw domain_error("solve_in_rowspace: modulus mismatch");
    GFMatrix c(1, rr.rank, rr.r.modulus(),
               rr.r.packed() ? GFMatrix::Storage::Packed : GFMatrix::Storage::Bytes);
    for (std::size_t k = 0; k < rr.rank; ++k) c.set(0, k, v.get(0, rr.pivots[k]));
    GFMatrix expanded = mat_mul(c, rr.r.row_slice(0, rr.rank));
    if (expanded != v.repacked(rr.r.packed() ? GFMatrix::Storage::Packed
                                             : GFMatrix::Storage::Bytes))
        return std::nullopt;
    return c;
}

GFMatrix kernel(const GFMatrix& a) {
    RrefResult rr = rref(a);
    const std::size_t nc = a.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    const std::size_t nullity = nc - rr.rank;
    GFMatrix k(nullity, nc, a.modulus(),
               a.packed() ? GFMatrix::Storage::Packed : GFMatrix::Storage::Bytes);
    const std::uint16_t p = a.modulus();
    std::size_t out = 0;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        k.set(out, f, 1);
        for (std::size_t j = 0; j < rr.rank; ++j) {
            std::uint16_t v = rr.r.get(j, f);
            if (v) k.set(out, rr.pivots[j], static_cast<std::uint16_t>(p - v));
        }
        ++out;
    }
    return k;
}

GFMatrix stabilized_kernel(const GFMatrix& a) {
    if (a.rows() != a.cols()) throw domain_error("stabilized_kernel: matrix not square");
    GFMatrix cur = a;
    GFMatrix k = kernel(cur);
    while (k.rows() < a.rows()) {
        GFMatrix next = mat_mul(cur, cur);
        GFMatrix k2 = kernel(next);
        if (k2.rows() == k.rows()) break; // chain stable: ker cur == ker cur^2
        cur = std::move(next);
        k = std::move(k2);
    }
    return k;
}

GFMatrix intersect_rowspaces(const GFMatrix& u, const GFMatrix& v) {
    require_same_field(u, v, "intersect_rowspaces");
    if (u.cols() != v.cols()) throw domain_error("intersect_rowspaces: column count mismatch");
    GFMatrix stacked = u.vstack(v);
    // left kernel rows (a | b) satisfy a*u + b*v = 0, so a*u runs over the
    // intersection as (a | b) runs over the kernel
    GFMatrix lk = kernel(stacked.transposed());
    if (lk.rows() == 0) return GFMatrix(0, u.cols(), u.modulus());
    GFMatrix coeff_u(lk.rows(), u.rows(), u.modulus(),
                     u.packed() ? GFMatrix::Storage::Packed : GFMatrix::Storage::Bytes);
    for (std::size_t i = 0; i < lk.rows(); ++i)
        for (std::size_t j = 0; j < u.rows(); ++j) coeff_u.set(i, j, lk.get(i, j));
    return row_basis(mat_mul(coeff_u, u));
}

bool same_rowspace(const GFMatrix& u, const GFMatrix& v) {
    return row_basis(u) == row_basis(v);
}

} // namespace lieblocks
