#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lieblocks/gf_matrix.hpp"

namespace lieblocks {

/// Reduced row-echelon form together with its pivot columns.
struct RrefResult {
    GFMatrix r;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Exact product over GF(p).  Pre: a.cols() == b.rows(), same modulus.
GFMatrix mat_mul(const GFMatrix& a, const GFMatrix& b);

/// Entrywise sum / in-place accumulation.
GFMatrix mat_add(const GFMatrix& a, const GFMatrix& b);
void mat_add_inplace(GFMatrix& acc, const GFMatrix& m);
/// acc += c * m.
void mat_add_scaled_inplace(GFMatrix& acc, const GFMatrix& m, std::uint16_t c);
/// m + c * I (m square).
GFMatrix add_scaled_identity(const GFMatrix& m, std::uint16_t c);

/// Reduced row-echelon form; pivot choice is the leftmost nonzero column with
/// the topmost candidate row, so the output is deterministic.
RrefResult rref(GFMatrix a);

std::size_t rank_of(GFMatrix a);

/// Canonical basis (RREF rows, zero rows dropped) of the row space.
GFMatrix row_basis(GFMatrix a);

/// Coordinates c (1 x rank) with c * R = v for a 1 x cols row vector v, or
/// nullopt when v is outside the row space.  R must come from rref().
std::optional<GFMatrix> solve_in_rowspace(const RrefResult& rr, const GFMatrix& v);

/// Basis of the right null space {x : a x^T = 0}, one basis vector per row.
GFMatrix kernel(const GFMatrix& a);

/// Basis of ker(a^d), d = a.rows(): the stable member of the chain
/// ker a <= ker a^2 <= ...  Kernel growth is iterated (with exponent
/// doubling) until a fixed point instead of forming a literal d-th power.
GFMatrix stabilized_kernel(const GFMatrix& a);

/// Basis of row(u) ∩ row(v).
GFMatrix intersect_rowspaces(const GFMatrix& u, const GFMatrix& v);

/// True when the two matrices have the same row space.
bool same_rowspace(const GFMatrix& u, const GFMatrix& v);

} // namespace lieblocks
