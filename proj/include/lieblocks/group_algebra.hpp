#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lieblocks/permutation.hpp"

namespace lieblocks {

/// An element of the group algebra of the symmetric group of degree n, with
/// coefficients either exact integers (modulus 0) or in GF(p).
///
/// Storage is sparse: a map from Lehmer rank to coefficient, zero
/// coefficients never stored.  Central elements with full support are better
/// handled as class functions (see blocks.hpp); this type is for the sparse
/// workloads: the omega element, class sums of small classes, test fixtures.
class GroupAlgebraElement {
public:
    GroupAlgebraElement(unsigned n, std::uint16_t modulus);

    static GroupAlgebraElement zero(unsigned n, std::uint16_t modulus);
    static GroupAlgebraElement identity(unsigned n, std::uint16_t modulus);
    static GroupAlgebraElement basis(const Permutation& g, std::uint16_t modulus);

    unsigned degree() const { return n_; }
    std::uint16_t modulus() const { return p_; }
    std::size_t support_size() const { return coeffs_.size(); }
    const std::map<std::uint64_t, std::int64_t>& terms() const { return coeffs_; }

    std::int64_t coeff(const Permutation& g) const;
    std::int64_t coeff_by_rank(std::uint64_t rank) const;
    void add_term(const Permutation& g, std::int64_t c);
    void add_term_by_rank(std::uint64_t rank, std::int64_t c);

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    GroupAlgebraElement scaled(std::int64_t c) const;
    bool operator==(const GroupAlgebraElement& o) const;

    /// Dense coefficient view of length n! (desk scale only).
    std::vector<std::int64_t> dense() const;

    /// Image under reduction mod p (modulus must currently be 0).
    GroupAlgebraElement reduced_mod(std::uint16_t p) const;

    std::string str() const;

private:
    std::int64_t normalize(std::int64_t c) const;

    unsigned n_;
    std::uint16_t p_; // 0 = exact integers
    std::map<std::uint64_t, std::int64_t> coeffs_;
};

/// Convolution product: (a*b)(g) = sum over x y = g of a(x) b(y).
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// The element (1 - c_n)(1 - c_{n-1}) ... (1 - c_2) built from descending
/// cycles; generates the Lie module as a right ideal.  Over the integers its
/// support has exactly 2^(n-1) elements with coefficients +-1, and it
/// satisfies omega^2 = n * omega.
GroupAlgebraElement omega_element(unsigned n, std::uint16_t modulus);

/// All permutations of cycle type c, ordered by Lehmer rank.
std::vector<Permutation> class_elements(const CycleType& c);

/// Sum of the class elements; central in the group algebra.
GroupAlgebraElement class_sum(const CycleType& c, std::uint16_t modulus);

} // namespace lieblocks
