#pragma once

#include <cstdint>

#include "lieblocks/checked_arith.hpp"
#include "lieblocks/gf_scalar.hpp"
#include "lieblocks/partition.hpp"

namespace lieblocks {

/// Ordinary irreducible character value chi^lambda(rho) of the symmetric
/// group, by the Murnaghan-Nakayama rim-hook recursion.  Values are exact and
/// memoized in a process-wide write-once table.
std::int64_t mn_character(const Partition& lambda, const CycleType& rho);

/// chi^lambda at the identity; asserts agreement with the hook-length formula.
std::int64_t dim_irreducible(const Partition& lambda);

/// n! / (product of hook lengths).
std::int64_t hook_length_dim(const Partition& lambda);

/// Number of standard Young tableaux counted directly (small shapes only).
std::int64_t standard_tableau_count(const Partition& lambda);

/// Size of the conjugacy class with the given cycle type.
std::int64_t conjugacy_class_size(const CycleType& type);

/// |C| * chi^lambda(C) / chi^lambda(1) as an exact integer.  The quotient is
/// computed over the rationals and integrality is asserted, not assumed.
std::int64_t central_character_int(const Partition& lambda, const CycleType& c);

/// The same value reduced into GF(p); depends only on the p-core of lambda.
GFScalar central_character(const Partition& lambda, const CycleType& c, std::uint16_t p);

} // namespace lieblocks
