#pragma once

#include <cstdint>
#include <vector>

#include "lieblocks/permutation.hpp"

namespace lieblocks {

/// Exponent of p in n! (Legendre: sum of floor(n / p^i)).
unsigned legendre_p_part(unsigned n, unsigned p);

/// One copy of the iterated wreath group W_level acting on the interval
/// [start, start + p^level), 1-based.  W_0 is trivial, W_i = W_{i-1} wr C_p.
struct WreathTower {
    unsigned start = 1;
    unsigned level = 0;
};

/// Generators of a Sylow p-subgroup of the symmetric group of degree n:
/// one tower per base-p digit, placed greedily from the largest level down.
struct SubgroupGens {
    unsigned n = 0;
    unsigned p = 2;
    std::vector<Permutation> generators;
    std::vector<WreathTower> towers;
    std::uint64_t expected_order = 1;
};

SubgroupGens sylow_generators(unsigned n, unsigned p);

/// Breadth-first closure with its generating tree: element i equals
/// elements[parent[i]] * gens_used[gen_index[i]] (element 0 is the identity).
struct SubgroupClosure {
    std::vector<Permutation> elements;
    std::vector<std::size_t> parent;
    std::vector<std::size_t> gen_index;
    std::vector<Permutation> gens_used;
};

/// Enumerates the subgroup; throws cap_exceeded if it outgrows `cap`, which
/// signals a construction bug for the groups built here.
SubgroupClosure closure(const SubgroupGens& gens, std::uint64_t cap);

/// The cyclic block-shift of the wreath construction: x -> x + step within
/// [start, start + block), identity elsewhere.
Permutation block_shift(unsigned start, unsigned block, unsigned step, std::size_t n);

} // namespace lieblocks
