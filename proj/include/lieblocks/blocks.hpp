#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieblocks/gf_scalar.hpp"
#include "lieblocks/module_rep.hpp"
#include "lieblocks/partition.hpp"

namespace lieblocks {

/// A block of the modular group algebra, labelled by its p-core.
struct BlockLabel {
    Partition core;
    unsigned weight = 0;
    std::vector<Partition> members; // partitions of n with this p-core
    bool is_principal = false;
};

/// Blocks of degree n in characteristic p, one per distinct p-core, sorted by
/// core.  Exactly one label is principal.
std::vector<BlockLabel> enumerate_blocks(unsigned n, std::uint16_t p);

/// A primitive central idempotent as a class function: characteristic-zero
/// character sums, checked to be p-integral, reduced into GF(p).
struct CentralIdempotent {
    Partition core;
    std::map<CycleType, GFScalar> coeff_by_class;
};

/// e_B with coefficient (1/n!) * sum over lambda in B of chi(1) chi(C) on the
/// class C.  Throws p_integrality_violation if any coefficient fails to be
/// p-integral (it never does; that is a theorem the computation witnesses).
CentralIdempotent osima_idempotent(const BlockLabel& label, unsigned n, std::uint16_t p);

struct IdempotentCheck {
    bool ok = true;
    std::string detail; // which check failed, when not ok
};

/// (a) theta_lambda(e_B) = [core(lambda) = core(B)] for every lambda; and
/// (b) for n <= 5, the full convolution relations e_B e_B' = delta e_B in the
/// dense group algebra.
IdempotentCheck verify_idempotent_system(const std::vector<CentralIdempotent>& idems, unsigned n,
                                         std::uint16_t p);

/// Central-character fingerprints: enough small classes that distinct cores
/// get distinct value vectors mod p.
struct BlockSignature {
    unsigned n = 0;
    std::uint16_t p = 2;
    std::vector<CycleType> classes;
    std::map<Partition, std::vector<std::uint16_t>> values_by_core;
};

/// Greedy selection in increasing class size (ties by cycle type); throws
/// separation_failure if the classes run out first, which contradicts the
/// block parametrisation.
BlockSignature separating_signature(unsigned n, std::uint16_t p);

/// One block component of a module.
struct BlockComponent {
    Partition core;
    GFMatrix basis;  // echelon basis inside the parent module
    ModuleRep module; // induced action on the component
};

/// Splits m into block components: for each signature class C the component
/// of core kappa lies in the stabilized kernel of (A_C - theta_kappa(C) I);
/// intersecting over the signature separates the blocks.  Components are
/// returned for every core (possibly zero-dimensional), sorted by core, and
/// their dimensions must add up to dim m.
std::vector<BlockComponent> block_split(const ModuleRep& m, const BlockSignature& sig);

/// Cross-check split: the component for B is the row space of the idempotent
/// operator sum over classes of e_B(C) A_C.  Guarded to n <= 6.
std::vector<BlockComponent> block_split_osima(const ModuleRep& m,
                                              const std::vector<CentralIdempotent>& idems);

/// Throws method_disagreement unless both splittings produced identical
/// subspaces (equal echelon bases) per core.
void require_same_components(const std::vector<BlockComponent>& a,
                             const std::vector<BlockComponent>& b);

} // namespace lieblocks
