#pragma once

#include <optional>
#include <string>

#include "lieblocks/blocks.hpp"
#include "lieblocks/module_rep.hpp"
#include "lieblocks/report.hpp"

namespace lieblocks {

struct VerifyOptions {
    std::uint16_t p = 2;
    unsigned n = 2;
    SplitMethod method = SplitMethod::Eigenspace;
    std::optional<std::string> cache_dir;
};

/// End-to-end check for one (p, n): build the Lie module, run the identity
/// and freeness sanity checks, split into block components and apply the
/// norm-rank projectivity test to each.  The theorem verdict is that every
/// non-principal component is projective.
VerificationReport run_verification(const VerifyOptions& options);

/// Lie module with optional SNMOD1 disk cache keyed by (n, p).
ModuleRep lie_module_cached(unsigned n, std::uint16_t p,
                            const std::optional<std::string>& cache_dir);

/// omega^2 = n * omega, checked over the integers and over GF(p).
bool omega_square_identity_holds(unsigned n, std::uint16_t p);

/// Census table for the blocks subcommand.
std::string format_block_table(unsigned n, std::uint16_t p);

} // namespace lieblocks
