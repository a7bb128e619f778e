#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieblocks/partition.hpp"

namespace lieblocks {

enum class SplitMethod { Eigenspace, Osima, Both };

std::string split_method_name(SplitMethod m);
SplitMethod split_method_from_name(const std::string& name);

/// One row of the verification table: a block of the group algebra together
/// with the data of the corresponding component of the Lie module.
struct BlockRow {
    Partition core;
    unsigned weight = 0;
    std::vector<Partition> members;
    bool is_principal = false;
    std::size_t component_dim = 0;
    bool projective = false;
    std::size_t free_rank = 0;

    bool operator==(const BlockRow&) const = default;
};

struct VerificationReport {
    std::uint16_t p = 2;
    unsigned n = 2;
    std::size_t dim_lie = 1;
    bool omega_square_ok = false;
    bool restriction_free_ok = false;
    std::vector<BlockRow> blocks;
    bool theorem_holds = false;
    double elapsed = 0.0;
    std::string method = "eigenspace";

    bool operator==(const VerificationReport&) const = default;
};

std::string to_json_string(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

/// Human-readable aligned table.
std::string format_report(const VerificationReport& report);

} // namespace lieblocks
