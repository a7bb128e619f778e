#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace lieblocks {

/// An integer partition: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Parts may arrive unsorted or with zeros; they are normalized.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned size() const { return size_; }     // sum of parts
    std::size_t length() const { return parts_.size(); }
    bool is_empty() const { return parts_.empty(); }
    unsigned part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const;

    auto operator<=>(const Partition&) const = default;

    /// "3,2,1"; the empty partition prints as "".
    std::string str() const;
    static Partition parse(const std::string& text);

private:
    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

/// Cycle types label conjugacy classes of the symmetric group.
using CycleType = Partition;

/// All partitions of n in lexicographically increasing part-sequence order.
std::vector<Partition> partitions(unsigned n);

/// Number of partitions of n (independent Euler recurrence, used as a check).
std::uint64_t partition_count(unsigned n);

/// A removable rim hook: a connected border strip with no 2x2 square.
struct RimHook {
    std::vector<std::pair<unsigned, unsigned>> cells; // (row, col), 1-based
    unsigned leg = 0;                                 // rows spanned minus one
    unsigned length = 0;
    Partition remainder;                              // partition left after removal
};

/// Every removable rim hook of length r, topmost arm first.
std::vector<RimHook> removable_rim_hooks(const Partition& lambda, unsigned r);

/// Beads-on-runners encoding of a partition's beta-numbers.  Sliding every
/// bead as far up its runner as it goes removes all rim p-hooks at once.
struct AbacusConfig {
    std::set<unsigned> beads; // beta-numbers
    unsigned bead_count = 0;
    unsigned runners = 2;

    static AbacusConfig from_partition(const Partition& lambda, unsigned bead_count,
                                       unsigned runners);
    Partition to_partition() const;
    /// Pushes beads up their runners; returns the number of single-slot moves.
    unsigned slide_up();
};

struct PCoreResult {
    Partition core;
    unsigned weight = 0;
};

/// p-core and weight of lambda, computed on the abacus (order-independent).
PCoreResult p_core(const Partition& lambda, unsigned p);

/// p-core labelling the principal block of degree n: (n mod p), empty when p | n.
Partition principal_core(unsigned n, unsigned p);

/// True when no part repeats p or more times.
bool is_p_regular(const Partition& lambda, unsigned p);

} // namespace lieblocks
