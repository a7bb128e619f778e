#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieblocks/partition.hpp"

namespace lieblocks {

/// A permutation of {1..n} in one-line notation.
///
/// Composition is left-to-right: (g * h)(x) = h(g(x)), the natural convention
/// for right actions (x . gh = (x . g) . h).  Points are stored 0-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t n); // identity
    /// images0[i] = image of point i, both 0-based.
    static Permutation from_images0(std::vector<std::uint8_t> images0);

    std::size_t degree() const { return img_.size(); }
    /// 0-based application.
    std::uint8_t apply0(std::uint8_t x) const { return img_[x]; }
    /// 1-based application.
    unsigned apply(unsigned x) const { return img_[x - 1] + 1u; }

    bool is_identity() const;
    Permutation inverse() const;
    CycleType cycle_type() const;
    /// Extend to degree m, fixing the new top points.
    Permutation extended(std::size_t m) const;
    /// Embed into degree m acting on {offset+1, ..., offset+degree}, fixing
    /// everything else.
    Permutation shifted(std::size_t m, unsigned offset) const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

    /// One-line notation, e.g. "3 1 2".
    std::string str() const;
    /// Cycle notation, e.g. "(1 3 2)"; identity prints as "()".
    std::string cycle_str() const;
    static Permutation parse_one_line(const std::string& text);
    static Permutation parse_cycles(const std::string& text, std::size_t n);

    const std::vector<std::uint8_t>& images0() const { return img_; }

    struct Hash {
        std::size_t operator()(const Permutation& g) const {
            std::size_t h = 1469598103934665603ull;
            for (std::uint8_t v : g.img_) h = (h ^ v) * 1099511628211ull;
            return h;
        }
    };

private:
    std::vector<std::uint8_t> img_;
};

/// apply g, then h.
Permutation compose(const Permutation& g, const Permutation& h);

/// Transposition (a b) in degree n (1-based points).
Permutation transposition(unsigned a, unsigned b, std::size_t n);

/// Coxeter generator s_i = (i, i+1), 1 <= i <= n-1.
Permutation coxeter_generator(unsigned i, std::size_t n);

/// The k-cycle sending 1 -> k and j -> j-1 for 2 <= j <= k, fixing j > k.
Permutation descending_cycle(unsigned k, std::size_t n);

/// Rank of g in the factorial number system, 0 for the identity.
std::uint64_t lehmer_rank(const Permutation& g);
Permutation lehmer_unrank(std::uint64_t index, std::size_t n);

/// Left-to-right word in Coxeter generators with g = s_{w[0]} s_{w[1]} ...
/// (indices 1-based); length = inversion count of g.
std::vector<unsigned> coxeter_word(const Permutation& g);

} // namespace lieblocks
