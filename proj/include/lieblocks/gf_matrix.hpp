#pragma once

#include <cstdint>
#include <cstring>
#include <vector>

#include "lieblocks/gf_scalar.hpp"

namespace lieblocks {

/// Dense matrix over GF(p).
///
/// Two storage layouts behind one interface: GF(2) matrices pack 64 entries
/// per machine word (row-major words, LSB-first within a word); every other
/// prime stores one byte per entry, which limits matrix moduli to p <= 251.
/// The choice can be overridden so the generic byte path remains runnable at
/// p = 2 as a reference for the packed one.
///
/// Values are immutable in spirit: the linear-algebra layer never mutates its
/// inputs, mutation is confined to construction and to locals it owns.
class GFMatrix {
public:
    enum class Storage { Auto, Packed, Bytes };

    GFMatrix() : GFMatrix(0, 0, 2) {}
    GFMatrix(std::size_t rows, std::size_t cols, std::uint16_t p, Storage s = Storage::Auto);

    static GFMatrix identity(std::size_t n, std::uint16_t p, Storage s = Storage::Auto);
    /// Build from explicit entries (values reduced mod p); rows must be rectangular.
    static GFMatrix from_rows(const std::vector<std::vector<long long>>& rows, std::uint16_t p,
                              Storage s = Storage::Auto);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint16_t modulus() const { return p_; }
    bool packed() const { return packed_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::uint16_t get(std::size_t r, std::size_t c) const {
        if (packed_) return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
        return bytes_[r * cols_ + c];
    }
    /// v must already be reduced into [0, p); use set_reduced otherwise.
    void set(std::size_t r, std::size_t c, std::uint16_t v) {
        if (packed_) {
            std::uint64_t mask = std::uint64_t(1) << (c & 63);
            std::uint64_t& w = words_[r * wpr_ + (c >> 6)];
            w = v ? (w | mask) : (w & ~mask);
        } else {
            bytes_[r * cols_ + c] = static_cast<std::uint8_t>(v);
        }
    }
    void set_reduced(std::size_t r, std::size_t c, long long v) {
        set(r, c, gf_reduce_i64(v, p_));
    }

    GFMatrix transposed() const;
    GFMatrix repacked(Storage s) const;

    /// Rows [r0, r1) as a new matrix.
    GFMatrix row_slice(std::size_t r0, std::size_t r1) const;
    /// Stack on top of `below` (same cols, same p).
    GFMatrix vstack(const GFMatrix& below) const;

    bool operator==(const GFMatrix& o) const;
    bool operator!=(const GFMatrix& o) const { return !(*this == o); }
    bool is_zero() const;

    std::string str() const;

    // Raw row access for kernels.
    std::size_t words_per_row() const { return wpr_; }
    std::uint64_t* word_row(std::size_t r) { return words_.data() + r * wpr_; }
    const std::uint64_t* word_row(std::size_t r) const { return words_.data() + r * wpr_; }
    std::uint8_t* byte_row(std::size_t r) { return bytes_.data() + r * cols_; }
    const std::uint8_t* byte_row(std::size_t r) const { return bytes_.data() + r * cols_; }

    void swap_rows(std::size_t i, std::size_t j);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint16_t p_ = 2;
    bool packed_ = true;
    std::size_t wpr_ = 0; // words per row when packed
    std::vector<std::uint64_t> words_;
    std::vector<std::uint8_t> bytes_;
};

} // namespace lieblocks
