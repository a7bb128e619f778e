#include "lieblocks/gf_matrix.hpp"

#include <sstream>

#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"

namespace lieblocks {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint16_t gf_inverse(std::uint16_t a, std::uint16_t p) {
    // extended Euclid on (a, p)
    std::int32_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        std::int32_t q = r / newr;
        std::int32_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw domain_error("not invertible mod p");
    if (t < 0) t += p;
    return static_cast<std::uint16_t>(t);
}

std::uint16_t Rational::mod_p(std::uint16_t p) const {
    if (den_ % p == 0)
        throw p_integrality_violation("denominator " + std::to_string(den_) +
                                      " not a unit mod " + std::to_string(p));
    std::uint16_t n = gf_reduce_i64(num_, p);
    std::uint16_t d = gf_reduce_i64(den_, p);
    return static_cast<std::uint16_t>((std::uint32_t(n) * gf_inverse(d, p)) % p);
}

GFMatrix::GFMatrix(std::size_t rows, std::size_t cols, std::uint16_t p, Storage s)
    : rows_(rows), cols_(cols), p_(p) {
    if (!is_prime(p)) throw domain_error("matrix modulus must be prime, got " + std::to_string(p));
    packed_ = (s == Storage::Auto) ? (p == 2) : (s == Storage::Packed);
    if (packed_ && p != 2) throw domain_error("packed storage requires p = 2");
    if (!packed_ && p > 251)
        throw domain_error("byte storage requires p <= 251, got " + std::to_string(p));
    if (packed_) {
        wpr_ = (cols_ + 63) / 64;
        words_.assign(rows_ * wpr_, 0);
    } else {
        bytes_.assign(rows_ * cols_, 0);
    }
}

GFMatrix GFMatrix::identity(std::size_t n, std::uint16_t p, Storage s) {
    GFMatrix m(n, n, p, s);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

GFMatrix GFMatrix::from_rows(const std::vector<std::vector<long long>>& rows, std::uint16_t p,
                             Storage s) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    GFMatrix m(rows.size(), nc, p, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw domain_error("ragged rows in matrix literal");
        for (std::size_t j = 0; j < nc; ++j) m.set_reduced(i, j, rows[i][j]);
    }
    return m;
}

GFMatrix GFMatrix::transposed() const {
    GFMatrix t(cols_, rows_, p_, packed_ ? Storage::Packed : Storage::Bytes);
    if (packed_) {
        for (std::size_t i = 0; i < rows_; ++i) {
            const std::uint64_t* row = word_row(i);
            for (std::size_t w = 0; w < wpr_; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    unsigned b = static_cast<unsigned>(__builtin_ctzll(bits));
                    bits &= bits - 1;
                    t.set(w * 64 + b, i, 1);
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t.bytes_[j * rows_ + i] = bytes_[i * cols_ + j];
    }
    return t;
}

GFMatrix GFMatrix::repacked(Storage s) const {
    bool want = (s == Storage::Auto) ? (p_ == 2) : (s == Storage::Packed);
    if (want == packed_) return *this;
    GFMatrix m(rows_, cols_, p_, want ? Storage::Packed : Storage::Bytes);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.set(i, j, get(i, j));
    return m;
}

GFMatrix GFMatrix::row_slice(std::size_t r0, std::size_t r1) const {
    if (r0 > r1 || r1 > rows_) throw domain_error("row_slice out of range");
    GFMatrix m(r1 - r0, cols_, p_, packed_ ? Storage::Packed : Storage::Bytes);
    if (packed_)
        std::memcpy(m.words_.data(), words_.data() + r0 * wpr_, (r1 - r0) * wpr_ * 8);
    else
        std::memcpy(m.bytes_.data(), bytes_.data() + r0 * cols_, (r1 - r0) * cols_);
    return m;
}

GFMatrix GFMatrix::vstack(const GFMatrix& below) const {
    if (cols_ != below.cols_ || p_ != below.p_)
        throw domain_error("vstack: dimension or modulus mismatch");
    GFMatrix b = below.packed_ == packed_
                     ? below
                     : below.repacked(packed_ ? Storage::Packed : Storage::Bytes);
    GFMatrix m(rows_ + below.rows_, cols_, p_, packed_ ? Storage::Packed : Storage::Bytes);
    if (packed_) {
        std::memcpy(m.words_.data(), words_.data(), words_.size() * 8);
        std::memcpy(m.words_.data() + words_.size(), b.words_.data(), b.words_.size() * 8);
    } else {
        std::memcpy(m.bytes_.data(), bytes_.data(), bytes_.size());
        std::memcpy(m.bytes_.data() + bytes_.size(), b.bytes_.data(), b.bytes_.size());
    }
    return m;
}

bool GFMatrix::operator==(const GFMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_) return false;
    if (packed_ == o.packed_)
        return packed_ ? words_ == o.words_ : bytes_ == o.bytes_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j) != o.get(i, j)) return false;
    return true;
}

bool GFMatrix::is_zero() const {
    if (packed_) {
        for (std::uint64_t w : words_)
            if (w) return false;
    } else {
        for (std::uint8_t b : bytes_)
            if (b) return false;
    }
    return true;
}

std::string GFMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j);
        os << '\n';
    }
    return os.str();
}

void GFMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    if (packed_)
        std::swap_ranges(word_row(i), word_row(i) + wpr_, word_row(j));
    else
        std::swap_ranges(byte_row(i), byte_row(i) + cols_, byte_row(j));
}

} // namespace lieblocks
