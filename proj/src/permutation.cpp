#include "lieblocks/permutation.hpp"

#include <algorithm>
#include <sstream>

#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"

namespace lieblocks {

namespace {
constexpr std::size_t kMaxDegree = 20; // lehmer ranks must fit in 64 bits
}

Permutation::Permutation(std::size_t n) {
    if (n > kMaxDegree) throw capacity_error("permutation degree beyond desk scale");
    img_.resize(n);
    for (std::size_t i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images0(std::vector<std::uint8_t> images0) {
    if (images0.size() > kMaxDegree) throw capacity_error("permutation degree beyond desk scale");
    std::vector<bool> seen(images0.size(), false);
    for (std::uint8_t v : images0) {
        if (v >= images0.size() || seen[v]) throw domain_error("images are not a bijection");
        seen[v] = true;
    }
    Permutation g;
    g.img_ = std::move(images0);
    return g;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::uint8_t> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint8_t>(i);
    Permutation g;
    g.img_ = std::move(inv);
    return g;
}

CycleType Permutation::cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<unsigned> lengths;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        unsigned len = 0;
        std::size_t x = i;
        while (!seen[x]) {
            seen[x] = true;
            x = img_[x];
            ++len;
        }
        lengths.push_back(len);
    }
    return CycleType{std::move(lengths)};
}

Permutation Permutation::extended(std::size_t m) const {
    if (m < img_.size()) throw domain_error("extended: target degree smaller than current");
    std::vector<std::uint8_t> out(img_);
    out.reserve(m);
    for (std::size_t i = img_.size(); i < m; ++i) out.push_back(static_cast<std::uint8_t>(i));
    return from_images0(std::move(out));
}

Permutation Permutation::shifted(std::size_t m, unsigned offset) const {
    if (offset + img_.size() > m) throw domain_error("shifted: embedding does not fit");
    std::vector<std::uint8_t> out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint8_t>(i);
    for (std::size_t i = 0; i < img_.size(); ++i)
        out[offset + i] = static_cast<std::uint8_t>(offset + img_[i]);
    return from_images0(std::move(out));
}

std::string Permutation::str() const {
    std::string s;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(img_[i] + 1);
    }
    return s;
}

std::string Permutation::cycle_str() const {
    std::string s;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) { seen[i] = true; continue; }
        s += '(';
        std::size_t x = i;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) s += ' ';
            s += std::to_string(x + 1);
            first = false;
            x = img_[x];
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Permutation Permutation::parse_one_line(const std::string& text) {
    std::istringstream is(text);
    std::vector<long> vals;
    long v;
    while (is >> v) vals.push_back(v);
    if (!is.eof()) throw parse_error("unexpected token in one-line permutation", 0);
    std::vector<std::uint8_t> img(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] < 1 || vals[i] > static_cast<long>(vals.size()))
            throw domain_error("one-line entry out of range: " + std::to_string(vals[i]));
        img[i] = static_cast<std::uint8_t>(vals[i] - 1);
    }
    return from_images0(std::move(img));
}

Permutation Permutation::parse_cycles(const std::string& text, std::size_t n) {
    Permutation result(n);
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
        if (text[i] != '(') throw parse_error("expected '(' in cycle notation", i);
        ++i;
        std::vector<unsigned> cyc;
        while (i < text.size() && text[i] != ')') {
            if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') { ++i; continue; }
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw parse_error("expected point in cycle", i);
            unsigned v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + static_cast<unsigned>(text[i++] - '0');
            if (v < 1 || v > n) throw domain_error("cycle point out of range");
            cyc.push_back(v);
        }
        if (i == text.size()) throw parse_error("unterminated cycle", i);
        ++i; // ')'
        if (cyc.size() >= 2) {
            std::vector<std::uint8_t> img(n);
            for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<std::uint8_t>(x);
            for (std::size_t k = 0; k < cyc.size(); ++k)
                img[cyc[k] - 1] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()] - 1);
            result = compose(result, from_images0(std::move(img)));
        }
    }
    return result;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.degree() != h.degree()) throw domain_error("compose: degree mismatch");
    std::vector<std::uint8_t> img(g.degree());
    for (std::size_t x = 0; x < g.degree(); ++x) img[x] = h.apply0(g.apply0(static_cast<std::uint8_t>(x)));
    return Permutation::from_images0(std::move(img));
}

Permutation transposition(unsigned a, unsigned b, std::size_t n) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw domain_error("transposition points out of range");
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    std::swap(img[a - 1], img[b - 1]);
    return Permutation::from_images0(std::move(img));
}

Permutation coxeter_generator(unsigned i, std::size_t n) {
    if (i < 1 || i >= n) throw domain_error("coxeter generator index out of range");
    return transposition(i, i + 1, n);
}

Permutation descending_cycle(unsigned k, std::size_t n) {
    if (k < 2 || k > n) throw domain_error("descending cycle needs 2 <= k <= n");
    std::vector<std::uint8_t> img(n);
    img[0] = static_cast<std::uint8_t>(k - 1); // 1 -> k
    for (unsigned j = 2; j <= k; ++j) img[j - 1] = static_cast<std::uint8_t>(j - 2); // j -> j-1
    for (std::size_t j = k; j < n; ++j) img[j] = static_cast<std::uint8_t>(j);
    return Permutation::from_images0(std::move(img));
}

std::uint64_t lehmer_rank(const Permutation& g) {
    const std::size_t n = g.degree();
    std::uint64_t rank = 0;
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i; // n!
    for (std::size_t i = 0; i < n; ++i) {
        fact /= (n - i);
        unsigned smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (g.images0()[j] < g.images0()[i]) ++smaller;
        rank += smaller * fact;
    }
    return rank;
}

Permutation lehmer_unrank(std::uint64_t index, std::size_t n) {
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= i;
    if (index >= fact) throw domain_error("lehmer index out of range");
    std::vector<std::uint8_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i);
    std::vector<std::uint8_t> img;
    img.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        fact /= (n - i);
        std::size_t d = index / fact;
        index %= fact;
        img.push_back(pool[d]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return Permutation::from_images0(std::move(img));
}

std::vector<unsigned> coxeter_word(const Permutation& g) {
    // bubble sort of the one-line array; swapping positions j, j+1 multiplies
    // by s_j on the left, so the recorded swaps read left-to-right give g
    std::vector<std::uint8_t> a(g.images0());
    std::vector<unsigned> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t j = 0; j + 1 < a.size(); ++j) {
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                word.push_back(static_cast<unsigned>(j + 1));
                moved = true;
            }
        }
    }
    return word;
}

} // namespace lieblocks
