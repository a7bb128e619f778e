#include "lieblocks/group_algebra.hpp"

#include <sstream>

#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/gf_scalar.hpp"

namespace lieblocks {

namespace {
constexpr unsigned kMaxDenseDegree = 8;
}

GroupAlgebraElement::GroupAlgebraElement(unsigned n, std::uint16_t modulus)
    : n_(n), p_(modulus) {
    if (modulus != 0 && !is_prime(modulus))
        throw domain_error("group algebra modulus must be 0 or prime");
}

GroupAlgebraElement GroupAlgebraElement::zero(unsigned n, std::uint16_t modulus) {
    return GroupAlgebraElement(n, modulus);
}

GroupAlgebraElement GroupAlgebraElement::identity(unsigned n, std::uint16_t modulus) {
    GroupAlgebraElement e(n, modulus);
    e.add_term(Permutation(n), 1);
    return e;
}

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& g, std::uint16_t modulus) {
    GroupAlgebraElement e(static_cast<unsigned>(g.degree()), modulus);
    e.add_term(g, 1);
    return e;
}

std::int64_t GroupAlgebraElement::normalize(std::int64_t c) const {
    if (p_ == 0) return c;
    std::int64_t r = c % p_;
    return r < 0 ? r + p_ : r;
}

std::int64_t GroupAlgebraElement::coeff(const Permutation& g) const {
    return coeff_by_rank(lehmer_rank(g));
}

std::int64_t GroupAlgebraElement::coeff_by_rank(std::uint64_t rank) const {
    auto it = coeffs_.find(rank);
    return it == coeffs_.end() ? 0 : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& g, std::int64_t c) {
    if (g.degree() != n_) throw domain_error("group algebra term has wrong degree");
    add_term_by_rank(lehmer_rank(g), c);
}

void GroupAlgebraElement::add_term_by_rank(std::uint64_t rank, std::int64_t c) {
    auto [it, inserted] = coeffs_.try_emplace(rank, 0);
    it->second = normalize(checked_add(it->second, normalize(c)));
    if (it->second == 0) coeffs_.erase(it);
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw domain_error("group algebra sum: degree/modulus mismatch");
    GroupAlgebraElement r = *this;
    for (const auto& [rank, c] : o.coeffs_) r.add_term_by_rank(rank, c);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    return *this + o.scaled(-1);
}

GroupAlgebraElement GroupAlgebraElement::scaled(std::int64_t c) const {
    GroupAlgebraElement r(n_, p_);
    if (normalize(c) == 0 && p_ != 0) return r;
    if (c == 0) return r;
    for (const auto& [rank, v] : coeffs_) r.add_term_by_rank(rank, checked_mul(v, c));
    return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    return n_ == o.n_ && p_ == o.p_ && coeffs_ == o.coeffs_;
}

std::vector<std::int64_t> GroupAlgebraElement::dense() const {
    if (n_ > kMaxDenseDegree) throw capacity_error("dense view beyond desk scale");
    std::vector<std::int64_t> v(static_cast<std::size_t>(factorial_i64(n_)), 0);
    for (const auto& [rank, c] : coeffs_) v[rank] = c;
    return v;
}

GroupAlgebraElement GroupAlgebraElement::reduced_mod(std::uint16_t p) const {
    if (p_ != 0) throw domain_error("reduced_mod expects integer coefficients");
    GroupAlgebraElement r(n_, p);
    for (const auto& [rank, c] : coeffs_) r.add_term_by_rank(rank, c);
    return r;
}

std::string GroupAlgebraElement::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [rank, c] : coeffs_) {
        if (!first) os << " + ";
        os << c << "*[" << lehmer_unrank(rank, n_).cycle_str() << "]";
        first = false;
    }
    return os.str();
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.degree() != b.degree() || a.modulus() != b.modulus())
        throw domain_error("ga_multiply: degree/modulus mismatch");
    const unsigned n = a.degree();
    std::vector<std::pair<Permutation, std::int64_t>> av, bv;
    av.reserve(a.support_size());
    bv.reserve(b.support_size());
    for (const auto& [rank, c] : a.terms()) av.emplace_back(lehmer_unrank(rank, n), c);
    for (const auto& [rank, c] : b.terms()) bv.emplace_back(lehmer_unrank(rank, n), c);

    GroupAlgebraElement prod(n, a.modulus());
    for (const auto& [g, cg] : av)
        for (const auto& [h, ch] : bv)
            prod.add_term_by_rank(lehmer_rank(compose(g, h)), checked_mul(cg, ch));
    return prod;
}

GroupAlgebraElement omega_element(unsigned n, std::uint16_t modulus) {
    if (n < 2) throw domain_error("omega element needs n >= 2");
    GroupAlgebraElement acc = GroupAlgebraElement::identity(n, modulus) -
                              GroupAlgebraElement::basis(descending_cycle(n, n), modulus);
    for (unsigned k = n - 1; k >= 2; --k) {
        GroupAlgebraElement factor = GroupAlgebraElement::identity(n, modulus) -
                                     GroupAlgebraElement::basis(descending_cycle(k, n), modulus);
        acc = ga_multiply(acc, factor);
    }
    return acc;
}

std::vector<Permutation> class_elements(const CycleType& c) {
    const unsigned n = c.size();
    if (n > kMaxDenseDegree) throw capacity_error("class enumeration beyond desk scale");
    std::vector<Permutation> out;
    const std::uint64_t nf = static_cast<std::uint64_t>(factorial_i64(n));
    for (std::uint64_t r = 0; r < nf; ++r) {
        Permutation g = lehmer_unrank(r, n);
        if (g.cycle_type() == c) out.push_back(std::move(g));
    }
    return out;
}

GroupAlgebraElement class_sum(const CycleType& c, std::uint16_t modulus) {
    GroupAlgebraElement s(c.size(), modulus);
    for (const Permutation& g : class_elements(c)) s.add_term(g, 1);
    return s;
}

} // namespace lieblocks
