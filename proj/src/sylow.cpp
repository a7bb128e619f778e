#include "lieblocks/sylow.hpp"

#include <unordered_set>

#include "lieblocks/errors.hpp"
#include "lieblocks/gf_scalar.hpp"

namespace lieblocks {

unsigned legendre_p_part(unsigned n, unsigned p) {
    if (!is_prime(p)) throw domain_error("legendre_p_part needs a prime p");
    unsigned e = 0;
    for (unsigned q = p; q <= n; q *= p) {
        e += n / q;
        if (q > n / p) break; // avoid overflow of q *= p
    }
    return e;
}

Permutation block_shift(unsigned start, unsigned block, unsigned step, std::size_t n) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<std::uint8_t>(x);
    for (unsigned j = 0; j < block; ++j)
        img[start - 1 + j] = static_cast<std::uint8_t>(start - 1 + (j + step) % block);
    return Permutation::from_images0(std::move(img));
}

namespace {

// W_level on [start, start + p^level): the generators of W_{level-1} on the
// first sub-block plus the shift by p^(level-1) within the whole block.
void add_tower_generators(unsigned start, unsigned level, unsigned p, unsigned n,
                          std::vector<Permutation>& gens) {
    if (level == 0) return;
    add_tower_generators(start, level - 1, p, n, gens);
    unsigned block = 1;
    for (unsigned i = 0; i < level; ++i) block *= p;
    gens.push_back(block_shift(start, block, block / p, n));
}

} // namespace

SubgroupGens sylow_generators(unsigned n, unsigned p) {
    if (!is_prime(p)) throw domain_error("sylow_generators needs a prime p");
    if (n < 1) throw domain_error("sylow_generators needs n >= 1");
    SubgroupGens out;
    out.n = n;
    out.p = p;
    unsigned e = legendre_p_part(n, p);
    out.expected_order = 1;
    for (unsigned i = 0; i < e; ++i) out.expected_order *= p;

    // digits of n base p, largest first
    std::vector<unsigned> digits;
    for (unsigned m = n; m > 0; m /= p) digits.push_back(m % p);
    unsigned start = 1;
    for (std::size_t lvl = digits.size(); lvl-- > 0;) {
        unsigned block = 1;
        for (std::size_t i = 0; i < lvl; ++i) block *= p;
        for (unsigned copy = 0; copy < digits[lvl]; ++copy) {
            out.towers.push_back(WreathTower{start, static_cast<unsigned>(lvl)});
            add_tower_generators(start, static_cast<unsigned>(lvl), p, n, out.generators);
            start += block;
        }
    }
    return out;
}

SubgroupClosure closure(const SubgroupGens& gens, std::uint64_t cap) {
    if (cap < gens.expected_order)
        throw domain_error("closure cap below the expected subgroup order");
    SubgroupClosure out;
    out.gens_used = gens.generators;
    std::unordered_set<Permutation, Permutation::Hash> seen;
    out.elements.push_back(Permutation(gens.n));
    out.parent.push_back(0);
    out.gen_index.push_back(0);
    seen.insert(out.elements[0]);

    for (std::size_t head = 0; head < out.elements.size(); ++head) {
        for (std::size_t gi = 0; gi < gens.generators.size(); ++gi) {
            Permutation next = compose(out.elements[head], gens.generators[gi]);
            if (seen.insert(next).second) {
                if (out.elements.size() + 1 > cap)
                    throw cap_exceeded("subgroup closure exceeded cap " + std::to_string(cap));
                out.elements.push_back(std::move(next));
                out.parent.push_back(head);
                out.gen_index.push_back(gi);
            }
        }
    }
    if (out.elements.size() != gens.expected_order)
        throw cap_exceeded("subgroup closure has order " + std::to_string(out.elements.size()) +
                           ", expected " + std::to_string(gens.expected_order));
    return out;
}

} // namespace lieblocks
