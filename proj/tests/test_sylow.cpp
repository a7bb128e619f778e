#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "lieblocks/errors.hpp"
#include "lieblocks/sylow.hpp"

using namespace lieblocks;

namespace {

unsigned element_order(const Permutation& g) {
    Permutation acc = g;
    unsigned order = 1;
    while (!acc.is_identity()) {
        acc = compose(acc, g);
        ++order;
    }
    return order;
}

} // namespace

TEST_CASE("legendre exponent") {
    CHECK(legendre_p_part(4, 2) == 3);
    CHECK(legendre_p_part(8, 2) == 7);
    CHECK(legendre_p_part(9, 3) == 4);
    CHECK(legendre_p_part(6, 3) == 2);
    CHECK(legendre_p_part(6, 7) == 0);
    CHECK_THROWS_AS(legendre_p_part(5, 4), domain_error);

    // against a direct factorial valuation
    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned p : {2u, 3u, 5u, 7u}) {
            unsigned direct = 0;
            for (unsigned m = 2; m <= n; ++m) {
                unsigned v = m;
                while (v % p == 0) { v /= p; ++direct; }
            }
            CHECK(legendre_p_part(n, p) == direct);
        }
}

TEST_CASE("closure sizes match the p-part of the factorial") {
    const std::pair<unsigned, unsigned> cases[] = {{4, 2}, {5, 2}, {6, 2}, {8, 2},
                                                   {3, 3}, {6, 3}, {9, 3}, {5, 5}};
    for (auto [n, p] : cases) {
        SubgroupGens gens = sylow_generators(n, p);
        std::uint64_t expect = 1;
        for (unsigned i = 0; i < legendre_p_part(n, p); ++i) expect *= p;
        CHECK(gens.expected_order == expect);
        SubgroupClosure cl = closure(gens, expect + 8);
        CHECK(cl.elements.size() == expect);
    }
}

TEST_CASE("single transposition closes to two elements") {
    SubgroupGens gens;
    gens.n = 4;
    gens.p = 2;
    gens.generators = {transposition(1, 2, 4)};
    gens.expected_order = 2;
    SubgroupClosure cl = closure(gens, 4);
    REQUIRE(cl.elements.size() == 2);
    CHECK(cl.elements[0].is_identity());
    CHECK(cl.elements[1] == transposition(1, 2, 4));
}

TEST_CASE("closure properties: identity first, inverse and conjugation closed") {
    for (auto [n, p] : {std::pair<unsigned, unsigned>{6, 2}, {9, 3}}) {
        SubgroupGens gens = sylow_generators(n, p);
        SubgroupClosure cl = closure(gens, gens.expected_order);
        CHECK(cl.elements.front().is_identity());

        std::set<Permutation> everything(cl.elements.begin(), cl.elements.end());
        CHECK(everything.size() == cl.elements.size());
        for (const Permutation& g : cl.elements) CHECK(everything.count(g.inverse()) == 1);

        for (std::size_t i = 0; i < cl.elements.size(); i += 7)
            for (std::size_t j = 0; j < cl.elements.size(); j += 5) {
                const Permutation& g = cl.elements[i];
                const Permutation& h = cl.elements[j];
                CHECK(everything.count(compose(compose(h, g), h.inverse())) == 1);
            }

        for (std::size_t i = 1; i < cl.elements.size(); ++i)
            CHECK(cl.elements[i] ==
                  compose(cl.elements[cl.parent[i]], cl.gens_used[cl.gen_index[i]]));
    }
}

TEST_CASE("every element order is a power of p") {
    for (auto [n, p] : {std::pair<unsigned, unsigned>{8, 2}, {9, 3}}) {
        SubgroupClosure cl = closure(sylow_generators(n, p), 1u << 12);
        for (const Permutation& g : cl.elements) {
            unsigned order = element_order(g);
            while (order % p == 0) order /= p;
            CHECK(order == 1);
        }
    }
}

TEST_CASE("trivial sylow subgroup when p exceeds n") {
    SubgroupGens gens = sylow_generators(6, 7);
    CHECK(gens.expected_order == 1);
    CHECK(gens.generators.empty());
    SubgroupClosure cl = closure(gens, 1);
    CHECK(cl.elements.size() == 1);
}

TEST_CASE("cap violations are detected") {
    SubgroupGens gens = sylow_generators(4, 2);
    CHECK_THROWS_AS(closure(gens, gens.expected_order - 1), domain_error);

    // a deliberately wrong expected order must trip the growth cap
    SubgroupGens lying;
    lying.n = 3;
    lying.p = 2;
    lying.generators = {transposition(1, 2, 3), transposition(2, 3, 3)};
    lying.expected_order = 2;
    CHECK_THROWS_AS(closure(lying, 2), cap_exceeded);
}
