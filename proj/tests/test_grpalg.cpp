#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lieblocks/characters.hpp"
#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/group_algebra.hpp"

using namespace lieblocks;

namespace {

Permutation random_perm(unsigned n, std::mt19937& rng) {
    std::uint64_t nf = static_cast<std::uint64_t>(factorial_i64(n));
    return lehmer_unrank(std::uniform_int_distribution<std::uint64_t>(0, nf - 1)(rng), n);
}

GroupAlgebraElement random_sparse(unsigned n, std::uint16_t p, std::mt19937& rng) {
    GroupAlgebraElement x(n, p);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int t = 0; t < 6; ++t) x.add_term(random_perm(n, rng), coeff(rng));
    return x;
}

// dense convolution over all group element pairs
std::vector<std::int64_t> oracle_convolve(const GroupAlgebraElement& a,
                                          const GroupAlgebraElement& b) {
    const unsigned n = a.degree();
    const std::size_t nf = static_cast<std::size_t>(factorial_i64(n));
    std::vector<std::int64_t> da = a.dense(), db = b.dense(), out(nf, 0);
    for (std::size_t x = 0; x < nf; ++x) {
        if (!da[x]) continue;
        Permutation gx = lehmer_unrank(x, n);
        for (std::size_t y = 0; y < nf; ++y) {
            if (!db[y]) continue;
            std::size_t g = static_cast<std::size_t>(lehmer_rank(compose(gx, lehmer_unrank(y, n))));
            out[g] += da[x] * db[y];
            if (a.modulus()) out[g] %= a.modulus();
        }
    }
    if (a.modulus())
        for (auto& v : out) v = ((v % a.modulus()) + a.modulus()) % a.modulus();
    return out;
}

} // namespace

TEST_CASE("permutation basics, parse and print") {
    Permutation id(4);
    CHECK(id.is_identity());
    CHECK(id.str() == "1 2 3 4");
    CHECK(id.cycle_str() == "()");

    Permutation g = Permutation::parse_one_line("3 1 2");
    CHECK(g.apply(1) == 3);
    CHECK(g.cycle_str() == "(1 3 2)");
    CHECK(Permutation::parse_cycles("(1 3 2)", 3) == g);
    CHECK(compose(g, g.inverse()).is_identity());

    CHECK_THROWS_AS(Permutation::parse_one_line("1 1 2"), domain_error);
    CHECK_THROWS_AS(Permutation::parse_one_line("5 1 2"), domain_error);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 2", 3), parse_error);
    CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), domain_error);
}

TEST_CASE("lehmer ranking") {
    CHECK(lehmer_rank(Permutation(5)) == 0);
    for (std::uint64_t i = 0; i < 120; ++i) CHECK(lehmer_rank(lehmer_unrank(i, 5)) == i);

    std::set<std::uint64_t> ranks;
    for (std::uint64_t i = 0; i < 24; ++i) ranks.insert(lehmer_rank(lehmer_unrank(i, 4)));
    CHECK(ranks.size() == 24);
    CHECK(*ranks.begin() == 0);
    CHECK(*ranks.rbegin() == 23);

    CHECK_THROWS_AS(lehmer_unrank(24, 4), domain_error);
}

TEST_CASE("cycle types and conjugation invariance") {
    CHECK(transposition(1, 2, 4).cycle_type() == Partition({2, 1, 1}));
    std::mt19937 rng(7);
    for (int t = 0; t < 1000; ++t) {
        Permutation g = random_perm(5, rng), h = random_perm(5, rng);
        Permutation conj = compose(compose(h, g), h.inverse());
        CHECK(conj.cycle_type() == g.cycle_type());
    }
}

TEST_CASE("coxeter words multiply back to the permutation") {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        Permutation g = random_perm(6, rng);
        Permutation prod(6);
        for (unsigned letter : coxeter_word(g)) prod = compose(prod, coxeter_generator(letter, 6));
        CHECK(prod == g);
    }
}

TEST_CASE("descending cycles") {
    CHECK(descending_cycle(2, 2) == transposition(1, 2, 2));
    Permutation c3 = descending_cycle(3, 3);
    CHECK(c3.apply(1) == 3);
    CHECK(c3.apply(3) == 2);
    CHECK(c3.apply(2) == 1);
    CHECK_THROWS_AS(descending_cycle(1, 4), domain_error);
    CHECK_THROWS_AS(descending_cycle(5, 4), domain_error);

    for (unsigned n = 2; n <= 7; ++n)
        for (unsigned k = 2; k <= n; ++k) {
            Permutation c = descending_cycle(k, n), acc = c;
            unsigned order = 1;
            while (!acc.is_identity()) {
                acc = compose(acc, c);
                ++order;
            }
            CHECK(order == k);
        }
}

TEST_CASE("group algebra arithmetic basics") {
    GroupAlgebraElement one = GroupAlgebraElement::identity(3, 0);
    std::mt19937 rng(3);
    GroupAlgebraElement a = random_sparse(3, 0, rng);
    CHECK(ga_multiply(one, a) == a);
    CHECK(ga_multiply(a, one) == a);

    // (1 - c2)^2 = 2 - 2 c2 in degree 2
    GroupAlgebraElement w = GroupAlgebraElement::identity(2, 0) -
                            GroupAlgebraElement::basis(descending_cycle(2, 2), 0);
    GroupAlgebraElement sq = ga_multiply(w, w);
    GroupAlgebraElement expect = GroupAlgebraElement::identity(2, 0).scaled(2) -
                                 GroupAlgebraElement::basis(descending_cycle(2, 2), 0).scaled(2);
    CHECK(sq == expect);

    // zero coefficients are never stored
    GroupAlgebraElement z = a - a;
    CHECK(z.support_size() == 0);

    CHECK_THROWS_AS(ga_multiply(a, GroupAlgebraElement::identity(4, 0)), domain_error);
    CHECK_THROWS_AS(ga_multiply(a, GroupAlgebraElement::identity(3, 5)), domain_error);
}

TEST_CASE("convolution against the dense oracle, with associativity") {
    std::mt19937 rng(1234);
    for (std::uint16_t p : {0, 2, 5}) {
        for (int t = 0; t < 10; ++t) {
            GroupAlgebraElement a = random_sparse(5, p, rng);
            GroupAlgebraElement b = random_sparse(5, p, rng);
            GroupAlgebraElement c = random_sparse(5, p, rng);
            CHECK(ga_multiply(a, b).dense() == oracle_convolve(a, b));
            CHECK(ga_multiply(ga_multiply(a, b), c) == ga_multiply(a, ga_multiply(b, c)));
        }
    }
}

TEST_CASE("omega element: support, coefficients, square identity") {
    GroupAlgebraElement w2 = omega_element(2, 0);
    GroupAlgebraElement expect2 = GroupAlgebraElement::identity(2, 0) -
                                  GroupAlgebraElement::basis(transposition(1, 2, 2), 0);
    CHECK(w2 == expect2);
    CHECK(ga_multiply(w2, w2) == w2.scaled(2));

    for (unsigned n = 2; n <= 7; ++n) {
        GroupAlgebraElement w = omega_element(n, 0);
        CHECK(w.support_size() == (std::size_t(1) << (n - 1)));
        for (const auto& [rank, c] : w.terms()) CHECK((c == 1 || c == -1));
        CHECK(ga_multiply(w, w) == w.scaled(static_cast<std::int64_t>(n)));
        for (std::uint16_t p : {2, 3, 5, 7}) {
            GroupAlgebraElement wp = omega_element(n, p);
            CHECK(wp == w.reduced_mod(p));
            CHECK(ga_multiply(wp, wp) == wp.scaled(static_cast<std::int64_t>(n)));
        }
    }
    CHECK_THROWS_AS(omega_element(1, 0), domain_error);
}

TEST_CASE("class elements and class sums") {
    CHECK(class_elements(Partition({2, 1, 1})).size() == 6);
    CHECK(class_elements(Partition({3, 1})).size() == 8);

    for (unsigned n = 2; n <= 6; ++n)
        for (const CycleType& c : partitions(n))
            CHECK(static_cast<std::int64_t>(class_elements(c).size()) ==
                  conjugacy_class_size(c));

    // class sums are central: they commute with c_n and with random elements
    CycleType c{std::vector<unsigned>{3, 1, 1}};
    GroupAlgebraElement cs = class_sum(c, 0);
    GroupAlgebraElement cn = GroupAlgebraElement::basis(descending_cycle(5, 5), 0);
    CHECK(ga_multiply(cs, cn) == ga_multiply(cn, cs));
    std::mt19937 rng(99);
    for (int t = 0; t < 5; ++t) {
        GroupAlgebraElement x = random_sparse(5, 0, rng);
        CHECK(ga_multiply(cs, x) == ga_multiply(x, cs));
    }
}

TEST_CASE("multiplication restricted to a point stabilizer embeds the smaller algebra") {
    std::mt19937 rng(55);
    for (int t = 0; t < 8; ++t) {
        GroupAlgebraElement a4 = random_sparse(4, 0, rng);
        GroupAlgebraElement b4 = random_sparse(4, 0, rng);
        GroupAlgebraElement prod4 = ga_multiply(a4, b4);

        auto embed = [](const GroupAlgebraElement& x) {
            GroupAlgebraElement out(5, 0);
            for (const auto& [rank, c] : x.terms())
                out.add_term(lehmer_unrank(rank, 4).extended(5), c);
            return out;
        };
        CHECK(ga_multiply(embed(a4), embed(b4)) == embed(prod4));
    }
}
