#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lieblocks/characters.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/partition.hpp"

using namespace lieblocks;

namespace {

Partition P(std::vector<unsigned> parts) { return Partition(std::move(parts)); }

CycleType transposition_class(unsigned n) {
    std::vector<unsigned> parts(n - 1, 1);
    parts[0] = 2;
    return CycleType{std::move(parts)};
}

// --- independent oracles -------------------------------------------------

// all removable rim hooks of length r, found by scanning skew shapes directly
struct OracleHook {
    Partition remainder;
    unsigned leg;
};

bool subset_of(const Partition& mu, const Partition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu.part(i) > lambda.part(i)) return false;
    return true;
}

std::vector<OracleHook> oracle_hooks(const Partition& lambda, unsigned r) {
    std::vector<OracleHook> out;
    if (lambda.size() < r) return out;
    for (const Partition& mu : partitions(lambda.size() - r)) {
        if (!subset_of(mu, lambda)) continue;
        std::set<std::pair<unsigned, unsigned>> cells;
        for (unsigned row = 1; row <= lambda.length(); ++row)
            for (unsigned col = mu.part(row - 1) + 1; col <= lambda.part(row - 1); ++col)
                cells.insert({row, col});
        // connected?
        std::set<std::pair<unsigned, unsigned>> seen;
        std::vector<std::pair<unsigned, unsigned>> stack{*cells.begin()};
        seen.insert(*cells.begin());
        while (!stack.empty()) {
            auto [row, col] = stack.back();
            stack.pop_back();
            for (auto [dr, dc] : {std::pair<int, int>{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                std::pair<unsigned, unsigned> nb{row + dr, col + dc};
                if (cells.count(nb) && seen.insert(nb).second) stack.push_back(nb);
            }
        }
        if (seen.size() != cells.size()) continue;
        // no 2x2 square?
        bool square = false;
        for (auto [row, col] : cells)
            if (cells.count({row + 1, col}) && cells.count({row, col + 1}) &&
                cells.count({row + 1, col + 1}))
                square = true;
        if (square) continue;
        std::set<unsigned> rows;
        for (auto [row, col] : cells) rows.insert(row);
        out.push_back(OracleHook{mu, static_cast<unsigned>(rows.size() - 1)});
    }
    return out;
}

// every removal order must reach the same core
void all_order_cores(const Partition& lambda, unsigned p, std::set<Partition>& cores,
                     unsigned depth, unsigned& weight_out) {
    auto hooks = oracle_hooks(lambda, p);
    if (hooks.empty()) {
        cores.insert(lambda);
        weight_out = depth;
        return;
    }
    for (const OracleHook& h : hooks) all_order_cores(h.remainder, p, cores, depth + 1, weight_out);
}

} // namespace

TEST_CASE("partition normalization, parse and print") {
    CHECK(P({1, 3, 2}).parts() == std::vector<unsigned>{3, 2, 1});
    CHECK(P({}).str() == "");
    CHECK(P({3, 2, 1}).str() == "3,2,1");
    CHECK(Partition::parse("3,2,1") == P({3, 2, 1}));
    CHECK(Partition::parse("") == P({}));
    CHECK(Partition::parse(" 4 , 1 ") == P({4, 1}));
    CHECK_THROWS_AS(Partition::parse("3,,1"), parse_error);
    CHECK_THROWS_AS(Partition::parse("a"), parse_error);
    CHECK_THROWS_AS(Partition::parse("1,3"), parse_error); // not weakly decreasing
    CHECK_THROWS_AS(Partition::parse("3,0,1"), parse_error);
    CHECK(P({4, 2, 1}).conjugate() == P({3, 2, 1, 1}));
}

TEST_CASE("partitions enumeration: order, counts, recurrence oracle") {
    CHECK(partitions(0) == std::vector<Partition>{P({})});
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(10).size() == 42);
    CHECK(partition_count(10) == 42);

    // lexicographic on part sequences, no duplicates, all of size n
    for (unsigned n = 0; n <= 12; ++n) {
        auto all = partitions(n);
        CHECK(all.size() == partition_count(n));
        for (std::size_t i = 0; i < all.size(); ++i) {
            CHECK(all[i].size() == n);
            if (i) CHECK(all[i - 1].parts() < all[i].parts());
        }
    }
}

TEST_CASE("removable rim hooks: pinned examples") {
    auto h1 = removable_rim_hooks(P({1}), 1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].leg == 0);
    CHECK(h1[0].cells == std::vector<std::pair<unsigned, unsigned>>{{1, 1}});

    auto h2 = removable_rim_hooks(P({2, 1}), 3);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0].leg == 1);
    CHECK(h2[0].remainder == P({}));
    CHECK(h2[0].cells.size() == 3);

    CHECK_THROWS_AS(removable_rim_hooks(P({2}), 0), domain_error);
}

TEST_CASE("removable rim hooks agree with the skew-shape scan oracle") {
    for (unsigned n = 1; n <= 8; ++n)
        for (const Partition& lambda : partitions(n))
            for (unsigned r = 1; r <= n; ++r) {
                auto got = removable_rim_hooks(lambda, r);
                auto expect = oracle_hooks(lambda, r);
                REQUIRE(got.size() == expect.size());
                auto key = [](const Partition& rem, unsigned leg) {
                    return rem.str() + "#" + std::to_string(leg);
                };
                std::multiset<std::string> a, b;
                for (const auto& h : got) {
                    a.insert(key(h.remainder, h.leg));
                    CHECK(h.length == r);
                    CHECK(h.cells.size() == r);
                }
                for (const auto& h : expect) b.insert(key(h.remainder, h.leg));
                CHECK(a == b);
            }
}

TEST_CASE("p-core pinned examples and the all-orders oracle") {
    CHECK(p_core(P({2}), 2).core == P({}));
    CHECK(p_core(P({2}), 2).weight == 1);
    CHECK(p_core(P({3, 1}), 2).core == P({}));
    CHECK(p_core(P({3, 1}), 2).weight == 2);
    CHECK(p_core(P({3, 2, 1}), 3).core == P({}));
    CHECK(p_core(P({3, 2, 1}), 3).weight == 2);
    CHECK(p_core(P({3, 2, 1}), 2).core == P({3, 2, 1}));

    CHECK_THROWS_AS(p_core(P({2}), 4), domain_error);

    for (unsigned n = 0; n <= 10; ++n)
        for (const Partition& lambda : partitions(n))
            for (unsigned p : {2u, 3u, 5u}) {
                std::set<Partition> cores;
                unsigned oracle_weight = 0;
                all_order_cores(lambda, p, cores, 0, oracle_weight);
                REQUIRE(cores.size() == 1); // removal order never matters
                PCoreResult pc = p_core(lambda, p);
                CHECK(pc.core == *cores.begin());
                CHECK(pc.weight == oracle_weight);
                CHECK(pc.core.size() + p * pc.weight == n);
                // idempotent
                CHECK(p_core(pc.core, p).core == pc.core);
                CHECK(p_core(pc.core, p).weight == 0);
            }
}

TEST_CASE("principal core") {
    CHECK(principal_core(8, 2) == P({}));
    CHECK(principal_core(7, 3) == P({1}));
    CHECK(principal_core(5, 7) == P({5}));
}

TEST_CASE("abacus round trip") {
    for (unsigned n = 0; n <= 9; ++n)
        for (const Partition& lambda : partitions(n)) {
            AbacusConfig a = AbacusConfig::from_partition(lambda, std::max<unsigned>(n, 1), 3);
            CHECK(a.to_partition() == lambda);
        }
}

TEST_CASE("murnaghan-nakayama pinned values") {
    for (const CycleType& rho : partitions(5)) CHECK(mn_character(P({5}), rho) == 1);
    CHECK(mn_character(P({1, 1, 1}), P({2, 1})) == -1);
    CHECK(mn_character(P({2, 1}), P({3})) == -1);
    CHECK_THROWS_AS(mn_character(P({2, 1}), P({2})), domain_error);
}

TEST_CASE("full character table of degree 3 via column orthogonality") {
    // sum over classes of |C| chi(C) chi'(C) = delta * 3!
    auto klasses = partitions(3);
    auto irreps = partitions(3);
    for (const Partition& l : irreps)
        for (const Partition& m : irreps) {
            std::int64_t acc = 0;
            for (const CycleType& c : klasses)
                acc += conjugacy_class_size(c) * mn_character(l, c) * mn_character(m, c);
            CHECK(acc == (l == m ? 6 : 0));
        }
}

TEST_CASE("row orthogonality for all degrees up to 6") {
    for (unsigned n = 1; n <= 6; ++n) {
        auto klasses = partitions(n);
        const std::int64_t nf = factorial_i64(n);
        for (const Partition& l : partitions(n))
            for (const Partition& m : partitions(n)) {
                std::int64_t acc = 0;
                for (const CycleType& c : klasses)
                    acc += conjugacy_class_size(c) * mn_character(l, c) * mn_character(m, c);
                CHECK(acc == (l == m ? nf : 0));
            }
    }
}

TEST_CASE("dimensions: hook lengths, tableau count, burnside") {
    CHECK(dim_irreducible(P({6})) == 1);
    CHECK(dim_irreducible(P({3, 2, 1})) == 16);
    CHECK(hook_length_dim(P({3, 2})) == 5);
    CHECK(hook_length_dim(P({2, 1})) == 2);

    for (unsigned n = 1; n <= 7; ++n) {
        std::int64_t burnside = 0;
        for (const Partition& lambda : partitions(n)) {
            std::int64_t d = dim_irreducible(lambda);
            CHECK(d == standard_tableau_count(lambda));
            burnside += d * d;
        }
        CHECK(burnside == factorial_i64(n));
    }
}

TEST_CASE("class sizes") {
    CHECK(conjugacy_class_size(P({2, 1, 1})) == 6);  // transpositions in degree 4
    CHECK(conjugacy_class_size(P({3, 1})) == 8);
    CHECK(conjugacy_class_size(P({1, 1, 1})) == 1);
    for (unsigned n = 1; n <= 8; ++n) {
        std::int64_t total = 0;
        for (const CycleType& c : partitions(n)) total += conjugacy_class_size(c);
        CHECK(total == factorial_i64(n));
    }
}

TEST_CASE("central characters: pinned values and the content-sum oracle") {
    CHECK(central_character_int(P({6}), transposition_class(6)) == 15);
    CHECK(central_character(P({3, 2, 1}), transposition_class(6), 2).value == 0);
    for (std::uint16_t p : {2, 3, 5, 7})
        CHECK(central_character(P({2, 1}), transposition_class(3), p).value == 0);

    // central character at transpositions equals the content sum of the diagram
    for (unsigned n = 2; n <= 8; ++n)
        for (const Partition& lambda : partitions(n)) {
            std::int64_t contents = 0;
            for (unsigned row = 1; row <= lambda.length(); ++row)
                for (unsigned col = 1; col <= lambda.part(row - 1); ++col)
                    contents += static_cast<std::int64_t>(col) - static_cast<std::int64_t>(row);
            CHECK(central_character_int(lambda, transposition_class(n)) == contents);
        }
}

TEST_CASE("central characters depend only on the p-core (nakayama consistency)") {
    for (unsigned n = 2; n <= 7; ++n)
        for (std::uint16_t p : {2, 3, 5}) {
            std::map<Partition, std::map<Partition, std::uint16_t>> fingerprint;
            for (const Partition& lambda : partitions(n)) {
                Partition core = p_core(lambda, p).core;
                for (const CycleType& c : partitions(n)) {
                    std::uint16_t v = central_character(lambda, c, p).value;
                    auto [it, inserted] = fingerprint[core].try_emplace(c, v);
                    CHECK(it->second == v);
                }
            }
        }
}

TEST_CASE("p-regularity and the glaisher count") {
    // no part may occur p or more times: (2,2,1) has a part occurring twice,
    // so it is 3-regular but not 2-regular
    CHECK_FALSE(is_p_regular(P({2, 2, 1}), 2));
    CHECK(is_p_regular(P({2, 2, 1}), 3));
    CHECK(is_p_regular(P({3, 2, 1}), 2));
    CHECK_FALSE(is_p_regular(P({1, 1}), 2));

    for (unsigned n = 1; n <= 10; ++n)
        for (unsigned p : {2u, 3u}) {
            std::size_t regular = 0, no_multiple = 0;
            for (const Partition& lambda : partitions(n)) {
                if (is_p_regular(lambda, p)) ++regular;
                bool ok = true;
                for (unsigned v : lambda.parts())
                    if (v % p == 0) ok = false;
                if (ok) ++no_multiple;
            }
            CHECK(regular == no_multiple);
        }
}
