#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/group_algebra.hpp"
#include "lieblocks/module_rep.hpp"

namespace lieblocks {

namespace {

// Coefficient vector of a group algebra element inside F^{n!}, coordinates
// indexed by Lehmer rank.
GFMatrix dense_row(const GroupAlgebraElement& x, std::size_t group_order, std::uint16_t p,
                   GFMatrix::Storage storage) {
    GFMatrix row(1, group_order, p, storage);
    for (const auto& [rank, c] : x.terms()) row.set_reduced(0, rank, c);
    return row;
}

} // namespace

ModuleRep build_lie_module(unsigned n, std::uint16_t p) {
    return build_lie_module(n, p, n <= 7);
}

ModuleRep build_lie_module(unsigned n, std::uint16_t p, bool keep_embedding) {
    if (n < 2) throw domain_error("Lie module needs n >= 2");
    if (n > 8) throw capacity_error("Lie module construction supported for n <= 8");
    const std::size_t group_order = static_cast<std::size_t>(factorial_i64(n));
    const std::size_t k = static_cast<std::size_t>(factorial_i64(n - 1));

    const GroupAlgebraElement omega = omega_element(n, 0);

    // unrank cache for the degree-n group (40320 entries at most)
    std::vector<Permutation> by_rank(group_order);
    for (std::size_t r = 0; r < group_order; ++r) by_rank[r] = lehmer_unrank(r, n);

    std::vector<std::pair<Permutation, std::int64_t>> omega_terms;
    omega_terms.reserve(omega.support_size());
    for (const auto& [rank, c] : omega.terms()) omega_terms.emplace_back(by_rank[rank], c);

    // Spanning rows: omega * sigma with sigma running over the point
    // stabilizer of 1 (the copy of the degree n-1 group acting on {2..n});
    // these translates are the free restriction basis.
    GFMatrix spanning(k, group_order, p);
#pragma omp parallel for schedule(static) if (k > 64)
    for (std::size_t sr = 0; sr < k; ++sr) {
        Permutation sigma = lehmer_unrank(sr, n - 1).shifted(n, 1);
        for (const auto& [g, c] : omega_terms)
            spanning.set_reduced(sr, static_cast<std::size_t>(lehmer_rank(compose(g, sigma))), c);
    }

    RrefResult rr = rref(std::move(spanning));
    if (rr.rank != k)
        throw rank_deficient("Lie module spanning set has rank " + std::to_string(rr.rank) +
                             ", expected " + std::to_string(k));

    // Invariance certificate: for sigma fixing 1, sigma * s_1 equals
    // (1 j) * sigma with j = sigma^{-1}(2), and sigma * s_i stays in the
    // stabilizer for i >= 2.  The row space is therefore closed under every
    // generator once each omega * (1 j) expands over the spanning set; the
    // expansions are verified exactly.
    for (unsigned j = 2; j <= n; ++j) {
        GroupAlgebraElement translate =
            ga_multiply(omega, GroupAlgebraElement::basis(transposition(1, j, n), 0));
        GFMatrix w = dense_row(translate, group_order, p,
                               rr.r.packed() ? GFMatrix::Storage::Packed
                                             : GFMatrix::Storage::Bytes);
        if (!solve_in_rowspace(rr, w))
            throw rank_deficient("omega translate by (1 " + std::to_string(j) +
                                 ") escapes the spanning row space");
    }

    // Generator actions read off the echelon basis: right multiplication by s
    // permutes group algebra coordinates, (v.s)[c] = v[rank(unrank(c) * s)], and
    // the coordinates of a row-space vector are its entries at the pivots.
    std::vector<GFMatrix> gens;
    for (unsigned i = 1; i < n; ++i) {
        Permutation s = coxeter_generator(i, n);
        std::vector<std::size_t> at(k);
        for (std::size_t c = 0; c < k; ++c)
            at[c] = static_cast<std::size_t>(lehmer_rank(compose(by_rank[rr.pivots[c]], s)));
        GFMatrix act(k, k, p);
#pragma omp parallel for schedule(static) if (k > 256)
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) act.set(r, c, rr.r.get(r, at[c]));
        gens.push_back(std::move(act));
    }

    std::optional<ModuleEmbedding> embedding;
    if (keep_embedding)
        embedding = ModuleEmbedding{rr.r.row_slice(0, rr.rank), rr.pivots};
    return ModuleRep(n, p, k, std::move(gens), std::move(embedding));
}

} // namespace lieblocks
