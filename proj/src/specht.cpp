#include <algorithm>
#include <functional>
#include <map>

#include "lieblocks/characters.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/module_rep.hpp"

namespace lieblocks {

namespace {

// A tabloid is an assignment of {1..n} to rows with prescribed row sizes:
// row_of[x] = row of the number x+1 (0-based rows).
using Tabloid = std::vector<std::uint8_t>;

std::vector<Tabloid> enumerate_tabloids(const Partition& shape) {
    Tabloid first;
    for (std::size_t row = 0; row < shape.length(); ++row)
        first.insert(first.end(), shape.parts()[row], static_cast<std::uint8_t>(row));
    std::sort(first.begin(), first.end());
    std::vector<Tabloid> all;
    do {
        all.push_back(first);
    } while (std::next_permutation(first.begin(), first.end()));
    return all;
}

// Standard Young tableaux as row-filled grids (values 1..n).
std::vector<std::vector<std::vector<unsigned>>> enumerate_standard(const Partition& shape) {
    std::vector<std::vector<std::vector<unsigned>>> out;
    std::vector<std::vector<unsigned>> grid(shape.length());
    std::vector<unsigned> filled(shape.length(), 0);
    const unsigned n = shape.size();
    std::function<void(unsigned)> rec = [&](unsigned next) {
        if (next > n) { out.push_back(grid); return; }
        for (std::size_t i = 0; i < shape.length(); ++i) {
            if (filled[i] >= shape.parts()[i]) continue;
            if (i > 0 && filled[i - 1] <= filled[i]) continue; // column would decrease
            grid[i].push_back(next);
            ++filled[i];
            rec(next + 1);
            --filled[i];
            grid[i].pop_back();
        }
    };
    rec(1);
    return out;
}

} // namespace

ModuleRep build_specht_module(const Partition& lambda, std::uint16_t p) {
    const unsigned n = lambda.size();
    if (n < 1) throw domain_error("Specht module needs a non-empty partition");
    if (n > 7) throw capacity_error("Specht construction is capped at n <= 7");

    const std::vector<Tabloid> tabloids = enumerate_tabloids(lambda);
    std::map<Tabloid, std::size_t> index;
    for (std::size_t i = 0; i < tabloids.size(); ++i) index.emplace(tabloids[i], i);
    const std::size_t ambient_dim = tabloids.size();

    // Tabloid permutation module: T.g sends the number x to g(x), i.e.
    // row_of'(y) = row_of(g^{-1}(y)).
    std::vector<GFMatrix> perm_gens;
    for (unsigned i = 1; i < n; ++i) {
        Permutation s = coxeter_generator(i, n);
        GFMatrix a(ambient_dim, ambient_dim, p);
        for (std::size_t t = 0; t < ambient_dim; ++t) {
            Tabloid moved(n);
            for (unsigned y = 0; y < n; ++y) moved[y] = tabloids[t][s.apply0(static_cast<std::uint8_t>(y))];
            a.set(t, index.at(moved), 1);
        }
        perm_gens.push_back(std::move(a));
    }
    ModuleRep ambient(n, p, ambient_dim, std::move(perm_gens));

    // Polytabloids of the standard tableaux: alternating sums over the column
    // stabilizer.
    const auto standards = enumerate_standard(lambda);
    const std::int64_t expected_dim = hook_length_dim(lambda);
    if (static_cast<std::int64_t>(standards.size()) != expected_dim)
        throw integrality_violation("standard tableau enumeration disagrees with hook lengths");

    Partition conj = lambda.conjugate();
    GFMatrix poly(standards.size(), ambient_dim, p);
    for (std::size_t ti = 0; ti < standards.size(); ++ti) {
        const auto& t = standards[ti];
        // entries of each column, top to bottom
        std::vector<std::vector<unsigned>> columns(conj.length());
        for (std::size_t col = 0; col < conj.length(); ++col)
            for (unsigned row = 0; row < conj.parts()[col]; ++row)
                columns[col].push_back(t[row][col]);

        // product over columns of all rearrangements, tracking parity
        std::function<void(std::size_t, int, std::vector<std::vector<unsigned>>&)> walk =
            [&](std::size_t col, int sign, std::vector<std::vector<unsigned>>& arrangement) {
                if (col == columns.size()) {
                    Tabloid row_of(n);
                    for (std::size_t cc = 0; cc < arrangement.size(); ++cc)
                        for (std::size_t row = 0; row < arrangement[cc].size(); ++row)
                            row_of[arrangement[cc][row] - 1] = static_cast<std::uint8_t>(row);
                    std::size_t idx = index.at(row_of);
                    long long cur = poly.get(ti, idx);
                    poly.set_reduced(ti, idx, cur + sign);
                    return;
                }
                std::vector<unsigned> perm = columns[col];
                std::sort(perm.begin(), perm.end());
                do {
                    int inv = 0;
                    for (std::size_t a = 0; a < perm.size(); ++a)
                        for (std::size_t b = a + 1; b < perm.size(); ++b) {
                            // parity relative to the tableau's own column order
                            std::size_t pa = 0, pb = 0;
                            for (std::size_t q = 0; q < columns[col].size(); ++q) {
                                if (columns[col][q] == perm[a]) pa = q;
                                if (columns[col][q] == perm[b]) pb = q;
                            }
                            if (pa > pb) ++inv;
                        }
                    arrangement[col] = perm;
                    walk(col + 1, (inv % 2) ? -sign : sign, arrangement);
                } while (std::next_permutation(perm.begin(), perm.end()));
                arrangement[col].clear();
            };
        std::vector<std::vector<unsigned>> arrangement(columns.size());
        walk(0, 1, arrangement);
    }

    ModuleRep specht = submodule_from_rows(ambient, poly);
    if (static_cast<std::int64_t>(specht.dim()) != expected_dim)
        throw rank_deficient("Specht polytabloids have rank " + std::to_string(specht.dim()) +
                             ", expected " + std::to_string(expected_dim));
    return specht;
}

} // namespace lieblocks
