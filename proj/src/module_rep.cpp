#include "lieblocks/module_rep.hpp"


#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/group_algebra.hpp"

namespace lieblocks {

namespace {

constexpr std::size_t kActionCacheBytes = std::size_t(768) << 20;

std::size_t matrix_bytes(const GFMatrix& m) {
    return m.packed() ? m.rows() * m.words_per_row() * 8 : m.rows() * m.cols();
}

} // namespace

ModuleRep::ModuleRep(unsigned n, std::uint16_t p, std::size_t dim,
                     std::vector<GFMatrix> gen_actions, std::optional<ModuleEmbedding> embedding)
    : n_(n), p_(p), dim_(dim), gens_(std::move(gen_actions)),
      embedding_(std::move(embedding)), cache_(std::make_unique<ActionCache>()) {
    if (n_ < 1) throw domain_error("module degree must be >= 1");
    if (gens_.size() + 1 != n_)
        throw domain_error("module needs n-1 generator actions, got " +
                           std::to_string(gens_.size()));
    for (const GFMatrix& g : gens_) {
        if (g.rows() != dim_ || g.cols() != dim_ || g.modulus() != p_)
            throw domain_error("generator action has wrong shape or modulus");
    }
}

ModuleRep::ModuleRep(const ModuleRep& o)
    : n_(o.n_), p_(o.p_), dim_(o.dim_), gens_(o.gens_), embedding_(o.embedding_),
      cache_(std::make_unique<ActionCache>()) {}

ModuleRep& ModuleRep::operator=(const ModuleRep& o) {
    if (this == &o) return *this;
    n_ = o.n_;
    p_ = o.p_;
    dim_ = o.dim_;
    gens_ = o.gens_;
    embedding_ = o.embedding_;
    cache_ = std::make_unique<ActionCache>();
    return *this;
}

const GFMatrix& ModuleRep::generator_action(unsigned i) const {
    if (i < 1 || i >= n_) throw domain_error("generator index out of range");
    return gens_[i - 1];
}

GFMatrix ModuleRep::action_of_perm(const Permutation& g) const {
    if (g.degree() != n_) throw domain_error("action_of_perm: degree mismatch");
    return action_cached(g);
}

GFMatrix ModuleRep::action_cached(const Permutation& g) const {
    if (g.is_identity()) return GFMatrix::identity(dim_, p_);
    std::vector<unsigned> word = coxeter_word(g);
    if (word.size() == 1) return gens_[word[0] - 1];

    const std::uint64_t key = lehmer_rank(g);
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end()) {
            cache_->lru.splice(cache_->lru.begin(), cache_->lru, it->second.lru_it);
            return it->second.mat;
        }
    }

    // peel the last letter; prefixes shared between nearby elements stay hot
    Permutation prefix = compose(g, coxeter_generator(word.back(), n_));
    GFMatrix result = mat_mul(action_cached(prefix), gens_[word.back() - 1]);

    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->entries.find(key);
    if (it == cache_->entries.end()) {
        cache_->lru.push_front(key);
        cache_->bytes += matrix_bytes(result);
        cache_->entries.emplace(key, CacheEntry{result, cache_->lru.begin()});
        while (cache_->bytes > kActionCacheBytes && cache_->entries.size() > 1) {
            std::uint64_t victim = cache_->lru.back();
            cache_->lru.pop_back();
            auto vit = cache_->entries.find(victim);
            cache_->bytes -= matrix_bytes(vit->second.mat);
            cache_->entries.erase(vit);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Class-sum operators
// ---------------------------------------------------------------------------

namespace {

// Sum over { (a b) : a < b <= n } of action matrices, by the conjugation
// recurrence R_m = A(s_{m-1}) R_{m-1} A(s_{m-1}) + A(s_{m-1}) where
// R_m = sum over a < m of A((a m)).
GFMatrix transposition_class_action(const ModuleRep& m) {
    const unsigned n = m.degree();
    GFMatrix r = m.generator_action(1);
    GFMatrix total = r;
    for (unsigned k = 3; k <= n; ++k) {
        const GFMatrix& s = m.generator_action(k - 1);
        r = mat_mul(mat_mul(s, r), s);
        mat_add_inplace(r, s);
        mat_add_inplace(total, r);
    }
    return total;
}

struct TrieNode {
    unsigned gen = 0;
    bool terminal = false;
    std::vector<std::size_t> children;
};

void trie_walk(const ModuleRep& m, const std::vector<TrieNode>& trie, std::size_t node,
               const GFMatrix& mat, GFMatrix& acc) {
    if (trie[node].terminal) mat_add_inplace(acc, mat);
    for (std::size_t child : trie[node].children)
        trie_walk(m, trie, child, mat_mul(mat, m.generator_action(trie[child].gen)), acc);
}

GFMatrix class_action_via_words(const ModuleRep& m, const CycleType& c) {
    std::vector<TrieNode> trie(1);
    bool identity_in_class = false;
    for (const Permutation& g : class_elements(c)) {
        if (g.is_identity()) { identity_in_class = true; continue; }
        std::size_t node = 0;
        for (unsigned letter : coxeter_word(g)) {
            std::size_t next = trie.size();
            bool found = false;
            for (std::size_t ch : trie[node].children)
                if (trie[ch].gen == letter) { next = ch; found = true; break; }
            if (!found) {
                trie.push_back(TrieNode{letter, false, {}});
                trie[node].children.push_back(next);
            }
            node = next;
        }
        trie[node].terminal = true;
    }
    GFMatrix acc(m.dim(), m.dim(), m.modulus());
    if (identity_in_class) acc = GFMatrix::identity(m.dim(), m.modulus());
    for (std::size_t child : trie[0].children)
        trie_walk(m, trie, child, m.generator_action(trie[child].gen), acc);
    return acc;
}

} // namespace

GFMatrix action_of_central_class(const ModuleRep& m, const CycleType& c, bool allow_fast_paths) {
    if (c.size() != m.degree())
        throw domain_error("class cycle type must be a partition of the module degree");
    const unsigned n = m.degree();
    CycleType transpositions = [&] {
        std::vector<unsigned> parts(n - 1, 1);
        if (!parts.empty()) parts[0] = 2;
        return CycleType{std::move(parts)};
    }();
    if (allow_fast_paths && n >= 2 && c == transpositions) return transposition_class_action(m);
    return class_action_via_words(m, c);
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

ModuleRep build_regular_module(unsigned n, std::uint16_t p) {
    if (n < 1 || n > 8) throw capacity_error("regular module supported for 1 <= n <= 8");
    const std::size_t dim = static_cast<std::size_t>(factorial_i64(n));
    std::vector<GFMatrix> gens;
    for (unsigned i = 1; i < n; ++i) {
        Permutation s = coxeter_generator(i, n);
        GFMatrix a(dim, dim, p);
        for (std::size_t r = 0; r < dim; ++r)
            a.set(r, static_cast<std::size_t>(lehmer_rank(compose(lehmer_unrank(r, n), s))), 1);
        gens.push_back(std::move(a));
    }
    return ModuleRep(n, p, dim, std::move(gens));
}

ModuleRep submodule_from_rows(const ModuleRep& m, const GFMatrix& rows) {
    if (rows.cols() != m.dim()) throw domain_error("submodule rows have wrong length");
    if (rows.modulus() != m.modulus()) throw domain_error("submodule rows: modulus mismatch");
    RrefResult rr = rref(rows);
    GFMatrix basis = rr.r.row_slice(0, rr.rank);
    const std::size_t k = rr.rank;

    std::vector<GFMatrix> gens;
    for (unsigned i = 1; i < m.degree(); ++i) {
        GFMatrix moved = mat_mul(basis, m.generator_action(i)); // k x dim
        GFMatrix act(k, k, m.modulus(),
                     basis.packed() ? GFMatrix::Storage::Packed : GFMatrix::Storage::Bytes);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c) act.set(r, c, moved.get(r, rr.pivots[c]));
        if (mat_mul(act, basis) != moved)
            throw not_invariant("row space not invariant under generator " + std::to_string(i));
        gens.push_back(std::move(act));
    }
    return ModuleRep(m.degree(), m.modulus(), k, std::move(gens),
                     ModuleEmbedding{std::move(basis), std::move(rr.pivots)});
}

// ---------------------------------------------------------------------------
// Norm-rank projectivity
// ---------------------------------------------------------------------------

namespace {

ProjectivityVerdict verdict_from_norm(const ModuleRep& m, const GFMatrix& norm,
                                      std::uint64_t order) {
    ProjectivityVerdict v;
    v.dim = m.dim();
    v.sylow_order = order;
    v.norm_rank = rank_of(norm);
    v.free_rank = v.norm_rank;
    v.projective = (static_cast<std::uint64_t>(v.dim) == order * v.norm_rank);
    return v;
}

} // namespace

ProjectivityVerdict norm_rank_projectivity(const ModuleRep& m, const SubgroupClosure& subgroup) {
    if (subgroup.elements.empty() || !subgroup.elements.front().is_identity())
        throw domain_error("subgroup element list must start with the identity");
    const std::size_t count = subgroup.elements.size();

    std::vector<GFMatrix> genmats;
    for (const Permutation& g : subgroup.gens_used) genmats.push_back(m.action_of_perm(g));

    std::vector<GFMatrix> mats(count);
    mats[0] = GFMatrix::identity(m.dim(), m.modulus());
    GFMatrix norm = mats[0];
    for (std::size_t i = 1; i < count; ++i) {
        mats[i] = mat_mul(mats[subgroup.parent[i]], genmats[subgroup.gen_index[i]]);
        mat_add_inplace(norm, mats[i]);
    }
    return verdict_from_norm(m, norm, count);
}

namespace {

GFMatrix tower_norm(const ModuleRep& m, unsigned start, unsigned level, unsigned p) {
    if (level == 0) return GFMatrix::identity(m.dim(), m.modulus());
    unsigned block = 1;
    for (unsigned i = 0; i < level; ++i) block *= p;
    const unsigned sub = block / p;

    GFMatrix base = tower_norm(m, start, level - 1, p);
    for (unsigned k = 1; k < p; ++k)
        base = mat_mul(base, tower_norm(m, start + k * sub, level - 1, p));

    GFMatrix shift = m.action_of_perm(block_shift(start, block, sub, m.degree()));
    GFMatrix shift_sum = GFMatrix::identity(m.dim(), m.modulus());
    GFMatrix power = GFMatrix::identity(m.dim(), m.modulus());
    for (unsigned j = 1; j < p; ++j) {
        power = mat_mul(power, shift);
        mat_add_inplace(shift_sum, power);
    }
    return mat_mul(base, shift_sum);
}

} // namespace

GFMatrix subgroup_norm_operator(const ModuleRep& m, const SubgroupGens& gens) {
    if (gens.n != m.degree()) throw domain_error("subgroup degree mismatch");
    GFMatrix norm = GFMatrix::identity(m.dim(), m.modulus());
    for (const WreathTower& tower : gens.towers) {
        if (tower.level == 0) continue;
        norm = mat_mul(norm, tower_norm(m, tower.start, tower.level, gens.p));
    }
    return norm;
}

ProjectivityVerdict sylow_projectivity(const ModuleRep& m, const SubgroupGens& gens) {
    return verdict_from_norm(m, subgroup_norm_operator(m, gens), gens.expected_order);
}

bool restriction_free_rank_check(const ModuleRep& lie, std::uint16_t p) {
    const unsigned n = lie.degree();
    if (n < 2) return true;
    // Sylow subgroup of the point stabilizer of 1, embedded on {2..n} (the
    // copy the free restriction basis lives over).
    SubgroupGens sub = sylow_generators(n - 1, p);
    sub.n = n;
    for (Permutation& g : sub.generators) g = g.shifted(n, 1);
    for (WreathTower& t : sub.towers) t.start += 1;
    return sylow_projectivity(lie, sub).projective;
}

bool generator_relations_hold(const ModuleRep& m) {
    const unsigned n = m.degree();
    const GFMatrix eye = GFMatrix::identity(m.dim(), m.modulus());
    for (unsigned i = 1; i < n; ++i) {
        const GFMatrix& a = m.generator_action(i);
        if (mat_mul(a, a) != eye) return false;
    }
    for (unsigned i = 1; i + 1 < n; ++i) {
        const GFMatrix& a = m.generator_action(i);
        const GFMatrix& b = m.generator_action(i + 1);
        GFMatrix ab = mat_mul(a, b);
        if (mat_mul(ab, a) != mat_mul(mat_mul(b, a), b)) return false;
    }
    for (unsigned i = 1; i < n; ++i)
        for (unsigned j = i + 2; j < n; ++j) {
            const GFMatrix& a = m.generator_action(i);
            const GFMatrix& b = m.generator_action(j);
            if (mat_mul(a, b) != mat_mul(b, a)) return false;
        }
    return true;
}

} // namespace lieblocks
