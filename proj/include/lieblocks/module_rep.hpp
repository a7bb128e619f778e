#pragma once

#include <cstdint>
#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lieblocks/gf_linalg.hpp"
#include "lieblocks/gf_matrix.hpp"
#include "lieblocks/partition.hpp"
#include "lieblocks/permutation.hpp"
#include "lieblocks/sylow.hpp"

namespace lieblocks {

/// Basis of the module inside some ambient coordinate space (the group
/// algebra for the Lie module, the parent module for split components),
/// kept in reduced row-echelon form with its pivot columns.
struct ModuleEmbedding {
    GFMatrix basis;
    std::vector<std::size_t> pivots;
};

/// A right module over the group algebra of the symmetric group of degree n,
/// given concretely by the action matrices of the Coxeter generators
/// s_1, ..., s_{n-1}.  Elements are row vectors; g acts by v -> v * A(g),
/// so A(gh) = A(g) A(h).
///
/// Immutable after construction; the word-product cache is internal and
/// behaves as a concurrent map with idempotent inserts.
class ModuleRep {
public:
    ModuleRep(unsigned n, std::uint16_t p, std::size_t dim, std::vector<GFMatrix> gen_actions,
              std::optional<ModuleEmbedding> embedding = std::nullopt);

    ModuleRep(const ModuleRep& o);            // fresh action cache
    ModuleRep& operator=(const ModuleRep& o); // fresh action cache
    ModuleRep(ModuleRep&&) = default;
    ModuleRep& operator=(ModuleRep&&) = default;

    unsigned degree() const { return n_; }
    std::uint16_t modulus() const { return p_; }
    std::size_t dim() const { return dim_; }

    /// Action of s_i, 1 <= i <= n-1.
    const GFMatrix& generator_action(unsigned i) const;
    const std::vector<GFMatrix>& generator_actions() const { return gens_; }

    const std::optional<ModuleEmbedding>& embedding() const { return embedding_; }
    void drop_embedding() { embedding_.reset(); }

    /// Action matrix of an arbitrary permutation: the product of generator
    /// actions along a reduced word, with recently used elements memoized.
    GFMatrix action_of_perm(const Permutation& g) const;

private:
    unsigned n_;
    std::uint16_t p_;
    std::size_t dim_;
    std::vector<GFMatrix> gens_;
    std::optional<ModuleEmbedding> embedding_;

    // LRU cache of action matrices keyed by Lehmer rank, bounded in bytes.
    struct CacheEntry {
        GFMatrix mat;
        std::list<std::uint64_t>::iterator lru_it;
    };
    struct ActionCache {
        std::mutex mu;
        std::map<std::uint64_t, CacheEntry> entries;
        std::list<std::uint64_t> lru;
        std::size_t bytes = 0;
    };
    GFMatrix action_cached(const Permutation& g) const;
    mutable std::unique_ptr<ActionCache> cache_;
};

/// Sum of action matrices over the conjugacy class of cycle type c.
/// Commutes with every generator action.  Transposition classes use a
/// conjugation recurrence; other classes share word prefixes through a trie.
GFMatrix action_of_central_class(const ModuleRep& m, const CycleType& c,
                                 bool allow_fast_paths = true);

/// The group algebra acting on itself: dim = n!, permutation matrices.
ModuleRep build_regular_module(unsigned n, std::uint16_t p);

/// Specht module for lambda over GF(p): the span of the standard polytabloids
/// inside the tabloid permutation module.  Its dimension is the number of
/// standard Young tableaux over every field.
ModuleRep build_specht_module(const Partition& lambda, std::uint16_t p);

/// The Lie module: the right ideal generated by the omega element, with the
/// translates { omega * sigma : sigma fixing n } as spanning set.  The
/// spanning matrix having full rank (n-1)! is asserted, and invariance of its
/// row space under every generator is certified exactly before the action
/// matrices are read off the echelon basis.
ModuleRep build_lie_module(unsigned n, std::uint16_t p);
ModuleRep build_lie_module(unsigned n, std::uint16_t p, bool keep_embedding);

/// New module on an invariant row space, actions solved against the echelon
/// basis of `rows`.  Throws not_invariant when a generator leaves the space.
ModuleRep submodule_from_rows(const ModuleRep& m, const GFMatrix& rows);

/// Outcome of the norm-rank projectivity test over a p-subgroup P: with
/// N = sum of action(g) over g in P, the module is free over FP (projective)
/// exactly when dim = |P| * rank(N), and rank(N) is the free rank.
struct ProjectivityVerdict {
    std::size_t dim = 0;
    std::uint64_t sylow_order = 1;
    std::size_t norm_rank = 0;
    bool projective = false;
    std::size_t free_rank = 0;
};

/// Norm test from an enumerated subgroup; the norm is accumulated along the
/// closure's generating tree (each element's matrix is its parent's times one
/// generator).  The element list must start at the identity.
ProjectivityVerdict norm_rank_projectivity(const ModuleRep& m, const SubgroupClosure& subgroup);

/// Norm operator over a Sylow subgroup in product form: the norm of an
/// iterated wreath tower factors as (product of sub-tower norms) times the
/// geometric sum of the block shift, which needs far fewer dim^3 products
/// than summing over all |P| elements.
GFMatrix subgroup_norm_operator(const ModuleRep& m, const SubgroupGens& gens);

/// Norm test via the factored operator.
ProjectivityVerdict sylow_projectivity(const ModuleRep& m, const SubgroupGens& gens);

/// Checks that the restriction to the subgroup fixing the last point is free:
/// the norm test over a Sylow p-subgroup of that subgroup must report
/// projective.  (Freeness of rank one over the whole subgroup algebra is
/// certified at construction time by the spanning set being a basis.)
bool restriction_free_rank_check(const ModuleRep& lie, std::uint16_t p);

/// Exact matrix check of the involution, braid and commutation relations.
bool generator_relations_hold(const ModuleRep& m);

/// Binary cache ("SNMOD1" magic, then n, p, dim and the packed row-major
/// generator matrices, all little-endian).
void save_module(const std::string& path, const ModuleRep& m);
ModuleRep load_module(const std::string& path);

} // namespace lieblocks
