#include "lieblocks/blocks.hpp"

#include <algorithm>

#include "lieblocks/characters.hpp"
#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/group_algebra.hpp"

namespace lieblocks {

std::vector<BlockLabel> enumerate_blocks(unsigned n, std::uint16_t p) {
    std::map<Partition, BlockLabel> by_core;
    for (const Partition& lambda : partitions(n)) {
        PCoreResult pc = p_core(lambda, p);
        BlockLabel& label = by_core[pc.core];
        label.core = pc.core;
        label.weight = pc.weight;
        label.members.push_back(lambda);
    }
    const Partition principal = principal_core(n, p);
    std::vector<BlockLabel> out;
    out.reserve(by_core.size());
    bool found_principal = false;
    for (auto& [core, label] : by_core) {
        label.is_principal = (core == principal);
        found_principal = found_principal || label.is_principal;
        out.push_back(std::move(label));
    }
    if (!found_principal && n > 0)
        throw separation_failure("no principal block among the cores of degree " +
                                 std::to_string(n));
    return out;
}

CentralIdempotent osima_idempotent(const BlockLabel& label, unsigned n, std::uint16_t p) {
    CentralIdempotent e;
    e.core = label.core;
    const std::int64_t nf = factorial_i64(n);
    for (const CycleType& c : partitions(n)) {
        Rational coeff(0);
        for (const Partition& lambda : label.members) {
            std::int64_t num = checked_mul(dim_irreducible(lambda), mn_character(lambda, c));
            coeff = coeff + Rational(num, nf);
        }
        GFScalar v(0, p);
        v.value = coeff.mod_p(p); // throws p_integrality_violation when not p-integral
        e.coeff_by_class.emplace(c, v);
    }
    return e;
}

IdempotentCheck verify_idempotent_system(const std::vector<CentralIdempotent>& idems, unsigned n,
                                         std::uint16_t p) {
    IdempotentCheck out;
    const std::vector<Partition> classes = partitions(n);

    // (a) theta_lambda(e_B) = sum over classes of e_B(C) * omega_lambda(C)
    for (const Partition& lambda : partitions(n)) {
        const Partition core = p_core(lambda, p).core;
        for (const CentralIdempotent& e : idems) {
            std::uint32_t acc = 0;
            for (const CycleType& c : classes) {
                std::uint16_t theta = GFScalar(central_character_int(lambda, c), p).value;
                acc = (acc + std::uint32_t(e.coeff_by_class.at(c).value) * theta) % p;
            }
            const std::uint16_t expected = (core == e.core) ? 1 : 0;
            if (acc != expected) {
                out.ok = false;
                out.detail = "theta check failed: lambda=" + lambda.str() +
                             " block=" + e.core.str();
                return out;
            }
        }
    }

    // (b) convolution idempotency in the dense group algebra (small n only)
    if (n <= 5) {
        std::vector<GroupAlgebraElement> dense;
        for (const CentralIdempotent& e : idems) {
            GroupAlgebraElement x(n, p);
            for (const auto& [c, v] : e.coeff_by_class) {
                if (v.value == 0) continue;
                for (const Permutation& g : class_elements(c)) x.add_term(g, v.value);
            }
            dense.push_back(std::move(x));
        }
        for (std::size_t i = 0; i < dense.size(); ++i)
            for (std::size_t j = 0; j < dense.size(); ++j) {
                GroupAlgebraElement prod = ga_multiply(dense[i], dense[j]);
                const GroupAlgebraElement& expected =
                    (i == j) ? dense[i] : GroupAlgebraElement::zero(n, p);
                if (!(prod == expected)) {
                    out.ok = false;
                    out.detail = "convolution check failed: blocks " + idems[i].core.str() +
                                 " and " + idems[j].core.str();
                    return out;
                }
            }
        GroupAlgebraElement sum = GroupAlgebraElement::zero(n, p);
        for (const GroupAlgebraElement& e : dense) sum = sum + e;
        if (!(sum == GroupAlgebraElement::identity(n, p))) {
            out.ok = false;
            out.detail = "idempotents do not sum to 1";
            return out;
        }
    }
    return out;
}

BlockSignature separating_signature(unsigned n, std::uint16_t p) {
    BlockSignature sig;
    sig.n = n;
    sig.p = p;

    std::vector<Partition> cores;
    std::map<Partition, Partition> representative; // core -> lex-least member
    for (const Partition& lambda : partitions(n)) {
        Partition core = p_core(lambda, p).core;
        auto [it, inserted] = representative.try_emplace(core, lambda);
        if (inserted) cores.push_back(core);
    }
    std::sort(cores.begin(), cores.end());
    for (const Partition& core : cores) sig.values_by_core.emplace(core, std::vector<std::uint16_t>{});
    if (cores.size() <= 1) return sig;

    std::vector<CycleType> classes = partitions(n);
    std::sort(classes.begin(), classes.end(), [](const CycleType& a, const CycleType& b) {
        std::int64_t sa = conjugacy_class_size(a), sb = conjugacy_class_size(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });

    auto separated = [&] {
        std::vector<std::vector<std::uint16_t>> seen;
        for (const Partition& core : cores) seen.push_back(sig.values_by_core.at(core));
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    };

    for (const CycleType& c : classes) {
        if (separated()) return sig;
        // adopt the class only if it refines some currently equal pair
        bool useful = false;
        std::map<Partition, std::uint16_t> value;
        for (const Partition& core : cores)
            value[core] = GFScalar(central_character_int(representative.at(core), c), p).value;
        for (std::size_t i = 0; i < cores.size() && !useful; ++i)
            for (std::size_t j = i + 1; j < cores.size() && !useful; ++j)
                if (sig.values_by_core.at(cores[i]) == sig.values_by_core.at(cores[j]) &&
                    value.at(cores[i]) != value.at(cores[j]))
                    useful = true;
        if (!useful) continue;
        sig.classes.push_back(c);
        for (const Partition& core : cores) sig.values_by_core.at(core).push_back(value.at(core));
    }
    if (!separated())
        throw separation_failure("central characters failed to separate the cores of degree " +
                                 std::to_string(n) + " mod " + std::to_string(p));
    return sig;
}

namespace {

std::vector<BlockComponent> components_from_bases(const ModuleRep& m,
                                                  std::vector<std::pair<Partition, GFMatrix>> bases) {
    std::sort(bases.begin(), bases.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::size_t total = 0;
    GFMatrix stacked(0, m.dim(), m.modulus());
    for (const auto& [core, basis] : bases) {
        total += basis.rows();
        stacked = stacked.vstack(basis);
    }
    if (total != m.dim())
        throw decomposition_incomplete("component dimensions sum to " + std::to_string(total) +
                                       ", module has dim " + std::to_string(m.dim()));
    // pairwise independence: the components must jointly span in direct sum
    if (rank_of(std::move(stacked)) != m.dim())
        throw decomposition_incomplete("components overlap: joint rank below the module dim");
    std::vector<BlockComponent> out;
    for (auto& [core, basis] : bases) {
        ModuleRep sub = submodule_from_rows(m, basis);
        out.push_back(BlockComponent{core, std::move(basis), std::move(sub)});
    }
    return out;
}

} // namespace

std::vector<BlockComponent> block_split(const ModuleRep& m, const BlockSignature& sig) {
    if (m.degree() != sig.n || m.modulus() != sig.p)
        throw domain_error("block_split: signature built for a different algebra");

    std::vector<std::pair<Partition, GFMatrix>> bases;
    if (sig.classes.empty()) {
        // single block: everything is principal
        for (const auto& [core, values] : sig.values_by_core)
            bases.emplace_back(core, GFMatrix::identity(m.dim(), m.modulus()));
        return components_from_bases(m, std::move(bases));
    }

    std::vector<GFMatrix> operators;
    for (const CycleType& c : sig.classes) operators.push_back(action_of_central_class(m, c));

    for (const auto& [core, values] : sig.values_by_core) {
        GFMatrix component = GFMatrix::identity(m.dim(), m.modulus());
        for (std::size_t ci = 0; ci < sig.classes.size(); ++ci) {
            // rows v with v (A_C - theta I)^dim = 0: left kernel, so transpose
            GFMatrix shifted = add_scaled_identity(
                operators[ci], static_cast<std::uint16_t>((sig.p - values[ci] % sig.p) % sig.p));
            GFMatrix stable = stabilized_kernel(shifted.transposed());
            component = (ci == 0) ? std::move(stable)
                                  : intersect_rowspaces(component, stable);
        }
        bases.emplace_back(core, row_basis(std::move(component)));
    }
    return components_from_bases(m, std::move(bases));
}

std::vector<BlockComponent> block_split_osima(const ModuleRep& m,
                                              const std::vector<CentralIdempotent>& idems) {
    if (m.degree() > 6)
        throw capacity_error("idempotent splitting is capped at n <= 6");
    std::map<CycleType, GFMatrix> class_ops;
    std::vector<std::pair<Partition, GFMatrix>> bases;
    for (const CentralIdempotent& e : idems) {
        GFMatrix op(m.dim(), m.dim(), m.modulus());
        for (const auto& [c, v] : e.coeff_by_class) {
            if (v.value == 0) continue;
            auto it = class_ops.find(c);
            if (it == class_ops.end())
                it = class_ops.emplace(c, action_of_central_class(m, c)).first;
            mat_add_scaled_inplace(op, it->second, v.value);
        }
        // image of the projection = row space of its matrix
        bases.emplace_back(e.core, row_basis(std::move(op)));
    }
    return components_from_bases(m, std::move(bases));
}

void require_same_components(const std::vector<BlockComponent>& a,
                             const std::vector<BlockComponent>& b) {
    if (a.size() != b.size())
        throw method_disagreement("splittings produced different component counts");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i].core == b[i].core))
            throw method_disagreement("component cores differ: " + a[i].core.str() + " vs " +
                                      b[i].core.str());
        if (a[i].basis != b[i].basis)
            throw method_disagreement("component subspaces differ at core " + a[i].core.str());
    }
}

} // namespace lieblocks
