#include "lieblocks/characters.hpp"

#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

#include "lieblocks/errors.hpp"

namespace lieblocks {

namespace {

std::string memo_key(const Partition& lambda, const CycleType& rho) {
    std::string k = lambda.str();
    k += '|';
    k += rho.str();
    return k;
}

// Write-once concurrent memo: recomputation of the same key is allowed, a
// conflicting value for an existing key is not (values are deterministic).
class CharacterMemo {
public:
    bool lookup(const std::string& k, std::int64_t& out) const {
        std::lock_guard<std::mutex> g(mu_);
        auto it = map_.find(k);
        if (it == map_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& k, std::int64_t v) {
        std::lock_guard<std::mutex> g(mu_);
        map_.emplace(k, v);
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, std::int64_t> map_;
};

CharacterMemo& memo() {
    static CharacterMemo m;
    return m;
}

std::int64_t mn_recurse(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() == 0) return 1;
    std::string key = memo_key(lambda, rho);
    std::int64_t cached = 0;
    if (memo().lookup(key, cached)) return cached;

    unsigned r = rho.parts().front();
    std::vector<unsigned> rest(rho.parts().begin() + 1, rho.parts().end());
    CycleType rho_rest{std::move(rest)};

    std::int64_t total = 0;
    for (const RimHook& hook : removable_rim_hooks(lambda, r)) {
        std::int64_t term = mn_recurse(hook.remainder, rho_rest);
        total = (hook.leg % 2) ? checked_sub(total, term) : checked_add(total, term);
    }
    memo().store(key, total);
    return total;
}

} // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& rho) {
    if (lambda.size() != rho.size())
        throw domain_error("character of " + lambda.str() + " at class of different size " +
                           rho.str());
    return mn_recurse(lambda, rho);
}

std::int64_t hook_length_dim(const Partition& lambda) {
    const unsigned n = lambda.size();
    Partition conj = lambda.conjugate();
    std::int64_t hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (unsigned j = 1; j <= lambda.parts()[i]; ++j) {
            std::int64_t arm = lambda.parts()[i] - j;
            std::int64_t leg = conj.parts()[j - 1] - static_cast<std::int64_t>(i) - 1;
            hooks = checked_mul(hooks, arm + leg + 1);
        }
    std::int64_t nf = factorial_i64(n);
    if (nf % hooks != 0)
        throw integrality_violation("hook-length formula produced a non-integer for " +
                                    lambda.str());
    return nf / hooks;
}

std::int64_t standard_tableau_count(const Partition& lambda) {
    // direct enumeration: grow the shape one cell at a time
    std::function<std::int64_t(std::vector<unsigned>&)> rec =
        [&](std::vector<unsigned>& filled) -> std::int64_t {
        bool done = true;
        for (std::size_t i = 0; i < lambda.length(); ++i)
            if (filled[i] < lambda.parts()[i]) done = false;
        if (done) return 1;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < lambda.length(); ++i) {
            if (filled[i] >= lambda.parts()[i]) continue;
            if (i > 0 && filled[i - 1] <= filled[i]) continue;
            ++filled[i];
            total += rec(filled);
            --filled[i];
        }
        return total;
    };
    std::vector<unsigned> filled(lambda.length(), 0);
    return rec(filled);
}

std::int64_t dim_irreducible(const Partition& lambda) {
    std::vector<unsigned> ones(lambda.size(), 1);
    std::int64_t via_mn = mn_character(lambda, CycleType{std::move(ones)});
    std::int64_t via_hooks = hook_length_dim(lambda);
    if (via_mn != via_hooks)
        throw integrality_violation("character dimension " + std::to_string(via_mn) +
                                    " disagrees with hook-length value " +
                                    std::to_string(via_hooks) + " for " + lambda.str());
    return via_mn;
}

std::int64_t conjugacy_class_size(const CycleType& type) {
    const unsigned n = type.size();
    // centralizer order: product over cycle lengths k of k^{m_k} * m_k!
    std::int64_t centralizer = 1;
    unsigned run = 0, prev = 0;
    for (unsigned v : type.parts()) {
        run = (v == prev) ? run + 1 : 1;
        prev = v;
        centralizer = checked_mul(centralizer, v);
        centralizer = checked_mul(centralizer, run);
    }
    return factorial_i64(n) / centralizer;
}

std::int64_t central_character_int(const Partition& lambda, const CycleType& c) {
    if (lambda.size() != c.size())
        throw domain_error("central character needs |lambda| = |C|");
    Rational omega(checked_mul(conjugacy_class_size(c), mn_character(lambda, c)),
                   dim_irreducible(lambda));
    if (!omega.is_integer())
        throw integrality_violation("central character " + omega.str() + " of " + lambda.str() +
                                    " at " + c.str() + " is not an integer");
    return omega.num();
}

GFScalar central_character(const Partition& lambda, const CycleType& c, std::uint16_t p) {
    return GFScalar(central_character_int(lambda, c), p);
}

} // namespace lieblocks
