#include "lieblocks/partition.hpp"

#include <algorithm>
#include <functional>

#include "lieblocks/errors.hpp"
#include "lieblocks/gf_scalar.hpp"

namespace lieblocks {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    size_ = 0;
    for (unsigned v : parts_) size_ += v;
}

Partition Partition::conjugate() const {
    std::vector<unsigned> c;
    if (parts_.empty()) return Partition{};
    c.assign(parts_[0], 0);
    for (unsigned v : parts_)
        for (unsigned j = 0; j < v; ++j) ++c[j];
    return Partition(std::move(c));
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<unsigned> parts;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
    while (i < n) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw parse_error("expected digit in partition", i);
        unsigned long v = 0;
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + static_cast<unsigned long>(text[i] - '0');
            if (v > 1000) throw parse_error("partition part too large", start);
            ++i;
        }
        if (v == 0) throw parse_error("zero part in partition", start);
        if (!parts.empty() && parts.back() < v)
            throw parse_error("parts not weakly decreasing", start);
        parts.push_back(static_cast<unsigned>(v));
        while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
        if (i < n) {
            if (text[i] != ',') throw parse_error("expected ',' between parts", i);
            ++i;
            while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
            if (i == n) throw parse_error("trailing ',' in partition", i - 1);
        }
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> cur;
    // first part ascending, remainder recursively in the same order: this is
    // lexicographic order on part sequences
    std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned min_part) {
        if (left == 0) {
            std::vector<unsigned> parts(cur.rbegin(), cur.rend());
            out.push_back(Partition(std::move(parts)));
            return;
        }
        for (unsigned k = min_part; k <= left; ++k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    rec(n, 1);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.parts() < b.parts();
    });
    return out;
}

std::uint64_t partition_count(unsigned n) {
    // Euler's coin-counting recurrence, independent of the generator above.
    std::vector<std::uint64_t> dp(n + 1, 0);
    dp[0] = 1;
    for (unsigned coin = 1; coin <= n; ++coin)
        for (unsigned v = coin; v <= n; ++v) dp[v] += dp[v - coin];
    return dp[n];
}

std::vector<RimHook> removable_rim_hooks(const Partition& lambda, unsigned r) {
    if (r < 1) throw domain_error("rim hook length must be >= 1");
    std::vector<RimHook> out;
    const auto& parts = lambda.parts();
    const std::size_t ell = parts.size();
    if (ell == 0) return out;

    // beta-numbers with one bead per row; a removable r-hook is a bead whose
    // position r slots lower is free
    std::vector<long> beta(ell);
    for (std::size_t i = 0; i < ell; ++i)
        beta[i] = static_cast<long>(parts[i]) + static_cast<long>(ell - 1 - i);

    for (std::size_t i = 0; i < ell; ++i) {
        long target = beta[i] - static_cast<long>(r);
        if (target < 0) continue;
        bool occupied = false;
        unsigned between = 0;
        for (std::size_t j = 0; j < ell; ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;

        std::vector<long> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<unsigned> mu_parts(ell);
        for (std::size_t j = 0; j < ell; ++j)
            mu_parts[j] = static_cast<unsigned>(nb[j] - static_cast<long>(ell - 1 - j));
        Partition mu(std::move(mu_parts));

        RimHook hook;
        hook.length = r;
        hook.leg = between;
        hook.remainder = mu;
        for (unsigned row = 1; row <= ell; ++row) {
            unsigned lo = mu.part(row - 1), hi = lambda.part(row - 1);
            for (unsigned col = lo + 1; col <= hi; ++col) hook.cells.emplace_back(row, col);
        }
        out.push_back(std::move(hook));
    }
    std::sort(out.begin(), out.end(), [](const RimHook& a, const RimHook& b) {
        return a.cells.front() < b.cells.front();
    });
    return out;
}

AbacusConfig AbacusConfig::from_partition(const Partition& lambda, unsigned bead_count,
                                          unsigned runners) {
    if (bead_count < lambda.length())
        throw domain_error("abacus needs at least one bead per part");
    AbacusConfig a;
    a.bead_count = bead_count;
    a.runners = runners;
    for (unsigned i = 0; i < bead_count; ++i)
        a.beads.insert(lambda.part(i) + (bead_count - 1 - i));
    return a;
}

Partition AbacusConfig::to_partition() const {
    std::vector<unsigned> beta(beads.rbegin(), beads.rend());
    std::vector<unsigned> parts(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        parts[i] = beta[i] - static_cast<unsigned>(beta.size() - 1 - i);
    return Partition(std::move(parts));
}

unsigned AbacusConfig::slide_up() {
    unsigned moves = 0;
    for (unsigned r = 0; r < runners; ++r) {
        std::vector<unsigned> on_runner;
        for (unsigned b : beads)
            if (b % runners == r) on_runner.push_back(b);
        for (std::size_t k = 0; k < on_runner.size(); ++k) {
            unsigned target = r + static_cast<unsigned>(k) * runners;
            moves += (on_runner[k] - target) / runners;
        }
        for (unsigned b : on_runner) beads.erase(b);
        for (std::size_t k = 0; k < on_runner.size(); ++k)
            beads.insert(r + static_cast<unsigned>(k) * runners);
    }
    return moves;
}

PCoreResult p_core(const Partition& lambda, unsigned p) {
    if (!is_prime(p)) throw domain_error("p-core needs a prime p");
    unsigned beads = std::max<unsigned>(static_cast<unsigned>(lambda.length()),
                                        std::max(1u, lambda.size()));
    AbacusConfig a = AbacusConfig::from_partition(lambda, beads, p);
    unsigned weight = a.slide_up();
    return PCoreResult{a.to_partition(), weight};
}

Partition principal_core(unsigned n, unsigned p) {
    unsigned r = n % p;
    return r == 0 ? Partition{} : Partition({r});
}

bool is_p_regular(const Partition& lambda, unsigned p) {
    unsigned run = 0, prev = 0;
    for (unsigned v : lambda.parts()) {
        run = (v == prev) ? run + 1 : 1;
        prev = v;
        if (run >= p) return false;
    }
    return true;
}

} // namespace lieblocks
