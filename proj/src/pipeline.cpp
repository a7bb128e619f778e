#include "lieblocks/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "lieblocks/checked_arith.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/group_algebra.hpp"

namespace lieblocks {

bool omega_square_identity_holds(unsigned n, std::uint16_t p) {
    GroupAlgebraElement wz = omega_element(n, 0);
    if (!(ga_multiply(wz, wz) == wz.scaled(n))) return false;
    GroupAlgebraElement wp = omega_element(n, p);
    return ga_multiply(wp, wp) == wp.scaled(n);
}

ModuleRep lie_module_cached(unsigned n, std::uint16_t p,
                            const std::optional<std::string>& cache_dir) {
    if (!cache_dir) return build_lie_module(n, p);
    std::filesystem::create_directories(*cache_dir);
    std::filesystem::path file =
        std::filesystem::path(*cache_dir) /
        ("lie_n" + std::to_string(n) + "_p" + std::to_string(p) + ".snmod");
    if (std::filesystem::exists(file)) return load_module(file.string());
    ModuleRep lie = build_lie_module(n, p);
    save_module(file.string(), lie);
    return lie;
}

VerificationReport run_verification(const VerifyOptions& options) {
    const auto t0 = std::chrono::steady_clock::now();
    const unsigned n = options.n;
    const std::uint16_t p = options.p;
    if (n < 2 || n > 8)
        throw capacity_error("verification supports 2 <= n <= 8, got n = " + std::to_string(n));
    if (!is_prime(p)) throw domain_error("p must be prime, got " + std::to_string(p));

    VerificationReport report;
    report.p = p;
    report.n = n;
    report.method = split_method_name(options.method);

    ModuleRep lie = lie_module_cached(n, p, options.cache_dir);
    report.dim_lie = lie.dim();
    if (report.dim_lie != static_cast<std::size_t>(factorial_i64(n - 1)))
        throw rank_deficient("Lie module dimension is not (n-1)!");

    report.omega_square_ok = omega_square_identity_holds(n, p);
    report.restriction_free_ok = restriction_free_rank_check(lie, p);

    const std::vector<BlockLabel> labels = enumerate_blocks(n, p);

    std::vector<BlockComponent> components;
    switch (options.method) {
        case SplitMethod::Eigenspace:
            components = block_split(lie, separating_signature(n, p));
            break;
        case SplitMethod::Osima: {
            std::vector<CentralIdempotent> idems;
            for (const BlockLabel& label : labels) idems.push_back(osima_idempotent(label, n, p));
            components = block_split_osima(lie, idems);
            break;
        }
        case SplitMethod::Both: {
            components = block_split(lie, separating_signature(n, p));
            if (n <= 6) {
                std::vector<CentralIdempotent> idems;
                for (const BlockLabel& label : labels)
                    idems.push_back(osima_idempotent(label, n, p));
                require_same_components(components, block_split_osima(lie, idems));
            }
            break;
        }
    }

    const SubgroupGens sylow = sylow_generators(n, p);
    report.theorem_holds = true;
    for (const BlockLabel& label : labels) {
        BlockRow row;
        row.core = label.core;
        row.weight = label.weight;
        row.members = label.members;
        row.is_principal = label.is_principal;
        for (const BlockComponent& comp : components) {
            if (!(comp.core == label.core)) continue;
            ProjectivityVerdict verdict = sylow_projectivity(comp.module, sylow);
            row.component_dim = verdict.dim;
            row.projective = verdict.projective;
            row.free_rank = verdict.free_rank;
        }
        if (!row.is_principal && !row.projective) report.theorem_holds = false;
        report.blocks.push_back(std::move(row));
    }

    report.elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

std::string format_block_table(unsigned n, std::uint16_t p) {
    std::ostringstream os;
    const std::vector<BlockLabel> labels = enumerate_blocks(n, p);
    os << "blocks of degree " << n << " in characteristic " << p << ": " << labels.size()
       << "\n";
    os << std::left << std::setw(16) << "core" << std::setw(8) << "weight" << std::setw(10)
       << "members" << "principal\n";
    for (const BlockLabel& label : labels) {
        std::string core = label.core.is_empty() ? "∅" : label.core.str();
        std::size_t display = label.core.is_empty() ? 1 : core.size();
        core += std::string(display < 16 ? 16 - display : 1, ' ');
        std::string members;
        for (std::size_t i = 0; i < label.members.size(); ++i) {
            if (i) members += " ";
            members += "(" + label.members[i].str() + ")";
        }
        os << core << std::left << std::setw(8) << label.weight << std::setw(10)
           << label.members.size() << (label.is_principal ? "*  " : "   ") << members << "\n";
    }
    return os.str();
}

} // namespace lieblocks
