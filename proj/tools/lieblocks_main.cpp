// Command-line front end: theorem verification pipeline plus the block,
// p-core and character calculators.
//
// Exit codes: 0 success (and, for verify, theorem holds); 1 theorem violated;
// 2 usage or capacity error; 3 internal assertion (integrality, separation,
// rank or cross-method failures).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lieblocks/characters.hpp"
#include "lieblocks/errors.hpp"
#include "lieblocks/pipeline.hpp"

namespace {

int run(int argc, char** argv) {
    CLI::App app{"block decomposition and projectivity analysis of the Lie module "
                 "of the symmetric group over GF(p)"};
    app.require_subcommand(1);

    unsigned n = 0;
    unsigned p = 0;
    std::string method = "eigenspace";
    std::string json_path;
    std::string cache_dir;
    std::string lambda_text;
    std::string rho_text;

    CLI::App* verify = app.add_subcommand("verify", "run the full verification pipeline");
    verify->add_option("--p", p, "field characteristic (prime)")->required();
    verify->add_option("--n", n, "degree of the symmetric group")->required();
    verify->add_option("--method", method, "eigenspace | osima | both")
        ->check(CLI::IsMember({"eigenspace", "osima", "both"}));
    verify->add_option("--json", json_path, "write the report as JSON to this path");
    verify->add_option("--cache", cache_dir, "directory for SNMOD1 module caches");

    CLI::App* blocks = app.add_subcommand("blocks", "print the block census for (p, n)");
    blocks->add_option("--p", p, "field characteristic (prime)")->required();
    blocks->add_option("--n", n, "degree of the symmetric group")->required();

    CLI::App* core = app.add_subcommand("core", "p-core and weight of a partition");
    core->add_option("--lambda", lambda_text, "partition, e.g. 3,1")->required();
    core->add_option("--p", p, "prime")->required();

    CLI::App* chr = app.add_subcommand("char", "irreducible character value chi^lambda(rho)");
    chr->add_option("--lambda", lambda_text, "partition labelling the character")->required();
    chr->add_option("--rho", rho_text, "cycle type of the class")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (verify->parsed()) {
        lieblocks::VerifyOptions options;
        options.p = static_cast<std::uint16_t>(p);
        options.n = n;
        options.method = lieblocks::split_method_from_name(method);
        if (!cache_dir.empty()) options.cache_dir = cache_dir;
        lieblocks::VerificationReport report = lieblocks::run_verification(options);
        std::cout << lieblocks::format_report(report);
        if (!json_path.empty()) {
            std::ofstream os(json_path);
            if (!os) throw lieblocks::domain_error("cannot write JSON report to " + json_path);
            os << lieblocks::to_json_string(report);
        }
        bool ok = report.theorem_holds && report.omega_square_ok && report.restriction_free_ok;
        return ok ? 0 : 1;
    }
    if (blocks->parsed()) {
        if (!lieblocks::is_prime(p)) throw lieblocks::domain_error("p must be prime");
        std::cout << lieblocks::format_block_table(n, static_cast<std::uint16_t>(p));
        return 0;
    }
    if (core->parsed()) {
        if (!lieblocks::is_prime(p)) throw lieblocks::domain_error("p must be prime");
        lieblocks::Partition lambda = lieblocks::Partition::parse(lambda_text);
        lieblocks::PCoreResult c = lieblocks::p_core(lambda, p);
        std::cout << "core: " << (c.core.is_empty() ? "∅" : c.core.str())
                  << "\nweight: " << c.weight << "\n";
        return 0;
    }
    if (chr->parsed()) {
        lieblocks::Partition lambda = lieblocks::Partition::parse(lambda_text);
        lieblocks::CycleType rho = lieblocks::CycleType::parse(rho_text);
        std::cout << lieblocks::mn_character(lambda, rho) << "\n";
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lieblocks::sentinel_error& e) {
        std::cerr << "internal assertion failed: " << e.what() << "\n";
        return 3;
    } catch (const lieblocks::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const lieblocks::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
}
