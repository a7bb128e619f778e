#include "lieblocks/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "lieblocks/errors.hpp"

namespace lieblocks {

std::string split_method_name(SplitMethod m) {
    switch (m) {
        case SplitMethod::Eigenspace: return "eigenspace";
        case SplitMethod::Osima: return "osima";
        case SplitMethod::Both: return "both";
    }
    return "eigenspace";
}

SplitMethod split_method_from_name(const std::string& name) {
    if (name == "eigenspace") return SplitMethod::Eigenspace;
    if (name == "osima") return SplitMethod::Osima;
    if (name == "both") return SplitMethod::Both;
    throw domain_error("unknown split method: " + name);
}

namespace {

nlohmann::json row_to_json(const BlockRow& row) {
    nlohmann::json members = nlohmann::json::array();
    for (const Partition& m : row.members) members.push_back(m.str());
    return nlohmann::json{{"core", row.core.str()},
                          {"weight", row.weight},
                          {"members", members},
                          {"is_principal", row.is_principal},
                          {"component_dim", row.component_dim},
                          {"projective", row.projective},
                          {"free_rank", row.free_rank}};
}

BlockRow row_from_json(const nlohmann::json& j) {
    BlockRow row;
    row.core = Partition::parse(j.at("core").get<std::string>());
    row.weight = j.at("weight").get<unsigned>();
    for (const auto& m : j.at("members")) row.members.push_back(Partition::parse(m.get<std::string>()));
    row.is_principal = j.at("is_principal").get<bool>();
    row.component_dim = j.at("component_dim").get<std::size_t>();
    row.projective = j.at("projective").get<bool>();
    row.free_rank = j.at("free_rank").get<std::size_t>();
    return row;
}

} // namespace

std::string to_json_string(const VerificationReport& report) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const BlockRow& row : report.blocks) blocks.push_back(row_to_json(row));
    nlohmann::json j{{"p", report.p},
                     {"n", report.n},
                     {"dim_lie", report.dim_lie},
                     {"omega_square_ok", report.omega_square_ok},
                     {"restriction_free_ok", report.restriction_free_ok},
                     {"blocks", blocks},
                     {"theorem_holds", report.theorem_holds},
                     {"elapsed", report.elapsed},
                     {"method", report.method}};
    return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    VerificationReport r;
    r.p = j.at("p").get<std::uint16_t>();
    r.n = j.at("n").get<unsigned>();
    r.dim_lie = j.at("dim_lie").get<std::size_t>();
    r.omega_square_ok = j.at("omega_square_ok").get<bool>();
    r.restriction_free_ok = j.at("restriction_free_ok").get<bool>();
    for (const auto& row : j.at("blocks")) r.blocks.push_back(row_from_json(row));
    r.theorem_holds = j.at("theorem_holds").get<bool>();
    r.elapsed = j.at("elapsed").get<double>();
    r.method = j.at("method").get<std::string>();
    return r;
}

namespace {

// the empty core prints as a single-width glyph; pad by display width, not
// by bytes
std::string core_cell(const Partition& core, std::size_t width) {
    std::string s = core.is_empty() ? "∅" : core.str();
    std::size_t display = core.is_empty() ? 1 : s.size();
    return s + std::string(display < width ? width - display : 1, ' ');
}

} // namespace

std::string format_report(const VerificationReport& report) {
    std::ostringstream os;
    os << "Lie module of degree " << report.n << " over GF(" << report.p << ")\n";
    os << "  dim = " << report.dim_lie << "   omega^2 = n*omega: "
       << (report.omega_square_ok ? "ok" : "FAILED")
       << "   restriction free: " << (report.restriction_free_ok ? "ok" : "FAILED") << "\n";
    os << "  split method: " << report.method << "\n\n";

    os << std::left << std::setw(16) << "core" << std::right << std::setw(8) << "weight"
       << std::setw(10) << "dim" << std::setw(11) << "free rank" << std::setw(12) << "projective"
       << "   principal\n";
    for (const BlockRow& row : report.blocks) {
        os << core_cell(row.core, 16) << std::right << std::setw(8)
           << row.weight << std::setw(10) << row.component_dim << std::setw(11) << row.free_rank
           << std::setw(12) << (row.projective ? "yes" : "no") << "   "
           << (row.is_principal ? "*" : "") << "\n";
    }
    os << "\n"
       << (report.theorem_holds
               ? "verified: every non-principal component is projective"
               : "VIOLATION: a non-principal component failed the projectivity test")
       << "  (" << std::fixed << std::setprecision(2) << report.elapsed << " s)\n";
    return os.str();
}

} // namespace lieblocks
