#include "hkg/errors.hpp"
#include "hkg/report.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using hkg::Int;
using hkg::Rat;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitMismatch = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw hkg::ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(hkg::parse_int(item));
    }
    if (out.empty()) throw hkg::ParseError("expected a comma-separated integer list");
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(hkg::parse_rational(item));
    }
    if (out.empty()) throw hkg::ParseError("expected a comma-separated value list");
    return out;
}

struct CommonFlags {
    std::string format = "table";
    std::string powers = "1,2";
    std::string maximal_q;
    bool verify = false;
    bool warn_only = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--m", flags.powers, "Polydifferential powers, e.g. 1,2,3");
    cmd->add_option("--q", flags.maximal_q, "Check maximal-curve compatibility against this q");
    cmd->add_flag("--verify", flags.verify, "Re-derive semigroup numbers through the oracle");
    cmd->add_flag("--warn-only", flags.warn_only,
                  "Downgrade the genus and pole-bound gates to warnings");
}

hkg::AnalyzeOptions options_from(const CommonFlags& flags) {
    hkg::AnalyzeOptions opt;
    opt.poly_powers = parse_int_list(flags.powers);
    opt.verify = flags.verify;
    opt.warn_only = flags.warn_only;
    if (!flags.maximal_q.empty()) opt.maximal_q = hkg::parse_int(flags.maximal_q);
    return opt;
}

int emit_report(const hkg::InvariantReport& report, const std::string& format) {
    if (format == "json")
        std::cout << hkg::report_to_json(report).dump(2) << '\n';
    else
        hkg::render_table(report, std::cout);
    return report.validation.valid() ? kExitOk : kExitValidation;
}

int run_analyze_cmd(const std::string& input, const CommonFlags& flags) {
    auto rd = hkg::parse_input_document(read_input(input));
    auto report = hkg::run_analyze(rd, options_from(flags));
    return emit_report(report, flags.format);
}

int run_catalog_cmd(const std::string& family, const std::vector<std::string>& assignments,
                    const CommonFlags& flags) {
    std::map<std::string, Int> params;
    for (const auto& token : assignments) {
        auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw hkg::BadParameters("family parameters are key=value pairs, got '" + token + "'");
        params[token.substr(0, eq)] = hkg::parse_int(token.substr(eq + 1));
    }
    auto rd = hkg::catalog_data(family, params);
    auto report = hkg::run_analyze(rd, options_from(flags));
    return emit_report(report, flags.format);
}

int run_jumps_cmd(const std::string& direction, const std::string& p_text,
                  const std::string& exponents_text, const std::string& values_text,
                  const std::string& format) {
    Int p = hkg::parse_int(p_text);
    auto exponents = parse_int_list(exponents_text);
    auto values = parse_rat_list(values_text);
    auto seq = hkg::run_jumps(direction, p, exponents, values);
    if (format == "json") {
        nlohmann::json j;
        j["kind"] = seq.kind == hkg::JumpSequence::Kind::lower ? "lower" : "upper";
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& v : seq.values) vals.push_back(hkg::format_rational(v));
        j["values"] = std::move(vals);
        nlohmann::json orders = nlohmann::json::array();
        for (const auto& o : seq.orders) orders.push_back(o.str());
        j["orders"] = std::move(orders);
        std::cout << j.dump(2) << '\n';
    } else {
        std::string out;
        for (const auto& v : seq.values) {
            if (!out.empty()) out += ", ";
            out += hkg::format_rational(v);
        }
        std::cout << out << '\n';
    }
    return kExitOk;
}

int run_basis_cmd(const std::string& input, const std::string& powers,
                  const std::string& format) {
    auto rd = hkg::parse_input_document(read_input(input));
    auto validation = hkg::validate(rd);
    if (!validation.valid()) {
        for (const auto& f : validation.failures)
            std::cerr << "invalid: " << f.name << " (" << f.detail << ")\n";
        return kExitValidation;
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const Int& m : parse_int_list(powers)) {
        auto basis = hkg::basis_polydifferentials(rd, m);
        if (format == "json") {
            nlohmann::json block;
            block["m"] = m.str();
            block["degree_bound"] = basis.degree_bound.str();
            block["dimension"] = basis.dimension.str();
            block["expected_dimension"] = basis.expected_dimension.str();
            nlohmann::json poles = nlohmann::json::array();
            for (const auto& x : basis.pole_numbers) poles.push_back(x.str());
            block["pole_numbers"] = std::move(poles);
            arr.push_back(std::move(block));
        } else {
            std::cout << "m = " << m << ": dimension " << basis.dimension << " (expected "
                      << basis.expected_dimension << "), pole numbers <= " << basis.degree_bound
                      << ":";
            for (const auto& x : basis.pole_numbers) std::cout << ' ' << x;
            std::cout << '\n';
        }
    }
    if (format == "json") std::cout << arr.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass semigroups and ramification invariants of one-point p-group covers"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Analyze a ramification datum");
    std::string analyze_input = "-";
    CommonFlags analyze_flags;
    analyze->add_option("input", analyze_input, "JSON input file, or - for stdin");
    add_common(analyze, analyze_flags);

    auto* catalog = app.add_subcommand("catalog", "Analyze a named family instance");
    std::string family;
    std::vector<std::string> catalog_params;
    CommonFlags catalog_flags;
    catalog->add_option("family", family, "artin-schreier | as-tower | hermitian | gk-shape")
        ->required();
    catalog->add_option("params", catalog_params,
                        "Family parameters as key=value pairs: p=5 m=7 (artin-schreier, "
                        "as-tower), q=5 (hermitian), q=5 m1=10 mr=51 (gk-shape)");
    add_common(catalog, catalog_flags);

    auto* jumps = app.add_subcommand("jumps", "Convert between lower and upper jumps");
    std::string direction, jumps_p, jumps_exponents, jumps_values, jumps_format = "table";
    jumps->add_option("--direction", direction, "lower-to-upper or upper-to-lower")->required();
    jumps->add_option("--p", jumps_p, "Characteristic")->required();
    jumps->add_option("--exponents", jumps_exponents, "Group-order exponents h0,h1,...")
        ->required();
    jumps
        ->add_option("--values", jumps_values,
                     "Jump values; upper jumps as exact fractions like 1,6/5")
        ->required();
    jumps->add_option("--format", jumps_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    auto* basis = app.add_subcommand("basis", "Polydifferential bases for the given powers");
    std::string basis_input = "-", basis_powers = "1", basis_format = "table";
    basis->add_option("input", basis_input, "JSON input file, or - for stdin");
    basis->add_option("--m", basis_powers, "Tensor powers, e.g. 1,2,3");
    basis->add_option("--format", basis_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (analyze->parsed()) return run_analyze_cmd(analyze_input, analyze_flags);
        if (catalog->parsed()) return run_catalog_cmd(family, catalog_params, catalog_flags);
        if (jumps->parsed())
            return run_jumps_cmd(direction, jumps_p, jumps_exponents, jumps_values, jumps_format);
        if (basis->parsed()) return run_basis_cmd(basis_input, basis_powers, basis_format);
    } catch (const hkg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const hkg::BadParameters& e) {
        std::cerr << "bad parameters: " << e.what() << '\n';
        return kExitParse;
    } catch (const hkg::UnknownFamily& e) {
        std::cerr << "unknown family: " << e.what() << '\n';
        return kExitParse;
    } catch (const hkg::VerificationMismatch& e) {
        std::cerr << e.what() << '\n';
        return kExitMismatch;
    } catch (const hkg::InvalidData& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const hkg::NonIntegralLowerJump& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
