#include "ribet/cli.hpp"

#include "ribet/characters.hpp"
#include "ribet/errors.hpp"
#include "ribet/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace ribet {

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open output file: " + out_path);
    out << text;
}

std::string class_number_json(const ClassNumberReport& r) {
    nlohmann::ordered_json j;
    j["p"] = r.p;
    j["h_minus"] = r.h_minus.get_str();
    j["p_part_exponent"] = r.p_part_exponent;
    j["irregular_count"] = r.irregular_count;
    j["carlitz_bound"] = r.carlitz_bound.get_str();
    return j.dump(2);
}

} // namespace

int cli_run(const std::vector<std::string>& args) {
    CLI::App app{"Exact verification of the weight-2 semi-cusp construction "
                 "for irregular primes"};
    app.require_subcommand(1);

    long p = 0, k = 0, bound = 160, l_bound = 13;
    long truncation = 200;
    int precision = 4;
    unsigned bernoulli_index = 0;
    std::string format = "text";
    std::string out_path;
    std::string series_type;
    std::string verify_what;

    auto* cmd_bernoulli = app.add_subcommand("bernoulli", "Print the exact Bernoulli number B_N");
    cmd_bernoulli->add_option("N", bernoulli_index, "index")->required();

    auto* cmd_scan = app.add_subcommand("scan", "List irregular pairs (p, k) with p < bound");
    cmd_scan->add_option("--bound", bound, "upper bound on p")->required();
    cmd_scan->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* cmd_class = app.add_subcommand("classnumber", "Relative class number h^- of Q(mu_p)");
    cmd_class->add_option("-p", p, "prime")->required();

    auto* cmd_carlitz = app.add_subcommand("carlitz", "Check t < (p-1)/4 and p^t | h^-");
    cmd_carlitz->add_option("-p", p, "prime")->required();

    auto* cmd_series = app.add_subcommand("series", "Print a q-expansion as JSON");
    cmd_series->add_option("type", series_type, "series family")
        ->required()
        ->check(CLI::IsMember({"G2eps", "s2eps", "G1eps", "Gk", "G2p"}));
    cmd_series->add_option("-p", p, "prime")->required();
    cmd_series->add_option("-k", k, "weight index k");
    cmd_series->add_option("--coeffs", truncation, "truncation M");
    cmd_series->add_option("--precision", precision, "absolute precision A");
    cmd_series->add_option("--out", out_path, "write to file");

    auto* cmd_construct = app.add_subcommand("construct", "Run the full construction for an irregular pair");
    cmd_construct->add_option("-p", p, "prime")->required();
    cmd_construct->add_option("-k", k, "irregular index")->required();
    cmd_construct->add_option("--coeffs", truncation, "truncation M");
    cmd_construct->add_option("--precision", precision, "absolute precision A");
    cmd_construct->add_option("--eigen-bound", l_bound, "largest Hecke prime checked");
    cmd_construct->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    cmd_construct->add_option("--out", out_path, "write report to file");

    auto* cmd_verify = app.add_subcommand("verify", "Run a named congruence suite");
    cmd_verify->add_option("what", verify_what, "suite name")
        ->required()
        ->check(CLI::IsMember({"eisenstein"}));
    cmd_verify->add_option("-p", p, "prime")->required();
    cmd_verify->add_option("-k", k, "even weight")->required();
    cmd_verify->add_option("--coeffs", truncation, "truncation M");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    reversed.pop_back(); // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*cmd_bernoulli) {
            std::cout << bernoulli_number(bernoulli_index) << "\n";
            return 0;
        }
        if (*cmd_scan) {
            const auto pairs = scan_irregular(bound);
            if (format == "json") {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& pr : pairs) j.push_back({{"p", pr.p}, {"k", pr.k}});
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& pr : pairs)
                    std::cout << "(" << pr.p << ", " << pr.k << ")\n";
            }
            return 0;
        }
        if (*cmd_class) {
            std::cout << class_number_json(relative_class_number(p)) << "\n";
            return 0;
        }
        if (*cmd_carlitz) {
            const bool ok = carlitz_check(p);
            std::cout << (ok ? "true" : "false") << "\n";
            return ok ? 0 : 1;
        }
        if (*cmd_series) {
            QExpansion series = [&] {
                if (series_type == "G2eps")
                    return eis_G2_char(p, k - 2, truncation, precision);
                if (series_type == "s2eps")
                    return eis_s2_char(p, k - 2, truncation, precision);
                if (series_type == "G1eps")
                    return eis_G1_char(p, k - 1, truncation, precision);
                if (series_type == "Gk")
                    return eis_Gk_level1(static_cast<unsigned>(k), truncation, p,
                                         precision);
                return eis_G2_level_p(p, truncation, precision);
            }();
            emit(series.to_json(), out_path);
            return 0;
        }
        if (*cmd_construct) {
            const PipelineReport report =
                ribet_construct(p, k, truncation, precision, l_bound);
            emit(format == "json" ? report.to_json() : report.to_text(), out_path);
            return report.overall_pass ? 0 : 1;
        }
        if (*cmd_verify) {
            const QExpansion gk =
                eis_Gk_level1(static_cast<unsigned>(k), truncation, p, 2);
            const auto g2 = qexp_congruent_mod(eis_G2_char(p, k - 2, truncation, 2), gk, 1);
            const auto g1 = qexp_congruent_mod(eis_G1_char(p, k - 1, truncation, 2), gk, 1);
            std::cout << "G2eps = G_" << k << " mod " << p << ": "
                      << (g2.congruent ? "ok" : "FAIL") << "\n";
            std::cout << "G1eps = G_" << k << " mod " << p << ": "
                      << (g1.congruent ? "ok" : "FAIL") << "\n";
            return (g2.congruent && g1.congruent) ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace ribet
