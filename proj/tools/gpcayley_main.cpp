// gpcayley: graph products of finite groups, their Cayley-graph balls,
// transported Cayley-graph isomorphisms, and non-isomorphism certificates.
//
// Exit codes: 0 success/verified, 2 validation failure, 3 construction
// failure, 4 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gpcayley/cayley_ball.hpp"
#include "gpcayley/clique_cert.hpp"
#include "gpcayley/iso_transport.hpp"
#include "gpcayley/scenario.hpp"
#include "gpcayley/word_engine.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitVerification = 4;

int exit_code_for(const gpcayley::Error& e) {
    return gpcayley::is_validation_error(e.code()) ? kExitValidation : kExitConstruction;
}

void print_error(const gpcayley::Error& e) {
    std::cout << json{{"error", std::string(gpcayley::to_string(e.code()))},
                      {"message", e.what()}}
                     .dump(2)
              << "\n";
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return false;
    }
    return true;
}

struct BallArgs {
    std::string file;
    std::optional<int> radius;
    std::string dot_path;
    std::string json_path;
    bool color_by_group = false;
    std::size_t max_ball = gpcayley::kDefaultBallCap;
};

int effective_radius(const std::optional<int>& flag, const gpcayley::Scenario& scenario,
                     int fallback) {
    if (flag)
        return *flag;
    if (scenario.radius)
        return *scenario.radius;
    return fallback;
}

int run_validate(const std::string& file) {
    json doc;
    {
        std::ifstream in(file);
        if (!in) {
            std::cout << json{{"ok", false},
                              {"diagnostics",
                               json::array({{{"code", "MalformedScenario"},
                                             {"where", ""},
                                             {"message", "cannot open \"" + file + "\""}}})}}
                             .dump(2)
                      << "\n";
            return kExitValidation;
        }
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            std::cout << json{{"ok", false},
                              {"diagnostics", json::array({{{"code", "MalformedScenario"},
                                                            {"where", ""},
                                                            {"message", e.what()}}})}}
                             .dump(2)
                      << "\n";
            return kExitValidation;
        }
    }
    const auto diagnostics = gpcayley::validate_scenario(doc);
    std::cout << gpcayley::diagnostics_to_json(diagnostics).dump(2) << "\n";
    return diagnostics.empty() ? kExitOk : kExitValidation;
}

int run_reduce(const std::string& file, const std::string& word_text) {
    const auto scenario = gpcayley::load_scenario(file);
    const auto raw = gpcayley::parse_word(scenario.source, word_text);
    const auto canonical = gpcayley::canonical_form(scenario.source, raw);
    std::cout << gpcayley::format_word(scenario.source, canonical) << "\n";
    return kExitOk;
}

int run_ball(const BallArgs& args) {
    const auto scenario = gpcayley::load_scenario(args.file);
    const int radius = effective_radius(args.radius, scenario, 2);
    const auto b = gpcayley::ball(scenario.source, radius, args.max_ball);

    const std::string summary = gpcayley::ball_summary(b).dump(2);
    std::cout << summary << "\n";

    const std::string dot_path =
        !args.dot_path.empty() ? args.dot_path : scenario.dot_path.value_or("");
    if (!dot_path.empty() &&
        !write_file(dot_path, gpcayley::export_dot(b, args.color_by_group)))
        return kExitConstruction;
    const std::string json_path =
        !args.json_path.empty() ? args.json_path : scenario.json_path.value_or("");
    if (!json_path.empty() && !write_file(json_path, summary + "\n"))
        return kExitConstruction;
    return kExitOk;
}

int run_iso(const std::string& file, const std::optional<int>& radius_flag,
            std::size_t max_ball, const std::string& json_path) {
    const auto scenario = gpcayley::load_scenario(file);
    if (!scenario.target)
        gpcayley::throw_error(gpcayley::ErrorCode::MalformedScenario,
                              "iso needs a \"target\" presentation");
    gpcayley::IsoDiagnostics diag;
    const auto iso = gpcayley::build_product_iso(scenario.source, *scenario.target,
                                                 scenario.family, &diag);
    const int radius = effective_radius(radius_flag, scenario, 2);
    const auto report = gpcayley::verify_iso_on_ball(iso, radius, max_ball);

    json out = report.to_json();
    if (!diag.warnings.empty())
        out["warnings"] = diag.warnings;
    const std::string text = out.dump(2);
    std::cout << text << "\n";
    if (!json_path.empty() && !write_file(json_path, text + "\n"))
        return kExitConstruction;
    return report.all_ok() ? kExitOk : kExitVerification;
}

int run_certificate(const std::string& file, const std::string& json_path) {
    const auto scenario = gpcayley::load_scenario(file);
    if (!scenario.target)
        gpcayley::throw_error(gpcayley::ErrorCode::MalformedScenario,
                              "certificate needs a \"target\" presentation");
    gpcayley::IsoDiagnostics diag;
    const auto cert = gpcayley::noniso_certificate(scenario.source, *scenario.target, &diag);
    for (const auto& w : diag.warnings)
        std::cerr << w << "\n";
    if (!cert) {
        std::cout << "no certificate\n";
        return kExitVerification;
    }
    const std::string text = cert->to_json().dump(2);
    std::cout << text << "\n";
    if (!json_path.empty() && !write_file(json_path, text + "\n"))
        return kExitConstruction;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph products of finite groups: words, Cayley balls, transported "
                 "Cayley-graph isomorphisms, non-isomorphism certificates"};
    app.require_subcommand(1);

    std::string file;
    std::string word_text;
    BallArgs ball_args;
    std::optional<int> radius_flag;
    std::size_t max_ball = gpcayley::kDefaultBallCap;
    std::string json_path;

    auto* validate = app.add_subcommand("validate", "check a scenario file");
    validate->add_option("file", file, "scenario JSON file")->required();

    auto* reduce = app.add_subcommand("reduce", "canonical form of a word over the source "
                                                "presentation");
    reduce->add_option("file", file, "scenario JSON file")->required();
    reduce->add_option("word", word_text, "word as vertex:label;...; empty for the identity")
        ->required();

    auto* ball_cmd = app.add_subcommand("ball", "radius-r ball of Cay(G,S) for the source "
                                                "presentation");
    ball_cmd->add_option("file", ball_args.file, "scenario JSON file")->required();
    ball_cmd->add_option("--radius", ball_args.radius, "ball radius");
    ball_cmd->add_option("--dot", ball_args.dot_path, "write DOT rendering here");
    ball_cmd->add_option("--json", ball_args.json_path, "write the summary JSON here");
    ball_cmd->add_flag("--color-by-group", ball_args.color_by_group,
                       "color DOT edges by generator vertex group");
    ball_cmd->add_option("--max-ball", ball_args.max_ball, "vertex-count cap");

    auto* iso = app.add_subcommand("iso", "build and verify the transported Cayley-graph "
                                          "isomorphism source -> target");
    iso->add_option("file", file, "scenario JSON file")->required();
    iso->add_option("--radius", radius_flag, "verification ball radius");
    iso->add_option("--max-ball", max_ball, "vertex-count cap");
    iso->add_option("--json", json_path, "write the verification report here");

    auto* cert = app.add_subcommand("certificate", "non-isomorphism certificate via "
                                                   "maximal-clique subgroups");
    cert->add_option("file", file, "scenario JSON file")->required();
    cert->add_option("--json", json_path, "write the certificate here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed())
            return run_validate(file);
        if (reduce->parsed())
            return run_reduce(file, word_text);
        if (ball_cmd->parsed())
            return run_ball(ball_args);
        if (iso->parsed())
            return run_iso(file, radius_flag, max_ball, json_path);
        if (cert->parsed())
            return run_certificate(file, json_path);
    } catch (const gpcayley::Error& e) {
        print_error(e);
        return exit_code_for(e);
    }
    return kExitOk;
}
