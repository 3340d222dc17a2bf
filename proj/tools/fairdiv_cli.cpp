#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fairdiv/justified.hpp"
#include "fairdiv/pareto.hpp"
#include "fairdiv/stability.hpp"
#include "fairdiv/toolkit.hpp"
#include "fairdiv/verifiers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFail = 1; // property fails or decision answer "no"
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fairdiv::ValidationError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fairdiv::ValidationError("cannot write " + path);
    out << content;
}

std::pair<long long, long long> parse_range(const std::string& spec) {
    const auto pos = spec.find("..");
    if (pos == std::string::npos)
        throw fairdiv::ValidationError("value range must look like lo..hi");
    try {
        return {std::stoll(spec.substr(0, pos)), std::stoll(spec.substr(pos + 2))};
    } catch (const std::exception&) {
        throw fairdiv::ValidationError("value range must look like lo..hi");
    }
}

int cmd_gen(const fairdiv::GeneratorConfig& config, const std::string& out_path) {
    const fairdiv::Instance inst = fairdiv::gen_random_instance(config);
    write_output(out_path, fairdiv::save_instance(inst));
    return kExitOk;
}

int cmd_solve(const std::string& alg, const std::string& in_path, const std::string& out_path,
              long long budget) {
    const fairdiv::AlgorithmInfo* info = fairdiv::find_algorithm(alg);
    if (!info) throw fairdiv::ValidationError("unknown algorithm: " + alg);
    const fairdiv::Instance inst = fairdiv::load_instance(read_file(in_path));
    const std::optional<fairdiv::Allocation> alloc = info->solve(inst, budget);
    if (!alloc) {
        std::cerr << alg << ": no allocation with the requested properties exists\n";
        return kExitPropertyFail;
    }
    write_output(out_path, fairdiv::save_allocation(*alloc));
    return kExitOk;
}

int cmd_check(const std::string& props_csv, const std::string& inst_path,
              const std::string& alloc_path, long long budget) {
    const fairdiv::Instance inst = fairdiv::load_instance(read_file(inst_path));
    const fairdiv::Allocation alloc =
        fairdiv::load_allocation(read_file(alloc_path), inst.num_teams);
    if (alloc.num_players() != inst.num_players())
        throw fairdiv::ValidationError("allocation size does not match instance");

    std::vector<fairdiv::Property> props;
    std::stringstream stream(props_csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto prop = fairdiv::property_from_name(token);
        if (!prop) throw fairdiv::ValidationError("unknown property: " + token);
        props.push_back(*prop);
    }
    if (props.empty()) throw fairdiv::ValidationError("no properties requested");

    bool all_hold = true;
    nlohmann::json reports = nlohmann::json::array();
    for (fairdiv::Property prop : props) {
        fairdiv::PropertyReport report;
        switch (prop) {
            case fairdiv::Property::EF1: report = fairdiv::is_ef1(inst, alloc); break;
            case fairdiv::Property::EF11: report = fairdiv::is_ef11(inst, alloc); break;
            case fairdiv::Property::Balanced:
                report = fairdiv::is_balanced(inst, alloc);
                break;
            case fairdiv::Property::SwapStable:
                report = fairdiv::swap_stability_report(inst, alloc);
                break;
            case fairdiv::Property::IndividuallyStable:
                report = fairdiv::individual_stability_report(inst, alloc);
                break;
            case fairdiv::Property::JustifiedEF:
                report = fairdiv::justified_ef_report(inst, alloc);
                break;
            case fairdiv::Property::PO:
                report = fairdiv::is_po_bruteforce(inst, alloc,
                                                   fairdiv::DominanceScope::AllParties,
                                                   budget);
                break;
            case fairdiv::Property::TeamPO:
                report = fairdiv::is_po_bruteforce(inst, alloc,
                                                   fairdiv::DominanceScope::TeamsOnly,
                                                   budget);
                break;
            case fairdiv::Property::PlayerPO:
                report = fairdiv::is_po_bruteforce(inst, alloc,
                                                   fairdiv::DominanceScope::PlayersOnly,
                                                   budget);
                break;
        }
        all_hold = all_hold && report.holds;
        reports.push_back(report.to_json());
    }
    std::cout << reports.dump(2) << "\n";
    return all_hold ? kExitOk : kExitPropertyFail;
}

int cmd_fixtures(const std::string& action, const std::string& name,
                 const std::string& out_path) {
    if (action == "list") {
        for (const std::string& fixture : fairdiv::fixture_names())
            std::cout << fixture << "\n";
        return kExitOk;
    }
    if (action == "emit") {
        if (name.empty()) throw fairdiv::ValidationError("fixtures emit needs a name");
        const fairdiv::Fixture fixture = fairdiv::paper_instance(name);
        write_output(out_path, fairdiv::save_instance(fixture.instance));
        for (const std::string& fact : fixture.facts) std::cerr << "# " << fact << "\n";
        return kExitOk;
    }
    throw fairdiv::ValidationError("fixtures action must be list or emit");
}

int cmd_experiment(const std::string& config_path, const std::string& out_path,
                   const std::string& csv_path, long long budget) {
    const nlohmann::json doc = nlohmann::json::parse(read_file(config_path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw fairdiv::ValidationError("experiment config: malformed JSON object");

    fairdiv::GeneratorConfig config;
    config.num_teams = doc.value("n", 2);
    config.num_players = doc.value("m", 4);
    if (doc.contains("values")) {
        config.value_lo = doc["values"].at(0).get<long long>();
        config.value_hi = doc["values"].at(1).get<long long>();
    }
    const auto sign = fairdiv::sign_mode_from_name(doc.value("signs", "any"));
    const auto pref = fairdiv::pref_mode_from_name(doc.value("prefs", "weak"));
    if (!sign) throw fairdiv::ValidationError("experiment config: unknown signs mode");
    if (!pref) throw fairdiv::ValidationError("experiment config: unknown prefs mode");
    config.sign_mode = *sign;
    config.pref_mode = *pref;
    config.seed = doc.value("seed", 0ULL);

    if (!doc.contains("algorithms") || !doc["algorithms"].is_array())
        throw fairdiv::ValidationError("experiment config: algorithms array required");
    std::vector<std::string> algorithms;
    for (const auto& entry : doc["algorithms"]) algorithms.push_back(entry.get<std::string>());
    const int trials = doc.value("trials", 0);

    const nlohmann::json report =
        fairdiv::run_experiment(config, algorithms, trials, budget);
    write_output(out_path, report.dump(2) + "\n");
    if (!csv_path.empty()) write_output(csv_path, fairdiv::report_to_csv(report));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fair division of players among teams under two-sided preferences"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    int gen_n = 2, gen_m = 4;
    std::string gen_values = "-9..9", gen_signs = "any", gen_prefs = "weak";
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "Number of teams");
    gen->add_option("--m", gen_m, "Number of players");
    gen->add_option("--values", gen_values, "Value range lo..hi");
    gen->add_option("--signs", gen_signs, "any|nonneg|nonpos|binary|identical");
    gen->add_option("--prefs", gen_prefs, "strict|weak|single-favorite");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("-o,--output", gen_out, "Output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "Run an algorithm on an instance");
    std::string solve_alg, solve_in, solve_out;
    long long solve_budget = fairdiv::kDefaultEnumerationBudget;
    solve->add_option("--alg", solve_alg, "Algorithm name")->required();
    solve->add_option("-i,--instance", solve_in, "Instance JSON path")->required();
    solve->add_option("-o,--output", solve_out, "Allocation output path (default stdout)");
    solve->add_option("--budget", solve_budget, "Enumeration/DP budget");

    // check
    auto* check = app.add_subcommand("check", "Verify properties of an allocation");
    std::string check_props, check_in, check_alloc;
    long long check_budget = fairdiv::kDefaultEnumerationBudget;
    check->add_option("--props", check_props, "Comma-separated property list")->required();
    check->add_option("-i,--instance", check_in, "Instance JSON path")->required();
    check->add_option("-a,--allocation", check_alloc, "Allocation JSON path")->required();
    check->add_option("--budget", check_budget, "Enumeration budget for PO checks");

    // fixtures
    auto* fixtures = app.add_subcommand("fixtures", "List or emit catalog instances");
    std::string fix_action, fix_name, fix_out;
    fixtures->add_option("action", fix_action, "list|emit")->required();
    fixtures->add_option("name", fix_name, "Fixture name (for emit)");
    fixtures->add_option("-o,--output", fix_out, "Output path (default stdout)");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a seeded experiment sweep");
    std::string exp_config, exp_out, exp_csv;
    long long exp_budget = fairdiv::kDefaultEnumerationBudget;
    experiment->add_option("--config", exp_config, "Experiment config JSON")->required();
    experiment->add_option("-o,--output", exp_out, "Report output path (default stdout)");
    experiment->add_option("--csv", exp_csv, "Also write a CSV summary here");
    experiment->add_option("--budget", exp_budget, "Enumeration budget for PO checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            fairdiv::GeneratorConfig config;
            config.num_teams = gen_n;
            config.num_players = gen_m;
            std::tie(config.value_lo, config.value_hi) = parse_range(gen_values);
            const auto sign = fairdiv::sign_mode_from_name(gen_signs);
            const auto pref = fairdiv::pref_mode_from_name(gen_prefs);
            if (!sign) throw fairdiv::ValidationError("unknown signs mode: " + gen_signs);
            if (!pref) throw fairdiv::ValidationError("unknown prefs mode: " + gen_prefs);
            config.sign_mode = *sign;
            config.pref_mode = *pref;
            config.seed = gen_seed;
            return cmd_gen(config, gen_out);
        }
        if (solve->parsed()) return cmd_solve(solve_alg, solve_in, solve_out, solve_budget);
        if (check->parsed())
            return cmd_check(check_props, check_in, check_alloc, check_budget);
        if (fixtures->parsed()) return cmd_fixtures(fix_action, fix_name, fix_out);
        if (experiment->parsed())
            return cmd_experiment(exp_config, exp_out, exp_csv, exp_budget);
    } catch (const fairdiv::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const fairdiv::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
