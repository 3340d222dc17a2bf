#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairdiv/instance.hpp"
#include "fairdiv/verifiers.hpp"

namespace fairdiv {

// xoshiro256** seeded through splitmix64; fixed here so seeds stay portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    // uniform in [lo, hi], inclusive
    long long uniform(long long lo, long long hi);

private:
    std::uint64_t state_[4];
};

enum class SignMode { Any, NonNegative, NonPositive, Binary, IdenticalTeams };
enum class PrefMode { Strict, Weak, SingleFavorite };

struct GeneratorConfig {
    int num_teams = 2;
    int num_players = 4;
    long long value_lo = -9;
    long long value_hi = 9;
    SignMode sign_mode = SignMode::Any;
    PrefMode pref_mode = PrefMode::Weak;
    std::uint64_t seed = 0;

    void validate() const;
};

std::optional<SignMode> sign_mode_from_name(const std::string& name);
std::optional<PrefMode> pref_mode_from_name(const std::string& name);

// Deterministic for a fixed config; satisfies the config's structural promises.
Instance gen_random_instance(const GeneratorConfig& config);

// Catalog of hand-sized instances from the literature with their known facts.
struct Fixture {
    std::string name;
    Instance instance;
    std::vector<std::string> facts;
};

std::vector<std::string> fixture_names();
Fixture paper_instance(const std::string& name);

// Solver registry shared by the CLI and the experiment runner.
struct AlgorithmInfo {
    std::string name;
    std::vector<Property> advertised;
    // nullopt = the decision answer is "no allocation exists"
    std::function<std::optional<Allocation>(const Instance&, long long budget)> solve;
    // throws ValidationError if the generator config cannot feed this algorithm
    std::function<void(const GeneratorConfig&)> check_config;
};

const std::vector<AlgorithmInfo>& algorithm_registry();
const AlgorithmInfo* find_algorithm(const std::string& name);

// Runs `trials` seeded instances through each algorithm, re-verifying the
// advertised properties; returns the machine-readable report.
nlohmann::json run_experiment(const GeneratorConfig& config,
                              const std::vector<std::string>& algorithms, int trials,
                              long long po_budget = kDefaultEnumerationBudget);

std::string report_to_csv(const nlohmann::json& report);

} // namespace fairdiv
