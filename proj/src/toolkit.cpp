#include "fairdiv/toolkit.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <sstream>

#include "fairdiv/justified.hpp"
#include "fairdiv/pareto.hpp"
#include "fairdiv/stability.hpp"

namespace fairdiv {

using nlohmann::json;

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
}

std::uint64_t Rng::next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

long long Rng::uniform(long long lo, long long hi) {
    if (lo > hi) throw ValidationError("uniform: empty range");
    const std::uint64_t range =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (range == 0) return static_cast<long long>(next()); // full 64-bit span
    const std::uint64_t rem =
        (std::numeric_limits<std::uint64_t>::max() % range + 1) % range;
    std::uint64_t x;
    do {
        x = next();
    } while (rem != 0 && x >= std::numeric_limits<std::uint64_t>::max() - rem + 1);
    return lo + static_cast<long long>(x % range);
}

void GeneratorConfig::validate() const {
    if (num_teams < 1) throw ValidationError("generator: n must be positive");
    if (num_players < 1) throw ValidationError("generator: m must be positive");
    if (value_lo > value_hi) throw ValidationError("generator: empty value range");
    switch (sign_mode) {
        case SignMode::Binary:
            if (value_lo < 0 || value_hi > 1)
                throw ValidationError("generator: binary mode needs range within {0,1}");
            break;
        case SignMode::NonNegative:
            if (value_lo < 0)
                throw ValidationError("generator: nonnegative mode needs lo >= 0");
            break;
        case SignMode::NonPositive:
            if (value_hi > 0)
                throw ValidationError("generator: nonpositive mode needs hi <= 0");
            break;
        default:
            break;
    }
}

std::optional<SignMode> sign_mode_from_name(const std::string& name) {
    if (name == "any") return SignMode::Any;
    if (name == "nonneg") return SignMode::NonNegative;
    if (name == "nonpos") return SignMode::NonPositive;
    if (name == "binary") return SignMode::Binary;
    if (name == "identical") return SignMode::IdenticalTeams;
    return std::nullopt;
}

std::optional<PrefMode> pref_mode_from_name(const std::string& name) {
    if (name == "strict") return PrefMode::Strict;
    if (name == "weak") return PrefMode::Weak;
    if (name == "single-favorite") return PrefMode::SingleFavorite;
    return std::nullopt;
}

Instance gen_random_instance(const GeneratorConfig& config) {
    config.validate();
    Rng rng(config.seed);
    const int n = config.num_teams;
    const int m = config.num_players;

    Instance inst;
    inst.num_teams = n;
    inst.player_ids.resize(m);
    inst.values.assign(n, std::vector<Value>(m, 0));
    inst.ranks.assign(m, std::vector<int>(n, 1));

    for (int p = 0; p < m; ++p) {
        inst.player_ids[p] = "p" + std::to_string(p + 1);
        if (config.sign_mode == SignMode::IdenticalTeams) {
            const Value v = rng.uniform(config.value_lo, config.value_hi);
            for (int i = 0; i < n; ++i) inst.values[i][p] = v;
        } else {
            for (int i = 0; i < n; ++i)
                inst.values[i][p] = rng.uniform(config.value_lo, config.value_hi);
        }
        switch (config.pref_mode) {
            case PrefMode::Strict: {
                // Fisher-Yates permutation of ranks 1..n
                std::vector<int> perm(n);
                std::iota(perm.begin(), perm.end(), 1);
                for (int i = n - 1; i > 0; --i)
                    std::swap(perm[i], perm[rng.uniform(0, i)]);
                inst.ranks[p] = perm;
                break;
            }
            case PrefMode::Weak: {
                std::vector<long long> keys(n);
                for (int i = 0; i < n; ++i) keys[i] = rng.uniform(0, n - 1);
                inst.ranks[p] = canonical_ranks_from_keys(keys);
                break;
            }
            case PrefMode::SingleFavorite: {
                const int favorite = static_cast<int>(rng.uniform(0, n - 1));
                for (int i = 0; i < n; ++i) inst.ranks[p][i] = i == favorite ? 1 : 2;
                if (n == 1) inst.ranks[p][0] = 1;
                break;
            }
        }
    }
    inst.validate();
    return inst;
}

namespace {

Instance make_instance(int n, std::vector<std::vector<Value>> values,
                       std::vector<std::vector<int>> ranks) {
    Instance inst;
    inst.num_teams = n;
    const int m = static_cast<int>(values[0].size());
    inst.player_ids.resize(m);
    for (int p = 0; p < m; ++p) inst.player_ids[p] = "p" + std::to_string(p + 1);
    inst.values = std::move(values);
    inst.ranks = std::move(ranks);
    inst.validate();
    return inst;
}

const std::vector<int> kPrefT1 = {1, 2};
const std::vector<int> kPrefT2 = {2, 1};
const std::vector<int> kIndiff2 = {1, 1};

std::vector<Fixture> build_fixtures() {
    std::vector<Fixture> fixtures;

    fixtures.push_back(
        {"example1",
         make_instance(3,
                       {{0, 0, 0, 0, 0, 0},
                        {0, 0, 0, 0, 0, 0},
                        {1, 1, 0, 0, 0, 0}},
                       {{1, 2, 2}, {1, 2, 2}, {2, 2, 1}, {2, 1, 2}, {2, 1, 2}, {2, 2, 1}}),
         {"the seed allocation ({p1,p4},{p2,p5},{p3,p6}) is EF1",
          "the swap (p2,p4) is its unique beneficial swap",
          "the post-swap allocation is swap stable but not EF1"}});

    fixtures.push_back({"prop3",
                        make_instance(2, {{1, 1}, {1, 0}}, {kPrefT1, kPrefT2}),
                        {"({p1},{p2}) is PO but not team-PO"}});

    fixtures.push_back({"prop4",
                        make_instance(2, {{1, 1}, {1, 1}}, {kPrefT1, kPrefT1}),
                        {"({p1},{p2}) is PO but not player-PO"}});

    fixtures.push_back({"prop8",
                        make_instance(2, {{1, -1}, {1, -1}}, {kIndiff2, kIndiff2}),
                        {"no balanced allocation is EF1"}});

    fixtures.push_back({"prop9",
                        make_instance(2, {{1, 1}, {0, 0}}, {kPrefT1, kPrefT1}),
                        {"({p1,p2},{}) is the only individually stable allocation",
                         "no balanced allocation is individually stable"}});

    fixtures.push_back({"prop12",
                        make_instance(2, {{3, 3, 2, 2}, {1, 1, 0, 0}},
                                      {kPrefT1, kPrefT1, kPrefT1, kPrefT1}),
                        {"no allocation is both EF1 and justified EF"}});

    fixtures.push_back({"prop13",
                        make_instance(2, {{1, 1, 1, 1}, {1, 1, 1, 1}},
                                      {kPrefT1, kPrefT1, kPrefT1, kPrefT1}),
                        {"no allocation is both EF1 and player-PO"}});

    fixtures.push_back(
        {"sec4-m8",
         make_instance(2,
                       {{4, 4, 3, 3, 2, 2, 1, 1}, {4, 4, 3, 3, 2, 2, 1, 1}},
                       {kPrefT1, kPrefT1, kPrefT2, kPrefT2, kPrefT2, kPrefT2, kPrefT1,
                        kPrefT1}),
         {"every balanced alternating allocation is Pareto dominated by "
          "({p1,p2,p7,p8},{p3,p4,p5,p6})"}});

    return fixtures;
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> catalog = build_fixtures();
    return catalog;
}

void require_nonneg_config(const GeneratorConfig& cfg, const std::string& alg) {
    const bool ok = cfg.sign_mode == SignMode::NonNegative ||
                    cfg.sign_mode == SignMode::Binary ||
                    (cfg.sign_mode == SignMode::IdenticalTeams && cfg.value_lo >= 0);
    if (!ok) throw ValidationError(alg + ": config must generate nonnegative values");
}

std::vector<AlgorithmInfo> build_registry() {
    std::vector<AlgorithmInfo> registry;

    registry.push_back({"swap-stable-balanced",
                        {Property::Balanced, Property::EF11, Property::SwapStable},
                        [](const Instance& inst, long long) {
                            return std::optional<Allocation>(alg_swap_stable_balanced(inst));
                        },
                        [](const GeneratorConfig&) {}});

    registry.push_back(
        {"double-round-robin",
         {Property::EF1, Property::SwapStable, Property::IndividuallyStable},
         [](const Instance& inst, long long) {
             return std::optional<Allocation>(alg_double_round_robin(inst));
         },
         [](const GeneratorConfig&) {}});

    registry.push_back({"adjusted-winner",
                        {Property::EF1, Property::PO, Property::TeamPO},
                        [](const Instance& inst, long long) {
                            return std::optional<Allocation>(
                                alg_adjusted_winner_two_teams(inst));
                        },
                        [](const GeneratorConfig& cfg) {
                            if (cfg.num_teams != 2)
                                throw ValidationError("adjusted-winner: config needs n=2");
                        }});

    registry.push_back(
        {"three-teams",
         {Property::EF1, Property::PO},
         [](const Instance& inst, long long) {
             return std::optional<Allocation>(alg_three_teams_identical(inst));
         },
         [](const GeneratorConfig& cfg) {
             if (cfg.num_teams != 3)
                 throw ValidationError("three-teams: config needs n=3");
             if (cfg.sign_mode != SignMode::IdenticalTeams || cfg.value_lo < 0)
                 throw ValidationError(
                     "three-teams: config needs identical nonnegative values");
             if (cfg.pref_mode != PrefMode::SingleFavorite)
                 throw ValidationError("three-teams: config needs single-favorite prefs");
         }});

    registry.push_back({"dp",
                        {Property::EF1, Property::PO},
                        [](const Instance& inst, long long budget) {
                            return std::optional<Allocation>(
                                alg_dp_const_teams(inst, budget));
                        },
                        [](const GeneratorConfig& cfg) {
                            require_nonneg_config(cfg, "dp");
                        }});

    registry.push_back({"mnw-brute",
                        {Property::EF1, Property::PO},
                        [](const Instance& inst, long long budget) {
                            return std::optional<Allocation>(mnw_bruteforce(inst, budget));
                        },
                        [](const GeneratorConfig& cfg) {
                            require_nonneg_config(cfg, "mnw-brute");
                        }});

    registry.push_back({"jef-two-teams",
                        {Property::EF1, Property::JustifiedEF},
                        [](const Instance& inst, long long) {
                            return alg_jef_two_teams_search(inst);
                        },
                        [](const GeneratorConfig& cfg) {
                            if (cfg.num_teams != 2)
                                throw ValidationError("jef-two-teams: config needs n=2");
                            if (cfg.pref_mode != PrefMode::Strict)
                                throw ValidationError(
                                    "jef-two-teams: config needs strict preferences");
                            require_nonneg_config(cfg, "jef-two-teams");
                        }});

    registry.push_back(
        {"cut-and-choose",
         {Property::EF1, Property::JustifiedEF},
         [](const Instance& inst, long long) {
             return std::optional<Allocation>(alg_cut_and_choose_identical(inst));
         },
         [](const GeneratorConfig& cfg) {
             if (cfg.num_teams != 2)
                 throw ValidationError("cut-and-choose: config needs n=2");
             if (cfg.sign_mode != SignMode::IdenticalTeams || cfg.value_lo < 0)
                 throw ValidationError(
                     "cut-and-choose: config needs identical nonnegative values");
         }});

    return registry;
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const Fixture& f : fixtures()) names.push_back(f.name);
    return names;
}

Fixture paper_instance(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return f;
    throw ValidationError("unknown fixture: " + name);
}

const std::vector<AlgorithmInfo>& algorithm_registry() {
    static const std::vector<AlgorithmInfo> registry = build_registry();
    return registry;
}

const AlgorithmInfo* find_algorithm(const std::string& name) {
    for (const AlgorithmInfo& info : algorithm_registry())
        if (info.name == name) return &info;
    return nullptr;
}

namespace {

PropertyReport verify_property(const Instance& inst, const Allocation& alloc, Property prop,
                               long long po_budget) {
    switch (prop) {
        case Property::EF1: return is_ef1(inst, alloc);
        case Property::EF11: return is_ef11(inst, alloc);
        case Property::Balanced: return is_balanced(inst, alloc);
        case Property::SwapStable: return swap_stability_report(inst, alloc);
        case Property::IndividuallyStable: return individual_stability_report(inst, alloc);
        case Property::JustifiedEF: return justified_ef_report(inst, alloc);
        case Property::PO:
            return is_po_bruteforce(inst, alloc, DominanceScope::AllParties, po_budget);
        case Property::TeamPO:
            return is_po_bruteforce(inst, alloc, DominanceScope::TeamsOnly, po_budget);
        case Property::PlayerPO:
            return is_po_bruteforce(inst, alloc, DominanceScope::PlayersOnly, po_budget);
    }
    throw std::logic_error("unknown property");
}

} // namespace

json run_experiment(const GeneratorConfig& config, const std::vector<std::string>& algorithms,
                    int trials, long long po_budget) {
    config.validate();
    if (trials < 0) throw ValidationError("experiment: negative trial count");
    std::vector<const AlgorithmInfo*> infos;
    for (const std::string& name : algorithms) {
        const AlgorithmInfo* info = find_algorithm(name);
        if (!info) throw ValidationError("unknown algorithm: " + name);
        info->check_config(config);
        infos.push_back(info);
    }

    json rows = json::array();
    json aggregate = json::object();
    for (const AlgorithmInfo* info : infos)
        aggregate[info->name] = {{"pass", 0}, {"fail", 0}, {"capacity", 0}};

    for (int trial = 0; trial < trials; ++trial) {
        GeneratorConfig trial_config = config;
        trial_config.seed = config.seed + static_cast<std::uint64_t>(trial);
        const Instance inst = gen_random_instance(trial_config);
        for (const AlgorithmInfo* info : infos) {
            json row = {{"trial", trial},
                        {"seed", trial_config.seed},
                        {"algorithm", info->name}};
            const auto start = std::chrono::steady_clock::now();
            const std::optional<Allocation> alloc = info->solve(inst, po_budget);
            row["wall_ms"] = std::chrono::duration<double, std::milli>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            if (!alloc) {
                row["decision"] = "no";
                row["verdicts"] = json::object();
                aggregate[info->name]["pass"] = aggregate[info->name]["pass"].get<int>() + 1;
                rows.push_back(std::move(row));
                continue;
            }
            row["decision"] = "yes";
            row["assignment"] = alloc->assignment;
            json utilities = json::array();
            for (int i = 0; i < inst.num_teams; ++i)
                utilities.push_back(team_utility(inst, *alloc, i));
            row["utilities"] = std::move(utilities);

            json verdicts = json::object();
            bool any_fail = false, any_capacity = false;
            for (Property prop : info->advertised) {
                try {
                    const PropertyReport report = verify_property(inst, *alloc, prop,
                                                                  po_budget);
                    verdicts[property_name(prop)] = report.holds ? "pass" : "fail";
                    any_fail = any_fail || !report.holds;
                } catch (const CapacityError&) {
                    verdicts[property_name(prop)] = "capacity";
                    any_capacity = true;
                }
            }
            row["verdicts"] = std::move(verdicts);
            const char* bucket = any_fail ? "fail" : any_capacity ? "capacity" : "pass";
            aggregate[info->name][bucket] = aggregate[info->name][bucket].get<int>() + 1;
            rows.push_back(std::move(row));
        }
    }

    return {{"config",
             {{"n", config.num_teams},
              {"m", config.num_players},
              {"value_lo", config.value_lo},
              {"value_hi", config.value_hi},
              {"seed", config.seed}}},
            {"trials", trials},
            {"rows", std::move(rows)},
            {"aggregate", std::move(aggregate)}};
}

std::string report_to_csv(const json& report) {
    std::ostringstream out;
    out << "trial,seed,algorithm,decision,wall_ms,verdicts\n";
    for (const json& row : report.at("rows")) {
        out << row.at("trial").get<int>() << ',' << row.at("seed").get<std::uint64_t>()
            << ',' << row.at("algorithm").get<std::string>() << ','
            << row.at("decision").get<std::string>() << ','
            << row.at("wall_ms").get<double>() << ',';
        bool first = true;
        for (auto it = row.at("verdicts").begin(); it != row.at("verdicts").end(); ++it) {
            if (!first) out << ';';
            out << it.key() << '=' << it.value().get<std::string>();
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace fairdiv
