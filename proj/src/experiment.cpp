#include "covertsim/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>

#include "covertsim/population.hpp"
#include "covertsim/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace covertsim {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::invalid_argument("config line " + std::to_string(line_no) + ": " + what);
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

double parse_double(const std::string& v, int line_no, const std::string& key) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size())
        fail(line_no, "key '" + key + "': '" + v + "' is not a number");
    return x;
}

long long parse_int(const std::string& v, int line_no, const std::string& key) {
    char* end = nullptr;
    const long long x = std::strtoll(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size())
        fail(line_no, "key '" + key + "': '" + v + "' is not an integer");
    return x;
}

std::uint64_t parse_u64(const std::string& v, int line_no, const std::string& key) {
    char* end = nullptr;
    const unsigned long long x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || v.empty() || v[0] == '-')
        fail(line_no, "key '" + key + "': '" + v + "' is not a non-negative integer");
    return x;
}

bool parse_bool(const std::string& v, int line_no, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    fail(line_no, "key '" + key + "': '" + v + "' is not a boolean");
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig c;
    std::string attack_kind = "huge_positive";
    double attack_value = 0.0;
    bool attack_value_set = false;
    int attack_line = 0;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail(line_no, "expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");
        if (value.empty()) fail(line_no, "empty value for key '" + key + "'");

        if (key == "topology") {
            if (value == "complete") c.topology.kind = TopologyKind::Complete;
            else if (value == "regular") c.topology.kind = TopologyKind::Regular;
            else if (value == "erdos_renyi") c.topology.kind = TopologyKind::ErdosRenyi;
            else if (value == "edge_list") c.topology.kind = TopologyKind::EdgeList;
            else fail(line_no, "unknown topology '" + value + "'");
        } else if (key == "n") {
            c.topology.n = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "degree") {
            c.topology.degree = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "p") {
            c.topology.p = parse_double(value, line_no, key);
        } else if (key == "edge_list") {
            c.topology.edge_list = value;
        } else if (key == "mode") {
            if (value == "public") c.mode = Mode::Public;
            else if (value == "private") c.mode = Mode::PrivateUniform;
            else fail(line_no, "unknown mode '" + value + "' (public|private)");
        } else if (key == "protocol") {
            if (value == "qs") c.protocol.kind = ProtocolKind::QuorumSensing;
            else if (value == "median") c.protocol.kind = ProtocolKind::Median;
            else if (value == "si") c.protocol.kind = ProtocolKind::SelfImmolation;
            else if (value == "always_zero") c.protocol.kind = ProtocolKind::AlwaysZero;
            else fail(line_no, "unknown protocol '" + value + "'");
        } else if (key == "epsilon") {
            c.protocol.epsilon = parse_double(value, line_no, key);
        } else if (key == "si_c") {
            c.protocol.si_c = parse_double(value, line_no, key);
        } else if (key == "si_q") {
            c.protocol.si_q = parse_double(value, line_no, key);
        } else if (key == "si_tau") {
            c.protocol.si_tau = parse_double(value, line_no, key);
        } else if (key == "baseline_decider") {
            if (value == "never_many") c.protocol.baseline = BaselineDecider::NeverMany;
            else if (value == "always_many") c.protocol.baseline = BaselineDecider::AlwaysMany;
            else fail(line_no, "unknown baseline_decider '" + value + "'");
        } else if (key == "rho_many") {
            c.population.rho_many = parse_double(value, line_no, key);
        } else if (key == "rho_few") {
            c.population.rho_few = parse_double(value, line_no, key);
        } else if (key == "undercover_prob") {
            c.population.undercover_prob = parse_double(value, line_no, key);
        } else if (key == "attack") {
            if (value != "huge_positive" && value != "huge_negative" &&
                value != "constant" && value != "mimic_rebel")
                fail(line_no, "unknown attack '" + value + "'");
            attack_kind = value;
            attack_line = line_no;
        } else if (key == "attack_value") {
            attack_value = parse_double(value, line_no, key);
            attack_value_set = true;
            if (attack_line == 0) attack_line = line_no;
        } else if (key == "planted_rebels") {
            c.population.planted_rebels = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "planted_undercover") {
            c.population.planted_undercover =
                static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "police") {
            c.police.clear();
            if (value != "none") {
                for (const auto& name : split_csv(value)) {
                    if (name == "no_arrest") c.police.push_back(PoliceKind::NoArrest);
                    else if (name == "np_threshold")
                        c.police.push_back(PoliceKind::NpThreshold);
                    else if (name == "reverse") c.police.push_back(PoliceKind::Reverse);
                    else fail(line_no, "unknown police '" + name + "'");
                }
            }
        } else if (key == "trials") {
            c.trials = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "seed") {
            c.seed = parse_u64(value, line_no, key);
        } else if (key == "threads") {
            c.threads = static_cast<int>(parse_int(value, line_no, key));
        } else if (key == "nonstandard_regime") {
            c.nonstandard_regime = parse_bool(value, line_no, key);
        } else if (key == "regimes") {
            if (value == "both") c.regimes = RegimeSelection::Both;
            else if (value == "many") c.regimes = RegimeSelection::Many;
            else if (value == "few") c.regimes = RegimeSelection::Few;
            else fail(line_no, "unknown regimes '" + value + "' (both|many|few)");
        } else if (key == "sweep_param") {
            c.sweep.param = value;
        } else if (key == "sweep_values") {
            c.sweep.values.clear();
            for (const auto& item : split_csv(value))
                c.sweep.values.push_back(parse_double(item, line_no, key));
        } else if (key == "out") {
            c.out = value;
        } else {
            fail(line_no, "unknown key '" + key + "'");
        }
    }

    if (attack_kind == "constant") {
        c.population.attack = ConstantValue{attack_value};
    } else {
        if (attack_value_set)
            fail(attack_line, "attack_value only applies to attack=constant");
        if (attack_kind == "huge_positive") c.population.attack = HugePositive{};
        else if (attack_kind == "huge_negative") c.population.attack = HugeNegative{};
        else c.population.attack = MimicRebel{c.protocol.epsilon};
    }
    return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void validate_config(const ExperimentConfig& config) {
    auto bad = [](const std::string& what) {
        throw std::invalid_argument("config: " + what);
    };
    const auto& t = config.topology;
    switch (t.kind) {
        case TopologyKind::Complete:
            if (t.n < 2) bad("complete topology needs n >= 2");
            break;
        case TopologyKind::Regular:
            if (t.n < 2) bad("regular topology needs n >= 2");
            if (t.degree <= 0 || t.degree >= t.n)
                bad("regular topology needs 0 < degree < n");
            if ((static_cast<long long>(t.n) * t.degree) % 2 != 0)
                bad("regular topology needs n*degree even");
            break;
        case TopologyKind::ErdosRenyi:
            if (t.n < 2) bad("erdos_renyi topology needs n >= 2");
            if (!(t.p >= 0.0 && t.p <= 1.0)) bad("erdos_renyi needs p in [0,1]");
            break;
        case TopologyKind::EdgeList:
            if (t.edge_list.empty()) bad("edge_list topology needs edge_list=<path>");
            break;
    }

    const auto& pr = config.protocol;
    if (pr.kind != ProtocolKind::SelfImmolation) {
        if (!(pr.epsilon > 0.0 && pr.epsilon < 1.0))
            bad("epsilon must lie in (0,1)");
    }
    if (pr.kind == ProtocolKind::SelfImmolation) {
        if (pr.si_q.has_value() != pr.si_tau.has_value())
            bad("si_q and si_tau must be given together (or derive both from si_c)");
        if (pr.si_q && !(*pr.si_q >= 0.0 && *pr.si_q <= 1.0))
            bad("si_q must lie in [0,1]");
        if (pr.si_tau && !(*pr.si_tau > 0.0)) bad("si_tau must be positive");
        if (!pr.si_q && !(pr.si_c > 0.0)) bad("si_c must be positive");
    }

    const auto& pop = config.population;
    if (!(pop.rho_many >= 0.0 && pop.rho_many <= 1.0)) bad("rho_many must lie in [0,1]");
    if (!(pop.rho_few >= 0.0 && pop.rho_few <= 1.0)) bad("rho_few must lie in [0,1]");
    if (!config.nonstandard_regime) {
        if (config.regimes != RegimeSelection::Few &&
            classify_regime(pop.rho_many) != Regime::Many)
            bad("rho_many is outside the many regime (rho >= 0.8); "
                "set nonstandard_regime=true to run it anyway");
        if (config.regimes != RegimeSelection::Many &&
            classify_regime(pop.rho_few) != Regime::Few)
            bad("rho_few is outside the few regime (rho <= 0.2); "
                "set nonstandard_regime=true to run it anyway");
    }
    if (!(pop.undercover_prob >= 0.0 && pop.undercover_prob < 1.0))
        bad("undercover_prob must lie in [0,1)");
    if (pop.planted_rebels < 0 || pop.planted_undercover < 0)
        bad("planted counts must be non-negative");
    if (const auto* m = std::get_if<MimicRebel>(&pop.attack); m && !(m->epsilon > 0.0))
        bad("mimic_rebel attack needs a positive epsilon");

    if (config.trials < 1) bad("trials must be >= 1");
    if (config.threads < 0) bad("threads must be >= 0");

    const auto& sw = config.sweep;
    if (!sw.param.empty()) {
        if (sw.param != "epsilon" && sw.param != "undercover_prob" &&
            sw.param != "rho_few")
            bad("sweep_param must be epsilon, undercover_prob or rho_few");
        if (sw.values.empty()) bad("sweep_param set but sweep_values is empty");
        for (double v : sw.values) {
            if (sw.param == "epsilon" && !(v > 0.0 && v < 1.0))
                bad("swept epsilon values must lie in (0,1)");
            if (sw.param == "undercover_prob" && !(v >= 0.0 && v < 1.0))
                bad("swept undercover_prob values must lie in [0,1)");
            if (sw.param == "rho_few") {
                if (!(v >= 0.0 && v <= 1.0)) bad("swept rho_few values must lie in [0,1]");
                if (!config.nonstandard_regime && classify_regime(v) != Regime::Few)
                    bad("swept rho_few value outside the few regime; "
                        "set nonstandard_regime=true to run it anyway");
            }
        }
    } else if (!sw.values.empty()) {
        bad("sweep_values set but sweep_param is empty");
    }
}

Scenario build_scenario(const ExperimentConfig& config) {
    validate_config(config);
    auto graph_rng = rng::engine(config.seed, 0, rng::Stream::Graph);
    Network net = [&]() -> Network {
        const auto& t = config.topology;
        switch (t.kind) {
            case TopologyKind::Complete: return build_complete(t.n);
            case TopologyKind::Regular:
                return build_random_regular(t.n, t.degree, graph_rng);
            case TopologyKind::ErdosRenyi: return build_erdos_renyi(t.n, t.p, graph_rng);
            case TopologyKind::EdgeList: return load_edge_list(t.edge_list);
        }
        throw std::logic_error("unreachable topology kind");
    }();
    const DegreeStats ds = degree_stats(net);
    if (ds.median < 1)
        throw std::invalid_argument(
            "topology: median degree is 0; the decision rules need it >= 1");
    if (config.population.planted_rebels + config.population.planted_undercover >
        net.size())
        throw std::invalid_argument("config: planted roles exceed the agent count");

    Protocol proto;
    proto.kind = config.protocol.kind;
    proto.epsilon = config.protocol.epsilon;
    proto.baseline = config.protocol.baseline;
    if (proto.kind == ProtocolKind::SelfImmolation) {
        if (config.protocol.si_q)
            proto.si = SelfImmolationParams{*config.protocol.si_q, *config.protocol.si_tau};
        else
            proto.si = si_params_from_rate_constant(config.protocol.si_c, net.size(),
                                                    ds.median);
    }

    Scenario s{std::move(net), ds,  config.mode,
               proto,          {},  config.population,
               config.seed,    1.0};
    for (const PoliceKind k : config.police) {
        switch (k) {
            case PoliceKind::NoArrest: s.police.push_back(make_no_arrest()); break;
            case PoliceKind::NpThreshold:
                s.police.push_back(make_np_threshold(config.protocol.epsilon));
                break;
            case PoliceKind::Reverse: s.police.push_back(make_reverse(proto)); break;
        }
    }
    return s;
}

TrialCounts run_trial(const Scenario& s, double rho, std::uint64_t trial_index) {
    const int n = s.net.size();
    auto roles_rng = rng::engine(s.seed, trial_index, rng::Stream::Roles);
    const auto& pop = s.population;
    const RoleSample sample =
        (pop.planted_rebels > 0 || pop.planted_undercover > 0)
            ? sample_roles_planted(n, rho, pop.undercover_prob, pop.planted_rebels,
                                   pop.planted_undercover, roles_rng)
            : sample_roles(n, rho, pop.undercover_prob, roles_rng);

    auto coins_rng = rng::engine(s.seed, trial_index, rng::Stream::Coins);
    std::vector<Message> messages(n);
    std::int64_t huge = 0;
    for (int i = 0; i < n; ++i) {
        switch (sample.roles[i]) {
            case Role::Obedient: messages[i] = obedient_message(); break;
            case Role::Rebel:
                messages[i] = s.protocol.message(coins_rng);
                if (messages[i].is_huge()) ++huge;
                break;
            case Role::Undercover:
                messages[i] = undercover_message(pop.attack);
                break;
        }
    }

    auto receiver_rng = rng::engine(s.seed, trial_index, rng::Stream::Receiver);
    auto police_rng = rng::engine(s.seed, trial_index, rng::Stream::Police);
    const bool with_police = !s.police.empty();
    const Transcript tr =
        s.mode == Mode::Public
            ? emit_public(s.net, messages, receiver_rng, police_rng, with_police,
                          s.noise_sd)
            : emit_private_uniform(s.net, messages, receiver_rng, police_rng,
                                   with_police, s.noise_sd);

    TrialCounts t;
    t.trial = static_cast<std::int64_t>(trial_index);
    t.rho = rho;
    t.rebels = sample.rebel_count;
    t.obedient = sample.obedient_count;
    t.undercover = sample.undercover_count;
    t.huge_broadcasts = huge;
    t.arrests.resize(s.police.size());
    for (int i = 0; i < n; ++i) {
        const int deg = s.net.degree(i);
        const Role role = sample.roles[i];
        if (role == Role::Rebel) {
            if (deg >= s.degrees.median) ++t.gated_rebels;
            if (s.protocol.decide(tr.received(i), deg, s.degrees.median) ==
                RebelOutput::Many)
                ++t.many;
        }
        if (with_police && role != Role::Undercover) {
            for (std::size_t p = 0; p < s.police.size(); ++p) {
                if (s.police[p].arrests(tr.police_view(i), deg, s.degrees.median)) {
                    if (role == Role::Rebel)
                        ++t.arrests[p].rebel_arrests;
                    else
                        ++t.arrests[p].obedient_arrests;
                }
            }
        }
    }
    return t;
}

std::vector<TrialCounts> run_trials_serial(const Scenario& s, double rho, int trials) {
    if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
    std::vector<TrialCounts> out(trials);
    for (int t = 0; t < trials; ++t)
        out[t] = run_trial(s, rho, static_cast<std::uint64_t>(t));
    return out;
}

std::vector<TrialCounts> run_trials(const Scenario& s, double rho, int trials,
                                    int threads) {
    if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");
    if (threads < 0) throw std::invalid_argument("run_trials: threads must be >= 0");
    if (threads == 1) return run_trials_serial(s, rho, trials);
    std::vector<TrialCounts> out(trials);
#ifdef _OPENMP
    const int want = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(want)
    for (int t = 0; t < trials; ++t)
        out[t] = run_trial(s, rho, static_cast<std::uint64_t>(t));
#else
    for (int t = 0; t < trials; ++t)
        out[t] = run_trial(s, rho, static_cast<std::uint64_t>(t));
#endif
    return out;
}

}  // namespace covertsim
