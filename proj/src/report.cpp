#include "covertsim/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "covertsim/population.hpp"

namespace covertsim {

const char* const kCsvHeader =
    "param,regime,mode,protocol,police,n,median_degree,trials,"
    "success,success_lo,success_hi,output_risk,or_lo,or_hi,"
    "msg_risk_analytic,msg_risk_emp,mre_lo,mre_hi,total_risk";

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

const char* mode_name(Mode m) { return m == Mode::Public ? "public" : "private"; }

const char* protocol_name(ProtocolKind k) {
    switch (k) {
        case ProtocolKind::QuorumSensing: return "qs";
        case ProtocolKind::Median: return "median";
        case ProtocolKind::SelfImmolation: return "si";
        case ProtocolKind::AlwaysZero: return "always_zero";
    }
    return "?";
}

std::string regime_label(double rho) {
    switch (classify_regime(rho)) {
        case Regime::Many: return "many";
        case Regime::Few: return "few";
        case Regime::Neither: return "nonstandard";
    }
    return "?";
}

// Best-possible arrest advantage against this protocol's transmissions. The
// wiretap sees 1 copy per agent in public mode and (at the gate) median-degree
// copies in private mode; randomized broadcasts scale by their send
// probability because TV(q*P + (1-q)*Q, Q) = q*TV(P, Q).
double analytic_risk(const Scenario& s) {
    const int copies = s.mode == Mode::Public ? 1 : s.degrees.median;
    switch (s.protocol.kind) {
        case ProtocolKind::QuorumSensing:
        case ProtocolKind::Median:
            return analytic_message_risk(s.protocol.epsilon, copies);
        case ProtocolKind::SelfImmolation:
            return s.protocol.si.q * analytic_message_risk(kHugeValue, copies);
        case ProtocolKind::AlwaysZero:
            return 0.0;
    }
    return 0.0;
}

double default_param(const Scenario& s) {
    return s.protocol.kind == ProtocolKind::SelfImmolation ? s.protocol.si.q
                                                           : s.protocol.epsilon;
}

}  // namespace

std::string result_to_csv(const ExperimentResult& result) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    const double nan = std::nan("");
    const std::string mode = mode_name(result.config.mode);
    const std::string proto = protocol_name(result.config.protocol.kind);
    for (const auto& point : result.points) {
        for (const auto& reg : point.regimes) {
            const double analytic = reg.analytic_message_risk;
            const double total = reg.output_gated.value + analytic;
            auto row = [&](const std::string& police, double emp, double lo, double hi) {
                out << fmt(point.param) << ',' << reg.regime << ',' << mode << ','
                    << proto << ',' << police << ',' << result.n << ','
                    << result.degrees.median << ',' << reg.trials << ','
                    << fmt(reg.success.value) << ',' << fmt(reg.success.ci99.lo) << ','
                    << fmt(reg.success.ci99.hi) << ',' << fmt(reg.output_gated.value)
                    << ',' << fmt(reg.output_gated.ci99.lo) << ','
                    << fmt(reg.output_gated.ci99.hi) << ',' << fmt(analytic) << ','
                    << fmt(emp) << ',' << fmt(lo) << ',' << fmt(hi) << ','
                    << fmt(total) << '\n';
            };
            if (reg.message_risks.empty()) {
                row("none", nan, nan, nan);
            } else {
                for (std::size_t j = 0; j < reg.message_risks.size(); ++j) {
                    const auto& m = reg.message_risks[j];
                    row(result.police_names[j], m.value, m.ci99.lo, m.ci99.hi);
                }
            }
        }
    }
    return out.str();
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate_config(config);
    ExperimentResult res;
    res.config = config;

    const bool swept = !config.sweep.values.empty();
    const std::vector<double> values = swept ? config.sweep.values
                                             : std::vector<double>{0.0};
    for (double v : values) {
        ExperimentConfig c = config;
        if (swept) {
            if (config.sweep.param == "epsilon") {
                c.protocol.epsilon = v;
                if (std::holds_alternative<MimicRebel>(c.population.attack))
                    c.population.attack = MimicRebel{v};  // the mimic tracks the protocol
            } else if (config.sweep.param == "undercover_prob") {
                c.population.undercover_prob = v;
            } else {  // rho_few
                c.population.rho_few = v;
            }
        }
        const Scenario s = build_scenario(c);
        if (res.points.empty()) {
            res.n = s.net.size();
            res.degrees = s.degrees;
            for (const auto& p : s.police) res.police_names.push_back(p.name());
        }

        ParamPointResult point;
        point.param = swept ? v : default_param(s);

        auto add_regime = [&](double rho) {
            const auto records = run_trials(s, rho, c.trials, c.threads);
            RegimeSummary r;
            r.regime = regime_label(rho);
            r.rho = rho;
            r.trials = c.trials;
            r.success = estimate_success(
                records, classify_regime(rho) != Regime::Many || c.nonstandard_regime,
                /*min_trials=*/1);
            r.output_gated = pooled_many_rate(records, Pool::DegreeGated);
            r.output_all = pooled_many_rate(records, Pool::AllRebels);
            r.huge_rate = pooled_huge_rate(records);
            r.analytic_message_risk = analytic_risk(s);
            for (std::size_t j = 0; j < s.police.size(); ++j)
                r.message_risks.push_back(
                    estimate_message_risk(records, static_cast<int>(j)));
            point.regimes.push_back(std::move(r));
        };
        if (c.regimes != RegimeSelection::Few) add_regime(c.population.rho_many);
        if (c.regimes != RegimeSelection::Many) add_regime(c.population.rho_few);
        res.points.push_back(std::move(point));
    }

    if (!config.out.empty()) {
        write_text_file(config.out, result_to_csv(res));
        write_text_file(config.out + ".gp", gnuplot_script(res, config.out));
    }
    return res;
}

std::string gnuplot_script(const ExperimentResult& result, const std::string& csv_path) {
    std::ostringstream out;
    const std::string param = result.config.sweep.param.empty()
                                  ? std::string("parameter")
                                  : result.config.sweep.param;
    out << "# gnuplot script generated alongside " << csv_path << "\n"
        << "set datafile separator ','\n"
        << "set terminal pngcairo size 960,640\n"
        << "set output '" << csv_path << ".png'\n"
        << "set xlabel '" << param << "'\n"
        << "set ylabel 'estimate'\n"
        << "set yrange [0:*]\n"
        << "set key outside\n"
        << "plot '" << csv_path
        << "' using 1:(strcol(2) eq 'many' ? column(9) : NaN) with linespoints"
           " title 'success (many regime)', \\\n"
        << "     '" << csv_path
        << "' using 1:(strcol(2) eq 'few' ? column(12) : NaN) with linespoints"
           " title 'output risk (few regime)', \\\n"
        << "     '" << csv_path
        << "' using 1:(strcol(2) eq 'few' ? column(19) : NaN) with linespoints"
           " title 'total risk (few regime)'\n";
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

}  // namespace covertsim
