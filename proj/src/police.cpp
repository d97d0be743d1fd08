#include "covertsim/police.hpp"

#include "covertsim/stats.hpp"

#include <stdexcept>

namespace covertsim {

bool Police::arrests(std::span<const double> view, int deg, int median_deg) const {
    switch (kind) {
        case PoliceKind::NoArrest:
            return false;
        case PoliceKind::NpThreshold: {
            if (view.empty()) return false;
            double sum = 0.0;
            for (double s : view) sum += s;
            return sum >= 0.5 * epsilon * static_cast<double>(view.size());
        }
        case PoliceKind::Reverse: {
            // In private mode the view has deg copies and this is literally
            // the rebel decider run against the sender. With fewer copies
            // (public mode) the rule is applied per-copy-normalized, keeping
            // the agent's true degree for the gate.
            if (deg < median_deg) return false;  // decider would be Silent
            if (view.empty()) return false;
            const int copies = static_cast<int>(view.size());
            switch (decider.kind) {
                case ProtocolKind::QuorumSensing:
                    return qs_decide(view, copies, 0, {decider.epsilon}) ==
                           RebelOutput::Many;
                case ProtocolKind::Median:
                    return median_decide(view, copies, 0, {decider.epsilon}) ==
                           RebelOutput::Many;
                case ProtocolKind::SelfImmolation: {
                    // same huge-count threshold per copy as the decider uses
                    // per received signal: strictly above tau * copies/median
                    if (median_deg < 1)
                        throw std::invalid_argument("reverse: median degree must be >= 1");
                    std::int64_t huge = 0;
                    for (double s : view) huge += is_huge_signal(s) ? 1 : 0;
                    return static_cast<double>(huge) >
                           decider.si.tau * copies / median_deg;
                }
                case ProtocolKind::AlwaysZero:
                    return decider.baseline == BaselineDecider::AlwaysMany;
            }
            throw std::logic_error("Police::arrests: unknown decider");
        }
    }
    throw std::logic_error("Police::arrests: unknown kind");
}

std::string Police::name() const {
    switch (kind) {
        case PoliceKind::NoArrest: return "no_arrest";
        case PoliceKind::NpThreshold: return "np_threshold";
        case PoliceKind::Reverse: return "reverse";
    }
    return "unknown";
}

Police make_no_arrest() { return Police{PoliceKind::NoArrest, 0.0, {}}; }

Police make_np_threshold(double epsilon) {
    if (epsilon <= 0.0)
        throw std::invalid_argument("np_threshold: epsilon must be positive");
    return Police{PoliceKind::NpThreshold, epsilon, {}};
}

Police make_reverse(const Protocol& decider) {
    if (decider.kind == ProtocolKind::AlwaysZero &&
        decider.baseline == BaselineDecider::AlwaysMany)
        throw std::invalid_argument("reverse: always-many decider arrests everyone");
    return Police{PoliceKind::Reverse, 0.0, decider};
}

double analytic_message_risk(double epsilon, int copies) {
    if (copies < 1) throw std::invalid_argument("analytic_message_risk: copies >= 1");
    return tv_gauss(epsilon, copies);
}

}  // namespace covertsim
