#pragma once

#include <span>
#include <string>

#include "covertsim/protocols.hpp"

namespace covertsim {

// Arrest rules operate on the police view of one agent's outgoing traffic.
// The police never see roles, rho, or receiver-side signals.
enum class PoliceKind {
    NoArrest,     // baseline: arrests nobody
    NpThreshold,  // likelihood-ratio test for "sent eps" vs "sent 0":
                  // arrest iff mean(view) >= eps/2 (optimal against unit
                  // Gaussian noise by Neyman-Pearson)
    Reverse,      // runs the rebels' own decision rule on the police view and
                  // arrests whoever it says outputs Many
};

struct Police {
    PoliceKind kind = PoliceKind::NoArrest;
    double epsilon = 0.2;  // NpThreshold decision scale
    Protocol decider;      // Reverse: the protocol being turned against its users

    // view: the wiretap copies of this agent's outgoing message.
    // deg/median_deg: the agent's true degree and the population median, used
    // by the reverse rule's degree gate and count thresholds. In private mode
    // view.size() == deg and the reverse rule is *exactly* the rebel decider;
    // in public mode there is a single copy and the rule is applied in
    // per-copy normalized form (reported separately, not a theorem check).
    bool arrests(std::span<const double> view, int deg, int median_deg) const;

    std::string name() const;
};

Police make_no_arrest();
Police make_np_threshold(double epsilon);
Police make_reverse(const Protocol& decider);

// Largest advantage any arrest rule can achieve in telling a rebel
// transmission (value eps on each of `copies` observed signals) from an
// obedient one: the total variation distance 2*Phi(eps*sqrt(copies)/2) - 1.
double analytic_message_risk(double epsilon, int copies);

}  // namespace covertsim
