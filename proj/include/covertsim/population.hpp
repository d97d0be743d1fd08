#pragma once

#include <random>
#include <vector>

namespace covertsim {

enum class Role : unsigned char { Obedient, Rebel, Undercover };

// Regimes the protocols are asked to distinguish. rho in (0.2, 0.8) is
// neither: no guarantee applies there and estimators reject such batches
// unless explicitly told otherwise.
enum class Regime { Few, Many, Neither };

inline Regime classify_regime(double rho) {
    if (rho >= 0.8) return Regime::Many;
    if (rho <= 0.2) return Regime::Few;
    return Regime::Neither;
}

struct RoleSample {
    std::vector<Role> roles;
    int rebel_count = 0;
    int obedient_count = 0;
    int undercover_count = 0;
};

// Independent per-agent draw, one uniform each: undercover with probability
// undercover_prob, otherwise rebel with probability rho. Agents never learn
// rho; it exists only here and in the analysis layer.
RoleSample sample_roles(int n, double rho, double undercover_prob,
                        std::mt19937_64& rng);

// Same draw, then forces planted_rebels / planted_undercover uniformly chosen
// agents into the given role (used to realize "exactly one rebel" and
// "exactly one infiltrator" setups without conditioning loops).
RoleSample sample_roles_planted(int n, double rho, double undercover_prob,
                                int planted_rebels, int planted_undercover,
                                std::mt19937_64& rng);

}  // namespace covertsim
