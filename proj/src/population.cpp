#include "covertsim/population.hpp"

#include <stdexcept>

namespace covertsim {

namespace {

void count(RoleSample& s) {
    s.rebel_count = s.obedient_count = s.undercover_count = 0;
    for (Role r : s.roles) {
        if (r == Role::Rebel) ++s.rebel_count;
        else if (r == Role::Obedient) ++s.obedient_count;
        else ++s.undercover_count;
    }
}

}  // namespace

RoleSample sample_roles(int n, double rho, double undercover_prob,
                        std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("sample_roles: need n >= 1");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("sample_roles: rho must lie in [0,1]");
    if (!(undercover_prob >= 0.0 && undercover_prob <= 1.0))
        throw std::invalid_argument("sample_roles: undercover_prob must lie in [0,1]");

    RoleSample s;
    s.roles.resize(n);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    // one uniform per agent: [0,u) undercover, [u, u+(1-u)rho) rebel
    const double rebel_cut = undercover_prob + (1.0 - undercover_prob) * rho;
    for (int i = 0; i < n; ++i) {
        const double x = unif(rng);
        s.roles[i] = x < undercover_prob ? Role::Undercover
                   : x < rebel_cut       ? Role::Rebel
                                         : Role::Obedient;
    }
    count(s);
    return s;
}

RoleSample sample_roles_planted(int n, double rho, double undercover_prob,
                                int planted_rebels, int planted_undercover,
                                std::mt19937_64& rng) {
    if (planted_rebels < 0 || planted_undercover < 0 ||
        planted_rebels + planted_undercover > n)
        throw std::invalid_argument("sample_roles_planted: plant counts out of range");

    RoleSample s = sample_roles(n, rho, undercover_prob, rng);
    std::uniform_int_distribution<int> pick(0, n - 1);
    // Plants overwrite whatever the base draw produced; distinct slots so one
    // plant cannot erase another.
    std::vector<int> slots;
    slots.reserve(planted_rebels + planted_undercover);
    while (static_cast<int>(slots.size()) < planted_rebels + planted_undercover) {
        const int i = pick(rng);
        bool taken = false;
        for (int j : slots) taken |= (j == i);
        if (!taken) slots.push_back(i);
    }
    for (int k = 0; k < planted_rebels; ++k) s.roles[slots[k]] = Role::Rebel;
    for (int k = planted_rebels; k < planted_rebels + planted_undercover; ++k)
        s.roles[slots[k]] = Role::Undercover;
    count(s);
    return s;
}

}  // namespace covertsim
