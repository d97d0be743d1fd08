#include "covertsim/channel.hpp"

#include <stdexcept>

namespace covertsim {

namespace {

void check_inputs(const Network& net, const std::vector<Message>& messages,
                  double noise_sd) {
    if (static_cast<int>(messages.size()) != net.size())
        throw std::invalid_argument("emit: one message per agent required");
#ifndef COVERTSIM_ALLOW_TEST_NOISE
    // Unit noise is part of the model; anything else exists only so tests can
    // pin signals exactly, and release builds refuse it.
    if (noise_sd != 1.0)
        throw std::logic_error("emit: noise_sd is fixed at 1.0 outside test builds");
#endif
    if (noise_sd < 0.0) throw std::invalid_argument("emit: negative noise_sd");
}

}  // namespace

Transcript::Transcript(Mode mode, const Network& net, bool with_police) : mode_(mode) {
    const int n = net.size();
    recv_off_.resize(n + 1);
    police_off_.resize(n + 1);
    recv_off_[0] = police_off_[0] = 0;
    for (int u = 0; u < n; ++u) {
        const std::size_t deg = static_cast<std::size_t>(net.degree(u));
        recv_off_[u + 1] = recv_off_[u] + deg;
        const std::size_t copies =
            !with_police ? 0 : (mode == Mode::Public ? 1 : deg);
        police_off_[u + 1] = police_off_[u] + copies;
    }
    recv_.resize(recv_off_[n]);
    police_.resize(police_off_[n]);
}

namespace {

// Shared emission core. Receiver noise comes first and only ever from
// receiver_rng, police noise only from police_rng, so adding or removing the
// wiretap cannot shift what receivers hear. Agent-major iteration keeps the
// draw order deterministic.
Transcript emit(Mode mode, const Network& net, const std::vector<Message>& messages,
                std::mt19937_64& receiver_rng, std::mt19937_64& police_rng,
                bool with_police, double noise_sd) {
    check_inputs(net, messages, noise_sd);
    Transcript t(mode, net, with_police);
    const int n = net.size();
    std::normal_distribution<double> noise(0.0, 1.0);

    for (int u = 0; u < n; ++u) {
        auto out = t.mutable_received(u);
        const auto& nb = net.neighbors(u);
        for (std::size_t k = 0; k < nb.size(); ++k)
            out[k] = messages[nb[k]].value + noise_sd * noise(receiver_rng);
    }
    if (with_police) {
        std::normal_distribution<double> pnoise(0.0, 1.0);
        for (int u = 0; u < n; ++u) {
            auto view = t.mutable_police_view(u);
            for (double& s : view)
                s = messages[u].value + noise_sd * pnoise(police_rng);
        }
    }
    return t;
}

}  // namespace

Transcript emit_public(const Network& net, const std::vector<Message>& messages,
                       std::mt19937_64& receiver_rng, std::mt19937_64& police_rng,
                       bool with_police, double noise_sd) {
    return emit(Mode::Public, net, messages, receiver_rng, police_rng, with_police,
                noise_sd);
}

Transcript emit_private_uniform(const Network& net, const std::vector<Message>& messages,
                                std::mt19937_64& receiver_rng, std::mt19937_64& police_rng,
                                bool with_police, double noise_sd) {
    return emit(Mode::PrivateUniform, net, messages, receiver_rng, police_rng,
                with_police, noise_sd);
}

}  // namespace covertsim
