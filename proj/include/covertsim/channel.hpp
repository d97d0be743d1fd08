#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "covertsim/graph.hpp"

namespace covertsim {

enum class Mode { Public, PrivateUniform };

// Finite stand-in for an "unboundedly large" broadcast value. Receivers (and
// the police) classify a signal as huge when it clears kHugeThreshold; the
// three orders of magnitude between the two keep unit-variance noise from
// ever flipping the classification.
constexpr double kHugeValue = 1e6;
constexpr double kHugeThreshold = 1e3;

inline bool is_huge_signal(double s) { return s >= kHugeThreshold; }

struct Message {
    double value = 0.0;
    bool is_huge() const { return is_huge_signal(value); }
};

// One communication round. Receiver-major CSR layout: received(u) holds the
// noised signals from u's neighbors, aligned with net.neighbors(u);
// police_view(u) holds the wiretap's independently noised copies of u's
// *outgoing* message (one copy in public mode, deg(u) copies in private
// uniform mode). Police copies use a separate noise stream, so configuring
// observers never perturbs what receivers see.
class Transcript {
public:
    Transcript(Mode mode, const Network& net, bool with_police);

    Mode mode() const { return mode_; }

    std::span<const double> received(int u) const {
        return {recv_.data() + recv_off_[u], recv_off_[u + 1] - recv_off_[u]};
    }
    std::span<const double> police_view(int u) const {
        return {police_.data() + police_off_[u], police_off_[u + 1] - police_off_[u]};
    }
    bool has_police_view() const { return !police_.empty(); }

    std::span<double> mutable_received(int u) {
        return {recv_.data() + recv_off_[u], recv_off_[u + 1] - recv_off_[u]};
    }
    std::span<double> mutable_police_view(int u) {
        return {police_.data() + police_off_[u], police_off_[u + 1] - police_off_[u]};
    }

private:
    Mode mode_;
    std::vector<std::size_t> recv_off_;
    std::vector<std::size_t> police_off_;
    std::vector<double> recv_;
    std::vector<double> police_;
};

// Public mode: agent u announces one message; every neighbor hears it with
// fresh unit noise, and the wiretap hears one more independently noised copy.
Transcript emit_public(const Network& net, const std::vector<Message>& messages,
                       std::mt19937_64& receiver_rng, std::mt19937_64& police_rng,
                       bool with_police = true, double noise_sd = 1.0);

// Private uniform mode: agent u whispers the same message to each neighbor
// separately; every delivered copy and every wiretapped copy carries its own
// fresh unit noise.
Transcript emit_private_uniform(const Network& net, const std::vector<Message>& messages,
                                std::mt19937_64& receiver_rng, std::mt19937_64& police_rng,
                                bool with_police = true, double noise_sd = 1.0);

}  // namespace covertsim
