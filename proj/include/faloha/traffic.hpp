#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "faloha/rng.hpp"
#include "faloha/sim.hpp"

namespace faloha {

enum class PeriodicMode { deterministic, beta };

struct TrafficConfig {
    int bernoulli_device_count = 0;  // N_u
    double bernoulli_prob = 0.0;     // per device, per frame
    int periodic_device_count = 0;   // N_p
    int period_frames = 1;           // T_p
    PeriodicMode periodic_mode = PeriodicMode::deterministic;
    double beta_alpha = 3.0;
    double beta_beta = 4.0;
    // All periodic devices generate at offset 0 of the period (one shared
    // spike); when false each device keeps its own random fixed offset.
    bool shared_phase = true;
    std::uint64_t rng_seed = 1;

    int total_devices() const { return bernoulli_device_count + periodic_device_count; }
    void validate() const;
};

// Mass of a Beta(alpha, beta) arrival instant falling in each of `period`
// equal cells of the normalized period, computed from regularized incomplete
// beta differences. Non-negative, sums to 1, symmetric when alpha == beta.
std::vector<double> beta_offset_pmf(double alpha, double beta, int period);

// Packet generators for the simulator. A device that is still busy with a
// previous packet skips its generation instant (one packet per device).
class TrafficSource {
public:
    explicit TrafficSource(const TrafficConfig& config);

    // Arrivals for one frame; call once per frame in order. `busy[id] != 0`
    // marks devices that currently hold a packet and are not eligible.
    std::vector<DeviceId> arrivals_for_frame(int frame_index,
                                             std::span<const std::uint8_t> busy);

    const TrafficConfig& config() const { return config_; }
    int device_count() const { return config_.total_devices(); }
    const std::vector<int>& periodic_phases() const { return phase_; }

private:
    void draw_period_offsets();

    TrafficConfig config_;
    Rng rng_;
    std::vector<int> phase_;         // deterministic mode: fixed offset per device
    std::vector<int> period_offset_; // beta mode: this period's draw per device
    std::vector<double> offset_cdf_; // cumulative beta cell masses
};

} // namespace faloha
