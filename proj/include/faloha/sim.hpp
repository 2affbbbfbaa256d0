#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "faloha/observation.hpp"
#include "faloha/rng.hpp"

namespace faloha {

using DeviceId = std::uint32_t;

struct SimConfig {
    int rao_count = 54;                // F, RAOs per frame
    double detection_error_prob = 0.05; // p_ed, per non-idle RAO
    int max_attempts = 10;             // transmissions allowed per packet
    std::uint64_t rng_seed = 1;

    void validate() const; // throws ConfigError
};

struct DeviceState {
    DeviceId device_id = 0;
    int attempts_used = 0;
    bool is_active = false;
};

// One line of an episode trace.
struct FrameTrace {
    int frame_index = 0;
    int true_backlog = 0;       // devices that transmitted in this frame
    FrameObservation observation;
    int carryover_count = 0;    // devices retransmitting next frame
    int dropped_count = 0;      // devices that exhausted their budget this frame
};

struct FrameResult {
    FrameObservation observation;
    std::vector<DeviceId> acknowledged;
    std::vector<DeviceId> retry;
    std::vector<DeviceId> dropped;
};

// One contention round. Every device picks one of F RAOs uniformly (draws
// consumed in device-id order), then each non-idle RAO is independently
// misread as idle with probability p_ed. An undetected single transmission
// gets no acknowledgement and is retried like a collision. The returned sets
// partition the input devices.
FrameResult run_frame(std::span<const DeviceState> active_devices,
                      const SimConfig& config, Rng& rng);

// Backlog recursion N^{t+1} = |retry| + |arrivals|. The two sets must be
// disjoint (one pending packet per device); throws InvariantError otherwise.
// Returns the merged set sorted by id.
std::vector<DeviceId> step_backlog(const std::vector<DeviceId>& prev_retry,
                                   const std::vector<DeviceId>& new_arrivals);

class TrafficSource;

// Frame-stepped protocol state machine. Owns per-device attempt counters and
// the episode RNG stream; a given (config, arrival sequence) reproduces the
// exact same trace.
class Simulator {
public:
    Simulator(const SimConfig& config, int device_count);

    // Advance one frame: activate arrivals, run the contention round, apply
    // acknowledgement / retry / drop outcomes.
    FrameTrace step(const std::vector<DeviceId>& new_arrivals);

    const std::vector<DeviceId>& active_ids() const { return active_; }
    const std::vector<DeviceId>& carryover_ids() const { return carry_; }
    bool is_active(DeviceId id) const { return devices_.at(id).is_active; }
    int attempts_used(DeviceId id) const { return devices_.at(id).attempts_used; }
    int frame_index() const { return frame_; }
    int device_count() const { return static_cast<int>(devices_.size()); }
    const SimConfig& config() const { return config_; }

    // Marks devices holding a packet into the next frame. `busy` must have
    // device_count() entries.
    void write_busy_mask(std::vector<std::uint8_t>& busy) const;

private:
    SimConfig config_;
    Rng rng_;
    int frame_ = 0;
    std::vector<DeviceState> devices_; // indexed by id
    std::vector<DeviceId> active_;     // transmitters of the frame just run
    std::vector<DeviceId> carry_;      // retry set awaiting the next frame
};

std::vector<FrameTrace> run_episode(const SimConfig& config, TrafficSource& traffic,
                                    int num_frames);

} // namespace faloha
