#pragma once

namespace faloha {

// What the base station sees for one frame: every RAO is classified as idle,
// single detected transmission, or collision. Detection errors are already
// folded in, so the counts are the (possibly wrong) BS view.
struct FrameObservation {
    int idle_count = 0;
    int success_count = 0;
    int collision_count = 0;

    int total() const { return idle_count + success_count + collision_count; }

    bool valid_for(int rao_count) const {
        return idle_count >= 0 && success_count >= 0 && collision_count >= 0 &&
               total() == rao_count;
    }

    friend bool operator==(const FrameObservation&, const FrameObservation&) = default;
};

} // namespace faloha
