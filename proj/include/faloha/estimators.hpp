#pragma once

#include <unordered_map>
#include <vector>

#include "faloha/observation.hpp"

namespace faloha {

struct MomentTriple {
    double expected_idle = 0.0;
    double expected_success = 0.0;
    double expected_collision = 0.0;
};

// Expected idle/success/collision RAO counts for a backlog of n devices over
// F RAOs (detection errors not applied):
//   E_i = F (1 - 1/F)^n,  E_s = n (1 - 1/F)^(n-1),  E_c = F - E_i - E_s.
MomentTriple expected_moments(int backlog, int rao_count);

// Likelihood or probability vector over backlog values {0, ..., n_max}.
struct BacklogDistribution {
    std::vector<double> probs;
    int n_max() const { return static_cast<int>(probs.size()) - 1; }
};

// Moment-matching estimate minimizing the mean absolute moment discrepancy
//   phi(n) = (|E_i(n)-V_i| + |E_s(n)-V_s| + |E_c(n)-V_c|) / 3
// over n in {0..n_max}; ties break toward the smaller n.
int mom_mae_estimate(const FrameObservation& obs, int rao_count, int n_max);

// Closed-form single-moment estimate round(log_{1-1/F}(V_i / F)), clamped to
// [0, n_max]; V_i == 0 saturates to n_max. Requires F >= 2.
int mom_idle_estimate(const FrameObservation& obs, int rao_count, int n_max);

// Occupancy distribution of n devices over F RAOs via the sequential
// placement chain on (idle, singleton) counts: adding one device moves
// (i,s) -> (i-1,s+1) w.p. i/F, (i,s) -> (i,s-1) w.p. s/F, else stays.
// Tables for all n <= n_max are kept with per-n log scaling so that deep
// chains do not underflow.
class OccupancyModel {
public:
    OccupancyModel(int rao_count, int n_max);

    // Exact P{obs | n} for every n. With p_ed > 0 the observation likelihood
    // marginalizes over the per-RAO misdetections that map a true profile to
    // the observed counts (flipped singletons and flipped collisions).
    BacklogDistribution likelihoods(const FrameObservation& obs,
                                    double detection_error_prob) const;

    // log P{obs | n}; -inf marks impossible observations.
    std::vector<double> log_likelihoods(const FrameObservation& obs,
                                        double detection_error_prob) const;

    int rao_count() const { return rao_count_; }
    int n_max() const { return n_max_; }

private:
    int state_index(int idle, int singles) const { return idle * (rao_count_ + 1) + singles; }
    // (state index, misdetection weight) pairs compatible with obs
    std::vector<std::pair<int, double>> profile_weights(const FrameObservation& obs,
                                                        double p_ed) const;

    int rao_count_ = 0;
    int n_max_ = 0;
    std::vector<std::vector<double>> table_; // per n: (F+1)^2 scaled state probs
    std::vector<double> log_scale_;          // per n: log of the removed scale
    std::vector<std::vector<double>> binom_; // C(n, k) for n, k <= F
};

struct MlEstimate {
    int backlog = 0;
    // No n <= n_max can produce the observation (e.g. V_s > n_max); the
    // estimate falls back to n_max.
    bool impossible = false;
};

// argmax_n P{obs | n}; ties break toward the smaller n.
MlEstimate ml_estimate(const FrameObservation& obs, int rao_count, int n_max,
                       double detection_error_prob);

// Per-episode front end that reuses one OccupancyModel and memoizes the
// estimate per distinct observation.
class MlEstimator {
public:
    MlEstimator(int rao_count, int n_max, double detection_error_prob);
    MlEstimate estimate(const FrameObservation& obs);
    const OccupancyModel& model() const { return model_; }

private:
    OccupancyModel model_;
    double p_ed_;
    std::unordered_map<int, MlEstimate> cache_;
};

// Precomputed-moment front end for the MAE scan.
class MomMaeEstimator {
public:
    MomMaeEstimator(int rao_count, int n_max);
    int estimate(const FrameObservation& obs) const;

private:
    int rao_count_;
    std::vector<MomentTriple> moments_; // indexed by n
};

} // namespace faloha
