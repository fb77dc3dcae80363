#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cospec/rooted_graph.hpp"
#include "cospec/words.hpp"

namespace cospec {

// Symmetric step distribution over the moves of a family, plus hold mass on
// the identity. weight[m] must equal weight[inverse(m)] and
// hold + sum(weight) must be 1 (within 1e-12).
struct WalkKernel {
    GroupFamilySpec spec;
    std::vector<double> weight;
    double hold = 0.0;

    static WalkKernel srw(const GroupFamilySpec& spec);
    static WalkKernel lazy_srw(const GroupFamilySpec& spec, double hold);
    void validate() const;  // throws kernel_error
};

// nu_t = (1-t) nu + t delta_id
WalkKernel lazify(const WalkKernel& k, double t);

// n-step distribution. Stored sparsely (hash map) while the support is below
// a quarter of the vertex count, densely beyond that.
struct Distribution {
    int32_t steps_taken = 0;
    bool exact = false;
    bool is_dense = false;
    std::unordered_map<int32_t, double> sparse;
    std::vector<double> dense;
    int64_t support_end = 0;  // dense entries beyond this are zero

    double at(int32_t v) const;
    double total_mass() const;
    template <typename F>
    void for_each(F&& fn) const {
        if (is_dense) {
            for (int64_t v = 0; v < support_end; ++v)
                if (dense[v] != 0.0) fn(static_cast<int32_t>(v), dense[v]);
        } else {
            for (const auto& [v, p] : sparse) fn(v, p);
        }
    }
};

// Incremental stepper: exact DP in pull form over the BFS prefix that can
// carry mass at the current step count. Distributions at successive steps
// are read off without restarting.
class WalkEvolver {
  public:
    WalkEvolver(const RootedGraph& g, const WalkKernel& k, int32_t start);

    void step();            // advance one walk step
    void advance(int n);    // n more steps
    int steps() const { return steps_; }
    bool exact() const;     // no mass lost to the truncation boundary so far
    double mass_at(int32_t v) const { return cur_[v]; }
    double mass_in(const VertexSet& target) const;  // compensated summation
    double total_mass() const;
    Distribution snapshot() const;

  private:
    const RootedGraph& g_;
    WalkKernel k_;
    int32_t start_;
    int steps_ = 0;
    std::vector<double> cur_, nxt_;
    int64_t support_end_ = 0;
};

Distribution evolve(const RootedGraph& g, const WalkKernel& k, int32_t start, int n);

// Sum of the distribution over the target set (Kahan summation).
double hit_probability(const Distribution& dist, const VertexSet& target);

struct WalkSample {
    int32_t endpoint;
    bool valid;  // false when the trajectory was clamped at the truncation boundary
};

WalkSample sample_walk(const RootedGraph& g, const WalkKernel& k, int32_t start, int n,
                       uint64_t seed, uint64_t trajectory_index = 0);

struct BatchHitResult {
    int64_t samples = 0;
    int64_t hits = 0;
    int64_t invalid = 0;
    double hit_frequency() const { return samples ? static_cast<double>(hits) / samples : 0.0; }
    double invalid_fraction() const {
        return samples ? static_cast<double>(invalid) / samples : 0.0;
    }
};

BatchHitResult sample_batch(const RootedGraph& g, const WalkKernel& k, int32_t start, int n,
                            int64_t samples, uint64_t seed, const VertexSet& target,
                            int workers = 1);

void write_distribution_csv(std::ostream& os, const Distribution& d);

}  // namespace cospec
