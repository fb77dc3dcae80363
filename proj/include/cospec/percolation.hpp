#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "cospec/rooted_graph.hpp"

namespace cospec {

// Seeded uniform edge labels U_e derived from (seed, min endpoint word,
// max endpoint word), so the coupling is consistent across truncation radii
// of the same family.
class EdgeCoupling {
  public:
    struct Edge {
        int32_t u, v;
        uint8_t move;  // move from u
    };

    static EdgeCoupling make(const RootedGraph& g, uint64_t seed);

    uint64_t seed() const { return seed_; }
    int64_t edge_count() const { return static_cast<int64_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    double label(int64_t e) const { return labels_[e]; }
    uint64_t label_bits(int64_t e) const { return bits_[e]; }

  private:
    uint64_t seed_ = 0;
    std::vector<Edge> edges_;
    std::vector<uint64_t> bits_;
    std::vector<double> labels_;
};

struct PercolationSample {
    double p = 0.0;
    std::vector<uint8_t> open;        // per edge index
    std::vector<int32_t> cluster_id;  // path-compressed union-find roots
    int64_t open_count = 0;
};

// Threshold sample: edge open iff U_e <= p. Monotone in p under a fixed
// coupling by construction.
PercolationSample percolate(const RootedGraph& g, const EdgeCoupling& coupling, double p);

// Monotone pair (P, Q): P is Bernoulli(p); Q adds an independent layer with
// parameter (q-p)/(1-p), so Q is Bernoulli(q) and P subset of Q pointwise.
std::pair<PercolationSample, PercolationSample> union_coupling(const RootedGraph& g,
                                                               const EdgeCoupling& coupling,
                                                               double p, double q);

// Vertices sharing the root's cluster. Exact within the ball on tree families;
// flagged approximate on free-abelian truncated balls.
VertexSet cluster_of_root(const RootedGraph& g, const PercolationSample& s);

struct TauEstimate {
    double value = 0.0;
    double std_error = 0.0;
    int64_t samples = 0;
};

// Monte Carlo two-point connectivity over independent percolation samples.
TauEstimate tau_estimate(const RootedGraph& g, double p, int32_t u, int32_t v, int64_t samples,
                         uint64_t seed);

std::map<int64_t, int64_t> cluster_size_histogram(const PercolationSample& s);

void write_edges_csv(std::ostream& os, const RootedGraph& g, const EdgeCoupling& coupling,
                     const PercolationSample& s);
void write_histogram_csv(std::ostream& os, const std::map<int64_t, int64_t>& hist);

}  // namespace cospec
