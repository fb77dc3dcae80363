#include "cospec/percolation.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "cospec/errors.hpp"
#include "cospec/rng.hpp"
#include "cospec/union_find.hpp"

namespace cospec {

namespace {

uint64_t hash_word_into(uint64_t h, const Word& w) {
    h = mix64(h, static_cast<uint64_t>(w.size()));
    for (int32_t x : w) h = mix64(h, static_cast<uint64_t>(static_cast<int64_t>(x)) + 0x8000u);
    return h;
}

std::vector<int32_t> cluster_labels(const RootedGraph& g, const EdgeCoupling& coupling,
                                    const std::vector<uint8_t>& open) {
    UnionFind uf(g.vertex_count());
    const auto& edges = coupling.edges();
    for (size_t e = 0; e < edges.size(); ++e)
        if (open[e]) uf.unite(edges[e].u, edges[e].v);
    return uf.labels();
}

}  // namespace

EdgeCoupling EdgeCoupling::make(const RootedGraph& g, uint64_t seed) {
    EdgeCoupling c;
    c.seed_ = seed;
    Words ws(g.spec);
    const uint64_t base = mix64(seed, rng_tag::edge_coupling);
    g.for_each_edge([&](int32_t u, int32_t v, int m) {
        c.edges_.push_back({u, v, static_cast<uint8_t>(m)});
        Word wu = g.word_of(u), wv = g.word_of(v);
        if (!ws.shortlex_less(wu, wv)) std::swap(wu, wv);
        uint64_t h = hash_word_into(base, wu);
        h = hash_word_into(h, wv);
        c.bits_.push_back(h);
        c.labels_.push_back(u01(h));
    });
    return c;
}

PercolationSample percolate(const RootedGraph& g, const EdgeCoupling& coupling, double p) {
    if (p < 0.0 || p > 1.0) throw parameter_error("percolation parameter outside [0,1]");
    PercolationSample s;
    s.p = p;
    s.open.resize(coupling.edge_count());
    for (int64_t e = 0; e < coupling.edge_count(); ++e) {
        s.open[e] = coupling.label(e) <= p ? 1 : 0;
        s.open_count += s.open[e];
    }
    s.cluster_id = cluster_labels(g, coupling, s.open);
    return s;
}

std::pair<PercolationSample, PercolationSample> union_coupling(const RootedGraph& g,
                                                               const EdgeCoupling& coupling,
                                                               double p, double q) {
    if (q < p) throw parameter_error("union coupling requires p <= q");
    if (p < 0.0 || q > 1.0) throw parameter_error("percolation parameters outside [0,1]");
    PercolationSample first = percolate(g, coupling, p);
    const double layer = p < 1.0 ? (q - p) / (1.0 - p) : 0.0;
    PercolationSample second;
    second.p = q;
    second.open.resize(coupling.edge_count());
    const uint64_t layer_tag = mix64(coupling.seed(), rng_tag::union_layer);
    for (int64_t e = 0; e < coupling.edge_count(); ++e) {
        bool extra = u01(mix64(layer_tag, coupling.label_bits(e))) <= layer;
        second.open[e] = (first.open[e] || extra) ? 1 : 0;
        second.open_count += second.open[e];
    }
    second.cluster_id = cluster_labels(g, coupling, second.open);
    return {std::move(first), std::move(second)};
}

VertexSet cluster_of_root(const RootedGraph& g, const PercolationSample& s) {
    VertexSet out;
    out.flags.assign(g.vertex_count(), 0);
    const int32_t root_label = s.cluster_id[g.root];
    for (int64_t v = 0; v < g.vertex_count(); ++v) {
        if (s.cluster_id[v] == root_label) {
            out.flags[v] = 1;
            ++out.count;
            if (g.dist[v] != kUnreachable)
                out.max_dist = std::max<int32_t>(out.max_dist, g.dist[v]);
        }
    }
    out.approximate = g.spec.family == Family::FreeAbelian &&
                      g.completeness == RootedGraph::Completeness::TruncatedBall;
    return out;
}

TauEstimate tau_estimate(const RootedGraph& g, double p, int32_t u, int32_t v, int64_t samples,
                         uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw parameter_error("percolation parameter outside [0,1]");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        throw parameter_error("tau endpoints outside the ball");
    EdgeCoupling coupling = EdgeCoupling::make(g, seed);
    int64_t hits = 0;
    std::vector<uint8_t> open(coupling.edge_count());
    for (int64_t s_i = 0; s_i < samples; ++s_i) {
        for (int64_t e = 0; e < coupling.edge_count(); ++e)
            open[e] = u01(mix64(coupling.label_bits(e), static_cast<uint64_t>(s_i) + 1)) <= p;
        UnionFind uf(g.vertex_count());
        const auto& edges = coupling.edges();
        for (size_t e = 0; e < edges.size(); ++e)
            if (open[e]) uf.unite(edges[e].u, edges[e].v);
        if (uf.find(u) == uf.find(v)) ++hits;
    }
    TauEstimate t;
    t.samples = samples;
    t.value = samples ? static_cast<double>(hits) / samples : 0.0;
    t.std_error = samples ? std::sqrt(std::max(t.value * (1.0 - t.value), 0.0) / samples) : 0.0;
    return t;
}

std::map<int64_t, int64_t> cluster_size_histogram(const PercolationSample& s) {
    std::map<int32_t, int64_t> size_of;
    for (int32_t label : s.cluster_id) ++size_of[label];
    std::map<int64_t, int64_t> hist;
    for (const auto& [label, size] : size_of) ++hist[size];
    return hist;
}

void write_edges_csv(std::ostream& os, const RootedGraph& g, const EdgeCoupling& coupling,
                     const PercolationSample& s) {
    os << "u,v,gen,sign,u01,open\n";
    char buf[128];
    const auto& edges = coupling.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%.17g,%d\n", edges[e].u, edges[e].v,
                      g.spec.move_generator(edges[e].move), g.spec.move_sign(edges[e].move),
                      coupling.label(e), static_cast<int>(s.open[e]));
        os << buf;
    }
}

void write_histogram_csv(std::ostream& os, const std::map<int64_t, int64_t>& hist) {
    os << "cluster_size,count\n";
    for (const auto& [size, count] : hist) os << size << ',' << count << "\n";
}

}  // namespace cospec
