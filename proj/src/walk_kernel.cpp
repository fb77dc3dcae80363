#include "cospec/walk_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "cospec/errors.hpp"
#include "cospec/parallel.hpp"
#include "cospec/rng.hpp"

namespace cospec {

WalkKernel WalkKernel::srw(const GroupFamilySpec& spec) {
    WalkKernel k;
    k.spec = spec;
    k.weight.assign(spec.num_moves(), 1.0 / spec.num_moves());
    k.hold = 0.0;
    return k;
}

WalkKernel WalkKernel::lazy_srw(const GroupFamilySpec& spec, double hold) {
    return lazify(srw(spec), hold);
}

void WalkKernel::validate() const {
    if (static_cast<int>(weight.size()) != spec.num_moves())
        throw kernel_error("kernel weight arity does not match the family moves");
    double total = hold;
    for (double w : weight) {
        if (w < 0.0 || !std::isfinite(w)) throw kernel_error("negative or non-finite step weight");
        total += w;
    }
    if (hold < 0.0) throw kernel_error("negative hold mass");
    if (std::abs(total - 1.0) > 1e-12) throw kernel_error("kernel mass differs from 1");
    for (int m = 0; m < spec.num_moves(); ++m)
        if (std::abs(weight[m] - weight[spec.inverse_move(m)]) > 1e-12)
            throw kernel_error("kernel is not symmetric under move inversion");
}

WalkKernel lazify(const WalkKernel& k, double t) {
    if (t < 0.0 || t > 1.0) throw parameter_error("laziness parameter outside [0,1]");
    WalkKernel out = k;
    out.hold = t + (1.0 - t) * k.hold;
    for (double& w : out.weight) w *= (1.0 - t);
    return out;
}

double Distribution::at(int32_t v) const {
    if (is_dense) return v < support_end ? dense[v] : 0.0;
    auto it = sparse.find(v);
    return it == sparse.end() ? 0.0 : it->second;
}

double Distribution::total_mass() const {
    double s = 0.0, c = 0.0;
    for_each([&](int32_t, double p) {
        double y = p - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    });
    return s;
}

WalkEvolver::WalkEvolver(const RootedGraph& g, const WalkKernel& k, int32_t start)
    : g_(g), k_(k), start_(start) {
    if (!g.labeled) throw kernel_error("kernel walks need a generator-labeled graph");
    if (!(k.spec == g.spec)) throw kernel_error("kernel family does not match the graph");
    k_.validate();
    if (start < 0 || start >= g.vertex_count()) throw parameter_error("start vertex out of range");
    cur_.assign(g.vertex_count(), 0.0);
    nxt_.assign(g.vertex_count(), 0.0);
    cur_[start] = 1.0;
    support_end_ = start + 1;
}

bool WalkEvolver::exact() const {
    switch (g_.completeness) {
        case RootedGraph::Completeness::CompleteFinite: return true;
        case RootedGraph::Completeness::TruncatedBall:
            return steps_ <= g_.truncation_radius - g_.dist[start_];
        case RootedGraph::Completeness::TruncatedDerived: return steps_ == 0;
    }
    return false;
}

void WalkEvolver::step() {
    const int nm = g_.num_moves();
    const int32_t* rot = g_.rotation.data();
    const double* w = k_.weight.data();
    const double hold = k_.hold;

    // support after steps_+1 steps stays within distance dist(start)+steps+1
    const int max_level = static_cast<int>(g_.level_offset.size()) - 2;
    int lvl = std::min<int>(g_.dist[start_] + steps_ + 1, max_level);
    int64_t new_end = std::max<int64_t>(g_.level_offset[lvl + 1], support_end_);

    for (int64_t v = 0; v < new_end; ++v) {
        const int32_t* row = rot + v * nm;
        double acc = hold * cur_[v];
        for (int m = 0; m < nm; ++m) {
            int32_t u = row[m];
            if (u >= 0) acc += w[m] * cur_[u];
        }
        nxt_[v] = acc;
    }
    std::swap(cur_, nxt_);
    support_end_ = new_end;
    ++steps_;
}

void WalkEvolver::advance(int n) {
    for (int i = 0; i < n; ++i) step();
}

double WalkEvolver::mass_in(const VertexSet& target) const {
    double s = 0.0, c = 0.0;
    for (int64_t v = 0; v < support_end_; ++v) {
        if (!target.flags[v]) continue;
        double y = cur_[v] - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

double WalkEvolver::total_mass() const {
    double s = 0.0, c = 0.0;
    for (int64_t v = 0; v < support_end_; ++v) {
        double y = cur_[v] - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

Distribution WalkEvolver::snapshot() const {
    Distribution d;
    d.steps_taken = steps_;
    d.exact = exact();
    int64_t nnz = 0;
    for (int64_t v = 0; v < support_end_; ++v)
        if (cur_[v] != 0.0) ++nnz;
    if (nnz * 4 > g_.vertex_count()) {
        d.is_dense = true;
        d.dense.assign(cur_.begin(), cur_.begin() + support_end_);
        d.support_end = support_end_;
    } else {
        d.sparse.reserve(static_cast<size_t>(nnz) * 2);
        for (int64_t v = 0; v < support_end_; ++v)
            if (cur_[v] != 0.0) d.sparse.emplace(static_cast<int32_t>(v), cur_[v]);
    }
    return d;
}

Distribution evolve(const RootedGraph& g, const WalkKernel& k, int32_t start, int n) {
    if (n < 0) throw parameter_error("step count must be nonnegative");
    WalkEvolver ev(g, k, start);
    ev.advance(n);
    return ev.snapshot();
}

double hit_probability(const Distribution& dist, const VertexSet& target) {
    double s = 0.0, c = 0.0;
    dist.for_each([&](int32_t v, double p) {
        if (!target.flags[v]) return;
        double y = p - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    });
    return s;
}

WalkSample sample_walk(const RootedGraph& g, const WalkKernel& k, int32_t start, int n,
                       uint64_t seed, uint64_t trajectory_index) {
    const int nm = g.num_moves();
    CounterRng rng(mix64(seed, rng_tag::trajectory, trajectory_index));
    // cumulative move distribution: [hold, hold+w0, ...]
    std::vector<double> cdf(nm + 1);
    cdf[0] = k.hold;
    for (int m = 0; m < nm; ++m) cdf[m + 1] = cdf[m] + k.weight[m];

    int32_t v = start;
    bool valid = true;
    for (int step = 0; step < n; ++step) {
        double u = rng.uniform(static_cast<uint64_t>(step)) * cdf[nm];
        int m = -1;
        for (int i = 0; i < nm; ++i)
            if (u >= cdf[i] && u < cdf[i + 1]) { m = i; break; }
        if (m < 0) continue;  // hold (or the measure-zero u == total edge)
        int32_t w = g.neighbor(v, m);
        if (w < 0) {
            valid = false;  // clamp at the truncation boundary
            continue;
        }
        v = w;
    }
    return {v, valid};
}

BatchHitResult sample_batch(const RootedGraph& g, const WalkKernel& k, int32_t start, int n,
                            int64_t samples, uint64_t seed, const VertexSet& target,
                            int workers) {
    std::vector<BatchHitResult> partial(std::max(workers, 1));
    parallel_for_chunks(samples, workers, [&](int worker, int64_t lo, int64_t hi) {
        BatchHitResult& r = partial[worker];
        for (int64_t i = lo; i < hi; ++i) {
            WalkSample s = sample_walk(g, k, start, n, seed, static_cast<uint64_t>(i));
            ++r.samples;
            if (!s.valid) ++r.invalid;
            if (target.flags[s.endpoint]) ++r.hits;
        }
    });
    BatchHitResult total;
    for (const auto& r : partial) {
        total.samples += r.samples;
        total.hits += r.hits;
        total.invalid += r.invalid;
    }
    return total;
}

void write_distribution_csv(std::ostream& os, const Distribution& d) {
    os << "vertex,probability\n";
    char buf[64];
    if (d.is_dense) {
        for (int64_t v = 0; v < d.support_end; ++v) {
            if (d.dense[v] == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%lld,%.17g\n", static_cast<long long>(v), d.dense[v]);
            os << buf;
        }
    } else {
        std::vector<std::pair<int32_t, double>> rows(d.sparse.begin(), d.sparse.end());
        std::sort(rows.begin(), rows.end());
        for (const auto& [v, p] : rows) {
            std::snprintf(buf, sizeof buf, "%d,%.17g\n", v, p);
            os << buf;
        }
    }
}

}  // namespace cospec
