#include "cospec/rooted_graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>

#include "cospec/errors.hpp"

namespace cospec {

int RootedGraph::degree(int32_t v) const {
    const int nm = num_moves();
    int d = 0;
    for (int m = 0; m < nm; ++m)
        if (neighbor(v, m) >= 0) ++d;
    return d;
}

int64_t RootedGraph::interior_count() const {
    if (truncation_radius == 0) return vertex_count();
    if (static_cast<int>(level_offset.size()) > truncation_radius)
        return level_offset[truncation_radius];
    return vertex_count();
}

Word RootedGraph::word_of(int32_t v) const {
    if (has_stored_words) {
        return Word(word_data.begin() + word_off[v], word_data.begin() + word_off[v + 1]);
    }
    Words ws(spec);
    if (spec.family == Family::FreeAbelian) {
        Word z(spec.rank, 0);
        for (int32_t cur = v; parent[cur] >= 0; cur = parent[cur])
            z[spec.move_generator(parent_move[cur])] += spec.move_sign(parent_move[cur]);
        return z;
    }
    Word rev;
    for (int32_t cur = v; parent[cur] >= 0; cur = parent[cur]) rev.push_back(parent_move[cur]);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

int64_t RootedGraph::edge_count() const {
    int64_t n = 0;
    for_each_edge([&](int32_t, int32_t, int) { ++n; });
    return n;
}

void RootedGraph::for_each_edge(const std::function<void(int32_t, int32_t, int)>& fn) const {
    const int nm = num_moves();
    const int64_t v_count = vertex_count();
    for (int32_t u = 0; u < v_count; ++u) {
        for (int m = 0; m < nm; ++m) {
            int32_t v = neighbor(u, m);
            if (v < 0 || v < u) continue;
            if (!labeled) {
                // unlabeled rows are plain adjacency slots (loop-free)
                if (v > u) fn(u, v, m);
                continue;
            }
            if (v == u && spec.inverse_move(m) < m) continue;  // loop: keep one half-pair
            fn(u, v, m);
        }
    }
}

void RootedGraph::rebuild_bfs_metadata() {
    const int64_t n = vertex_count();
    const int nm = num_moves();
    dist.assign(n, kUnreachable);
    parent.assign(n, -1);
    parent_move.assign(n, 0);
    dist[root] = 0;
    std::deque<int32_t> q{root};
    int32_t max_d = 0;
    while (!q.empty()) {
        int32_t u = q.front();
        q.pop_front();
        for (int m = 0; m < nm; ++m) {
            int32_t v = neighbor(u, m);
            if (v < 0 || dist[v] != kUnreachable) continue;
            dist[v] = static_cast<uint16_t>(dist[u] + 1);
            parent[v] = u;
            parent_move[v] = static_cast<uint8_t>(m);
            max_d = std::max<int32_t>(max_d, dist[v]);
            q.push_back(v);
        }
    }
    level_offset.assign(max_d + 2, 0);
    for (int64_t v = 0; v < n; ++v)
        if (dist[v] != kUnreachable) ++level_offset[dist[v] + 1];
    for (size_t r = 1; r < level_offset.size(); ++r) level_offset[r] += level_offset[r - 1];
}

bool RootedGraph::same_structure(const RootedGraph& other) const {
    return spec == other.spec && labeled == other.labeled && root == other.root &&
           rotation == other.rotation && dist == other.dist;
}

VertexSet VertexSet::all(const RootedGraph& g) {
    VertexSet s;
    s.flags.assign(g.vertex_count(), 1);
    s.count = g.vertex_count();
    s.max_dist = 0;
    for (int64_t v = 0; v < g.vertex_count(); ++v)
        if (g.dist[v] != kUnreachable) s.max_dist = std::max<int32_t>(s.max_dist, g.dist[v]);
    return s;
}

VertexSet VertexSet::none(const RootedGraph& g) {
    VertexSet s;
    s.flags.assign(g.vertex_count(), 0);
    return s;
}

VertexSet VertexSet::root_only(const RootedGraph& g) {
    VertexSet s;
    s.flags.assign(g.vertex_count(), 0);
    s.flags[g.root] = 1;
    s.count = 1;
    s.max_dist = 0;
    return s;
}

VertexSet VertexSet::from_predicate(const RootedGraph& g,
                                    const std::function<bool(int32_t)>& pred) {
    VertexSet s;
    s.flags.assign(g.vertex_count(), 0);
    for (int64_t v = 0; v < g.vertex_count(); ++v) {
        if (pred(static_cast<int32_t>(v))) {
            s.flags[v] = 1;
            ++s.count;
            if (g.dist[v] != kUnreachable) s.max_dist = std::max<int32_t>(s.max_dist, g.dist[v]);
        }
    }
    return s;
}

VertexSet VertexSet::subgroup_members(const RootedGraph& g, const SubgroupOracle& h) {
    return from_predicate(g, [&](int32_t v) { return h.member(g.word_of(v)); });
}

RootedGraph cluster_restricted_subgraph(const RootedGraph& g, const VertexSet& keep) {
    if (!keep.contains(g.root)) throw empty_result_error("keep predicate rejects the root");
    const int nm = g.num_moves();

    // BFS over kept vertices to get deterministic new ids (reachable first).
    std::vector<int32_t> new_id(g.vertex_count(), -1);
    std::vector<int32_t> order;
    order.reserve(keep.count);
    std::deque<int32_t> q{g.root};
    new_id[g.root] = 0;
    order.push_back(g.root);
    while (!q.empty()) {
        int32_t u = q.front();
        q.pop_front();
        for (int m = 0; m < nm; ++m) {
            int32_t v = g.neighbor(u, m);
            if (v < 0 || !keep.contains(v) || new_id[v] >= 0) continue;
            new_id[v] = static_cast<int32_t>(order.size());
            order.push_back(v);
            q.push_back(v);
        }
    }
    // kept but unreachable vertices, in old id order
    for (int64_t v = 0; v < g.vertex_count(); ++v)
        if (keep.contains(static_cast<int32_t>(v)) && new_id[v] < 0) {
            new_id[v] = static_cast<int32_t>(order.size());
            order.push_back(static_cast<int32_t>(v));
        }

    RootedGraph out;
    out.spec = g.spec;
    out.labeled = g.labeled;
    out.family_tag = "cluster:" + g.family_tag;
    out.root = 0;
    out.degree_bound = g.degree_bound;
    out.truncation_radius = g.truncation_radius;
    bool touches_boundary = false;
    const int64_t n = static_cast<int64_t>(order.size());
    out.rotation.assign(n * nm, -1);
    for (int64_t i = 0; i < n; ++i) {
        int32_t old_u = order[i];
        if (g.is_boundary(old_u)) touches_boundary = true;
        for (int m = 0; m < nm; ++m) {
            int32_t v = g.neighbor(old_u, m);
            out.rotation[i * nm + m] = (v >= 0 && keep.contains(v)) ? new_id[v] : -1;
        }
    }
    out.completeness = (g.completeness == RootedGraph::Completeness::CompleteFinite ||
                        !touches_boundary)
                           ? RootedGraph::Completeness::CompleteFinite
                           : RootedGraph::Completeness::TruncatedDerived;
    out.dist.assign(n, 0);
    out.rebuild_bfs_metadata();
    out.truncation_radius = out.level_offset.empty()
                                ? 0
                                : static_cast<int32_t>(out.level_offset.size()) - 2;

    // carry the original identity of each vertex for coupling purposes
    out.has_stored_words = true;
    out.word_off.assign(n + 1, 0);
    for (int64_t i = 0; i < n; ++i) {
        Word w = g.word_of(order[i]);
        out.word_off[i + 1] = out.word_off[i] + static_cast<int64_t>(w.size());
        out.word_data.insert(out.word_data.end(), w.begin(), w.end());
    }
    return out;
}

void write_graph(std::ostream& os, const RootedGraph& g) {
    os << "cospec-graph 1 family=" << g.family_tag << " shape=" << g.spec.tag()
       << " R=" << g.truncation_radius << " d=" << g.degree_bound
       << " n=" << g.vertex_count() << " root=" << g.root
       << " labeled=" << (g.labeled ? 1 : 0) << " complete="
       << (g.completeness == RootedGraph::Completeness::CompleteFinite
               ? 1
               : (g.completeness == RootedGraph::Completeness::TruncatedDerived ? 2 : 0))
       << "\n";
    g.for_each_edge([&](int32_t u, int32_t v, int m) {
        os << u << ' ' << v << ' ' << g.spec.move_generator(m) << ' ' << g.spec.move_sign(m)
           << "\n";
    });
}

std::string graph_to_string(const RootedGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

RootedGraph read_graph(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw io_error("empty graph stream");
    std::istringstream hs(line);
    std::string magic;
    int version = 0;
    hs >> magic >> version;
    if (magic != "cospec-graph" || version != 1) throw io_error("bad graph header: " + line);
    RootedGraph g;
    int64_t n = -1;
    int complete = 0;
    std::string kv;
    while (hs >> kv) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw io_error("bad header field: " + kv);
        std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        if (key == "family") g.family_tag = val;
        else if (key == "shape") g.spec = GroupFamilySpec::parse_tag(val);
        else if (key == "R") g.truncation_radius = std::atoi(val.c_str());
        else if (key == "d") g.degree_bound = std::atoi(val.c_str());
        else if (key == "n") n = std::atoll(val.c_str());
        else if (key == "root") g.root = std::atoi(val.c_str());
        else if (key == "labeled") g.labeled = std::atoi(val.c_str()) != 0;
        else if (key == "complete") complete = std::atoi(val.c_str());
    }
    if (n < 0) throw io_error("graph header missing vertex count");
    g.completeness = complete == 1 ? RootedGraph::Completeness::CompleteFinite
                   : complete == 2 ? RootedGraph::Completeness::TruncatedDerived
                                   : RootedGraph::Completeness::TruncatedBall;
    const int nm = g.spec.num_moves();
    g.rotation.assign(n * nm, -1);
    auto append_slot = [&](int32_t a, int32_t b) {
        for (int m = 0; m < nm; ++m) {
            auto& slot = g.rotation[static_cast<int64_t>(a) * nm + m];
            if (slot < 0) { slot = b; return; }
        }
        throw io_error("vertex degree exceeds move arity in graph file");
    };
    int32_t u, v, gen, sign;
    while (is >> u >> v >> gen >> sign) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw io_error("edge endpoint out of range");
        if (g.labeled) {
            int m = g.spec.move_of(gen, sign);
            g.rotation[static_cast<int64_t>(u) * nm + m] = v;
            g.rotation[static_cast<int64_t>(v) * nm + g.spec.inverse_move(m)] = u;
        } else {
            append_slot(u, v);
            append_slot(v, u);
        }
    }
    g.dist.assign(n, 0);
    g.rebuild_bfs_metadata();
    return g;
}

RootedGraph graph_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is);
}

}  // namespace cospec
