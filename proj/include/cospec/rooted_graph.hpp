#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cospec/words.hpp"

namespace cospec {

// Truncated ball of a vertex-transitive graph (or a derived finite graph).
//
// Adjacency is a rotation map: rotation[v * num_moves + m] is the endpoint of
// the move-m edge at v, or -1 when the edge leaves the truncated ball (or the
// slot is unused on unlabeled graphs). Each geometric edge appears in both
// endpoint rows under inverse moves. Vertex ids are BFS order with fixed move
// ordering, so ids of vertices at distance <= r form the prefix
// [0, level_offset[r+1]).
struct RootedGraph {
    enum class Completeness {
        TruncatedBall,    // exactness horizon n <= R - dist(start)
        CompleteFinite,   // the whole intended graph; walks always exact
        TruncatedDerived  // derived from a truncated ball; no exactness claim
    };

    GroupFamilySpec spec;  // move alphabet (synthetic spec for unlabeled graphs)
    bool labeled = true;
    Completeness completeness = Completeness::TruncatedBall;
    std::string family_tag = "custom";

    int32_t root = 0;
    int32_t truncation_radius = 0;
    int32_t degree_bound = 0;

    std::vector<int32_t> rotation;
    std::vector<uint16_t> dist;
    std::vector<int32_t> parent;      // BFS tree; -1 at root / unreachable
    std::vector<uint8_t> parent_move;
    std::vector<int64_t> level_offset;  // size R+2 for balls

    // Optional explicit canonical words (derived graphs that must keep the
    // original coupling identity of their vertices).
    bool has_stored_words = false;
    std::vector<int32_t> word_data;
    std::vector<int64_t> word_off;

    int64_t vertex_count() const { return static_cast<int64_t>(dist.size()); }
    int num_moves() const { return spec.num_moves(); }
    int32_t neighbor(int32_t v, int m) const {
        return rotation[static_cast<int64_t>(v) * num_moves() + m];
    }
    int degree(int32_t v) const;
    bool is_boundary(int32_t v) const { return dist[v] == truncation_radius; }
    int64_t interior_count() const;

    // Canonical word of a vertex: stored words if present, otherwise the BFS
    // tree path (which equals the shortlex-canonical representative for every
    // family/Schreier ball this library builds).
    Word word_of(int32_t v) const;

    // Number of geometric edges (each undirected edge / loop counted once).
    int64_t edge_count() const;
    // Enumerate geometric edges as (u, v, move-from-u) with u <= v.
    void for_each_edge(const std::function<void(int32_t, int32_t, int)>& fn) const;

    // Recompute dist/parent/level_offset by BFS from the root (move order).
    void rebuild_bfs_metadata();

    bool same_structure(const RootedGraph& other) const;
};

constexpr uint16_t kUnreachable = 0xffff;

// Vertex predicate materialized as flags over a concrete graph, with cached
// statistics used for exactness horizons.
struct VertexSet {
    std::vector<uint8_t> flags;
    int64_t count = 0;
    int32_t max_dist = -1;  // -1 when empty
    bool approximate = false;

    bool contains(int32_t v) const { return flags[v] != 0; }
    static VertexSet all(const RootedGraph& g);
    static VertexSet none(const RootedGraph& g);
    static VertexSet root_only(const RootedGraph& g);
    static VertexSet from_predicate(const RootedGraph& g,
                                    const std::function<bool(int32_t)>& pred);
    // Membership in a subgroup, evaluated on canonical vertex words.
    static VertexSet subgroup_members(const RootedGraph& g, const SubgroupOracle& h);
};

// Induced subgraph on the kept vertices, re-rooted at the old root; distances
// recomputed inside the subgraph. keep(root) must hold. Kept vertices that
// are unreachable from the root get dist = kUnreachable and sort last.
RootedGraph cluster_restricted_subgraph(const RootedGraph& g, const VertexSet& keep);

// Line-oriented text serialization; bit-exact round-trip.
void write_graph(std::ostream& os, const RootedGraph& g);
std::string graph_to_string(const RootedGraph& g);
RootedGraph read_graph(std::istream& is);
RootedGraph graph_from_string(const std::string& text);

}  // namespace cospec
