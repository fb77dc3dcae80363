#include "cospec/ball_builder.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "cospec/errors.hpp"

namespace cospec {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// Compact word key for level-synchronized dedup. Letter words pack into a
// uint64 when bits*maxlen + 6 <= 64; abelian exponent vectors pack when
// d * bit_width(2R) <= 64. Otherwise the builder falls back to Word keys.
struct KeyPacker {
    const GroupFamilySpec spec;
    int radius;
    bool packable = false;
    int bits = 0;

    KeyPacker(const GroupFamilySpec& s, int r) : spec(s), radius(r) {
        if (spec.family == Family::FreeAbelian) {
            bits = std::max(1, std::bit_width(static_cast<unsigned>(2 * radius + 1)));
            packable = bits * spec.rank <= 64;
        } else {
            bits = std::max(1, std::bit_width(static_cast<unsigned>(spec.num_moves() - 1)));
            packable = bits * radius + 6 <= 64 && radius < 64;
        }
    }

    uint64_t pack(const Word& w) const {
        uint64_t key = 0;
        if (spec.family == Family::FreeAbelian) {
            for (int i = 0; i < spec.rank; ++i)
                key = (key << bits) | static_cast<uint64_t>(w[i] + radius);
            return key;
        }
        for (int32_t m : w) key = (key << bits) | static_cast<uint64_t>(m);
        return key | (static_cast<uint64_t>(w.size()) << 58);
    }
};

// Direct construction for the tree-structured Cayley families (free groups
// and free products of Z/2): every non-backtracking extension is a new
// vertex, so no dedup is needed.
RootedGraph build_tree_ball(const GroupFamilySpec& spec, int radius, const BuildOptions& opts) {
    const int nm = spec.num_moves();
    double predicted = predicted_ball_volume(spec, radius);
    if (predicted > static_cast<double>(opts.vertex_cap))
        throw resource_limit_error("predicted ball volume " + std::to_string(predicted) +
                                   " exceeds cap " + std::to_string(opts.vertex_cap));
    const int64_t n = static_cast<int64_t>(std::llround(predicted));

    RootedGraph g;
    g.spec = spec;
    g.family_tag = spec.tag();
    g.truncation_radius = radius;
    g.degree_bound = nm;
    g.rotation.assign(n * nm, -1);
    g.dist.assign(n, 0);
    g.parent.assign(n, -1);
    g.parent_move.assign(n, 0);
    g.level_offset.assign(radius + 2, 0);
    g.level_offset[1] = 1;

    int64_t next_id = 1;
    int64_t level_begin = 0, level_end = 1;
    for (int r = 0; r < radius; ++r) {
        for (int64_t u = level_begin; u < level_end; ++u) {
            for (int m = 0; m < nm; ++m) {
                if (u != 0 && m == spec.inverse_move(g.parent_move[u])) continue;
                int64_t v = next_id++;
                g.rotation[u * nm + m] = static_cast<int32_t>(v);
                g.rotation[v * nm + spec.inverse_move(m)] = static_cast<int32_t>(u);
                g.dist[v] = static_cast<uint16_t>(r + 1);
                g.parent[v] = static_cast<int32_t>(u);
                g.parent_move[v] = static_cast<uint8_t>(m);
            }
        }
        level_begin = level_end;
        level_end = next_id;
        g.level_offset[r + 2] = next_id;
    }
    return g;
}

struct Candidate {
    uint64_t key;
    int32_t from;
    uint8_t move;
};

struct WordCandidate {
    Word key;
    int32_t from;
    uint8_t move;
};

}  // namespace

double predicted_ball_volume(const GroupFamilySpec& spec, int radius) {
    const int R = radius;
    switch (spec.family) {
        case Family::Free: {
            int k = spec.rank;
            if (k == 1) return 2.0 * R + 1;
            double s = 1.0;
            double sphere = 2.0 * k;
            for (int r = 1; r <= R; ++r) {
                s += sphere;
                sphere *= (2.0 * k - 1);
            }
            return s;
        }
        case Family::RegularTree: {
            int d = spec.rank;
            if (d == 1) return R >= 1 ? 2.0 : 1.0;
            double s = 1.0;
            double sphere = static_cast<double>(d);
            for (int r = 1; r <= R; ++r) {
                s += sphere;
                sphere *= (d - 1.0);
            }
            return s;
        }
        case Family::FreeAbelian: {
            int d = spec.rank;
            double s = 0.0;
            for (int i = 0; i <= std::min(d, R); ++i)
                s += std::pow(2.0, i) * binom(d, i) * binom(R, i);
            return s;
        }
    }
    return 0.0;
}

RootedGraph build_ball(const GroupFamilySpec& spec, int radius, const BuildOptions& opts) {
    if (radius < 0) throw parameter_error("radius must be nonnegative");
    if (spec.family != Family::FreeAbelian)
        return build_tree_ball(spec, radius, opts);
    // abelian balls go through the generic coset machinery with H = trivial
    return build_schreier(spec, SubgroupOracle::trivial(spec), radius, opts);
}

namespace {

// Coset tables define the quotient graph directly: plain BFS over table
// states, truncated at the requested radius.
RootedGraph build_schreier_from_table(const GroupFamilySpec& spec, const SubgroupOracle& subgroup,
                                      int radius, const BuildOptions& opts) {
    const int nm = spec.num_moves();
    Words ws(spec);
    RootedGraph g;
    g.spec = spec;
    g.family_tag = "schreier:" + spec.tag() + "/" + subgroup.describe();
    g.truncation_radius = radius;
    g.degree_bound = nm;
    g.level_offset.assign(radius + 2, 0);
    g.level_offset[1] = 1;

    Word e = ws.identity();
    std::map<Word, int32_t> id_of;  // keyed by coset pseudo-word {coset id}
    std::vector<Word> coset_of{subgroup.coset_key(e)};
    id_of[coset_of[0]] = 0;
    g.dist.assign(1, 0);
    g.parent.assign(1, -1);
    g.parent_move.assign(1, 0);

    std::vector<std::vector<int32_t>> rows{std::vector<int32_t>(nm, -1)};
    int64_t level_begin = 0, level_end = 1;
    // walk on pseudo-words directly through the oracle's coset ids
    std::vector<Word> word_rep{e};
    for (int r = 0; r <= radius; ++r) {
        const bool last = (r == radius);
        int64_t next_end = level_end;
        for (int64_t u = level_begin; u < level_end; ++u) {
            for (int m = 0; m < nm; ++m) {
                if (rows[u][m] >= 0) continue;
                Word wu = word_rep[u];
                Word key = subgroup.coset_key(ws.apply(wu, m));
                auto it = id_of.find(key);
                int32_t v;
                if (it != id_of.end()) {
                    v = it->second;
                } else {
                    if (last) continue;
                    v = static_cast<int32_t>(next_end++);
                    if (next_end > opts.vertex_cap)
                        throw resource_limit_error("coset count exceeds vertex cap");
                    id_of[key] = v;
                    rows.emplace_back(nm, -1);
                    g.dist.push_back(static_cast<uint16_t>(r + 1));
                    g.parent.push_back(static_cast<int32_t>(u));
                    g.parent_move.push_back(static_cast<uint8_t>(m));
                    word_rep.push_back(ws.apply(wu, m));
                }
                rows[u][m] = v;
                rows[v][spec.inverse_move(m)] = static_cast<int32_t>(u);
            }
        }
        if (last) break;
        level_begin = level_end;
        level_end = next_end;
        g.level_offset[r + 2] = level_end;
    }
    const int64_t n = level_end;
    g.rotation.assign(n * nm, -1);
    for (int64_t u = 0; u < n; ++u)
        for (int m = 0; m < nm; ++m) g.rotation[u * nm + m] = rows[u][m];
    return g;
}

}  // namespace

// Generic level-synchronized BFS over canonical coset representatives.
// Next-level candidates are deduplicated by sorting on (key, from, move);
// new ids follow first-discovery order, which reproduces plain BFS order
// with the fixed move ordering.
RootedGraph build_schreier(const GroupFamilySpec& spec, const SubgroupOracle& subgroup,
                           int radius, const BuildOptions& opts) {
    if (radius < 0) throw parameter_error("radius must be nonnegative");
    if (subgroup.kind() == SubgroupOracle::Kind::CosetTable)
        return build_schreier_from_table(spec, subgroup, radius, opts);
    const int nm = spec.num_moves();
    Words ws(spec);
    const KeyPacker packer(spec, radius);

    RootedGraph g;
    g.spec = spec;
    g.family_tag = (subgroup.kind() == SubgroupOracle::Kind::Trivial &&
                    spec.family == Family::FreeAbelian)
                       ? spec.tag()
                       : "schreier:" + spec.tag() + "/" + subgroup.describe();
    g.truncation_radius = radius;
    g.degree_bound = nm;
    g.level_offset.assign(radius + 2, 0);
    g.level_offset[1] = 1;
    g.dist.assign(1, 0);
    g.parent.assign(1, -1);
    g.parent_move.assign(1, 0);
    g.rotation.assign(nm, -1);

    auto grow_to = [&](int64_t n) {
        if (n > opts.vertex_cap)
            throw resource_limit_error("vertex count " + std::to_string(n) + " exceeds cap " +
                                       std::to_string(opts.vertex_cap));
        g.rotation.resize(n * nm, -1);
        g.dist.resize(n, 0);
        g.parent.resize(n, -1);
        g.parent_move.resize(n, 0);
    };

    // sorted (key, id) association for the current level
    std::vector<std::pair<uint64_t, int32_t>> level_keys{{packer.pack(subgroup.coset_key(ws.identity())), 0}};
    std::map<Word, int32_t> level_words;  // fallback when keys do not pack
    if (!packer.packable) level_words[subgroup.coset_key(ws.identity())] = 0;

    int64_t level_begin = 0, level_end = 1;
    std::vector<Candidate> cands;
    std::vector<WordCandidate> wcands;

    for (int r = 0; r <= radius; ++r) {
        const bool last = (r == radius);  // sweep the last level for same-level edges only
        cands.clear();
        wcands.clear();
        for (int64_t u = level_begin; u < level_end; ++u) {
            const Word wu = g.word_of(static_cast<int32_t>(u));
            for (int m = 0; m < nm; ++m) {
                if (g.rotation[u * nm + m] >= 0) continue;
                Word rep = subgroup.coset_key(ws.apply(wu, m));
                int len = ws.length(rep);
                if (len == r) {
                    // same-level edge; the endpoint already has an id
                    int32_t v = -1;
                    if (packer.packable) {
                        uint64_t key = packer.pack(rep);
                        auto it = std::lower_bound(level_keys.begin(), level_keys.end(),
                                                   std::make_pair(key, INT32_MIN));
                        if (it == level_keys.end() || it->first != key)
                            throw std::logic_error("schreier builder: same-level key missing");
                        v = it->second;
                    } else {
                        auto it = level_words.find(rep);
                        if (it == level_words.end())
                            throw std::logic_error("schreier builder: same-level key missing");
                        v = it->second;
                    }
                    g.rotation[u * nm + m] = v;
                    g.rotation[static_cast<int64_t>(v) * nm + spec.inverse_move(m)] =
                        static_cast<int32_t>(u);
                } else if (len == r + 1 && !last) {
                    if (packer.packable)
                        cands.push_back({packer.pack(rep), static_cast<int32_t>(u),
                                         static_cast<uint8_t>(m)});
                    else
                        wcands.push_back({std::move(rep), static_cast<int32_t>(u),
                                          static_cast<uint8_t>(m)});
                } else if (len != r - 1 && len != r + 1) {
                    throw std::logic_error("schreier builder: coset distance jump");
                }
                // len == r-1 cannot happen with an unfilled slot: the parent
                // level filled both halves of that edge already.
            }
        }
        if (last) break;

        level_begin = level_end;
        if (packer.packable) {
            std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
                return std::tie(a.key, a.from, a.move) < std::tie(b.key, b.from, b.move);
            });
            // group representatives (first discoverer), then BFS discovery order
            std::vector<Candidate> reps;
            for (size_t i = 0; i < cands.size(); ++i)
                if (i == 0 || cands[i].key != cands[i - 1].key) reps.push_back(cands[i]);
            std::sort(reps.begin(), reps.end(), [](const Candidate& a, const Candidate& b) {
                return std::tie(a.from, a.move) < std::tie(b.from, b.move);
            });
            grow_to(level_end + static_cast<int64_t>(reps.size()));
            level_keys.clear();
            level_keys.reserve(reps.size());
            for (size_t i = 0; i < reps.size(); ++i) {
                int32_t id = static_cast<int32_t>(level_end + i);
                g.dist[id] = static_cast<uint16_t>(r + 1);
                g.parent[id] = reps[i].from;
                g.parent_move[id] = reps[i].move;
                level_keys.emplace_back(reps[i].key, id);
            }
            std::sort(level_keys.begin(), level_keys.end());
            for (const Candidate& c : cands) {
                auto it = std::lower_bound(level_keys.begin(), level_keys.end(),
                                           std::make_pair(c.key, INT32_MIN));
                int32_t v = it->second;
                g.rotation[static_cast<int64_t>(c.from) * nm + c.move] = v;
                g.rotation[static_cast<int64_t>(v) * nm + spec.inverse_move(c.move)] = c.from;
            }
            level_end += static_cast<int64_t>(reps.size());
        } else {
            std::sort(wcands.begin(), wcands.end(),
                      [](const WordCandidate& a, const WordCandidate& b) {
                          return std::tie(a.key, a.from, a.move) < std::tie(b.key, b.from, b.move);
                      });
            std::vector<WordCandidate*> reps;
            for (size_t i = 0; i < wcands.size(); ++i)
                if (i == 0 || wcands[i].key != wcands[i - 1].key) reps.push_back(&wcands[i]);
            std::sort(reps.begin(), reps.end(), [](const WordCandidate* a, const WordCandidate* b) {
                return std::tie(a->from, a->move) < std::tie(b->from, b->move);
            });
            grow_to(level_end + static_cast<int64_t>(reps.size()));
            level_words.clear();
            for (size_t i = 0; i < reps.size(); ++i) {
                int32_t id = static_cast<int32_t>(level_end + i);
                g.dist[id] = static_cast<uint16_t>(r + 1);
                g.parent[id] = reps[i]->from;
                g.parent_move[id] = reps[i]->move;
                level_words[reps[i]->key] = id;
            }
            for (const WordCandidate& c : wcands) {
                int32_t v = level_words[c.key];
                g.rotation[static_cast<int64_t>(c.from) * nm + c.move] = v;
                g.rotation[static_cast<int64_t>(v) * nm + spec.inverse_move(c.move)] = c.from;
            }
            level_end += static_cast<int64_t>(reps.size());
        }
        g.level_offset[r + 2] = level_end;
    }
    return g;
}

}  // namespace cospec
