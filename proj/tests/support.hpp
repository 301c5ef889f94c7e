#pragma once

// Test-only helpers: a fixture builder for cycles drawn on a circle, and
// brute-force oracles that share no code with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "longcycle/engine.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/planar.hpp"
#include "longcycle/replacements.hpp"

namespace lctest {

using longcycle::VertexId;

// Something drawn inside or outside the circle through cycle vertices 0..c-1:
// an outer vertex (three attachments) or a chord (two).
struct Item {
    bool inside = true;
    std::vector<int> attach;
};

inline Item in(std::vector<int> a) { return {true, std::move(a)}; }
inline Item out(std::vector<int> a) { return {false, std::move(a)}; }

// Cycle 0..c-1 in counter-clockwise order; outer vertices get ids c, c+1, ...
// in item order. Items on the same side must not cross.
inline longcycle::RotationTable circle_fixture(int c, const std::vector<Item>& items) {
    std::vector<int> vertex_of(items.size(), -1);
    int next = c;
    for (std::size_t k = 0; k < items.size(); ++k)
        if (items[k].attach.size() == 3) vertex_of[k] = next++;

    std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(next));
    auto offset = [c](int from, int to) { return ((to - from) % c + c) % c; };
    for (int i = 0; i < c; ++i) {
        struct Entry {
            std::pair<int, int> key;
            VertexId target;
        };
        std::vector<Entry> inner, outer;
        for (std::size_t k = 0; k < items.size(); ++k) {
            const auto& a = items[k].attach;
            if (std::find(a.begin(), a.end(), i) == a.end()) continue;
            std::vector<int> offs;
            for (int p : a)
                if (p != i) offs.push_back(offset(i, p));
            std::sort(offs.begin(), offs.end());
            const VertexId target = vertex_of[k] >= 0 ? vertex_of[k] : (a[0] == i ? a[1] : a[0]);
            if (items[k].inside)
                inner.push_back({{offs.front(), offs.back()}, target});
            else
                outer.push_back({{offs.back(), offs.front()}, target});
        }
        std::sort(inner.begin(), inner.end(), [](const Entry& x, const Entry& y) { return x.key < y.key; });
        std::sort(outer.begin(), outer.end(), [](const Entry& x, const Entry& y) { return x.key > y.key; });
        auto& r = rot[static_cast<std::size_t>(i)];
        r.push_back((i + 1) % c);
        for (const Entry& e : inner) r.push_back(e.target);
        r.push_back((i + c - 1) % c);
        for (const Entry& e : outer) r.push_back(e.target);
    }
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (vertex_of[k] < 0) continue;
        std::vector<VertexId> a(items[k].attach.begin(), items[k].attach.end());
        std::sort(a.begin(), a.end());
        if (!items[k].inside) std::reverse(a.begin(), a.end());
        rot[static_cast<std::size_t>(vertex_of[k])] = a;
    }
    return longcycle::RotationTable(std::move(rot));
}

inline std::vector<VertexId> iota_cycle(int c) {
    std::vector<VertexId> v(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i) v[static_cast<std::size_t>(i)] = i;
    return v;
}

// ---- brute-force oracles ------------------------------------------------------

inline std::vector<std::set<VertexId>> adjacency(const longcycle::RotationTable& t) {
    std::vector<std::set<VertexId>> adj(static_cast<std::size_t>(t.vertex_count()));
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        for (VertexId u : t.rotation(v)) adj[static_cast<std::size_t>(v)].insert(u);
    return adj;
}

// Number of components of the graph minus `removed`, by repeated relabelling.
inline int count_components(const std::vector<std::set<VertexId>>& adj, const std::set<VertexId>& removed,
                            std::vector<int>* sizes = nullptr) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (removed.count(v)) continue;
            for (VertexId u : adj[static_cast<std::size_t>(v)]) {
                if (removed.count(u)) continue;
                const int m = std::min(label[static_cast<std::size_t>(v)], label[static_cast<std::size_t>(u)]);
                if (label[static_cast<std::size_t>(v)] != m || label[static_cast<std::size_t>(u)] != m) {
                    label[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(u)] = m;
                    changed = true;
                }
            }
        }
    }
    std::map<int, int> count;
    for (int v = 0; v < n; ++v)
        if (!removed.count(v)) ++count[label[static_cast<std::size_t>(v)]];
    if (sizes) {
        sizes->clear();
        for (const auto& [l, s] : count) sizes->push_back(s);
        std::sort(sizes->begin(), sizes->end());
    }
    return static_cast<int>(count.size());
}

// Vertex connectivity by trying every subset in increasing size (complete graphs give n-1).
inline int brute_connectivity(const longcycle::RotationTable& t) {
    const auto adj = adjacency(t);
    const int n = t.vertex_count();
    for (int k = 0; k < n - 1; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::function<bool(int, int)> rec = [&](int from, int depth) {
            if (depth == k) {
                std::set<VertexId> s(pick.begin(), pick.end());
                return count_components(adj, s) > 1;
            }
            for (int v = from; v < n; ++v) {
                pick[static_cast<std::size_t>(depth)] = v;
                if (rec(v + 1, depth + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return k;
    }
    return n - 1;
}

inline bool brute_essentially_4_connected(const longcycle::RotationTable& t) {
    if (brute_connectivity(t) < 3) return false;
    const auto adj = adjacency(t);
    const int n = t.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                std::vector<int> sizes;
                if (count_components(adj, {a, b, c}, &sizes) > 1 && sizes.front() > 1) return false;
            }
    return true;
}

// Longest cycle by depth-first enumeration of simple paths from each least vertex.
inline int brute_circumference(const longcycle::RotationTable& t) {
    const auto adj = adjacency(t);
    const int n = t.vertex_count();
    int best = 0;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<void(int, int, int)> dfs = [&](int start, int v, int len) {
        if (best == n) return;
        for (VertexId u : adj[static_cast<std::size_t>(v)]) {
            if (u == start && len >= 3) best = std::max(best, len);
            if (u <= start || used[static_cast<std::size_t>(u)]) continue;
            used[static_cast<std::size_t>(u)] = 1;
            dfs(start, u, len + 1);
            used[static_cast<std::size_t>(u)] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        used[static_cast<std::size_t>(s)] = 1;
        dfs(s, s, 1);
        used[static_cast<std::size_t>(s)] = 0;
    }
    return best;
}

// Is `cyc` a simple cycle of the graph whose complement is independent with all degrees 3?
inline bool brute_is_oi3(const longcycle::RotationTable& t, const std::vector<VertexId>& cyc) {
    const auto adj = adjacency(t);
    const int n = t.vertex_count();
    std::set<VertexId> on(cyc.begin(), cyc.end());
    if (on.size() != cyc.size() || cyc.size() < 3) return false;
    for (std::size_t i = 0; i < cyc.size(); ++i)
        if (!adj[static_cast<std::size_t>(cyc[i])].count(cyc[(i + 1) % cyc.size()])) return false;
    for (int v = 0; v < n; ++v) {
        if (on.count(v)) continue;
        if (adj[static_cast<std::size_t>(v)].size() != 3) return false;
        for (VertexId u : adj[static_cast<std::size_t>(v)])
            if (!on.count(u)) return false;
    }
    return true;
}

// Faces counted by a walk that keeps its own visited set of darts.
inline int brute_face_count(const longcycle::RotationTable& t) {
    std::set<std::pair<VertexId, VertexId>> seen;
    int faces = 0;
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        for (VertexId u : t.rotation(v)) {
            if (seen.count({v, u})) continue;
            ++faces;
            VertexId a = v, b = u;
            while (seen.insert({a, b}).second) {
                const auto r = t.rotation(b);
                const auto it = std::find(r.begin(), r.end(), a);
                const VertexId nb = (it + 1 == r.end()) ? r.front() : *(it + 1);
                a = b;
                b = nb;
            }
        }
    return faces;
}

// ---- random plane graphs -------------------------------------------------------

// Random stacked triangulation on n >= 4 vertices, then each edge is dropped
// with probability `drop` when the graph stays connected. The rotation of the
// result is inherited, so it is always a sphere embedding.
inline longcycle::RotationTable random_plane_graph(std::mt19937& rng, int n, double drop = 0.0) {
    std::vector<std::vector<VertexId>> rot{{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}};
    auto succ = [&](VertexId v, VertexId u) {
        const auto& r = rot[static_cast<std::size_t>(v)];
        const auto it = std::find(r.begin(), r.end(), u);
        return (it + 1 == r.end()) ? r.front() : *(it + 1);
    };
    while (static_cast<int>(rot.size()) < n) {
        // Pick a random dart; its face is a triangle.
        const VertexId a = static_cast<VertexId>(rng() % rot.size());
        const auto& ra = rot[static_cast<std::size_t>(a)];
        const VertexId b = ra[rng() % ra.size()];
        const VertexId c = succ(b, a);
        const VertexId x = static_cast<VertexId>(rot.size());
        // Face darts a->b, b->c, c->a: x goes right after the dart's tail at its head.
        for (auto [tail, head] : {std::pair{a, b}, std::pair{b, c}, std::pair{c, a}}) {
            auto& r = rot[static_cast<std::size_t>(head)];
            r.insert(std::find(r.begin(), r.end(), tail) + 1, x);
        }
        rot.push_back({c, b, a});
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v)
        for (VertexId u : rot[static_cast<std::size_t>(v)])
            if (v < u) edges.push_back({v, u});
    std::shuffle(edges.begin(), edges.end(), rng);
    std::bernoulli_distribution coin(drop);
    for (auto [u, v] : edges) {
        if (!coin(rng)) continue;
        auto trial = rot;
        std::erase(trial[static_cast<std::size_t>(u)], v);
        std::erase(trial[static_cast<std::size_t>(v)], u);
        std::vector<std::set<VertexId>> adj(trial.size());
        for (std::size_t w = 0; w < trial.size(); ++w) adj[w].insert(trial[w].begin(), trial[w].end());
        if (count_components(adj, {}) == 1) rot = std::move(trial);
    }
    return longcycle::RotationTable(std::move(rot));
}

// Adds vertex n inside the face traversed by dart (tail, head), joined to every
// vertex of that face.
inline longcycle::RotationTable insert_into_face(const longcycle::RotationTable& t, longcycle::Dart d) {
    const auto emb = longcycle::PlanarEmbedding::build(t);
    const auto& face = emb.face(emb.face_of(d));
    std::vector<std::vector<VertexId>> rot = t.rotations();
    const VertexId x = t.vertex_count();
    std::vector<VertexId> around;
    for (const longcycle::Dart& e : face.boundary) {
        auto& r = rot[static_cast<std::size_t>(e.head)];
        r.insert(std::find(r.begin(), r.end(), e.tail) + 1, x);
        around.push_back(e.tail);
    }
    std::reverse(around.begin(), around.end());
    rot.push_back(around);
    return longcycle::RotationTable(std::move(rot));
}

// Same graph with vertex v renamed perm[v].
inline longcycle::RotationTable relabel(const longcycle::RotationTable& t, const std::vector<VertexId>& perm) {
    std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(t.vertex_count()));
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        for (VertexId u : t.rotation(v)) rot[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])].push_back(perm[static_cast<std::size_t>(u)]);
    return longcycle::RotationTable(std::move(rot));
}

// ---- replacement fixtures -----------------------------------------------------

// One fixture per pattern on a 12-cycle: the main face is inside, the faces it
// needs opposite are outside, chords are drawn inside. No outer vertex has two
// consecutive attachments, so the cycle has no extendable edge.
struct PatternFixture {
    longcycle::PatternId pattern;
    std::vector<Item> items;
};

inline std::vector<PatternFixture> pattern_fixtures() {
    using P = longcycle::PatternId;
    return {
        {P::C2b, {in({1, 3, 7}), out({2, 4, 9})}},
        {P::C2c, {in({1, 3, 7}), out({1, 4, 9}), out({2, 4})}},
        {P::C3a, {in({2, 5, 9}), out({11, 1, 3}), out({4, 6, 8})}},
        {P::C3b, {in({2, 5, 9}), out({11, 1, 3}), out({3, 6, 9})}},
        {P::C4a_vx, {in({2, 6, 9}), out({11, 1, 3}), out({3, 5, 8}), in({2, 4})}},
        {P::C4a_xz, {in({2, 6, 9}), out({11, 1, 3}), out({3, 5, 8}), in({4, 6})}},
        {P::C4b_vy, {in({2, 6, 9}), out({11, 1, 3}), out({4, 6, 8}), in({2, 5})}},
        {P::C4b_wy, {in({2, 6, 9}), out({11, 1, 3}), out({4, 6, 8}), in({3, 5})}},
        {P::C4c_vy, {in({2, 6, 9}), out({11, 1, 4}), out({4, 6, 8}), in({2, 5})}},
        {P::C4c_wy, {in({2, 6, 9}), out({11, 1, 4}), out({4, 6, 8}), in({3, 5})}},
        {P::C4d, {in({1, 5, 9}), out({10, 1, 3}), out({3, 5, 8}), in({2, 4})}},
        {P::C5_vx, {in({1, 6, 9}), out({10, 1, 3}), out({3, 5, 9}), out({5, 7, 9}), in({2, 4})}},
        {P::C5_xz, {in({1, 6, 9}), out({10, 1, 3}), out({3, 5, 9}), out({5, 7, 9}), in({4, 6})}},
    };
}

constexpr int kFixtureCycle = 12;

// ---- corpus ----------------------------------------------------------------------

struct CorpusEntry {
    std::string name;
    longcycle::PlanarEmbedding graph;
    std::optional<longcycle::CycleSeq> initial;
};

// Named essentially 4-connected graphs with n <= 10, the icosahedron, the
// octahedron with a vertex in every face, and inserted antiprisms k = 4..max_k.
inline std::vector<CorpusEntry> corpus(int max_k = 8) {
    using namespace longcycle;
    std::vector<CorpusEntry> out;
    for (const char* name : {"k4", "octahedron", "cube", "wheel5", "icosahedron"})
        out.push_back({name, named_graph(name).embedding, std::nullopt});
    {
        const auto octa = named_graph("octahedron").embedding;
        const auto ham = hamiltonian_small(octa);
        const GeneratedInstance g = gen_inserted(octa, ham.vertices());
        out.push_back({"inserted-octahedron", g.graph, g.initial_cycle});
    }
    for (int k = 4; k <= max_k; ++k) {
        const GeneratedInstance g = gen_inserted_antiprism(k);
        out.push_back({"antiprism-" + std::to_string(k), g.graph, g.initial_cycle});
    }
    return out;
}

}  // namespace lctest
