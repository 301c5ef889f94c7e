#include "longcycle/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

constexpr int kDpHardLimit = 24;

std::vector<std::uint32_t> neighbour_masks(const RotationTable& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId u : g.rotation(v)) adj[v] |= 1u << u;
    return adj;
}

}  // namespace

LongestCycle longest_cycle_exact(const PlanarEmbedding& emb, const OracleConfig& cfg) {
    const RotationTable& g = emb.table();
    const int n = g.vertex_count();
    if (n > cfg.max_n_longest || n > kDpHardLimit)
        fail(ErrorCode::TooLarge, "exact circumference limited to n <= " +
                                      std::to_string(std::min(cfg.max_n_longest, kDpHardLimit)) +
                                      ", got n = " + std::to_string(n));
    const auto adj = neighbour_masks(g);

    // ends[mask]: vertices v such that some path from the least vertex of mask
    // to v visits exactly mask.
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    for (int s = 0; s < n; ++s) ends[std::size_t{1} << s] = 1u << s;

    int best = 0;
    std::uint32_t best_mask = 0;
    int best_end = -1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::uint32_t e = ends[mask];
        if (e == 0) continue;
        const int s = std::countr_zero(mask);
        const int size = std::popcount(mask);
        const std::uint32_t above_s = ~((2u << s) - 1);  // vertices greater than s
        for (std::uint32_t rest = e; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (size >= 3 && (adj[v] >> s & 1u) && size > best) {
                best = size;
                best_mask = mask;
                best_end = v;
            }
            for (std::uint32_t next = adj[v] & above_s & ~mask; next; next &= next - 1) {
                const int u = std::countr_zero(next);
                ends[mask | (1u << u)] |= 1u << u;
            }
        }
    }

    LongestCycle out;
    out.length = best;
    if (best == 0) return out;
    std::vector<VertexId> path;
    std::uint32_t mask = best_mask;
    int v = best_end;
    const int s = std::countr_zero(mask);
    while (true) {
        path.push_back(v);
        if (v == s) break;
        mask &= ~(1u << v);
        std::uint32_t prev = ends[mask] & adj[v];
        if (prev == 0) fail(ErrorCode::InternalError, "circumference witness reconstruction failed");
        v = std::countr_zero(prev);
    }
    out.witness = CycleSeq::from(g, std::move(path));
    return out;
}

CycleSeq hamiltonian_small(const PlanarEmbedding& emb) {
    const int n = emb.vertex_count();
    if (n > 10) fail(ErrorCode::PreconditionViolated, "Hamiltonian search is for n <= 10, got " + std::to_string(n));
    OracleConfig cfg;
    cfg.max_n_longest = 10;
    LongestCycle lc = longest_cycle_exact(emb, cfg);
    if (lc.length != n || !lc.witness)
        fail(ErrorCode::InternalError, "no Hamiltonian cycle on " + std::to_string(n) +
                                           " vertices; the input is not essentially 4-connected planar");
    return *lc.witness;
}

namespace {

class OI3Search {
public:
    OI3Search(const RotationTable& g, std::optional<std::chrono::milliseconds> budget)
        : g_(g),
          n_(g.vertex_count()),
          on_path_(static_cast<std::size_t>(n_), 0),
          excluded_(static_cast<std::size_t>(n_), 0),
          budget_(budget),
          started_(std::chrono::steady_clock::now()) {}

    std::optional<CycleSeq> run() {
        for (VertexId s = 0; s < n_ && !done_; ++s) {
            // Cycles with least vertex s: every smaller vertex stays off the cycle.
            if (s > 0) {
                excluded_[s - 1] = 1;
                if (g_.degree(s - 1) != 3) break;
                bool clash = false;
                for (VertexId u : g_.rotation(s - 1)) clash |= u < s - 1;
                if (clash) break;
            }
            path_ = {s};
            on_path_[s] = 1;
            extend();
            on_path_[s] = 0;
        }
        if (!best_.empty()) return CycleSeq::from(g_, best_);
        if (out_of_budget_) fail(ErrorCode::BudgetExceeded, "time budget exhausted before any OI3-cycle was found");
        return std::nullopt;
    }

private:
    bool free(VertexId v) const { return !on_path_[v] && !excluded_[v]; }

    // Neighbours through which a free vertex could still be threaded into the cycle.
    int open_degree(VertexId v) const {
        int k = 0;
        for (VertexId u : g_.rotation(v)) k += free(u) || u == path_.front() || u == path_.back();
        return k;
    }

    // False if the partial path cannot be completed to an OI3-cycle longer than best_.
    bool promising() const {
        int could_join = 0;
        for (VertexId v = 0; v < n_; ++v) {
            if (on_path_[v]) continue;
            const bool stuck = excluded_[v] || open_degree(v) < 2;
            if (!stuck) {
                ++could_join;
                continue;
            }
            if (g_.degree(v) != 3) return false;
            for (VertexId u : g_.rotation(v))
                if (excluded_[u] || (free(u) && open_degree(u) < 2)) return false;
        }
        return static_cast<int>(path_.size()) + could_join > static_cast<int>(best_.size());
    }

    bool closes_oi3() const {
        for (VertexId v = 0; v < n_; ++v) {
            if (on_path_[v]) continue;
            if (g_.degree(v) != 3) return false;
            for (VertexId u : g_.rotation(v))
                if (!on_path_[u]) return false;
        }
        return true;
    }

    void extend() {
        if (done_ || (++nodes_ % 1024 == 0 && over_budget())) return;
        const VertexId s = path_.front();
        const VertexId end = path_.back();
        // Each cycle is met twice; keep the traversal whose second vertex is smaller.
        if (path_.size() >= 3 && g_.has_edge(end, s) && path_[1] < end && path_.size() > best_.size() &&
            closes_oi3()) {
            best_ = path_;
            if (static_cast<int>(best_.size()) == n_) {
                done_ = true;
                return;
            }
        }
        if (!promising()) return;
        for (VertexId u : g_.rotation(end)) {
            if (!free(u) || u < s) continue;
            path_.push_back(u);
            on_path_[u] = 1;
            extend();
            on_path_[u] = 0;
            path_.pop_back();
            if (done_) return;
        }
    }

    bool over_budget() {
        if (!budget_) return false;
        if (std::chrono::steady_clock::now() - started_ > *budget_) {
            out_of_budget_ = true;
            done_ = true;
        }
        return out_of_budget_;
    }

    const RotationTable& g_;
    int n_;
    std::vector<char> on_path_;
    std::vector<char> excluded_;
    std::vector<VertexId> path_;
    std::vector<VertexId> best_;
    std::optional<std::chrono::milliseconds> budget_;
    std::chrono::steady_clock::time_point started_;
    long nodes_ = 0;
    bool done_ = false;
    bool out_of_budget_ = false;
};

}  // namespace

std::optional<CycleSeq> search_oi3_cycle(const PlanarEmbedding& emb, const OracleConfig& cfg) {
    const int n = emb.vertex_count();
    if (n > cfg.max_n_oi3)
        fail(ErrorCode::TooLarge,
             "OI3 search limited to n <= " + std::to_string(cfg.max_n_oi3) + ", got n = " + std::to_string(n));
    return OI3Search(emb.table(), cfg.time_budget).run();
}

}  // namespace longcycle
