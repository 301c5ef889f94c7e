#pragma once

#include <chrono>
#include <optional>

#include "longcycle/oi3.hpp"
#include "longcycle/planar.hpp"

namespace longcycle {

// Exhaustive searches used as ground truth on small inputs.
struct OracleConfig {
    int max_n_longest = 18;
    int max_n_oi3 = 24;
    std::optional<std::chrono::milliseconds> time_budget;
};

struct LongestCycle {
    int length = 0;  // 0 when the graph is a forest
    std::optional<CycleSeq> witness;
};

// Subset dynamic programme over paths that start at their least vertex.
// Throws TooLarge when n > cfg.max_n_longest.
LongestCycle longest_cycle_exact(const PlanarEmbedding& emb, const OracleConfig& cfg = {});

// Backtracking search for an OI3-cycle, keeping the longest found; stops early
// on a Hamiltonian cycle. Returns nullopt only after an exhaustive search.
// Throws TooLarge, or BudgetExceeded if the budget runs out before any cycle is found.
std::optional<CycleSeq> search_oi3_cycle(const PlanarEmbedding& emb, const OracleConfig& cfg = {});

// Hamiltonian cycle of a graph on at most 10 vertices. Throws
// PreconditionViolated for larger graphs and InternalError if none exists.
CycleSeq hamiltonian_small(const PlanarEmbedding& emb);

}  // namespace longcycle
