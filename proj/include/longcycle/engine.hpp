#pragma once

#include <optional>
#include <vector>

#include "longcycle/bc_graph.hpp"
#include "longcycle/oi3.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/planar.hpp"
#include "longcycle/replacements.hpp"

namespace longcycle {

enum class StepKind { Extend, Replace };

struct EngineStep {
    StepKind kind = StepKind::Extend;
    std::optional<PatternId> pattern;  // set for Replace
    int length_before = 0;
    int length_after = 0;
    long micros = 0;  // wall time of the round that produced this step
};

struct EngineTrace {
    std::vector<EngineStep> steps;
    int iterations = 0;
    long total_micros = 0;
};

// ceil(3(n+2)/5)
int length_bound(int n);

struct Certificate {
    int n = 0;
    int c = 0;
    int mu = 0;
    int bound = 0;
    long sum_w0 = 0;
    long sum_w1 = 0;
    bool ineq_i = false;
    bool ineq_ii = false;
    int iii_violations = 0;
    bool fixpoint = false;

    // (i) and (ii) together give 6(n - c + 2) <= 6 mu <= 4 c, i.e. c >= 3(n+2)/5.
    bool certified() const { return ineq_i && ineq_ii; }
    bool bound_holds() const { return c >= bound; }

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct Fixpoint {
    CycleSeq cycle;
    EngineTrace trace;
};

// Alternates extension (tried first) and replacement until neither applies.
// Throws InitialCycleInvalid and CycleTooShortAtFixpoint.
Fixpoint improve_to_fixpoint(const PlanarEmbedding& emb, const CycleSeq& initial);

// Builds H, runs the discharging rules and fills in the counting bounds.
// Throws InternalError if a certified fixpoint misses the length bound.
Certificate certify(const PlanarEmbedding& emb, const CycleSeq& cycle);

struct SolveOptions {
    OracleConfig oracle;
    // Skip the essential 4-connectivity check when the caller already ran it.
    bool assume_essentially_4_connected = false;
};

struct Solution {
    CycleSeq cycle;
    Certificate certificate;
    EngineTrace trace;
};

// n <= 10: Hamiltonian cycle by exhaustive search. Otherwise starts from
// `initial`, or from an exhaustive OI3 search when n <= oracle.max_n_oi3.
// Throws NotEssentially4Connected and NoInitialCycleFound.
Solution solve(const PlanarEmbedding& emb, const std::optional<CycleSeq>& initial = std::nullopt,
               const SolveOptions& options = {});

}  // namespace longcycle
