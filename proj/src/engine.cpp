#include "longcycle/engine.hpp"

#include <chrono>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

using Clock = std::chrono::steady_clock;

long micros_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0).count();
}

constexpr int kMinReplacementLength = 8;

}  // namespace

int length_bound(int n) { return (3 * (n + 2) + 4) / 5; }

Fixpoint improve_to_fixpoint(const PlanarEmbedding& emb, const CycleSeq& initial) {
    const OI3Report first = validate_oi3(emb, initial);
    if (!first.valid) fail(ErrorCode::InitialCycleInvalid, "initial cycle is not an OI3-cycle");

    Fixpoint result{initial, {}};
    const auto start = Clock::now();
    while (true) {
        const auto round = Clock::now();
        CycleSeq& cycle = result.cycle;
        const OI3Report report = validate_oi3(emb, cycle);
        if (!report.valid) fail(ErrorCode::InternalError, "engine lost the OI3 property");
        if (report.outer.empty()) break;

        EngineStep step;
        step.length_before = cycle.length();
        const auto extendable = find_extendable_edges(emb, cycle, report.outer);
        if (!extendable.empty()) {
            cycle = extend_cycle(emb.table(), cycle, extendable.front());
            step.kind = StepKind::Extend;
        } else {
            if (cycle.length() < kMinReplacementLength)
                fail(ErrorCode::CycleTooShortAtFixpoint,
                     "no extendable edge and cycle length " + std::to_string(cycle.length()) + " < 8");
            const BCGraph bc = build_bc_graph(emb, cycle, report.outer);
            const auto classes = classify_faces(bc);
            const auto inst = detect_replacement(emb, bc, classes);
            if (!inst) break;
            cycle = apply_replacement(emb, cycle, *inst);
            step.kind = StepKind::Replace;
            step.pattern = inst->pattern;
        }
        step.length_after = cycle.length();
        step.micros = micros_since(round);
        result.trace.steps.push_back(step);
        ++result.trace.iterations;
        if (result.trace.iterations > emb.vertex_count())
            fail(ErrorCode::InternalError, "engine exceeded n iterations");
    }
    result.trace.total_micros = micros_since(start);
    return result;
}

Certificate certify(const PlanarEmbedding& emb, const CycleSeq& cycle) {
    const OI3Report report = validate_oi3(emb, cycle);
    if (!report.valid) fail(ErrorCode::PreconditionViolated, "certify needs an OI3-cycle");

    const BCGraph bc = build_bc_graph(emb, cycle, report.outer);
    const auto classes = classify_faces(bc);
    const WeightState weights = run_discharging(bc, classes);
    const BoundsReport bounds = check_counting_bounds(bc, classes, weights);

    Certificate cert;
    cert.n = emb.vertex_count();
    cert.c = cycle.length();
    cert.mu = bounds.mu;
    cert.bound = length_bound(cert.n);
    cert.sum_w0 = weights.sum_w0();
    cert.sum_w1 = weights.sum_w1();
    cert.ineq_i = bounds.ineq_i;
    cert.ineq_ii = bounds.ineq_ii;
    cert.iii_violations = static_cast<int>(bounds.iii_violations.size());

    if (report.outer.empty()) {
        cert.fixpoint = true;
    } else if (find_extendable_edges(emb, cycle, report.outer).empty() &&
               cycle.length() >= kMinReplacementLength) {
        cert.fixpoint = !detect_replacement(emb, bc, classes).has_value();
    }

    if (cert.sum_w1 != cert.sum_w0 || cert.sum_w0 != 6L * cert.mu)
        fail(ErrorCode::InternalError, "discharging did not conserve weight");
    if (cert.fixpoint && cert.certified() && !cert.bound_holds())
        fail(ErrorCode::InternalError, "certified fixpoint below the length bound");
    return cert;
}

Solution solve(const PlanarEmbedding& emb, const std::optional<CycleSeq>& initial, const SolveOptions& options) {
    if (!options.assume_essentially_4_connected) {
        const ConnectivityVerdict verdict = check_essentially_4_connected(emb);
        if (!verdict.is_essentially_4_connected) {
            std::string witness;
            for (VertexId v : verdict.witness.value_or(std::vector<VertexId>{}))
                witness += (witness.empty() ? "" : " ") + std::to_string(v);
            fail(ErrorCode::NotEssentially4Connected, "separator {" + witness + "}");
        }
    }

    const int n = emb.vertex_count();
    if (n <= 10) {
        CycleSeq cycle = hamiltonian_small(emb);
        Certificate cert = certify(emb, cycle);
        return {std::move(cycle), cert, {}};
    }

    std::optional<CycleSeq> start = initial;
    if (!start) {
        if (n > options.oracle.max_n_oi3)
            fail(ErrorCode::NoInitialCycleFound,
                 "n = " + std::to_string(n) + " is above the OI3 search limit; supply an initial cycle");
        start = search_oi3_cycle(emb, options.oracle);
        if (!start) fail(ErrorCode::NoInitialCycleFound, "graph has no OI3-cycle");
    }
    Fixpoint fp = improve_to_fixpoint(emb, *start);
    Certificate cert = certify(emb, fp.cycle);
    return {std::move(fp.cycle), cert, std::move(fp.trace)};
}

}  // namespace longcycle
