#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "longcycle/error.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/replacements.hpp"
#include "support.hpp"

using namespace longcycle;

namespace {

struct Prepared {
    PlanarEmbedding emb;
    CycleSeq cycle;
    OI3Report report;
};

Prepared prepare(const std::vector<lctest::Item>& items, int c = lctest::kFixtureCycle) {
    const auto emb = PlanarEmbedding::build(lctest::circle_fixture(c, items));
    const auto cycle = CycleSeq::from(emb.table(), lctest::iota_cycle(c));
    const auto report = validate_oi3(emb, cycle);
    REQUIRE(report.valid);
    REQUIRE(find_extendable_edges(emb, cycle, report.outer).empty());
    return {emb, cycle, report};
}

std::vector<ReplacementInstance> detect_all(const Prepared& p) {
    const BCGraph bc = build_bc_graph(p.emb, p.cycle, p.report.outer);
    return detect_all_replacements(p.emb, bc, classify_faces(bc));
}

std::optional<ReplacementInstance> detect_first(const Prepared& p) {
    const BCGraph bc = build_bc_graph(p.emb, p.cycle, p.report.outer);
    return detect_replacement(p.emb, bc, classify_faces(bc));
}

// Instance contract, checked against the graph directly.
void check_instance(const Prepared& p, const ReplacementInstance& inst) {
    const auto adj = lctest::adjacency(p.emb.table());
    const auto& vs = p.cycle.vertices();
    const int c = p.cycle.length();

    // replaced_path is a contiguous subpath of C, in one direction or the other.
    const auto& old_path = inst.replaced_path;
    const int start = static_cast<int>(std::find(vs.begin(), vs.end(), old_path.front()) - vs.begin());
    bool contiguous = false;
    for (int d : {1, -1}) {
        bool ok = true;
        for (std::size_t k = 0; k < old_path.size(); ++k)
            ok = ok && vs[static_cast<std::size_t>(((start + d * static_cast<int>(k)) % c + c) % c)] == old_path[k];
        contiguous = contiguous || ok;
    }
    CHECK(contiguous);
    CHECK(inst.replacement_path.front() == old_path.front());
    CHECK(inst.replacement_path.back() == old_path.back());
    for (std::size_t k = 0; k + 1 < inst.replacement_path.size(); ++k)
        CHECK(adj[inst.replacement_path[k]].count(inst.replacement_path[k + 1]));
    for (const Edge& e : inst.required_chords) CHECK(adj[e.u].count(e.v));

    std::set<VertexId> on_cycle, outer;
    int cycle_roles = 0, outer_roles = 0;
    for (const auto& [role, v] : inst.binding) {
        if (p.cycle.positions(p.emb.vertex_count())[v] >= 0) {
            on_cycle.insert(v);
            ++cycle_roles;
        } else {
            outer.insert(v);
            ++outer_roles;
        }
    }
    CHECK(static_cast<int>(on_cycle.size()) == cycle_roles);
    CHECK(static_cast<int>(outer.size()) == outer_roles);

    const CycleSeq next = apply_replacement(p.emb, p.cycle, inst);
    CHECK(next.length() == c + pattern_info(inst.pattern).increment);
    CHECK(lctest::brute_is_oi3(p.emb.table(), next.vertices()));
    for (VertexId v : vs) CHECK(std::find(next.vertices().begin(), next.vertices().end(), v) != next.vertices().end());
}

}  // namespace

TEST_CASE("catalogue") {
    const auto cat = catalogue();
    REQUIRE(cat.size() == 13);
    const std::map<std::string_view, int> increments{
        {"C2b", 2},    {"C2c", 1},    {"C3a", 3},    {"C3b", 2},    {"C4a_vx", 1}, {"C4a_xz", 1}, {"C4b_vy", 2},
        {"C4b_wy", 1}, {"C4c_vy", 1}, {"C4c_wy", 1}, {"C4d", 1},    {"C5_vx", 1},  {"C5_xz", 1}};
    for (std::size_t i = 0; i < cat.size(); ++i) {
        const PatternInfo& p = cat[i];
        CHECK(static_cast<std::size_t>(p.id) == i);
        CHECK(increments.at(p.name) == p.increment);
        CHECK(p.increment >= 1);
        CHECK(static_cast<int>(p.replacement.size() - p.replaced.size()) == p.increment);
        CHECK(p.replacement.front() == p.replaced.front());
        CHECK(p.replacement.back() == p.replaced.back());
        CHECK(pattern_from_string(p.name) == p.id);
        CHECK(to_string(p.id) == p.name);
        CHECK(p.chords.size() % 2 == 0);
        CHECK_FALSE(p.description.empty());
    }
    CHECK_FALSE(pattern_from_string("C9z"));
}

TEST_CASE("each fixture detects exactly its pattern and gains its increment") {
    for (const auto& fx : lctest::pattern_fixtures()) {
        CAPTURE(to_string(fx.pattern));
        const Prepared p = prepare(fx.items);
        const auto first = detect_first(p);
        REQUIRE(first);
        CHECK(first->pattern == fx.pattern);
        const auto all = detect_all(p);
        REQUIRE_FALSE(all.empty());
        for (const auto& inst : all) {
            CHECK(inst.pattern == fx.pattern);
            check_instance(p, inst);
        }
    }
}

TEST_CASE("C2b fixture: replacement x a z y b u") {
    const Prepared p = prepare(lctest::pattern_fixtures()[0].items);
    const auto inst = detect_first(p);
    REQUIRE(inst);
    CHECK(inst->replaced_path == std::vector<VertexId>{1, 2, 3, 4});
    CHECK(inst->replacement_path == std::vector<VertexId>{1, 12, 3, 2, 13, 4});
    CHECK(apply_replacement(p.emb, p.cycle, *inst).length() == 14);
}

TEST_CASE("C3a fixture absorbs all three outer vertices") {
    const Prepared p = prepare(lctest::pattern_fixtures()[2].items);
    const auto inst = detect_first(p);
    REQUIRE(inst);
    // w b x v a z y c u
    CHECK(inst->replacement_path == std::vector<VertexId>{1, 13, 3, 2, 12, 5, 4, 14, 6});
    const auto next = apply_replacement(p.emb, p.cycle, *inst);
    CHECK(next.length() == 15);
    CHECK(validate_oi3(p.emb, next).outer.empty());
}

TEST_CASE("C4d fixture: replacement v w y x c z") {
    const Prepared p = prepare(lctest::pattern_fixtures()[10].items);
    const auto inst = detect_first(p);
    REQUIRE(inst);
    CHECK(inst->pattern == PatternId::C4d);
    CHECK(inst->replacement_path == std::vector<VertexId>{1, 2, 4, 3, 14, 5});
    CHECK(inst->required_chords == std::vector<Edge>{{2, 4}});
    CHECK(apply_replacement(p.emb, p.cycle, *inst).length() == 13);
}

TEST_CASE("a missing chord disables chord patterns") {
    // C4d fixture without its chord.
    auto items = lctest::pattern_fixtures()[10].items;
    items.pop_back();
    CHECK(detect_all(prepare(items)).empty());
}

TEST_CASE("no outer vertices: no replacement, whatever the length") {
    const auto emb = named_graph("octahedron").embedding;
    const auto cycle = CycleSeq::from(emb.table(), {0, 1, 2, 3, 4, 5});
    const BCGraph bc = build_bc_graph(emb, cycle, std::vector<VertexId>{});
    CHECK_FALSE(detect_replacement(emb, bc, classify_faces(bc)));
}

TEST_CASE("short cycles with outer vertices are rejected") {
    const Prepared p = prepare({lctest::in({0, 2, 4}), lctest::out({1, 3, 5})}, 6);
    const BCGraph bc = build_bc_graph(p.emb, p.cycle, p.report.outer);
    try {
        detect_replacement(p.emb, bc, classify_faces(bc));
        FAIL("expected CycleTooShort");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CycleTooShort);
    }
}

TEST_CASE("a stale instance is refused") {
    const Prepared p = prepare(lctest::pattern_fixtures()[0].items);
    const auto inst = detect_first(p);
    REQUIRE(inst);
    const CycleSeq next = apply_replacement(p.emb, p.cycle, *inst);
    try {
        apply_replacement(p.emb, next, *inst);
        FAIL("expected StaleInstance");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StaleInstance);
    }
}

TEST_CASE("fixtures survive relabelling") {
    // The scan must not depend on vertex names: rename every vertex and
    // detect the same pattern.
    for (const auto& fx : lctest::pattern_fixtures()) {
        CAPTURE(to_string(fx.pattern));
        const auto t = lctest::circle_fixture(lctest::kFixtureCycle, fx.items);
        const int n = t.vertex_count();
        std::vector<VertexId> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::mt19937 rng(static_cast<unsigned>(fx.pattern) + 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto emb = PlanarEmbedding::build(lctest::relabel(t, perm));
        std::vector<VertexId> cyc;
        for (int i = 0; i < lctest::kFixtureCycle; ++i) cyc.push_back(perm[static_cast<std::size_t>(i)]);
        const auto cycle = CycleSeq::from(emb.table(), cyc);
        const auto report = validate_oi3(emb, cycle);
        REQUIRE(report.valid);
        const BCGraph bc = build_bc_graph(emb, cycle, report.outer);
        const auto all = detect_all_replacements(emb, bc, classify_faces(bc));
        REQUIRE_FALSE(all.empty());
        for (const auto& inst : all) {
            CHECK(inst.pattern == fx.pattern);
            CHECK(apply_replacement(emb, cycle, inst).length() == lctest::kFixtureCycle + inst.increment());
        }
    }
}
