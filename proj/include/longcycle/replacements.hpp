#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "longcycle/bc_graph.hpp"
#include "longcycle/oi3.hpp"
#include "longcycle/planar.hpp"

namespace longcycle {

// Local rerouting patterns that lengthen a non-extendable OI3-cycle.
//
// Role names: cycle vertices s, t, u, v, w, x, y, z in cycle order as each
// pattern lists them; outer vertices a (on the main face), b, c, d.
// Where a pattern needs one of two chords, each chord is its own entry.
enum class PatternId {
    C2b,
    C2c,
    C3a,
    C3b,
    C4a_vx,
    C4a_xz,
    C4b_vy,
    C4b_wy,
    C4c_vy,
    C4c_wy,
    C4d,
    C5_vx,
    C5_xz,
};

struct PatternInfo {
    PatternId id;
    std::string_view name;
    int increment;  // length gain, |replacement| - |replaced|
    std::string_view description;
    std::string_view replaced;     // role names of the replaced subpath of C
    std::string_view replacement;  // role names of the new path, same ends
    std::string_view chords;       // required chords as role pairs, e.g. "yu" or "vx"
};

std::span<const PatternInfo> catalogue();
const PatternInfo& pattern_info(PatternId id);
std::string_view to_string(PatternId id);
std::optional<PatternId> pattern_from_string(std::string_view name);

struct ReplacementInstance {
    PatternId pattern = PatternId::C2b;
    int main_face = 0;
    int orientation = 1;  // +1 along the normalized cycle, -1 against it
    std::map<char, VertexId> binding;
    std::vector<VertexId> replaced_path;
    std::vector<VertexId> replacement_path;
    std::vector<Edge> required_chords;

    int increment() const { return pattern_info(pattern).increment; }
};

// Scans faces by id, then patterns in catalogue order, then both orientations.
// Throws CycleTooShort when |C| < 8 and B is not empty.
std::optional<ReplacementInstance> detect_replacement(const PlanarEmbedding& emb, const BCGraph& bc,
                                                      std::span<const FaceClass> classes);
std::vector<ReplacementInstance> detect_all_replacements(const PlanarEmbedding& emb, const BCGraph& bc,
                                                         std::span<const FaceClass> classes);

// Throws StaleInstance when the instance does not fit `cycle`.
CycleSeq apply_replacement(const PlanarEmbedding& emb, const CycleSeq& cycle, const ReplacementInstance& inst);

}  // namespace longcycle
