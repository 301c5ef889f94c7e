#include "longcycle/instances.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <utility>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

struct Point {
    double x;
    double y;
};

// Counter-clockwise rotations of a straight-line plane drawing.
RotationTable rotations_from_drawing(const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<VertexId>> rot(pts.size());
    for (auto [a, b] : edges) {
        rot[a].push_back(b);
        rot[b].push_back(a);
    }
    for (std::size_t v = 0; v < pts.size(); ++v) {
        auto angle = [&](VertexId u) { return std::atan2(pts[u].y - pts[v].y, pts[u].x - pts[v].x); };
        std::sort(rot[v].begin(), rot[v].end(), [&](VertexId a, VertexId b) { return angle(a) < angle(b); });
    }
    return RotationTable(std::move(rot));
}

Point polar(double radius, double degrees) {
    const double r = degrees * std::acos(-1.0) / 180.0;
    return {radius * std::cos(r), radius * std::sin(r)};
}

RotationTable k4() {
    return rotations_from_drawing({{0, 10}, {-9, -5}, {9, -5}, {0, 0}},
                                  {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
}

RotationTable octahedron() {
    // Outer triangle 0,1,2; inner triangle 3,4,5 with i+3 antipodal to i.
    return rotations_from_drawing(
        {polar(10, 90), polar(10, 210), polar(10, 330), polar(3, 270), polar(3, 30), polar(3, 150)},
        {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {3, 1}, {3, 2}, {4, 2}, {4, 0}, {5, 0}, {5, 1}});
}

RotationTable cube() {
    return rotations_from_drawing({{-10, -10}, {10, -10}, {10, 10}, {-10, 10}, {-3, -3}, {3, -3}, {3, 3}, {-3, 3}},
                                  {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5},
                                   {2, 6}, {3, 7}});
}

RotationTable wheel(int rim) {
    std::vector<Point> pts{{0, 0}};
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rim; ++i) {
        pts.push_back(polar(10, 360.0 * i / rim));
        edges.emplace_back(0, i + 1);
        edges.emplace_back(i + 1, (i + 1) % rim + 1);
    }
    return rotations_from_drawing(pts, edges);
}

RotationTable tritower() {
    // Triangles a = 0..2, m = 3..5, b = 6..8, nested; a_i - m_i - b_i.
    std::vector<Point> pts;
    for (double radius : {10.0, 5.0, 2.0})
        for (double deg : {90.0, 210.0, 330.0}) pts.push_back(polar(radius, deg));
    std::vector<std::pair<int, int>> edges;
    for (int layer = 0; layer < 3; ++layer)
        for (int i = 0; i < 3; ++i) edges.emplace_back(3 * layer + i, 3 * layer + (i + 1) % 3);
    for (int i = 0; i < 3; ++i) {
        edges.emplace_back(i, 3 + i);
        edges.emplace_back(3 + i, 6 + i);
    }
    return rotations_from_drawing(pts, edges);
}

}  // namespace

RotationTable antiprism_triangulation(int k) {
    if (k < 3) fail(ErrorCode::PreconditionViolated, "antiprism needs k >= 3");
    const VertexId top = 0;
    const VertexId bottom = 2 * k + 1;
    auto up = [k](int i) { return 1 + ((i % k) + k) % k; };
    auto low = [k](int i) { return 1 + k + ((i % k) + k) % k; };
    // up(i) is adjacent to low(i) and low(i+1).
    std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(2 * k + 2));
    for (int i = 0; i < k; ++i) {
        rot[top].push_back(up(i));
        rot[up(i)] = {low(i + 1), up(i + 1), top, up(i - 1), low(i)};
        rot[low(i)] = {bottom, low(i + 1), up(i), up(i - 1), low(i - 1)};
        rot[bottom].push_back(low(k - 1 - i));
    }
    return RotationTable(std::move(rot));
}

std::vector<VertexId> antiprism_hamiltonian_cycle(int k) {
    // top, u1..u(k-1), l(k-1)..l1, bottom, l0, u0
    std::vector<VertexId> cycle{0};
    for (int i = 1; i < k; ++i) cycle.push_back(1 + i);
    for (int i = k - 1; i >= 1; --i) cycle.push_back(1 + k + i);
    cycle.push_back(2 * k + 1);
    cycle.push_back(1 + k);
    cycle.push_back(1);
    return cycle;
}

RotationTable insert_into_all_faces(const PlanarEmbedding& triangulation) {
    const int n0 = triangulation.vertex_count();
    auto rot = triangulation.table().rotations();
    rot.resize(static_cast<std::size_t>(n0) + triangulation.faces().size());
    for (const Face& face : triangulation.faces()) {
        const VertexId x = n0 + face.id;
        const auto& darts = face.boundary;
        const std::size_t len = darts.size();
        for (std::size_t i = 0; i < len; ++i) {
            // The face occupies the corner at darts[i].head right after darts[i].tail.
            auto& r = rot[darts[i].head];
            auto it = std::find(r.begin(), r.end(), darts[i].tail);
            r.insert(it + 1, x);
        }
        for (std::size_t i = len; i-- > 0;) rot[x].push_back(darts[i].tail);
    }
    return RotationTable(std::move(rot));
}

GeneratedInstance gen_inserted(const PlanarEmbedding& base, const std::vector<VertexId>& base_hamiltonian) {
    for (const Face& f : base.faces())
        if (f.boundary.size() != 3) fail(ErrorCode::GenerationInvalid, "base graph is not a triangulation");
    if (static_cast<int>(base_hamiltonian.size()) != base.vertex_count())
        fail(ErrorCode::GenerationInvalid, "base cycle is not Hamiltonian");

    PlanarEmbedding graph = PlanarEmbedding::build(insert_into_all_faces(base));
    std::map<int, VertexId> inserted;
    for (const Face& f : base.faces()) inserted[f.id] = base.vertex_count() + f.id;

    CycleSeq initial;
    try {
        initial = CycleSeq::from(graph.table(), base_hamiltonian);
    } catch (const Error& e) {
        fail(ErrorCode::GenerationInvalid, std::string("initial cycle rejected: ") + e.what());
    }
    const OI3Report report = validate_oi3(graph, initial);
    if (!report.valid || report.outer.size() != inserted.size())
        fail(ErrorCode::GenerationInvalid, "initial cycle is not an OI3-cycle of the generated graph");
    if (!check_essentially_4_connected(graph).is_essentially_4_connected)
        fail(ErrorCode::GenerationInvalid, "generated graph is not essentially 4-connected");
    return {std::move(graph), base, std::move(inserted), std::move(initial)};
}

GeneratedInstance gen_inserted_antiprism(int k) {
    if (k < 3) fail(ErrorCode::PreconditionViolated, "antiprism family needs k >= 3");
    return gen_inserted(PlanarEmbedding::build(antiprism_triangulation(k)), antiprism_hamiltonian_cycle(k));
}

std::vector<std::string> named_graph_names() {
    return {"k4", "octahedron", "cube", "wheel5", "wheel6", "tritower", "icosahedron"};
}

NamedGraph named_graph(std::string_view name) {
    auto make = [&](RotationTable t, KnownFacts facts) {
        return NamedGraph{std::string(name), PlanarEmbedding::build(std::move(t)), facts};
    };
    if (name == "k4") return make(k4(), {3, true, 4});
    if (name == "octahedron") return make(octahedron(), {4, true, 6});
    if (name == "cube") return make(cube(), {3, true, 8});
    if (name == "wheel5") return make(wheel(5), {3, true, 6});
    if (name == "wheel6") return make(wheel(6), {3, false, 7});
    if (name == "tritower") return make(tritower(), {3, false, 9});
    if (name == "icosahedron") return make(antiprism_triangulation(5), {5, true, 12});
    fail(ErrorCode::UnknownName, "no named graph '" + std::string(name) + "'");
}

namespace {

struct Token {
    std::string_view text;
    int line;
    int column;
};

// Splits one line into whitespace-separated tokens, dropping any comment.
std::vector<Token> tokenize_line(std::string_view line, int line_no) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back({line.substr(i, j - i), line_no, static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

[[noreturn]] void syntax_error(const Token& at, const std::string& what) {
    fail(ErrorCode::SyntaxError, "line " + std::to_string(at.line) + ", column " + std::to_string(at.column) + ": " + what);
}

long parse_int(const Token& tok) {
    long value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) syntax_error(tok, "expected an integer, got '" + std::string(tok.text) + "'");
    return value;
}

std::vector<std::vector<Token>> content_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        auto toks = tokenize_line(line, line_no);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

}  // namespace

RotationTable parse_graph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) fail(ErrorCode::SyntaxError, "line 1, column 1: empty graph file");

    const auto& header = lines.front();
    if (header.size() != 2) syntax_error(header.front(), "header must be 'n m'");
    const long n = parse_int(header[0]);
    const long m = parse_int(header[1]);
    if (n < 1) syntax_error(header[0], "vertex count must be positive");
    if (m < 0) syntax_error(header[1], "edge count must be non-negative");
    if (static_cast<long>(lines.size()) - 1 != n) {
        const Token& at = lines.size() > static_cast<std::size_t>(n) + 1 ? lines[n + 1].front() : lines.back().back();
        syntax_error(at, "expected " + std::to_string(n) + " vertex lines, found " + std::to_string(lines.size() - 1));
    }

    std::vector<std::vector<VertexId>> rot(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& toks = lines[i];
        std::string_view head = toks.front().text;
        if (head.size() < 2 || head.back() != ':') syntax_error(toks.front(), "expected 'v:'");
        Token id_tok = toks.front();
        id_tok.text = head.substr(0, head.size() - 1);
        const long v = parse_int(id_tok);
        if (v < 0 || v >= n) syntax_error(toks.front(), "vertex id out of range");
        if (seen[v]) syntax_error(toks.front(), "vertex " + std::to_string(v) + " listed twice");
        seen[v] = 1;
        for (std::size_t k = 1; k < toks.size(); ++k) {
            const long u = parse_int(toks[k]);
            if (u < 0 || u >= n) syntax_error(toks[k], "neighbour id out of range");
            rot[v].push_back(static_cast<VertexId>(u));
        }
    }

    RotationTable table;
    try {
        table = RotationTable(std::move(rot));
    } catch (const Error& e) {
        fail(ErrorCode::InvariantViolation, e.what());
    }
    if (table.edge_count() != m)
        fail(ErrorCode::InvariantViolation,
             "header declares " + std::to_string(m) + " edges, rotations give " + std::to_string(table.edge_count()));
    return table;
}

std::string serialize_graph(const RotationTable& table) {
    std::ostringstream out;
    out << table.vertex_count() << ' ' << table.edge_count() << '\n';
    for (VertexId v = 0; v < table.vertex_count(); ++v) {
        out << v << ':';
        for (VertexId u : table.rotation(v)) out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

CycleSeq parse_cycle(std::string_view text, const RotationTable& host) {
    std::vector<VertexId> ids;
    for (const auto& line : content_lines(text))
        for (const Token& tok : line) {
            const long v = parse_int(tok);
            if (v < 0 || v >= host.vertex_count())
                fail(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " is not in the graph");
            ids.push_back(static_cast<VertexId>(v));
        }
    return CycleSeq::from(host, std::move(ids));
}

std::string serialize_cycle(const CycleSeq& cycle) {
    std::string out;
    for (VertexId v : cycle.vertices()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    out += '\n';
    return out;
}

}  // namespace longcycle
