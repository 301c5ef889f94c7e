#include "longcycle/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "longcycle/engine.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/oracle.hpp"
#include "longcycle/report.hpp"

namespace longcycle::cli {

namespace {

using Doc = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw IoError("cannot write '" + path + "'");
}

std::string scalar(const Doc& v) {
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string joined(const Doc& arr) {
    std::string out;
    for (const Doc& item : arr) {
        const std::string s = item.is_object() || item.is_array() ? joined(item) : scalar(item);
        if (s.empty()) continue;
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

// Objects are flattened; arrays of objects become one line per element.
void render_kv(const Doc& doc, std::ostream& out) {
    for (const auto& [key, value] : doc.items()) {
        if (value.is_object()) {
            render_kv(value, out);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            for (const Doc& item : value) out << key << '=' << joined(item) << '\n';
        } else if (value.is_array()) {
            out << key << '=' << joined(value) << '\n';
        } else {
            out << key << '=' << scalar(value) << '\n';
        }
    }
}

void emit(const Doc& doc, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json)
        out << doc.dump(2) << '\n';
    else
        render_kv(doc, out);
}

Doc certificate_doc(const Certificate& cert) {
    return Doc::parse(format_certificate(cert, OutputFormat::Json));
}

PlanarEmbedding load_graph(const std::string& path) { return PlanarEmbedding::build(parse_graph(read_file(path))); }

struct Options {
    std::string format = "kv";
    std::string graph;
    std::string cycle;
    std::string initial;
    bool trace = false;
    bool timing = false;
    int max_n_longest = OracleConfig{}.max_n_longest;
    int max_n_oi3 = OracleConfig{}.max_n_oi3;
    long time_budget_ms = 0;
    int k = 0;
    std::string name;
    std::string out_prefix;
};

OracleConfig oracle_config(const Options& o) {
    OracleConfig cfg;
    cfg.max_n_longest = o.max_n_longest;
    cfg.max_n_oi3 = o.max_n_oi3;
    if (o.time_budget_ms > 0) cfg.time_budget = std::chrono::milliseconds(o.time_budget_ms);
    return cfg;
}

int cmd_validate(const Options& o, OutputFormat fmt, std::ostream& out) {
    const PlanarEmbedding emb = load_graph(o.graph);
    const ConnectivityVerdict v = check_essentially_4_connected(emb);
    Doc doc;
    doc["n"] = emb.vertex_count();
    doc["m"] = emb.edge_count();
    doc["faces"] = emb.faces().size();
    doc["connectivity"] = v.connectivity;
    doc["three_connected"] = v.is_3_connected;
    doc["essentially_4_connected"] = v.is_essentially_4_connected;
    if (v.witness) doc["witness"] = *v.witness;
    emit(doc, fmt, out);
    return v.is_essentially_4_connected ? kSuccess : kPropertyFails;
}

int cmd_find_cycle(const Options& o, OutputFormat fmt, std::ostream& out) {
    const PlanarEmbedding emb = load_graph(o.graph);
    std::optional<CycleSeq> initial;
    if (!o.initial.empty()) initial = parse_cycle(read_file(o.initial), emb.table());
    SolveOptions options;
    options.oracle = oracle_config(o);
    const Solution sol = solve(emb, initial, options);

    Doc doc;
    doc["length"] = sol.cycle.length();
    doc["cycle"] = sol.cycle.vertices();
    doc["certificate"] = certificate_doc(sol.certificate);
    if (o.trace) {
        Doc steps = Doc::array();
        for (const EngineStep& s : sol.trace.steps) {
            Doc step;
            step["kind"] = s.kind == StepKind::Extend ? "extend" : "replace";
            if (s.pattern) step["pattern"] = std::string(to_string(*s.pattern));
            step["length_before"] = s.length_before;
            step["length_after"] = s.length_after;
            if (o.timing) step["micros"] = s.micros;
            steps.push_back(step);
        }
        doc["trace"] = steps;
        doc["iterations"] = sol.trace.iterations;
    }
    if (o.timing) doc["total_micros"] = sol.trace.total_micros;
    emit(doc, fmt, out);
    return sol.certificate.certified() && sol.certificate.bound_holds() ? kSuccess : kPropertyFails;
}

int cmd_certify(const Options& o, OutputFormat fmt, std::ostream& out) {
    const PlanarEmbedding emb = load_graph(o.graph);
    const CycleSeq cycle = parse_cycle(read_file(o.cycle), emb.table());
    const Certificate cert = certify(emb, cycle);
    out << format_certificate(cert, fmt);
    return cert.certified() ? kSuccess : kPropertyFails;
}

int cmd_oracle_circ(const Options& o, OutputFormat fmt, std::ostream& out) {
    const PlanarEmbedding emb = load_graph(o.graph);
    const LongestCycle lc = longest_cycle_exact(emb, oracle_config(o));
    Doc doc;
    doc["n"] = emb.vertex_count();
    doc["circumference"] = lc.length;
    if (lc.witness) doc["cycle"] = lc.witness->vertices();
    emit(doc, fmt, out);
    return kSuccess;
}

int cmd_oracle_oi3(const Options& o, OutputFormat fmt, std::ostream& out) {
    const PlanarEmbedding emb = load_graph(o.graph);
    const auto found = search_oi3_cycle(emb, oracle_config(o));
    Doc doc;
    doc["n"] = emb.vertex_count();
    doc["found"] = found.has_value();
    if (found) {
        doc["length"] = found->length();
        doc["cycle"] = found->vertices();
    }
    emit(doc, fmt, out);
    return found ? kSuccess : kPropertyFails;
}

int cmd_gen_antiprism(const Options& o, OutputFormat fmt, std::ostream& out) {
    const GeneratedInstance inst = gen_inserted_antiprism(o.k);
    const std::string prefix = o.out_prefix.empty() ? "antiprism-" + std::to_string(o.k) : o.out_prefix;
    write_file(prefix + ".graph", serialize_graph(inst.graph.table()));
    write_file(prefix + ".cycle", serialize_cycle(inst.initial_cycle));
    Doc doc;
    doc["n"] = inst.graph.vertex_count();
    doc["bound"] = length_bound(inst.graph.vertex_count());
    doc["graph"] = prefix + ".graph";
    doc["cycle"] = prefix + ".cycle";
    emit(doc, fmt, out);
    return kSuccess;
}

int cmd_gen_named(const Options& o, OutputFormat fmt, std::ostream& out) {
    const NamedGraph g = named_graph(o.name);
    const std::string prefix = o.out_prefix.empty() ? o.name : o.out_prefix;
    write_file(prefix + ".graph", serialize_graph(g.embedding.table()));
    Doc doc;
    doc["n"] = g.embedding.vertex_count();
    doc["graph"] = prefix + ".graph";
    emit(doc, fmt, out);
    return kSuccess;
}

}  // namespace

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidRotation:
        case ErrorCode::AsymmetricRotation:
        case ErrorCode::Disconnected:
        case ErrorCode::NotPlanarEmbedding:
        case ErrorCode::NotACycle:
        case ErrorCode::UnknownVertex:
        case ErrorCode::PreconditionViolated:
        case ErrorCode::NotACEdgeOfFace:
        case ErrorCode::CycleTooShort:
        case ErrorCode::StaleInstance:
        case ErrorCode::TooLarge:
        case ErrorCode::UnknownName:
        case ErrorCode::SyntaxError:
        case ErrorCode::InvariantViolation:
            return kUsageError;
        case ErrorCode::InitialCycleInvalid:
        case ErrorCode::CycleTooShortAtFixpoint:
        case ErrorCode::NoInitialCycleFound:
        case ErrorCode::NotEssentially4Connected:
        case ErrorCode::BudgetExceeded:
            return kPropertyFails;
        case ErrorCode::GenerationInvalid:
        case ErrorCode::InternalError:
            return kInternalError;
    }
    return kInternalError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Long cycles in essentially 4-connected planar graphs", "longcycle"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&, OutputFormat, std::ostream&)> action;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"kv", "json"}));
    };
    auto add_thresholds = [&](CLI::App* sub) {
        sub->add_option("--max-n-longest", o.max_n_longest, "Vertex limit of the exact circumference search");
        sub->add_option("--max-n-oi3", o.max_n_oi3, "Vertex limit of the exhaustive OI3-cycle search");
        sub->add_option("--time-budget-ms", o.time_budget_ms, "Time budget of the OI3-cycle search");
    };

    auto* validate = app.add_subcommand("validate", "Check 3-connectivity and essential 4-connectivity");
    validate->add_option("FILE", o.graph, "Graph file")->required();
    add_format(validate);
    validate->callback([&] { action = cmd_validate; });

    auto* find = app.add_subcommand("find-cycle", "Compute a long cycle and its certificate");
    find->add_option("FILE", o.graph, "Graph file")->required();
    find->add_option("--initial", o.initial, "Initial OI3-cycle file");
    find->add_flag("--trace", o.trace, "Print one line per engine step");
    find->add_flag("--timing", o.timing, "Include wall-clock timings");
    add_thresholds(find);
    add_format(find);
    find->callback([&] { action = cmd_find_cycle; });

    auto* cert = app.add_subcommand("certify", "Print the certificate of a given OI3-cycle");
    cert->add_option("FILE", o.graph, "Graph file")->required();
    cert->add_option("CYCLEFILE", o.cycle, "Cycle file")->required();
    add_format(cert);
    cert->callback([&] { action = cmd_certify; });

    auto* oracle = app.add_subcommand("oracle", "Exhaustive searches for small graphs");
    oracle->require_subcommand(1);
    auto* circ = oracle->add_subcommand("circ", "Exact circumference");
    circ->add_option("FILE", o.graph, "Graph file")->required();
    add_thresholds(circ);
    add_format(circ);
    circ->callback([&] { action = cmd_oracle_circ; });
    auto* oi3 = oracle->add_subcommand("oi3", "Search an OI3-cycle");
    oi3->add_option("FILE", o.graph, "Graph file")->required();
    add_thresholds(oi3);
    add_format(oi3);
    oi3->callback([&] { action = cmd_oracle_oi3; });

    auto* gen = app.add_subcommand("gen", "Write instance files");
    gen->require_subcommand(1);
    auto* anti = gen->add_subcommand("antiprism", "Antiprism triangulation with a vertex in every face");
    anti->add_option("K", o.k, "Rim size, at least 3")->required()->check(CLI::Range(3, 100000));
    anti->add_option("--out", o.out_prefix, "Output prefix");
    add_format(anti);
    anti->callback([&] { action = cmd_gen_antiprism; });
    auto* named = gen->add_subcommand("named", "Named small graph");
    named->add_option("NAME", o.name, "Graph name")->required();
    named->add_option("--out", o.out_prefix, "Output prefix");
    add_format(named);
    named->callback([&] { action = cmd_gen_named; });

    std::vector<const char*> argv{"longcycle"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        const OutputFormat fmt = o.format == "json" ? OutputFormat::Json : OutputFormat::KeyValue;
        return action(o, fmt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace longcycle::cli
