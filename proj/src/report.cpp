#include "longcycle/report.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"
#include "longcycle/error.hpp"

namespace longcycle {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Certificate& c) {
    return json{{"n", c.n},
                {"c", c.c},
                {"mu", c.mu},
                {"bound", c.bound},
                {"sum_w0", c.sum_w0},
                {"sum_w1", c.sum_w1},
                {"ineq_i", c.ineq_i},
                {"ineq_ii", c.ineq_ii},
                {"iii_violations", c.iii_violations},
                {"fixpoint", c.fixpoint},
                {"certified", c.certified()}};
}

// Field order of the key-value rendering.
constexpr const char* kKeys[] = {"n",      "c",       "mu",           "bound",    "sum_w0",   "sum_w1",
                                 "ineq_i", "ineq_ii", "iii_violations", "fixpoint", "certified"};

Certificate from_json(const json& j) {
    const json& src = j.contains("certificate") ? j.at("certificate") : j;
    try {
        Certificate c;
        c.n = src.at("n").get<int>();
        c.c = src.at("c").get<int>();
        c.mu = src.at("mu").get<int>();
        c.bound = src.at("bound").get<int>();
        c.sum_w0 = src.at("sum_w0").get<long>();
        c.sum_w1 = src.at("sum_w1").get<long>();
        c.ineq_i = src.at("ineq_i").get<bool>();
        c.ineq_ii = src.at("ineq_ii").get<bool>();
        c.iii_violations = src.at("iii_violations").get<int>();
        c.fixpoint = src.at("fixpoint").get<bool>();
        return c;
    } catch (const json::exception& e) {
        fail(ErrorCode::SyntaxError, std::string("certificate: ") + e.what());
    }
}

}  // namespace

std::string format_certificate(const Certificate& cert, OutputFormat format) {
    const json j = to_json(cert);
    if (format == OutputFormat::Json) return j.dump(2) + "\n";
    std::ostringstream out;
    for (const char* key : kKeys) {
        const json& v = j.at(key);
        out << key << '=' << (v.is_boolean() ? (v.get<bool>() ? "true" : "false") : v.dump()) << '\n';
    }
    return out.str();
}

Certificate parse_certificate(std::string_view text, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json j = json::parse(text.begin(), text.end(), nullptr, false);
        if (j.is_discarded() || !j.is_object()) fail(ErrorCode::SyntaxError, "certificate: not a JSON object");
        return from_json(j);
    }
    json j = json::object();
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (value == "true" || value == "false") {
            j[key] = value == "true";
            continue;
        }
        long number = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
        if (ec == std::errc() && ptr == value.data() + value.size()) j[key] = number;
    }
    return from_json(j);
}

std::string format_step(const EngineStep& step) {
    std::string out = step.kind == StepKind::Extend ? "extend" : "replace " + std::string(to_string(*step.pattern));
    return out + " " + std::to_string(step.length_before) + " " + std::to_string(step.length_after);
}

}  // namespace longcycle
