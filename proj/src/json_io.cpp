#include "minkpair/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace minkpair {

namespace {

using nlohmann::json;

struct Cell {
    double d = 0.0;
    std::optional<Rational> r;
};

Cell parse_cell(const json& j, const char* where) {
    if (j.is_string()) {
        const Rational r = Rational::parse(j.get<std::string>());
        return {r.to_double(), r};
    }
    // is_number_unsigned must be tested first: unsigned values also satisfy
    // is_number_integer, and above LLONG_MAX they would wrap in get<long long>.
    if (j.is_number_unsigned()) {
        const unsigned long long v = j.get<unsigned long long>();
        if (v > static_cast<unsigned long long>(
                    std::numeric_limits<long>::max()))
            throw ParseError(std::string(where) + ": integer entry too large");
        return {static_cast<double>(v), Rational(static_cast<long>(v))};
    }
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        return {static_cast<double>(v), Rational(static_cast<long>(v))};
    }
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (!std::isfinite(v))
            throw ParseError(std::string(where) + ": entry must be finite");
        return {v, std::nullopt};
    }
    throw ParseError(std::string(where) +
                     ": matrix entries must be numbers or \"p/q\" strings");
}

void require_2x2(const json& j, const char* where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() ||
        !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2)
        throw ParseError(std::string(where) + ": expected a 2x2 matrix");
}

struct ParsedMatrix {
    Cell c00, c01, c10, c11;
};

ParsedMatrix parse_matrix(const json& j, const char* where) {
    require_2x2(j, where);
    return {parse_cell(j[0][0], where), parse_cell(j[0][1], where),
            parse_cell(j[1][0], where), parse_cell(j[1][1], where)};
}

// "Symmetric as parsed": the two off-diagonal tokens must denote the same
// value — exactly, when both carry an exact view.
void require_symmetric(const ParsedMatrix& m, const char* where) {
    bool ok = m.c01.d == m.c10.d;
    if (ok && m.c01.r.has_value() != m.c10.r.has_value()) ok = false;
    if (ok && m.c01.r && m.c10.r) ok = *m.c01.r == *m.c10.r;
    if (!ok)
        throw ParseError(std::string(where) + ": matrix must be symmetric");
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    return j;
}

std::optional<double> optional_number(const json& j, const char* key) {
    if (!j.contains(key)) return std::nullopt;
    return parse_cell(j.at(key), key).d;
}

}  // namespace

std::string backend_label(Backend backend) {
    return backend == Backend::Exact ? "exact" : "approx";
}

Backend parse_backend(const std::string& name) {
    if (name == "exact") return Backend::Exact;
    if (name == "approx") return Backend::Approx;
    throw ParseError("unknown backend '" + name + "' (use approx or exact)");
}

PairDocument parse_pair_document(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("g") || !j.contains("gcheck"))
        throw ParseError("document must be an object with \"g\" and \"gcheck\"");

    const ParsedMatrix g = parse_matrix(j.at("g"), "g");
    const ParsedMatrix gc = parse_matrix(j.at("gcheck"), "gcheck");
    require_symmetric(g, "g");
    require_symmetric(gc, "gcheck");

    PairDocument doc;
    doc.approx.g = {g.c00.d, g.c01.d, g.c11.d};
    doc.approx.gcheck = {gc.c00.d, gc.c01.d, gc.c11.d};
    if (g.c00.r && g.c01.r && g.c11.r && gc.c00.r && gc.c01.r && gc.c11.r) {
        MetricPair<Rational> exact;
        exact.g = {*g.c00.r, *g.c01.r, *g.c11.r};
        exact.gcheck = {*gc.c00.r, *gc.c01.r, *gc.c11.r};
        doc.exact = exact;
    }
    return doc;
}

PairDocument load_pair_document(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pair_document(buf.str());
}

Transition<double> parse_transition_document(const std::string& text) {
    const json j = parse_json(text);
    const json* m = &j;
    if (j.is_object()) {
        if (j.contains("S_total"))
            m = &j.at("S_total");
        else if (j.contains("transition"))
            m = &j.at("transition");
        else
            throw ParseError(
                "transition document must be a 2x2 matrix or an object with "
                "\"transition\" or \"S_total\"");
    }
    require_2x2(*m, "transition");
    const ParsedMatrix t = parse_matrix(*m, "transition");
    return {t.c00.d, t.c01.d, t.c10.d, t.c11.d};
}

ReportData parse_report(const std::string& text) {
    const json j = parse_json(text);
    if (!j.is_object() || !j.contains("class"))
        throw ParseError("report must be an object with a \"class\" field");

    ReportData data;
    data.cls = j.at("class").get<std::string>();
    if (j.contains("indeterminate"))
        data.indeterminate = j.at("indeterminate").get<bool>();
    data.a = optional_number(j, "a");
    data.b = optional_number(j, "b");
    if (j.contains("S_total")) {
        const ParsedMatrix t = parse_matrix(j.at("S_total"), "S_total");
        data.s_total = Transition<double>{t.c00.d, t.c01.d, t.c10.d, t.c11.d};
    }
    if (j.contains("residuals")) {
        const json& r = j.at("residuals");
        data.residual_g = optional_number(r, "g");
        data.residual_gcheck = optional_number(r, "gcheck");
    }
    return data;
}

std::string json_double(double x) {
    if (!std::isfinite(x))
        throw DomainError("cannot serialize a non-finite number");
    if (x == 0.0) return "0";  // normalizes -0
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

namespace {

template <typename S, typename F>
std::string pair_json_impl(const MetricPair<S>& pair, F&& cell) {
    std::string out = "{\"g\": [[";
    out += cell(pair.g.m00);
    out += ", ";
    out += cell(pair.g.m01);
    out += "], [";
    out += cell(pair.g.m01);
    out += ", ";
    out += cell(pair.g.m11);
    out += "]], \"gcheck\": [[";
    out += cell(pair.gcheck.m00);
    out += ", ";
    out += cell(pair.gcheck.m01);
    out += "], [";
    out += cell(pair.gcheck.m01);
    out += ", ";
    out += cell(pair.gcheck.m11);
    out += "]]}";
    return out;
}

}  // namespace

std::string pair_json(const MetricPair<double>& pair) {
    return pair_json_impl(pair, [](double x) { return json_double(x); });
}

std::string pair_json(const MetricPair<Rational>& pair) {
    return pair_json_impl(pair, [](const Rational& x) {
        return "\"" + json_escape(x.str()) + "\"";
    });
}

}  // namespace minkpair
