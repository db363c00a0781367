#include "conifold/serialize.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace conifold {
namespace {

// Wraps json access so schema problems surface as DataError, not as the
// library's own exception type.
template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw DataError(std::string("missing field: ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw DataError(std::string("bad value for field: ") + key);
    }
}

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw DataError(std::string("missing field: ") + key);
    return j.at(key);
}

void check_schema_version(const Json& j) {
    if (field<std::string>(j, "schema_version") != kSchemaVersion)
        throw DataError("unsupported schema_version");
}

Json provenance_to_json(const Provenance& p) {
    Json params = Json::array();
    for (const auto& [key, value] : p.parameters)
        params.push_back(Json::array({key, value}));
    return Json{{"generator", p.generator},
                {"parameters", params},
                {"input_digest", p.input_digest}};
}

Provenance provenance_from_json(const Json& j) {
    Provenance p;
    p.generator = field<std::string>(j, "generator");
    for (const Json& entry : member(j, "parameters")) {
        if (!entry.is_array() || entry.size() != 2)
            throw DataError("provenance parameters must be [key, value] pairs");
        p.parameters.emplace_back(entry[0].get<std::string>(), entry[1].get<std::string>());
    }
    p.input_digest = field<std::string>(j, "input_digest");
    return p;
}

Json fiber_class_to_json(const FiberClass& c) {
    return Json::array({integer_to_string(c[0]), integer_to_string(c[1])});
}

FiberClass fiber_class_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw DataError("fibre class must have two entries");
    return {integer_from_string(j[0].get<std::string>()),
            integer_from_string(j[1].get<std::string>())};
}

}  // namespace

std::string integer_to_string(const Integer& x) { return x.str(); }

Integer integer_from_string(const std::string& s) {
    std::size_t start = 0;
    if (!s.empty() && s[0] == '-') start = 1;
    if (start == s.size()) throw DataError("not a decimal integer: '" + s + "'");
    for (std::size_t t = start; t < s.size(); ++t)
        if (s[t] < '0' || s[t] > '9')
            throw DataError("not a decimal integer: '" + s + "'");
    return Integer(s);
}

Json matrix_to_json(const IntegerMatrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(integer_to_string(m.at(r, c)));
        entries.push_back(std::move(row));
    }
    return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

IntegerMatrix matrix_from_json(const Json& j) {
    const auto rows = field<std::size_t>(j, "rows");
    const auto cols = field<std::size_t>(j, "cols");
    const Json& entries = member(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw DataError("matrix entries do not match the declared row count");
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = entries[r];
        if (!row.is_array() || row.size() != cols)
            throw DataError("matrix entries do not match the declared column count");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string())
                throw DataError("matrix entries must be decimal strings");
            m.at(r, c) = integer_from_string(row[c].get<std::string>());
        }
    }
    return m;
}

Json config_to_json(const CycleConfiguration& config) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["labels"] = config.labels;
    j["classes"] = matrix_to_json(config.classes);
    if (config.pairing) j["pairing"] = matrix_to_json(*config.pairing);
    j["disjoint"] = config.disjoint;
    j["provenance"] = provenance_to_json(config.provenance);
    return j;
}

CycleConfiguration config_from_json(const Json& j) {
    check_schema_version(j);
    CycleConfiguration config;
    config.labels = field<std::vector<std::string>>(j, "labels");
    config.classes = matrix_from_json(member(j, "classes"));
    if (j.contains("pairing")) config.pairing = matrix_from_json(j.at("pairing"));
    config.disjoint = field<std::vector<std::vector<int>>>(j, "disjoint");
    config.provenance = provenance_from_json(member(j, "provenance"));
    validate(config);
    return config;
}

Json topology_to_json(const SixManifoldTopology& t) {
    return Json{{"schema_version", kSchemaVersion},
                {"b2", t.b2},
                {"b3", t.b3},
                {"b4", t.b4},
                {"euler", t.euler},
                {"simply_connected", t.simply_connected},
                {"c1_zero", t.c1_zero},
                {"has_null_homologous_surgered_sphere", t.has_null_homologous_surgered_sphere}};
}

SixManifoldTopology topology_from_json(const Json& j) {
    check_schema_version(j);
    SixManifoldTopology t;
    t.b2 = field<long long>(j, "b2");
    t.b3 = field<long long>(j, "b3");
    t.b4 = field<long long>(j, "b4");
    t.euler = field<long long>(j, "euler");
    t.simply_connected = field<bool>(j, "simply_connected");
    t.c1_zero = field<bool>(j, "c1_zero");
    t.has_null_homologous_surgered_sphere =
        field<bool>(j, "has_null_homologous_surgered_sphere");
    return t;
}

Json search_report_to_json(const SearchReport& report) {
    Json results = Json::array();
    for (const SearchResult& r : report.results) {
        Json relation = Json::array();
        for (const Integer& x : r.relation) relation.push_back(integer_to_string(x));
        results.push_back(Json{{"size", r.size},
                               {"found", r.found},
                               {"subset", r.subset},
                               {"span", r.span},
                               {"relation", relation}});
    }
    return Json{{"schema_version", kSchemaVersion},
                {"seed", report.seed},
                {"size_min", report.size_min},
                {"size_max", report.size_max},
                {"moves_used", report.moves_used},
                {"results", results},
                {"notes", report.notes}};
}

SearchReport search_report_from_json(const Json& j) {
    check_schema_version(j);
    SearchReport report;
    report.seed = field<std::uint64_t>(j, "seed");
    report.size_min = field<int>(j, "size_min");
    report.size_max = field<int>(j, "size_max");
    report.moves_used = field<long long>(j, "moves_used");
    report.notes = field<std::vector<std::string>>(j, "notes");
    for (const Json& entry : member(j, "results")) {
        SearchResult r;
        r.size = field<int>(entry, "size");
        r.found = field<bool>(entry, "found");
        r.subset = field<std::vector<int>>(entry, "subset");
        r.span = field<int>(entry, "span");
        for (const Json& x : member(entry, "relation"))
            r.relation.push_back(integer_from_string(x.get<std::string>()));
        report.results.push_back(std::move(r));
    }
    return report;
}

Json residual_report_to_json(const ResidualReport& report) {
    Json checks = Json::array();
    for (const CheckResult& check : report.checks)
        checks.push_back(Json{{"name", check.name},
                              {"max_residual", check.max_residual},
                              {"tolerance", check.tolerance},
                              {"pass", check.pass}});
    return Json{{"schema_version", kSchemaVersion},
                {"seed", report.seed},
                {"samples", report.samples},
                {"checks", checks},
                {"pass", report.pass}};
}

Json fibration_to_json(const EllipticFibration& f) {
    Json values = Json::array();
    for (const CriticalValue& v : f.critical_values)
        values.push_back(Json{{"position", Json{{"p", integer_to_string(v.position.p)},
                                                {"q", integer_to_string(v.position.q)}}},
                              {"vanishing_class", fiber_class_to_json(v.vanishing_class)},
                              {"homotopically_trivial", v.homotopically_trivial}});
    return Json{{"schema_version", kSchemaVersion}, {"critical_values", values}};
}

EllipticFibration fibration_from_json(const Json& j) {
    check_schema_version(j);
    EllipticFibration f;
    for (const Json& entry : member(j, "critical_values")) {
        CriticalValue v;
        const Json& pos = member(entry, "position");
        v.position = normalized(integer_from_string(field<std::string>(pos, "p")),
                                integer_from_string(field<std::string>(pos, "q")));
        v.vanishing_class = fiber_class_from_json(member(entry, "vanishing_class"));
        v.homotopically_trivial = field<bool>(entry, "homotopically_trivial");
        f.critical_values.push_back(std::move(v));
    }
    validate(f);
    return f;
}

Json arc_to_json(const BaseArc& arc) {
    Json crossings = Json::array();
    for (const ArcCrossing& c : arc.crossings)
        crossings.push_back(Json{{"other_arc", c.other_arc}, {"sign", c.sign}});
    Json path = Json::array();
    for (const MonodromyStep& s : arc.monodromy_path)
        path.push_back(Json{{"fibration", s.fibration}, {"index", s.index}});
    return Json{{"schema_version", kSchemaVersion},
                {"id", arc.id},
                {"a_index", arc.a_index},
                {"b_index", arc.b_index},
                {"crossings", crossings},
                {"monodromy_path", path}};
}

BaseArc arc_from_json(const Json& j) {
    check_schema_version(j);
    BaseArc arc;
    arc.id = field<int>(j, "id");
    arc.a_index = field<int>(j, "a_index");
    arc.b_index = field<int>(j, "b_index");
    for (const Json& entry : member(j, "crossings"))
        arc.crossings.push_back({field<int>(entry, "other_arc"), field<int>(entry, "sign")});
    for (const Json& entry : member(j, "monodromy_path"))
        arc.monodromy_path.push_back(
            {field<int>(entry, "fibration"), field<int>(entry, "index")});
    return arc;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DataError(origin + ": " + e.what());
    }
}

Json load_json_file(const std::string& path) {
    return parse_json(read_text_file(path), path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << text;
    if (!out.flush()) throw DataError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string fnv1a64_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + hex;
}

}  // namespace conifold
