#include "orthofix/space_io.hpp"

#include "orthofix/metric.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace orthofix {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what)
{
    throw InputError(field + ": " + what);
}

Rat parse_entry(const json& v, const std::string& field)
{
    if (v.is_number_integer()) {
        return Rat(v.get<std::int64_t>());
    }
    if (v.is_number_float()) {
        fail(field, "decimal values are not accepted, use an integer or \"p/q\"");
    }
    if (!v.is_string()) {
        fail(field, "expected an integer or a \"p/q\" string");
    }
    try {
        return Rat::parse(v.get<std::string>());
    } catch (const InputError& e) {
        fail(field, e.what());
    }
}

Index parse_index(const json& v, std::size_t n, const std::string& field)
{
    if (!v.is_number_integer()) {
        fail(field, "expected a point index");
    }
    const auto i = v.get<std::int64_t>();
    if (i < 0 || static_cast<std::size_t>(i) >= n) {
        fail(field, "index " + std::to_string(i) + " out of range for " + std::to_string(n) + " points");
    }
    return static_cast<Index>(i);
}

} // namespace

SpaceFile parse_space_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) {
        throw InputError("top level must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "points" && key != "metric" && key != "relation" && key != "map") {
            fail(key, "unknown key");
        }
    }
    for (const char* required : {"points", "metric", "relation"}) {
        if (!doc.contains(required)) {
            fail(required, "missing");
        }
    }

    const json& points = doc["points"];
    if (!points.is_array() || points.empty()) {
        fail("points", "expected a non-empty array of labels");
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!points[i].is_string()) {
            fail("points[" + std::to_string(i) + "]", "expected a string label");
        }
        labels.push_back(points[i].get<std::string>());
    }
    const std::size_t n = labels.size();

    const json& metric = doc["metric"];
    if (!metric.is_array() || metric.size() != n) {
        fail("metric", "expected " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string row_field = "metric[" + std::to_string(i) + "]";
        if (!metric[i].is_array() || metric[i].size() != n) {
            fail(row_field, "ragged matrix, expected " + std::to_string(n) + " entries");
        }
        std::vector<Rat> row;
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(parse_entry(metric[i][j], row_field + "[" + std::to_string(j) + "]"));
        }
        rows.push_back(std::move(row));
    }

    const json& relation = doc["relation"];
    if (!relation.is_array()) {
        fail("relation", "expected an array of [i, j] pairs");
    }
    std::vector<IndexPair> pairs;
    for (std::size_t p = 0; p < relation.size(); ++p) {
        const std::string field = "relation[" + std::to_string(p) + "]";
        if (!relation[p].is_array() || relation[p].size() != 2) {
            fail(field, "expected an [i, j] pair");
        }
        pairs.emplace_back(parse_index(relation[p][0], n, field + "[0]"), parse_index(relation[p][1], n, field + "[1]"));
    }

    std::optional<SelfMap> map;
    if (doc.contains("map")) {
        const json& images = doc["map"];
        if (!images.is_array() || images.size() != n) {
            fail("map", "expected " + std::to_string(n) + " images");
        }
        std::vector<Index> table;
        for (std::size_t i = 0; i < n; ++i) {
            table.push_back(parse_index(images[i], n, "map[" + std::to_string(i) + "]"));
        }
        map = SelfMap(std::move(table), n);
    }

    FiniteSpace space(std::move(labels), SquareMatrix<Rat>::from_rows(rows), Relation(n, std::move(pairs)));
    const auto report = validate_metric(space);
    if (!report.ok) {
        const auto& v = report.violations.front();
        std::string witness;
        for (std::size_t i = 0; i < v.witness.size(); ++i) {
            witness += (i == 0 ? "" : ",") + space.label(v.witness[i]);
        }
        fail("metric", "not a metric: " + v.axiom + " violated at (" + witness + ")");
    }
    return {std::move(space), std::move(map)};
}

SpaceFile parse_space_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError(path.string() + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_space_json(buffer.str());
    } catch (const InputError& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string space_to_json(const FiniteSpace& space, const std::optional<SelfMap>& map)
{
    using ordered = nlohmann::ordered_json;
    ordered doc = ordered::object();
    doc["points"] = space.labels();
    ordered metric = ordered::array();
    for (Index i = 0; i < space.size(); ++i) {
        ordered row = ordered::array();
        for (Index j = 0; j < space.size(); ++j) {
            const Rat& v = space.distance(i, j);
            row.push_back(v.to_string());
        }
        metric.push_back(std::move(row));
    }
    doc["metric"] = std::move(metric);
    ordered relation = ordered::array();
    for (const auto& [i, j] : space.relation().pairs()) {
        relation.push_back({i, j});
    }
    doc["relation"] = std::move(relation);
    if (map) {
        doc["map"] = map->images();
    }
    return doc.dump(2) + "\n";
}

} // namespace orthofix
