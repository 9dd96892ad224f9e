#include "dpe/io.hpp"

#include <fstream>
#include <sstream>

#include "dpe/errors.hpp"

namespace dpe {

nlohmann::json matrix_to_json(const QMatrix& a) {
    return {{"q", a.q()}, {"rows", a.rows()}, {"cols", a.cols()}, {"data", a.data()}};
}

QMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParameterError("matrix file must hold a JSON object");
    const auto rows = j.at("rows").get<size_t>();
    const auto cols = j.at("cols").get<size_t>();
    auto data = j.at("data").get<std::vector<Int>>();
    if (data.size() != rows * cols)
        throw ParameterError("matrix data has " + std::to_string(data.size()) + " entries, expected rows*cols=" +
                             std::to_string(rows * cols));
    return QMatrix(j.at("q").get<Int>(), rows, cols, std::move(data));
}

nlohmann::json vector_to_json(const ReadVector& y, std::optional<Int> Q) {
    nlohmann::json data = nlohmann::json::array();
    for (size_t j = 0; j < y.size(); ++j)
        data.push_back(y.erased[j] ? nlohmann::json(nullptr) : nlohmann::json(y.values[j]));
    nlohmann::json out = {{"length", y.size()}, {"data", data}};
    if (Q) out["Q"] = *Q;
    return out;
}

ReadVector vector_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParameterError("vector file must hold a JSON object");
    const auto& data = j.at("data");
    if (!data.is_array()) throw ParameterError("vector 'data' must be an array");
    std::vector<Int> values;
    std::vector<bool> erased;
    for (const auto& item : data) {
        erased.push_back(item.is_null());
        values.push_back(item.is_null() ? 0 : item.get<Int>());
    }
    if (j.contains("length") && j.at("length").get<size_t>() != values.size())
        throw ParameterError("vector 'length' does not match its data");
    return ReadVector(std::move(values), std::move(erased));
}

nlohmann::json outcome_to_json(const DecodeOutcome& outcome) {
    if (!outcome.ok()) return {{"status", "e"}};
    return {{"status", "ok"}, {"prefix", outcome.prefix()}};
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw ParameterError("'" + path + "' is not valid JSON: " + err.what());
    }
}

std::string render_json(const nlohmann::json& j) { return j.dump() + "\n"; }

void write_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot write '" + path + "'");
    out << render_json(j);
}

}  // namespace dpe
