#include "latk/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace latk {

namespace {

using Json = nlohmann::ordered_json;

ZMat gram_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("json: gram must be a nonempty array");
    int n = static_cast<int>(j.size());
    ZMat G(n, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = j[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw std::invalid_argument("json: gram must be square");
        for (int k = 0; k < n; ++k) {
            const Json& e = row[k];
            if (e.is_number_integer())
                G(i, k) = Int(e.get<long>());
            else if (e.is_string())
                G(i, k) = Int(e.get<std::string>());
            else
                throw std::invalid_argument("json: gram entries must be integers");
        }
    }
    if (!G.is_symmetric()) throw std::invalid_argument("json: gram must be symmetric");
    return G;
}

}  // namespace

Lattice lattice_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("json: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("gram"))
        throw std::invalid_argument("json: expected an object with a \"gram\" field");
    std::string label = j.value("label", std::string());
    return Lattice(label, gram_from_json(j["gram"]));
}

std::string lattice_to_json(const Lattice& L, bool with_gram, int indent) {
    Json j;
    j["label"] = L.label;
    j["rank"] = L.rank();
    j["det"] = L.det().get_str();
    if (with_gram) {
        Json rows = Json::array();
        for (int i = 0; i < L.rank(); ++i) {
            Json row = Json::array();
            for (int k = 0; k < L.rank(); ++k) {
                if (!L.gram(i, k).fits_slong_p())
                    throw std::invalid_argument("json: gram entry exceeds 64-bit range");
                row.push_back(static_cast<long long>(L.gram(i, k).get_si()));
            }
            rows.push_back(std::move(row));
        }
        j["gram"] = std::move(rows);
    }
    return j.dump(indent);
}

Lattice lattice_from_arg(const std::string& arg) {
    if (!arg.empty() && arg[0] == '{') return lattice_from_json(arg);
    if (!arg.empty() && arg[0] == '@') return lattice_from_json(read_file(arg.substr(1)));
    return from_dsl(arg);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace latk
