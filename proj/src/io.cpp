#include <acmlines/io.hpp>

#include <fstream>
#include <sstream>

namespace acmlines::io {

namespace {

int as_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, where + ": expected an integer");
    return v.get<int>();
}

std::vector<Cell> parse_pairs(const json& j, const std::string& key) {
    std::vector<Cell> out;
    if (!j.contains(key)) return out;
    const json& arr = j.at(key);
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, key + " must be an array");
    for (const json& p : arr) {
        if (!p.is_array() || p.size() != 2) {
            throw Error(ErrorCode::ParseError, key + ": every entry must be a pair");
        }
        out.push_back(Cell{as_int(p[0], key), as_int(p[1], key)});
    }
    return out;
}

json pairs_to_json(const CellSet& cells) {
    json arr = json::array();
    for (const Cell& c : cells) arr.push_back({c.row, c.col});
    return arr;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

}  // namespace

RawVariety parse_variety(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "variety must be a JSON object");
    if (!j.contains("d") || !j.at("d").is_array() || j.at("d").size() != 3) {
        throw Error(ErrorCode::ParseError, "\"d\" must be an array of three integers");
    }
    RawVariety raw;
    for (int f = 0; f < 3; ++f) raw.d[f] = as_int(j.at("d")[f], "d");
    raw.u3 = parse_pairs(j, "U3");
    raw.u2 = parse_pairs(j, "U2");
    raw.u1 = parse_pairs(j, "U1");
    return raw;
}

RawVariety parse_variety_text(const std::string& text) { return parse_variety(parse_text(text)); }

json to_json(const VarietyOfLines& x) {
    return json{{"d", {x.d()[0], x.d()[1], x.d()[2]}},
                {"U3", pairs_to_json(x.u3())},
                {"U2", pairs_to_json(x.u2())},
                {"U1", pairs_to_json(x.u1())}};
}

std::vector<PointTriple> parse_points(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.at("points").is_array()) {
        throw Error(ErrorCode::ParseError, "expected {\"points\":[[i,j,k],...]}");
    }
    std::vector<PointTriple> out;
    for (const json& p : j.at("points")) {
        if (!p.is_array() || p.size() != 3) {
            throw Error(ErrorCode::ParseError, "every point must be a triple");
        }
        out.push_back({as_int(p[0], "points"), as_int(p[1], "points"), as_int(p[2], "points")});
    }
    return out;
}

std::vector<PointTriple> parse_points_text(const std::string& text) {
    return parse_points(parse_text(text));
}

json points_to_json(const std::vector<PointTriple>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({p.i, p.j, p.k});
    return json{{"points", arr}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace acmlines::io
