#include "polyrec/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace polyrec {

namespace {

Rat coord_from_json(const Json& c) {
    if (c.is_number_integer()) return Rat(static_cast<long>(c.get<long long>()));
    if (c.is_string()) return parse_rat(c.get<std::string>());
    throw std::invalid_argument(
        "coordinate must be an integer or a \"p/q\" string (floats are rejected)");
}

std::vector<long long> int_list(const Json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<long long> out;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument(std::string(what) + " entries must be integers");
        out.push_back(v.get<long long>());
    }
    return out;
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

Polytope polytope_from_json(const Json& j) {
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument("polytope JSON needs an integer \"dim\"");
    int n = j["dim"].get<int>();
    if (n < 0) throw std::invalid_argument("polytope dimension must be nonnegative");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw std::invalid_argument("polytope JSON needs a nonempty \"vertices\" array");
    std::vector<RatVec> pts;
    for (const auto& vj : j["vertices"]) {
        if (!vj.is_array() || static_cast<int>(vj.size()) != n)
            throw std::invalid_argument("each vertex must be an array of length dim");
        RatVec p;
        for (const auto& c : vj) p.push_back(coord_from_json(c));
        pts.push_back(std::move(p));
    }
    return Polytope::from_points(n, std::move(pts));
}

Polytope load_polytope(const std::string& path) { return polytope_from_json(read_file(path)); }

ShapeInput shape_from_json(const Json& j) {
    if (!j.contains("lambda") || !j.contains("n"))
        throw std::invalid_argument("shape JSON needs \"lambda\" and \"n\"");
    if (!j["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
    int n = j["n"].get<int>();
    Partition lambda{int_list(j["lambda"], "lambda")};
    Partition mu;
    if (j.contains("mu")) mu = Partition{int_list(j["mu"], "mu")};
    ShapeInput in{SkewShape(lambda, mu, n), std::nullopt, std::nullopt};
    if (j.contains("kappa")) in.kappa = Partition{int_list(j["kappa"], "kappa")};
    if (j.contains("nu")) in.nu = Partition{int_list(j["nu"], "nu")};
    return in;
}

ShapeInput load_shape(const std::string& path) { return shape_from_json(read_file(path)); }

Json ratvec_to_json(const RatVec& v) {
    Json arr = Json::array();
    for (const auto& c : v) {
        if (rat_is_integer(c))
            arr.push_back(to_ll(c.get_num()));
        else
            arr.push_back(rat_str(c));
    }
    return arr;
}

Json expo_to_json(const Expo& e) {
    Json arr = Json::array();
    for (auto v : e) arr.push_back(v);
    return arr;
}

std::string expo_key(const Expo& e) {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e[i]);
    }
    return s;
}

}  // namespace polyrec
