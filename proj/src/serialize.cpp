#include "qhopf/serialize.hpp"

namespace qhopf {

Json to_json(const BasisMonomial& mono) {
    return Json{{"mu", mono.mu}, {"m", mono.m}, {"n", mono.n}, {"nu", mono.nu}};
}

Json to_json(const AlgElement& x) {
    Json out = Json::array();
    for (const auto& [mono, c] : x.terms()) {
        Json t = to_json(mono);
        t["coeff"] = c.to_string();
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const LaurentElement& x) {
    Json out = Json::array();
    for (const auto& [k, c] : x.terms()) out.push_back(Json{{"u_power", k}, {"coeff", c.to_string()}});
    return out;
}

Json to_json(const CotensorElement& x) {
    Json out = Json::array();
    for (const auto& [key, c] : x.terms()) {
        Json t = to_json(key.first);
        t["u_power"] = key.second;
        t["coeff"] = c.to_string();
        out.push_back(std::move(t));
    }
    return out;
}

Json to_json(const TensorElement& x) {
    Json out = Json::array();
    for (const auto& [key, c] : x.terms())
        out.push_back(Json{{"left", to_json(key.first)}, {"right", to_json(key.second)}, {"coeff", c.to_string()}});
    return out;
}

Json to_json(const TrivializedElement& x) {
    Json out = Json::array();
    const char* disc = x.tag() == Param::p ? "x" : "y";
    for (const auto& [key, c] : x.terms())
        out.push_back(Json{{"disc", disc},
                           {"mu", key.first.mu},
                           {"m", key.first.m},
                           {"u_power", key.second},
                           {"coeff", c.to_string()}});
    return out;
}

Json to_json(const CoinvariantMatrix& e) {
    Json out = Json::array();
    for (std::size_t i = 0; i < e.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < e.cols(); ++j) row.push_back(to_json(e.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

AlgElement element_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("element_from_json: expected an array of terms");
    AlgElement out;
    try {
        for (const auto& t : j) {
            const BasisMonomial mono{t.at("mu").get<int>(), t.at("m").get<int>(), t.at("n").get<int>(),
                                     t.at("nu").get<int>()};
            out.add_term(mono, ParamScalar::parse(t.at("coeff").get<std::string>()));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("element_from_json: ") + e.what());
    }
    return out;
}

}  // namespace qhopf
