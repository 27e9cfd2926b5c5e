#include "tc/json_io.hpp"

#include <stdexcept>

namespace tc {

namespace {

const Json& require(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) throw std::invalid_argument(std::string("missing JSON field \"") + key + "\"");
    return *it;
}

DiagKind kind_from(const Json& j) {
    std::string kind = require(j, "kind").get<std::string>();
    if (kind == "unoriented") return DiagKind::unoriented;
    if (kind == "oriented") return DiagKind::oriented;
    throw std::invalid_argument("unknown diagram kind \"" + kind + "\"");
}

}  // namespace

Json to_json(const DiagObject& x) {
    Json j;
    if (x.oriented()) {
        j["kind"] = "oriented";
        j["signs"] = x.sign_word();
    } else {
        j["kind"] = "unoriented";
        j["size"] = x.size();
    }
    return j;
}

Json to_json(const Diagram& d) {
    Json j;
    j["kind"] = d.source().oriented() ? "oriented" : "unoriented";
    j["bottom"] = d.source().size();
    j["top"] = d.target().size();
    j["pairs"] = Json::array();
    for (const auto& [a, b] : d.pairs()) j["pairs"].push_back(Json::array({a, b}));
    if (d.source().oriented()) {
        j["bottom_signs"] = d.source().sign_word();
        j["top_signs"] = d.target().sign_word();
    }
    return j;
}

Json to_json(const Morphism& m) {
    Json j;
    j["source"] = to_json(m.source());
    j["target"] = to_json(m.target());
    j["terms"] = Json::array();
    for (const auto& [d, c] : m.terms()) {
        Json term;
        term["diagram"] = to_json(d);
        term["coeff"] = c.to_string();
        j["terms"].push_back(std::move(term));
    }
    return j;
}

DiagObject object_from_json(const Json& j) {
    if (kind_from(j) == DiagKind::oriented)
        return DiagObject(DiagObject::parse_sign_word(require(j, "signs").get<std::string>()));
    return DiagObject(require(j, "size").get<int>());
}

Diagram diagram_from_json(const Json& j) {
    DiagKind kind = kind_from(j);
    int bottom = require(j, "bottom").get<int>();
    int top = require(j, "top").get<int>();
    DiagObject src(bottom), tgt(top);
    if (kind == DiagKind::oriented) {
        src = DiagObject(DiagObject::parse_sign_word(require(j, "bottom_signs").get<std::string>()));
        tgt = DiagObject(DiagObject::parse_sign_word(require(j, "top_signs").get<std::string>()));
        if (src.size() != bottom || tgt.size() != top)
            throw std::invalid_argument("sign word length disagrees with boundary size");
    }
    std::vector<std::pair<int, int>> pairs;
    for (const Json& p : require(j, "pairs")) {
        if (!p.is_array() || p.size() != 2) throw std::invalid_argument("malformed pair entry");
        pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    return Diagram(std::move(src), std::move(tgt), std::move(pairs));
}

Morphism morphism_from_json(const Json& j) {
    Morphism m(object_from_json(require(j, "source")), object_from_json(require(j, "target")));
    for (const Json& term : require(j, "terms")) {
        Diagram d = diagram_from_json(require(term, "diagram"));
        RationalFunction c = RationalFunction::parse(require(term, "coeff").get<std::string>());
        m.add_term(d, c);
    }
    return m;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace tc
