#include "hurwitz/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace hurwitz {

using nlohmann::json;

std::string to_json(const WPolynomial& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::array();
        for (const auto& [e, k] : m.factors()) mono.push_back({e.i, e.j, k});
        terms.push_back({{"monomial", std::move(mono)}, {"coeff", to_string(c)}});
    }
    return json{{"n", p.n()}, {"terms", std::move(terms)}}.dump();
}

WPolynomial wpolynomial_from_json(std::string_view text) {
    try {
        json j = json::parse(text);
        WPolynomial p(j.at("n").get<int>());
        for (const auto& t : j.at("terms")) {
            std::vector<Monomial::Factor> f;
            for (const auto& e : t.at("monomial"))
                f.emplace_back(EdgeVar(e.at(0).get<int>(), e.at(1).get<int>()), e.at(2).get<unsigned>());
            p.add_term(Monomial(std::move(f)), parse_rational(t.at("coeff").get<std::string>()));
        }
        return p;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

std::string to_json(const GraphSeries& s) {
    json out = json::array();
    for (const auto& [g, c] : s)
        out.push_back({{"edges", g.to_string()}, {"vertices", g.vertex_count()}, {"coeff", to_string(c)}});
    return out.dump();
}

GraphSeries graph_series_from_json(std::string_view text) {
    try {
        json j = json::parse(text);
        GraphSeries s;
        for (const auto& item : j) {
            const int v = item.contains("vertices") ? item.at("vertices").get<int>() : 0;
            add_to(s, parse_graph_class(item.at("edges").get<std::string>(), v),
                   parse_rational(item.at("coeff").get<std::string>()));
        }
        return s;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed graph series JSON: ") + e.what());
    }
}

}  // namespace hurwitz
