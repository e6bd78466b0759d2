#include "sgpkit/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace sgpkit {

namespace {

std::vector<Int> int_vector_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be a JSON array");
    std::vector<Int> v;
    v.reserve(j.size());
    for (const auto& x : j) {
        if (!x.is_number_integer())
            throw std::invalid_argument(std::string(what) + " entries must be integers");
        v.push_back(x.get<Int>());
    }
    return v;
}

}  // namespace

void to_json(nlohmann::json& j, const Element& e) { j = e.coords; }
void to_json(nlohmann::json& j, const Factorization& z) { j = z.counts; }

void to_json(nlohmann::json& j, const Relation& rel) {
    j = nlohmann::json{{"left", rel.left}, {"right", rel.right}};
}

nlohmann::json semigroup_to_json(const Semigroup& s) {
    nlohmann::json gens = nlohmann::json::array();
    for (const Element& g : s.generators()) gens.push_back(g);
    return nlohmann::json{{"dim", s.dim()}, {"generators", gens}};
}

Semigroup semigroup_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
        throw std::invalid_argument(
            "semigroup JSON must be an object with \"dim\" and \"generators\"");
    if (!j["dim"].is_number_integer())
        throw std::invalid_argument("semigroup \"dim\" must be an integer");
    Int dim = j["dim"].get<Int>();
    if (!j["generators"].is_array() || j["generators"].empty())
        throw std::invalid_argument("semigroup \"generators\" must be a nonempty array");
    std::vector<Element> gens;
    for (const auto& g : j["generators"])
        gens.emplace_back(int_vector_from_json(g, "generator"));
    return Semigroup(dim, std::move(gens));
}

nlohmann::json family_to_json(const ShiftedFamily& f) {
    nlohmann::json offs = nlohmann::json::array();
    for (const Element& r : f.offsets) offs.push_back(r);
    return nlohmann::json{{"dim", f.dim}, {"offsets", offs}};
}

ShiftedFamily family_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("offsets"))
        throw std::invalid_argument("family JSON must be an object with \"dim\" and \"offsets\"");
    if (!j["dim"].is_number_integer())
        throw std::invalid_argument("family \"dim\" must be an integer");
    Int dim = j["dim"].get<Int>();
    if (!j["offsets"].is_array() || j["offsets"].empty())
        throw std::invalid_argument("family \"offsets\" must be a nonempty array");
    std::vector<Element> offs;
    for (const auto& r : j["offsets"]) offs.emplace_back(int_vector_from_json(r, "offset"));
    return ShiftedFamily(dim, std::move(offs));
}

Element element_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Element({j.get<Int>()});
    return Element(int_vector_from_json(j, "element"));
}

std::vector<Relation> relations_from_json(const nlohmann::json& j) {
    const nlohmann::json* list = &j;
    if (j.is_object() && j.contains("relations")) list = &j["relations"];
    if (!list->is_array())
        throw std::invalid_argument("presentation JSON must be a list of relations");
    std::vector<Relation> out;
    for (const auto& r : *list) {
        if (!r.is_object() || !r.contains("left") || !r.contains("right"))
            throw std::invalid_argument("each relation needs \"left\" and \"right\" arrays");
        out.push_back(Relation::canonical(Factorization(int_vector_from_json(r["left"], "left")),
                                          Factorization(int_vector_from_json(r["right"], "right"))));
    }
    return out;
}

nlohmann::json betti_report_to_json(const BettiReport& report) {
    nlohmann::json elems = nlohmann::json::array();
    for (const BettiEntry& e : report.elements)
        elems.push_back({{"element", e.element}, {"components", e.component_count}});
    return nlohmann::json{
        {"elements", elems}, {"bound", report.search_bound}, {"complete", to_string(report.complete)}};
}

nlohmann::json presentation_to_json(const Presentation& pres) {
    nlohmann::json rels = nlohmann::json::array();
    for (const Relation& r : pres.relations) rels.push_back(r);
    return nlohmann::json{
        {"relations", rels}, {"bound", pres.search_bound}, {"complete", to_string(pres.complete)}};
}

nlohmann::json sweep_to_json(const std::vector<SweepRecord>& records) {
    nlohmann::json out = nlohmann::json::array();
    for (const SweepRecord& r : records) {
        out.push_back({{"n", r.n},
                       {"presentation_size", r.presentation_size},
                       {"betti_count", r.betti_count},
                       {"bound", r.bound},
                       {"complete", to_string(r.complete)}});
    }
    return out;
}

std::string sweep_to_csv(const std::vector<SweepRecord>& records) {
    std::ostringstream out;
    out << "n,presentation_size,betti_count,bound,complete\n";
    for (const SweepRecord& r : records) {
        out << r.n << ',' << r.presentation_size << ',' << r.betti_count << ',' << r.bound << ','
            << to_string(r.complete) << '\n';
    }
    return out.str();
}

}  // namespace sgpkit
