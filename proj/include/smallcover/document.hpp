// Polytope document format: a JSON object with fields name, dim, facets,
// vertices, and optionally charfn (facet name -> bit string, character j
// carrying the j-th coordinate). The canonical form sorts facets by name
// and vertex lists lexicographically, so writing a parsed canonical
// document is byte-identical.

#ifndef SMALLCOVER_DOCUMENT_HPP
#define SMALLCOVER_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "smallcover/charfn.hpp"
#include "smallcover/fixtures.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

class ParseError : public DomainError {
public:
    explicit ParseError(const std::string& message) : DomainError("ParseError", message) {}
};

struct PolytopeDocument {
    SimplePolytope poly;
    std::optional<CharFn> coloring;
};

inline PolytopeDocument parse_document(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    for (const char* field : {"name", "dim", "facets", "vertices"})
        if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
    if (!doc["name"].is_string() || !doc["dim"].is_number_integer() || !doc["facets"].is_array() ||
        !doc["vertices"].is_array())
        throw ParseError("field of wrong type");

    std::vector<std::string> facets;
    for (const auto& f : doc["facets"]) {
        if (!f.is_string()) throw ParseError("facet names must be strings");
        facets.push_back(f.get<std::string>());
    }
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = i + 1; j < facets.size(); ++j)
            if (facets[i] == facets[j]) throw ParseError("duplicate facet name '" + facets[i] + "'");

    auto index_of = [&](const std::string& n) {
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (facets[i] == n) return static_cast<int>(i);
        throw ParseError("vertex references unknown facet '" + n + "'");
    };

    std::vector<FacetSet> verts;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_array()) throw ParseError("each vertex must be a list of facet names");
        FacetSet s;
        for (const auto& n : v) {
            if (!n.is_string()) throw ParseError("each vertex must be a list of facet names");
            s.push_back(index_of(n.get<std::string>()));
        }
        verts.push_back(s);
    }

    SimplePolytope poly(doc["name"].get<std::string>(), doc["dim"].get<int>(), facets, verts);

    std::optional<CharFn> coloring;
    if (doc.contains("charfn")) {
        if (!doc["charfn"].is_object()) throw ParseError("charfn must map facet names to bit strings");
        std::vector<Gf2Vec> values(static_cast<std::size_t>(poly.facet_count()),
                                   Gf2Vec::zero(poly.dim()));
        std::vector<bool> set(static_cast<std::size_t>(poly.facet_count()), false);
        for (const auto& [key, val] : doc["charfn"].items()) {
            if (!val.is_string()) throw ParseError("charfn values must be bit strings");
            int idx = index_of(key);
            Gf2Vec v = Gf2Vec::parse(val.get<std::string>());
            if (v.len != poly.dim()) throw ParseError("charfn bit string of wrong length for '" + key + "'");
            values[static_cast<std::size_t>(idx)] = v;
            set[static_cast<std::size_t>(idx)] = true;
        }
        for (int i = 0; i < poly.facet_count(); ++i)
            if (!set[static_cast<std::size_t>(i)])
                throw ParseError("charfn missing facet '" + poly.facet_name(i) + "'");
        coloring = make_charfn(poly, values);
    }
    return {std::move(poly), std::move(coloring)};
}

/// Canonical serialization: facets sorted by name, vertices sorted
/// lexicographically, two-space indentation.
inline std::string write_document(const SimplePolytope& p,
                                  const std::optional<CharFn>& coloring = std::nullopt) {
    SimplePolytope canon = canonicalized(p);
    nlohmann::json doc;
    doc["name"] = canon.name();
    doc["dim"] = canon.dim();
    doc["facets"] = canon.facet_names();
    auto verts = nlohmann::json::array();
    for (const auto& v : canon.vertices()) {
        auto names = nlohmann::json::array();
        for (int g : v) names.push_back(canon.facet_name(g));
        verts.push_back(names);
    }
    doc["vertices"] = verts;
    if (coloring) {
        auto cf = nlohmann::json::object();
        for (int i = 0; i < p.facet_count(); ++i) cf[p.facet_name(i)] = coloring->at(i).str();
        doc["charfn"] = cf;
    }
    return doc.dump(2) + "\n";
}

inline std::string write_document(const PolytopeDocument& d) {
    return write_document(d.poly, d.coloring);
}

}  // namespace smallcover

#endif  // SMALLCOVER_DOCUMENT_HPP
