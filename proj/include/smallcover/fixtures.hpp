// Canonical fixture polytopes with their standard colorings.

#ifndef SMALLCOVER_FIXTURES_HPP
#define SMALLCOVER_FIXTURES_HPP

#include <optional>
#include <string>

#include "smallcover/charfn.hpp"
#include "smallcover/dim3.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// Rebuilds the polytope with facets sorted by name (vertex lists follow).
inline SimplePolytope canonicalized(const SimplePolytope& p) {
    std::vector<int> order(static_cast<std::size_t>(p.facet_count()));
    for (int i = 0; i < p.facet_count(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p.facet_name(a) < p.facet_name(b); });
    std::vector<int> rank(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<std::string> names;
    for (int i : order) names.push_back(p.facet_name(i));
    std::vector<FacetSet> verts;
    for (const auto& v : p.vertices()) {
        FacetSet nv;
        for (int g : v) nv.push_back(rank[static_cast<std::size_t>(g)]);
        verts.push_back(nv);
    }
    return SimplePolytope(p.name(), p.dim(), std::move(names), std::move(verts));
}

namespace fixtures {

struct Fixture {
    SimplePolytope poly;
    std::optional<CharFn> coloring;
};

inline Fixture interval() {
    SimplePolytope p("interval", 1, {"A", "B"}, {{0}, {1}});
    return {p, make_charfn(p, {Gf2Vec::parse("1"), Gf2Vec::parse("1")})};
}

inline Fixture triangle() {
    SimplePolytope p("triangle", 2, {"E1", "E2", "E3"}, {{0, 1}, {0, 2}, {1, 2}});
    return {p, make_charfn(p, {Gf2Vec::parse("10"), Gf2Vec::parse("01"), Gf2Vec::parse("11")})};
}

inline Fixture square() {
    SimplePolytope p("square", 2, {"x+", "x-", "y+", "y-"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    return {p, make_charfn(p, {Gf2Vec::parse("10"), Gf2Vec::parse("10"), Gf2Vec::parse("01"),
                               Gf2Vec::parse("01")})};
}

inline Fixture simplex3() {
    SimplePolytope p("simplex3", 3, {"F1", "F2", "F3", "F4"},
                     {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    return {p, make_charfn(p, {Gf2Vec::parse("100"), Gf2Vec::parse("010"), Gf2Vec::parse("001"),
                               Gf2Vec::parse("111")})};
}

inline Fixture cube() {
    SimplePolytope p("cube", 3, {"x+", "x-", "y+", "y-", "z+", "z-"},
                     {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                      {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
    return {p, make_charfn(p, {Gf2Vec::parse("100"), Gf2Vec::parse("100"), Gf2Vec::parse("010"),
                               Gf2Vec::parse("010"), Gf2Vec::parse("001"), Gf2Vec::parse("001")})};
}

/// The triangular prism, facets Q1..Q3 (quadrilaterals) and T0, T1
/// (triangles).
inline Fixture prism() {
    SimplePolytope p("prism", 3, {"Q1", "Q2", "Q3", "T0", "T1"},
                     {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 4}, {1, 2, 4}, {0, 2, 4}});
    return {p, make_charfn(p, {Gf2Vec::parse("100"), Gf2Vec::parse("010"), Gf2Vec::parse("110"),
                               Gf2Vec::parse("001"), Gf2Vec::parse("001")})};
}

inline Fixture pentagonal_prism() {
    std::vector<FacetSet> verts;
    for (int i = 0; i < 5; ++i) {
        int a = i, b = (i + 1) % 5;
        verts.push_back({std::min(a, b), std::max(a, b), 5});
        verts.push_back({std::min(a, b), std::max(a, b), 6});
    }
    SimplePolytope p("pentagonal-prism", 3, {"P1", "P2", "P3", "P4", "P5", "T0", "T1"},
                     std::move(verts));
    return {p, make_charfn(p, {Gf2Vec::parse("100"), Gf2Vec::parse("010"), Gf2Vec::parse("100"),
                               Gf2Vec::parse("010"), Gf2Vec::parse("110"), Gf2Vec::parse("001"),
                               Gf2Vec::parse("001")})};
}

/// k-fold vertex cut of the 3-simplex, cutting the first vertex each time;
/// the coloring comes from the deterministic search.
inline Fixture cut_simplex(int k, const std::string& name) {
    SimplePolytope p = simplex3().poly;
    for (int i = 0; i < k; ++i) p = canonicalized(vertex_cut(p, 0));
    SimplePolytope named(name, p.dim(), p.facet_names(), p.vertices());
    auto coloring = find_charfn(named);
    if (!coloring) throw DomainError("InternalInvariantViolation", "3-polytope must be colorable");
    return {named, *coloring};
}

/// Second valid colorings for the lambda-independence checks.
inline CharFn prism_alt_coloring() {
    auto p = prism().poly;
    return make_charfn(p, {Gf2Vec::parse("100"), Gf2Vec::parse("010"), Gf2Vec::parse("111"),
                           Gf2Vec::parse("001"), Gf2Vec::parse("001")});
}

inline CharFn cube_alt_coloring() {
    auto p = cube().poly;
    return make_charfn(p, {Gf2Vec::parse("100"), Gf2Vec::parse("110"), Gf2Vec::parse("010"),
                           Gf2Vec::parse("010"), Gf2Vec::parse("001"), Gf2Vec::parse("001")});
}

inline Fixture get(const std::string& name) {
    if (name == "interval") return interval();
    if (name == "triangle") return triangle();
    if (name == "square") return square();
    if (name == "simplex3") return simplex3();
    if (name == "cube") return cube();
    if (name == "prism") return prism();
    if (name == "pentagonal-prism") return pentagonal_prism();
    if (name == "vc2") return cut_simplex(2, "vc2");
    if (name == "vc3") return cut_simplex(3, "vc3");
    throw DomainError("UnknownFixture", "no fixture named '" + name + "'");
}

inline const std::vector<std::string>& names() {
    static const std::vector<std::string> all = {"interval", "triangle", "square",
                                                 "simplex3", "cube",     "prism",
                                                 "vc2",      "vc3",      "pentagonal-prism"};
    return all;
}

}  // namespace fixtures
}  // namespace smallcover

#endif  // SMALLCOVER_FIXTURES_HPP
