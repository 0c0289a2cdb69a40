// Three-dimensional operations: combinatorial vertex cuts and their inverse
// (shrinking a triangular facet), recognition of the cube and of iterated
// vertex cuts of the simplex, the scalar-curvature classification table,
// and the connected-sum bookkeeping for real moment-angle manifolds.

#ifndef SMALLCOVER_DIM3_HPP
#define SMALLCOVER_DIM3_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smallcover/charfn.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// Truncates the vertex: the vertex disappears, a new simplex facet appears,
/// and each facet through the vertex contributes one new vertex on the cut.
inline SimplePolytope vertex_cut(const SimplePolytope& p, int vertex,
                                 const std::string& new_facet_name = "") {
    if (vertex < 0 || vertex >= p.vertex_count())
        throw DomainError("InvalidVertex", "vertex index out of range");
    if (p.dim() < 2) throw DomainError("WrongDimension", "vertex cut needs dimension >= 2");
    const auto& v = p.vertex(vertex);
    const int cut = p.facet_count();

    std::string cname = new_facet_name;
    if (cname.empty()) {
        int k = 1;
        auto taken = [&](const std::string& s) {
            for (const auto& n : p.facet_names())
                if (n == s) return true;
            return false;
        };
        while (taken("C" + std::to_string(k))) ++k;
        cname = "C" + std::to_string(k);
    }

    std::vector<std::string> names = p.facet_names();
    names.push_back(cname);

    std::vector<FacetSet> verts;
    for (int i = 0; i < p.vertex_count(); ++i)
        if (i != vertex) verts.push_back(p.vertex(i));
    for (int f : v) {
        FacetSet nv{cut};
        for (int g : v)
            if (g != f) nv.push_back(g);
        verts.push_back(nv);
    }
    return SimplePolytope(p.name() + "+cut", p.dim(), std::move(names), std::move(verts));
}

/// Inverse of a vertex cut in dimension 3: deletes the triangular facet and
/// merges its three corners into one vertex on the three neighbor facets.
/// Returns nullopt when the result is not a simple polytope (in particular
/// for the simplex itself, where the merged vertex already exists).
inline std::optional<SimplePolytope> shrink_triangle(const SimplePolytope& p, int facet) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "triangle shrinking is dimension-3 only");
    std::vector<int> corner;
    for (int i = 0; i < p.vertex_count(); ++i)
        if (std::binary_search(p.vertex(i).begin(), p.vertex(i).end(), facet)) corner.push_back(i);
    if (corner.size() != 3) throw DomainError("NotATriangle", "facet does not have exactly 3 vertices");

    FacetSet merged;
    for (int i : corner)
        for (int g : p.vertex(i))
            if (g != facet && !std::binary_search(merged.begin(), merged.end(), g)) {
                merged.push_back(g);
                std::sort(merged.begin(), merged.end());
            }
    if (merged.size() != 3) return std::nullopt;

    auto renumber = [&](int g) { return g < facet ? g : g - 1; };
    std::vector<std::string> names;
    for (int g = 0; g < p.facet_count(); ++g)
        if (g != facet) names.push_back(p.facet_name(g));

    std::vector<FacetSet> verts;
    for (int i = 0; i < p.vertex_count(); ++i) {
        if (std::find(corner.begin(), corner.end(), i) != corner.end()) continue;
        FacetSet nv;
        for (int g : p.vertex(i)) nv.push_back(renumber(g));
        verts.push_back(nv);
    }
    FacetSet nv;
    for (int g : merged) nv.push_back(renumber(g));
    verts.push_back(nv);

    try {
        return SimplePolytope(p.name() + "-shrink", 3, std::move(names), std::move(verts));
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

inline std::vector<int> triangular_facets(const SimplePolytope& p) {
    std::vector<int> out;
    for (int f = 0; f < p.facet_count(); ++f) {
        int c = 0;
        for (const auto& v : p.vertices())
            if (std::binary_search(v.begin(), v.end(), f)) ++c;
        if (c == 3) out.push_back(f);
    }
    return out;
}

namespace detail {

inline std::string incidence_key(const SimplePolytope& p) {
    // Labeled key: facet names in index order plus the vertex sets by name.
    std::string key;
    for (const auto& n : p.facet_names()) key += n + ";";
    key += "/";
    std::vector<std::string> vs;
    for (const auto& v : p.vertices()) {
        std::string s;
        for (int g : v) s += p.facet_name(g) + ",";
        vs.push_back(s);
    }
    std::sort(vs.begin(), vs.end());
    for (const auto& s : vs) key += s + "|";
    return key;
}

inline bool shrinks_to_simplex(const SimplePolytope& p, std::map<std::string, bool>& memo) {
    if (p.facet_count() == 4) return p.vertex_count() == 4;  // forced: the 3-simplex
    std::string key = incidence_key(p);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (int f : triangular_facets(p)) {
        auto q = shrink_triangle(p, f);
        if (q && shrinks_to_simplex(*q, memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(std::move(key), ok);
    return ok;
}

}  // namespace detail

/// Number of vertex cuts needed to produce P from the 3-simplex, or nullopt
/// when P is not an iterated vertex cut of it. Backtracks over shrink
/// orders; order-independence of greedy shrinking is not assumed.
inline std::optional<int> simplex_cut_rank(const SimplePolytope& p) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "recognition is dimension-3 only");
    std::map<std::string, bool> memo;
    if (detail::shrinks_to_simplex(p, memo)) return p.facet_count() - 4;
    return std::nullopt;
}

/// Combinatorial cube test: facet adjacency must be the octahedron graph
/// (checked by explicit isomorphism with the reference cube).
inline bool is_cube(const SimplePolytope& p) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "cube test is dimension-3 only");
    if (p.facet_count() != 6 || p.vertex_count() != 8) return false;
    static const SimplePolytope reference(
        "cube", 3, {"x+", "x-", "y+", "y-", "z+", "z-"},
        {{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
    return isomorphic(p, reference);
}

struct CurvatureClass {
    bool positive_scalar = false;
    bool nonneg_scalar = false;
    bool nonneg_ricci_sectional = false;
    bool positive_ricci_sectional = false;
    bool flat = false;
};

namespace curvature_table {

enum class Shape { Simplex, Prism, Cube, CutSimplex /* vc^k of the simplex, any k >= 0 */ };

struct Row {
    const char* condition;
    std::vector<Shape> shapes;
};

// Rows of the classification table; each curvature condition holds exactly
// for the listed polytope classes.
inline const std::vector<Row>& rows() {
    static const std::vector<Row> t = {
        {"sectional/ricci > 0", {Shape::Simplex}},
        {"scalar > 0", {Shape::CutSimplex}},
        {"sectional/ricci >= 0", {Shape::Cube, Shape::Simplex, Shape::Prism}},
        {"scalar >= 0", {Shape::Cube, Shape::CutSimplex}},
        {"flat", {Shape::Cube}},
    };
    return t;
}

}  // namespace curvature_table

inline CurvatureClass classify_curvature(const SimplePolytope& p) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "classification is dimension-3 only");
    auto rank = simplex_cut_rank(p);
    const bool cube = is_cube(p);

    auto matches = [&](curvature_table::Shape s) {
        using curvature_table::Shape;
        switch (s) {
            case Shape::Simplex: return rank.has_value() && *rank == 0;
            case Shape::Prism: return rank.has_value() && *rank == 1;
            case Shape::Cube: return cube;
            case Shape::CutSimplex: return rank.has_value();
        }
        return false;
    };
    auto holds = [&](const char* condition) {
        for (const auto& row : curvature_table::rows())
            if (std::string(row.condition) == condition) {
                for (auto s : row.shapes)
                    if (matches(s)) return true;
                return false;
            }
        throw DomainError("InternalInvariantViolation", "unknown table row");
    };

    CurvatureClass out;
    out.positive_ricci_sectional = holds("sectional/ricci > 0");
    out.positive_scalar = holds("scalar > 0");
    out.nonneg_ricci_sectional = holds("sectional/ricci >= 0");
    out.nonneg_scalar = holds("scalar >= 0");
    out.flat = holds("flat");
    return out;
}

/// Homeomorphism type of the real moment-angle manifold in dimension 3.
struct RZProfile {
    enum class Kind { torus, sphere, connected_sum_s2xs1, other } kind = Kind::other;
    long long count = 0;  // number of S^2 x S^1 summands, for the sum kind
};

/// Number of S^2 x S^1 summands after one vertex cut, by the surgery
/// recurrence: doubling plus 2^{m-3} - 1 new tubes, m = facet count before
/// the cut.
inline long long rz_summands_recurrence(int k) {
    long long n = 0;
    for (int i = 1; i <= k; ++i) n = 2 * n + (1LL << i) - 1;  // m before the i-th cut is 3 + i
    return n;
}

inline long long rz_summands_closed_form(int k) { return (k - 1) * (1LL << k) + 1; }

inline RZProfile rz_profile(const SimplePolytope& p) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "RZ profile is dimension-3 only");
    if (is_cube(p)) return {RZProfile::Kind::torus, 0};
    auto rank = simplex_cut_rank(p);
    if (!rank) return {RZProfile::Kind::other, 0};
    if (*rank == 0) return {RZProfile::Kind::sphere, 0};
    return {RZProfile::Kind::connected_sum_s2xs1, rz_summands_closed_form(*rank)};
}

/// Decomposition of the real moment-angle manifold of a once-cut polytope:
/// two copies of the original joined by 2^{m-3} - 1 tubes.
inline std::pair<int, long long> rz_cut_decomposition(int facet_count) {
    if (facet_count < 4) throw DomainError("WrongDimension", "need at least 4 facets");
    return {2, (1LL << (facet_count - 3)) - 1};
}

/// Number of components of the preimage of a face in the real moment-angle
/// manifold: 2^{m + dim f - n - l}, l the number of facets of the face.
inline long long rz_face_preimage_components(const SimplePolytope& p, const Face& f) {
    const long long l = static_cast<long long>(p.transverse_facets(f).size());
    const long long e = p.facet_count() + f.dim - p.dim() - l;
    if (e < 0) throw DomainError("InternalInvariantViolation", "negative component exponent");
    return 1LL << e;
}

/// What the orientable small cover over P is, for the classified shapes.
struct CoverSummary {
    enum class Kind { real_bott, rp3_connected_sum, unclassified } kind = Kind::unclassified;
    int rp3_copies = 0;  // number of cuts + 1
};

inline CoverSummary orientable_cover_summary(const SimplePolytope& p, const CharFn& lambda) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "summary is dimension-3 only");
    if (!is_orientable_3d(p, lambda)) throw DomainError("NotOrientable", "coloring is not orientable");
    if (is_cube(p)) return {CoverSummary::Kind::real_bott, 0};
    if (auto rank = simplex_cut_rank(p)) return {CoverSummary::Kind::rp3_connected_sum, *rank + 1};
    return {CoverSummary::Kind::unclassified, 0};
}

}  // namespace smallcover

#endif  // SMALLCOVER_DIM3_HPP
