// Characteristic functions: nonzero GF(2) labels on facets that restrict to
// a basis at every vertex, the facet subgroups they span, the induced
// coloring on a face, a backtracking coloring search, and the dimension-3
// orientability test.

#ifndef SMALLCOVER_CHARFN_HPP
#define SMALLCOVER_CHARFN_HPP

#include <optional>
#include <vector>

#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// Facet coloring by vectors of (Z_2)^dim. Construct via make_charfn to get
/// the non-degeneracy check.
struct CharFn {
    int dim = 0;
    std::vector<Gf2Vec> values;  // one per facet

    const Gf2Vec& at(int facet) const { return values.at(static_cast<std::size_t>(facet)); }
};

inline bool is_nondegenerate(const SimplePolytope& p, const std::vector<Gf2Vec>& values) {
    if (static_cast<int>(values.size()) != p.facet_count())
        throw DomainError("WrongLength", "one value per facet required");
    for (const auto& v : values) {
        if (v.len != p.dim()) throw DomainError("WrongLength", "value of wrong length");
        if (v.is_zero()) throw DomainError("ZeroValue", "facet value must be nonzero");
    }
    for (const auto& vert : p.vertices()) {
        std::vector<Gf2Vec> vs;
        for (int f : vert) vs.push_back(values[static_cast<std::size_t>(f)]);
        if (gf2_rank(vs, p.dim()) != p.dim()) return false;
    }
    return true;
}

inline CharFn make_charfn(const SimplePolytope& p, std::vector<Gf2Vec> values) {
    if (!is_nondegenerate(p, values))
        throw DomainError("DegenerateCharFn", "values at some vertex are linearly dependent");
    return CharFn{p.dim(), std::move(values)};
}

/// Subgroup of (Z_2)^n spanned by the labels of the facets containing f;
/// trivial for f = P. Dimension equals codim(f) by non-degeneracy.
inline Gf2Subspace facet_subgroup(const SimplePolytope& p, const CharFn& lambda, const Face& f) {
    Gf2Subspace s(p.dim());
    for (int g : f.facets) s.insert(lambda.at(g));
    return s;
}

/// Induced coloring on a face per the quotient formula, expressed in the
/// anchored basis: order the facets at v with those containing f first;
/// the k facets at v transverse to f receive the standard basis of
/// (Z_2)^k, and every other transverse facet gets the residue of its
/// ambient label. `embed` sends a face label back into (Z_2)^n (the image
/// of the i-th basis vector is the ambient label of the i-th transverse
/// facet at v); `discrepancy[t] = embed(values[t]) + lambda(F_t)` always
/// lies in the facet subgroup of f.
struct InducedCharFn {
    FacePolytope face;           // the face as a polytope, with dictionaries
    CharFn values;               // coloring of face.poly, length dim(f)
    int anchor_vertex = 0;       // ambient vertex index v
    int anchor_in_face = 0;      // v as a vertex of face.poly
    FacetSet transverse_at_anchor;  // ambient indices t_1 < ... < t_k
    Gf2Subspace subgroup;        // G_f
    std::vector<Gf2Vec> discrepancy;  // per face facet

    Gf2Vec embed(const Gf2Vec& g) const {
        Gf2Vec out = Gf2Vec::zero(subgroup.ambient_len());
        for (int i = 0; i < g.len; ++i)
            if (g.get(i)) out = out + ambient_basis[static_cast<std::size_t>(i)];
        return out;
    }

    std::vector<Gf2Vec> ambient_basis;  // labels of transverse-at-v facets
};

inline InducedCharFn induced_charfn(const SimplePolytope& p, const CharFn& lambda, const Face& f,
                                    int vertex) {
    const auto& v = p.vertex(vertex);
    if (!is_subset(f.facets, v))
        throw DomainError("VertexNotInFace", "anchor vertex must lie on the face");
    const int n = p.dim();
    const int k = f.dim;

    // Facets at v: those containing f first, then the transverse ones,
    // each group in increasing index order.
    FacetSet trans_at_v;
    std::set_difference(v.begin(), v.end(), f.facets.begin(), f.facets.end(),
                        std::back_inserter(trans_at_v));
    std::vector<Gf2Vec> cols;
    for (int g : f.facets) cols.push_back(lambda.at(g));
    for (int g : trans_at_v) cols.push_back(lambda.at(g));

    FacePolytope fp = face_polytope(p, f);
    std::vector<Gf2Vec> vals;
    vals.reserve(fp.ambient_facet.size());
    for (int g : fp.ambient_facet) {
        auto c = gf2_solve(cols, lambda.at(g));
        std::uint32_t bits = 0;
        for (int i = 0; i < k; ++i)
            if (c[static_cast<std::size_t>(n - k + i)]) bits |= std::uint32_t{1} << i;
        vals.emplace_back(bits, k);
    }

    InducedCharFn out{std::move(fp), CharFn{k, std::move(vals)}, vertex, 0, trans_at_v,
                      facet_subgroup(p, lambda, f), {}, {}};
    out.anchor_in_face = out.face.face_vertex_of(vertex);
    for (int g : trans_at_v) out.ambient_basis.push_back(lambda.at(g));
    for (std::size_t t = 0; t < out.face.ambient_facet.size(); ++t) {
        Gf2Vec d = out.embed(out.values.values[t]) + lambda.at(out.face.ambient_facet[t]);
        if (!out.subgroup.contains(d))
            throw DomainError("InternalInvariantViolation", "induced label residue escapes G_f");
        out.discrepancy.push_back(d);
    }
    if (k > 0 && !is_nondegenerate(out.face.poly, out.values.values))
        throw DomainError("InternalInvariantViolation", "induced coloring degenerate");
    return out;
}

/// Backtracking search for a valid coloring; deterministic in facet order
/// (facets colored in index order, candidate vectors in increasing bit
/// order). Returns nullopt when the search space is exhausted.
inline std::optional<CharFn> find_charfn(const SimplePolytope& p) {
    const int n = p.dim();
    const int m = p.facet_count();
    std::vector<Gf2Vec> vals(static_cast<std::size_t>(m), Gf2Vec::zero(n));
    std::vector<bool> assigned(static_cast<std::size_t>(m), false);

    auto vertex_ok = [&](const FacetSet& vert) {
        std::vector<Gf2Vec> vs;
        for (int f : vert)
            if (assigned[static_cast<std::size_t>(f)]) vs.push_back(vals[static_cast<std::size_t>(f)]);
        return gf2_rank(vs, n) == static_cast<int>(vs.size());
    };

    std::function<bool(int)> rec = [&](int f) -> bool {
        if (f == m) return true;
        for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
            vals[static_cast<std::size_t>(f)] = Gf2Vec(bits, n);
            assigned[static_cast<std::size_t>(f)] = true;
            bool ok = true;
            for (const auto& vert : p.vertices()) {
                if (!std::binary_search(vert.begin(), vert.end(), f)) continue;
                if (!vertex_ok(vert)) {
                    ok = false;
                    break;
                }
            }
            if (ok && rec(f + 1)) return true;
            assigned[static_cast<std::size_t>(f)] = false;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return CharFn{n, std::move(vals)};
}

/// Dimension-3 orientability: some functional takes value 1 on every facet
/// label (equivalently, a basis change moves the range into
/// {e1, e2, e3, e1+e2+e3}). Brute force over the 7 nonzero functionals.
inline bool is_orientable_3d(const SimplePolytope& p, const CharFn& lambda) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "orientability test is dimension-3 only");
    for (std::uint32_t eps = 1; eps < 8; ++eps) {
        Gf2Vec e(eps, 3);
        bool all = true;
        for (int f = 0; f < p.facet_count() && all; ++f)
            if (!e.dot(lambda.at(f))) all = false;
        if (all) return true;
    }
    return false;
}

/// First Z_2-Betti number of any small cover over P: m - n.
inline int betti1_z2(const SimplePolytope& p) { return p.facet_count() - p.dim(); }

}  // namespace smallcover

#endif  // SMALLCOVER_CHARFN_HPP
