// Combinatorial simple polytopes.
//
// A polytope is stored purely as facet-vertex incidence: facets are indexed
// names, each vertex is the set of facets through it (exactly n of them).
// Every face is identified with the set of facets containing it, and a facet
// set spans a nonempty face exactly when it sits inside some vertex set.
// No coordinates are ever stored; everything is up to combinatorial
// equivalence.

#ifndef SMALLCOVER_POLYTOPE_HPP
#define SMALLCOVER_POLYTOPE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smallcover/gf2.hpp"

namespace smallcover {

using FacetSet = std::vector<int>;  // strictly increasing facet indices

inline bool is_subset(const FacetSet& a, const FacetSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline FacetSet set_union(FacetSet a, const FacetSet& b) {
    FacetSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Face of a simple polytope: the set of facets containing it.
/// The empty set denotes the whole polytope.
struct Face {
    FacetSet facets;
    int dim = 0;  // ambient_dim - facets.size()

    friend bool operator==(const Face&, const Face&) = default;
};

struct SimplicialComplex {
    std::vector<int> vertices;
    std::vector<FacetSet> simplices;  // all nonempty simplices, as sorted vertex sets

    bool has(const FacetSet& s) const {
        return std::find(simplices.begin(), simplices.end(), s) != simplices.end();
    }
};

/// Three vertices pairwise joined by edges spanning no 2-simplex.
inline bool has_empty_triangle(const SimplicialComplex& c) {
    const auto& vs = c.vertices;
    auto edge = [&](int a, int b) {
        FacetSet e{std::min(a, b), std::max(a, b)};
        return c.has(e);
    };
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!edge(vs[i], vs[j])) continue;
            for (std::size_t k = j + 1; k < vs.size(); ++k) {
                if (!edge(vs[i], vs[k]) || !edge(vs[j], vs[k])) continue;
                FacetSet tri{vs[i], vs[j], vs[k]};
                std::sort(tri.begin(), tri.end());
                if (!c.has(tri)) return true;
            }
        }
    return false;
}

class SimplePolytope {
public:
    /// Validates the raw incidence and builds the polytope.
    /// Throws DomainError with kind NonSimpleVertex / DuplicateVertex /
    /// UnusedFacet / DisconnectedRidgeGraph on invalid input.
    SimplePolytope(std::string name, int dim, std::vector<std::string> facet_names,
                   std::vector<FacetSet> vertices)
        : name_(std::move(name)),
          dim_(dim),
          facet_names_(std::move(facet_names)),
          vertices_(std::move(vertices)) {
        if (dim_ < 0) throw DomainError("WrongDimension", "negative dimension");
        for (auto& v : vertices_) std::sort(v.begin(), v.end());
        std::sort(vertices_.begin(), vertices_.end());
        validate();
        build_adjacency();
    }

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    int facet_count() const { return static_cast<int>(facet_names_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& facet_names() const { return facet_names_; }
    const std::string& facet_name(int f) const { return facet_names_.at(static_cast<std::size_t>(f)); }
    const std::vector<FacetSet>& vertices() const { return vertices_; }
    const FacetSet& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }

    int facet_index(const std::string& name) const {
        for (int i = 0; i < facet_count(); ++i)
            if (facet_names_[static_cast<std::size_t>(i)] == name) return i;
        throw DomainError("UnknownFacet", "no facet named '" + name + "'");
    }

    std::optional<int> vertex_index(const FacetSet& facets) const {
        FacetSet s = facets;
        std::sort(s.begin(), s.end());
        for (int i = 0; i < vertex_count(); ++i)
            if (vertices_[static_cast<std::size_t>(i)] == s) return i;
        return std::nullopt;
    }

    /// Two facets are adjacent when they span a codimension-2 face.
    bool adjacent(int f, int g) const {
        return f != g && adj_[static_cast<std::size_t>(f)][static_cast<std::size_t>(g)];
    }

    /// The face spanned by S, or nullopt when the facets in S have empty
    /// intersection. In a simple polytope S spans a face exactly when S is
    /// contained in some vertex set (intersections of facets through a
    /// common point are faces, and every nonempty face reaches a vertex);
    /// tests cross-check this against brute-force enumeration.
    std::optional<Face> face_of(const FacetSet& s) const {
        FacetSet key = s;
        std::sort(key.begin(), key.end());
        if (key.empty()) return Face{{}, dim_};
        for (const auto& v : vertices_)
            if (is_subset(key, v)) return Face{key, dim_ - static_cast<int>(key.size())};
        return std::nullopt;
    }

    bool is_face(const FacetSet& s) const { return face_of(s).has_value(); }

    /// All codimension-k faces (k = 0 gives the polytope itself).
    std::vector<Face> faces_codim(int k) const {
        if (k < 0 || k > dim_) throw DomainError("WrongDimension", "codimension out of range");
        if (k == 0) return {Face{{}, dim_}};
        std::set<FacetSet> seen;
        for (const auto& v : vertices_) {
            std::vector<int> pick(static_cast<std::size_t>(k));
            subsets(v, k, 0, pick, 0, seen);
        }
        std::vector<Face> out;
        for (const auto& s : seen) out.push_back(Face{s, dim_ - k});
        return out;
    }

    /// All proper faces, codimension 1..dim.
    std::vector<Face> proper_faces() const {
        std::vector<Face> out;
        for (int k = 1; k <= dim_; ++k) {
            auto fs = faces_codim(k);
            out.insert(out.end(), fs.begin(), fs.end());
        }
        return out;
    }

    /// Facets meeting f in a face of one dimension lower.
    FacetSet transverse_facets(const Face& f) const {
        FacetSet out;
        for (int g = 0; g < facet_count(); ++g) {
            if (std::binary_search(f.facets.begin(), f.facets.end(), g)) continue;
            if (is_face(set_union(f.facets, {g}))) out.push_back(g);
        }
        return out;
    }

    /// Triples of facets that pairwise intersect but have empty common
    /// intersection.
    std::vector<FacetSet> three_belts() const {
        std::vector<FacetSet> out;
        const int m = facet_count();
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                if (!adjacent(a, b)) continue;
                for (int c = b + 1; c < m; ++c) {
                    if (!adjacent(a, c) || !adjacent(b, c)) continue;
                    if (!is_face({a, b, c})) out.push_back({a, b, c});
                }
            }
        return out;
    }

    /// Link of the face f in the dual boundary complex: vertices are the
    /// transverse facets, simplices the sets T with f.facets ∪ T a face.
    SimplicialComplex link(const Face& f) const {
        SimplicialComplex out;
        out.vertices = transverse_facets(f);
        std::set<FacetSet> seen;
        for (const auto& v : vertices_) {
            if (!is_subset(f.facets, v)) continue;
            FacetSet rest;
            std::set_difference(v.begin(), v.end(), f.facets.begin(), f.facets.end(),
                                std::back_inserter(rest));
            for (std::uint32_t mask = 1; mask < (1u << rest.size()); ++mask) {
                FacetSet s;
                for (std::size_t i = 0; i < rest.size(); ++i)
                    if ((mask >> i) & 1u) s.push_back(rest[i]);
                seen.insert(s);
            }
        }
        out.simplices.assign(seen.begin(), seen.end());
        return out;
    }

    /// Dual boundary complex: one vertex per facet, one simplex per
    /// nonempty proper face.
    SimplicialComplex dual_complex() const {
        SimplicialComplex out;
        for (int i = 0; i < facet_count(); ++i) out.vertices.push_back(i);
        std::set<FacetSet> seen;
        for (int k = 1; k <= dim_; ++k)
            for (const auto& f : faces_codim(k)) seen.insert(f.facets);
        out.simplices.assign(seen.begin(), seen.end());
        return out;
    }

    /// Flagness via links: the dual sphere is flag iff no face link (the
    /// empty face included) contains an empty triangle.
    bool is_flag() const {
        if (has_empty_triangle(dual_complex())) return false;
        for (int k = 1; k <= dim_; ++k)
            for (const auto& f : faces_codim(k))
                if (has_empty_triangle(link(f))) return false;
        return true;
    }

    /// Flagness by the direct definition: every pairwise-intersecting facet
    /// family spans a face. Exponential; meant for cross-checks on small
    /// inputs.
    bool is_flag_direct() const {
        const int m = facet_count();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) < 3) continue;
            FacetSet fam;
            for (int i = 0; i < m; ++i)
                if ((mask >> i) & 1u) fam.push_back(i);
            bool pairwise = true;
            for (std::size_t i = 0; i < fam.size() && pairwise; ++i)
                for (std::size_t j = i + 1; j < fam.size() && pairwise; ++j)
                    if (!adjacent(fam[i], fam[j])) pairwise = false;
            if (pairwise && !is_face(fam)) return false;
        }
        return true;
    }

    /// f_i = number of i-dimensional faces, i = 0..dim (f_dim = 1).
    std::vector<long long> f_vector() const {
        std::vector<long long> f(static_cast<std::size_t>(dim_) + 1, 0);
        for (int k = 0; k <= dim_; ++k)
            f[static_cast<std::size_t>(dim_ - k)] = static_cast<long long>(faces_codim(k).size());
        return f;
    }

    /// h_i = coefficient of t^i in sum_k f_k (t-1)^k.
    std::vector<long long> h_vector() const {
        auto f = f_vector();
        std::vector<long long> h(static_cast<std::size_t>(dim_) + 1, 0);
        for (int k = 0; k <= dim_; ++k) {
            for (int i = k; i >= 0; --i) {
                long long c = 1;  // C(k, i)
                for (int t = 0; t < i; ++t) c = c * (k - t) / (t + 1);
                long long sign = ((k - i) % 2 == 0) ? 1 : -1;
                h[static_cast<std::size_t>(i)] += f[static_cast<std::size_t>(k)] * c * sign;
            }
        }
        return h;
    }

private:
    void validate() const {
        if (dim_ >= 1 && vertices_.empty())
            throw DomainError("NonSimpleVertex", "polytope has no vertices");
        const int m = facet_count();
        std::vector<bool> used(static_cast<std::size_t>(m), false);
        for (const auto& v : vertices_) {
            if (static_cast<int>(v.size()) != dim_)
                throw DomainError("NonSimpleVertex",
                                  "vertex with " + std::to_string(v.size()) + " facets in dimension " +
                                      std::to_string(dim_));
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i] < 0 || v[i] >= m)
                    throw DomainError("UnknownFacet", "vertex references facet index " + std::to_string(v[i]));
                if (i + 1 < v.size() && v[i] == v[i + 1])
                    throw DomainError("NonSimpleVertex", "repeated facet in a vertex set");
                used[static_cast<std::size_t>(v[i])] = true;
            }
        }
        for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
            if (vertices_[i] == vertices_[i + 1])
                throw DomainError("DuplicateVertex", "two vertices share the same facet set");
        for (int i = 0; i < m; ++i)
            if (dim_ >= 1 && !used[static_cast<std::size_t>(i)])
                throw DomainError("UnusedFacet", "facet " + facet_names_[static_cast<std::size_t>(i)] +
                                                     " lies on no vertex");
        if (dim_ == 1) {
            // The interval is the only simple 1-polytope.
            if (m != 2 || vertices_.size() != 2)
                throw DomainError("DisconnectedRidgeGraph", "a 1-polytope must be an interval");
            return;
        }
        if (dim_ >= 2) check_ridge_connectivity();
    }

    void check_ridge_connectivity() const {
        const int m = facet_count();
        std::vector<std::vector<int>> nbr(static_cast<std::size_t>(m));
        for (const auto& v : vertices_)
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    nbr[static_cast<std::size_t>(v[i])].push_back(v[j]);
                    nbr[static_cast<std::size_t>(v[j])].push_back(v[i]);
                }
        std::vector<bool> seen(static_cast<std::size_t>(m), false);
        std::vector<int> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int g : nbr[static_cast<std::size_t>(f)])
                if (!seen[static_cast<std::size_t>(g)]) {
                    seen[static_cast<std::size_t>(g)] = true;
                    stack.push_back(g);
                }
        }
        for (int i = 0; i < m; ++i)
            if (!seen[static_cast<std::size_t>(i)])
                throw DomainError("DisconnectedRidgeGraph", "facet ridge graph is not connected");
    }

    void build_adjacency() {
        const std::size_t m = static_cast<std::size_t>(facet_count());
        adj_.assign(m, std::vector<bool>(m, false));
        for (const auto& v : vertices_)
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = i + 1; j < v.size(); ++j) {
                    adj_[static_cast<std::size_t>(v[i])][static_cast<std::size_t>(v[j])] = true;
                    adj_[static_cast<std::size_t>(v[j])][static_cast<std::size_t>(v[i])] = true;
                }
    }

    static void subsets(const FacetSet& v, int k, std::size_t from, std::vector<int>& pick,
                        int depth, std::set<FacetSet>& out) {
        if (depth == k) {
            out.insert(FacetSet(pick.begin(), pick.end()));
            return;
        }
        for (std::size_t i = from; i < v.size(); ++i) {
            pick[static_cast<std::size_t>(depth)] = v[i];
            subsets(v, k, i + 1, pick, depth + 1, out);
        }
    }

    std::string name_;
    int dim_;
    std::vector<std::string> facet_names_;
    std::vector<FacetSet> vertices_;
    std::vector<std::vector<bool>> adj_;
};

/// A face of P as a simple polytope in its own right, with the dictionary
/// back to the ambient polytope.
struct FacePolytope {
    SimplePolytope poly;              // the face, dimension dim(f)
    Face face;                        // ambient facet set of the face
    std::vector<int> ambient_facet;   // face facet index -> ambient facet index
    std::vector<int> ambient_vertex;  // face vertex index -> ambient vertex index

    int face_facet_of(int ambient) const {
        for (std::size_t i = 0; i < ambient_facet.size(); ++i)
            if (ambient_facet[i] == ambient) return static_cast<int>(i);
        throw DomainError("UnknownFacet", "facet does not meet the face transversely");
    }

    int face_vertex_of(int ambient) const {
        for (std::size_t i = 0; i < ambient_vertex.size(); ++i)
            if (ambient_vertex[i] == ambient) return static_cast<int>(i);
        throw DomainError("VertexNotInFace", "vertex does not lie on the face");
    }
};

/// Builds the face f of P as a simple polytope. Facets of the face are the
/// intersections with transverse facets (indexed in increasing ambient
/// order); vertices are the vertices of P lying on f.
inline FacePolytope face_polytope(const SimplePolytope& p, const Face& f) {
    FacetSet trans = p.transverse_facets(f);
    const int k = f.dim;
    std::vector<std::string> names;
    names.reserve(trans.size());
    for (int g : trans) names.push_back(p.facet_name(g));

    std::vector<FacetSet> verts;
    std::vector<int> ambient_vertex;
    for (int vi = 0; vi < p.vertex_count(); ++vi) {
        const auto& v = p.vertex(vi);
        if (!is_subset(f.facets, v)) continue;
        FacetSet local;
        for (std::size_t t = 0; t < trans.size(); ++t)
            if (std::binary_search(v.begin(), v.end(), trans[t])) local.push_back(static_cast<int>(t));
        verts.push_back(local);
        ambient_vertex.push_back(vi);
    }

    std::string fname = p.name() + ":";
    for (std::size_t i = 0; i < f.facets.size(); ++i)
        fname += (i ? "&" : "") + p.facet_name(f.facets[i]);

    SimplePolytope fp(fname, k, std::move(names), std::move(verts));
    // The constructor sorts vertices; recover the ambient order.
    std::vector<int> amb_sorted(ambient_vertex.size());
    {
        // rebuild mapping by matching facet sets
        std::vector<FacetSet> raw;
        for (int vi : ambient_vertex) {
            const auto& v = p.vertex(vi);
            FacetSet local;
            for (std::size_t t = 0; t < trans.size(); ++t)
                if (std::binary_search(v.begin(), v.end(), trans[t])) local.push_back(static_cast<int>(t));
            raw.push_back(local);
        }
        for (std::size_t i = 0; i < raw.size(); ++i) {
            auto idx = fp.vertex_index(raw[i]);
            amb_sorted[static_cast<std::size_t>(*idx)] = ambient_vertex[i];
        }
    }
    return FacePolytope{std::move(fp), f, trans, std::move(amb_sorted)};
}

/// Combinatorial isomorphism test (facet bijection carrying vertex sets to
/// vertex sets), by backtracking with degree pruning.
inline bool isomorphic(const SimplePolytope& a, const SimplePolytope& b) {
    if (a.dim() != b.dim() || a.facet_count() != b.facet_count() ||
        a.vertex_count() != b.vertex_count())
        return false;
    const int m = a.facet_count();

    auto facet_vertex_count = [](const SimplePolytope& p, int f) {
        int c = 0;
        for (const auto& v : p.vertices())
            if (std::binary_search(v.begin(), v.end(), f)) ++c;
        return c;
    };
    std::vector<int> da(static_cast<std::size_t>(m)), db(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        da[static_cast<std::size_t>(i)] = facet_vertex_count(a, i);
        db[static_cast<std::size_t>(i)] = facet_vertex_count(b, i);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::set<FacetSet> bverts(b.vertices().begin(), b.vertices().end());
    std::vector<int> map(static_cast<std::size_t>(m), -1);
    std::vector<bool> taken(static_cast<std::size_t>(m), false);

    // Check all fully-mapped vertex sets as we go.
    auto consistent = [&](int depth) {
        for (const auto& v : a.vertices()) {
            bool full = true;
            FacetSet img;
            for (int f : v) {
                if (map[static_cast<std::size_t>(f)] < 0) {
                    full = false;
                    break;
                }
                img.push_back(map[static_cast<std::size_t>(f)]);
            }
            if (!full) continue;
            std::sort(img.begin(), img.end());
            if (!bverts.count(img)) return false;
        }
        (void)depth;
        return true;
    };

    std::function<bool(int)> rec = [&](int f) -> bool {
        if (f == m) return true;
        for (int g = 0; g < m; ++g) {
            if (taken[static_cast<std::size_t>(g)]) continue;
            if (da[static_cast<std::size_t>(f)] != db[static_cast<std::size_t>(g)]) continue;
            bool ok = true;
            for (int f2 = 0; f2 < f && ok; ++f2)
                if (a.adjacent(f, f2) != b.adjacent(g, map[static_cast<std::size_t>(f2)])) ok = false;
            if (!ok) continue;
            map[static_cast<std::size_t>(f)] = g;
            taken[static_cast<std::size_t>(g)] = true;
            if (consistent(f) && rec(f + 1)) return true;
            map[static_cast<std::size_t>(f)] = -1;
            taken[static_cast<std::size_t>(g)] = false;
        }
        return false;
    };
    return rec(0);
}

}  // namespace smallcover

#endif  // SMALLCOVER_POLYTOPE_HPP
