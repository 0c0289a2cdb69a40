// Word arithmetic in the right-angled Coxeter group of a simple polytope:
// one involutive generator per facet, commuting exactly for adjacent facets.
//
// Reduction: scan letters left to right keeping a reduced prefix; a new
// letter cancels against an earlier equal letter when everything between
// them commutes with it, otherwise it is appended. The deletion condition
// makes the greedy pass reach minimal length; the layered normal form below
// is the Cartier-Foata decomposition with index-sorted layers, so two words
// are equal in the group iff their normal forms are identical. Confluence is
// cross-checked by a randomized property test rather than assumed.

#ifndef SMALLCOVER_COXETER_HPP
#define SMALLCOVER_COXETER_HPP

#include <string>
#include <vector>

#include "smallcover/charfn.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

using CoxWord = std::vector<int>;  // facet indices; every generator is an involution

inline CoxWord concat(std::initializer_list<CoxWord> parts) {
    CoxWord out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

inline CoxWord reversed(CoxWord w) {
    std::reverse(w.begin(), w.end());
    return w;
}

/// Cartier-Foata layers of a reduced word: each layer is a set of pairwise
/// commuting letters (sorted by index), and every letter is blocked by some
/// letter of the previous layer.
struct NormalForm {
    std::vector<std::vector<int>> layers;

    bool is_identity() const { return layers.empty(); }

    int length() const {
        int n = 0;
        for (const auto& l : layers) n += static_cast<int>(l.size());
        return n;
    }

    CoxWord word() const {
        CoxWord out;
        for (const auto& l : layers) out.insert(out.end(), l.begin(), l.end());
        return out;
    }

    std::string key() const {
        std::string s;
        for (const auto& l : layers) {
            for (int x : l) s += std::to_string(x) + ",";
            s += "|";
        }
        return s;
    }

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

class CoxeterGroup {
public:
    explicit CoxeterGroup(const SimplePolytope& p) : p_(&p) {}

    const SimplePolytope& polytope() const { return *p_; }

    /// Letters x, y are independent (commute) iff distinct and adjacent.
    bool commute(int x, int y) const { return x != y && p_->adjacent(x, y); }

    CoxWord reduce(const CoxWord& w) const {
        CoxWord out;
        out.reserve(w.size());
        for (int x : w) {
            bool cancelled = false;
            for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
                int y = out[static_cast<std::size_t>(i)];
                if (y == x) {
                    out.erase(out.begin() + i);
                    cancelled = true;
                    break;
                }
                if (!commute(y, x)) break;
            }
            if (!cancelled) out.push_back(x);
        }
        return out;
    }

    NormalForm normal_form(const CoxWord& w) const {
        CoxWord r = reduce(w);
        NormalForm nf;
        std::vector<int> level(r.size(), 1);
        int max_level = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (!commute(r[j], r[i]) || r[j] == r[i])
                    level[i] = std::max(level[i], level[j] + 1);
            max_level = std::max(max_level, level[i]);
        }
        nf.layers.resize(static_cast<std::size_t>(max_level));
        for (std::size_t i = 0; i < r.size(); ++i)
            nf.layers[static_cast<std::size_t>(level[i] - 1)].push_back(r[i]);
        for (auto& l : nf.layers) std::sort(l.begin(), l.end());
        return nf;
    }

    bool equal(const CoxWord& a, const CoxWord& b) const { return normal_form(a) == normal_form(b); }

    bool is_identity(const CoxWord& w) const { return reduce(w).empty(); }

    bool squares_to_identity(const CoxWord& w) const { return is_identity(concat({w, w})); }

private:
    const SimplePolytope* p_;
};

/// Image in (Z_2)^n: the homomorphism sending each generator to the label
/// of its facet.
inline Gf2Vec label_sum(const CharFn& lambda, const CoxWord& w) {
    Gf2Vec out = Gf2Vec::zero(lambda.dim);
    for (int x : w) out = out + lambda.at(x);
    return out;
}

/// Coset representative word for g at the anchor vertex: the facets at v
/// whose basis coordinates appear in g, listed in increasing index order.
/// g is first re-expressed in the basis formed by the labels at v. The
/// result squares to the identity and has label_sum g.
inline CoxWord coset_rep_word(const SimplePolytope& p, const CharFn& lambda, int vertex,
                              const Gf2Vec& g) {
    const auto& v = p.vertex(vertex);
    if (g.len != p.dim()) throw DomainError("WrongLength", "label of wrong length");
    std::vector<Gf2Vec> cols;
    for (int f : v) cols.push_back(lambda.at(f));
    auto c = gf2_solve(cols, g);
    CoxWord out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (c[i]) out.push_back(v[i]);
    return out;
}

/// The distinguished kernel word for (facet, g): coset_rep(g) * s_facet *
/// coset_rep(g + label(facet)). Reduces to the identity when the facet
/// passes through the anchor vertex.
inline CoxWord kernel_generator_word(const SimplePolytope& p, const CharFn& lambda, int vertex,
                                     int facet, const Gf2Vec& g) {
    return concat({coset_rep_word(p, lambda, vertex, g),
                   {facet},
                   coset_rep_word(p, lambda, vertex, g + lambda.at(facet))});
}

}  // namespace smallcover

#endif  // SMALLCOVER_COXETER_HPP
