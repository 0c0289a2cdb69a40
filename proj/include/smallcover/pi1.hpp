// Fundamental groups of small covers.
//
// The presentation attaches one loop generator per (facet not through the
// anchor vertex, sheet label) pair, with three relator families: the
// involution pairing along each facet, the commuting square for adjacent
// facet pairs off the anchor, and label translation along anchor facets
// adjacent to the generator's facet. The embedding into the Coxeter group
// sends each loop generator to its distinguished kernel word; it is a
// monomorphism onto the kernel of the label-sum map, so identity of loop
// words is decided by reducing their images.

#ifndef SMALLCOVER_PI1_HPP
#define SMALLCOVER_PI1_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smallcover/charfn.hpp"
#include "smallcover/coxeter.hpp"
#include "smallcover/gf2.hpp"
#include "smallcover/polytope.hpp"

namespace smallcover {

/// Loop generator: a facet off the anchor vertex plus a sheet label.
struct LoopGen {
    int facet = 0;
    Gf2Vec label;

    friend bool operator==(const LoopGen&, const LoopGen&) = default;
    friend auto operator<=>(const LoopGen&, const LoopGen&) = default;
};

struct LoopLetter {
    LoopGen gen;
    bool inv = false;

    friend bool operator==(const LoopLetter&, const LoopLetter&) = default;
};

using LoopWord = std::vector<LoopLetter>;

inline LoopWord inverse(const LoopWord& w) {
    LoopWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, !it->inv});
    return out;
}

struct Presentation {
    int anchor = 0;     // vertex index of the underlying polytope
    int label_len = 0;  // sheet label length
    std::vector<LoopGen> generators;
    std::vector<LoopWord> relators;
};

/// Simplified presentation of pi_1 anchored at the given vertex.
/// Generator count is (m - n) * 2^n; the involution and translation
/// families are emitted once per unordered label pair.
inline Presentation build_presentation(const SimplePolytope& p, const CharFn& lambda, int vertex) {
    if (vertex < 0 || vertex >= p.vertex_count())
        throw DomainError("InvalidVertex", "vertex index out of range");
    const int n = p.dim();
    const auto& v = p.vertex(vertex);
    Presentation pres;
    pres.anchor = vertex;
    pres.label_len = n;

    FacetSet off;
    for (int j = 0; j < p.facet_count(); ++j)
        if (!std::binary_search(v.begin(), v.end(), j)) off.push_back(j);

    const std::uint32_t labels = std::uint32_t{1} << n;
    for (int j : off)
        for (std::uint32_t g = 0; g < labels; ++g)
            pres.generators.push_back({j, Gf2Vec(g, n)});

    auto gen = [&](int j, std::uint32_t g, bool inv = false) {
        return LoopLetter{LoopGen{j, Gf2Vec(g, n)}, inv};
    };

    // Involution pairing along each facet.
    for (int j : off) {
        const std::uint32_t lj = lambda.at(j).bits;
        for (std::uint32_t g = 0; g < labels; ++g)
            if (g < (g ^ lj)) pres.relators.push_back({gen(j, g), gen(j, g ^ lj)});
    }
    // Commuting squares for adjacent pairs off the anchor.
    for (std::size_t a = 0; a < off.size(); ++a)
        for (std::size_t b = a + 1; b < off.size(); ++b) {
            int j = off[a], j2 = off[b];
            if (!p.adjacent(j, j2)) continue;
            const std::uint32_t lj = lambda.at(j).bits, lj2 = lambda.at(j2).bits;
            for (std::uint32_t g = 0; g < labels; ++g)
                pres.relators.push_back(
                    {gen(j, g), gen(j2, g ^ lj), gen(j, g ^ lj2, true), gen(j2, g, true)});
        }
    // Label translation along anchor facets.
    for (int j : off)
        for (int i : v) {
            if (!p.adjacent(i, j)) continue;
            const std::uint32_t li = lambda.at(i).bits;
            for (std::uint32_t g = 0; g < labels; ++g)
                if (g < (g ^ li)) pres.relators.push_back({gen(j, g), gen(j, g ^ li, true)});
        }
    return pres;
}

/// Presentation of the facial submanifold over f, anchored at v (a vertex
/// of P on f), using the induced coloring.
inline Presentation face_presentation(const InducedCharFn& induced) {
    return build_presentation(induced.face.poly, induced.values, induced.anchor_in_face);
}

inline Presentation face_presentation(const SimplePolytope& p, const CharFn& lambda, const Face& f,
                                      int vertex) {
    return face_presentation(induced_charfn(p, lambda, f, vertex));
}

/// The monomorphism into the Coxeter group: each loop generator maps to its
/// distinguished kernel word, inverses to the reversed word. Returns the
/// reduced image.
inline CoxWord embed_loop_word(const SimplePolytope& p, const CharFn& lambda, int vertex,
                               const LoopWord& w) {
    CoxWord out;
    for (const auto& letter : w) {
        if (letter.gen.facet < 0 || letter.gen.facet >= p.facet_count())
            throw DomainError("UnknownGenerator", "letter references no facet");
        CoxWord piece =
            kernel_generator_word(p, lambda, vertex, letter.gen.facet, letter.gen.label);
        if (letter.inv) piece = reversed(piece);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return CoxeterGroup(p).reduce(out);
}

inline bool is_identity_in_pi1(const SimplePolytope& p, const CharFn& lambda, int vertex,
                               const LoopWord& w) {
    return embed_loop_word(p, lambda, vertex, w).empty();
}

/// Combinatorial injectivity criterion: every pair of transverse facets
/// that intersect each other must also meet the face. Independent of the
/// coloring.
inline bool is_pi1_injective(const SimplePolytope& p, const Face& f) {
    FacetSet trans = p.transverse_facets(f);
    for (std::size_t a = 0; a < trans.size(); ++a)
        for (std::size_t b = a + 1; b < trans.size(); ++b) {
            if (!p.adjacent(trans[a], trans[b])) continue;
            if (!p.is_face(set_union(f.facets, {trans[a], trans[b]}))) return false;
        }
    return true;
}

/// Facet form of the criterion: injective iff the facet sits in no 3-belt.
inline bool facet_injectivity_via_belts(const SimplePolytope& p, int facet) {
    for (const auto& belt : p.three_belts())
        if (std::binary_search(belt.begin(), belt.end(), facet)) return false;
    return true;
}

inline bool all_faces_injective(const SimplePolytope& p) {
    for (const auto& f : p.proper_faces())
        if (!is_pi1_injective(p, f)) return false;
    return true;
}

/// Some facet of a 3-polytope always avoids every 3-belt; returns the first
/// such facet.
inline int injective_facet_exists_3d(const SimplePolytope& p) {
    if (p.dim() != 3) throw DomainError("WrongDimension", "3-dimensional polytopes only");
    auto belts = p.three_belts();
    for (int f = 0; f < p.facet_count(); ++f) {
        bool clear = true;
        for (const auto& belt : belts)
            if (std::binary_search(belt.begin(), belt.end(), f)) {
                clear = false;
                break;
            }
        if (clear) return f;
    }
    throw DomainError("InternalInvariantViolation", "every facet lies in a 3-belt");
}

/// Explicit words generating the kernel of the inclusion-induced map on
/// pi_1, over the face presentation's generators. One word per violating
/// transverse pair: the length-4 square word when both facets miss the
/// anchor, and a length-2 word when one of them passes through it (its
/// image is still the square of the two face generators). Empty exactly
/// when the face is injective.
inline std::vector<LoopWord> kernel_generators(const SimplePolytope& p, const CharFn& lambda,
                                               const Face& f, int vertex) {
    const InducedCharFn induced = induced_charfn(p, lambda, f, vertex);
    const auto& v = p.vertex(vertex);
    auto at_anchor = [&](int facet) { return std::binary_search(v.begin(), v.end(), facet); };

    std::vector<LoopWord> out;
    const FacetSet& trans = induced.face.ambient_facet;
    for (std::size_t a = 0; a < trans.size(); ++a)
        for (std::size_t b = a + 1; b < trans.size(); ++b) {
            int fa = trans[a], fb = trans[b];
            if (!p.adjacent(fa, fb)) continue;
            if (p.is_face(set_union(f.facets, {fa, fb}))) continue;
            const int ja = static_cast<int>(a), jb = static_cast<int>(b);
            const Gf2Vec la = induced.values.at(ja), lb = induced.values.at(jb);
            const Gf2Vec zero = Gf2Vec::zero(f.dim);
            if (!at_anchor(fa) && !at_anchor(fb)) {
                out.push_back({{LoopGen{ja, zero}, false},
                               {LoopGen{jb, la}, false},
                               {LoopGen{ja, la + lb}, false},
                               {LoopGen{jb, lb}, false}});
            } else if (at_anchor(fa)) {
                out.push_back({{LoopGen{jb, la}, false}, {LoopGen{jb, lb}, false}});
            } else {
                out.push_back({{LoopGen{ja, lb}, false}, {LoopGen{ja, la}, false}});
            }
        }
    return out;
}

/// Relabels a word over the face presentation into the ambient
/// presentation: the facet goes to its ambient index and the label embeds
/// along the transverse basis at the anchor.
inline LoopWord push_inclusion(const InducedCharFn& induced, const LoopWord& w) {
    LoopWord out;
    for (const auto& letter : w) {
        if (letter.gen.facet < 0 ||
            letter.gen.facet >= static_cast<int>(induced.face.ambient_facet.size()))
            throw DomainError("UnknownGenerator", "letter references no face facet");
        out.push_back({LoopGen{induced.face.ambient_facet[static_cast<std::size_t>(letter.gen.facet)],
                               induced.embed(letter.gen.label)},
                       letter.inv});
    }
    return out;
}

/// Bounded search for a word over the face presentation that is nontrivial
/// in the face group but dies in the ambient group. BFS over states
/// (face image, ambient image), deduplicated by normal form, up to
/// max_len letters. Returns the witness word, or nullopt if none exists at
/// this depth.
inline std::optional<LoopWord> find_kernel_word(const SimplePolytope& p, const CharFn& lambda,
                                                const Face& f, int vertex, int max_len = 6) {
    const InducedCharFn induced = induced_charfn(p, lambda, f, vertex);
    const SimplePolytope& fpoly = induced.face.poly;
    const CoxeterGroup wf(fpoly);
    const CoxeterGroup wp(p);

    Presentation pres = face_presentation(induced);
    if (pres.generators.empty()) return std::nullopt;

    struct Move {
        LoopLetter letter;
        CoxWord face_piece;     // image in the face Coxeter group
        CoxWord ambient_piece;  // image of the pushed letter
    };
    std::vector<Move> moves;
    for (const auto& g : pres.generators)
        for (bool inv : {false, true}) {
            LoopLetter letter{g, inv};
            CoxWord fp = embed_loop_word(fpoly, induced.values, induced.anchor_in_face, {letter});
            CoxWord ap = embed_loop_word(p, lambda, vertex, push_inclusion(induced, {letter}));
            moves.push_back({letter, std::move(fp), std::move(ap)});
        }

    struct State {
        CoxWord face_word;
        CoxWord ambient_word;
        LoopWord word;
    };
    std::deque<State> queue;
    std::map<std::string, bool> seen;
    queue.push_back({{}, {}, {}});
    seen[""] = true;

    while (!queue.empty()) {
        State s = std::move(queue.front());
        queue.pop_front();
        if (static_cast<int>(s.word.size()) >= max_len) continue;
        for (const auto& mv : moves) {
            CoxWord fw = wf.reduce(concat({s.face_word, mv.face_piece}));
            CoxWord aw = wp.reduce(concat({s.ambient_word, mv.ambient_piece}));
            LoopWord word = s.word;
            word.push_back(mv.letter);
            if (!fw.empty() && aw.empty()) return word;
            std::string key = wf.normal_form(fw).key() + "#" + wp.normal_form(aw).key();
            if (seen.emplace(std::move(key), true).second)
                queue.push_back({std::move(fw), std::move(aw), std::move(word)});
        }
    }
    return std::nullopt;
}

/// GF(2) rank of the abelianized presentation: generators modulo the
/// relator images. Equals m - n for ambient presentations.
inline int abelianization_rank_z2(const Presentation& pres) {
    std::map<LoopGen, int> index;
    for (const auto& g : pres.generators) index.emplace(g, static_cast<int>(index.size()));
    const int ng = static_cast<int>(index.size());
    const std::size_t words = static_cast<std::size_t>((ng + 63) / 64);

    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& rel : pres.relators) {
        std::vector<std::uint64_t> row(words, 0);
        for (const auto& letter : rel) {
            auto it = index.find(letter.gen);
            if (it == index.end()) throw DomainError("UnknownGenerator", "relator uses unknown generator");
            row[static_cast<std::size_t>(it->second) / 64] ^= std::uint64_t{1}
                                                              << (it->second % 64);
        }
        rows.push_back(std::move(row));
    }
    // Gaussian elimination over GF(2).
    int rank = 0;
    for (int col = 0; col < ng; ++col) {
        const std::size_t w = static_cast<std::size_t>(col) / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        int pivot = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (rows[r][w] & bit) {
                pivot = static_cast<int>(r);
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == rank) continue;
            if (rows[r][w] & bit)
                for (std::size_t t = 0; t < words; ++t) rows[r][t] ^= rows[static_cast<std::size_t>(rank)][t];
        }
        ++rank;
    }
    return ng - rank;
}

/// Cell census of the one-vertex cell decomposition anchored at v: a single
/// 0-cell, and 2^d cells of dimension n-d for every d-dimensional face
/// avoiding v.
struct CellCensus {
    std::vector<long long> counts;  // counts[i] = number of i-cells
    long long euler = 0;
};

inline CellCensus cell_census(const SimplePolytope& p, int vertex) {
    const int n = p.dim();
    const auto& v = p.vertex(vertex);
    CellCensus out;
    out.counts.assign(static_cast<std::size_t>(n) + 1, 0);
    out.counts[0] = 1;
    for (int d = 0; d < n; ++d)
        for (const auto& f : p.faces_codim(n - d))
            if (!is_subset(f.facets, v))
                out.counts[static_cast<std::size_t>(n - d)] += (1LL << d);
    for (int i = 0; i <= n; ++i)
        out.euler += (i % 2 == 0 ? 1 : -1) * out.counts[static_cast<std::size_t>(i)];
    return out;
}

inline CellCensus cell_census(const SimplePolytope& p, const CharFn&, int vertex) {
    return cell_census(p, vertex);
}

/// Tietze-reduced presentation: generators identified by the translation
/// classes and the involution pairing are merged; a class paired with
/// itself becomes a single order-2 generator.
struct TietzeGen {
    int facet = 0;
    Gf2Vec label;  // canonical class representative
    bool self_inverse = false;
};

struct TietzePresentation {
    std::vector<TietzeGen> generators;
    std::vector<std::vector<std::pair<int, bool>>> relators;  // (generator index, inverted)
};

inline TietzePresentation tietze_reduce(const SimplePolytope& p, const CharFn& lambda,
                                        const Presentation& pres) {
    const auto& v = p.vertex(pres.anchor);
    const int n = pres.label_len;

    // Translation subspace per facet: labels of anchor facets adjacent to it.
    std::map<int, Gf2Subspace> trans;
    for (const auto& g : pres.generators)
        if (!trans.count(g.facet)) {
            Gf2Subspace s(n);
            for (int i : v)
                if (p.adjacent(i, g.facet)) s.insert(lambda.at(i));
            trans.emplace(g.facet, std::move(s));
        }

    TietzePresentation out;
    std::map<std::pair<int, Gf2Vec>, std::pair<int, bool>> to_gen;  // (facet, class rep) -> (index, inverted)
    for (const auto& [facet, sub] : trans) {
        std::set<Gf2Vec> reps;
        for (std::uint32_t g = 0; g < (std::uint32_t{1} << n); ++g)
            reps.insert(sub.coset_rep(Gf2Vec(g, n)));
        std::set<Gf2Vec> done;
        for (const auto& r : reps) {
            if (done.count(r)) continue;
            Gf2Vec r2 = sub.coset_rep(r + lambda.at(facet));
            done.insert(r);
            done.insert(r2);
            const bool self = (r == r2);
            const Gf2Vec canon = std::min(r, r2);
            const int idx = static_cast<int>(out.generators.size());
            out.generators.push_back({facet, canon, self});
            to_gen[{facet, canon}] = {idx, false};
            if (!self) to_gen[{facet, std::max(r, r2)}] = {idx, true};
            if (self) out.relators.push_back({{idx, false}, {idx, false}});
        }
    }

    auto map_letter = [&](const LoopLetter& l) {
        Gf2Vec rep = trans.at(l.gen.facet).coset_rep(l.gen.label);
        auto it = to_gen.find({l.gen.facet, rep});
        if (it == to_gen.end()) throw DomainError("UnknownGenerator", "letter outside the presentation");
        bool inverted = it->second.second != l.inv;  // class inversion xor letter sign
        if (out.generators[static_cast<std::size_t>(it->second.first)].self_inverse) inverted = false;
        return std::pair<int, bool>{it->second.first, inverted};
    };

    std::set<std::vector<std::pair<int, bool>>> seen(out.relators.begin(), out.relators.end());
    for (const auto& rel : pres.relators) {
        std::vector<std::pair<int, bool>> word;
        for (const auto& l : rel) {
            auto m = map_letter(l);
            if (!word.empty() && word.back().first == m.first && word.back().second != m.second &&
                !out.generators[static_cast<std::size_t>(m.first)].self_inverse)
                word.pop_back();
            else
                word.push_back(m);
        }
        if (word.empty()) continue;
        if (seen.insert(word).second) out.relators.push_back(std::move(word));
    }
    return out;
}

}  // namespace smallcover

#endif  // SMALLCOVER_PI1_HPP
