// Acceptance suite: one pass/fail line per criterion. Exits nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "smallcover/smallcover.hpp"

using namespace smallcover;

namespace {

int g_failed_criteria = 0;

class Criterion {
public:
    Criterion(int number, std::string title) : number_(number), title_(std::move(title)) {
        start_ = std::chrono::steady_clock::now();
    }

    void check(bool ok, const std::string& detail) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 5) details_.push_back(detail);
    }

    ~Criterion() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start_)
                      .count();
        if (failures_ == 0) {
            std::printf("[PASS] criterion %2d: %s (%d checks, %lld ms)\n", number_, title_.c_str(),
                        checks_, static_cast<long long>(ms));
        } else {
            ++g_failed_criteria;
            std::printf("[FAIL] criterion %2d: %s (%d of %d checks failed, %lld ms)\n", number_,
                        title_.c_str(), failures_, checks_, static_cast<long long>(ms));
            for (const auto& d : details_) std::printf("       %s\n", d.c_str());
        }
    }

private:
    int number_;
    std::string title_;
    int checks_ = 0;
    int failures_ = 0;
    std::vector<std::string> details_;
    std::chrono::steady_clock::time_point start_;
};

const std::vector<std::string>& dim3_fixtures() {
    static const std::vector<std::string> v = {"simplex3", "cube",  "prism",
                                               "vc2",      "vc3",   "pentagonal-prism"};
    return v;
}

int anchor_on(const SimplePolytope& p, const Face& f) {
    for (int i = 0; i < p.vertex_count(); ++i)
        if (is_subset(f.facets, p.vertex(i))) return i;
    return -1;
}

SimplePolytope random_cut_polytope(const std::string& base, int cuts, std::mt19937& rng) {
    SimplePolytope p = fixtures::get(base).poly;
    for (int i = 0; i < cuts; ++i) p = vertex_cut(p, static_cast<int>(rng() % p.vertex_count()));
    return p;
}

std::string face_str(const SimplePolytope& p, const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.facets.size(); ++i)
        s += (i ? "," : "") + p.facet_name(f.facets[i]);
    return s + "}";
}

void criterion1() {
    Criterion c(1, "injectivity criterion agrees with the 3-belt test on facets");
    for (const auto& name : dim3_fixtures()) {
        auto fx = fixtures::get(name);
        for (int f = 0; f < fx.poly.facet_count(); ++f)
            c.check(is_pi1_injective(fx.poly, *fx.poly.face_of({f})) ==
                        facet_injectivity_via_belts(fx.poly, f),
                    name + " facet " + fx.poly.facet_name(f));
    }
    auto prism = fixtures::prism().poly;
    c.check(is_pi1_injective(prism, *prism.face_of({prism.facet_index("T0")})),
            "prism triangle T0 must be injective");
    c.check(is_pi1_injective(prism, *prism.face_of({prism.facet_index("T1")})),
            "prism triangle T1 must be injective");
    for (const char* q : {"Q1", "Q2", "Q3"}) {
        c.check(!is_pi1_injective(prism, *prism.face_of({prism.facet_index(q)})),
                std::string("prism quad ") + q + " must not be injective");
        c.check(!is_pi1_injective(
                    prism, *prism.face_of({prism.facet_index("T0"), prism.facet_index(q)})),
                std::string("prism edge T0&") + q + " must not be injective");
    }
}

void criterion2() {
    Criterion c(2, "kernel witnesses verify; bounded search clears injective faces");
    for (const auto& name : dim3_fixtures()) {
        auto fx = fixtures::get(name);
        const auto& p = fx.poly;
        const auto& lambda = *fx.coloring;
        for (const auto& f : p.proper_faces()) {
            int v = anchor_on(p, f);
            auto ind = induced_charfn(p, lambda, f, v);
            auto words = kernel_generators(p, lambda, f, v);
            const bool injective = is_pi1_injective(p, f);
            c.check(words.empty() == injective,
                    name + " " + face_str(p, f) + ": witness emptiness vs verdict");
            if (injective) {
                c.check(!find_kernel_word(p, lambda, f, v, 6).has_value(),
                        name + " " + face_str(p, f) + ": bounded search must be empty");
            } else {
                c.check(!words.empty(), name + " " + face_str(p, f) + ": missing witnesses");
                for (const auto& x : words) {
                    c.check(!embed_loop_word(ind.face.poly, ind.values, ind.anchor_in_face, x)
                                 .empty(),
                            name + " " + face_str(p, f) + ": witness trivial in the face group");
                    c.check(is_identity_in_pi1(p, lambda, v, push_inclusion(ind, x)),
                            name + " " + face_str(p, f) + ": witness survives in the cover");
                }
                auto found = find_kernel_word(p, lambda, f, v, 4);
                c.check(found.has_value(),
                        name + " " + face_str(p, f) + ": search misses the length-4 witness");
            }
        }
    }
}

void criterion3() {
    Criterion c(3, "embedding kills relators, label sum vanishes, exchange identities hold");
    std::mt19937 rng(1729);
    for (const auto& name : fixtures::names()) {
        auto fx = fixtures::get(name);
        const auto& p = fx.poly;
        const auto& lambda = *fx.coloring;
        const int v = 0;
        auto pres = build_presentation(p, lambda, v);
        for (const auto& rel : pres.relators)
            c.check(is_identity_in_pi1(p, lambda, v, rel), name + ": relator survives embedding");
        for (int trial = 0; trial < 1000; ++trial) {
            LoopWord w;
            const int len = static_cast<int>(rng() % 8);
            for (int i = 0; i < len; ++i)
                w.push_back({pres.generators[rng() % pres.generators.size()], rng() % 2 == 0});
            if (!label_sum(lambda, embed_loop_word(p, lambda, v, w)).is_zero()) {
                c.check(false, name + ": embedded word with nonzero label sum");
                break;
            }
        }
        c.check(true, name + ": random words scanned");

        const CoxeterGroup w(p);
        const int n = p.dim();
        const auto& vert = p.vertex(v);
        for (int j = 0; j < p.facet_count(); ++j)
            for (std::uint32_t gb = 0; gb < (1u << n); ++gb) {
                Gf2Vec g(gb, n);
                auto xi = [&](int jj, const Gf2Vec& gg) {
                    return kernel_generator_word(p, lambda, v, jj, gg);
                };
                c.check(label_sum(lambda, xi(j, g)).is_zero(), name + ": xi escapes the kernel");
                c.check(w.equal(concat({coset_rep_word(p, lambda, v, g), {j}}),
                                concat({xi(j, g), coset_rep_word(p, lambda, v, g + lambda.at(j))})),
                        name + ": exchange identity fails");
                c.check(w.is_identity(concat({xi(j, g), xi(j, g + lambda.at(j))})),
                        name + ": pairing identity fails");
                for (int j2 = 0; j2 < p.facet_count(); ++j2)
                    if (j2 != j && p.adjacent(j, j2))
                        c.check(w.equal(concat({xi(j, g), xi(j2, g + lambda.at(j))}),
                                        concat({xi(j2, g), xi(j, g + lambda.at(j2))})),
                                name + ": braid identity fails");
                for (int i : vert)
                    if (p.adjacent(i, j))
                        c.check(w.equal(xi(j, g), xi(j, g + lambda.at(i))),
                                name + ": anchor translation identity fails");
            }
    }
}

void criterion4() {
    Criterion c(4, "the circle and projective plane groups are recovered");
    auto interval = fixtures::interval();
    auto ipres = build_presentation(interval.poly, *interval.coloring, 0);
    c.check(abelianization_rank_z2(ipres) == 1, "interval: abelianization rank must be 1");
    auto it = tietze_reduce(interval.poly, *interval.coloring, ipres);
    c.check(it.generators.size() == 1, "interval: one generator after reduction");
    c.check(it.relators.empty(), "interval: no torsion relator pattern");

    auto tri = fixtures::triangle();
    int v = 0;
    auto tpres = build_presentation(tri.poly, *tri.coloring, v);
    auto tt = tietze_reduce(tri.poly, *tri.coloring, tpres);
    c.check(tt.generators.size() == 1, "triangle: single generator b");
    bool has_square = false;
    for (const auto& r : tt.relators)
        if (r.size() == 2 && r[0] == r[1]) has_square = true;
    c.check(has_square && tt.relators.size() == 1, "triangle: exactly the relator b^2");
    if (!tt.generators.empty()) {
        LoopWord b{{LoopGen{tt.generators[0].facet, tt.generators[0].label}, false}};
        LoopWord bb = b;
        bb.insert(bb.end(), b.begin(), b.end());
        c.check(!is_identity_in_pi1(tri.poly, *tri.coloring, v, b), "triangle: b embeds trivially");
        c.check(is_identity_in_pi1(tri.poly, *tri.coloring, v, bb),
                "triangle: b^2 fails to die");
    }
}

void criterion5() {
    Criterion c(5, "abelianization rank equals m - n on every fixture");
    for (const auto& name : fixtures::names()) {
        auto fx = fixtures::get(name);
        for (int v : {0, fx.poly.vertex_count() - 1}) {
            auto pres = build_presentation(fx.poly, *fx.coloring, v);
            c.check(abelianization_rank_z2(pres) == fx.poly.facet_count() - fx.poly.dim(),
                    name + ": rank != m - n");
        }
    }
}

void criterion6() {
    Criterion c(6, "cell census Euler characteristics");
    for (const auto& name : dim3_fixtures()) {
        auto p = fixtures::get(name).poly;
        for (int v = 0; v < p.vertex_count(); ++v)
            c.check(cell_census(p, v).euler == 0, name + ": chi must vanish in odd dimension");
    }
    for (const auto& name : {"square", "triangle"}) {
        auto p = fixtures::get(name).poly;
        auto h = p.h_vector();
        long long chi = 0;
        for (std::size_t i = 0; i < h.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * h[i];
        for (int v = 0; v < p.vertex_count(); ++v)
            c.check(cell_census(p, v).euler == chi,
                    std::string(name) + ": chi must match the h-vector");
    }
}

void criterion7() {
    Criterion c(7, "all faces injective iff the polytope is flag");
    for (const auto& name : fixtures::names()) {
        auto p = fixtures::get(name).poly;
        c.check(all_faces_injective(p) == p.is_flag(), name + ": equivalence fails");
    }
    std::mt19937 rng(40755);
    for (int trial = 0; trial < 50; ++trial) {
        const std::string base = trial % 2 == 0 ? "simplex3" : "cube";
        auto p = random_cut_polytope(base, 1 + static_cast<int>(rng() % 5), rng);
        c.check(all_faces_injective(p) == p.is_flag(),
                "random cut polytope over " + base + ": equivalence fails");
    }
}

void criterion8() {
    Criterion c(8, "an injective facet always exists in dimension 3");
    for (const auto& name : dim3_fixtures()) {
        auto p = fixtures::get(name).poly;
        try {
            c.check(facet_injectivity_via_belts(p, injective_facet_exists_3d(p)),
                    name + ": returned facet sits in a belt");
        } catch (const DomainError& e) {
            c.check(false, name + ": " + e.what());
        }
    }
    std::mt19937 rng(65537);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string base = trial % 2 == 0 ? "simplex3" : "cube";
        auto p = random_cut_polytope(base, static_cast<int>(rng() % 7), rng);
        try {
            c.check(facet_injectivity_via_belts(p, injective_facet_exists_3d(p)),
                    "random polytope: returned facet sits in a belt");
        } catch (const DomainError& e) {
            c.check(false, std::string("random polytope: ") + e.what());
        }
    }
}

void criterion9() {
    Criterion c(9, "real moment-angle connected-sum counts");
    c.check(rz_profile(fixtures::prism().poly).count == 1, "vc1 count must be 1");
    c.check(rz_profile(fixtures::get("vc2").poly).count == 5, "vc2 count must be 5");
    c.check(rz_profile(fixtures::get("vc3").poly).count == 17, "vc3 count must be 17");
    for (int k = 1; k <= 10; ++k)
        c.check(rz_summands_closed_form(k) == rz_summands_recurrence(k),
                "closed form deviates from the recurrence at k=" + std::to_string(k));

    int sampled = 0;
    for (const auto& name : dim3_fixtures()) {
        auto p = fixtures::get(name).poly;
        for (const auto& f : p.proper_faces()) {
            if (f.dim == 0 || sampled >= 20) continue;
            ++sampled;
            const long long l =
                static_cast<long long>(face_polytope(p, f).poly.facet_count());
            const long long expected = 1LL << (p.facet_count() + f.dim - p.dim() - l);
            c.check(rz_face_preimage_components(p, f) == expected,
                    name + " " + face_str(p, f) + ": component count deviates");
        }
    }
    c.check(sampled >= 20, "need at least 20 sampled faces");
}

void criterion10() {
    Criterion c(10, "curvature classification of the named fixtures");
    auto simplex = classify_curvature(fixtures::simplex3().poly);
    c.check(simplex.positive_scalar && simplex.positive_ricci_sectional,
            "simplex must carry positive scalar and positive ricci/sectional");
    auto prism = classify_curvature(fixtures::prism().poly);
    c.check(prism.positive_scalar && prism.nonneg_ricci_sectional && !prism.flat,
            "prism must carry positive scalar, nonneg ricci/sectional, and not be flat");
    auto cube = classify_curvature(fixtures::cube().poly);
    c.check(cube.flat && cube.nonneg_scalar && !cube.positive_scalar,
            "cube must be flat with nonneg scalar and no positive scalar");
    auto penta = classify_curvature(fixtures::pentagonal_prism().poly);
    c.check(!penta.nonneg_scalar, "pentagonal prism admits no nonneg scalar class");
}

void criterion11() {
    Criterion c(11, "normal form confluence and the adjacency square law");
    std::mt19937 rng(271828);
    for (const auto& name : fixtures::names()) {
        auto p = fixtures::get(name).poly;
        const CoxeterGroup w(p);
        int disagreements = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            CoxWord word;
            const int len = static_cast<int>(rng() % 12);
            for (int i = 0; i < len; ++i) word.push_back(static_cast<int>(rng() % p.facet_count()));
            // random deletion order
            CoxWord reduced = word;
            for (;;) {
                std::vector<std::pair<std::size_t, std::size_t>> pairs;
                for (std::size_t i = 0; i < reduced.size(); ++i)
                    for (std::size_t j = i + 1; j < reduced.size(); ++j) {
                        if (reduced[i] != reduced[j]) continue;
                        bool clear = true;
                        for (std::size_t t = i + 1; t < j && clear; ++t)
                            if (!w.commute(reduced[t], reduced[i])) clear = false;
                        if (clear) pairs.emplace_back(i, j);
                    }
                if (pairs.empty()) break;
                auto [i, j] = pairs[rng() % pairs.size()];
                reduced.erase(reduced.begin() + static_cast<long>(j));
                reduced.erase(reduced.begin() + static_cast<long>(i));
            }
            if (!(w.normal_form(word) == w.normal_form(reduced))) ++disagreements;
        }
        c.check(disagreements == 0, name + ": confluence disagreements");
        for (int a = 0; a < p.facet_count(); ++a)
            for (int b = 0; b < p.facet_count(); ++b)
                if (a != b)
                    c.check(w.squares_to_identity({a, b}) == p.adjacent(a, b),
                            name + ": square law fails on a facet pair");
    }
}

void criterion12() {
    Criterion c(12, "injectivity data is independent of the coloring");
    struct Pair {
        std::string name;
        CharFn first;
        CharFn second;
    };
    std::vector<Pair> pairs;
    pairs.push_back({"prism", *fixtures::prism().coloring, fixtures::prism_alt_coloring()});
    pairs.push_back({"cube", *fixtures::cube().coloring, fixtures::cube_alt_coloring()});
    for (const auto& pr : pairs) {
        auto p = fixtures::get(pr.name).poly;
        c.check(pr.first.values != pr.second.values, pr.name + ": colorings must differ");
        for (const auto& f : p.proper_faces()) {
            int v = anchor_on(p, f);
            const bool verdict = is_pi1_injective(p, f);
            for (const CharFn* lambda : {&pr.first, &pr.second}) {
                auto words = kernel_generators(p, *lambda, f, v);
                c.check(words.empty() == verdict,
                        pr.name + " " + face_str(p, f) + ": witnesses disagree with the verdict");
                auto ind = induced_charfn(p, *lambda, f, v);
                for (const auto& x : words) {
                    c.check(!embed_loop_word(ind.face.poly, ind.values, ind.anchor_in_face, x)
                                 .empty(),
                            pr.name + ": witness trivial in the face group");
                    c.check(is_identity_in_pi1(p, *lambda, v, push_inclusion(ind, x)),
                            pr.name + ": witness survives in the cover");
                }
            }
        }
    }
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    if (g_failed_criteria == 0) {
        std::printf("all 12 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria FAILED\n", g_failed_criteria);
    return 1;
}
