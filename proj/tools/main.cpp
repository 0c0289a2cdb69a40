// Command-line interface: validation reports, injectivity sweeps with
// kernel witnesses, presentation export, the 3-dimensional classification,
// vertex cuts and coloring search over polytope documents.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "smallcover/smallcover.hpp"

namespace sc = smallcover;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sc::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw sc::DomainError("IoError", "cannot write '" + path + "'");
    out << text;
}

std::vector<std::string> split_names(const std::string& spec) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

sc::Face parse_face(const sc::SimplePolytope& p, const std::string& spec) {
    sc::FacetSet s;
    for (const auto& n : split_names(spec)) s.push_back(p.facet_index(n));
    auto f = p.face_of(s);
    if (!f) throw sc::DomainError("NotAFace", "facets '" + spec + "' have empty intersection");
    return *f;
}

int parse_vertex(const sc::SimplePolytope& p, const std::string& spec) {
    sc::FacetSet s;
    for (const auto& n : split_names(spec)) s.push_back(p.facet_index(n));
    auto v = p.vertex_index(s);
    if (!v) throw sc::DomainError("InvalidVertex", "'" + spec + "' is not a vertex");
    return *v;
}

std::string face_label(const sc::SimplePolytope& p, const sc::Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.facets.size(); ++i)
        s += (i ? "," : "") + p.facet_name(f.facets[i]);
    return s + "}";
}

std::string vertex_label(const sc::SimplePolytope& p, int v) {
    return face_label(p, sc::Face{p.vertex(v), 0});
}

std::string vec_label(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

std::string loop_word_label(const sc::SimplePolytope& p, const sc::LoopWord& w) {
    if (w.empty()) return "(empty)";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += " ";
        s += "b{" + p.facet_name(l.gen.facet) + "," + l.gen.label.str() + "}";
        if (l.inv) s += "'";
    }
    return s;
}

std::string cox_word_label(const sc::SimplePolytope& p, const sc::CoxWord& w) {
    if (w.empty()) return "(identity)";
    std::string s;
    for (int x : w) {
        if (!s.empty()) s += " ";
        s += p.facet_name(x);
    }
    return s;
}

std::string sanitize(const std::string& name) {
    std::string s;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            s += c;
        else if (c == '+')
            s += 'p';
        else if (c == '-')
            s += 'm';
        else
            s += '_';
    }
    return s;
}

int first_vertex_on(const sc::SimplePolytope& p, const sc::Face& f) {
    for (int i = 0; i < p.vertex_count(); ++i)
        if (sc::is_subset(f.facets, p.vertex(i))) return i;
    throw sc::DomainError("InternalInvariantViolation", "face has no vertex");
}

void cmd_check(const std::string& file) {
    auto doc = sc::parse_document(slurp(file));
    const auto& p = doc.poly;
    std::cout << "name: " << p.name() << "\n";
    std::cout << "dim: " << p.dim() << "\n";
    std::cout << "facets: " << p.facet_count() << "\n";
    std::cout << "vertices: " << p.vertex_count() << "\n";
    std::cout << "f-vector: " << vec_label(p.f_vector()) << "\n";
    std::cout << "h-vector: " << vec_label(p.h_vector()) << "\n";
    std::cout << "b1: " << sc::betti1_z2(p) << "\n";
    std::cout << "flag: " << (p.is_flag() ? "yes" : "no") << "\n";
    auto belts = p.three_belts();
    std::cout << "belts: " << belts.size() << "\n";
    for (const auto& b : belts)
        std::cout << "belt: " << face_label(p, sc::Face{b, 0}) << "\n";
    if (doc.coloring) {
        std::cout << "charfn: valid\n";
        if (p.dim() == 3)
            std::cout << "orientable: " << (sc::is_orientable_3d(p, *doc.coloring) ? "yes" : "no")
                      << "\n";
    } else {
        std::cout << "charfn: none\n";
    }
}

void report_face(const sc::PolytopeDocument& doc, const sc::Face& f, bool witness) {
    const auto& p = doc.poly;
    bool inj = sc::is_pi1_injective(p, f);
    std::cout << "face " << face_label(p, f) << " (dim " << f.dim << "): "
              << (inj ? "injective" : "NOT injective") << "\n";
    if (!witness) return;
    if (!doc.coloring) throw sc::DomainError("MissingCharFn", "witnesses need a charfn");
    int v = first_vertex_on(p, f);
    auto ind = sc::induced_charfn(p, *doc.coloring, f, v);
    auto words = sc::kernel_generators(p, *doc.coloring, f, v);
    if (words.empty()) {
        std::cout << "  no witnesses (kernel trivial)\n";
        return;
    }
    for (const auto& x : words) {
        auto face_img = sc::embed_loop_word(ind.face.poly, ind.values, ind.anchor_in_face, x);
        auto amb_img = sc::embed_loop_word(p, *doc.coloring, v, sc::push_inclusion(ind, x));
        std::cout << "  witness: " << loop_word_label(ind.face.poly, x) << "\n";
        std::cout << "    face image: " << cox_word_label(ind.face.poly, face_img)
                  << (face_img.empty() ? "" : "  [nontrivial]") << "\n";
        std::cout << "    ambient image: " << cox_word_label(p, amb_img)
                  << (amb_img.empty() ? "  [dies in the cover]" : "") << "\n";
    }
}

void cmd_injective(const std::string& file, const std::string& face_spec, bool all, bool witness) {
    auto doc = sc::parse_document(slurp(file));
    if (all) {
        for (const auto& f : doc.poly.proper_faces()) report_face(doc, f, witness);
        return;
    }
    if (face_spec.empty())
        throw sc::DomainError("NotAFace", "give a comma-separated facet list or --all");
    report_face(doc, parse_face(doc.poly, face_spec), witness);
}

std::string gen_identifier(const sc::SimplePolytope& p, int facet, const sc::Gf2Vec& label) {
    return "b" + sanitize(p.facet_name(facet)) + "_" + label.str();
}

void print_plain(const sc::SimplePolytope& p, const sc::Presentation& pres,
                 const std::string& title) {
    std::cout << title << "\n";
    std::cout << "generators (" << pres.generators.size() << "):\n";
    for (const auto& g : pres.generators)
        std::cout << "  b{" << p.facet_name(g.facet) << "," << g.label.str() << "}\n";
    std::cout << "relators (" << pres.relators.size() << "):\n";
    for (const auto& r : pres.relators) std::cout << "  " << loop_word_label(p, r) << "\n";
}

void print_gap(const sc::SimplePolytope& p, const sc::Presentation& pres) {
    std::cout << "F := FreeGroup(";
    for (std::size_t i = 0; i < pres.generators.size(); ++i)
        std::cout << (i ? ", " : " ") << '"'
                  << gen_identifier(p, pres.generators[i].facet, pres.generators[i].label) << '"';
    std::cout << " );\n";
    std::cout << "AssignGeneratorVariables(F);;\n";
    std::cout << "rels := [\n";
    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        std::cout << "  ";
        const auto& rel = pres.relators[r];
        for (std::size_t i = 0; i < rel.size(); ++i) {
            std::cout << (i ? "*" : "") << gen_identifier(p, rel[i].gen.facet, rel[i].gen.label);
            if (rel[i].inv) std::cout << "^-1";
        }
        std::cout << (r + 1 < pres.relators.size() ? "," : "") << "\n";
    }
    std::cout << "];\n";
    std::cout << "G := F / rels;\n";
}

void print_plain_reduced(const sc::SimplePolytope& p, const sc::TietzePresentation& t,
                         const std::string& title) {
    std::cout << title << " (reduced)\n";
    std::cout << "generators (" << t.generators.size() << "):\n";
    for (const auto& g : t.generators)
        std::cout << "  b{" << p.facet_name(g.facet) << "," << g.label.str() << "}"
                  << (g.self_inverse ? "  [order 2]" : "") << "\n";
    std::cout << "relators (" << t.relators.size() << "):\n";
    for (const auto& r : t.relators) {
        std::cout << "  ";
        for (std::size_t i = 0; i < r.size(); ++i) {
            const auto& g = t.generators[static_cast<std::size_t>(r[i].first)];
            std::cout << (i ? " " : "") << "b{" << p.facet_name(g.facet) << "," << g.label.str()
                      << "}" << (r[i].second ? "'" : "");
        }
        std::cout << "\n";
    }
}

void print_gap_reduced(const sc::SimplePolytope& p, const sc::TietzePresentation& t) {
    std::cout << "F := FreeGroup(";
    for (std::size_t i = 0; i < t.generators.size(); ++i)
        std::cout << (i ? ", " : " ") << '"'
                  << gen_identifier(p, t.generators[i].facet, t.generators[i].label) << '"';
    std::cout << " );\n";
    std::cout << "AssignGeneratorVariables(F);;\n";
    std::cout << "rels := [\n";
    for (std::size_t r = 0; r < t.relators.size(); ++r) {
        std::cout << "  ";
        for (std::size_t i = 0; i < t.relators[r].size(); ++i) {
            const auto& g = t.generators[static_cast<std::size_t>(t.relators[r][i].first)];
            std::cout << (i ? "*" : "") << gen_identifier(p, g.facet, g.label);
            if (t.relators[r][i].second) std::cout << "^-1";
        }
        std::cout << (r + 1 < t.relators.size() ? "," : "") << "\n";
    }
    std::cout << "];\n";
    std::cout << "G := F / rels;\n";
}

void cmd_presentation(const std::string& file, const std::string& vertex_spec,
                      const std::string& face_spec, const std::string& format, bool reduced) {
    auto doc = sc::parse_document(slurp(file));
    if (!doc.coloring) throw sc::DomainError("MissingCharFn", "presentations need a charfn");
    const auto& p = doc.poly;

    if (!face_spec.empty()) {
        sc::Face f = parse_face(p, face_spec);
        int v = vertex_spec.empty() ? first_vertex_on(p, f) : parse_vertex(p, vertex_spec);
        auto ind = sc::induced_charfn(p, *doc.coloring, f, v);
        auto pres = sc::face_presentation(ind);
        std::string title = "pi1 presentation of the facial submanifold over " +
                            face_label(p, f) + " anchored at " + vertex_label(p, v);
        if (reduced) {
            auto t = sc::tietze_reduce(ind.face.poly, ind.values, pres);
            if (format == "gap")
                print_gap_reduced(ind.face.poly, t);
            else
                print_plain_reduced(ind.face.poly, t, title);
        } else if (format == "gap") {
            print_gap(ind.face.poly, pres);
        } else {
            print_plain(ind.face.poly, pres, title);
        }
        return;
    }

    int v = vertex_spec.empty() ? 0 : parse_vertex(p, vertex_spec);
    auto pres = sc::build_presentation(p, *doc.coloring, v);
    std::string title = "pi1 presentation over " + p.name() + " anchored at " + vertex_label(p, v);
    if (reduced) {
        auto t = sc::tietze_reduce(p, *doc.coloring, pres);
        if (format == "gap")
            print_gap_reduced(p, t);
        else
            print_plain_reduced(p, t, title);
    } else if (format == "gap") {
        print_gap(p, pres);
    } else {
        print_plain(p, pres, title);
    }
}

void cmd_classify(const std::string& file) {
    auto doc = sc::parse_document(slurp(file));
    const auto& p = doc.poly;
    if (p.dim() != 3) throw sc::DomainError("WrongDimension", "classification is dimension-3 only");
    auto c = sc::classify_curvature(p);
    std::cout << "polytope: " << p.name() << " (m=" << p.facet_count() << ")\n";
    std::cout << "sectional/ricci > 0: " << (c.positive_ricci_sectional ? "yes" : "no") << "\n";
    std::cout << "scalar > 0: " << (c.positive_scalar ? "yes" : "no") << "\n";
    std::cout << "sectional/ricci >= 0: " << (c.nonneg_ricci_sectional ? "yes" : "no") << "\n";
    std::cout << "scalar >= 0: " << (c.nonneg_scalar ? "yes" : "no") << "\n";
    std::cout << "flat: " << (c.flat ? "yes" : "no") << "\n";
    auto rank = sc::simplex_cut_rank(p);
    if (rank)
        std::cout << "vc rank: " << *rank << "\n";
    else
        std::cout << "vc rank: none\n";
    auto rz = sc::rz_profile(p);
    switch (rz.kind) {
        case sc::RZProfile::Kind::torus: std::cout << "RZ: torus\n"; break;
        case sc::RZProfile::Kind::sphere: std::cout << "RZ: sphere\n"; break;
        case sc::RZProfile::Kind::connected_sum_s2xs1:
            std::cout << "RZ: " << rz.count << " x S2xS1\n";
            break;
        case sc::RZProfile::Kind::other: std::cout << "RZ: other\n"; break;
    }
    if (doc.coloring && sc::is_orientable_3d(p, *doc.coloring)) {
        auto s = sc::orientable_cover_summary(p, *doc.coloring);
        switch (s.kind) {
            case sc::CoverSummary::Kind::real_bott:
                std::cout << "cover: real Bott manifold\n";
                break;
            case sc::CoverSummary::Kind::rp3_connected_sum:
                std::cout << "cover: " << s.rp3_copies << " x RP3\n";
                break;
            case sc::CoverSummary::Kind::unclassified:
                std::cout << "cover: unclassified\n";
                break;
        }
    } else if (doc.coloring) {
        std::cout << "cover: coloring not orientable\n";
    }
}

void cmd_cut(const std::string& file, const std::string& vertex_spec, const std::string& out) {
    auto doc = sc::parse_document(slurp(file));
    int v = parse_vertex(doc.poly, vertex_spec);
    auto cut = sc::vertex_cut(doc.poly, v);
    // the old coloring does not extend over the new facet in general
    spill(out, sc::write_document(cut));
    std::cout << "wrote " << out << " (m=" << cut.facet_count() << ", charfn dropped)\n";
}

void cmd_color(const std::string& file, const std::string& out) {
    auto doc = sc::parse_document(slurp(file));
    auto coloring = sc::find_charfn(doc.poly);
    if (!coloring) throw sc::DomainError("ColoringExhausted", "no valid charfn exists");
    spill(out, sc::write_document(doc.poly, coloring));
    std::cout << "wrote " << out << " (charfn found)\n";
}

void cmd_fixture(const std::string& name, const std::string& out) {
    auto fx = sc::fixtures::get(name);
    std::string text = sc::write_document(fx.poly, fx.coloring);
    if (out.empty())
        std::cout << text;
    else {
        spill(out, text);
        std::cout << "wrote " << out << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"small cover toolkit: fundamental groups and classification over simple polytopes"};
    app.require_subcommand(1);

    std::string file, face_spec, vertex_spec, out, format = "plain", name;
    bool all = false, witness = false, reduced = false;

    auto* check = app.add_subcommand("check", "validate a document and print its combinatorics");
    check->add_option("file", file)->required();

    auto* injective = app.add_subcommand("injective", "pi1-injectivity of facial submanifolds");
    injective->add_option("file", file)->required();
    injective->add_option("face", face_spec, "comma-separated facet names");
    injective->add_flag("--all", all, "sweep every proper face");
    injective->add_flag("--witness", witness, "print kernel witnesses and their images");

    auto* present = app.add_subcommand("presentation", "export a pi1 presentation");
    present->add_option("file", file)->required();
    present->add_option("--vertex", vertex_spec, "anchor vertex as comma-separated facet names");
    present->add_option("--face", face_spec, "facial submanifold instead of the total space");
    present->add_option("--format", format)->check(CLI::IsMember({"plain", "gap"}));
    present->add_flag("--reduced", reduced, "apply the Tietze pass");

    auto* classify = app.add_subcommand("classify", "3-dimensional curvature classification");
    classify->add_option("file", file)->required();

    auto* cut = app.add_subcommand("cut", "apply a vertex cut");
    cut->add_option("file", file)->required();
    cut->add_option("vertex", vertex_spec)->required();
    cut->add_option("out", out)->required();

    auto* color = app.add_subcommand("color", "search for a valid charfn");
    color->add_option("file", file)->required();
    color->add_option("out", out)->required();

    auto* fixture = app.add_subcommand("fixture", "emit a built-in fixture document");
    fixture->add_option("name", name)->required();
    fixture->add_option("-o,--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*check) cmd_check(file);
        if (*injective) cmd_injective(file, face_spec, all, witness);
        if (*present) cmd_presentation(file, vertex_spec, face_spec, format, reduced);
        if (*classify) cmd_classify(file);
        if (*cut) cmd_cut(file, vertex_spec, out);
        if (*color) cmd_color(file, out);
        if (*fixture) cmd_fixture(name, out);
    } catch (const sc::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const sc::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
