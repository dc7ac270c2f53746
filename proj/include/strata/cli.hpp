#pragma once

// Command-line front end over the enumeration, classification, node-scan,
// and classifying-space modules. Text and JSON output are both
// deterministic: identical invocations produce identical bytes. Exit codes:
// 0 success, 2 usage or input error, 3 model invariant violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "strata/classifying_space.hpp"
#include "strata/nodes.hpp"
#include "strata/solver.hpp"

namespace strata {

enum class OutputFormat { Text, Json };

namespace cli_detail {

using Json = nlohmann::ordered_json;

inline std::string int_list(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

// free coordinates, then "|" and the torsion coordinates when present
inline std::string coh2_str(const CohClass2& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.free.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.free[i]);
    }
    if (!a.tors.empty()) {
        s += '|';
        for (size_t i = 0; i < a.tors.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(a.tors[i]);
        }
    }
    return s + ")";
}

inline std::string label_str(const OrbitTypeLabel& L) {
    std::string s = "xi=" + int_list(L.xi.comps) + " alpha2=[";
    for (size_t i = 0; i < L.alpha2.size(); ++i) {
        if (i) s += ',';
        s += coh2_str(L.alpha2[i]);
    }
    s += "] alpha4=" + int_list(L.alpha4);
    return s;
}

inline std::string rational_str(const Rational& v) {
    std::string s = std::to_string(v.numerator());
    if (v.denominator() != 1) s += "/" + std::to_string(v.denominator());
    return s;
}

inline std::string pi_str(const std::vector<HomotopyGroupDescription>& pi) {
    std::string s = "[";
    for (size_t i = 0; i < pi.size(); ++i) {
        if (i) s += ", ";
        s += pi[i].group().str();
    }
    return s + "]";
}

inline std::string relation_str(const RingPresentation& p, const RingRelation& rel) {
    std::string s;
    for (size_t t = 0; t < rel.monomials.size(); ++t)
        s += p.monomial_str(rel.monomials[t], t == 0);
    return s;
}

inline Json coh2_json(const CohClass2& a) {
    return Json{{"free", a.free}, {"tors", a.tors}};
}

inline Json signature_json(const HoweSignature& j) {
    return Json{{"k", j.k}, {"m", j.m}};
}

inline Json pi_json(const std::vector<HomotopyGroupDescription>& pi) {
    Json arr = Json::array();
    for (const HomotopyGroupDescription& p : pi) arr.push_back(p.group().str());
    return arr;
}

inline Json stratum_json(const Stratum& st, const OrbitTypeLabel& L,
                         const ManifoldModel& model) {
    Json rec;
    rec["J"] = signature_json(st.j);
    Json a2 = Json::array();
    for (const CohClass2& a : L.alpha2) a2.push_back(coh2_json(a));
    rec["alpha2"] = std::move(a2);
    rec["alpha4"] = L.alpha4;
    rec["xi"] = L.xi.comps;
    rec["kind"] = to_string(st.solutions.kind);
    rec["family_rank"] = st.solutions.family_rank;
    rec["dim"] = st.derived.dim;
    rec["pi"] = pi_json(st.pi);
    if (model.dim == 2)
        rec["nodal"] = is_node(L, model);
    else
        rec["nodal"] = nullptr;
    return rec;
}

// marker record for a sector with no solutions at this signature
inline Json empty_stratum_json(const Stratum& st) {
    Json rec;
    rec["J"] = signature_json(st.j);
    rec["alpha2"] = Json::array();
    rec["alpha4"] = Json::array();
    rec["xi"] = Json::array();
    rec["kind"] = to_string(st.solutions.kind);
    rec["family_rank"] = st.solutions.family_rank;
    rec["dim"] = st.derived.dim;
    rec["pi"] = pi_json(st.pi);
    rec["nodal"] = nullptr;
    return rec;
}

// left-aligned columns separated by two spaces, no trailing padding
inline void print_table(const std::vector<std::vector<std::string>>& rows,
                        std::ostream& out) {
    std::vector<size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) line += "  ";
            line += row[c];
            if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
        }
        out << line << "\n";
    }
}

}  // namespace cli_detail

struct EnumerateRequest {
    Int n = 1;
    bool classes = false;
};

struct ClassifyRequest {
    Int n = 1;
    ManifoldModel model;
    Int c2 = 0;
    Int bound = 10;
};

struct NodesRequest {
    HoweSignature j;
    Int genus = 1;
    Int bound = 10;
};

struct BsujRequest {
    HoweSignature j;
    std::string coefficients = "z";  // "z" or "zg"
};

inline int cmd_enumerate(const EnumerateRequest& req, OutputFormat format,
                         std::ostream& out) {
    std::vector<HoweSignature> list =
        req.classes ? enumerate_classes(req.n) : enumerate_signatures(req.n);
    if (format == OutputFormat::Text) {
        for (const HoweSignature& j : list) out << j.str() << "\n";
        return 0;
    }
    cli_detail::Json doc;
    doc["n"] = req.n;
    doc["classes"] = req.classes;
    doc["count"] = list.size();
    cli_detail::Json arr = cli_detail::Json::array();
    for (const HoweSignature& j : list) arr.push_back(j.str());
    doc["signatures"] = std::move(arr);
    out << doc.dump(2) << "\n";
    return 0;
}

inline int cmd_classify(const ClassifyRequest& req, OutputFormat format,
                        std::ostream& out) {
    std::vector<Stratum> catalog =
        classify(req.n, req.model, BundleSector{{req.c2}}, req.bound);

    auto count_str = [](const Stratum& st) -> std::string {
        if (st.solutions.kind == SolutionKind::InfiniteFamily)
            return "infinite(rank=" + std::to_string(st.solutions.family_rank) + ")";
        return std::to_string(st.solutions.labels.size());
    };
    auto shown = [&](const Stratum& st) {
        size_t cap = static_cast<size_t>(req.bound);
        return st.solutions.kind == SolutionKind::InfiniteFamily
                   ? std::min(st.solutions.labels.size(), cap)
                   : st.solutions.labels.size();
    };

    if (format == OutputFormat::Text) {
        out << "manifold: " << req.model.name << "\n";
        out << "n: " << req.n << "\n";
        out << "c2: " << req.c2 << "\n";
        out << "bound: " << req.bound << "\n";
        for (const Stratum& st : catalog) {
            out << "J = " << st.j.str() << "  dim = " << st.derived.dim
                << "  g = " << st.derived.g << "\n";
            out << "  pi = " << cli_detail::pi_str(st.pi) << "\n";
            out << "  kind: " << to_string(st.solutions.kind) << "\n";
            out << "  classes: " << count_str(st) << "\n";
            size_t show = shown(st);
            if (st.solutions.kind == SolutionKind::InfiniteFamily)
                out << "  representatives (showing " << show << " of "
                    << st.solutions.labels.size() << " listed within coordinate bound "
                    << req.bound << "):\n";
            for (size_t i = 0; i < show; ++i) {
                out << "    " << cli_detail::label_str(st.solutions.labels[i]);
                if (req.model.dim == 2)
                    out << (is_node(st.solutions.labels[i], req.model) ? " nodal=yes"
                                                                       : " nodal=no");
                out << "\n";
            }
            if (st.solutions.kind == SolutionKind::InfiniteFamily)
                out << "  ... the family continues beyond the listed representatives\n";
            if (!st.solutions.note.empty())
                out << "  note: " << st.solutions.note << "\n";
        }
        out << "counts:\n";
        for (const Stratum& st : catalog)
            out << "  " << st.j.str() << " = " << count_str(st) << "\n";
        return 0;
    }

    cli_detail::Json doc;
    doc["manifold"] = req.model.name;
    doc["n"] = req.n;
    doc["c2"] = req.c2;
    cli_detail::Json strata = cli_detail::Json::array();
    for (const Stratum& st : catalog) {
        if (st.solutions.labels.empty()) {
            strata.push_back(cli_detail::empty_stratum_json(st));
            continue;
        }
        size_t show = shown(st);
        for (size_t i = 0; i < show; ++i)
            strata.push_back(cli_detail::stratum_json(st, st.solutions.labels[i], req.model));
    }
    doc["strata"] = std::move(strata);
    cli_detail::Json counts;
    for (const Stratum& st : catalog) {
        if (st.solutions.kind == SolutionKind::InfiniteFamily)
            counts[st.j.str()] = count_str(st);
        else
            counts[st.j.str()] = st.solutions.labels.size();
    }
    doc["counts"] = std::move(counts);
    out << doc.dump(2) << "\n";
    return 0;
}

inline int cmd_nodes(const NodesRequest& req, OutputFormat format, std::ostream& out) {
    SignatureDerived d = derived_data(req.j);
    std::vector<NodeStratum> rows = enumerate_strata(req.j, req.genus, req.bound);

    // rows share (charge, nodal, coefficient) across the xi scan; group them
    struct Group {
        Vec charge;
        bool nodal;
        Rational coefficient;
        Int xi_sectors;
    };
    std::vector<Group> groups;
    for (const NodeStratum& row : rows) {
        if (groups.empty() || groups.back().charge != row.charge)
            groups.push_back(Group{row.charge, row.nodal, row.coefficient, 0});
        ++groups.back().xi_sectors;
    }

    if (format == OutputFormat::Text) {
        out << "J = " << req.j.str() << "  genus = " << req.genus << "  g = " << d.g
            << "  bound = " << req.bound << "\n";
        std::vector<std::vector<std::string>> table;
        table.push_back({"charge", "coefficient", "nodal", "xi-sectors"});
        for (const Group& grp : groups)
            table.push_back({cli_detail::int_list(grp.charge),
                             cli_detail::rational_str(grp.coefficient),
                             grp.nodal ? "yes" : "no", std::to_string(grp.xi_sectors)});
        cli_detail::print_table(table, out);
        out << "nodal flag: sufficient criterion (nonzero charge)\n";
        return 0;
    }

    cli_detail::Json doc;
    doc["J"] = req.j.str();
    doc["genus"] = req.genus;
    doc["g"] = d.g;
    doc["bound"] = req.bound;
    cli_detail::Json arr = cli_detail::Json::array();
    for (const Group& grp : groups) {
        cli_detail::Json rec;
        rec["charge"] = grp.charge;
        rec["coefficient"] = cli_detail::rational_str(grp.coefficient);
        rec["nodal"] = grp.nodal;
        rec["xi_sectors"] = grp.xi_sectors;
        arr.push_back(std::move(rec));
    }
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << "\n";
    return 0;
}

inline int cmd_bsuj(const BsujRequest& req, OutputFormat format, std::ostream& out) {
    PostnikovDecomposition p = postnikov5(req.j);
    RingPresentation ring =
        req.coefficients == "zg" ? modg_ring(req.j) : integral_ring(req.j);
    std::string ring_header =
        req.coefficients == "zg" ? "ring (Z_g coefficients, g = " + std::to_string(p.g) + ")"
                                 : "ring (Z coefficients)";

    if (format == OutputFormat::Text) {
        out << "J = " << req.j.str() << "\n";
        out << "postnikov5 = " << p.str() << "\n";
        out << "factors: K(Z_g,1) x " << p.km_zg1_count << ", K(Z,2) x " << p.kz2_count
            << ", K(Z,4) x " << p.kz4_count << " (g = " << p.g << ")\n";
        out << ring_header << ": " << ring.str() << "\n";
        if (!ring.note.empty()) out << "note: " << ring.note << "\n";
        return 0;
    }

    cli_detail::Json doc;
    doc["J"] = req.j.str();
    cli_detail::Json post;
    post["g"] = p.g;
    post["kzg1_factors"] = p.km_zg1_count;
    post["kz2_factors"] = p.kz2_count;
    post["kz4_factors"] = p.kz4_count;
    post["space"] = p.str();
    doc["postnikov"] = std::move(post);
    doc["coefficients"] = req.coefficients;
    cli_detail::Json ring_doc;
    ring_doc["coefficient_ring"] = ring.coefficient_ring;
    cli_detail::Json gens = cli_detail::Json::array();
    for (const RingGenerator& gen : ring.generators)
        gens.push_back(cli_detail::Json{{"name", gen.name}, {"degree", gen.degree}});
    ring_doc["generators"] = std::move(gens);
    cli_detail::Json rels = cli_detail::Json::array();
    for (const RingRelation& rel : ring.relations)
        rels.push_back(cli_detail::relation_str(ring, rel));
    ring_doc["relations"] = std::move(rels);
    ring_doc["str"] = ring.str();
    ring_doc["note"] = ring.note;
    doc["ring"] = std::move(ring_doc);
    out << doc.dump(2) << "\n";
    return 0;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"exact classification of gauge orbit strata for SU(n) bundles",
                 "strata"};
    app.require_subcommand(0, 1);

    Int bound = 10;
    std::string format = "text";
    std::string model_file;
    app.add_option("--bound", bound, "coordinate bound for listings (default 10)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--model-file", model_file, "JSON manifold model file");

    CLI::App* c_enum = app.add_subcommand("enumerate", "list isotropy signatures of SU(n)");
    c_enum->fallthrough();
    Int en_n = 1;
    bool en_classes = false;
    c_enum->add_option("n", en_n, "rank parameter of SU(n)")->required();
    c_enum->add_flag("--classes", en_classes, "conjugation classes only");

    CLI::App* c_classify = app.add_subcommand("classify", "classify strata on a manifold");
    c_classify->fallthrough();
    Int cl_n = 1;
    std::string cl_manifold;
    Vec cl_params;
    Int cl_c2 = 0;
    c_classify->add_option("--n", cl_n, "rank parameter of SU(n)")->required();
    c_classify->add_option("--manifold", cl_manifold,
                           "catalog name: S4, S2xS2, T4, LensP3xS1, Sigma");
    c_classify->add_option("--params", cl_params, "catalog parameters")->delimiter(',');
    c_classify->add_option("--c2", cl_c2, "second Chern number of the sector");

    CLI::App* c_nodes = app.add_subcommand("nodes", "node scan over a genus-s surface");
    c_nodes->fallthrough();
    Int nd_n = 0;
    std::string nd_j;
    Int nd_genus = 1;
    c_nodes->add_option("--n", nd_n, "rank parameter (consistency check)");
    c_nodes->add_option("--J", nd_j, "isotropy signature k1,..,kr|m1,..,mr")->required();
    c_nodes->add_option("--genus", nd_genus, "genus of the surface (default 1)");

    CLI::App* c_bsuj = app.add_subcommand("bsuj", "classifying-space data for one signature");
    c_bsuj->fallthrough();
    std::string bs_j;
    std::string bs_coeff = "z";
    c_bsuj->add_option("--J", bs_j, "isotropy signature k1,..,kr|m1,..,mr")->required();
    c_bsuj->add_option("--coefficients", bs_coeff, "z or zg")
        ->check(CLI::IsMember({"z", "zg"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    OutputFormat fmt = format == "json" ? OutputFormat::Json : OutputFormat::Text;

    try {
        if (app.got_subcommand(c_enum))
            return cmd_enumerate(EnumerateRequest{en_n, en_classes}, fmt, out);
        if (app.got_subcommand(c_classify)) {
            ClassifyRequest req;
            req.n = cl_n;
            req.c2 = cl_c2;
            req.bound = bound;
            if (!model_file.empty()) {
                std::ifstream in(model_file);
                if (!in)
                    throw std::invalid_argument("cannot open model file '" + model_file +
                                                "'");
                std::ostringstream text;
                text << in.rdbuf();
                req.model = load_manifold(text.str());
            } else if (!cl_manifold.empty()) {
                req.model = builtin_manifold(cl_manifold, cl_params);
            } else {
                throw std::invalid_argument("classify needs --manifold or --model-file");
            }
            return cmd_classify(req, fmt, out);
        }
        if (app.got_subcommand(c_nodes)) {
            HoweSignature j = HoweSignature::parse(nd_j);
            if (nd_n != 0 && nd_n != j.n())
                throw std::invalid_argument("--n does not match the signature (n = " +
                                            std::to_string(j.n()) + ")");
            return cmd_nodes(NodesRequest{j, nd_genus, bound}, fmt, out);
        }
        if (app.got_subcommand(c_bsuj))
            return cmd_bsuj(BsujRequest{HoweSignature::parse(bs_j), bs_coeff}, fmt, out);
    } catch (const ModelInvariantError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const ModelSchemaError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << app.help();
    return 2;
}

}  // namespace strata
