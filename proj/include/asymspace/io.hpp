#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "asymspace/extend.hpp"
#include "asymspace/geometry2d.hpp"
#include "asymspace/random.hpp"

namespace asymspace {

using Json = nlohmann::json;

namespace io {

/// Rationals in documents are strings ("3", "-1/2") or plain JSON integers.
/// Decimal floats are rejected so inputs stay exact end to end.
inline Rat parse_rat(const Json& j, const std::string& where) {
    if (j.is_string()) {
        auto r = Rat::parse(j.get<std::string>());
        if (!r) throw InputError(where + ": malformed rational '" + j.get<std::string>() + "'");
        return *r;
    }
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_number_float())
        throw InputError(where + ": decimal floats are forbidden; write rationals as strings like \"-1/2\"");
    throw InputError(where + ": expected a rational string");
}

inline Vec parse_vec(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of rationals");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) v[i] = parse_rat(j[i], where + "[" + std::to_string(i) + "]");
    return v;
}

inline Json rat_to_json(const Rat& r) { return r.str(); }

inline Json vec_to_json(const Vec& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(c.str());
    return arr;
}

inline Json mat_to_json(const Mat& m) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) arr.push_back(vec_to_json(m.row(i)));
    return arr;
}

/// SpaceDocument: {"dimension": n, "generators": [[...], ...], "name":?}
/// or {"preset": "hexagon" | "u" | "simplex_gauge" | "tilde_q" | "ell_infty"
/// | "ell_one", "dimension":? }.
inline PolyAsymNorm parse_space(const Json& doc) {
    if (!doc.is_object()) throw InputError("space: expected an object");
    if (doc.contains("preset")) {
        const std::string preset = doc.at("preset").get<std::string>();
        auto dim_of = [&](std::size_t fallback) -> std::size_t {
            if (doc.contains("dimension")) return doc.at("dimension").get<std::size_t>();
            if (fallback == 0) throw InputError("space: preset '" + preset + "' needs a dimension");
            return fallback;
        };
        if (preset == "u") return norms::u();
        if (preset == "tilde_q") return norms::tilde_q(dim_of(0));
        if (preset == "ell_infty") return norms::ell_infty(dim_of(0));
        if (preset == "ell_one") return norms::ell_one(dim_of(0));
        if (preset == "hexagon") return norms::hexagon();
        if (preset == "simplex_gauge") return norms::simplex_gauge();
        throw InputError("space: unknown preset '" + preset + "'");
    }
    if (!doc.contains("dimension") || !doc.contains("generators"))
        throw InputError("space: fields 'dimension' and 'generators' are required");
    const std::size_t dim = doc.at("dimension").get<std::size_t>();
    if (!doc.at("generators").is_array()) throw InputError("space: 'generators' must be an array");
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < doc.at("generators").size(); ++i) {
        Vec g = parse_vec(doc.at("generators")[i], "generators[" + std::to_string(i) + "]");
        if (g.dim() != dim)
            throw InputError("generators[" + std::to_string(i) + "]: expected dimension " + std::to_string(dim));
        gens.push_back(std::move(g));
    }
    std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : "";
    return PolyAsymNorm(dim, std::move(gens), std::move(name));
}

inline Json space_to_json(const PolyAsymNorm& p) {
    Json doc;
    doc["dimension"] = p.dim();
    Json gens = Json::array();
    for (const auto& g : p.generators()) gens.push_back(vec_to_json(g));
    doc["generators"] = gens;
    if (!p.name().empty()) doc["name"] = p.name();
    return doc;
}

/// Family entries: [{"center": [...], "r": "1", "s": "1"}, ...]
inline MixedBallFamily parse_family(const Json& arr, PolyAsymNorm norm) {
    if (!arr.is_array() || arr.empty()) throw InputError("family: expected a nonempty array of balls");
    std::vector<MixedBallFamily::Entry> entries;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& e = arr[i];
        const std::string where = "family[" + std::to_string(i) + "]";
        if (!e.is_object() || !e.contains("center") || !e.contains("r") || !e.contains("s"))
            throw InputError(where + ": fields 'center', 'r', 's' are required");
        entries.push_back(MixedBallFamily::Entry{parse_vec(e.at("center"), where + ".center"),
                                                 parse_rat(e.at("r"), where + ".r"),
                                                 parse_rat(e.at("s"), where + ".s")});
    }
    return MixedBallFamily(std::move(norm), std::move(entries));
}

inline Json family_to_json(const MixedBallFamily& fam) {
    Json arr = Json::array();
    for (const auto& e : fam.entries) {
        Json b;
        b["center"] = vec_to_json(e.center);
        b["r"] = e.forward_radius.str();
        b["s"] = e.backward_radius.str();
        arr.push_back(b);
    }
    return arr;
}

/// Operators in documents: optional "domain_basis" (default: the standard
/// basis of the source space) and "matrix" with one image per basis vector.
inline PartialOperator parse_operator(const Json& doc, PolyAsymNorm source, PolyAsymNorm target) {
    Subspace domain = Subspace::full(source.dim());
    if (doc.contains("domain_basis")) {
        std::vector<Vec> basis;
        for (std::size_t i = 0; i < doc.at("domain_basis").size(); ++i)
            basis.push_back(parse_vec(doc.at("domain_basis")[i], "domain_basis[" + std::to_string(i) + "]"));
        domain = Subspace(source.dim(), std::move(basis));
    }
    if (!doc.contains("matrix")) throw InputError("operator: field 'matrix' is required");
    std::vector<Vec> images;
    for (std::size_t i = 0; i < doc.at("matrix").size(); ++i)
        images.push_back(parse_vec(doc.at("matrix")[i], "matrix[" + std::to_string(i) + "]"));
    return PartialOperator(std::move(domain), std::move(images), std::move(source), std::move(target));
}

}  // namespace io

struct TaskOptions {
    enum class Format { text, json };

    Format format = Format::text;
    std::string out_path;  // empty: report goes to stdout
    int digits = 6;
    std::uint64_t seed = 1;
};

struct TaskReport {
    int exit_code = 0;
    std::string text;
    Json json;
};

namespace detail {

struct ReportBuilder {
    std::ostringstream text;
    Json json;

    void kv(const std::string& key, const Json& value, const std::string& shown) {
        json[key] = value;
        text << key << ": " << shown << "\n";
    }
    void kv(const std::string& key, const std::string& value) { kv(key, Json(value), value); }
    void note(const std::string& line) { text << line << "\n"; }
};

inline Json certificate_json(const LinearProgram& lp, const Vec& cert) {
    Json j;
    j["multipliers"] = io::vec_to_json(cert);
    j["verified"] = verify_farkas(lp, cert);
    j["inequalities"] = lp.constraints.size();
    j["equalities"] = lp.equalities.size();
    return j;
}

}  // namespace detail

/// Executes one task document. Exit code 0: the checked property holds or
/// the computation succeeded; 1: the property is violated, with a
/// certificate embedded in the report; 2: input error.
inline TaskReport run_task(const Json& doc, const TaskOptions& opt);

namespace tasks {

inline TaskReport norm_check(const Json& doc, const TaskOptions& opt) {
    detail::ReportBuilder rb;
    auto p = io::parse_space(doc.at("space"));
    const std::size_t samples = doc.contains("samples") ? doc.at("samples").get<std::size_t>() : 200;
    RatSampler rng(opt.seed);
    auto conj = p.conjugate();
    auto sym = p.symmetrize();
    for (std::size_t i = 0; i < samples; ++i) {
        Vec x = rng.next_vec(p.dim()), y = rng.next_vec(p.dim());
        Rat alpha = rng.next_nonneg_rat();
        if (p(x).is_negative()) throw Error("norm-check: negative value");
        if (p(alpha * x) != alpha * p(x)) throw Error("norm-check: homogeneity failed");
        if (p(x + y) > p(x) + p(y)) throw Error("norm-check: triangle inequality failed");
        if (conj.conjugate()(x) != p(x)) throw Error("norm-check: conjugation involution failed");
        if (sym(x) != max(p(x), conj(x))) throw Error("norm-check: symmetrization identity failed");
    }
    rb.kv("task", "norm-check");
    rb.kv("space", io::space_to_json(p), p.name().empty() ? "(unnamed)" : p.name());
    rb.kv("dimension", Json(p.dim()), std::to_string(p.dim()));
    rb.kv("generator_count", Json(p.generators().size()), std::to_string(p.generators().size()));
    rb.kv("t1", Json(p.is_t1()), p.is_t1() ? "true" : "false");
    rb.kv("axioms", "nonnegativity, homogeneity, triangle, involution, symmetrization verified exactly on " +
                        std::to_string(samples) + " samples");
    return TaskReport{0, rb.text.str(), rb.json};
}

inline TaskReport ball_intersect(const Json& doc, const TaskOptions&) {
    detail::ReportBuilder rb;
    auto q = io::parse_space(doc.at("space"));
    Vec y1 = io::parse_vec(doc.at("y1"), "y1");
    Vec y2 = io::parse_vec(doc.at("y2"), "y2");
    Rat r1 = io::parse_rat(doc.at("r1"), "r1");
    Rat r2 = io::parse_rat(doc.at("r2"), "r2");
    rb.kv("task", "ball-intersect");
    Rat gap = q(y2 - y1);
    rb.kv("q(y2-y1)", Json(gap.str()), gap.str());
    rb.kv("r1+r2", Json((r1 + r2).str()), (r1 + r2).str());
    auto w = pair_intersection_witness(y1, r1, y2, r2, q);
    if (w) {
        rb.kv("intersects", Json(true), "true");
        rb.kv("witness", io::vec_to_json(*w), w->str());
        rb.kv("forward_membership", Json(q(*w - y1).str()), "q(w-y1) = " + q(*w - y1).str() + " <= " + r1.str());
        rb.kv("backward_membership", Json(q(y2 - *w).str()), "q(y2-w) = " + q(y2 - *w).str() + " <= " + r2.str());
        return TaskReport{0, rb.text.str(), rb.json};
    }
    rb.kv("intersects", Json(false), "false");
    rb.note("empty: q(y2-y1) > r1+r2 certifies the intersection empty");
    return TaskReport{1, rb.text.str(), rb.json};
}

inline TaskReport bip_check(const Json& doc, const TaskOptions&) {
    detail::ReportBuilder rb;
    auto q = io::parse_space(doc.at("space"));
    auto fam = io::parse_family(doc.at("family"), q);
    auto report = mixed_bip_report(fam);
    rb.kv("task", "bip-check");
    rb.kv("family", io::family_to_json(fam), std::to_string(fam.entries.size()) + " balls");
    switch (report.verdict) {
        case BipReport::Verdict::premise_fails: {
            Json pairs = Json::array();
            std::string shown;
            for (auto [i, j] : report.failing_pairs) {
                pairs.push_back({i, j});
                shown += "(" + std::to_string(i) + "," + std::to_string(j) + ") ";
            }
            rb.kv("verdict", "premise-fails");
            rb.kv("failing_pairs", pairs, shown);
            return TaskReport{0, rb.text.str(), rb.json};
        }
        case BipReport::Verdict::bip_holds_here:
            rb.kv("verdict", "bip-holds-here");
            rb.kv("common_point", io::vec_to_json(*report.point), report.point->str());
            return TaskReport{0, rb.text.str(), rb.json};
        case BipReport::Verdict::bip_violated_here:
        default: {
            rb.kv("verdict", "bip-violated-here");
            Json witnesses = Json::array();
            for (std::size_t i = 0; i < fam.entries.size(); ++i)
                for (std::size_t j = i + 1; j < fam.entries.size(); ++j) {
                    auto w = pair_intersection_witness(fam.entries[i].center, fam.entries[i].forward_radius,
                                                       fam.entries[j].center, fam.entries[j].backward_radius, q);
                    Json item;
                    item["pair"] = {i, j};
                    item["witness"] = io::vec_to_json(*w);
                    witnesses.push_back(item);
                    rb.note("pairwise witness (" + std::to_string(i) + "," + std::to_string(j) + "): " + w->str());
                }
            rb.json["pairwise_witnesses"] = witnesses;
            rb.kv("certificate", detail::certificate_json(family_lp(fam), *report.certificate),
                  "Farkas multipliers, verified exactly");
            return TaskReport{1, rb.text.str(), rb.json};
        }
    }
}

inline TaskReport op_norm(const Json& doc, const TaskOptions&) {
    detail::ReportBuilder rb;
    auto source = io::parse_space(doc.at("source"));
    auto target = io::parse_space(doc.at("target"));
    auto t = io::parse_operator(doc, std::move(source), std::move(target));
    auto result = operator_norm_detailed(t);
    rb.kv("task", "op-norm");
    if (result.value) {
        rb.kv("bounded", Json(true), "true");
        rb.kv("value", Json(result.value->str()), result.value->str());
        return TaskReport{0, rb.text.str(), rb.json};
    }
    rb.kv("bounded", Json(false), "false");
    rb.kv("unbounded_direction", io::vec_to_json(*result.unbounded_direction), result.unbounded_direction->str());
    rb.note("the operator is not (p,q)-continuous: along the direction the source norm stays <= 0");
    return TaskReport{1, rb.text.str(), rb.json};
}

inline TaskReport extend(const Json& doc, const TaskOptions&) {
    detail::ReportBuilder rb;
    auto source = io::parse_space(doc.at("source"));
    auto target = io::parse_space(doc.at("target"));
    auto t = io::parse_operator(doc, std::move(source), std::move(target));
    rb.kv("task", "extend");
    ExtensionProblem prob = doc.contains("beta")
                                ? ExtensionProblem(t, io::parse_rat(doc.at("beta"), "beta"))
                                : ExtensionProblem::with_operator_norm(t);
    rb.kv("beta", Json(prob.beta.str()), prob.beta.str());
    auto result = extend_operator(prob);
    if (result.status == ExtensionResult::Status::extended) {
        rb.kv("status", "extended");
        rb.kv("matrix", io::mat_to_json(*result.full_matrix), "full operator matrix (rows = target coordinates)");
        Json mults = Json::array();
        for (const auto& lam : *result.hull_multipliers) mults.push_back(io::vec_to_json(lam));
        rb.kv("hull_multipliers", mults, "per target generator, convex weights over the source generators");
        if (prob.op.target_norm().is_tilde_q_form()) {
            auto coord = extend_operator_coordinatewise(prob);
            auto n_coord = operator_norm(coord);
            rb.kv("coordinatewise_engine_norm", Json(n_coord ? n_coord->str() : "unbounded"),
                  n_coord ? n_coord->str() : "unbounded");
        }
        return TaskReport{0, rb.text.str(), rb.json};
    }
    rb.kv("status", "not-extendable");
    rb.kv("certificate", detail::certificate_json(extension_lp(prob), *result.infeasibility_certificate),
          "Farkas multipliers, verified exactly");
    return TaskReport{1, rb.text.str(), rb.json};
}

inline TaskReport embed(const Json& doc, const TaskOptions& opt) {
    detail::ReportBuilder rb;
    auto p = io::parse_space(doc.at("space"));
    auto e = embed_into_ellinfty(p);
    const std::size_t samples = doc.contains("samples") ? doc.at("samples").get<std::size_t>() : 200;
    RatSampler rng(opt.seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Vec x = rng.next_vec(p.dim());
        if (e.target_norm()(e.apply(x)) != p(x)) throw Error("embed: isometry failed at " + x.str());
    }
    rb.kv("task", "embed");
    rb.kv("target_dimension", Json(e.target_dim()), std::to_string(e.target_dim()));
    Json images = Json::array();
    for (const auto& img : e.images()) images.push_back(io::vec_to_json(img));
    rb.kv("basis_images", images, "columns of the embedding into (R^m, q̃)");
    rb.kv("isometry", "q̃(E x) = p(x) verified exactly on " + std::to_string(samples) + " samples");
    return TaskReport{0, rb.text.str(), rb.json};
}

inline TaskReport project(const Json& doc, const TaskOptions&) {
    detail::ReportBuilder rb;
    auto ambient = io::parse_space(doc.at("space"));
    if (!doc.contains("subspace_basis")) throw InputError("project: field 'subspace_basis' is required");
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < doc.at("subspace_basis").size(); ++i)
        basis.push_back(io::parse_vec(doc.at("subspace_basis")[i], "subspace_basis[" + std::to_string(i) + "]"));
    Subspace y(ambient.dim(), std::move(basis));
    auto result = norm_one_projection(ambient, y);
    rb.kv("task", "project");
    if (result.extension.status == ExtensionResult::Status::extended) {
        rb.kv("status", "extended");
        rb.kv("projection_matrix", io::mat_to_json(*result.projection), "idempotent, fixes the subspace");
        return TaskReport{0, rb.text.str(), rb.json};
    }
    rb.kv("status", "not-extendable");
    rb.kv("certificate", io::vec_to_json(*result.extension.infeasibility_certificate),
          "Farkas multipliers for the identity-extension system");
    rb.note("no norm-one projection onto the subspace exists");
    return TaskReport{1, rb.text.str(), rb.json};
}

inline TaskReport necessity_demo(const Json& doc, const TaskOptions&) {
    detail::ReportBuilder rb;
    auto q = io::parse_space(doc.at("space"));
    auto fam = io::parse_family(doc.at("family"), q);
    auto report = necessity_pipeline(fam);
    rb.kv("task", "necessity-demo");
    if (report.status == NecessityReport::Status::refused) {
        rb.kv("status", "refused");
        rb.kv("reason", report.reason);
        return TaskReport{0, rb.text.str(), rb.json};
    }
    if (report.status == NecessityReport::Status::d_failed) {
        rb.kv("status", "d-failed");
        rb.kv("reason", report.reason);
        return TaskReport{0, rb.text.str(), rb.json};
    }
    rb.kv("status", "completed");
    Json anchors = Json::array();
    for (const auto& a : report.anchors) anchors.push_back(io::vec_to_json(a));
    rb.kv("anchors", anchors, std::to_string(report.anchors.size()) + " deduplicated centers");
    Json rho;
    rho["rho1"] = Json::array();
    rho["rho2"] = Json::array();
    std::string shown;
    for (std::size_t i = 0; i < report.minimal->size(); ++i) {
        rho["rho1"].push_back(report.minimal->rho1()[i].str());
        rho["rho2"].push_back(report.minimal->rho2()[i].str());
        shown += "(" + report.minimal->rho1()[i].str() + "," + report.minimal->rho2()[i].str() + ") ";
    }
    rb.kv("minimal_pair", rho, shown);
    rb.kv("mu_space_dimension", Json(report.mu->dim()), std::to_string(report.mu->dim()));
    rb.kv("certificate", detail::certificate_json(*report.final_lp, *report.final_certificate),
          "Farkas multipliers for the glued-projection system, verified exactly");
    rb.note("no norm-one projection of the glued space onto the base exists; the space is not injective");
    return TaskReport{1, rb.text.str(), rb.json};
}

inline TaskReport dump_geometry(const Json& doc, const TaskOptions& opt) {
    detail::ReportBuilder rb;
    auto space = io::parse_space(doc.at("space"));
    if (space.dim() != 2) throw UnsupportedDimensionError("dump-geometry: only dimension 2 is supported");
    const std::string prefix = opt.out_path.empty() ? "geometry" : opt.out_path;
    rb.kv("task", "dump-geometry");
    std::vector<Polygon2D> polys;
    std::vector<std::string> files;

    Rat clip(6);
    if (doc.contains("family")) {
        auto fam = io::parse_family(doc.at("family"), space);
        for (const auto& e : fam.entries)
            clip = max(clip, abs(e.center[0]) + abs(e.center[1]) + max(e.forward_radius, e.backward_radius) + Rat(2));
        for (std::size_t i = 0; i < fam.entries.size(); ++i) {
            auto [fwd, bwd] = ball_polygons(space, fam.entries[i], clip);
            fwd.label = "ball " + std::to_string(i) + " forward";
            bwd.label = "ball " + std::to_string(i) + " backward";
            std::string f1 = prefix + "_ball" + std::to_string(i) + "_fwd.csv";
            std::string f2 = prefix + "_ball" + std::to_string(i) + "_bwd.csv";
            write_polygon_csv(fwd, f1, opt.digits);
            write_polygon_csv(bwd, f2, opt.digits);
            files.push_back(f1);
            files.push_back(f2);
            polys.push_back(std::move(fwd));
            polys.push_back(std::move(bwd));
        }
        auto inter = common_point(fam);
        std::string note = inter.point ? "" : "empty intersection";
        std::string svg = prefix + ".svg";
        write_svg(polys, svg, opt.digits, note);
        files.push_back(svg);
        rb.kv("intersection", inter.point ? "nonempty at " + inter.point->str() : "empty (annotated in the SVG)");
    } else {
        auto ball = unit_ball_polygon(space, clip);
        std::string csv = prefix + ".csv";
        write_polygon_csv(ball, csv, opt.digits);
        files.push_back(csv);
        rb.kv("vertices", Json(ball.vertices.size()),
              std::to_string(ball.vertices.size()) + (ball.clipped ? " (clipped viewport)" : ""));
        polys.push_back(std::move(ball));
        std::string svg = prefix + ".svg";
        write_svg(polys, svg, opt.digits);
        files.push_back(svg);
    }
    Json jfiles = Json::array();
    std::string shown;
    for (const auto& f : files) {
        jfiles.push_back(f);
        shown += f + " ";
    }
    rb.kv("files", jfiles, shown);
    return TaskReport{0, rb.text.str(), rb.json};
}

}  // namespace tasks

inline TaskReport run_task(const Json& doc, const TaskOptions& opt) {
    try {
        if (!doc.is_object() || !doc.contains("task")) throw InputError("document: top-level field 'task' is required");
        const std::string task = doc.at("task").get<std::string>();
        TaskReport report;
        if (task == "norm-check")
            report = tasks::norm_check(doc, opt);
        else if (task == "ball-intersect")
            report = tasks::ball_intersect(doc, opt);
        else if (task == "bip-check")
            report = tasks::bip_check(doc, opt);
        else if (task == "op-norm")
            report = tasks::op_norm(doc, opt);
        else if (task == "extend")
            report = tasks::extend(doc, opt);
        else if (task == "embed")
            report = tasks::embed(doc, opt);
        else if (task == "project")
            report = tasks::project(doc, opt);
        else if (task == "necessity-demo")
            report = tasks::necessity_demo(doc, opt);
        else if (task == "dump-geometry")
            report = tasks::dump_geometry(doc, opt);
        else
            throw InputError("document: unknown task '" + task + "'");
        report.json["task"] = task;
        report.json["exit_code"] = report.exit_code;
        return report;
    } catch (const Json::exception& e) {
        TaskReport report;
        report.exit_code = 2;
        report.text = std::string("input error: ") + e.what() + "\n";
        report.json = {{"error", e.what()}, {"exit_code", 2}};
        return report;
    } catch (const Error& e) {
        TaskReport report;
        report.exit_code = 2;
        report.text = std::string("input error: ") + e.what() + "\n";
        report.json = {{"error", e.what()}, {"exit_code", 2}};
        return report;
    }
}

/// Runs a task file and writes the report (text or JSON) to stdout or, when
/// out_path is set, atomically to that file. Returns the exit code.
inline int run_task_file(const std::string& path, const TaskOptions& opt) {
    Json doc;
    {
        std::ifstream in(path);
        if (!in) {
            std::fprintf(stderr, "input error: cannot open task file '%s'\n", path.c_str());
            return 2;
        }
        try {
            in >> doc;
        } catch (const Json::exception& e) {
            std::fprintf(stderr, "input error: %s: %s\n", path.c_str(), e.what());
            return 2;
        }
    }
    auto report = run_task(doc, opt);
    std::string payload =
        opt.format == TaskOptions::Format::json ? report.json.dump(2) + "\n" : report.text;
    // dump-geometry uses out_path as its file prefix; its report always goes
    // to stdout
    const bool report_to_file = !opt.out_path.empty() &&
                                !(doc.is_object() && doc.contains("task") && doc.at("task") == "dump-geometry");
    if (report_to_file) {
        const std::string tmp = opt.out_path + ".tmp";
        std::ofstream out(tmp);
        out << payload;
        out.close();
        std::filesystem::rename(tmp, opt.out_path);
    } else {
        std::fputs(payload.c_str(), stdout);
    }
    return report.exit_code;
}

}  // namespace asymspace
