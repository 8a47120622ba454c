// hivecurve: command-line front end.
//
// Exit status: 0 success, 1 negative verdict (fail / infeasible / not_hive),
// 2 usage error, 3 input or schema error, 4 numeric failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <hivecurve/hivecurve.hpp>
#include <hivecurve/io.hpp>
#include <hivecurve/svg.hpp>

using namespace hivecurve;
using io::Json;

namespace {

enum Exit { ok = 0, negative = 1, usage = 2, input = 3, numeric = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string group, action;
    std::vector<std::string> inputs;
    std::string out, svg_path, format = "json", mode = "exact";
    std::uint64_t seed = 0;
    std::vector<std::string> tol;
    std::string tgrid;
    int probes = 720;
    int random_probes = 128;
    double t = 1e6;
    std::string point = "0,0,0", index;
    int resolution = 256;

    std::map<std::string, double> tolerances{
        {"cluster", 1e-9}, {"shifted", 1e-12}, {"ronkin", 1e-2}, {"hive4", 1e-2}, {"direct", 1e-9}};

    bool exact() const { return mode == "exact"; }
    double tolerance(const std::string& k) const { return tolerances.at(k); }
};

std::vector<double> parse_list(const std::string& s, const char* what) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(std::string("bad number in ") + what + ": " + item);
        }
    }
    return out;
}

void apply_tolerances(RunConfig& cfg) {
    for (const auto& kv : cfg.tol) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--tol expects KEY=VAL, got " + kv);
        std::string key = kv.substr(0, eq);
        if (!cfg.tolerances.count(key)) throw UsageError("unknown tolerance key " + key);
        auto v = parse_list(kv.substr(eq + 1), "--tol");
        if (v.size() != 1 || !(v[0] > 0)) throw UsageError("tolerance must be one positive number");
        cfg.tolerances[key] = v[0];
    }
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::SchemaError, "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        fail(ErrorKind::SchemaError, path + ": " + e.what());
    }
}

const std::string& input_path(const RunConfig& cfg, std::size_t k) {
    if (cfg.inputs.size() <= k)
        throw UsageError(cfg.group + " " + cfg.action + " needs " + std::to_string(k + 1) + " input file(s)");
    return cfg.inputs[k];
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

void emit_json(const RunConfig& cfg, const Json& j) { emit(j.dump(2) + "\n", cfg.out); }

std::vector<double> tgrid_of(const RunConfig& cfg) {
    if (cfg.tgrid.empty()) return default_tgrid();
    return parse_list(cfg.tgrid, "--tgrid");
}

VinnikovOptions vinnikov_options(const RunConfig& cfg) {
    VinnikovOptions opt;
    opt.equally_spaced = cfg.probes;
    opt.random = cfg.random_probes;
    opt.seed = cfg.seed;
    opt.mode = cfg.exact() ? NumericMode::exact : NumericMode::floating;
    opt.cluster_tol = cfg.tolerance("cluster");
    return opt;
}

RonkinSpec ronkin_spec(const RunConfig& cfg) {
    RonkinSpec spec;
    spec.resolution = cfg.resolution;
    spec.tolerance = cfg.tolerance("ronkin");
    return spec;
}

int verdict_exit(bool good) { return good ? ok : negative; }

// ---------------------------------------------------------------- hive, horn

int run_hive(const RunConfig& cfg) {
    if (cfg.action == "check") {
        auto rep = classify_hive(io::hive_from_json(read_json(input_path(cfg, 0))));
        emit_json(cfg, io::hive_report_json(rep));
        return verdict_exit(rep.is_hive());
    }
    if (cfg.action == "boundary") {
        emit_json(cfg, io::boundary_json(boundary(io::hive_from_json(read_json(input_path(cfg, 0))))));
        return ok;
    }
    if (cfg.action == "convolve") {
        auto h = io::hive_from_json(read_json(input_path(cfg, 0)));
        auto g = io::hive_from_json(read_json(input_path(cfg, 1)));
        bool hh = classify_hive(h).is_hive(), gh = classify_hive(g).is_hive();
        if (!hh || !gh) {
            Json doc = io::document();
            doc["verdict"] = "not_hive";
            doc["operand"] = hh ? "right" : "left";
            emit_json(cfg, doc);
            return negative;
        }
        auto doc = io::table_json(convolve(h, g));
        doc["verdict"] = to_string(classify_hive(convolve(h, g)).verdict);
        emit_json(cfg, doc);
        return ok;
    }
    throw UsageError("unknown hive action " + cfg.action);
}

int run_horn(const RunConfig& cfg) {
    if (cfg.action != "feasible") throw UsageError("unknown horn action " + cfg.action);
    auto res = horn_feasible(io::boundary_from_json(read_json(input_path(cfg, 0))));
    Json doc = io::document();
    doc["verdict"] = res.feasible ? "feasible" : "infeasible";
    if (res.witness) doc["witness"] = io::table_json(*res.witness);
    emit_json(cfg, doc);
    return verdict_exit(res.feasible);
}

// ---------------------------------------------------------------- pencil

int run_pencil(const RunConfig& cfg) {
    if (cfg.action == "det") {
        auto j = read_json(input_path(cfg, 0));
        if (cfg.exact()) emit_json(cfg, io::table_json(pencil_det(io::exact_pencil_from_json(j))));
        else emit_json(cfg, io::table_json(pencil_det(io::pencil_from_json(j))));
        return ok;
    }
    if (cfg.action == "beta") {
        auto j = read_json(input_path(cfg, 0));
        if (cfg.exact()) emit_json(cfg, io::pencil_json(beta_map(io::exact_gl_triple_from_json(j))));
        else emit_json(cfg, io::pencil_json(beta_map(io::gl_triple_from_json(j))));
        return ok;
    }
    if (cfg.action == "boundary") {
        auto j = read_json(input_path(cfg, 0));
        auto b = cfg.exact() || io::form_is_exact(j) ? curve_boundary(io::exact_form_from_json(j))
                                                     : curve_boundary(io::form_from_json(j));
        emit_json(cfg, io::boundary_json(b));
        return ok;
    }
    if (cfg.action == "sing") {
        auto g = io::gl_triple_from_json(read_json(input_path(cfg, 0)));
        BoundarySpec<double> sv{singular_values(g.A), singular_values(g.B), singular_values(g.C)};
        auto p = beta_map(g);
        auto F = pencil_det(PencilTriple<GaussianRational>{to_exact(p.X), to_exact(p.Y), to_exact(p.Z)});
        auto cb = curve_boundary(F);
        double diff = 0;
        for (int s = 0; s < 3; ++s)
            for (std::size_t m = 0; m < sv.side(s).size(); ++m)
                diff = std::max(diff, std::abs(sv.side(s)[m] - cb.side(s)[m]));
        Json doc = io::boundary_json(sv);
        doc["curve_boundary"] = io::boundary_json(cb);
        doc["max_difference"] = diff;
        emit_json(cfg, doc);
        return ok;
    }
    throw UsageError("unknown pencil action " + cfg.action);
}

// ---------------------------------------------------------------- hyperbolic

int run_hyperbolic(const RunConfig& cfg) {
    auto j = read_json(input_path(cfg, 0));
    const bool exact_input = io::form_is_exact(j);
    if (cfg.action == "check") {
        auto rep = exact_input ? vinnikov_check(io::exact_form_from_json(j), vinnikov_options(cfg))
                               : vinnikov_check(io::form_from_json(j), vinnikov_options(cfg));
        emit_json(cfg, io::hyperbolicity_json(rep));
        return verdict_exit(rep.verdict == Verdict::pass);
    }
    if (cfg.action == "backward") {
        if (exact_input) {
            auto rep = backward_inequalities(io::exact_form_from_json(j));
            emit_json(cfg, io::backward_json(rep));
            return verdict_exit(rep.pass);
        }
        auto rep = backward_inequalities(io::form_from_json(j));
        emit_json(cfg, io::backward_json(rep));
        return verdict_exit(rep.pass);
    }
    if (cfg.action == "v1shift") {
        auto rep = exact_input && cfg.exact() ? shifted_hive_check_exact(io::exact_form_from_json(j))
                                              : shifted_hive_check(io::form_from_json(j), cfg.tolerance("shifted"));
        emit_json(cfg, io::hive_report_json(rep));
        return verdict_exit(rep.is_hive());
    }
    throw UsageError("unknown hyperbolic action " + cfg.action);
}

// ---------------------------------------------------------------- tropical

int run_trop(const RunConfig& cfg) {
    if (cfg.action == "amoeba-svg") {
        auto fam = io::family_from_json(read_json(input_path(cfg, 0)));
        AmoebaOptions opt;
        auto cloud = amoeba_sample(instantiate_normalized(fam, cfg.t), opt);
        auto T = tropical_curve(fam.exponents);
        emit(svg::amoeba_overlay(cloud, std::log(cfg.t), T), cfg.svg_path.empty() ? cfg.out : cfg.svg_path);
        return ok;
    }
    auto L = io::hive_from_json(read_json(input_path(cfg, 0)));
    if (cfg.action == "subdivide") {
        emit_json(cfg, io::subdivision_json(regular_subdivision(L)));
        return ok;
    }
    if (cfg.action == "curve") {
        auto T = tropical_curve(L);
        auto doc = io::tropical_json(T);
        try {
            doc["honeycomb_boundary"] = io::boundary_json(honeycomb_boundary(T));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotHiveDual) throw;
            doc["honeycomb_boundary"] = nullptr;
        }
        emit_json(cfg, doc);
        return ok;
    }
    if (cfg.action == "honeycomb-svg") {
        emit(svg::honeycomb(tropical_curve(L)), cfg.svg_path.empty() ? cfg.out : cfg.svg_path);
        return ok;
    }
    throw UsageError("unknown trop action " + cfg.action);
}

// ---------------------------------------------------------------- patchwork

int run_patchwork(const RunConfig& cfg) {
    auto SL = io::signed_lifting_from_json(read_json(input_path(cfg, 0)));
    if (cfg.action == "charts") {
        auto S = regular_subdivision(SL.lifting);
        Json doc = io::document();
        doc["charts"] = Json::array();
        for (const auto& q : chart_quadrants()) doc["charts"].push_back(io::chart_json(build_chart(SL, q, S)));
        emit_json(cfg, doc);
        return ok;
    }
    if (cfg.action == "classify") {
        emit_json(cfg, io::topology_json(glue_and_classify(SL)));
        return ok;
    }
    if (cfg.action == "svg") {
        auto S = regular_subdivision(SL.lifting);
        std::array<Chart, 4> charts;
        for (int c = 0; c < 4; ++c) charts[c] = build_chart(SL, chart_quadrants()[c], S);
        emit(svg::glued_model(charts), cfg.svg_path.empty() ? cfg.out : cfg.svg_path);
        return ok;
    }
    if (cfg.action == "violation-path") {
        auto S = regular_subdivision(SL.lifting);
        auto vp = find_violation_path(S);
        Json doc = io::document();
        doc["verdict"] = to_string(classify_hive(SL.lifting).verdict);
        if (vp) {
            Json path = Json::array();
            for (const auto& t : vp->path) path.push_back(io::index_json(t));
            doc["axis"] = std::string(1, "ijk"[vp->axis]);
            doc["path"] = path;
            doc["edges"] = vp->edges();
            doc["sign_changes"] = glued_sign_changes(*vp, SL, S);
        } else {
            doc["path"] = nullptr;
        }
        emit_json(cfg, doc);
        return verdict_exit(!vp);
    }
    throw UsageError("unknown patchwork action " + cfg.action);
}

// ---------------------------------------------------------------- sweeps

std::string csv_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << header[c];
    out << "\n";
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
        out << "\n";
    }
    return out.str();
}

int run_sweep(const RunConfig& cfg) {
    const bool csv = cfg.format == "csv";
    if (cfg.action == "main-theorem") {
        auto fam = io::family_from_json(read_json(input_path(cfg, 0)));
        auto rep = main_theorem_sweep(fam, tgrid_of(cfg), vinnikov_options(cfg));
        if (csv) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : rep.rows)
                rows.push_back(std::vector<std::string>{io::csv_number(r.t), to_string(r.report.verdict), std::to_string(r.report.probes_tested)});
            emit(csv_rows({"t", "verdict", "probes"}, rows), cfg.out);
        } else {
            Json doc = io::document();
            doc["verdict"] = to_string(rep.final_verdict);
            doc["threshold"] = rep.threshold;
            doc["rows"] = Json::array();
            for (const auto& r : rep.rows) {
                auto row = io::hyperbolicity_json(r.report);
                row.erase("schema");
                row["t"] = r.t;
                doc["rows"].push_back(row);
            }
            emit_json(cfg, doc);
        }
        return verdict_exit(rep.final_verdict == Verdict::pass);
    }
    if (cfg.action == "boundary") {
        auto fam = io::family_from_json(read_json(input_path(cfg, 0)));
        auto rep = boundary_asymptotics(fam, tgrid_of(cfg));
        bool slopes_ok = rep.slope_error <= rep.slope_tolerance;
        bool good = rep.within_stated() && slopes_ok;
        if (csv) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& r : rep.rows)
                rows.push_back(std::vector<std::string>{io::csv_number(r.t), io::csv_number(r.max_abs_residual), io::csv_number(r.stated_excess),
                                io::csv_number(r.sharp_excess)});
            emit(csv_rows({"t", "max_abs_residual", "stated_excess", "sharp_excess"}, rows), cfg.out);
        } else {
            Json doc = io::document();
            doc["verdict"] = good ? "pass" : "fail";
            doc["within_stated_bound"] = rep.within_stated();
            doc["within_sharp_bound"] = rep.within_sharp();
            doc["slope_error"] = rep.slope_error;
            doc["slope_tolerance"] = rep.slope_tolerance;
            doc["slopes"] = io::boundary_json(rep.slopes);
            doc["rows"] = Json::array();
            for (const auto& r : rep.rows) {
                auto res = io::boundary_json(r.residual);
                res.erase("schema");
                doc["rows"].push_back(Json{{"t", r.t},
                                       {"residual", res},
                                       {"max_abs_residual", r.max_abs_residual},
                                       {"stated_excess", r.stated_excess},
                                       {"sharp_excess", r.sharp_excess}});
            }
            emit_json(cfg, doc);
        }
        return verdict_exit(good);
    }
    if (cfg.action == "convolution") {
        auto f = io::family_from_json(read_json(input_path(cfg, 0)));
        auto g = io::family_from_json(read_json(input_path(cfg, 1)));
        auto rep = direct_sum_check(f, g);
        bool good = rep.exponents_match && rep.max_coefficient_error <= cfg.tolerance("direct");
        Json doc = io::document();
        doc["verdict"] = good ? "pass" : "fail";
        doc["exponents_match"] = rep.exponents_match;
        doc["max_coefficient_error"] = rep.max_coefficient_error;
        auto lead = io::table_json(rep.leading);
        lead.erase("schema");
        doc["leading_exponents"] = lead;
        emit_json(cfg, doc);
        return verdict_exit(good);
    }
    if (cfg.action == "hive4") {
        auto fam = io::rmatrix_family_from_json(read_json(input_path(cfg, 0)));
        auto grid = cfg.tgrid.empty() ? hive4_tgrid() : tgrid_of(cfg);
        auto rep = hive4_check(fam, grid, cfg.tolerance("hive4"));
        if (csv) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& q : rep.inequalities)
                rows.push_back(std::vector<std::string>{"\"" + q.label + "\"", io::csv_number(q.lhs), io::csv_number(q.rhs)});
            emit(csv_rows({"inequality", "lhs", "rhs"}, rows), cfg.out);
        } else {
            Json doc = io::document();
            doc["verdict"] = rep.holds() ? "pass" : "fail";
            doc["min_slack"] = rep.min_slack();
            Json ex = Json::object();
            for (const auto& [e, v] : rep.exponents)
                ex["h" + std::to_string(e[0]) + std::to_string(e[1]) + std::to_string(e[2]) + std::to_string(e[3])] = v;
            doc["exponents"] = ex;
            doc["inequalities"] = Json::array();
            for (const auto& q : rep.inequalities)
                doc["inequalities"].push_back(Json{{"label", q.label}, {"lhs", q.lhs}, {"rhs", q.rhs}});
            emit_json(cfg, doc);
        }
        return verdict_exit(rep.holds());
    }
    throw UsageError("unknown sweep action " + cfg.action);
}

// ---------------------------------------------------------------- ronkin

int run_ronkin(const RunConfig& cfg) {
    auto F = io::form_from_json(read_json(input_path(cfg, 0)));
    auto spec = ronkin_spec(cfg);
    if (cfg.action == "value") {
        auto p = parse_list(cfg.point, "--point");
        if (p.size() != 3) throw UsageError("--point needs three coordinates");
        std::array<double, 3> pt{p[0], p[1], p[2]};
        Json doc = io::document();
        doc["point"] = p;
        doc["value"] = ronkin_value(F, pt, spec);
        doc["refinement_gap"] = ronkin_refinement_gap(F, pt, spec);
        emit_json(cfg, doc);
        return ok;
    }
    if (cfg.action == "coeff") {
        if (!cfg.index.empty()) {
            auto v = parse_list(cfg.index, "--index");
            if (v.size() != 3) throw UsageError("--index needs i,j,k");
            TriangleIndex t{int(v[0]), int(v[1]), int(v[2])};
            Json doc = io::document();
            doc["index"] = io::index_json(t);
            doc["u"] = ronkin_coefficient(F, t, spec);
            emit_json(cfg, doc);
            return ok;
        }
        emit_json(cfg, io::table_json(ronkin_coefficients(F, spec)));
        return ok;
    }
    if (cfg.action == "boundary-check") {
        auto rep = ronkin_boundary_check(F, spec);
        Json doc = io::document();
        doc["verdict"] = rep.passes() ? "pass" : "fail";
        doc["residual"] = rep.residual;
        doc["tolerance"] = rep.tolerance;
        auto lb = io::boundary_json(rep.log_boundary), hu = io::boundary_json(rep.half_du);
        lb.erase("schema");
        hu.erase("schema");
        doc["log_boundary"] = lb;
        doc["half_boundary_of_u"] = hu;
        emit_json(cfg, doc);
        return verdict_exit(rep.passes());
    }
    throw UsageError("unknown ronkin action " + cfg.action);
}

int dispatch(RunConfig& cfg) {
    apply_tolerances(cfg);
    if (cfg.mode != "exact" && cfg.mode != "float") throw UsageError("--mode must be exact or float");
    if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
    if (cfg.group == "hive") return run_hive(cfg);
    if (cfg.group == "horn") return run_horn(cfg);
    if (cfg.group == "pencil") return run_pencil(cfg);
    if (cfg.group == "hyperbolic") return run_hyperbolic(cfg);
    if (cfg.group == "trop") return run_trop(cfg);
    if (cfg.group == "patchwork") return run_patchwork(cfg);
    if (cfg.group == "sweep") return run_sweep(cfg);
    if (cfg.group == "ronkin") return run_ronkin(cfg);
    throw UsageError("unknown command " + cfg.group);
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"hives, hyperbolic curves and their tropical limits"};
    app.require_subcommand(1);

    const std::map<std::string, std::vector<std::string>> commands{
        {"hive", {"check", "boundary", "convolve"}},
        {"horn", {"feasible"}},
        {"pencil", {"det", "beta", "boundary", "sing"}},
        {"hyperbolic", {"check", "backward", "v1shift"}},
        {"trop", {"subdivide", "curve", "honeycomb-svg", "amoeba-svg"}},
        {"patchwork", {"charts", "classify", "svg", "violation-path"}},
        {"sweep", {"main-theorem", "boundary", "convolution", "hive4"}},
        {"ronkin", {"value", "coeff", "boundary-check"}},
    };

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("inputs", cfg.inputs, "input JSON file(s)");
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--mode", cfg.mode, "exact or float");
        sub->add_option("--tol", cfg.tol, "tolerance override KEY=VAL (cluster, shifted, ronkin, hive4, direct)");
        sub->add_option("--tgrid", cfg.tgrid, "comma-separated t values");
        sub->add_option("--probes", cfg.probes, "equally spaced probe lines");
        sub->add_option("--random-probes", cfg.random_probes, "random probe lines");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        sub->add_option("--svg", cfg.svg_path, "SVG output path");
        sub->add_option("--format", cfg.format, "json or csv (sweeps)");
        sub->add_option("--t", cfg.t, "parameter value for amoeba figures");
        sub->add_option("--point", cfg.point, "x,y,z for ronkin value");
        sub->add_option("--index", cfg.index, "i,j,k for ronkin coeff");
        sub->add_option("--resolution", cfg.resolution, "Ronkin phase samples");
    };

    for (const auto& [group, actions] : commands) {
        auto* g = app.add_subcommand(group, group + " operations");
        g->require_subcommand(1);
        for (const auto& a : actions) {
            auto* s = g->add_subcommand(a);
            add_common(s);
            s->callback([&cfg, group = group, a = a] {
                cfg.group = group;
                cfg.action = a;
            });
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        return dispatch(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::SchemaError:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::NotDecreasing:
        case ErrorKind::NotATriangulation:
        case ErrorKind::NotHermitian:
        case ErrorKind::NotPositiveDefinite:
        case ErrorKind::ProductNotIdentity:
        case ErrorKind::InvalidArgument: return input;
        default: return numeric;
        }
    } catch (const Json::exception& e) {
        std::cerr << "SchemaError: " << e.what() << "\n";
        return input;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return numeric;
    }
}
