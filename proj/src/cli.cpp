#include "quasitoric/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quasitoric/fixtures.hpp"
#include "quasitoric/quasifold.hpp"

namespace quasitoric {

namespace {

constexpr const char* kVersion = "0.1.0";

struct CliOptions {
    std::string spec_path;
    std::string example_name;
    std::string point_text;
    std::string point_file;
    std::string out_path;
    int samples = 100;
    std::uint64_t seed = 1;
    double tol_psi = 1e-10;
    int radius = 3;
    double param_s = 1.0;
    double param_t = 1.4142135623730951;
};

RunConfig make_config(const CliOptions& opt) {
    RunConfig cfg;
    cfg.samples = opt.samples;
    cfg.seed = opt.seed;
    cfg.tol.radius = opt.radius;
    cfg.tol.psi = opt.tol_psi;
    cfg.solver.tol_psi = opt.tol_psi;
    return cfg;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

JsonValue report_header(const std::string& command, const std::string& source,
                        const std::string& spec_text, const RunConfig& cfg) {
    JsonValue report = JsonValue::object();
    report.set("tool", "quasitoric");
    report.set("version", kVersion);
    report.set("command", command);
    JsonValue input = JsonValue::object();
    input.set("source", source);
    input.set("digest", hex64(fnv1a64(spec_text)));
    report.set("input", std::move(input));
    JsonValue config = JsonValue::object();
    config.set("samples", static_cast<std::int64_t>(cfg.samples));
    config.set("seed", static_cast<std::int64_t>(cfg.seed));
    config.set("tol_psi", cfg.solver.tol_psi);
    config.set("radius", static_cast<std::int64_t>(cfg.tol.radius));
    config.set("eps_geom", cfg.tol.geom);
    config.set("eps_lin", cfg.tol.lin);
    config.set("fd_step", cfg.tol.fd_step);
    report.set("config", std::move(config));
    return report;
}

JsonValue polytope_json(const PolytopeData& p) {
    JsonValue out = JsonValue::object();
    out.set("n", static_cast<std::int64_t>(p.n));
    out.set("facets", static_cast<std::int64_t>(p.d));
    out.set("normals", JsonValue::from_matrix(p.normals));
    out.set("offsets", JsonValue::from_vector(p.offsets));
    return out;
}

JsonValue vertices_json(const std::vector<VertexData>& vertices) {
    JsonValue arr = JsonValue::array();
    for (const auto& v : vertices) {
        JsonValue item = JsonValue::object();
        item.set("point", JsonValue::from_vector(v.point));
        item.set("active_facets", JsonValue::from_index_set(v.active));
        arr.push(std::move(item));
    }
    return arr;
}

JsonValue faces_json(const std::set<IndexSet>& faces) {
    JsonValue arr = JsonValue::array();
    for (const auto& f : faces) arr.push(JsonValue::from_index_set(f));
    return arr;
}

JsonValue atlas_json(const Quasifold& q) {
    JsonValue out = JsonValue::object();
    out.set("kernel_basis", JsonValue::from_matrix(q.kernel.B));
    JsonValue charts = JsonValue::array();
    for (const auto& chart : q.atlas.charts) {
        JsonValue c = JsonValue::object();
        c.set("id", static_cast<std::int64_t>(chart.id));
        c.set("vertex", JsonValue::from_vector(chart.vertex.point));
        c.set("index_set", JsonValue::from_index_set(chart.index_set()));
        c.set("base_point", JsonValue::from_cvector(chart.base_point));
        JsonValue gens = JsonValue::array();
        for (const auto& g : chart.group_generators) {
            JsonValue gen = JsonValue::object();
            JsonValue word = JsonValue::array();
            for (Eigen::Index i = 0; i < g.word.size(); ++i)
                word.push(static_cast<std::int64_t>(g.word[i]));
            gen.set("word", std::move(word));
            gen.set("phase", JsonValue::from_vector(g.phase));
            gens.push(std::move(gen));
        }
        c.set("group_generators", std::move(gens));
        c.set("group_trivial", chart.group_generators.empty());
        charts.push(std::move(c));
    }
    out.set("charts", std::move(charts));
    JsonValue transitions = JsonValue::array();
    for (const auto& [key, t] : q.atlas.transitions) {
        JsonValue tj = JsonValue::object();
        tj.set("from", static_cast<std::int64_t>(t.from));
        tj.set("to", static_cast<std::int64_t>(t.to));
        tj.set("shared_facets", JsonValue::from_index_set(t.shared));
        tj.set("log_facets_from", JsonValue::from_index_set(t.log_from));
        tj.set("log_facets_to", JsonValue::from_index_set(t.log_to));
        tj.set("shared_block", JsonValue::from_matrix(t.shared_block));
        tj.set("log_block", JsonValue::from_matrix(t.log_block));
        transitions.push(std::move(tj));
    }
    out.set("transitions", std::move(transitions));
    bool all_trivial = true;
    for (const auto& chart : q.atlas.charts)
        if (!chart.group_generators.empty()) all_trivial = false;
    out.set("all_groups_trivial", all_trivial);
    return out;
}

CVec parse_point(const std::string& text, int expected_d) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad --point value: ") + e.what());
    }
    if (!j.is_array() || static_cast<int>(j.size()) != expected_d)
        throw ParseError("--point must be an array of " + std::to_string(expected_d) +
                         " entries (numbers or [re, im] pairs)");
    CVec z(expected_d);
    for (int i = 0; i < expected_d; ++i) {
        const auto& e = j[static_cast<size_t>(i)];
        if (e.is_number()) {
            z[i] = Complex(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            z[i] = Complex(e[0].get<double>(), e[1].get<double>());
        } else {
            throw ParseError("--point entries must be numbers or [re, im] pairs");
        }
    }
    return z;
}

int cmd_inspect(const std::string& source, const std::string& spec_text, const RunConfig& cfg,
                JsonValue& report) {
    ParsedSpec spec = parse_spec(spec_text, cfg.tol.geom);
    report.set("polytope", polytope_json(spec.polytope));
    auto scan = scan_vertices(spec.polytope, cfg.tol.geom);
    report.set("vertices", vertices_json(scan));
    try {
        auto vertices = enumerate_vertices(spec.polytope, cfg.tol.geom);
        report.set("faces", faces_json(face_index_sets(spec.polytope, cfg.tol.geom)));
        report.set("simple", true);
        report.set("status", "ok");
        (void)source;
        return 0;
    } catch (const NonSimpleError& e) {
        JsonValue witness = JsonValue::object();
        witness.set("point", JsonValue::from_vector(e.point));
        witness.set("active_facets", JsonValue::from_index_set(e.active));
        report.set("simple", false);
        report.set("witness", std::move(witness));
        report.set("status", "non-simple");
        report.set("error", e.what());
        return 2;
    }
}

int cmd_atlas(const std::string& spec_text, const RunConfig& cfg, JsonValue& report) {
    ParsedSpec spec = parse_spec(spec_text, cfg.tol.geom);
    Quasifold q = build_quasifold(spec, cfg.tol);
    report.set("polytope", polytope_json(q.polytope));
    report.set("vertices", vertices_json(q.vertices));
    report.set("atlas", atlas_json(q));
    Rng rng(cfg.seed);
    std::vector<CheckRecord> records;
    records.push_back(checks::cocycle(q, rng, std::max(1, cfg.samples / 5)));
    records.push_back(checks::transition_equivariance(q, rng, cfg.samples));
    records.push_back(checks::trivial_groups(q));
    report.set("checks", check_records_json(records));
    report.set("status", all_passed(records) ? "ok" : "failed");
    return all_passed(records) ? 0 : 3;
}

int cmd_project(const std::string& spec_text, const CVec& point, const RunConfig& cfg,
                JsonValue& report) {
    ParsedSpec spec = parse_spec(spec_text, cfg.tol.geom);
    Quasifold q = build_quasifold(spec, cfg.tol);
    report.set("polytope", polytope_json(q.polytope));
    report.set("point", JsonValue::from_cvector(point));
    auto face = q.membership(point);
    if (!face) {
        IndexSet zeros;
        for (int j = 0; j < q.polytope.d; ++j)
            if (std::abs(point[j]) <= q.tol.geom) zeros.push_back(j);
        report.set("status", "rejected");
        report.set("error", "point is not in the admissible set: its zero pattern " +
                                index_set_string(zeros) + " is not a face index set");
        return 2;
    }
    report.set("face", JsonValue::from_index_set(*face));
    auto res = project_to_level(point, q.moment, cfg.solver);
    report.set("stretch_coefficients", JsonValue::from_vector(res.coeffs));
    report.set("projected_point", JsonValue::from_cvector(res.point));
    report.set("psi_residual", kernel_moment(res.point, q.moment).norm());
    report.set("iterations", static_cast<std::int64_t>(res.iterations));

    int chart_id = q.chart_for(point);
    const VertexChart& chart = q.chart(chart_id);
    report.set("chart", static_cast<std::int64_t>(chart_id));
    report.set("chart_index_set", JsonValue::from_index_set(chart.index_set()));
    SlicePoint complex_side = to_slice(point, chart, q.tol.geom);
    report.set("complex_slice", JsonValue::from_cvector(complex_side.coords));
    auto inverse = to_symplectic_slice(chart, complex_side, q.moment, q.tol.radius, q.tol.geom,
                                       cfg.solver);
    report.set("symplectic_slice", JsonValue::from_cvector(inverse.point.coords));
    SlicePoint forward = to_complex_slice(chart, inverse.point, q.polytope.offsets);
    auto match = same_model_point(forward, complex_side, chart, q.tol.radius, 1e-6);
    report.set("roundtrip_residual", match ? match->residual : -1.0);
    report.set("status", "ok");
    return 0;
}

int cmd_verify(const std::string& spec_text, const RunConfig& cfg, JsonValue& report) {
    ParsedSpec spec = parse_spec(spec_text, cfg.tol.geom);
    Quasifold q = build_quasifold(spec, cfg.tol);
    report.set("polytope", polytope_json(q.polytope));
    auto records = verify_quasifold(q, cfg);
    report.set("checks", check_records_json(records));
    int failed = 0;
    for (const auto& r : records)
        if (r.status == "fail") ++failed;
    report.set("failed", static_cast<std::int64_t>(failed));
    report.set("status", failed == 0 ? "ok" : "failed");
    return failed == 0 ? 0 : 3;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
    CLI::App app{"toric quasifold construction and verification"};
    app.require_subcommand(1);
    CliOptions opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--samples", opt.samples, "sample count for randomized checks");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--tol-psi", opt.tol_psi, "moment residual tolerance");
        sub->add_option("--radius", opt.radius, "integer word search radius");
        sub->add_option("--out", opt.out_path, "write the JSON report to this path");
    };

    CLI::App* inspect = app.add_subcommand("inspect", "validate and enumerate a polytope spec");
    inspect->add_option("spec", opt.spec_path, "polytope spec file")->required();
    add_common(inspect);

    CLI::App* atlas = app.add_subcommand("atlas", "build charts, chart groups and transitions");
    atlas->add_option("spec", opt.spec_path, "polytope spec file")->required();
    add_common(atlas);

    CLI::App* project = app.add_subcommand("project", "project a point to the moment level set");
    project->add_option("spec", opt.spec_path, "polytope spec file")->required();
    project->add_option("--point", opt.point_text,
                        "JSON array of d entries, numbers or [re, im] pairs");
    project->add_option("--point-file", opt.point_file, "file containing the point JSON");
    add_common(project);

    CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("spec", opt.spec_path, "polytope spec file")->required();
    add_common(verify);

    CLI::App* example = app.add_subcommand("example", "run a built-in example end to end");
    example->add_option("name", opt.example_name, "interval | triangle | pentagon | square")
        ->required();
    example->add_option("--s", opt.param_s, "first weight (interval, triangle)");
    example->add_option("--t", opt.param_t, "second weight (interval, triangle)");
    add_common(example);

    std::vector<const char*> argv;
    argv.push_back("quasitoric");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream ss;
        if (e.get_exit_code() == 0) {
            std::ostringstream help;
            help << app.help();
            return {0, help.str()};
        }
        ss << "error: " << e.what() << "\n";
        return {1, ss.str()};
    }

    RunConfig cfg = make_config(opt);
    std::string command = app.get_subcommands().front()->get_name();

    try {
        std::string source;
        std::string spec_text;
        if (command == "example") {
            source = "example:" + opt.example_name;
            spec_text = fixtures::by_name(opt.example_name, opt.param_s, opt.param_t);
        } else {
            source = opt.spec_path;
            spec_text = read_file(opt.spec_path);
        }
        JsonValue report = report_header(command, source, spec_text, cfg);
        int code = 0;
        if (command == "inspect") {
            code = cmd_inspect(source, spec_text, cfg, report);
        } else if (command == "atlas") {
            code = cmd_atlas(spec_text, cfg, report);
        } else if (command == "project") {
            if (opt.point_text.empty() && opt.point_file.empty())
                throw ParseError("project needs --point or --point-file");
            std::string point_text =
                !opt.point_text.empty() ? opt.point_text : read_file(opt.point_file);
            ParsedSpec spec = parse_spec(spec_text, cfg.tol.geom);
            CVec point = parse_point(point_text, spec.polytope.d);
            code = cmd_project(spec_text, point, cfg, report);
        } else if (command == "verify") {
            code = cmd_verify(spec_text, cfg, report);
        } else if (command == "example") {
            report.set("spec", spec_text);
            int inspect_code = cmd_inspect(source, spec_text, cfg, report);
            if (inspect_code == 0) {
                JsonValue atlas_report = report_header("atlas", source, spec_text, cfg);
                int atlas_code = cmd_atlas(spec_text, cfg, atlas_report);
                report.set("atlas_report", std::move(atlas_report));
                JsonValue verify_report = report_header("verify", source, spec_text, cfg);
                int verify_code = cmd_verify(spec_text, cfg, verify_report);
                report.set("verify_report", std::move(verify_report));
                code = atlas_code != 0 ? atlas_code : verify_code;
            } else {
                code = inspect_code;
            }
        }
        return {code, report.dump()};
    } catch (const NonSimpleError& e) {
        JsonValue err = JsonValue::object();
        err.set("tool", "quasitoric");
        err.set("command", command);
        err.set("status", "non-simple");
        err.set("error", e.what());
        JsonValue witness = JsonValue::object();
        witness.set("point", JsonValue::from_vector(e.point));
        witness.set("active_facets", JsonValue::from_index_set(e.active));
        err.set("witness", std::move(witness));
        return {2, err.dump()};
    } catch (const ValidationError& e) {
        JsonValue err = JsonValue::object();
        err.set("tool", "quasitoric");
        err.set("command", command);
        err.set("status", "invalid");
        err.set("error", e.what());
        return {2, err.dump()};
    } catch (const DomainError& e) {
        JsonValue err = JsonValue::object();
        err.set("tool", "quasitoric");
        err.set("command", command);
        err.set("status", "rejected");
        err.set("error", e.what());
        return {2, err.dump()};
    } catch (const Error& e) {
        JsonValue err = JsonValue::object();
        err.set("tool", "quasitoric");
        err.set("command", command);
        err.set("status", "error");
        err.set("error", e.what());
        return {1, err.dump()};
    }
}

int run_cli(int argc, char** argv) {
    std::vector<std::string> args;
    std::string out_path;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
        if (args.back() == "--out" && i + 1 < argc) out_path = argv[i + 1];
    }
    CommandResult result = run_command(args);
    if (!out_path.empty() && result.exit_code != 1) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        out << result.report;
    } else {
        std::cout << result.report;
    }
    return result.exit_code;
}

}  // namespace quasitoric
