#include "polyball/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "polyball/fixtures.hpp"
#include "polyball/problem.hpp"
#include "polyball/report.hpp"

namespace polyball::cli {

namespace {

using nlohmann::json;

constexpr const char* kClosureProvenance = "user-supplied closure";

struct Options {
    std::string input;
    std::string format = "text";
    std::optional<int> s;
    std::string beta;
    bool list = false;
    std::string demo_name;
};

json envelope(const std::string& command, const ProblemFile& p) {
    json j;
    j["version"] = 1;
    j["command"] = command;
    j["input"] = problem_echo(p);
    if (p.is_closure_model()) j["provenance"] = kClosureProvenance;
    return j;
}

std::string text_header(const std::string& command, const ProblemFile& p) {
    std::string s = "command: " + command + "\n";
    if (p.is_closure_model()) s += "provenance: " + std::string(kClosureProvenance) + "\n";
    return s;
}

std::string render_components(const ProblemFile& p, const std::string& format) {
    const StarReport report = star_satisfiers(p.subspace_components());
    if (format == "json") {
        json j = envelope("components", p);
        j["star_report"] = star_report_json(report);
        return dump_report(j);
    }
    return text_header("components", p) + star_report_text(report);
}

std::string render_facets(const ProblemFile& p, const std::string& format) {
    const BallPolytope ball = unit_ball_hrep(p.subspace_components());
    const FacetReport facets = facet_classes(ball);
    if (format == "json") {
        json j = envelope("facets", p);
        j["facets"] = facet_report_json(ball, facets);
        return dump_report(j);
    }
    return text_header("facets", p) + facet_report_text(ball, facets);
}

std::string render_vertices(const ProblemFile& p, const std::string& format) {
    const BallPolytope ball = unit_ball_hrep(p.subspace_components());
    const VertexList verts = enumerate_vertices(ball);
    if (format == "json") {
        json j = envelope("vertices", p);
        j["vertex_list"] = vertex_list_json(ball, verts);
        return dump_report(j);
    }
    return text_header("vertices", p) + vertex_list_text(ball, verts);
}

std::string render_embed(const ProblemFile& p, const std::string& format, std::optional<int> s_flag) {
    const ComponentSet cs = p.subspace_components();
    const EmbeddingMap map = embed_into_linf(cs);
    const SpaceVerdict verdict = space_verdict(cs);
    std::optional<int> s = s_flag ? s_flag : p.s;
    if (format == "json") {
        json j = envelope("embed", p);
        j["embedding"] = embedding_json(map, verdict, s);
        return dump_report(j);
    }
    return text_header("embed", p) + embedding_text(map, verdict, s);
}

std::string render_opspace(const ProblemFile& p, const std::string& format) {
    if (p.kind != ProblemKind::OperatorSpace)
        throw ValidationError("opspace requires an extreme_points input");
    const OpSpaceReport report = analyze_operator_space(*p.extreme_points, p.n);
    if (format == "json") {
        json j = envelope("opspace", p);
        j["opspace"] = opspace_json(report);
        return dump_report(j);
    }
    return text_header("opspace", p) + opspace_text(report);
}

std::string render_query(const ProblemFile& p, const std::string& format, const std::string& beta_flag) {
    RatVec beta;
    if (!beta_flag.empty()) {
        beta = parse_beta_flag(beta_flag);
    } else if (p.query_beta) {
        beta = *p.query_beta;
    } else {
        throw ValidationError("query requires a coefficient vector: pass --beta or put query_beta in the input file");
    }
    const BallPolytope ball = unit_ball_hrep(p.subspace_components());
    const FaceDescriptor face = minimal_face(ball, beta);
    const bool extreme = face.dim_estimate == 0;
    const bool maximal = is_maximal_star_constant(ball, beta);
    if (extreme != maximal)
        throw InternalInconsistencyError("query: tight-rank criterion and LP extension search disagree at " +
                                         to_string(beta));
    if (format == "json") {
        json j = envelope("query", p);
        j["beta"] = [&] {
            json a = json::array();
            for (const auto& x : beta) a.push_back(x.str());
            return a;
        }();
        j["minimal_face"] = face_descriptor_json(face);
        j["is_extreme"] = extreme;
        j["is_maximal_star_constant"] = maximal;
        return dump_report(j);
    }
    std::ostringstream os;
    os << text_header("query", p);
    os << "beta: " << to_string(beta) << "\n";
    os << "tight_set:";
    for (std::size_t i = 0; i < face.tight_coords.size(); ++i)
        os << ' ' << (face.tight_signs[i] > 0 ? '+' : '-') << (face.tight_coords[i] + 1);
    os << "\nminimal_face_dim: " << face.dim_estimate << "\n";
    os << "is_extreme: " << (extreme ? "yes" : "no") << "\n";
    os << "is_maximal_star_constant: " << (maximal ? "yes" : "no") << "\n";
    return os.str();
}

std::pair<std::string, bool> render_verify(const ProblemFile& p, const std::string& format) {
    std::vector<CheckResult> checks;
    if (p.kind == ProblemKind::OperatorSpace) {
        checks = verify_opspace(*p.extreme_points, p.n);
    } else {
        const ComponentSet cs = p.subspace_components();
        checks = verify_subspace(cs, p.basis ? &*p.basis : nullptr);
    }
    const bool ok = all_passed(checks);
    if (format == "json") {
        json j = envelope("verify", p);
        j["checks"] = checks_json(checks);
        j["all_passed"] = ok;
        return {dump_report(j), ok};
    }
    std::string out = text_header("verify", p) + checks_text(checks);
    out += ok ? "all checks passed\n" : "SOME CHECKS FAILED\n";
    return {out, ok};
}

std::string render_demo(const ProblemFile& p, const std::string& name, const std::string& format) {
    if (p.kind == ProblemKind::OperatorSpace) {
        if (format == "json") {
            json j = envelope("demo", p);
            j["demo"] = name;
            j["opspace"] = opspace_json(analyze_operator_space(*p.extreme_points, p.n));
            return dump_report(j);
        }
        std::string out = "demo: " + name + "\n" + text_header("opspace", p);
        out += opspace_text(analyze_operator_space(*p.extreme_points, p.n));
        return out;
    }
    const ComponentSet cs = p.subspace_components();
    const StarReport stars = star_satisfiers(cs);
    const BallPolytope ball = unit_ball_hrep(cs);
    const FacetReport facets = facet_classes(ball);
    const VertexList verts = enumerate_vertices(ball);
    const EmbeddingMap map = embed_into_linf(cs);
    const SpaceVerdict verdict = space_verdict(cs);
    if (format == "json") {
        json j = envelope("demo", p);
        j["demo"] = name;
        j["star_report"] = star_report_json(stars);
        j["facets"] = facet_report_json(ball, facets);
        j["vertex_list"] = vertex_list_json(ball, verts);
        j["embedding"] = embedding_json(map, verdict, p.s);
        return dump_report(j);
    }
    std::ostringstream os;
    os << "demo: " << name << "\n" << text_header("full report", p);
    os << star_report_text(stars);
    os << facet_report_text(ball, facets);
    os << vertex_list_text(ball, verts);
    os << embedding_text(map, verdict, p.s);
    return os.str();
}

ProblemFile load_input(const Options& opt, const std::string& command) {
    if (opt.input.empty()) throw ValidationError(command + " requires --input PATH");
    return parse_problem_file(opt.input);
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult result;

    CLI::App app{"polyball: exact analysis of finite-dimensional subspaces of l_inf^n"};
    app.require_subcommand(0, 1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_s, bool with_beta) {
        sub->add_option("--input", opt.input, "problem file (JSON, schema version 1)");
        sub->add_option("--format", opt.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_s) sub->add_option("--s", opt.s, "target dimension for embeddability");
        if (with_beta) sub->add_option("--beta", opt.beta, "coefficient vector, e.g. \"1,-1,1\"");
    };

    CLI::App* cmd_components = app.add_subcommand("components", "component classes and star verdicts");
    add_common(cmd_components, false, false);
    CLI::App* cmd_facets = app.add_subcommand("facets", "facet count of the unit ball (LP redundancy route)");
    add_common(cmd_facets, false, false);
    CLI::App* cmd_vertices = app.add_subcommand("vertices", "extreme points of the unit ball");
    add_common(cmd_vertices, false, false);
    CLI::App* cmd_embed = app.add_subcommand("embed", "embedding into l_inf^r and isometry verdicts");
    add_common(cmd_embed, true, false);
    CLI::App* cmd_opspace = app.add_subcommand("opspace", "operator-space facet and extreme-contraction counts");
    add_common(cmd_opspace, false, false);
    CLI::App* cmd_query = app.add_subcommand("query", "minimal face and extremality of a coefficient vector");
    add_common(cmd_query, false, true);
    CLI::App* cmd_verify = app.add_subcommand("verify", "cross-route invariant suite (PASS/FAIL per invariant)");
    add_common(cmd_verify, false, false);
    CLI::App* cmd_demo = app.add_subcommand("demo", "run a bundled demo dataset");
    cmd_demo->add_option("name", opt.demo_name, "demo name (see --list)");
    cmd_demo->add_option("--format", opt.format, "output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_demo->add_flag("--list", opt.list, "list bundled demo names");

    std::vector<const char*> argv;
    argv.push_back("polyball");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.output = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 1;
        result.error = std::string("error: ") + e.what() + "\n";
        return result;
    }

    try {
        if (cmd_components->parsed()) {
            result.output = render_components(load_input(opt, "components"), opt.format);
        } else if (cmd_facets->parsed()) {
            result.output = render_facets(load_input(opt, "facets"), opt.format);
        } else if (cmd_vertices->parsed()) {
            result.output = render_vertices(load_input(opt, "vertices"), opt.format);
        } else if (cmd_embed->parsed()) {
            result.output = render_embed(load_input(opt, "embed"), opt.format, opt.s);
        } else if (cmd_opspace->parsed()) {
            result.output = render_opspace(load_input(opt, "opspace"), opt.format);
        } else if (cmd_query->parsed()) {
            result.output = render_query(load_input(opt, "query"), opt.format, opt.beta);
        } else if (cmd_verify->parsed()) {
            auto [out, ok] = render_verify(load_input(opt, "verify"), opt.format);
            result.output = out;
            if (!ok) result.exit_code = 2;
        } else if (cmd_demo->parsed()) {
            if (opt.list) {
                std::ostringstream os;
                for (const auto& f : demo_fixtures()) os << f.name << "\n";
                result.output = os.str();
            } else if (opt.demo_name.empty()) {
                throw ValidationError("demo requires a name (or --list)");
            } else {
                const DemoFixture* fixture = find_demo(opt.demo_name);
                if (!fixture) throw ValidationError("unknown demo \"" + opt.demo_name + "\" (try demo --list)");
                result.output = render_demo(parse_problem_text(fixture->json, "demo " + fixture->name),
                                            fixture->name, opt.format);
            }
        } else {
            result.output = app.help();
        }
    } catch (const ValidationError& e) {
        result.exit_code = 1;
        result.error = std::string("error: ") + e.what() + "\n";
    } catch (const InternalInconsistencyError& e) {
        result.exit_code = 2;
        result.error = std::string("internal inconsistency: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.error = std::string("internal error: ") + e.what() + "\n";
    }
    return result;
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const RunResult result = run(args);
    if (!result.output.empty()) std::cout << result.output;
    if (!result.error.empty()) std::cerr << result.error;
    return result.exit_code;
}

}  // namespace polyball::cli
