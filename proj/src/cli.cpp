#include "chaincactus/cli.hpp"

#include "chaincactus/chain_model.hpp"
#include "chaincactus/closed_forms.hpp"
#include "chaincactus/engine.hpp"
#include "chaincactus/errors.hpp"
#include "chaincactus/extremal.hpp"
#include "chaincactus/report.hpp"
#include "chaincactus/verification.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace chaincactus {

namespace {

/// Raised for output files that cannot be written.
struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Auto cross-check against the pivot recursion up to this many vertices.
constexpr std::size_t kCrosscheckLimit = 24;

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::string default_format() {
    if (const char* env = std::getenv(kFormatEnvVar); env && *env) return env;
    return "json";
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file || !(file << text)) throw IoFailure("cannot write '" + path + "'");
}

Json envelope(const std::string& command, Json input, const std::string& engine, Json result, Clock::time_point start) {
    return Json{{"command", command},
                {"input", std::move(input)},
                {"engine", engine},
                {"result", std::move(result)},
                {"elapsed_ms", elapsed_ms(start)}};
}

Json poly_summary(const UniPoly& p) {
    Json j{{"polynomial", poly_to_json(p)}, {"text", to_string(p)}, {"psi", eval_at_one(p).get_str()}};
    const auto [deg, lead] = degree_and_leading(p);
    j["alpha"] = deg;
    j["mis_count"] = lead.get_str();
    return j;
}

std::string poly_text(const Json& r) {
    std::ostringstream s;
    s << "i(G;x) = " << r.at("text").get<std::string>() << "\n"
      << "psi = " << r.at("psi").get<std::string>() << "\n"
      << "alpha = " << r.at("alpha").dump() << "\n"
      << "mis_count = " << r.at("mis_count").get<std::string>() << "\n";
    return s.str();
}

// ---------------------------------------------------------------------------

struct PolyArgs {
    std::string spec;
    std::string engine = "transfer";
    std::vector<std::string> deletions;
    bool no_crosscheck = false;
    std::string format;
    std::string output;
};

int cmd_poly(const PolyArgs& a, std::ostream& out, std::ostream& err) {
    const auto start = Clock::now();
    const ChainSpec spec = parse_spec(a.spec);
    LabeledGraph g = build(spec);

    std::vector<VertexLabel> labels;
    for (const auto& d : a.deletions) labels.push_back(parse_label(d, spec.length()));
    for (const auto& l : labels) {
        if (!g.has(l)) throw ParseError("unknown vertex label " + to_string(l));
    }
    const LabeledGraph target = labels.empty() ? g : delete_vertices(g, labels);

    std::string engine = a.engine;
    UniPoly p;
    if (engine == "brute") {
        p = indpoly_bruteforce(target.graph());
    } else if (engine == "recursive") {
        p = indpoly_recursive(target.graph());
    } else {
        const bool last_cycle_deletion = labels.size() == 1 && spec.length() >= 2 &&
                                         labels[0].cycle == static_cast<int>(spec.length()) &&
                                         labels[0].position < spec.cycle_sizes.back();
        if (labels.empty() && spec.length() >= 1) {
            p = indpoly_chain(spec);
        } else if (last_cycle_deletion) {
            p = indpoly_chain_minus_last_vertex(spec, labels[0].position);
        } else {
            engine = "recursive";
            p = indpoly_recursive(target.graph());
        }
    }

    bool crosschecked = false;
    if (engine == "transfer" && !a.no_crosscheck && target.vertex_count() <= kCrosscheckLimit) {
        const UniPoly check = indpoly_recursive(target.graph());
        crosschecked = true;
        if (check != p) {
            err << "cross-check failed: transfer " << to_string(p) << ", recursive " << to_string(check) << "\n";
            return kExitVerificationFailed;
        }
    }

    Json input{{"spec", a.spec}, {"canonical", format_spec(spec)}, {"vertices", target.vertex_count()},
               {"edges", target.graph().edge_count()}};
    Json deleted = Json::array();
    for (const auto& l : labels) deleted.push_back(Json{{"cycle", l.cycle}, {"position", l.position}});
    input["deleted"] = std::move(deleted);

    const Json result = poly_summary(p);
    if (a.format == "json") {
        Json env = envelope("poly", std::move(input), engine, result, start);
        env["crosscheck"] = crosschecked;
        emit(env.dump(2) + "\n", a.output, out);
    } else {
        emit(poly_text(result), a.output, out);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct ClosedArgs {
    std::string family;
    std::optional<int> h;
    std::optional<int> n;
    std::string format;
    std::string output;
};

int cmd_closed(const ClosedArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    auto need = [&](const std::optional<int>& v, const char* name) {
        if (!v) throw ParseError(std::string("closed ") + a.family + " needs --" + name);
        return *v;
    };
    const int n = need(a.n, "n");
    UniPoly p;
    Json theorem = nullptr;
    Json input{{"family", a.family}, {"n", n}};
    if (a.family == "path") {
        if (n < 0) throw std::domain_error("path length must be >= 0");
        p = path_poly(n);
        if (n >= 1) theorem = Json{{"psi", psi_path(n).get_str()}};
    } else if (a.family == "cycle") {
        p = cycle_poly(n);
    } else {
        const int h = need(a.h, "h");
        input["h"] = h;
        if (a.family == "ortho") {
            p = ortho_poly(h, n);
            if (n >= 1) {
                theorem = Json{{"alpha", alpha_ortho(h, n)}};
                theorem["mis_count"] = (n >= 2 ? count_mis_ortho(h, n) : degree_and_leading(cycle_poly(h)).leading).get_str();
            }
        } else {
            p = meta_poly(h, n);
            if (n >= 1 && h >= 4) {
                theorem = Json{{"alpha", alpha_meta(h, n)}};
                theorem["mis_count"] = (n >= 2 ? count_mis_meta(h, n) : degree_and_leading(cycle_poly(h)).leading).get_str();
            }
        }
    }
    Json result = poly_summary(p);
    result["theorem"] = theorem;
    if (a.format == "json") {
        emit(envelope("closed", std::move(input), "closed_form", std::move(result), start).dump(2) + "\n", a.output, out);
    } else {
        std::string text = poly_text(result);
        if (!theorem.is_null()) text += "theorem = " + theorem.dump() + "\n";
        emit(text, a.output, out);
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
    std::string sizes;
    bool dedupe = false;
    unsigned jobs = 1;
    std::string format;
    std::string output;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    std::vector<int> sizes;
    try {
        sizes = parse_size_list(a.sizes);
        validate(ortho_spec(sizes));
        if (sizes.empty()) throw std::invalid_argument("sweep needs at least one cycle");
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    const SweepReport report = sweep(sizes, SweepOptions{a.dedupe, a.jobs});
    if (a.format == "csv" || a.format == "text") {
        emit(report_to_csv(report), a.output, out);
    } else {
        Json input{{"sizes", a.sizes}, {"dedupe", a.dedupe}, {"jobs", a.jobs}};
        emit(envelope("sweep", std::move(input), "transfer", report_to_json(report), start).dump(2) + "\n", a.output, out);
    }
    return report.all_ok() ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    std::string h;
    std::string n;
    std::string format;
    std::string output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const auto start = Clock::now();
    auto pick = [](const std::string& given, const char* fallback) { return parse_range(given.empty() ? fallback : given); };
    std::vector<std::pair<std::string, std::vector<PropertyCheck>>> suites;
    if (a.suite == "engines" || a.suite == "all") suites.emplace_back("engines", verify_engines(pick(a.h, "3..8"), pick(a.n, "1..4")));
    if (a.suite == "recurrences" || a.suite == "all") {
        suites.emplace_back("recurrences", verify_recurrences(pick(a.h, "4..8"), pick(a.n, "0..8")));
    }
    if (a.suite == "lemmas" || a.suite == "all") suites.emplace_back("lemmas", verify_lemmas(pick(a.h, "4..8"), pick(a.n, "2..5")));

    bool ok = true;
    Json props = Json::array();
    std::ostringstream text;
    for (const auto& [suite, checks] : suites) {
        for (const auto& c : checks) {
            ok = ok && c.pass;
            Json j{{"suite", suite}, {"name", c.name}, {"status", c.pass ? "pass" : "fail"}, {"checked", c.checked}};
            j["counterexample"] = c.pass ? Json(nullptr) : Json(c.counterexample);
            props.push_back(std::move(j));
            text << (c.pass ? "PASS " : "FAIL ") << suite << "/" << c.name << " (" << c.checked << " checks)";
            if (!c.pass) text << ": " << c.counterexample;
            text << "\n";
        }
    }
    if (a.format == "json") {
        Json input{{"suite", a.suite}, {"h", a.h}, {"n", a.n}};
        Json result{{"properties", std::move(props)}, {"all_pass", ok}};
        emit(envelope("verify", std::move(input), "all", std::move(result), start).dump(2) + "\n", a.output, out);
    } else {
        emit(text.str(), a.output, out);
    }
    return ok ? kExitOk : kExitVerificationFailed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Independence polynomials of chain cacti"};
    app.require_subcommand(1);
    std::string format = default_format();
    std::string output;

    PolyArgs poly;
    auto* poly_cmd = app.add_subcommand("poly", "Independence polynomial of a chain cactus");
    poly_cmd->add_option("spec", poly.spec, "Chain spec, e.g. 6,6,6/2 or 6^4/1,2")->required();
    poly_cmd->add_option("--engine", poly.engine, "brute, recursive or transfer")
        ->check(CLI::IsMember({"brute", "recursive", "transfer"}));
    poly_cmd->add_option("--delete", poly.deletions, "Delete vertex 'i:k' (v_k^(i)); i may be 'n'");
    poly_cmd->add_flag("--no-crosscheck", poly.no_crosscheck, "Skip the recursive cross-check of the transfer result");

    ClosedArgs closed;
    auto* closed_cmd = app.add_subcommand("closed", "Closed forms for paths, cycles, ortho and meta chains");
    closed_cmd->set_help_flag("--help", "Print this help message and exit");
    closed_cmd->add_option("family", closed.family, "path, cycle, ortho or meta")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "ortho", "meta"}));
    closed_cmd->add_option("--h", closed.h, "Cycle size");
    closed_cmd->add_option("--n", closed.n, "Chain length (or path/cycle size)");

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "Psi over every chain with a fixed size list");
    sweep_cmd->add_option("sizes", sw.sizes, "Cycle sizes, e.g. 6,6,6 or 6^5")->required();
    sweep_cmd->add_flag("--dedupe", sw.dedupe, "Drop chains that are reversals of earlier ones");
    sweep_cmd->add_option("--jobs", sw.jobs, "Worker threads")->check(CLI::PositiveNumber);

    VerifyArgs ver;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
    verify_cmd->set_help_flag("--help", "Print this help message and exit");
    verify_cmd->add_option("suite", ver.suite, "lemmas, recurrences, engines or all")
        ->required()
        ->check(CLI::IsMember({"lemmas", "recurrences", "engines", "all"}));
    verify_cmd->add_option("--h", ver.h, "Cycle size range, e.g. 3..8");
    verify_cmd->add_option("--n", ver.n, "Chain length range, e.g. 1..4");

    for (auto* sub : {poly_cmd, closed_cmd, sweep_cmd, verify_cmd}) {
        sub->add_option("--format", format, "Output format (json, text, csv)")->check(CLI::IsMember({"json", "text", "csv"}));
        sub->add_option("-o,--output", output, "Write the result to a file instead of stdout");
    }

    try {
        std::vector<std::string> reversed_args(args.rbegin(), args.rend());
        app.parse(reversed_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParseError;
    }

    try {
        if (*poly_cmd) {
            poly.format = format;
            poly.output = output;
            return cmd_poly(poly, out, err);
        }
        if (*closed_cmd) {
            closed.format = format;
            closed.output = output;
            return cmd_closed(closed, out);
        }
        if (*sweep_cmd) {
            sw.format = format;
            sw.output = output;
            return cmd_sweep(sw, out);
        }
        ver.format = format;
        ver.output = output;
        return cmd_verify(ver, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }
}

} // namespace chaincactus
