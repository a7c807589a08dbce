#include "orthofix/cli.hpp"

#include "orthofix/contraction.hpp"
#include "orthofix/corpus.hpp"
#include "orthofix/metric.hpp"
#include "orthofix/oracle.hpp"
#include "orthofix/relational.hpp"
#include "orthofix/solver.hpp"
#include "orthofix/space_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>

namespace orthofix {

namespace {

using json = nlohmann::ordered_json;

constexpr int schema_version = 1;

json header(const char* command)
{
    json j = json::object();
    j["schema"] = schema_version;
    j["command"] = command;
    return j;
}

std::string label_set(const FiniteSpace& space, const std::vector<Index>& xs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : ",") + space.label(xs[i]);
    }
    return out + "}";
}

std::string pair_text(const FiniteSpace& space, const IndexPair& p)
{
    return "(" + space.label(p.first) + "," + space.label(p.second) + ")";
}

json pair_json(const std::optional<IndexPair>& p)
{
    if (!p) {
        return nullptr;
    }
    return json::array({p->first, p->second});
}

json rat_json(const std::optional<Rat>& r)
{
    if (!r) {
        return nullptr;
    }
    return r->to_string();
}

json pairs_json(const std::vector<IndexPair>& ps)
{
    json arr = json::array();
    for (const auto& p : ps) {
        arr.push_back(json::array({p.first, p.second}));
    }
    return arr;
}

const SelfMap& require_map(const SpaceFile& file)
{
    if (!file.map) {
        throw InputError("map: missing (required by this command)");
    }
    return *file.map;
}

json contraction_json(const ContractionReport<Rat>& r)
{
    json j = json::object();
    j["kind"] = std::string(kind_name(r.kind));
    j["feasible"] = r.feasible;
    j["minimal_k"] = rat_json(r.minimal_k);
    j["admissible"] = r.admissible;
    j["witness_max"] = pair_json(r.witness_max);
    j["infeasible_witness"] = pair_json(r.infeasible_witness);
    j["pairs_scanned"] = r.pairs_scanned;
    return j;
}

std::string contraction_line(const FiniteSpace& space, const ContractionReport<Rat>& r)
{
    std::string line = std::string(kind_name(r.kind)) + ": ";
    if (!r.feasible) {
        return line + "infeasible, witness " + pair_text(space, *r.infeasible_witness)
               + " (M = 0 < d(Tx,Ty))";
    }
    line += std::string(r.admissible ? "admissible" : "inadmissible") + ", minimal k = " + r.minimal_k->to_string();
    if (r.witness_max) {
        line += ", witness " + pair_text(space, *r.witness_max);
    }
    return line;
}

json hypothesis_json(const HypothesisReport& h)
{
    json j = json::object();
    j["mode"] = std::string(mode_name(h.mode));
    j["has_weak_element"] = h.has_weak_element;
    j["preserving"] = h.preserving;
    j["contraction_feasible"] = h.contraction_feasible;
    j["contraction_admissible"] = h.contraction_admissible;
    j["minimal_k"] = rat_json(h.minimal_k);
    j["orbital_completeness"] = "holds (finite space)";
    j["orbital_continuity"] = "holds (finite space)";
    j["o1_mode_holds"] = h.o1_mode_holds;
    j["all_hold"] = h.all_hold;
    return j;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& path, bool as_json, std::ostream& out)
{
    const SpaceFile file = parse_space_file(path);
    const FiniteSpace& space = file.space;
    const auto cls = classify_orthogonality(space);
    if (as_json) {
        json j = header("classify");
        j["verdict"] = std::string(verdict_name(cls.verdict));
        j["strong_elements"] = cls.strong_elements;
        j["weak_elements"] = cls.weak_elements;
        out << j.dump(2) << "\n";
    } else {
        out << "classification: " << verdict_name(cls.verdict) << "\n";
        out << "strong orthogonal elements: " << label_set(space, cls.strong_elements) << "\n";
        out << "weak orthogonal elements: " << label_set(space, cls.weak_elements) << "\n";
    }
    return cls.weak_elements.empty() ? exit_check_failed : exit_success;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const std::string& path, HypothesisMode mode, bool as_json, std::ostream& out)
{
    const SpaceFile file = parse_space_file(path);
    const FiniteSpace& space = file.space;
    const SelfMap& map = require_map(file);

    const auto cls = classify_orthogonality(space);
    const auto preservation = is_ow_preserving(space, map);
    const auto hypotheses = hypothesis_check(space, map, mode);
    const auto fixed = brute_force_fixed_points(space, map);
    std::vector<ContractionReport<Rat>> reports;
    for (auto kind : all_contraction_kinds) {
        reports.push_back(check_contraction(kind, space, map));
    }
    const auto hierarchy = hierarchy_check(space, map);
    bool hierarchy_ok = true;
    for (const auto& v : hierarchy) {
        hierarchy_ok = hierarchy_ok && v.passed;
    }
    const bool ok = hypotheses.all_hold && hierarchy_ok;

    if (as_json) {
        json j = header("verify");
        j["points"] = space.size();
        j["metric_ok"] = true;
        j["classification"] = {{"verdict", std::string(verdict_name(cls.verdict))},
                               {"strong_elements", cls.strong_elements},
                               {"weak_elements", cls.weak_elements}};
        j["preservation"] = {{"preserving", preservation.preserving},
                             {"violations", pairs_json(preservation.violations)}};
        json kinds = json::array();
        for (const auto& r : reports) {
            kinds.push_back(contraction_json(r));
        }
        j["contraction"] = std::move(kinds);
        json h = json::array();
        for (const auto& v : hierarchy) {
            h.push_back({{"name", v.name}, {"applicable", v.applicable}, {"passed", v.passed},
                         {"witness", pair_json(v.witness)}});
        }
        j["hierarchy"] = std::move(h);
        j["hypotheses"] = hypothesis_json(hypotheses);
        j["fixed_points"] = fixed;
        j["ok"] = ok;
        out << j.dump(2) << "\n";
        return ok ? exit_success : exit_check_failed;
    }

    out << "space: " << space.size() << " points, " << space.relation().pairs().size() << " relation pairs\n";
    out << "metric: ok\n";
    out << "classification: " << verdict_name(cls.verdict) << "\n";
    out << "strong orthogonal elements: " << label_set(space, cls.strong_elements) << "\n";
    out << "weak orthogonal elements: " << label_set(space, cls.weak_elements) << "\n";
    out << "preserving: " << (preservation.preserving ? "true" : "false");
    for (const auto& p : preservation.violations) {
        out << " " << pair_text(space, p);
    }
    out << "\n";
    out << "orbital O_w-completeness: holds (finite space)\n";
    out << "orbital O_w-continuity: holds (finite space)\n";
    out << "condition (O1): " << (hypotheses.o1_mode_holds ? "holds" : "fails");
    if (hypotheses.o1_witness) {
        out << " (orbit of " << space.label(*hypotheses.o1_witness) << ")";
    }
    out << "\n";
    const auto& generalized = reports[static_cast<std::size_t>(ContractionKind::generalized_perp)];
    if (generalized.minimal_k) {
        out << "generalized k = " << *generalized.minimal_k << "\n";
    }
    for (const auto& r : reports) {
        out << "  " << contraction_line(space, r) << "\n";
    }
    for (const auto& v : hierarchy) {
        if (!v.passed) {
            out << "hierarchy FAIL: " << v.name;
            if (v.witness) {
                out << " at " << pair_text(space, *v.witness);
            }
            out << "\n";
        }
    }
    if (hierarchy_ok) {
        out << "hierarchy: all implications hold\n";
    }
    out << "fixed points: " << label_set(space, fixed) << "\n";
    out << "hypotheses (" << mode_name(mode) << "): " << (hypotheses.all_hold ? "all hold" : "not all hold") << "\n";
    return ok ? exit_success : exit_check_failed;
}

// -------------------------------------------------------------- estimate-k

int cmd_estimate(const std::string& path, const std::string& kind_text, bool as_json, std::ostream& out)
{
    const ContractionKind kind = parse_kind(kind_text);
    const SpaceFile file = parse_space_file(path);
    const auto report = check_contraction(kind, file.space, require_map(file));
    if (as_json) {
        json j = header("estimate-k");
        j.update(contraction_json(report));
        out << j.dump(2) << "\n";
    } else {
        out << contraction_line(file.space, report) << "\n";
    }
    return report.admissible ? exit_success : exit_check_failed;
}

// ------------------------------------------------------------------- solve

struct SolveArgs {
    std::string path;
    std::string start;
    std::string eps;
    std::string k;
    std::size_t max_iter = 1000;
    bool allow_any_start = false;
    bool trust_k = false;
    bool json = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out)
{
    const SpaceFile file = parse_space_file(a.path);
    const FiniteSpace& space = file.space;
    const SelfMap& map = require_map(file);

    Index start = 0;
    if (a.start.empty()) {
        const auto weak = weak_orthogonal_elements(space);
        if (weak.empty()) {
            throw PreconditionError("the space has no weak orthogonal element to start from");
        }
        start = weak.front();
    } else {
        const auto found = space.index_of(a.start);
        if (!found) {
            throw InputError("--start: no point labelled '" + a.start + "'");
        }
        start = *found;
    }

    PicardOptions options;
    options.max_iter = a.max_iter;
    options.allow_any_start = a.allow_any_start;
    options.trust_k = a.trust_k;
    if (!a.eps.empty()) {
        options.eps = Rat::parse(a.eps);
    }
    if (!a.k.empty()) {
        options.k = Rat::parse(a.k);
    }
    const PicardTrace trace = picard_solve(space, map, start, options);

    if (a.json) {
        json j = header("solve");
        j["start"] = trace.start;
        j["certified"] = trace.certified;
        j["k"] = trace.k.to_string();
        j["iterates"] = trace.iterates;
        json labels = json::array();
        json steps = json::array();
        json bounds = json::array();
        for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
            labels.push_back(space.label(trace.iterates[n]));
            steps.push_back(trace.step_distances[n].to_string());
            bounds.push_back(trace.apriori_bounds[n].to_string());
        }
        j["iterate_labels"] = std::move(labels);
        j["step_distances"] = std::move(steps);
        j["apriori_bounds"] = std::move(bounds);
        j["applications"] = trace.applications();
        j["stop"] = std::string(stop_reason_name(trace.stop));
        j["converged"] = trace.converged;
        j["fixed_point"] = trace.fixed_point ? json(space.label(*trace.fixed_point)) : json(nullptr);
        out << j.dump(2) << "\n";
    } else {
        out << "start: " << space.label(start);
        if (!trace.certified) {
            out << " (uncertified: not a weak orthogonal element)";
        }
        out << "\nk = " << trace.k << "\n";
        out << "n\tx_n\td(x_n,Tx_n)\tbound k^n/(1-k) d(x_0,x_1)\n";
        for (std::size_t n = 0; n < trace.iterates.size(); ++n) {
            out << n << "\t" << space.label(trace.iterates[n]) << "\t" << trace.step_distances[n] << "\t"
                << trace.apriori_bounds[n] << "\n";
        }
        out << "stop: " << stop_reason_name(trace.stop) << " after " << trace.applications() << " applications\n";
        if (trace.fixed_point) {
            out << "fixed point: " << space.label(*trace.fixed_point) << "\n";
        } else {
            out << "fixed point: none\n";
        }
    }
    return trace.converged ? exit_success : exit_check_failed;
}

// ------------------------------------------------------------------ corpus

int cmd_corpus(const std::string& name, bool list, bool as_json, std::ostream& out)
{
    if (list) {
        const auto cases = list_cases();
        if (as_json) {
            json j = header("corpus");
            json arr = json::array();
            for (const auto& c : cases) {
                arr.push_back({{"name", c.name}, {"summary", c.summary}});
            }
            j["cases"] = std::move(arr);
            out << j.dump(2) << "\n";
        } else {
            for (const auto& c : cases) {
                out << c.name << "\t" << c.summary << "\n";
            }
        }
        return exit_success;
    }

    std::vector<CaseReport> reports;
    if (name.empty()) {
        for (const auto& c : list_cases()) {
            reports.push_back(run_case(c.name));
        }
    } else {
        reports.push_back(run_case(name));
    }
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.passed();
    }
    if (as_json) {
        json j = header("corpus");
        json cases = json::array();
        for (const auto& r : reports) {
            json assertions = json::array();
            for (const auto& a : r.assertions) {
                assertions.push_back({{"name", a.name},
                                      {"source", std::string(source_name(a.source))},
                                      {"expected", a.expected},
                                      {"actual", a.actual},
                                      {"outcome", std::string(outcome_name(a.outcome))}});
            }
            cases.push_back({{"name", r.name}, {"passed", r.passed()}, {"assertions", std::move(assertions)}});
        }
        j["cases"] = std::move(cases);
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            out << render_text(r);
        }
        out << (ok ? "corpus: all assertions pass\n" : "corpus: FAILURES\n");
    }
    return ok ? exit_success : exit_check_failed;
}

// ------------------------------------------------------------------- audit

struct AuditArgs {
    GenParams params;
    std::string density = "1/2";
    std::string dump_dir;
    bool json = false;
};

int cmd_audit(AuditArgs a, std::ostream& out)
{
    a.params.relation_density = Rat::parse(a.density);
    a.params.validate();
    const AuditSummary s = theorem_audit(a.params);
    const bool complete = s.hypotheses_satisfied == a.params.trials;
    const bool ok = complete && s.failures.empty() && s.hierarchy_failures.empty();

    if (!a.dump_dir.empty()) {
        std::filesystem::create_directories(a.dump_dir);
        for (const auto& f : s.failures) {
            const auto file = std::filesystem::path(a.dump_dir) / ("failure_draw" + std::to_string(f.draw) + ".json");
            std::ofstream(file) << space_to_json(f.space, f.map);
        }
    }

    const Rat acceptance = s.trials_run == 0
                               ? Rat(0)
                               : Rat(static_cast<std::int64_t>(s.hypotheses_satisfied),
                                     static_cast<std::int64_t>(s.trials_run));
    if (a.json) {
        json j = header("audit");
        const GenParams& p = s.params;
        j["params"] = {{"seed", p.seed},
                       {"trials", p.trials},
                       {"min_points", p.min_points},
                       {"max_points", p.max_points},
                       {"weight_range", json::array({p.weight_lo, p.weight_hi})},
                       {"density", p.relation_density.to_string()},
                       {"max_map_attempts", p.max_map_attempts}};
        j["trials_run"] = s.trials_run;
        j["hypotheses_satisfied"] = s.hypotheses_satisfied;
        j["rejected"] = s.rejected;
        j["map_candidates"] = s.map_candidates;
        j["acceptance_rate"] = acceptance.to_string();
        j["conclusion_verified"] = s.conclusion_verified;
        j["traces_checked"] = s.traces_checked;
        json failures = json::array();
        for (const auto& f : s.failures) {
            failures.push_back({{"draw", f.draw},
                                {"seed", f.seed},
                                {"discrepancy", f.discrepancy},
                                {"space", json::parse(space_to_json(f.space, f.map))}});
        }
        j["failures"] = std::move(failures);
        json hierarchy = json::array();
        for (const auto& h : s.hierarchy_failures) {
            hierarchy.push_back({{"draw", h.draw}, {"implication", h.implication}, {"witness", pair_json(h.witness)}});
        }
        j["hierarchy_failures"] = std::move(hierarchy);
        j["ok"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "audit: seed " << s.params.seed << ", " << s.hypotheses_satisfied << " accepted instances of "
            << s.trials_run << " drawn spaces (acceptance " << acceptance << ")\n";
        out << "conclusion verified: " << s.conclusion_verified << "/" << s.hypotheses_satisfied << "\n";
        out << "Picard traces checked: " << s.traces_checked << "\n";
        out << "hierarchy failures: " << s.hierarchy_failures.size() << "\n";
        out << "failures: " << s.failures.size() << "\n";
        for (const auto& f : s.failures) {
            out << "  draw " << f.draw << " (stream seed " << f.seed << "): " << f.discrepancy << "\n";
        }
        if (!complete) {
            out << "requested " << a.params.trials << " accepted instances; draw limit reached\n";
        }
    }
    return ok ? exit_success : exit_check_failed;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Verification toolkit for metric spaces with an orthogonality relation"};
    app.require_subcommand(1);

    std::string path;
    bool as_json = false;

    auto* classify = app.add_subcommand("classify", "Orthogonal / weak orthogonal elements of a space");
    classify->add_option("file", path, "space-definition JSON file")->required();
    classify->add_flag("--json", as_json, "emit JSON");

    std::string mode_text = "orbital-continuity";
    auto* verify = app.add_subcommand("verify", "Check every theorem hypothesis and contraction kind");
    verify->add_option("file", path, "space-definition JSON file")->required();
    verify->add_option("--mode", mode_text, "orbital-continuity or O1")->capture_default_str();
    verify->add_flag("--json", as_json, "emit JSON");

    std::string kind_text = "generalized_perp";
    auto* estimate = app.add_subcommand("estimate-k", "Minimal contraction constant for one kind");
    estimate->add_option("file", path, "space-definition JSON file")->required();
    estimate->add_option("--kind", kind_text,
                         "banach_perp, ciric, kannan, chatterjea, generalized_perp or unrestricted_lipschitz")
        ->capture_default_str();
    estimate->add_flag("--json", as_json, "emit JSON");

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Certified Picard iteration");
    solve->add_option("file", solve_args.path, "space-definition JSON file")->required();
    solve->add_option("--start", solve_args.start, "start label (default: lowest weak orthogonal element)");
    solve->add_option("--eps", solve_args.eps, "stop once the a-priori bound is <= eps (p/q)");
    solve->add_option("--max-iter", solve_args.max_iter, "maximum map applications")->capture_default_str();
    auto* k_opt = solve->add_option("--k", solve_args.k, "contraction constant (default: minimal generalized k)");
    solve->add_flag("--allow-any-start", solve_args.allow_any_start, "accept a start that is not a weak element");
    solve->add_flag("--trust-k", solve_args.trust_k, "do not check --k against the map")->needs(k_opt);
    solve->add_flag("--json", solve_args.json, "emit JSON");

    std::string case_name;
    bool list = false;
    auto* corpus = app.add_subcommand("corpus", "Run the worked-example corpus");
    auto* case_opt = corpus->add_option("--case", case_name, "run a single case");
    corpus->add_flag("--list", list, "list registered cases")->excludes(case_opt);
    corpus->add_flag("--json", as_json, "emit JSON");

    AuditArgs audit_args;
    auto* audit = app.add_subcommand("audit", "Randomized audit of the fixed-point theorem");
    audit->add_option("--trials", audit_args.params.trials, "accepted instances to audit")->capture_default_str();
    audit->add_option("--seed", audit_args.params.seed, "64-bit seed")->capture_default_str();
    audit->add_option("--min-points", audit_args.params.min_points, "fewest points per space")->capture_default_str();
    audit->add_option("--max-points", audit_args.params.max_points, "most points per space (<= 8)")
        ->capture_default_str();
    audit->add_option("--weight-lo", audit_args.params.weight_lo, "smallest edge weight")->capture_default_str();
    audit->add_option("--weight-hi", audit_args.params.weight_hi, "largest edge weight")->capture_default_str();
    audit->add_option("--density", audit_args.density, "relation density p/q")->capture_default_str();
    audit->add_option("--max-map-attempts", audit_args.params.max_map_attempts, "candidate maps per space")
        ->capture_default_str();
    audit->add_option("--dump-dir", audit_args.dump_dir, "write failing instances here as space files");
    audit->add_flag("--json", audit_args.json, "emit JSON");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input_error;
    }

    try {
        if (*classify) {
            return cmd_classify(path, as_json, out);
        }
        if (*verify) {
            return cmd_verify(path, parse_mode(mode_text), as_json, out);
        }
        if (*estimate) {
            return cmd_estimate(path, kind_text, as_json, out);
        }
        if (*solve) {
            return cmd_solve(solve_args, out);
        }
        if (*corpus) {
            return cmd_corpus(case_name, list, as_json, out);
        }
        if (*audit) {
            return cmd_audit(audit_args, out);
        }
    } catch (const CertificateError& e) {
        err << "certificate failure: " << e.what() << "\n";
        return exit_check_failed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

} // namespace orthofix
