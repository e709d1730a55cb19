#include "commands.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "inertia/catalog.hpp"
#include "inertia/errors.hpp"
#include "inertia/sampling.hpp"
#include "inertia/verify.hpp"
#include "inertia/version.hpp"
#include "inertia/witness_search.hpp"
#include "matrix_file.hpp"

namespace inertia::cli {

namespace {

using nlohmann::json;

json to_json(const Inertia& in) { return json::array({in.neg, in.zero, in.pos}); }

json to_json(const BipartiteDims& d) {
    return json{{"dim_a", d.dim_a}, {"dim_b", d.dim_b}};
}

/// Collects the command echo and results, then emits the run report.
class ReportSink {
  public:
    explicit ReportSink(std::string command)
        : start_(std::chrono::steady_clock::now()) {
        payload_["command"] = std::move(command);
        payload_["version"] = kVersion;
    }

    json& config() { return payload_["config"]; }
    json& results() { return payload_["results"]; }

    void finish(const std::optional<std::filesystem::path>& path) {
        const auto elapsed = std::chrono::steady_clock::now() - start_;
        payload_["wall_ms"] =
            std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(elapsed).count();
        if (!path) return;
        std::ofstream out(*path);
        if (!out) throw IoError("cannot write report: " + path->string());
        out << payload_.dump(2) << '\n';
    }

  private:
    json payload_;
    std::chrono::steady_clock::time_point start_;
};

std::string ranks_echo(const std::vector<std::size_t>& ranks) {
    if (ranks.empty()) return "default";
    std::string s;
    for (std::size_t i = 0; i < ranks.size(); ++i) s += (i ? "," : "") + std::to_string(ranks[i]);
    return s;
}

}  // namespace

BipartiteDims parse_dims(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw ParseError("expected dims as MxN, got: " + text);
    try {
        const std::size_t a = std::stoul(text.substr(0, x));
        const std::size_t b = std::stoul(text.substr(x + 1));
        if (a < 1 || b < 1) throw ParseError("dims must be at least 1x1");
        return BipartiteDims{a, b};
    } catch (const std::logic_error&) {
        throw ParseError("expected dims as MxN, got: " + text);
    }
}

Inertia parse_target(const std::string& text) {
    std::istringstream in(text);
    long long a = -1, b = -1, c = -1;
    char c1 = 0, c2 = 0;
    in >> a >> c1 >> b >> c2 >> c;
    if (!in || c1 != ',' || c2 != ',' || a < 0 || b < 0 || c < 0)
        throw ParseError("expected target as neg,zero,pos, got: " + text);
    return Inertia{static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                   static_cast<std::size_t>(c)};
}

int run_inertia(const InertiaCmd& cmd, std::ostream& out) {
    ReportSink report("inertia");
    const MatrixFile mf = read_matrix_file(cmd.input);
    BipartiteDims dims = cmd.dims.value_or(mf.dims());
    if (dims.product() != mf.dims().product())
        throw DimensionMismatch("--dims is inconsistent with the matrix order in the file");

    const ComplexMatrix m = mf.to_matrix();
    if (!m.is_hermitian()) throw NotHermitian("input matrix is not Hermitian within 1e-8");

    const Inertia in_m = inertia_of(m, cmd.zero_tol);
    const Inertia in_g = inertia_of(partial_transpose(m, dims), cmd.zero_tol);
    out << "In(M)   = " << in_m.str() << "\n";
    out << "In(M^G) = " << in_g.str() << "\n";

    report.config() = {{"input", cmd.input.string()},
                       {"dims", to_json(dims)},
                       {"zero_tol", cmd.zero_tol}};
    report.results() = {{"inertia", to_json(in_m)}, {"inertia_partial_transpose", to_json(in_g)}};
    report.finish(cmd.report);
    return 0;
}

int run_search(const SearchCmd& cmd, std::ostream& out) {
    ReportSink report("search");
    SearchConfig cfg;
    cfg.dims = cmd.dims;
    cfg.target = cmd.target;
    cfg.restarts = cmd.restarts != 0 ? cmd.restarts : (cmd.dims.product() >= 12 ? 200 : 50);
    cfg.max_iters = cmd.max_iters;
    cfg.seed = cmd.seed;
    cfg.zero_tol = cmd.zero_tol;
    cfg.margin = cmd.margin;
    cfg.separation_ratio = cmd.separation_ratio;
    cfg.validate();

    const CatalogEntry catalog = known_catalog(cmd.dims);
    const bool excluded = catalog.is_excluded(cmd.target);
    const WitnessResult result = target_inertia_search(cfg);
    const double threshold = certification_threshold(cfg);

    report.config() = {{"dims", to_json(cmd.dims)},
                       {"target", to_json(cmd.target)},
                       {"restarts", cfg.restarts},
                       {"max_iters", cmd.max_iters},
                       {"seed", cmd.seed},
                       {"zero_tol", cmd.zero_tol},
                       {"margin", cmd.margin},
                       {"separation_ratio", cmd.separation_ratio}};
    json& res = report.results();
    res["status"] = result.found() ? "found" : "not-found";
    res["achieved"] = to_json(result.achieved);
    res["residual"] = result.residual;
    res["restarts_used"] = result.restarts_used;
    res["certification_threshold"] = threshold;

    if (result.found()) {
        out << "FOUND witness for In(M^G) = " << cmd.target.str() << " after "
            << result.restarts_used << " restart(s), residual " << result.residual << "\n";
        out << "certified: PSD, zero class below " << cmd.zero_tol
            << " and nonzero classes beyond " << cmd.margin << " (relative), separation ratio "
            << cmd.margin / cmd.zero_tol << "\n";
        if (cmd.out) {
            write_matrix_file(*cmd.out, MatrixFile::from_matrix(*result.witness, cmd.dims));
            out << "witness written to " << cmd.out->string() << "\n";
            res["witness_path"] = cmd.out->string();
        }
    } else {
        out << "NOT FOUND: no certified witness for " << cmd.target.str() << " in "
            << result.restarts_used << " restarts; best residual " << result.residual
            << " (certification threshold " << threshold << ")\n";
        if (excluded) {
            out << "consistent with exclusion: the catalog rules out " << cmd.target.str()
                << " for these dims. This search is numerical corroboration only, not a proof.\n";
            res["note"] =
                "consistent with exclusion; numerical corroboration only, not a proof";
        } else {
            out << "the catalog does not exclude this target; more restarts may help.\n";
            res["note"] = "target not excluded by the catalog; search was inconclusive";
        }
        res["excluded_by_catalog"] = excluded;
    }
    report.finish(cmd.report);
    return 0;
}

int run_catalog(const CatalogCmd& cmd, std::ostream& out) {
    ReportSink report("catalog");
    const CatalogEntry e = known_catalog(cmd.dims);

    out << "N_{" << cmd.dims.dim_a << "," << cmd.dims.dim_b << "}\n";
    out << "members (" << e.known_members.size() << "):";
    for (const auto& in : e.known_members) out << " " << in.str();
    out << "\nexcluded (" << e.known_excluded.size() << "):";
    for (const auto& in : e.known_excluded) out << " " << in.str();
    out << "\ncomplete: " << (e.complete ? "yes" : "no") << "\n";
    if (!e.family.empty()) {
        out << "family (" << e.family.size() << "):";
        for (const auto& in : e.family) out << " " << in.str();
        out << "\n";
    }
    if (e.complete)
        out << "every inertia not listed as a member is excluded for these dims\n";

    report.config() = {{"dims", to_json(cmd.dims)}};
    json members = json::array(), excluded = json::array(), family = json::array();
    for (const auto& in : e.known_members) members.push_back(to_json(in));
    for (const auto& in : e.known_excluded) excluded.push_back(to_json(in));
    for (const auto& in : e.family) family.push_back(to_json(in));
    report.results() = {{"members", members},
                        {"excluded", excluded},
                        {"family", family},
                        {"complete", e.complete}};
    report.finish(cmd.report);
    return 0;
}

int run_verify(const VerifyCmd& cmd, std::ostream& out) {
    ReportSink report("verify");
    std::vector<std::string> names;
    if (cmd.lemma == "all")
        names = registered_lemmas();
    else
        names.push_back(cmd.lemma);

    report.config() = {{"lemma", cmd.lemma}, {"trials", cmd.trials}, {"seed", cmd.seed}};
    json rows = json::array();
    bool all_ok = true;
    for (const auto& name : names) {
        const VerificationReport r = verify_lemma(name, cmd.trials, cmd.seed);
        all_ok = all_ok && r.passed();
        out << (r.passed() ? "PASS " : "FAIL ") << name << ": worst defect " << r.worst_defect
            << " (tolerance " << r.tolerance << ", " << r.trials << " trials)\n";
        rows.push_back({{"lemma", r.lemma},
                        {"trials", r.trials},
                        {"passes", r.passes},
                        {"failures", r.failures},
                        {"worst_defect", r.worst_defect},
                        {"tolerance", r.tolerance},
                        {"defect_meaning", r.defect_meaning}});
    }
    report.results() = {{"reports", rows}, {"all_passed", all_ok}};
    report.finish(cmd.report);
    return all_ok ? 0 : 1;
}

int run_census(const CensusCmd& cmd, std::ostream& out) {
    ReportSink report("census");
    CensusOptions opts;
    opts.samples = cmd.samples;
    opts.rank_schedule = cmd.ranks;
    opts.seed = cmd.seed;
    opts.zero_tol = cmd.zero_tol;
    const auto histogram = inertia_census(cmd.dims, opts);
    const CatalogEntry catalog = known_catalog(cmd.dims);

    std::ostringstream csv;
    csv << "neg,zero,pos,count\n";
    for (const auto& [in, count] : histogram)
        csv << in.neg << "," << in.zero << "," << in.pos << "," << count << "\n";
    if (cmd.out) {
        std::ofstream f(*cmd.out);
        if (!f) throw IoError("cannot write census CSV: " + cmd.out->string());
        f << csv.str();
    } else {
        out << csv.str();
    }

    json flagged = json::array(), informational = json::array();
    bool hard_error = false;
    for (const auto& [in, count] : histogram) {
        if (in.neg == 0) continue;  // PPT observations are outside the catalog's scope
        const bool in_excluded =
            std::binary_search(catalog.known_excluded.begin(), catalog.known_excluded.end(), in);
        const bool member =
            std::binary_search(catalog.known_members.begin(), catalog.known_members.end(), in);
        if (in_excluded || (catalog.complete && !member)) {
            hard_error = true;
            flagged.push_back(to_json(in));
            out << "ERROR: observed " << in.str() << " (" << count
                << " samples), which the catalog excludes\n";
        } else if (!member) {
            informational.push_back(to_json(in));
            out << "note: observed " << in.str() << " (" << count
                << " samples) — outside known catalog (informational)\n";
        }
    }

    report.config() = {{"dims", to_json(cmd.dims)},
                       {"samples", cmd.samples},
                       {"ranks", ranks_echo(cmd.ranks)},
                       {"seed", cmd.seed},
                       {"zero_tol", cmd.zero_tol}};
    json rows = json::array();
    for (const auto& [in, count] : histogram)
        rows.push_back({{"inertia", to_json(in)}, {"count", count}});
    report.results() = {{"histogram", rows},
                        {"flagged_excluded", flagged},
                        {"outside_catalog", informational},
                        {"ok", !hard_error}};
    report.finish(cmd.report);
    return hard_error ? 1 : 0;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 2;
    if (dynamic_cast<const NotHermitian*>(&e)) return 3;
    if (dynamic_cast<const DimensionMismatch*>(&e)) return 4;
    if (dynamic_cast<const NonSquare*>(&e)) return 4;
    if (dynamic_cast<const IndexOutOfBounds*>(&e)) return 4;
    if (dynamic_cast<const BadRank*>(&e)) return 4;
    if (dynamic_cast<const UnknownLemma*>(&e)) return 5;
    if (dynamic_cast<const InvalidTarget*>(&e)) return 6;
    if (dynamic_cast<const IoError*>(&e)) return 7;
    return 1;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"inertia-lab: inertia of partial transposes of PSD matrices"};
    app.require_subcommand(1);

    std::string dims_text, target_text, ranks_text, report_text, out_text;

    // inertia
    auto* c_inertia = app.add_subcommand("inertia", "inertia of a matrix and its partial transpose");
    InertiaCmd icmd;
    std::string icmd_input;
    c_inertia->add_option("input", icmd_input, "matrix JSON file")->required();
    c_inertia->add_option("--dims", dims_text, "bipartite split MxN (default: from file)");
    c_inertia->add_option("--zero-tol", icmd.zero_tol, "relative zero threshold");
    c_inertia->add_option("--report", report_text, "write a JSON run report here");

    // search
    auto* c_search = app.add_subcommand("search", "search for a witness with a target inertia");
    SearchCmd scmd;
    c_search->add_option("--dims", dims_text, "bipartite split MxN")->required();
    c_search->add_option("--target", target_text, "target inertia neg,zero,pos")->required();
    c_search->add_option("--restarts", scmd.restarts,
                         "random restarts (default 50, or 200 from order 12 up)");
    c_search->add_option("--max-iters", scmd.max_iters, "compass poll cycles per restart");
    c_search->add_option("--seed", scmd.seed, "PRNG seed");
    c_search->add_option("--zero-tol", scmd.zero_tol, "relative zero threshold");
    c_search->add_option("--margin", scmd.margin, "relative margin for nonzero classes");
    c_search->add_option("--separation-ratio", scmd.separation_ratio, "margin/zero_tol floor");
    c_search->add_option("--out", out_text, "write the witness matrix JSON here");
    c_search->add_option("--report", report_text, "write a JSON run report here");

    // catalog
    auto* c_catalog = app.add_subcommand("catalog", "known members and exclusions of N_{m,n}");
    CatalogCmd ccmd;
    c_catalog->add_option("--dims", dims_text, "bipartite split MxN")->required();
    c_catalog->add_option("--report", report_text, "write a JSON run report here");

    // verify
    auto* c_verify = app.add_subcommand("verify", "randomized property suites for the inertia facts");
    VerifyCmd vcmd;
    c_verify->add_option("lemma", vcmd.lemma, "suite name or 'all'");
    c_verify->add_option("--trials", vcmd.trials, "trials per suite");
    c_verify->add_option("--seed", vcmd.seed, "PRNG seed");
    c_verify->add_option("--report", report_text, "write a JSON run report here");

    // census
    auto* c_census = app.add_subcommand("census", "inertia histogram of random states");
    CensusCmd ncmd;
    c_census->add_option("--dims", dims_text, "bipartite split MxN")->required();
    c_census->add_option("--samples", ncmd.samples, "number of random states");
    c_census->add_option("--ranks", ranks_text, "comma list cycled per sample (default d,d-1,d-2)");
    c_census->add_option("--seed", ncmd.seed, "PRNG seed");
    c_census->add_option("--zero-tol", ncmd.zero_tol, "relative zero threshold");
    c_census->add_option("--out", out_text, "write the CSV here (default: stdout)");
    c_census->add_option("--report", report_text, "write a JSON run report here");

    std::vector<const char*> argv;
    argv.push_back("inertia-lab");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const auto report_path = [&]() -> std::optional<std::filesystem::path> {
        if (report_text.empty()) return std::nullopt;
        return std::filesystem::path(report_text);
    }();
    const auto out_path = [&]() -> std::optional<std::filesystem::path> {
        if (out_text.empty()) return std::nullopt;
        return std::filesystem::path(out_text);
    }();

    try {
        if (c_inertia->parsed()) {
            icmd.input = icmd_input;
            if (!dims_text.empty()) icmd.dims = parse_dims(dims_text);
            icmd.report = report_path;
            return run_inertia(icmd, out);
        }
        if (c_search->parsed()) {
            scmd.dims = parse_dims(dims_text);
            scmd.target = parse_target(target_text);
            scmd.out = out_path;
            scmd.report = report_path;
            return run_search(scmd, out);
        }
        if (c_catalog->parsed()) {
            ccmd.dims = parse_dims(dims_text);
            ccmd.report = report_path;
            return run_catalog(ccmd, out);
        }
        if (c_verify->parsed()) {
            vcmd.report = report_path;
            return run_verify(vcmd, out);
        }
        if (c_census->parsed()) {
            ncmd.dims = parse_dims(dims_text);
            if (!ranks_text.empty()) {
                std::istringstream in(ranks_text);
                std::string tok;
                while (std::getline(in, tok, ',')) ncmd.ranks.push_back(std::stoul(tok));
            }
            ncmd.out = out_path;
            ncmd.report = report_path;
            return run_census(ncmd, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace inertia::cli
