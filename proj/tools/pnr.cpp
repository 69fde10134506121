// Batch CLI for the pnr library: quality tables, efficiency curves and
// thresholds, element-count scaling, dark-count sweeps, loop exit-probability
// scans and Monte Carlo validation. Every file output is paired with a
// manifest from which the run can be reproduced via --config.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "pnr/mc_oracle.hpp"
#include "pnr/parallel.hpp"
#include "pnr/quality.hpp"
#include "pnr/solvers.hpp"
#include "pnr/table.hpp"
#include "pnr/version.hpp"

using json = nlohmann::json;
using namespace pnr;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailed = 1;
constexpr int kExitInvalidArguments = 2;
constexpr int kExitNoSolution = 3;
constexpr int kExitUnverified = 4;

// ---------------------------------------------------------------------------
// Range syntax: "start..end[:step]", inclusive; a bare scalar is a 1-element
// range. Integer ranges default to step 1; real ranges require a step.
// ---------------------------------------------------------------------------

std::vector<double> parse_real_values(const std::string& text, const std::string& flag) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {std::stod(text)};
        const double start = std::stod(text.substr(0, dots));
        const auto colon = text.find(':', dots + 2);
        const double end = std::stod(text.substr(dots + 2, colon - dots - 2));
        if (colon == std::string::npos)
            throw std::invalid_argument(flag + ": real ranges need an explicit step");
        const double step = std::stod(text.substr(colon + 1));
        if (!(step > 0.0) || end < start)
            throw std::invalid_argument(flag + ": malformed range \"" + text + "\"");
        std::vector<double> values;
        for (int i = 0;; ++i) {
            const double v = start + i * step;
            if (v > end + 1e-12 * std::max(1.0, std::abs(end))) break;
            values.push_back(std::min(v, end));
        }
        return values;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": cannot parse \"" + text + "\"");
    }
}

std::vector<int> parse_int_values(const std::string& text, const std::string& flag) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) return {std::stoi(text)};
        const int start = std::stoi(text.substr(0, dots));
        const auto colon = text.find(':', dots + 2);
        const int end = std::stoi(text.substr(dots + 2, colon - dots - 2));
        const int step = colon == std::string::npos ? 1 : std::stoi(text.substr(colon + 1));
        if (step <= 0 || end < start)
            throw std::invalid_argument(flag + ": malformed range \"" + text + "\"");
        std::vector<int> values;
        for (int v = start; v <= end; v += step) values.push_back(v);
        return values;
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument(flag + ": cannot parse \"" + text + "\"");
    }
}

double parse_scalar(const std::string& text, const std::string& flag) {
    const auto values = parse_real_values(text, flag);
    if (values.size() != 1)
        throw std::invalid_argument(flag + ": expected a single value, got a range");
    return values.front();
}

// ---------------------------------------------------------------------------
// Options shared by the subcommands. Range-capable flags stay strings so that
// config files mirror the command line exactly.
// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string detector = "spatial";
    int elements = 8;
    double coupler = 1.0;
    std::string exit_prob = "0.5";
    double survival = 1.0;
    int max_loops = 1;
    std::string eta = "1.0";
    std::string dark = "0.0";
    std::string set = "full";
    double mu_max = -1.0; // <0: default to n
    std::string n = "1";
    double q = 0.5;
    int m_max = -1; // <0: policy default
    double tail_tol = 1e-12;
    int probe_len = 16;
    std::string out;
    std::string format = "csv";
    std::string config_path;
};

void add_detector_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--detector", o.detector, "Detector architecture: spatial|temporal|loop")
        ->check(CLI::IsMember({"spatial", "temporal", "loop"}));
    cmd->add_option("--elements", o.elements, "Element count M (spatial/temporal)");
    cmd->add_option("--coupler", o.coupler, "Coupler efficiency eta_c (temporal)");
    cmd->add_option("--exit-prob", o.exit_prob, "Loop exit probability T");
    cmd->add_option("--survival", o.survival, "Loop survival probability per pass");
    cmd->add_option("--max-loops", o.max_loops, "Maximum loop passes");
    cmd->add_option("--eta", o.eta, "Quantum efficiency");
    cmd->add_option("--dark", o.dark, "Dark-count probability per window");
}

void add_set_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--set", o.set, "Distribution set: full|poisson")
        ->check(CLI::IsMember({"full", "poisson"}));
    cmd->add_option("--mu-max", o.mu_max, "Poisson mean cap (default: n)");
}

void add_policy_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m-max", o.m_max, "Override the tabulated photon-number cap");
    cmd->add_option("--tail-tol", o.tail_tol, "Neglected-tail tolerance");
    cmd->add_option("--probe-len", o.probe_len, "Monotone-tail probe length");
}

void add_output_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--out", o.out, "Destination file (stdout if omitted)");
    cmd->add_option("--format", o.format, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", o.config_path,
                    "JSON config or manifest mirroring the flags; flags override");
}

// Fills flags the user did not pass from a config / manifest file. Flags a
// subcommand does not expose are skipped.
void merge_config(CLI::App* cmd, CommonOpts& o, const json& params) {
    auto overridable = [&](const char* flag, const char* key) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt != nullptr && opt->count() == 0 && params.contains(key);
    };
    auto fill_string = [&](const char* flag, const char* key, std::string& target) {
        if (!overridable(flag, key)) return;
        const json& v = params.at(key);
        if (v.is_string())
            target = v.get<std::string>();
        else
            target = v.dump();
    };
    auto fill_int = [&](const char* flag, const char* key, int& target) {
        if (overridable(flag, key)) target = params.at(key).get<int>();
    };
    auto fill_double = [&](const char* flag, const char* key, double& target) {
        if (overridable(flag, key)) target = params.at(key).get<double>();
    };
    fill_string("--detector", "detector", o.detector);
    fill_int("--elements", "elements", o.elements);
    fill_double("--coupler", "coupler", o.coupler);
    fill_string("--exit-prob", "exit_prob", o.exit_prob);
    fill_double("--survival", "survival", o.survival);
    fill_int("--max-loops", "max_loops", o.max_loops);
    fill_string("--eta", "eta", o.eta);
    fill_string("--dark", "dark", o.dark);
    fill_string("--set", "set", o.set);
    fill_double("--mu-max", "mu_max", o.mu_max);
    fill_string("--n", "n", o.n);
    fill_double("--q", "q", o.q);
    fill_int("--m-max", "m_max", o.m_max);
    fill_double("--tail-tol", "tail_tol", o.tail_tol);
    fill_int("--probe-len", "probe_len", o.probe_len);
    fill_string("--format", "format", o.format);
}

json load_config_params(const std::string& path, const std::string& command) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("--config: cannot open " + path);
    json doc = json::parse(in);
    if (doc.contains("command") && doc.at("command").get<std::string>() != command)
        throw std::invalid_argument("--config: manifest was recorded for subcommand '" +
                                    doc.at("command").get<std::string>() + "'");
    if (doc.contains("params")) return doc.at("params");
    return doc;
}

json base_params(const CommonOpts& o) {
    json p;
    p["detector"] = o.detector;
    p["elements"] = o.elements;
    p["coupler"] = o.coupler;
    p["exit_prob"] = o.exit_prob;
    p["survival"] = o.survival;
    p["max_loops"] = o.max_loops;
    p["eta"] = o.eta;
    p["dark"] = o.dark;
    p["set"] = o.set;
    p["mu_max"] = o.mu_max;
    p["n"] = o.n;
    p["q"] = o.q;
    p["m_max"] = o.m_max;
    p["tail_tol"] = o.tail_tol;
    p["probe_len"] = o.probe_len;
    p["format"] = o.format;
    return p;
}

DetectorConfig make_detector(const CommonOpts& o, double eta, double dark, double exit_prob) {
    if (o.detector == "spatial")
        return SpatialArrayConfig(o.elements, ClickModel(eta, dark));
    if (o.detector == "temporal")
        return TemporalArrayConfig(o.elements, o.coupler, ClickModel(eta, dark));
    return LoopDetectorConfig(exit_prob, o.survival, o.max_loops, ClickModel(eta, dark));
}

DetectorConfig make_detector(const CommonOpts& o) {
    return make_detector(o, parse_scalar(o.eta, "--eta"), parse_scalar(o.dark, "--dark"),
                         parse_scalar(o.exit_prob, "--exit-prob"));
}

DistributionSet make_set(const CommonOpts& o) {
    if (o.set == "full") return AllDistributions{};
    PoissonFamily family;
    if (o.mu_max >= 0.0) family.mu_max = o.mu_max;
    return family;
}

TruncationPolicy make_policy(const CommonOpts& o) {
    TruncationPolicy policy;
    if (o.m_max >= 0) policy.m_max_override = o.m_max;
    policy = TruncationPolicy(policy.m_max_override, o.tail_tol, o.probe_len);
    return policy;
}

const char* witness_kind_name(Witness::Kind kind) {
    switch (kind) {
    case Witness::Kind::fock: return "fock";
    case Witness::Kind::poisson_mean: return "poisson_mean";
    default: return "base_index";
    }
}

RunManifest make_manifest(const std::string& command, const json& params) {
    RunManifest m;
    m.version = kVersion;
    m.command = command;
    m.timestamp = current_utc_timestamp();
    m.params_json = params.dump();
    return m;
}

int emit(const Table& table, const CommonOpts& o, RunManifest manifest, bool all_verified) {
    write_table(table, parse_table_format(o.format), o.out, manifest);
    return all_verified ? kExitOk : kExitUnverified;
}

void append_quality_row(Table& table, std::vector<Cell> prefix, const QualityResult& q) {
    prefix.push_back(q.value);
    prefix.push_back(std::string(witness_kind_name(q.witness.kind)));
    prefix.push_back(q.witness.value);
    prefix.push_back(q.truncation_bound);
    prefix.push_back(q.tail_verified);
    table.add_row(std::move(prefix));
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int run_quality(const CommonOpts& o) {
    const int n_top = parse_int_values(o.n, "--n").back();
    const DetectorConfig config = make_detector(o);
    const DistributionSet set = make_set(o);
    const TruncationPolicy policy = make_policy(o);

    Table table;
    table.columns = {"n", "q", "witness_kind", "witness", "truncation_bound", "tail_verified"};
    bool verified = true;
    std::vector<QualityResult> results(n_top);
    parallel_for(1, n_top + 1, [&](int n) {
        results[n - 1] = evaluate_quality(config, n, set, policy);
    });
    double worst_bound = 0.0;
    for (int n = 1; n <= n_top; ++n) {
        const auto& q = results[n - 1];
        append_quality_row(table, {int64_t{n}}, q);
        verified = verified && q.tail_verified;
        worst_bound = std::max(worst_bound, q.truncation_bound);
    }
    RunManifest manifest = make_manifest("quality", base_params(o));
    manifest.max_truncation_bound = worst_bound;
    return emit(table, o, manifest, verified);
}

int run_curve(const CommonOpts& o) {
    const auto etas = parse_real_values(o.eta, "--eta");
    const auto ns = parse_int_values(o.n, "--n");
    const DistributionSet set = make_set(o);
    const TruncationPolicy policy = make_policy(o);
    const double dark = parse_scalar(o.dark, "--dark");
    const double exit_prob =
        o.detector == "loop" ? parse_scalar(o.exit_prob, "--exit-prob") : 0.5;

    std::vector<QualityResult> results(etas.size() * ns.size());
    parallel_for(0, static_cast<int>(results.size()), [&](int i) {
        const double eta = etas[i / ns.size()];
        const int n = ns[i % ns.size()];
        results[i] = evaluate_quality(make_detector(o, eta, dark, exit_prob), n, set, policy);
    });

    Table table;
    table.columns = {"eta", "n", "q", "witness_kind", "witness", "truncation_bound",
                     "tail_verified"};
    bool verified = true;
    double worst_bound = 0.0;
    for (size_t i = 0; i < results.size(); ++i) {
        append_quality_row(table, {etas[i / ns.size()], int64_t{ns[i % ns.size()]}}, results[i]);
        verified = verified && results[i].tail_verified;
        worst_bound = std::max(worst_bound, results[i].truncation_bound);
    }
    RunManifest manifest = make_manifest("curve", base_params(o));
    manifest.max_truncation_bound = worst_bound;
    return emit(table, o, manifest, verified);
}

int run_threshold(const CommonOpts& o, double tol) {
    const int n = parse_int_values(o.n, "--n").back();
    const DetectorConfig family = make_detector(o, 1.0, parse_scalar(o.dark, "--dark"),
                                                parse_scalar(o.exit_prob, "--exit-prob"));
    const ThresholdResult r =
        eta_threshold(family, n, o.q, make_set(o), tol, make_policy(o));

    Table table;
    table.columns = {"n", "target_q", "eta_threshold", "bracket_lo", "bracket_hi",
                     "evaluations", "grid_fallback"};
    table.add_row({int64_t{n}, o.q, r.threshold, r.bracket_lo, r.bracket_hi,
                   int64_t{r.evaluations}, r.used_grid_fallback});
    json params = base_params(o);
    params["tol"] = tol;
    return emit(table, o, make_manifest("threshold", params), true);
}

int run_scaling(const CommonOpts& o, bool with_approx) {
    const auto ns = parse_int_values(o.n, "--n");
    const double eta = parse_scalar(o.eta, "--eta");
    const DistributionSet set = make_set(o);
    const TruncationPolicy policy = make_policy(o);

    Table table;
    table.columns = {"n", "min_elements"};
    if (with_approx) table.columns.push_back("approx_min_elements");
    for (int n : ns) {
        std::vector<Cell> row{int64_t{n}, int64_t{min_elements(n, eta, o.q, set, policy)}};
        if (with_approx) row.push_back(approx_min_elements(n, eta, o.q));
        table.add_row(std::move(row));
    }
    json params = base_params(o);
    params["with_approx"] = with_approx;
    return emit(table, o, make_manifest("scaling", params), true);
}

int run_dark_sweep(const CommonOpts& o) {
    const auto darks = parse_real_values(o.dark, "--dark");
    const auto ns = parse_int_values(o.n, "--n");
    const DetectorConfig family = make_detector(o, parse_scalar(o.eta, "--eta"), 0.0,
                                                parse_scalar(o.exit_prob, "--exit-prob"));
    const auto points =
        dark_sweep(family, ns, SweepGrid("dark_prob", darks), make_set(o), make_policy(o));

    Table table;
    table.columns = {"dark_prob", "n", "q", "witness_kind", "witness", "truncation_bound",
                     "tail_verified"};
    bool verified = true;
    double worst_bound = 0.0;
    for (const auto& point : points) {
        append_quality_row(table, {point.dark_prob, int64_t{point.n}}, point.quality);
        verified = verified && point.quality.tail_verified;
        worst_bound = std::max(worst_bound, point.quality.truncation_bound);
    }
    RunManifest manifest = make_manifest("dark-sweep", base_params(o));
    manifest.max_truncation_bound = worst_bound;
    return emit(table, o, manifest, verified);
}

int run_loop_scan(const CommonOpts& o) {
    const auto exit_probs = parse_real_values(o.exit_prob, "--exit-prob");
    const auto ns = parse_int_values(o.n, "--n");
    const double eta = parse_scalar(o.eta, "--eta");
    const double dark = parse_scalar(o.dark, "--dark");
    const DistributionSet set = make_set(o);
    const TruncationPolicy policy = make_policy(o);

    std::vector<QualityResult> results(exit_probs.size() * ns.size());
    parallel_for(0, static_cast<int>(results.size()), [&](int i) {
        const double T = exit_probs[i / ns.size()];
        const int n = ns[i % ns.size()];
        const LoopDetectorConfig config(T, o.survival, o.max_loops, ClickModel(eta, dark));
        results[i] = evaluate_quality(DetectorConfig{config}, n, set, policy);
    });

    Table table;
    table.columns = {"exit_prob", "n", "q", "witness_kind", "witness", "truncation_bound",
                     "tail_verified"};
    bool verified = true;
    double worst_bound = 0.0;
    for (size_t i = 0; i < results.size(); ++i) {
        append_quality_row(table, {exit_probs[i / ns.size()], int64_t{ns[i % ns.size()]}},
                           results[i]);
        verified = verified && results[i].tail_verified;
        worst_bound = std::max(worst_bound, results[i].truncation_bound);
    }
    RunManifest manifest = make_manifest("loop", base_params(o));
    manifest.max_truncation_bound = worst_bound;
    return emit(table, o, manifest, verified);
}

int run_validate(const CommonOpts& o, const std::string& m_spec, uint64_t trials, uint64_t seed,
                 double z_threshold) {
    const auto ms = parse_int_values(m_spec, "--m");
    const int n = parse_int_values(o.n, "--n").back();
    const DetectorConfig config = make_detector(o);
    TruncationPolicy policy = make_policy(o);
    if (!policy.m_max_override)
        policy.m_max_override = std::max(ms.back(), policy.resolve_m_max(
                                                        effective_elements(config), n));
    const ResponseMatrix analytic = build_response(config, n, policy);

    Table table;
    table.columns = {"m", "class", "analytic", "empirical", "z", "flagged"};
    bool any_flagged = false;
    std::vector<McHistogram> hists(ms.size());
    for (size_t i = 0; i < ms.size(); ++i)
        hists[i] = simulate(McRun(trials, seed + i, config, ms[i]), n);
    for (size_t i = 0; i < ms.size(); ++i) {
        const ZReport report = compare(analytic, ms[i], hists[i], z_threshold);
        any_flagged = any_flagged || report.any_flagged;
        for (int k = 0; k <= n; ++k)
            table.add_row({int64_t{ms[i]}, int64_t{k}, analytic.at(k, ms[i]),
                           hists[i].frequency(k), report.z[k], bool(report.flagged[k])});
    }
    json params = base_params(o);
    params["m"] = m_spec;
    params["trials"] = trials;
    params["seed"] = seed;
    params["z_threshold"] = z_threshold;
    RunManifest manifest = make_manifest("validate", params);
    manifest.seeds = {seed};
    write_table(table, parse_table_format(o.format), o.out, manifest);
    if (any_flagged) {
        std::cerr << "validate: empirical frequencies deviate beyond " << z_threshold
                  << " sigma\n";
        return kExitValidationFailed;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact response and worst-case quality analysis of multiplexed "
                 "photon-number-resolving detectors"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOpts quality_opts, curve_opts, threshold_opts, scaling_opts, dark_opts, loop_opts,
        validate_opts;
    double threshold_tol = 1e-3;
    bool with_approx = false;
    std::string validate_m = "0..8";
    uint64_t trials = 1000000;
    uint64_t seed = 42;
    double z_threshold = 5.0;

    CLI::App* quality = app.add_subcommand("quality", "Q_1..Q_N table for one configuration");
    add_detector_flags(quality, quality_opts);
    add_set_flags(quality, quality_opts);
    add_policy_flags(quality, quality_opts);
    add_output_flags(quality, quality_opts);
    quality->add_option("--n", quality_opts.n, "Largest output class (table covers 1..N)");

    CLI::App* curve = app.add_subcommand("curve", "Quality versus an efficiency grid");
    add_detector_flags(curve, curve_opts);
    add_set_flags(curve, curve_opts);
    add_policy_flags(curve, curve_opts);
    add_output_flags(curve, curve_opts);
    curve->add_option("--n", curve_opts.n, "Output classes, range syntax");

    CLI::App* threshold =
        app.add_subcommand("threshold", "Smallest efficiency reaching a target quality");
    add_detector_flags(threshold, threshold_opts);
    add_set_flags(threshold, threshold_opts);
    add_policy_flags(threshold, threshold_opts);
    add_output_flags(threshold, threshold_opts);
    threshold->add_option("--n", threshold_opts.n, "Output class");
    threshold->add_option("--q", threshold_opts.q, "Target quality");
    threshold->add_option("--tol", threshold_tol, "Bisection width");

    CLI::App* scaling =
        app.add_subcommand("scaling", "Minimum element count versus resolved photons");
    add_set_flags(scaling, scaling_opts);
    add_policy_flags(scaling, scaling_opts);
    add_output_flags(scaling, scaling_opts);
    scaling->add_option("--eta", scaling_opts.eta, "Quantum efficiency");
    scaling->add_option("--n", scaling_opts.n, "Resolved photon numbers, range syntax");
    scaling->add_option("--q", scaling_opts.q, "Target quality");
    scaling->add_flag("--with-approx", with_approx, "Add the closed-form estimate column");

    CLI::App* dark = app.add_subcommand("dark-sweep", "Quality versus dark-count probability");
    add_detector_flags(dark, dark_opts);
    add_set_flags(dark, dark_opts);
    add_policy_flags(dark, dark_opts);
    add_output_flags(dark, dark_opts);
    dark->add_option("--n", dark_opts.n, "Output classes, range syntax");

    CLI::App* loop = app.add_subcommand("loop", "Loop detector over an exit-probability grid");
    add_detector_flags(loop, loop_opts);
    add_set_flags(loop, loop_opts);
    add_policy_flags(loop, loop_opts);
    add_output_flags(loop, loop_opts);
    loop->add_option("--n", loop_opts.n, "Output classes, range syntax");
    loop_opts.detector = "loop";

    CLI::App* validate =
        app.add_subcommand("validate", "Monte Carlo cross-check of the analytic response");
    add_detector_flags(validate, validate_opts);
    add_policy_flags(validate, validate_opts);
    add_output_flags(validate, validate_opts);
    validate->add_option("--n", validate_opts.n, "Output class of the histogram");
    validate->add_option("--m", validate_m, "Input photon numbers, range syntax");
    validate->add_option("--trials", trials, "Trials per photon number");
    validate->add_option("--seed", seed, "Base seed");
    validate->add_option("--z-threshold", z_threshold, "Flagging threshold in sigmas");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e, std::cout, std::cerr);
        return kExitInvalidArguments;
    }

    try {
        auto with_config = [&](CLI::App* cmd, CommonOpts& o, const char* name) {
            if (!o.config_path.empty())
                merge_config(cmd, o, load_config_params(o.config_path, name));
        };
        if (quality->parsed()) {
            with_config(quality, quality_opts, "quality");
            return run_quality(quality_opts);
        }
        if (curve->parsed()) {
            with_config(curve, curve_opts, "curve");
            return run_curve(curve_opts);
        }
        if (threshold->parsed()) {
            with_config(threshold, threshold_opts, "threshold");
            if (!threshold_opts.config_path.empty()) {
                const json p = load_config_params(threshold_opts.config_path, "threshold");
                if (p.contains("tol") && threshold->count("--tol") == 0)
                    threshold_tol = p.at("tol").get<double>();
            }
            return run_threshold(threshold_opts, threshold_tol);
        }
        if (scaling->parsed()) {
            with_config(scaling, scaling_opts, "scaling");
            if (!scaling_opts.config_path.empty()) {
                const json p = load_config_params(scaling_opts.config_path, "scaling");
                if (p.contains("with_approx") && scaling->count("--with-approx") == 0)
                    with_approx = p.at("with_approx").get<bool>();
            }
            return run_scaling(scaling_opts, with_approx);
        }
        if (dark->parsed()) {
            with_config(dark, dark_opts, "dark-sweep");
            return run_dark_sweep(dark_opts);
        }
        if (loop->parsed()) {
            with_config(loop, loop_opts, "loop");
            return run_loop_scan(loop_opts);
        }
        if (validate->parsed()) {
            with_config(validate, validate_opts, "validate");
            if (!validate_opts.config_path.empty()) {
                const json p = load_config_params(validate_opts.config_path, "validate");
                if (p.contains("m") && validate->count("--m") == 0)
                    validate_m = p.at("m").get<std::string>();
                if (p.contains("trials") && validate->count("--trials") == 0)
                    trials = p.at("trials").get<uint64_t>();
                if (p.contains("seed") && validate->count("--seed") == 0)
                    seed = p.at("seed").get<uint64_t>();
                if (p.contains("z_threshold") && validate->count("--z-threshold") == 0)
                    z_threshold = p.at("z_threshold").get<double>();
            }
            return run_validate(validate_opts, validate_m, trials, seed, z_threshold);
        }
        return kExitInvalidArguments;
    } catch (const TruncationError& e) {
        std::cerr << "error (truncation): " << e.what() << "\n";
        return kExitUnverified;
    } catch (const NoSolutionError& e) {
        std::cerr << "error (no solution): " << e.what() << "\n";
        return kExitNoSolution;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error (invalid arguments): " << e.what() << "\n";
        return kExitInvalidArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
