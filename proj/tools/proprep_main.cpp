// Command-line front end: instance generation, committee selection, exact
// audits, experiment sweeps, and the runtime-shape benchmark.
//
// Exit codes: 0 = success and every checked bound satisfied, 2 = a guarantee
// bound violated, 1 = operational error.

#include "proprep/audit.hpp"
#include "proprep/ear.hpp"
#include "proprep/generators.hpp"
#include "proprep/io.hpp"
#include "proprep/sweep.hpp"
#include "proprep/tgc.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace proprep;

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
    auto r = Rational::parse(text);
    if (!r) throw CLI::ValidationError(flag, "expected a rational like 3/2 or 1.5");
    return *r;
}

int default_cap() {
    if (const char* env = std::getenv("PROPREP_CAP")) {
        int cap = std::atoi(env);
        if (cap > 0) return cap;
    }
    return 20;
}

std::pair<int, int> parse_t_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int t = std::stoi(text);
        return {t, t};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

RankedProfile profile_for(const ElectionFile& election) {
    return election.profile ? *election.profile : derive_rankings(election.instance);
}

/// Loads and validates; block instances pass with only the nonnegativity
/// check (partially validated), axiom violations are operational errors.
ElectionFile load_validated(const std::string& path) {
    ElectionFile election = read_election_file(path);
    ValidationResult res = validate_metric(election.instance);
    if (!res.ok)
        throw Error(Error::Kind::bad_argument, path + ": metric invalid: " + res.message);
    if (election.profile && !consistent_with(*election.profile, election.instance))
        throw Error(Error::Kind::bad_argument,
                    path + ": rankings are inconsistent with the metric");
    return election;
}

void emit_or_print_committee(const std::vector<int>& committee, const std::string& out_path) {
    if (out_path.empty()) {
        std::ostringstream os;
        write_committee(os, committee);
        std::cout << os.str();
    } else {
        write_committee_file(out_path, committee);
    }
}

struct GenArgs {
    std::string out;
    std::string alpha = "2";
    std::string far = "1000";
    std::string eps = "1/100";
    int n = 10, m = 6, k = 3, dim = 2;
    std::string norm = "l1";
    unsigned long long seed = 1;
};

void add_gen(CLI::App& app, GenArgs& args) {
    CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
    gen->require_subcommand(1);

    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("-o,--out", args.out, "output instance file")->required();
    };

    CLI::App* two = gen->add_subcommand("two-cluster", "two co-located clusters, unit inside");
    two->add_option("--alpha", args.alpha, "augmentation parameter, > 1")->required();
    two->add_option("--far", args.far, "cross-cluster distance (>= 1)");
    add_out(two);
    two->callback([&] {
        write_election_file(args.out, gen_two_cluster(parse_rational_arg(args.alpha, "--alpha"),
                                                      parse_rational_arg(args.far, "--far")));
    });

    CLI::App* div = gen->add_subcommand("diverging", "k+1 zero-diameter clusters, k=1/(alpha-1)");
    div->add_option("--alpha", args.alpha, "augmentation parameter in (1, 3/2)")->required();
    add_out(div);
    div->callback([&] {
        write_election_file(args.out, gen_diverging(parse_rational_arg(args.alpha, "--alpha")));
    });

    CLI::App* refined = gen->add_subcommand("refined", "k+1 clusters of balanced sizes");
    refined->add_option("--n", args.n, "voters")->required();
    refined->add_option("--k", args.k, "committee size (<= n/4)")->required();
    add_out(refined);
    refined->callback([&] { write_election_file(args.out, gen_refined(args.n, args.k)); });

    CLI::App* sep = gen->add_subcommand("separation", "six-voter ordinal-vs-cardinal election");
    sep->add_option("--eps", args.eps, "tie-breaking offset, 0 < eps < 1/10");
    add_out(sep);
    sep->callback([&] {
        SeparationElection el = gen_separation(parse_rational_arg(args.eps, "--eps"));
        write_election_file(args.out, el.instance, &el.profile);
    });

    CLI::App* rnd = gen->add_subcommand("random", "seeded lattice instance");
    rnd->add_option("--n", args.n, "voters")->required();
    rnd->add_option("--m", args.m, "candidates")->required();
    rnd->add_option("--k", args.k, "committee size")->required();
    rnd->add_option("--dim", args.dim, "lattice dimension");
    rnd->add_option("--norm", args.norm, "l1 or linf")->check(CLI::IsMember({"l1", "linf"}));
    rnd->add_option("--seed", args.seed, "random seed");
    add_out(rnd);
    rnd->callback([&] {
        Norm norm = args.norm == "l1" ? Norm::l1 : Norm::linf;
        write_election_file(args.out,
                            gen_random(args.n, args.m, args.k, args.dim, norm, args.seed));
    });
}

struct SelectArgs {
    std::string instance;
    std::string coverage_out;
    std::string committee_out;
    int k = 0;  // 0: use the instance header
};

void add_select(CLI::App& app, SelectArgs& args) {
    CLI::App* select = app.add_subcommand("select", "run a selection rule");
    select->require_subcommand(1);

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--instance", args.instance, "instance file")->required();
        cmd->add_option("--emit-coverage", args.coverage_out, "write the coverage record");
        cmd->add_option("--out", args.committee_out, "write the committee file");
    };

    CLI::App* ear = select->add_subcommand("ear", "expanding approvals (ordinal)");
    common(ear);
    ear->add_option("--k", args.k, "override the committee size");
    ear->callback([&] {
        ElectionFile election = load_validated(args.instance);
        int k = args.k > 0 ? args.k : election.instance.k;
        CoverageRecord rec = ear_select(profile_for(election), k);
        if (!args.coverage_out.empty()) write_coverage_file(args.coverage_out, rec);
        emit_or_print_committee(rec.committee(), args.committee_out);
    });

    CLI::App* tgc = select->add_subcommand("tgc", "truncated greedy capture (cardinal)");
    common(tgc);
    tgc->callback([&] {
        ElectionFile election = load_validated(args.instance);
        CoverageRecord rec = tgc_select(election.instance);
        if (!args.coverage_out.empty()) write_coverage_file(args.coverage_out, rec);
        emit_or_print_committee(rec.committee(), args.committee_out);
    });

    CLI::App* single = select->add_subcommand("single", "two-round single winner");
    single->add_option("--instance", args.instance, "instance file")->required();
    single->callback([&] {
        ElectionFile election = load_validated(args.instance);
        std::cout << "winner " << single_winner(profile_for(election)) + 1 << "\n";
    });
}

struct AuditArgs {
    std::string instance, committee, coverage;
    std::string check;
    std::string alpha = "1";
    std::string t_range;
    std::string bound = "none";
    int cap = default_cap();
    long long samples = 0;
    int winner = 0;  // 1-based, distortion only
};

int run_audit(const AuditArgs& args) {
    ElectionFile election = load_validated(args.instance);
    const Instance& inst = election.instance;

    std::optional<CoverageRecord> coverage;
    if (!args.coverage.empty()) coverage = read_coverage_file(args.coverage);

    std::vector<int> committee;
    if (!args.committee.empty())
        committee = read_committee_file(args.committee);
    else if (coverage)
        committee = coverage->committee();
    else if (args.check != "distortion" || args.winner <= 0)
        throw Error(Error::Kind::bad_argument, "need --committee or --coverage");

    Rational alpha = parse_rational_arg(args.alpha, "--alpha");
    AuditOptions opts;
    opts.cap = args.cap;
    opts.sample_count = args.samples;

    RuleBound rule = RuleBound::none;
    if (args.bound == "ear") rule = RuleBound::ear;
    if (args.bound == "tgc") rule = RuleBound::tgc;

    int t_lo = 1, t_hi = inst.k;
    if (!args.t_range.empty()) std::tie(t_lo, t_hi) = parse_t_range(args.t_range);

    AuditReport report;
    if (args.check == "pf") {
        report = pf_gamma(inst, committee, rule);
    } else if (args.check == "core") {
        report = core_beta(inst, committee, alpha, rule);
    } else if (args.check == "pr") {
        report = pr_gamma(inst, committee, alpha, t_lo, t_hi, opts, rule);
    } else if (args.check == "pr-strong") {
        report = pr_strong_gamma(inst, committee, alpha, t_lo, t_hi, opts, rule);
    } else if (args.check == "cor-single") {
        if (!coverage) throw Error(Error::Kind::bad_argument, "cor-single needs --coverage");
        report = cor_single_audit(inst, *coverage, alpha, opts, rule);
    } else if (args.check == "stability") {
        if (!coverage) throw Error(Error::Kind::bad_argument, "stability needs --coverage");
        StabilityVariant variant = coverage->kind == CoverageRecord::Kind::tgc
                                       ? StabilityVariant::cardinal
                                       : StabilityVariant::ordinal;
        if (args.bound == "tgc") variant = StabilityVariant::cardinal;
        if (args.bound == "ear") variant = StabilityVariant::ordinal;
        report = stability_rho(inst, *coverage, variant, opts);
    } else if (args.check == "distortion") {
        int winner = args.winner > 0 ? args.winner - 1 : committee.at(0);
        report = distortion_report(inst, winner, args.bound != "none");
    } else if (args.check == "no-augmentation") {
        report = no_augmentation_monitor(inst, committee, t_lo, t_hi, opts);
    } else {
        throw Error(Error::Kind::bad_argument, "unknown check: " + args.check);
    }

    write_report(std::cout, report);
    return report.satisfied && !*report.satisfied ? 2 : 0;
}

void add_audit(CLI::App& app, AuditArgs& args) {
    CLI::App* audit = app.add_subcommand("audit", "audit a committee against a definition");
    audit->add_option("--instance", args.instance, "instance file")->required();
    audit->add_option("--committee", args.committee, "committee file");
    audit->add_option("--coverage", args.coverage, "coverage record file");
    audit
        ->add_option("--check", args.check,
                     "pf|core|pr|pr-strong|cor-single|stability|distortion|no-augmentation")
        ->required();
    audit->add_option("--alpha", args.alpha, "augmentation parameter (rational)");
    audit->add_option("--t-range", args.t_range, "subcommittee sizes, e.g. 1..3");
    audit->add_option("--cap", args.cap, "exact enumeration cap on n (env PROPREP_CAP)");
    audit->add_option("--samples", args.samples,
                      "sample this many coalitions instead of enumerating (lower bound only)");
    audit->add_option("--bound", args.bound, "attach a rule's guarantee: ear|tgc|none");
    audit->add_option("--winner", args.winner, "1-based winner for --check distortion");
}

struct SweepArgs {
    SweepSpec spec;
    std::string alphas = "3/2,2,3";
    std::string norm = "l1";
    std::string algorithms = "ear,tgc";
    std::string checks = "pf,pr";
    std::string t_range;
    std::string out;
    std::string family_alpha = "2";
    std::string family_far = "1000";
    std::string family_eps = "1/100";
};

void add_sweep(CLI::App& app, SweepArgs& args) {
    CLI::App* sweep = app.add_subcommand("sweep", "audit sweeps over an instance family");
    sweep->add_option("--family", args.spec.family,
                      "random|two-cluster|diverging|refined|separation")
        ->check(CLI::IsMember({"random", "two-cluster", "diverging", "refined", "separation"}));
    sweep->add_option("--family-alpha", args.family_alpha,
                      "two-cluster / diverging family parameter");
    sweep->add_option("--family-far", args.family_far, "two-cluster cross distance");
    sweep->add_option("--family-eps", args.family_eps, "separation offset");
    sweep->add_option("--instances", args.spec.instances, "number of instances (random family)");
    sweep->add_option("--n", args.spec.n, "voters per instance");
    sweep->add_option("--m", args.spec.m, "candidates per instance");
    sweep->add_option("--k", args.spec.k, "committee size");
    sweep->add_option("--dim", args.spec.dim, "lattice dimension");
    sweep->add_option("--norm", args.norm, "l1 or linf")->check(CLI::IsMember({"l1", "linf"}));
    sweep->add_option("--seed0", args.spec.seed0, "seed of the first instance");
    sweep->add_option("--algorithms", args.algorithms, "comma list: ear,tgc,single");
    sweep->add_option("--checks", args.checks,
                      "comma list: pf,core,pr,pr-strong,cor-single,stability,distortion,"
                      "no-augmentation");
    sweep->add_option("--alphas", args.alphas, "comma list of rationals");
    sweep->add_option("--t-range", args.t_range, "subcommittee sizes, e.g. 1..2");
    sweep->add_option("--cap", args.spec.audit.cap, "enumeration cap (env PROPREP_CAP)");
    sweep->add_option("--format", args.spec.format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    sweep->add_option("--plot", args.spec.plot_path, "write per-alpha aggregates (CSV)");
    sweep->add_option("--out", args.out, "write the table to a file instead of stdout");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
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

int run_sweep_cmd(SweepArgs& args) {
    args.spec.norm = args.norm == "l1" ? Norm::l1 : Norm::linf;
    args.spec.family_alpha = parse_rational_arg(args.family_alpha, "--family-alpha");
    args.spec.family_far = parse_rational_arg(args.family_far, "--family-far");
    args.spec.family_eps = parse_rational_arg(args.family_eps, "--family-eps");
    args.spec.algorithms = split_list(args.algorithms);
    args.spec.checks = split_list(args.checks);
    for (const std::string& a : split_list(args.alphas))
        args.spec.alphas.push_back(parse_rational_arg(a, "--alphas"));
    if (!args.t_range.empty())
        std::tie(args.spec.t_lo, args.spec.t_hi) = parse_t_range(args.t_range);

    SweepOutcome outcome;
    if (args.out.empty()) {
        outcome = run_sweep(args.spec, std::cout);
    } else {
        std::ofstream os(args.out);
        if (!os) throw Error(Error::Kind::io, "cannot write " + args.out);
        outcome = run_sweep(args.spec, os);
    }
    std::cerr << "rows " << outcome.rows << ", violations " << outcome.violations
              << ", cap-exceeded " << outcome.cap_exceeded << "\n";
    return outcome.violations > 0 ? 2 : 0;
}

struct BenchArgs {
    std::string sizes = "100x20,200x20,400x20";
    int k = 5;
};

int run_bench(const BenchArgs& args) {
    std::vector<std::pair<int, int>> sizes;
    for (const std::string& item : split_list(args.sizes)) {
        auto x = item.find('x');
        if (x == std::string::npos)
            throw Error(Error::Kind::bad_argument, "sizes look like 100x20,200x20");
        sizes.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
    }
    auto rows = opcount_bench(sizes, args.k, std::cout);
    for (const auto& row : rows)
        if (!row.within_bound) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"proportionally representative committee selection and exact audits"};
    app.require_subcommand(1);

    GenArgs gen_args;
    SelectArgs select_args;
    AuditArgs audit_args;
    SweepArgs sweep_args;
    BenchArgs bench_args;

    add_gen(app, gen_args);
    add_select(app, select_args);
    add_audit(app, audit_args);
    add_sweep(app, sweep_args);
    CLI::App* bench = app.add_subcommand("bench", "neighborhood-event scaling benchmark");
    bench->add_option("--sizes", bench_args.sizes, "comma list of NxM pairs");
    bench->add_option("--k", bench_args.k, "committee size");

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("audit")) return run_audit(audit_args);
        if (app.got_subcommand("sweep")) return run_sweep_cmd(sweep_args);
        if (app.got_subcommand("bench")) return run_bench(bench_args);
        return 0;  // gen/select ran via callbacks
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const proprep::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
