#include "proprep/sweep.hpp"

#include "proprep/ear.hpp"
#include "proprep/tgc.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace proprep {

namespace {

struct Row {
    int instance;
    std::string algorithm;
    std::string check;
    std::string alpha;
    std::string measured_exact;
    std::string measured_decimal;
    std::string bound;      // decimal, or "-"
    std::string margin;     // decimal bound minus measured; display only
    std::string satisfied;  // yes | no | -
    std::string witness;
    std::string status;  // ok | cap-exceeded
};

std::string witness_summary(const AuditReport& report) {
    if (!report.witness) return "-";
    const Witness& w = *report.witness;
    std::ostringstream ss;
    ss << "|S|=" << w.coalition.size();
    if (!w.targets.empty()) {
        ss << " target=";
        for (size_t i = 0; i < w.targets.size(); ++i)
            ss << (i ? "," : "") << w.targets[i] + 1;
    }
    return ss.str();
}

Row row_of(int instance, const std::string& algorithm, const AuditReport& report) {
    Row row;
    row.instance = instance;
    row.algorithm = algorithm;
    row.check = check_name(report.check);
    row.alpha = report.alpha.str();
    row.measured_exact = report.measured.str();
    row.measured_decimal = report.measured.decimal();
    row.bound = report.bound ? report.bound->decimal() : "-";
    row.margin = "-";
    if (report.bound) {
        if (report.measured.is_infinite()) {
            row.margin = "-inf";
        } else {
            // display-only: the verdict itself is the exact `satisfied` flag
            auto bound_exact = Rational::parse(report.bound->decimal(9));
            row.margin = (*bound_exact - report.measured.finite()).decimal();
        }
    }
    row.satisfied = report.satisfied ? (*report.satisfied ? "yes" : "no") : "-";
    row.witness = witness_summary(report);
    row.status = "ok";
    return row;
}

void print_rows(const std::vector<Row>& rows, const std::string& format, std::ostream& out) {
    const char* header[] = {"instance", "algorithm", "check",  "alpha",     "measured",
                            "decimal",  "bound",     "margin", "satisfied", "witness",
                            "status"};
    if (format == "csv") {
        for (size_t i = 0; i < 11; ++i) out << (i ? "," : "") << header[i];
        out << "\n";
        for (const Row& r : rows)
            out << r.instance << ',' << r.algorithm << ',' << r.check << ',' << r.alpha << ','
                << r.measured_exact << ',' << r.measured_decimal << ',' << r.bound << ','
                << r.margin << ',' << r.satisfied << ',' << '"' << r.witness << '"' << ','
                << r.status << "\n";
        return;
    }
    for (size_t i = 0; i < 11; ++i) out << (i ? "\t" : "") << header[i];
    out << "\n";
    for (const Row& r : rows)
        out << r.instance << '\t' << r.algorithm << '\t' << r.check << '\t' << r.alpha << '\t'
            << r.measured_exact << '\t' << r.measured_decimal << '\t' << r.bound << '\t'
            << r.margin << '\t' << r.satisfied << '\t' << r.witness << '\t' << r.status
            << "\n";
}

bool wants(const std::vector<std::string>& checks, const std::string& name) {
    return std::find(checks.begin(), checks.end(), name) != checks.end();
}

}  // namespace

SweepOutcome run_sweep(const SweepSpec& spec, std::ostream& out) {
    SweepOutcome outcome;
    std::vector<Row> rows;
    // key: (check, algorithm, alpha-string) -> max measured + bound decimal
    std::map<std::tuple<std::string, std::string, std::string>,
             std::pair<ExtRational, std::string>>
        plot;

    // Materialize the instance list up front; structured families have one
    // member, the random family sweeps seeds.
    std::vector<std::pair<Instance, std::optional<RankedProfile>>> grid;
    if (spec.family == "random") {
        for (int i = 0; i < spec.instances; ++i)
            grid.emplace_back(
                gen_random(spec.n, spec.m, spec.k, spec.dim, spec.norm, spec.seed0 + i),
                std::nullopt);
    } else if (spec.family == "two-cluster") {
        grid.emplace_back(gen_two_cluster(spec.family_alpha, spec.family_far), std::nullopt);
    } else if (spec.family == "diverging") {
        grid.emplace_back(gen_diverging(spec.family_alpha), std::nullopt);
    } else if (spec.family == "refined") {
        grid.emplace_back(gen_refined(spec.n, spec.k), std::nullopt);
    } else if (spec.family == "separation") {
        SeparationElection el = gen_separation(spec.family_eps);
        grid.emplace_back(std::move(el.instance), std::move(el.profile));
    } else {
        throw Error(Error::Kind::bad_argument, "unknown sweep family: " + spec.family);
    }

    std::vector<Rational> alphas = spec.alphas;
    if (alphas.empty()) alphas.push_back(Rational(2));

    auto record = [&](int i, const std::string& alg, const AuditReport& report) {
        Row row = row_of(i, alg, report);
        rows.push_back(row);
        ++outcome.rows;
        if (report.satisfied && !*report.satisfied) ++outcome.violations;
        auto key = std::make_tuple(row.check, alg, row.alpha);
        auto it = plot.find(key);
        if (it == plot.end())
            plot.emplace(key, std::make_pair(report.measured, row.bound));
        else if (report.measured > it->second.first)
            it->second.first = report.measured;
    };
    auto record_cap_exceeded = [&](int i, const std::string& alg, const std::string& check,
                                   const Rational& alpha) {
        Row row;
        row.instance = i;
        row.algorithm = alg;
        row.check = check;
        row.alpha = alpha.str();
        row.measured_exact = row.measured_decimal = "-";
        row.bound = row.margin = row.satisfied = row.witness = "-";
        row.status = "cap-exceeded";
        rows.push_back(row);
        ++outcome.rows;
        ++outcome.cap_exceeded;
    };

    for (size_t cell = 0; cell < grid.size(); ++cell) {
        const int i = static_cast<int>(cell);
        const Instance& inst = grid[cell].first;
        RankedProfile profile =
            grid[cell].second ? *grid[cell].second : derive_rankings(inst);
        const int t_hi = spec.t_hi > 0 ? std::min(spec.t_hi, inst.k) : inst.k;

        for (const std::string& alg : spec.algorithms) {
            if (alg == "single") {
                if (wants(spec.checks, "distortion")) {
                    int winner = single_winner(profile);
                    record(i, alg, distortion_report(inst, winner, true));
                }
                continue;
            }
            const bool is_ear = alg == "ear";
            CoverageRecord rec = is_ear ? ear_select(profile, inst.k) : tgc_select(inst);
            const RuleBound rule = is_ear ? RuleBound::ear : RuleBound::tgc;
            const auto committee = rec.committee();

            if (wants(spec.checks, "pf")) record(i, alg, pf_gamma(inst, committee, rule));
            if (wants(spec.checks, "core"))
                for (const Rational& a : alphas) record(i, alg, core_beta(inst, committee, a, rule));
            if (wants(spec.checks, "pr") || wants(spec.checks, "pr-strong")) {
                try {
                    auto [plain, strong] =
                        pr_gamma_sweep(inst, committee, alphas, spec.t_lo, t_hi, spec.audit, rule);
                    for (size_t ai = 0; ai < alphas.size(); ++ai) {
                        if (wants(spec.checks, "pr")) record(i, alg, plain[ai]);
                        if (wants(spec.checks, "pr-strong")) record(i, alg, strong[ai]);
                    }
                } catch (const Error& e) {
                    if (e.kind() != Error::Kind::enumeration_cap_exceeded) throw;
                    for (const Rational& a : alphas) {
                        if (wants(spec.checks, "pr")) record_cap_exceeded(i, alg, "pr", a);
                        if (wants(spec.checks, "pr-strong"))
                            record_cap_exceeded(i, alg, "pr-strong", a);
                    }
                }
            }
            if (wants(spec.checks, "cor-single")) {
                for (const Rational& a : alphas) {
                    try {
                        record(i, alg, cor_single_audit(inst, rec, a, spec.audit, rule));
                    } catch (const Error& e) {
                        if (e.kind() != Error::Kind::enumeration_cap_exceeded) throw;
                        record_cap_exceeded(i, alg, "cor-single", a);
                    }
                }
            }
            if (wants(spec.checks, "stability")) {
                try {
                    record(i, alg,
                           stability_rho(inst, rec,
                                         is_ear ? StabilityVariant::ordinal
                                                : StabilityVariant::cardinal,
                                         spec.audit));
                } catch (const Error& e) {
                    if (e.kind() != Error::Kind::enumeration_cap_exceeded) throw;
                    record_cap_exceeded(i, alg, "stability", Rational(1));
                }
            }
            if (wants(spec.checks, "no-augmentation")) {
                try {
                    record(i, alg,
                           no_augmentation_monitor(inst, committee, spec.t_lo, t_hi, spec.audit));
                } catch (const Error& e) {
                    if (e.kind() != Error::Kind::enumeration_cap_exceeded) throw;
                    record_cap_exceeded(i, alg, "no-augmentation", Rational(1));
                }
            }
        }
    }

    print_rows(rows, spec.format, out);

    if (!spec.plot_path.empty()) {
        std::ofstream plot_os(spec.plot_path);
        if (!plot_os) throw Error(Error::Kind::io, "cannot write " + spec.plot_path);
        plot_os << "check,algorithm,alpha,max_measured,bound\n";
        for (const auto& [key, val] : plot)
            plot_os << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key)
                    << ',' << val.first.decimal() << ',' << val.second << "\n";
    }
    return outcome;
}

std::vector<BenchRow> opcount_bench(const std::vector<std::pair<int, int>>& sizes, int k,
                                    std::ostream& out) {
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    out << "n\tm\tk\tear_ops\tear_ms\ttgc_ops\ttgc_ms\tops<=4nm\n";
    for (auto [n, m] : sizes) {
        BenchRow row;
        row.n = n;
        row.m = m;
        row.k = std::min(k, m - 1);
        Instance inst = gen_random_block(n, m, row.k, 2, Norm::l1, 12345 + n + m);

        auto t0 = clock::now();
        RankedProfile profile = derive_rankings(inst);
        CoverageRecord ear = ear_select(profile, row.k);
        auto t1 = clock::now();
        CoverageRecord tgc = tgc_select(inst);
        auto t2 = clock::now();

        row.ear_ops = ear.ops;
        row.tgc_ops = tgc.ops;
        row.ear_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        row.tgc_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
        const long long budget = 4LL * n * m;
        row.within_bound = ear.ops <= budget && tgc.ops <= budget;
        out << n << '\t' << m << '\t' << row.k << '\t' << row.ear_ops << '\t' << row.ear_ms
            << '\t' << row.tgc_ops << '\t' << row.tgc_ms << '\t'
            << (row.within_bound ? "yes" : "NO") << "\n";
        rows.push_back(row);
    }
    return rows;
}

}  // namespace proprep
