/// Experiment harness: deterministic audit sweeps over seeded instance
/// grids (one row per instance x algorithm x check x alpha cell, plus
/// plot-ready aggregates) and the neighborhood-event benchmark that traces
/// the near-linear runtime shape of the two rules.
#pragma once

#include "proprep/audit.hpp"
#include "proprep/generators.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace proprep {

struct SweepSpec {
    // Instance family. "random" sweeps a seeded lattice grid (instance i
    // uses seed0 + i); the structured families produce their one instance
    // from the family parameters below.
    std::string family = "random";  // random | two-cluster | diverging | refined | separation
    int instances = 50;
    int n = 10, m = 6, k = 3;
    int dim = 2;
    Norm norm = Norm::l1;
    unsigned long long seed0 = 1;
    Rational family_alpha{2};   // two-cluster / diverging parameter
    Rational family_far{1000};  // two-cluster cross distance
    Rational family_eps{1, 100};  // separation offset

    std::vector<std::string> algorithms;  // ear, tgc, single
    std::vector<std::string> checks;      // pf core pr pr-strong stability cor-single
                                          // distortion no-augmentation
    std::vector<Rational> alphas;         // for the alpha-parametrized checks
    int t_lo = 1, t_hi = 0;               // 0 = up to k
    AuditOptions audit;

    std::string format = "text";  // text | csv
    std::string plot_path;        // optional per-alpha aggregate CSV
};

struct SweepOutcome {
    int rows = 0;
    int violations = 0;     // rows with a bound marked unsatisfied
    int cap_exceeded = 0;   // rows marked, not dropped
};

SweepOutcome run_sweep(const SweepSpec& spec, std::ostream& out);

struct BenchRow {
    int n = 0, m = 0, k = 0;
    long long ear_ops = 0, tgc_ops = 0;
    double ear_ms = 0, tgc_ms = 0;
    bool within_bound = false;  // both op counts <= 4*n*m
};

/// Runs both rules on seeded lattice instances of the given sizes and
/// reports neighborhood-event counts and wall time per size.
std::vector<BenchRow> opcount_bench(const std::vector<std::pair<int, int>>& sizes, int k,
                                    std::ostream& out);

}  // namespace proprep
