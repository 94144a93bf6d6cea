/// Election data model: voters and candidates embedded in an exact
/// pseudo-metric, ranked profiles, and the aggregate distance sums the
/// selection rules and audits are defined over.
#pragma once

#include "proprep/error.hpp"
#include "proprep/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace proprep {

/// An election instance. Distances are exact rationals over the points
/// V ∪ C; voters are indexed 0..n-1 and candidates 0..m-1. The matrix is
/// either the full (n+m)×(n+m) pseudo-metric or only the V×C block, in
/// which case triangle validation is impossible ("partially validated")
/// but every selection rule and audit still applies.
struct Instance {
    int n = 0;  // voters
    int m = 0;  // candidates
    int k = 0;  // committee size
    bool full = false;
    std::vector<Rational> dist;        // row-major: full (n+m)^2 or block n*m
    std::vector<std::string> labels;   // optional, size n+m when present

    int points() const { return n + m; }
    int voter_point(int v) const { return v; }
    int candidate_point(int c) const { return n + c; }

    /// Voter-to-candidate distance; available for both storage layouts.
    const Rational& d_vc(int v, int c) const {
        return full ? dist[static_cast<size_t>(v) * points() + n + c]
                    : dist[static_cast<size_t>(v) * m + c];
    }

    /// Distance between two unified point indices; requires the full matrix
    /// except for the trivially-zero diagonal.
    const Rational& d(int x, int y) const;
};

/// Per-voter total orders of the candidates. `order[v][t]` is the candidate
/// at 1-based position t+1; `position(v, c)` is the 1-based rank of c.
struct RankedProfile {
    int n = 0;
    int m = 0;
    std::vector<std::vector<int>> order;

    int position(int v, int c) const { return pos_[static_cast<size_t>(v) * m + c]; }
    int candidate_at(int v, int rank1) const { return order[v][rank1 - 1]; }

    /// Rebuilds the rank lookup from `order`; throws profile_shape_mismatch
    /// unless every row is a permutation of 0..m-1. Must be called after
    /// filling `order` by hand; derive_rankings and the readers do it.
    void index();
    bool indexed() const { return pos_.size() == static_cast<size_t>(n) * m; }

private:
    std::vector<int> pos_;
};

/// Hare quota p = ceil(n/k).
int hare_quota(int n, int k);

struct ValidationResult {
    enum class Issue { none, bad_shape, asymmetric, negative, nonzero_diagonal, triangle };

    bool ok = true;
    bool partial = false;  // block-only matrix: triangle/symmetry unchecked
    Issue issue = Issue::none;
    int x = -1, y = -1, z = -1;  // offending points (unified indices)
    std::string message;
};

/// Checks the pseudo-metric axioms (symmetry, zero diagonal, nonnegativity,
/// triangle inequality over all triples). Block-only instances get the
/// nonnegativity check and a `partial` flag.
ValidationResult validate_metric(const Instance& inst);

/// Ranks candidates by non-decreasing distance; ties broken by ascending
/// candidate index, so the result is deterministic.
RankedProfile derive_rankings(const Instance& inst);

/// True when d(v,c) <= d(v,c') whenever the profile ranks c ahead of c'.
bool consistent_with(const RankedProfile& profile, const Instance& inst);

/// Sum of distances over all pairs X×Y (unified point indices).
Rational d_sum(const Instance& inst, std::span<const int> xs, std::span<const int> ys);

/// Column sum d_sum(S, c) for voter set S and candidate c (block-friendly).
Rational d_sum_vc(const Instance& inst, std::span<const int> voters, int c);

/// Relabels the instance's points: voter i of the result is voter
/// voter_perm[i] of the input, and likewise for candidates.
Instance permute_points(const Instance& inst, const std::vector<int>& voter_perm,
                        const std::vector<int>& cand_perm);

}  // namespace proprep
