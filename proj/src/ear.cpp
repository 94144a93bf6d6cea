#include "proprep/ear.hpp"

#include "neighborhood_tracker.hpp"

#include <algorithm>

namespace proprep {

CoverageRecord ear_select(const RankedProfile& profile, int k) {
    const int n = profile.n;
    const int m = profile.m;
    if (n < 1 || m < 1 || !profile.indexed())
        throw Error(Error::Kind::profile_shape_mismatch, "profile not indexed or empty");
    if (k < 1 || k > m)
        throw Error(Error::Kind::bad_argument, "committee size must be in 1..m");

    CoverageRecord rec;
    rec.kind = CoverageRecord::Kind::ear;
    rec.n = n;
    rec.m = m;
    rec.k = k;
    rec.p = hare_quota(n, k);

    detail::NeighborhoodTracker t(n, m, rec.p);
    for (int tau = 1; tau <= m && t.covered_count < n; ++tau) {
        for (int v = 0; v < n; ++v) {
            ++t.ops;  // membership probe for (v, tau)
            if (t.covered[v]) continue;
            int c = profile.order[v][tau - 1];
            if (t.selected[c]) continue;
            if (t.insert(v, c)) {
                CoverageRecord::Seat seat;
                seat.candidate = c;
                seat.voters = t.select(c);
                seat.tau = tau;
                rec.seats.push_back(std::move(seat));
            }
        }
    }

    // A seat consumes p >= n/k voters, so at most k candidates ever get
    // seated; top up with the lowest-index unselected ones.
    std::vector<int> fillers;
    t.fill_remaining(fillers, k - static_cast<int>(rec.seats.size()));
    for (int c : fillers) {
        CoverageRecord::Seat seat;
        seat.candidate = c;
        seat.filler = true;
        rec.seats.push_back(std::move(seat));
    }

    rec.uncovered = t.uncovered_voters();
    rec.ops = t.ops;
    return rec;
}

namespace {

/// Index of the winner of the pairwise majority between a and b; an exact
/// tie goes to a.
int majority_of(const RankedProfile& profile, int a, int b) {
    if (a == b) return a;
    int for_a = 0, for_b = 0;
    for (int v = 0; v < profile.n; ++v)
        (profile.position(v, a) < profile.position(v, b) ? for_a : for_b) += 1;
    return for_b > for_a ? b : a;
}

}  // namespace

int single_winner(const RankedProfile& profile) {
    const int n = profile.n;
    const int m = profile.m;
    if (n < 1 || m < 1 || !profile.indexed())
        throw Error(Error::Kind::profile_shape_mismatch, "profile not indexed or empty");

    const int need = (n + 1) / 2;  // ceil(n/2)

    // First pass: smallest tau with some candidate in the top tau of at
    // least ceil(n/2) voters; ties at the same tau go to the lowest index.
    std::vector<int> count(m, 0);
    int c_first = -1;
    int tau_first = m;
    for (int tau = 1; tau <= m && c_first < 0; ++tau) {
        for (int v = 0; v < n; ++v) ++count[profile.order[v][tau - 1]];
        for (int c = 0; c < m; ++c)
            if (count[c] >= need) {
                c_first = c;
                tau_first = tau;
                break;
            }
    }

    // The first ceil(n/2) qualifying voters (ascending index) are the ones
    // counted for c; everyone else forms the remainder.
    std::vector<int> remainder;
    int used = 0;
    for (int v = 0; v < n; ++v) {
        if (used < need && profile.position(v, c_first) <= tau_first)
            ++used;
        else
            remainder.push_back(v);
    }
    if (remainder.empty()) return c_first;

    // Second pass: smallest tau' with some candidate in the top tau' of all
    // remaining voters.
    int c_second = -1;
    for (int tau = 1; tau <= m && c_second < 0; ++tau) {
        for (int c = 0; c < m && c_second < 0; ++c) {
            bool everyone = true;
            for (int v : remainder)
                if (profile.position(v, c) > tau) {
                    everyone = false;
                    break;
                }
            if (everyone) c_second = c;
        }
    }

    return majority_of(profile, c_first, c_second);
}

int single_winner_via_ear(const RankedProfile& profile) {
    if (profile.m < 2) return 0;
    CoverageRecord rec = ear_select(profile, 2);
    return majority_of(profile, rec.seats[0].candidate, rec.seats[1].candidate);
}

std::vector<std::string> ear_coverage_issues(const CoverageRecord& rec,
                                             const RankedProfile& profile) {
    std::vector<std::string> issues;
    int prev_tau = 0;
    for (const auto& seat : rec.seats) {
        if (seat.filler) continue;
        if (seat.tau < prev_tau) issues.push_back("inclusion tolerances decrease");
        prev_tau = seat.tau;
        for (int v : seat.voters)
            if (profile.position(v, seat.candidate) > seat.tau)
                issues.push_back("covered voter ranks its representative below tau");
    }
    return issues;
}

}  // namespace proprep
