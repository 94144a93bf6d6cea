#include "proprep/tgc.hpp"

#include "neighborhood_tracker.hpp"

#include <algorithm>

namespace proprep {

CoverageRecord tgc_select(const Instance& inst) {
    const int n = inst.n;
    const int m = inst.m;
    const int k = inst.k;
    if (n < 1 || m < 1)
        throw Error(Error::Kind::metric_missing, "instance has no voters or candidates");
    if (k < 1 || k > m)
        throw Error(Error::Kind::bad_argument, "committee size must be in 1..m");
    const size_t want = inst.full ? static_cast<size_t>(inst.points()) * inst.points()
                                  : static_cast<size_t>(n) * m;
    if (inst.dist.size() != want)
        throw Error(Error::Kind::metric_missing, "distance matrix missing or wrong shape");

    CoverageRecord rec;
    rec.kind = CoverageRecord::Kind::tgc;
    rec.n = n;
    rec.m = m;
    rec.k = k;
    rec.p = hare_quota(n, k);

    // One breakpoint per (v, c) pair; sorting by (radius, v, c) fixes every
    // simultaneous-arrival tie.
    std::vector<std::pair<int, int>> events;
    events.reserve(static_cast<size_t>(n) * m);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c) events.emplace_back(v, c);
    std::sort(events.begin(), events.end(), [&](const auto& a, const auto& b) {
        const Rational& da = inst.d_vc(a.first, a.second);
        const Rational& db = inst.d_vc(b.first, b.second);
        if (da != db) return da < db;
        return a < b;
    });

    detail::NeighborhoodTracker t(n, m, rec.p);
    for (const auto& [v, c] : events) {
        if (n - t.covered_count < rec.p) break;  // no ball can fill anymore
        ++t.ops;  // membership probe for the event
        if (t.covered[v] || t.selected[c]) continue;
        if (t.insert(v, c)) {
            CoverageRecord::Seat seat;
            seat.candidate = c;
            seat.voters = t.select(c);
            seat.delta = inst.d_vc(v, c);
            rec.seats.push_back(std::move(seat));
        }
    }

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

std::vector<std::string> tgc_coverage_issues(const CoverageRecord& rec, const Instance& inst) {
    std::vector<std::string> issues;
    const Rational* prev = nullptr;
    for (const auto& seat : rec.seats) {
        if (seat.filler) continue;
        if (prev && seat.delta < *prev) issues.push_back("inclusion radii decrease");
        prev = &seat.delta;
        for (int v : seat.voters)
            if (inst.d_vc(v, seat.candidate) > seat.delta)
                issues.push_back("covered voter outside its representative's ball");
    }
    return issues;
}

}  // namespace proprep
