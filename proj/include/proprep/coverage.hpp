/// Output of a selection rule: the committee in selection order together
/// with each representative's covered neighborhood and inclusion threshold.
#pragma once

#include "proprep/rational.hpp"

#include <string>
#include <vector>

namespace proprep {

struct CoverageRecord {
    enum class Kind { ear, tgc };

    struct Seat {
        int candidate = -1;
        bool filler = false;
        std::vector<int> voters;  // N_r, ascending; empty for fillers
        int tau = 0;              // EAR: tolerance at inclusion (1-based rank)
        Rational delta;           // TGC: ball radius at inclusion
    };

    Kind kind = Kind::ear;
    int n = 0, m = 0, k = 0, p = 0;
    std::vector<Seat> seats;      // committee order, size k
    std::vector<int> uncovered;   // U at termination, ascending

    /// Neighborhood insert/remove/probe events; the runtime-shape benchmarks
    /// assert this stays within a small constant times n*m.
    long long ops = 0;

    std::vector<int> committee() const {
        std::vector<int> r;
        r.reserve(seats.size());
        for (const auto& s : seats) r.push_back(s.candidate);
        return r;
    }
};

/// Rule-independent postcondition check: committee size k, neighborhoods
/// pairwise disjoint with |N_r| = p on non-filler seats, covered/uncovered
/// partition V, and |U| < p whenever an unselected candidate remains.
/// Returns human-readable violations; empty means all hold.
std::vector<std::string> coverage_structural_issues(const CoverageRecord& rec);

bool operator==(const CoverageRecord::Seat& a, const CoverageRecord::Seat& b);
bool operator==(const CoverageRecord& a, const CoverageRecord& b);

}  // namespace proprep
