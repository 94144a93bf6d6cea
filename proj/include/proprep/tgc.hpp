/// Truncated greedy capture: committee selection with known distances.
///
/// Balls grow around all unseated candidates at the same rate; the moment a
/// ball holds quota-many uncovered voters its candidate is seated, those
/// voters are covered, and the ball is frozen (a seated candidate captures
/// nobody else). Growth is discretized at the exact rational breakpoints
/// {d(v,c)}, processed in ascending (radius, voter, candidate) order, so the
/// simulation is deterministic and tolerance-free.
#pragma once

#include "proprep/coverage.hpp"
#include "proprep/instance.hpp"

namespace proprep {

CoverageRecord tgc_select(const Instance& inst);

/// Rule-specific postconditions: d(v, r) <= delta_r on every covered voter,
/// and inclusion radii non-decreasing across seats.
std::vector<std::string> tgc_coverage_issues(const CoverageRecord& rec, const Instance& inst);

}  // namespace proprep
