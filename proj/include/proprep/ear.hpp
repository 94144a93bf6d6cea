/// Expanding approvals: committee selection from ordinal information only.
///
/// The rule sweeps a tolerance tau = 1..m; in round tau each still-uncovered
/// voter (in ascending index order) approves its rank-tau candidate. The
/// moment a candidate has quota-many approvals from uncovered voters it is
/// seated, its approvers are covered and withdrawn everywhere else. If fewer
/// than k candidates get seated, the lowest-index unseated candidates fill
/// the committee. Every choice the abstract rule leaves open is fixed, so
/// identical inputs give identical coverage records.
#pragma once

#include "proprep/coverage.hpp"
#include "proprep/instance.hpp"

namespace proprep {

CoverageRecord ear_select(const RankedProfile& profile, int k);

/// Two-round single-winner rule: find the smallest tau at which some
/// candidate c sits in the top tau of at least ceil(n/2) voters, repeat on
/// the remaining floor(n/2) voters to get c', return the pairwise-majority
/// winner of {c, c'} (an exact tie goes to c).
int single_winner(const RankedProfile& profile);

/// Same guarantee through the committee rule: run ear_select with k = 2 and
/// return the pairwise-majority winner of the two seats (tie: first seat).
int single_winner_via_ear(const RankedProfile& profile);

/// Rule-specific postconditions: position(v, r) <= tau_r on every covered
/// voter, and inclusion tolerances non-decreasing across seats.
std::vector<std::string> ear_coverage_issues(const CoverageRecord& rec,
                                             const RankedProfile& profile);

}  // namespace proprep
