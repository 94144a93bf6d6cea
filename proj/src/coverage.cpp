#include "proprep/coverage.hpp"

#include <algorithm>

namespace proprep {

std::vector<std::string> coverage_structural_issues(const CoverageRecord& rec) {
    std::vector<std::string> issues;
    auto complain = [&](std::string msg) { issues.push_back(std::move(msg)); };

    if (static_cast<int>(rec.seats.size()) != rec.k) complain("committee size is not k");

    std::vector<int> covered_by(rec.n, -1);
    std::vector<bool> in_committee(rec.m, false);
    for (const auto& seat : rec.seats) {
        if (seat.candidate < 0 || seat.candidate >= rec.m) {
            complain("seat candidate index out of range");
            continue;
        }
        if (in_committee[seat.candidate]) complain("candidate seated twice");
        in_committee[seat.candidate] = true;
        if (seat.filler) {
            if (!seat.voters.empty()) complain("filler seat with a neighborhood");
            continue;
        }
        if (static_cast<int>(seat.voters.size()) != rec.p)
            complain("non-filler neighborhood size differs from the quota");
        if (!std::is_sorted(seat.voters.begin(), seat.voters.end()))
            complain("neighborhood voters not ascending");
        for (int v : seat.voters) {
            if (v < 0 || v >= rec.n) {
                complain("covered voter index out of range");
                continue;
            }
            if (covered_by[v] != -1) complain("voter covered by two neighborhoods");
            covered_by[v] = seat.candidate;
        }
    }

    std::vector<bool> uncovered_flag(rec.n, false);
    for (int v : rec.uncovered) {
        if (v < 0 || v >= rec.n) {
            complain("uncovered voter index out of range");
            continue;
        }
        uncovered_flag[v] = true;
        if (covered_by[v] != -1) complain("voter both covered and uncovered");
    }
    for (int v = 0; v < rec.n; ++v)
        if (covered_by[v] == -1 && !uncovered_flag[v])
            complain("voter neither covered nor listed uncovered");

    bool some_unselected = false;
    for (int c = 0; c < rec.m; ++c)
        if (!in_committee[c]) some_unselected = true;
    if (some_unselected && static_cast<int>(rec.uncovered.size()) >= rec.p)
        complain("p or more voters left uncovered while an unselected candidate remains");

    return issues;
}

bool operator==(const CoverageRecord::Seat& a, const CoverageRecord::Seat& b) {
    return a.candidate == b.candidate && a.filler == b.filler && a.voters == b.voters &&
           a.tau == b.tau && a.delta == b.delta;
}

bool operator==(const CoverageRecord& a, const CoverageRecord& b) {
    return a.kind == b.kind && a.n == b.n && a.m == b.m && a.k == b.k && a.p == b.p &&
           a.seats == b.seats && a.uncovered == b.uncovered;
}

}  // namespace proprep
