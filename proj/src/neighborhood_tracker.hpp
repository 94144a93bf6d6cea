// Shared bookkeeping for the approval- and ball-growing rules. A per-voter
// ledger of joined neighborhoods makes removal lazy: each (voter, candidate)
// pair is inserted and removed at most once, which is what keeps the total
// event count linear in n*m.
#pragma once

#include <algorithm>
#include <vector>

namespace proprep::detail {

struct NeighborhoodTracker {
    int n, m, p;
    std::vector<std::vector<int>> members;  // per candidate: voters ever inserted
    std::vector<std::vector<int>> joined;   // per voter: candidates joined
    std::vector<int> live;                  // per candidate: current |N_c|
    std::vector<bool> covered;
    std::vector<bool> selected;
    int covered_count = 0;
    long long ops = 0;

    NeighborhoodTracker(int n_, int m_, int p_)
        : n(n_), m(m_), p(p_), members(m_), joined(n_), live(m_, 0),
          covered(n_, false), selected(m_, false) {}

    /// Adds v to N_c; true when |N_c| reaches the quota.
    bool insert(int v, int c) {
        members[c].push_back(v);
        joined[v].push_back(c);
        ++ops;
        return ++live[c] == p;
    }

    /// Seats c: marks its live members covered and removes them from every
    /// other still-growing neighborhood. Returns N_c in ascending order.
    std::vector<int> select(int c) {
        selected[c] = true;
        std::vector<int> voters;
        voters.reserve(p);
        for (int w : members[c])
            if (!covered[w]) voters.push_back(w);
        for (int w : voters) {
            covered[w] = true;
            ++covered_count;
            for (int other : joined[w])
                if (other != c && !selected[other]) {
                    --live[other];
                    ++ops;
                }
            joined[w].clear();
        }
        std::sort(voters.begin(), voters.end());
        return voters;
    }

    std::vector<int> uncovered_voters() const {
        std::vector<int> u;
        for (int v = 0; v < n; ++v)
            if (!covered[v]) u.push_back(v);
        return u;
    }

    /// Lowest-index unselected candidates, marked as fillers.
    void fill_remaining(std::vector<int>& out, int want) {
        for (int c = 0; c < m && static_cast<int>(out.size()) < want; ++c)
            if (!selected[c]) {
                selected[c] = true;
                out.push_back(c);
            }
    }
};

}  // namespace proprep::detail
