// Shared instance builders for the test suites.
#pragma once

#include "proprep/instance.hpp"

#include <vector>

namespace proprep::testing {

/// Full matrix from points on a line: voters then candidates, d = |a - b|.
inline Instance full_from_positions(const std::vector<Rational>& voters,
                                    const std::vector<Rational>& cands, int k) {
    Instance inst;
    inst.n = static_cast<int>(voters.size());
    inst.m = static_cast<int>(cands.size());
    inst.k = k;
    inst.full = true;
    std::vector<Rational> pos = voters;
    pos.insert(pos.end(), cands.begin(), cands.end());
    const int P = inst.points();
    inst.dist.assign(static_cast<size_t>(P) * P, Rational(0));
    for (int x = 0; x < P; ++x)
        for (int y = 0; y < P; ++y)
            inst.dist[static_cast<size_t>(x) * P + y] = abs(pos[x] - pos[y]);
    return inst;
}

/// The recurring reference election: voters at 0, 1, 10, 11 and candidates
/// at 1/2, 21/2, 100 on a line, committee size 2 (quota 2).
inline Instance line_instance() {
    return full_from_positions({Rational(0), Rational(1), Rational(10), Rational(11)},
                               {Rational(1, 2), Rational(21, 2), Rational(100)}, 2);
}

/// Full matrix over labeled clusters: distance 0 inside, `across` between.
inline Instance clusters_instance(const std::vector<int>& voter_cluster,
                                  const std::vector<int>& cand_cluster, int k,
                                  const Rational& across) {
    Instance inst;
    inst.n = static_cast<int>(voter_cluster.size());
    inst.m = static_cast<int>(cand_cluster.size());
    inst.k = k;
    inst.full = true;
    const int P = inst.points();
    auto cl = [&](int p) { return p < inst.n ? voter_cluster[p] : cand_cluster[p - inst.n]; };
    inst.dist.assign(static_cast<size_t>(P) * P, Rational(0));
    for (int x = 0; x < P; ++x)
        for (int y = 0; y < P; ++y)
            if (x != y && cl(x) != cl(y)) inst.dist[static_cast<size_t>(x) * P + y] = across;
    return inst;
}

}  // namespace proprep::testing
