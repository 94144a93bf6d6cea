/// Instance families: the lower-bound constructions (two-cluster, diverging,
/// refined cluster sizes), the six-voter ordinal-vs-cardinal separation
/// election, and seeded random lattice instances for the test harness.
#pragma once

#include "proprep/instance.hpp"

namespace proprep {

/// Two clusters of k = 2*ceil(2*alpha) - 1 co-located voter/candidate pairs,
/// unit distances inside a cluster, `far` across. Every committee leaves a
/// size-ceil(2*alpha) coalition whose core ratio is at least 1 + 1/(2*alpha).
/// Requires alpha > 1, far >= 1.
Instance gen_two_cluster(const Rational& alpha, const Rational& far = Rational(1000));

/// k+1 clusters of one candidate plus k-1 voters each, with k = 1/(alpha-1);
/// zero distances inside a cluster, one across. Requires alpha in (1, 3/2)
/// with 1/(alpha-1) integral.
Instance gen_diverging(const Rational& alpha);

/// k+1 clusters of one candidate and floor/ceil(n/(k+1)) voters (sizes
/// summing to n); zero inside, one across. Requires k <= n/4.
Instance gen_refined(int n, int k);

struct SeparationElection {
    Instance instance;      // full 12-point metric, n = m = 6, k = 3
    RankedProfile profile;  // the six fixed rankings; equals derive_rankings
};

/// The six-voter election separating ordinal from cardinal proportional
/// fairness: cluster one realizes the golden-ratio distance table (with a
/// rational surrogate for (sqrt(5)-1)/2 accurate to 1e-9), cluster two
/// mirrors it at unit scale, clusters sit 100 apart, and within-cluster
/// voter-voter/candidate-candidate distances are the shortest-path
/// completion. All table inequalities and the metric axioms are re-verified
/// at generation time. Requires 0 < eps < 1/10.
SeparationElection gen_separation(const Rational& eps);

/// Rational surrogate for (sqrt(5)-1)/2 used by gen_separation.
Rational separation_delta_hat();

enum class Norm { l1, linf };

/// Seeded lattice instance: n voters and m candidates at integer points of
/// [0,50]^dim, full exact metric under the chosen norm. Deterministic per
/// seed. Requires 1 <= k < m, dim >= 1.
Instance gen_random(int n, int m, int k, int dim, Norm norm, unsigned long long seed);

/// Same distribution but materializing only the V x C block; for benchmark
/// sizes where the full matrix would be quadratic in n+m.
Instance gen_random_block(int n, int m, int k, int dim, Norm norm, unsigned long long seed);

}  // namespace proprep
