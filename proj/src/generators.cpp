#include "proprep/generators.hpp"

#include <algorithm>
#include <random>

namespace proprep {

namespace {

/// Full matrix from a cluster assignment over paired-or-not points:
/// distance 0 inside a cluster, `across` between clusters.
Instance cluster_instance(int n, int m, int k, const std::vector<int>& voter_cluster,
                          const std::vector<int>& cand_cluster, const Rational& inside,
                          const Rational& across) {
    Instance inst;
    inst.n = n;
    inst.m = m;
    inst.k = k;
    inst.full = true;
    const int P = n + m;
    inst.dist.assign(static_cast<size_t>(P) * P, Rational(0));
    auto cluster = [&](int p) { return p < n ? voter_cluster[p] : cand_cluster[p - n]; };
    for (int x = 0; x < P; ++x)
        for (int y = 0; y < P; ++y) {
            if (x == y) continue;
            inst.dist[static_cast<size_t>(x) * P + y] =
                cluster(x) == cluster(y) ? inside : across;
        }
    return inst;
}

}  // namespace

Instance gen_two_cluster(const Rational& alpha, const Rational& far) {
    if (alpha <= Rational(1))
        throw Error(Error::Kind::bad_argument, "two-cluster family needs alpha > 1");
    if (far < Rational(1))
        throw Error(Error::Kind::bad_argument, "cross-cluster distance must be >= 1");
    const int q = static_cast<int>(ceil_int(Rational(2) * alpha));
    const int k = 2 * q - 1;
    const int n = 2 * k;

    // Voters and candidates are the same 2k points (paired encoding: voter i
    // and candidate i sit at distance 0); cluster A is points 0..k-1.
    Instance inst;
    inst.n = n;
    inst.m = n;
    inst.k = k;
    inst.full = true;
    const int P = 2 * n;
    inst.dist.assign(static_cast<size_t>(P) * P, Rational(0));
    auto point = [&](int idx) { return idx % n; };      // voter i and candidate i coincide
    auto cluster = [&](int pt) { return pt < k ? 0 : 1; };
    for (int x = 0; x < P; ++x)
        for (int y = 0; y < P; ++y) {
            int px = point(x), py = point(y);
            if (px == py) continue;
            inst.dist[static_cast<size_t>(x) * P + y] =
                cluster(px) == cluster(py) ? Rational(1) : far;
        }
    return inst;
}

Instance gen_diverging(const Rational& alpha) {
    if (alpha <= Rational(1) || alpha >= Rational(3, 2))
        throw Error(Error::Kind::bad_argument, "diverging family needs alpha in (1, 3/2)");
    Rational k_rat = Rational(1) / (alpha - Rational(1));
    if (!k_rat.is_integer())
        throw Error(Error::Kind::non_integral_k, "1/(alpha-1) must be an integer");
    const int k = static_cast<int>(k_rat.num());
    const int m = k + 1;
    const int n = k * k - 1;  // (k+1) clusters of k-1 voters

    std::vector<int> voter_cluster(n), cand_cluster(m);
    for (int i = 0; i < m; ++i) cand_cluster[i] = i;
    for (int v = 0; v < n; ++v) voter_cluster[v] = v / (k - 1);
    return cluster_instance(n, m, k, voter_cluster, cand_cluster, Rational(0), Rational(1));
}

Instance gen_refined(int n, int k) {
    if (k < 1 || n < 1) throw Error(Error::Kind::bad_argument, "need n >= 1, k >= 1");
    if (4 * k > n) throw Error(Error::Kind::k_too_large, "refined family needs k <= n/4");
    const int m = k + 1;
    const int base = n / m;
    const int rem = n % m;  // first `rem` clusters get base+1 voters

    std::vector<int> voter_cluster;
    voter_cluster.reserve(n);
    for (int i = 0; i < m; ++i) {
        int b = base + (i < rem ? 1 : 0);
        for (int j = 0; j < b; ++j) voter_cluster.push_back(i);
    }
    std::vector<int> cand_cluster(m);
    for (int i = 0; i < m; ++i) cand_cluster[i] = i;
    return cluster_instance(n, m, k, voter_cluster, cand_cluster, Rational(0), Rational(1));
}

Rational separation_delta_hat() {
    // Fibonacci convergent of (sqrt(5)-1)/2; within 1.4e-10 of the limit.
    return Rational(17711, 28657);
}

namespace {

/// All-pairs shortest paths over one cluster's bipartite voter-candidate
/// table (locals 0..2 voters, 3..5 candidates). Returns the completed 6x6
/// symmetric matrix and verifies the direct entries are not shortened.
std::vector<std::vector<Rational>> complete_cluster(const Rational table[3][3]) {
    const int N = 6;
    std::vector<std::vector<Rational>> d(N, std::vector<Rational>(N));
    std::vector<std::vector<bool>> has(N, std::vector<bool>(N, false));
    for (int i = 0; i < N; ++i) {
        has[i][i] = true;
        d[i][i] = Rational(0);
    }
    for (int v = 0; v < 3; ++v)
        for (int c = 0; c < 3; ++c) {
            d[v][3 + c] = d[3 + c][v] = table[v][c];
            has[v][3 + c] = has[3 + c][v] = true;
        }
    for (int mid = 0; mid < N; ++mid)
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (!has[i][mid] || !has[mid][j]) continue;
                Rational via = d[i][mid] + d[mid][j];
                if (!has[i][j] || via < d[i][j]) {
                    d[i][j] = via;
                    has[i][j] = true;
                }
            }
    for (int v = 0; v < 3; ++v)
        for (int c = 0; c < 3; ++c)
            if (d[v][3 + c] != table[v][c])
                throw Error(Error::Kind::bad_argument,
                            "separation table entry shortened by completion; eps too large");
    return d;
}

}  // namespace

SeparationElection gen_separation(const Rational& eps) {
    if (eps.sign() <= 0 || eps >= Rational(1, 10))
        throw Error(Error::Kind::bad_argument, "separation election needs 0 < eps < 1/10");
    const Rational delta = separation_delta_hat();

    // Distance table of the observed cluster, rows v1..v3, columns c1..c3.
    const Rational one(1), two(2), three(3);
    const Rational table1[3][3] = {
        {three, three + eps, three + eps + eps},
        {three + two * delta, one, one + eps},
        {two + delta, two + delta + eps, delta},
    };
    // Mirror cluster at unit scale; the same eps ladder orders the rankings.
    Rational table2[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) table2[i][j] = one + Rational(((j - i) % 3 + 3) % 3) * eps;

    auto d1 = complete_cluster(table1);
    auto d2 = complete_cluster(table2);

    Instance inst;
    inst.n = 6;
    inst.m = 6;
    inst.k = 3;
    inst.full = true;
    const int P = 12;
    const Rational cross(100);
    inst.dist.assign(static_cast<size_t>(P) * P, Rational(0));
    // Point layout: voters v1 v2 v3 v1' v2' v3', candidates c1 c2 c3 c1' c2' c3'.
    auto local = [&](int pt, int& cluster_out) {
        int role = pt < 6 ? pt : pt - 6;     // voter or candidate index 0..5
        bool primed = role >= 3;
        cluster_out = primed ? 1 : 0;
        int idx = role % 3;
        return (pt < 6 ? idx : 3 + idx);     // local node in the cluster graph
    };
    for (int x = 0; x < P; ++x)
        for (int y = 0; y < P; ++y) {
            if (x == y) continue;
            int cx, cy;
            int lx = local(x, cx);
            int ly = local(y, cy);
            inst.dist[static_cast<size_t>(x) * P + y] =
                cx != cy ? cross : (cx == 0 ? d1[lx][ly] : d2[lx][ly]);
        }
    inst.labels = {"v1", "v2", "v3", "v1'", "v2'", "v3'",
                   "c1", "c2", "c3", "c1'", "c2'", "c3'"};

    SeparationElection out;
    out.instance = std::move(inst);
    out.profile.n = 6;
    out.profile.m = 6;
    out.profile.order = {
        {0, 1, 2, 3, 4, 5}, {1, 2, 0, 3, 4, 5}, {2, 0, 1, 3, 4, 5},
        {3, 4, 5, 0, 1, 2}, {4, 5, 3, 0, 1, 2}, {5, 3, 4, 0, 1, 2},
    };
    out.profile.index();

    // Generation-time re-verification: metric axioms, the fixed rankings,
    // and agreement with the deterministic derivation.
    ValidationResult val = validate_metric(out.instance);
    if (!val.ok)
        throw Error(Error::Kind::bad_argument,
                    "separation metric failed validation: " + val.message);
    RankedProfile derived = derive_rankings(out.instance);
    if (derived.order != out.profile.order)
        throw Error(Error::Kind::bad_argument,
                    "separation metric does not derive the fixed rankings");
    return out;
}

namespace {

std::vector<std::vector<long long>> lattice_points(int count, int dim,
                                                   unsigned long long seed) {
    std::mt19937_64 rng(seed);
    const int side = 51;  // lattice [0, 50]^dim
    std::vector<std::vector<long long>> pts(count, std::vector<long long>(dim));
    for (auto& pt : pts)
        for (auto& coord : pt) coord = static_cast<long long>(rng() % side);
    return pts;
}

long long lattice_distance(const std::vector<long long>& a, const std::vector<long long>& b,
                           Norm norm) {
    long long acc = 0;
    for (size_t t = 0; t < a.size(); ++t) {
        long long diff = std::llabs(a[t] - b[t]);
        if (norm == Norm::l1)
            acc += diff;
        else
            acc = std::max(acc, diff);
    }
    return acc;
}

}  // namespace

Instance gen_random(int n, int m, int k, int dim, Norm norm, unsigned long long seed) {
    if (n < 1 || m < 2 || k < 1 || k >= m || dim < 1)
        throw Error(Error::Kind::bad_argument, "need n >= 1, 1 <= k < m, dim >= 1");
    const int P = n + m;
    auto pts = lattice_points(P, dim, seed);

    Instance inst;
    inst.n = n;
    inst.m = m;
    inst.k = k;
    inst.full = true;
    inst.dist.assign(static_cast<size_t>(P) * P, Rational(0));
    for (int x = 0; x < P; ++x)
        for (int y = x + 1; y < P; ++y) {
            Rational d(lattice_distance(pts[x], pts[y], norm));
            inst.dist[static_cast<size_t>(x) * P + y] = d;
            inst.dist[static_cast<size_t>(y) * P + x] = d;
        }
    return inst;
}

Instance gen_random_block(int n, int m, int k, int dim, Norm norm, unsigned long long seed) {
    if (n < 1 || m < 2 || k < 1 || k >= m || dim < 1)
        throw Error(Error::Kind::bad_argument, "need n >= 1, 1 <= k < m, dim >= 1");
    auto pts = lattice_points(n + m, dim, seed);

    Instance inst;
    inst.n = n;
    inst.m = m;
    inst.k = k;
    inst.full = false;
    inst.dist.reserve(static_cast<size_t>(n) * m);
    for (int v = 0; v < n; ++v)
        for (int c = 0; c < m; ++c)
            inst.dist.emplace_back(lattice_distance(pts[v], pts[n + c], norm));
    return inst;
}

}  // namespace proprep
