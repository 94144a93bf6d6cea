#include "proprep/instance.hpp"

#include <algorithm>
#include <numeric>

namespace proprep {

namespace {
const Rational kZero(0);
}

const Rational& Instance::d(int x, int y) const {
    if (full) return dist[static_cast<size_t>(x) * points() + y];
    if (x == y) return kZero;
    if (x < n && y >= n) return d_vc(x, y - n);
    if (y < n && x >= n) return d_vc(y, x - n);
    throw Error(Error::Kind::metric_missing,
                "distance requires the full matrix, instance only carries the V x C block");
}

void RankedProfile::index() {
    if (static_cast<int>(order.size()) != n)
        throw Error(Error::Kind::profile_shape_mismatch, "profile has wrong number of voters");
    pos_.assign(static_cast<size_t>(n) * m, 0);
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(order[v].size()) != m)
            throw Error(Error::Kind::profile_shape_mismatch, "ranking row has wrong length");
        for (int t = 0; t < m; ++t) {
            int c = order[v][t];
            if (c < 0 || c >= m || pos_[static_cast<size_t>(v) * m + c] != 0)
                throw Error(Error::Kind::profile_shape_mismatch,
                            "ranking row is not a permutation of the candidates");
            pos_[static_cast<size_t>(v) * m + c] = t + 1;
        }
    }
}

int hare_quota(int n, int k) {
    if (n < 1 || k < 1)
        throw Error(Error::Kind::bad_argument, "hare_quota requires n >= 1 and k >= 1");
    return (n + k - 1) / k;
}

ValidationResult validate_metric(const Instance& inst) {
    ValidationResult res;
    auto fail = [&](ValidationResult::Issue issue, int x, int y, int z, std::string msg) {
        res.ok = false;
        res.issue = issue;
        res.x = x;
        res.y = y;
        res.z = z;
        res.message = std::move(msg);
        return res;
    };

    const int P = inst.points();
    if (inst.n < 1 || inst.m < 1)
        return fail(ValidationResult::Issue::bad_shape, -1, -1, -1, "empty voter or candidate set");
    const size_t want = inst.full ? static_cast<size_t>(P) * P
                                  : static_cast<size_t>(inst.n) * inst.m;
    if (inst.dist.size() != want)
        return fail(ValidationResult::Issue::bad_shape, -1, -1, -1,
                    "matrix size does not match n+m");

    if (!inst.full) {
        res.partial = true;
        for (int v = 0; v < inst.n; ++v)
            for (int c = 0; c < inst.m; ++c)
                if (inst.d_vc(v, c).sign() < 0)
                    return fail(ValidationResult::Issue::negative, v, inst.n + c, -1,
                                "negative distance");
        return res;
    }

    for (int x = 0; x < P; ++x) {
        if (!inst.d(x, x).is_zero())
            return fail(ValidationResult::Issue::nonzero_diagonal, x, -1, -1,
                        "nonzero self-distance");
        for (int y = x + 1; y < P; ++y) {
            if (inst.d(x, y) != inst.d(y, x))
                return fail(ValidationResult::Issue::asymmetric, x, y, -1, "asymmetric pair");
            if (inst.d(x, y).sign() < 0)
                return fail(ValidationResult::Issue::negative, x, y, -1, "negative distance");
        }
    }
    for (int x = 0; x < P; ++x)
        for (int y = 0; y < P; ++y) {
            if (y == x) continue;
            for (int z = 0; z < P; ++z) {
                if (z == x || z == y) continue;
                if (inst.d(x, z) > inst.d(x, y) + inst.d(y, z))
                    return fail(ValidationResult::Issue::triangle, x, y, z,
                                "triangle inequality violated");
            }
        }
    return res;
}

RankedProfile derive_rankings(const Instance& inst) {
    RankedProfile profile;
    profile.n = inst.n;
    profile.m = inst.m;
    profile.order.resize(inst.n);
    for (int v = 0; v < inst.n; ++v) {
        auto& row = profile.order[v];
        row.resize(inst.m);
        std::iota(row.begin(), row.end(), 0);
        std::sort(row.begin(), row.end(), [&](int a, int b) {
            const Rational& da = inst.d_vc(v, a);
            const Rational& db = inst.d_vc(v, b);
            if (da != db) return da < db;
            return a < b;
        });
    }
    profile.index();
    return profile;
}

bool consistent_with(const RankedProfile& profile, const Instance& inst) {
    if (profile.n != inst.n || profile.m != inst.m) return false;
    // Adjacent positions suffice: distances must be non-decreasing down each row.
    for (int v = 0; v < inst.n; ++v)
        for (int t = 0; t + 1 < inst.m; ++t)
            if (inst.d_vc(v, profile.order[v][t]) > inst.d_vc(v, profile.order[v][t + 1]))
                return false;
    return true;
}

Rational d_sum(const Instance& inst, std::span<const int> xs, std::span<const int> ys) {
    Rational total;
    for (int x : xs)
        for (int y : ys) total += inst.d(x, y);
    return total;
}

Rational d_sum_vc(const Instance& inst, std::span<const int> voters, int c) {
    Rational total;
    for (int v : voters) total += inst.d_vc(v, c);
    return total;
}

Instance permute_points(const Instance& inst, const std::vector<int>& voter_perm,
                        const std::vector<int>& cand_perm) {
    if (static_cast<int>(voter_perm.size()) != inst.n ||
        static_cast<int>(cand_perm.size()) != inst.m)
        throw Error(Error::Kind::bad_argument, "permutation size mismatch");
    Instance out = inst;
    auto src_point = [&](int p) {
        return p < inst.n ? voter_perm[p] : inst.n + cand_perm[p - inst.n];
    };
    if (inst.full) {
        const int P = inst.points();
        for (int x = 0; x < P; ++x)
            for (int y = 0; y < P; ++y)
                out.dist[static_cast<size_t>(x) * P + y] = inst.d(src_point(x), src_point(y));
    } else {
        for (int v = 0; v < inst.n; ++v)
            for (int c = 0; c < inst.m; ++c)
                out.dist[static_cast<size_t>(v) * inst.m + c] =
                    inst.d_vc(voter_perm[v], cand_perm[c]);
    }
    if (!inst.labels.empty())
        for (int p = 0; p < inst.points(); ++p) out.labels[p] = inst.labels[src_point(p)];
    return out;
}

}  // namespace proprep
