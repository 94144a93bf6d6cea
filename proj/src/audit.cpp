#include "proprep/audit.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <random>

namespace proprep {

namespace {

void check_committee(const Instance& inst, const std::vector<int>& committee) {
    if (static_cast<int>(committee.size()) != inst.k)
        throw Error(Error::Kind::bad_argument, "committee size differs from the instance's k");
    std::vector<bool> seen(inst.m, false);
    for (int c : committee) {
        if (c < 0 || c >= inst.m)
            throw Error(Error::Kind::bad_argument, "committee candidate index out of range");
        if (seen[c]) throw Error(Error::Kind::bad_argument, "duplicate committee candidate");
        seen[c] = true;
    }
}

std::vector<Rational> committee_costs(const Instance& inst, const std::vector<int>& committee) {
    std::vector<Rational> cost(inst.n);
    for (int v = 0; v < inst.n; ++v) {
        const Rational* best = nullptr;
        for (int c : committee) {
            const Rational& d = inst.d_vc(v, c);
            if (!best || d < *best) best = &d;
        }
        cost[v] = *best;
    }
    return cost;
}

std::vector<int> members_of(const std::vector<char>& in) {
    std::vector<int> s;
    for (int v = 0; v < static_cast<int>(in.size()); ++v)
        if (in[v]) s.push_back(v);
    return s;
}

/// Drives the coalition enumeration: every subset of size >= min_size
/// exactly once in reflected-Gray-code order (one toggle per step), or
/// `sample_count` seeded random subsets when sampling is requested.
template <class Toggle, class Visit>
void for_each_coalition(int n, int min_size, const AuditOptions& opts, Toggle&& toggle,
                        Visit&& visit) {
    if (min_size > n) return;
    if (opts.sample_count > 0) {
        std::mt19937_64 rng(opts.sample_seed);
        std::vector<char> in(n, 0);
        for (long long it = 0; it < opts.sample_count; ++it) {
            for (int v = 0; v < n; ++v)
                if (in[v]) {
                    toggle(v, false);
                    in[v] = 0;
                }
            int size = 0;
            for (int v = 0; v < n; ++v)
                if (rng() & 1u) {
                    toggle(v, true);
                    in[v] = 1;
                    ++size;
                }
            while (size < min_size) {
                int v = static_cast<int>(rng() % n);
                if (!in[v]) {
                    toggle(v, true);
                    in[v] = 1;
                    ++size;
                }
            }
            visit(in, size);
        }
        return;
    }
    if (n > opts.cap)
        throw Error(Error::Kind::enumeration_cap_exceeded,
                    "exact coalition enumeration needs n <= cap (" + std::to_string(opts.cap) +
                        "); raise the cap or use sampling");
    std::vector<char> in(n, 0);
    int size = 0;
    for (unsigned long long i = 1; i < (1ull << n); ++i) {
        int b = std::countr_zero(i);
        bool add = !in[b];
        in[b] = static_cast<char>(add);
        toggle(b, add);
        size += add ? 1 : -1;
        if (size >= min_size) visit(in, size);
    }
}

/// ceil(q) clamped into [0, n+1]; n+1 encodes "no coalition is big enough".
int ceil_clamped(const Rational& q, int n) {
    BigInt c = ceil_int(q);
    if (c > n) return n + 1;
    if (c < 0) return 0;
    return static_cast<int>(c);
}

void attach_bound(AuditReport& report, std::optional<QuadBound> bound) {
    if (!bound) return;
    report.bound = std::move(bound);
    report.satisfied = report.bound->admits(report.measured);
}

std::optional<QuadBound> pr_rule_bound(RuleBound rule, const Rational& alpha) {
    if (rule == RuleBound::none || alpha <= Rational(1)) return std::nullopt;
    return rule == RuleBound::ear ? pr_bound_ear(alpha) : pr_bound_tgc(alpha);
}

}  // namespace

const char* check_name(CheckKind c) {
    switch (c) {
        case CheckKind::pf: return "pf";
        case CheckKind::core: return "core";
        case CheckKind::pr: return "pr";
        case CheckKind::pr_strong: return "pr-strong";
        case CheckKind::cor_single: return "cor-single";
        case CheckKind::stability: return "stability";
        case CheckKind::distortion: return "distortion";
        case CheckKind::no_augmentation: return "no-augmentation";
    }
    return "?";
}

AuditReport pf_gamma(const Instance& inst, const std::vector<int>& committee, RuleBound rule) {
    check_committee(inst, committee);
    const int p = hare_quota(inst.n, inst.k);
    const auto cost = committee_costs(inst, committee);

    AuditReport report;
    report.check = CheckKind::pf;

    bool have = false;
    std::vector<std::pair<ExtRational, int>> ratios(inst.n);
    for (int c = 0; c < inst.m; ++c) {
        for (int v = 0; v < inst.n; ++v)
            ratios[v] = {audit_ratio(cost[v], inst.d_vc(v, c), &report.zero_convention), v};
        // Binding value for this target: the p-th largest ratio; a coalition
        // unanimously beating gamma exists iff at least p ratios exceed it.
        std::sort(ratios.begin(), ratios.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return b.first < a.first;
            return a.second < b.second;
        });
        const ExtRational& value = ratios[p - 1].first;
        if (!have || value > report.measured) {
            have = true;
            report.measured = value;
            Witness w;
            for (int i = 0; i < p; ++i) w.coalition.push_back(ratios[i].second);
            std::sort(w.coalition.begin(), w.coalition.end());
            w.targets = {c};
            report.witness = std::move(w);
        }
    }

    if (rule != RuleBound::none)
        attach_bound(report, rule == RuleBound::ear ? stability_bound_ear()
                                                    : stability_bound_tgc());
    return report;
}

AuditReport core_beta(const Instance& inst, const std::vector<int>& committee,
                      const Rational& alpha, RuleBound rule) {
    if (alpha < Rational(1))
        throw Error(Error::Kind::alpha_out_of_range, "core audit needs alpha >= 1");
    check_committee(inst, committee);
    const int n = inst.n;
    const int p = hare_quota(n, inst.k);
    const int s0 = ceil_clamped(alpha * Rational(p), n);

    AuditReport report;
    report.check = CheckKind::core;
    report.alpha = alpha;

    if (s0 > n) {  // no coalition large enough: nothing binds
        attach_bound(report, pr_rule_bound(rule, alpha));
        return report;
    }

    const auto cost = committee_costs(inst, committee);

    for (int c = 0; c < inst.m && !report.measured.is_infinite(); ++c) {
        // Zero-distance coalitions first: a coalition inside the target's
        // zero ball with positive committee cost makes the ratio infinite.
        std::vector<int> zero_ball;
        Rational zero_cost;
        for (int v = 0; v < n; ++v)
            if (inst.d_vc(v, c).is_zero()) {
                zero_ball.push_back(v);
                zero_cost += cost[v];
            }
        if (static_cast<int>(zero_ball.size()) >= s0 && zero_cost.sign() > 0) {
            report.measured = ExtRational::infinity();
            Witness w;
            w.coalition = zero_ball;
            w.targets = {c};
            report.witness = std::move(w);
            break;
        }

        // Exact ratio search: at a fixed ratio the extremal coalition takes
        // every positive margin cost[v] - beta*d(v,c) and pads with the
        // largest margins to the size floor, so feasibility is a sort away;
        // iterating the attained ratio lands on the maximum in finitely many
        // steps, all in exact arithmetic.
        Rational beta;
        std::vector<int> best_set;
        std::vector<std::pair<Rational, int>> margins(n);
        for (int guard = 0; guard < 1000000; ++guard) {
            for (int v = 0; v < n; ++v)
                margins[v] = {cost[v] - beta * inst.d_vc(v, c), v};
            std::sort(margins.begin(), margins.end(), [](const auto& a, const auto& b) {
                if (a.first != b.first) return b.first < a.first;
                return a.second < b.second;
            });
            int positive = 0;
            while (positive < n && margins[positive].first.sign() > 0) ++positive;
            int take = std::max(s0, positive);
            Rational slack;
            for (int i = 0; i < take; ++i) slack += margins[i].first;
            if (slack.sign() <= 0) break;
            Rational lhs, rhs;
            std::vector<int> chosen(take);
            for (int i = 0; i < take; ++i) {
                chosen[i] = margins[i].second;
                lhs += cost[chosen[i]];
                rhs += inst.d_vc(chosen[i], c);
            }
            assert(rhs.sign() > 0);  // rhs == 0 is the zero-ball case above
            beta = lhs / rhs;
            best_set = std::move(chosen);
        }
        ExtRational value(beta);
        if (value > report.measured) {
            report.measured = value;
            if (!best_set.empty()) {
                Witness w;
                w.coalition = std::move(best_set);
                std::sort(w.coalition.begin(), w.coalition.end());
                w.targets = {c};
                report.witness = std::move(w);
            }
        }
    }

    attach_bound(report, pr_rule_bound(rule, alpha));
    return report;
}

namespace {

struct PrBest {
    ExtRational measured{Rational(0)};
    std::optional<Witness> witness;
};

/// One coalition enumeration serving both pr variants and all alphas.
void pr_engine(const Instance& inst, const std::vector<int>& committee,
               const std::vector<Rational>& alphas, int t_lo, int t_hi,
               const AuditOptions& opts, std::vector<PrBest>* plain,
               std::vector<PrBest>* strong) {
    check_committee(inst, committee);
    const int n = inst.n;
    const int m = inst.m;
    const int k = inst.k;
    if (t_lo < 1 || t_hi > k || t_lo > t_hi)
        throw Error(Error::Kind::bad_argument, "t range must satisfy 1 <= t_lo <= t_hi <= k");
    const int p = hare_quota(n, k);
    const int na = static_cast<int>(alphas.size());
    for (const Rational& a : alphas)
        if (a < Rational(1))
            throw Error(Error::Kind::alpha_out_of_range, "representation audit needs alpha >= 1");

    if (plain) plain->assign(na, {});
    if (strong) strong->assign(na, {});

    // Coalition-size floors ceil(t * alpha * p).
    const int nt = t_hi - t_lo + 1;
    std::vector<int> floor_of(static_cast<size_t>(nt) * na);
    int min_floor = n + 1;
    for (int ti = 0; ti < nt; ++ti)
        for (int ai = 0; ai < na; ++ai) {
            int f = ceil_clamped(Rational(t_lo + ti) * alphas[ai] * Rational(p), n);
            floor_of[static_cast<size_t>(ti) * na + ai] = f;
            min_floor = std::min(min_floor, f);
        }
    if (min_floor > n) return;  // every constraint family empty

    // Per-voter prefix sums of sorted committee distances: cheap_t[v][t] is
    // the cost of v's best t representatives.
    std::vector<std::vector<Rational>> cheap_t(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Rational> ds;
        ds.reserve(k);
        for (int c : committee) ds.push_back(inst.d_vc(v, c));
        std::sort(ds.begin(), ds.end());
        cheap_t[v].resize(t_hi + 1);
        for (int t = 1; t <= t_hi; ++t) cheap_t[v][t] = cheap_t[v][t - 1] + ds[t - 1];
    }

    // Running sums maintained across Gray-code toggles.
    std::vector<Rational> lhs_plain(t_hi + 1);          // sum over S of cheap_t
    std::vector<Rational> col(m);                       // candidate column sums over S
    std::vector<std::pair<Rational, int>> sorted_cols(m);
    std::vector<std::pair<Rational, int>> sorted_committee(k);

    auto toggle = [&](int v, bool add) {
        if (add) {
            for (int t = t_lo; t <= t_hi; ++t) lhs_plain[t] += cheap_t[v][t];
            for (int c = 0; c < m; ++c) col[c] += inst.d_vc(v, c);
        } else {
            for (int t = t_lo; t <= t_hi; ++t) lhs_plain[t] -= cheap_t[v][t];
            for (int c = 0; c < m; ++c) col[c] -= inst.d_vc(v, c);
        }
    };

    auto visit = [&](const std::vector<char>& in, int size) {
        for (int c = 0; c < m; ++c) sorted_cols[c] = {col[c], c};
        std::sort(sorted_cols.begin(), sorted_cols.end());
        if (strong) {
            for (int j = 0; j < k; ++j) sorted_committee[j] = {col[committee[j]], committee[j]};
            std::sort(sorted_committee.begin(), sorted_committee.end());
        }

        Rational rhs, lhs_strong;
        for (int t = 1; t <= t_hi; ++t) {
            rhs += sorted_cols[t - 1].first;
            if (strong) lhs_strong += sorted_committee[t - 1].first;
            if (t < t_lo) continue;

            auto consider = [&](std::vector<PrBest>& best, int ai, const Rational& lhs) {
                ExtRational value;
                if (rhs.is_zero()) {
                    if (lhs.is_zero()) return;  // satisfied at every gamma
                    value = ExtRational::infinity();
                } else {
                    value = lhs / rhs;
                }
                if (value > best[ai].measured) {
                    best[ai].measured = value;
                    Witness w;
                    w.coalition = members_of(in);
                    w.t = t;
                    for (int i = 0; i < t; ++i) w.targets.push_back(sorted_cols[i].second);
                    best[ai].witness = std::move(w);
                }
            };

            for (int ai = 0; ai < na; ++ai) {
                if (size < floor_of[static_cast<size_t>(t - t_lo) * na + ai]) continue;
                if (plain) consider(*plain, ai, lhs_plain[t]);
                if (strong) consider(*strong, ai, lhs_strong);
            }
        }
    };

    for_each_coalition(n, min_floor, opts, toggle, visit);
}

AuditReport pr_report(CheckKind check, const PrBest& best, const Rational& alpha, int t_lo,
                      int t_hi, const AuditOptions& opts, RuleBound rule) {
    AuditReport report;
    report.check = check;
    report.alpha = alpha;
    report.t_lo = t_lo;
    report.t_hi = t_hi;
    report.measured = best.measured;
    report.witness = best.witness;
    report.lower_bound_only = opts.sample_count > 0;
    attach_bound(report, pr_rule_bound(rule, alpha));
    return report;
}

}  // namespace

AuditReport pr_gamma(const Instance& inst, const std::vector<int>& committee,
                     const Rational& alpha, int t_lo, int t_hi, const AuditOptions& opts,
                     RuleBound rule) {
    std::vector<PrBest> plain;
    pr_engine(inst, committee, {alpha}, t_lo, t_hi, opts, &plain, nullptr);
    return pr_report(CheckKind::pr, plain[0], alpha, t_lo, t_hi, opts, rule);
}

AuditReport pr_strong_gamma(const Instance& inst, const std::vector<int>& committee,
                            const Rational& alpha, int t_lo, int t_hi,
                            const AuditOptions& opts, RuleBound rule) {
    std::vector<PrBest> strong;
    pr_engine(inst, committee, {alpha}, t_lo, t_hi, opts, nullptr, &strong);
    return pr_report(CheckKind::pr_strong, strong[0], alpha, t_lo, t_hi, opts, rule);
}

std::pair<std::vector<AuditReport>, std::vector<AuditReport>> pr_gamma_sweep(
    const Instance& inst, const std::vector<int>& committee, const std::vector<Rational>& alphas,
    int t_lo, int t_hi, const AuditOptions& opts, RuleBound rule) {
    std::vector<PrBest> plain, strong;
    pr_engine(inst, committee, alphas, t_lo, t_hi, opts, &plain, &strong);
    std::pair<std::vector<AuditReport>, std::vector<AuditReport>> out;
    for (size_t ai = 0; ai < alphas.size(); ++ai) {
        out.first.push_back(
            pr_report(CheckKind::pr, plain[ai], alphas[ai], t_lo, t_hi, opts, rule));
        out.second.push_back(
            pr_report(CheckKind::pr_strong, strong[ai], alphas[ai], t_lo, t_hi, opts, rule));
    }
    return out;
}

AuditReport cor_single_audit(const Instance& inst, const CoverageRecord& coverage,
                             const Rational& alpha, const AuditOptions& opts, RuleBound rule) {
    if (alpha < Rational(1))
        throw Error(Error::Kind::alpha_out_of_range, "audit needs alpha >= 1");
    if (coverage.n != inst.n || coverage.m != inst.m)
        throw Error(Error::Kind::bad_argument, "coverage does not match the instance");
    const int n = inst.n;
    const int m = inst.m;
    const auto committee = coverage.committee();
    check_committee(inst, committee);
    if (static_cast<int>(committee.size()) == m)
        throw Error(Error::Kind::bad_argument, "no candidate outside the committee");
    const int p = coverage.p;
    const int s0 = ceil_clamped(alpha * Rational(p), n);

    AuditReport report;
    report.check = CheckKind::cor_single;
    report.alpha = alpha;
    report.lower_bound_only = opts.sample_count > 0;

    std::vector<bool> in_committee(m, false);
    for (int c : committee) in_committee[c] = true;
    std::vector<int> seat_of(n, -1);
    for (size_t j = 0; j < coverage.seats.size(); ++j)
        for (int v : coverage.seats[j].voters) seat_of[v] = static_cast<int>(j);

    std::vector<Rational> col(m);
    std::vector<int> seat_hits(coverage.seats.size(), 0);

    auto toggle = [&](int v, bool add) {
        for (int c = 0; c < m; ++c)
            if (add)
                col[c] += inst.d_vc(v, c);
            else
                col[c] -= inst.d_vc(v, c);
        if (seat_of[v] >= 0) seat_hits[seat_of[v]] += add ? 1 : -1;
    };

    auto visit = [&](const std::vector<char>& in, int /*size*/) {
        int best_out = -1;
        for (int c = 0; c < m; ++c) {
            if (in_committee[c]) continue;
            if (best_out < 0 || col[c] < col[best_out]) best_out = c;
        }
        const Rational& rhs = col[best_out];

        int best_seat = -1;
        for (size_t j = 0; j < coverage.seats.size(); ++j) {
            if (seat_hits[j] == 0) continue;
            int cand = coverage.seats[j].candidate;
            if (best_seat < 0 || col[cand] < col[coverage.seats[best_seat].candidate])
                best_seat = static_cast<int>(j);
        }

        ExtRational value;
        if (best_seat < 0) {
            value = ExtRational::infinity();  // coalition with no covering representative
        } else {
            const Rational& lhs = col[coverage.seats[best_seat].candidate];
            if (rhs.is_zero()) {
                if (lhs.is_zero()) return;
                value = ExtRational::infinity();
            } else {
                value = lhs / rhs;
            }
        }
        if (value > report.measured) {
            report.measured = value;
            Witness w;
            w.coalition = members_of(in);
            w.targets = {best_out};
            report.witness = std::move(w);
        }
    };

    for_each_coalition(n, s0, opts, toggle, visit);
    attach_bound(report, pr_rule_bound(rule, alpha));
    return report;
}

AuditReport stability_rho(const Instance& inst, const CoverageRecord& coverage,
                          StabilityVariant variant, const AuditOptions& opts) {
    if (coverage.n != inst.n || coverage.m != inst.m)
        throw Error(Error::Kind::bad_argument, "coverage does not match the instance");
    const int n = inst.n;
    const int m = inst.m;
    const auto committee = coverage.committee();
    check_committee(inst, committee);
    if (static_cast<int>(committee.size()) == m)
        throw Error(Error::Kind::bad_argument, "no candidate outside the committee");

    AuditReport report;
    report.check = CheckKind::stability;
    report.lower_bound_only = opts.sample_count > 0;

    std::vector<bool> in_committee(m, false);
    for (int c : committee) in_committee[c] = true;

    // Best unselected candidate per voter (the denominator never depends on
    // the coalition).
    std::vector<Rational> best_outside(n);
    for (int v = 0; v < n; ++v) {
        const Rational* best = nullptr;
        for (int c = 0; c < m; ++c) {
            if (in_committee[c]) continue;
            const Rational& d = inst.d_vc(v, c);
            if (!best || d < *best) best = &d;
        }
        best_outside[v] = *best;
    }

    std::vector<int> seat_of(n, -1);
    for (size_t j = 0; j < coverage.seats.size(); ++j)
        for (int v : coverage.seats[j].voters) seat_of[v] = static_cast<int>(j);
    std::vector<int> seat_hits(coverage.seats.size(), 0);

    auto toggle = [&](int v, bool add) {
        if (seat_of[v] >= 0) seat_hits[seat_of[v]] += add ? 1 : -1;
    };

    // Per (coalition, target): the smallest member ratio
    // d(v, R[S]) / d(v, target); the measurement is the largest such value.
    // One value per target, exactly as in the fairness definition the
    // stability property strengthens (R replaced by R[S]).
    std::vector<bool> rep_inf(n);
    std::vector<Rational> rep_dist(n);
    auto visit = [&](const std::vector<char>& in, int /*size*/) {
        std::vector<int> members = members_of(in);
        for (int v : members) {
            const Rational* rep = nullptr;
            for (size_t j = 0; j < coverage.seats.size(); ++j) {
                if (seat_hits[j] == 0) continue;
                const Rational& d = inst.d_vc(v, coverage.seats[j].candidate);
                if (!rep || d < *rep) rep = &d;
            }
            rep_inf[v] = rep == nullptr;  // R[S] empty
            if (rep) rep_dist[v] = *rep;
        }

        for (int c = 0; c < m; ++c) {
            if (in_committee[c]) continue;
            bool value_inf = true;
            Rational num, den;  // running minimum as a fraction
            int arg_voter = -1;
            bool dominated = false;  // value can no longer exceed the maximum
            for (int v : members) {
                if (rep_inf[v]) continue;  // infinite ratio cannot lower the min
                const Rational& out = inst.d_vc(v, c);
                Rational vn, vd;
                if (out.is_zero()) {
                    if (!rep_dist[v].is_zero()) continue;
                    report.zero_convention = true;
                    vn = Rational(1);
                    vd = Rational(1);
                } else {
                    vn = rep_dist[v];
                    vd = out;
                }
                if (value_inf || vn * den < num * vd) {
                    value_inf = false;
                    num = vn;
                    den = vd;
                    arg_voter = v;
                    if (!report.measured.is_infinite() &&
                        !(report.measured.finite() * vd < vn)) {
                        dominated = true;
                        break;
                    }
                }
            }
            if (dominated) continue;
            ExtRational value = value_inf ? ExtRational::infinity() : ExtRational(num / den);
            if (value > report.measured) {
                report.measured = value;
                Witness w;
                w.coalition = members;
                w.targets = {c};
                w.voter = arg_voter;
                report.witness = std::move(w);
            }
        }
    };

    for_each_coalition(n, coverage.p, opts, toggle, visit);
    attach_bound(report, variant == StabilityVariant::ordinal ? stability_bound_ear()
                                                              : stability_bound_tgc());
    return report;
}

ExtRational distortion(const Instance& inst, int winner) {
    if (winner < 0 || winner >= inst.m)
        throw Error(Error::Kind::bad_argument, "winner index out of range");
    Rational chosen, best;
    bool have_best = false;
    for (int c = 0; c < inst.m; ++c) {
        Rational total;
        for (int v = 0; v < inst.n; ++v) total += inst.d_vc(v, c);
        if (c == winner) chosen = total;
        if (!have_best || total < best) {
            best = total;
            have_best = true;
        }
    }
    return audit_ratio(chosen, best);
}

AuditReport distortion_report(const Instance& inst, int winner, bool with_bound) {
    AuditReport report;
    report.check = CheckKind::distortion;
    report.measured = distortion(inst, winner);
    Witness w;
    w.targets = {winner};
    report.witness = std::move(w);
    if (with_bound) attach_bound(report, distortion_bound());
    return report;
}

AuditReport no_augmentation_monitor(const Instance& inst, const std::vector<int>& committee,
                                    int t_lo, int t_hi, const AuditOptions& opts) {
    std::vector<PrBest> plain;
    pr_engine(inst, committee, {Rational(1)}, t_lo, t_hi, opts, &plain, nullptr);
    AuditReport report =
        pr_report(CheckKind::no_augmentation, plain[0], Rational(1), t_lo, t_hi, opts,
                  RuleBound::none);
    report.check = CheckKind::no_augmentation;
    // Report measured relative to n/k; the hidden constant is monitored, not
    // asserted.
    if (report.measured.is_infinite())
        report.monitor_ratio = ExtRational::infinity();
    else
        report.monitor_ratio =
            report.measured.finite() * Rational(inst.k) / Rational(inst.n);
    return report;
}

}  // namespace proprep
