/// Exact audits of a committee against the representation, fairness, core,
/// and stability definitions. Every measured parameter is the exact extremum
/// of its constraint family (a rational, or +infinity as a first-class value
/// with a witness); a rule's guarantee constant can be attached for a
/// satisfied/violated verdict, compared with zero tolerance.
#pragma once

#include "proprep/bounds.hpp"
#include "proprep/coverage.hpp"
#include "proprep/instance.hpp"

#include <optional>
#include <vector>

namespace proprep {

enum class CheckKind {
    pf,            // proportional fairness
    core,          // approximate core (single deviation target)
    pr,            // proportional representation, per-voter best subcommittees
    pr_strong,     // proportional representation, one common subcommittee
    cor_single,    // coalition-representative single-target comparison
    stability,     // per-coalition stability of the coverage
    distortion,    // single-winner metric distortion
    no_augmentation,  // monitor of the unaugmented representation measure
};

const char* check_name(CheckKind c);

/// Which rule's guarantee constant to compare against.
enum class RuleBound { none, ear, tgc };

enum class StabilityVariant { ordinal, cardinal };

struct Witness {
    std::vector<int> coalition;  // voter indices, ascending
    int t = 1;
    std::vector<int> targets;    // deviation target candidate(s)
    int voter = -1;              // attaining voter, when the check has one
};

struct AuditReport {
    CheckKind check = CheckKind::pf;
    Rational alpha{1};
    int t_lo = 1, t_hi = 1;
    ExtRational measured{Rational(0)};
    std::optional<Witness> witness;
    std::optional<QuadBound> bound;
    std::optional<bool> satisfied;     // measured <= bound, exact
    bool zero_convention = false;      // the 0/0 -> 1 ratio rule fired
    bool lower_bound_only = false;     // sampling was used; true value may be larger
    std::optional<ExtRational> monitor_ratio;  // no_augmentation: measured/(n/k)
};

struct AuditOptions {
    int cap = 20;                        // exact enumeration allowed up to this n
    long long sample_count = 0;          // > 0: seeded sampling (lower bound only)
    unsigned long long sample_seed = 1;
};

/// Smallest gamma such that every coalition of at least quota size keeps, for
/// every deviation target, some member within factor gamma of its committee
/// cost. Polynomial: per target, the quota-th largest cost ratio.
AuditReport pf_gamma(const Instance& inst, const std::vector<int>& committee,
                     RuleBound rule = RuleBound::none);

/// Smallest beta such that no coalition of size >= ceil(alpha*p) improves its
/// summed cost by more than factor beta at a single target. Polynomial and
/// exact: per target, the maximum-ratio coalition is extremal (all positive
/// margins, padded to the size floor), found by an exact ratio search.
AuditReport core_beta(const Instance& inst, const std::vector<int>& committee,
                      const Rational& alpha, RuleBound rule = RuleBound::none);

/// Smallest gamma over t in [t_lo, t_hi] and coalitions of size
/// >= ceil(t*alpha*p): per-voter best-t committee cost against the best t
/// candidate columns overall. Enumerates coalitions (exact up to the cap).
AuditReport pr_gamma(const Instance& inst, const std::vector<int>& committee,
                     const Rational& alpha, int t_lo, int t_hi,
                     const AuditOptions& opts = {}, RuleBound rule = RuleBound::none);

/// Like pr_gamma but with one common size-t subcommittee for the whole
/// coalition on the left side; always >= pr_gamma.
AuditReport pr_strong_gamma(const Instance& inst, const std::vector<int>& committee,
                            const Rational& alpha, int t_lo, int t_hi,
                            const AuditOptions& opts = {}, RuleBound rule = RuleBound::none);

/// Both pr audits for several alphas in a single coalition enumeration.
/// Returns reports indexed [alpha]; strong ones second.
std::pair<std::vector<AuditReport>, std::vector<AuditReport>> pr_gamma_sweep(
    const Instance& inst, const std::vector<int>& committee,
    const std::vector<Rational>& alphas, int t_lo, int t_hi,
    const AuditOptions& opts = {}, RuleBound rule = RuleBound::none);

/// Smallest beta such that every coalition of size >= ceil(alpha*p) has some
/// covering representative whose column sum is within beta of the best
/// non-committee column. Coalitions no representative covered get +infinity.
AuditReport cor_single_audit(const Instance& inst, const CoverageRecord& coverage,
                             const Rational& alpha, const AuditOptions& opts = {},
                             RuleBound rule = RuleBound::none);

/// Smallest rho such that for every coalition of at least quota size and
/// every unselected deviation target, some member sits within factor rho of
/// its best covering representative relative to that target (the fairness
/// definition with R narrowed to R[S]). The variant picks which rule's
/// constant to compare against; the measurement itself is the same.
AuditReport stability_rho(const Instance& inst, const CoverageRecord& coverage,
                          StabilityVariant variant, const AuditOptions& opts = {});

/// d_sum(V, winner) / min_c d_sum(V, c); +infinity when only the denominator
/// vanishes, 1 when both vanish.
ExtRational distortion(const Instance& inst, int winner);

/// distortion() wrapped as a report, optionally against the single-winner
/// rule's guarantee.
AuditReport distortion_report(const Instance& inst, int winner, bool attach_bound);

/// pr_gamma at alpha = 1, reported together with measured/(n/k); no bound is
/// asserted.
AuditReport no_augmentation_monitor(const Instance& inst, const std::vector<int>& committee,
                                    int t_lo, int t_hi, const AuditOptions& opts = {});

}  // namespace proprep
