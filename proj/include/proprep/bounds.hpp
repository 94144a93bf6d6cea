/// Closed-form guarantee constants for the two selection rules, kept as
/// exact quadratic surds a + b*sqrt(root) so measured rationals can be
/// compared against them with zero tolerance.
#pragma once

#include "proprep/error.hpp"
#include "proprep/rational.hpp"

#include <string>

namespace proprep {

struct QuadBound {
    Rational a;
    Rational b;      // >= 0
    long long root;  // >= 0; value = a + b * sqrt(root)

    /// Exact: x <= a + b*sqrt(root)?
    bool admits(const ExtRational& x) const;

    /// "(5+sqrt(41))/2"-style exact rendering.
    std::string str() const;
    std::string decimal(int places = 6) const;
};

/// Stability / proportional-fairness constant of the ordinal rule,
/// (5+sqrt(41))/2 ~ 5.7016.
QuadBound stability_bound_ear();

/// Stability / proportional-fairness constant of the cardinal rule,
/// 1+sqrt(2) ~ 2.4142.
QuadBound stability_bound_tgc();

/// Representation guarantee of the ordinal rule under augmentation alpha > 1:
/// 1 + ((7+sqrt(41))/2) * alpha/(alpha-1). Requires alpha > 1.
QuadBound pr_bound_ear(const Rational& alpha);

/// Representation guarantee of the cardinal rule under augmentation alpha > 1:
/// 1 + (2+sqrt(2)) * alpha/(alpha-1). Requires alpha > 1.
QuadBound pr_bound_tgc(const Rational& alpha);

/// Metric-distortion guarantee of the two-round single-winner rule.
QuadBound distortion_bound();

}  // namespace proprep
