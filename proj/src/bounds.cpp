#include "proprep/bounds.hpp"

#include "proprep/instance.hpp"

namespace proprep {

bool QuadBound::admits(const ExtRational& x) const {
    if (x.is_infinite()) return false;
    Rational u = x.finite() - a;
    if (u.sign() <= 0) return true;
    if (b.sign() <= 0) return false;
    // u <= b*sqrt(root), u > 0, b > 0: square both sides.
    return u * u <= b * b * Rational(root);
}

std::string QuadBound::str() const {
    if (b.is_zero() || root == 0) return a.str();
    std::string s = a.str() + " + " + b.str() + "*sqrt(" + std::to_string(root) + ")";
    return s;
}

std::string QuadBound::decimal(int places) const {
    // sqrt(root) to `places`+4 digits via an integer square root, then exact
    // rational arithmetic; only the final rendering rounds.
    BigInt scale = 1;
    for (int i = 0; i < places + 4; ++i) scale *= 10;
    BigInt s = boost::multiprecision::sqrt(BigInt(root) * scale * scale);
    Rational val = a + b * Rational(s, scale);
    return val.decimal(places);
}

QuadBound stability_bound_ear() { return {Rational(5, 2), Rational(1, 2), 41}; }

QuadBound stability_bound_tgc() { return {Rational(1), Rational(1), 2}; }

namespace {

Rational augmentation_factor(const Rational& alpha) {
    if (alpha <= Rational(1))
        throw Error(Error::Kind::alpha_out_of_range,
                    "representation bound only defined for alpha > 1");
    return alpha / (alpha - Rational(1));
}

}  // namespace

QuadBound pr_bound_ear(const Rational& alpha) {
    Rational f = augmentation_factor(alpha);
    return {Rational(1) + Rational(7, 2) * f, Rational(1, 2) * f, 41};
}

QuadBound pr_bound_tgc(const Rational& alpha) {
    Rational f = augmentation_factor(alpha);
    return {Rational(1) + Rational(2) * f, f, 2};
}

QuadBound distortion_bound() { return {Rational(44), Rational(0), 0}; }

}  // namespace proprep
