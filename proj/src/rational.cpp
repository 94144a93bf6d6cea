#include "proprep/rational.hpp"

#include <cctype>

namespace proprep {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

std::string Rational::decimal(int places) const {
    BigInt n = num_ < 0 ? BigInt(-num_) : num_;
    BigInt scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    // round half away from zero
    BigInt scaled = (n * scale * 2 + den_) / (den_ * 2);
    BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string f = frac.str();
    if (static_cast<int>(f.size()) < places) f.insert(0, places - f.size(), '0');
    std::string out = (num_ < 0 && scaled != 0) ? "-" : "";
    out += whole.str();
    if (places > 0) out += "." + f;
    return out;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    bool neg = false;
    if (text.front() == '+' || text.front() == '-') {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return std::nullopt;

    auto slash = text.find('/');
    auto dot = text.find('.');
    if (slash != std::string_view::npos && dot != std::string_view::npos) return std::nullopt;

    BigInt num, den = 1;
    if (slash != std::string_view::npos) {
        auto ns = text.substr(0, slash);
        auto ds = text.substr(slash + 1);
        if (!all_digits(ns) || !all_digits(ds)) return std::nullopt;
        num = BigInt(std::string(ns));
        den = BigInt(std::string(ds));
        if (den == 0) return std::nullopt;
    } else if (dot != std::string_view::npos) {
        auto ws = text.substr(0, dot);
        auto fs = text.substr(dot + 1);
        if (ws.empty() && fs.empty()) return std::nullopt;
        if (!ws.empty() && !all_digits(ws)) return std::nullopt;
        if (!fs.empty() && !all_digits(fs)) return std::nullopt;
        num = ws.empty() ? BigInt(0) : BigInt(std::string(ws));
        for (char c : fs) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
    } else {
        if (!all_digits(text)) return std::nullopt;
        num = BigInt(std::string(text));
    }
    if (neg) num = -num;
    return Rational(std::move(num), std::move(den));
}

BigInt ceil_int(const Rational& r) {
    BigInt q = r.num() / r.den();
    if (r.num() > 0 && r.num() % r.den() != 0) ++q;
    return q;
}

BigInt floor_int(const Rational& r) {
    BigInt q = r.num() / r.den();
    if (r.num() < 0 && r.num() % r.den() != 0) --q;
    return q;
}

ExtRational audit_ratio(const Rational& num, const Rational& den, bool* zero_convention) {
    if (den.is_zero()) {
        if (num.is_zero()) {
            if (zero_convention) *zero_convention = true;
            return Rational(1);
        }
        return ExtRational::infinity();
    }
    return num / den;
}

}  // namespace proprep
