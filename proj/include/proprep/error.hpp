#pragma once

#include <stdexcept>
#include <string>

namespace proprep {

/// Library error with a machine-checkable kind.
class Error : public std::runtime_error {
public:
    enum class Kind {
        profile_shape_mismatch,
        metric_missing,
        alpha_out_of_range,
        enumeration_cap_exceeded,
        non_integral_k,
        k_too_large,
        bad_argument,
        parse,
        io,
    };

    Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

}  // namespace proprep
