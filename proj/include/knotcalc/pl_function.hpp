#ifndef KNOTCALC_PL_FUNCTION_HPP
#define KNOTCALC_PL_FUNCTION_HPP

#include <string>
#include <utility>
#include <vector>

#include "knotcalc/rational.hpp"

namespace knotcalc {

/// Continuous piecewise-linear function on t in [0,2] with exact rational
/// breakpoints. Stored normalized: strictly increasing t, first t = 0,
/// last t = 2, no collinear interior breakpoints.
class PLFunction {
public:
    using Breakpoint = std::pair<Rational, Rational>;

    PLFunction();  // identically zero
    explicit PLFunction(std::vector<Breakpoint> breakpoints);

    const std::vector<Breakpoint>& breakpoints() const { return points_; }

    Rational evaluate(const Rational& t) const;
    bool is_zero() const;

    PLFunction operator+(const PLFunction& other) const;
    PLFunction operator-() const;
    PLFunction scaled(long long factor) const;
    /// f(2 - t); used for the t <-> 2-t symmetry checks.
    PLFunction reflected() const;

    Rational max_slope() const;
    /// Slope of the first segment (from t = 0).
    Rational initial_slope() const;

    bool operator==(const PLFunction& other) const = default;

    std::string to_string() const;

private:
    void normalize();

    std::vector<Breakpoint> points_;
};

}  // namespace knotcalc

#endif
