#ifndef KNOTCALC_LAURENT_HPP
#define KNOTCALC_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

namespace knotcalc {

/// Finitely supported Laurent polynomial in one variable with integer
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly monomial(int exponent, long long coefficient);

    long long coeff(int exponent) const;
    bool is_zero() const { return coeffs_.empty(); }
    /// Largest exponent with a nonzero coefficient. Requires nonzero poly.
    int top_exponent() const;
    const std::map<int, long long>& coeffs() const { return coeffs_; }

    /// t^k -> t^(s*k) for every term.
    LaurentPoly substitute_power(int s) const;

    long long evaluate_at_one() const;
    /// coeff(k) == coeff(-k) for all k.
    bool is_symmetric() const;

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    bool operator==(const LaurentPoly& other) const = default;

    std::string to_string() const;

private:
    void set_coeff(int exponent, long long value);

    std::map<int, long long> coeffs_;
};

/// Symmetrized Alexander polynomial of the (p,q) torus knot:
/// t^{-(p-1)(q-1)/2} (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)),
/// computed by exact integer polynomial division.
/// Requires 2 <= p, q, gcd(p,q) = 1, p*q <= 10^4.
LaurentPoly torus_alexander(int p, int q);

/// Alexander polynomial of the (s,t)-cable with companion polynomial
/// deltaK: deltaK(x^s) * Delta_{T(s,t)}(x). s is the longitudinal winding.
/// Requires s >= 2, t >= 1, gcd(s,t) = 1, deltaK symmetric.
LaurentPoly cable_alexander(int s, int t, const LaurentPoly& deltaK);

/// Exponent data of an L-space-knot staircase: a strictly decreasing
/// integer sequence of odd length read off the alternating +1/-1
/// coefficients of the Alexander polynomial.
struct StaircaseExponents {
    std::vector<int> alphas;

    bool operator==(const StaircaseExponents&) const = default;
};

/// Gate certifying that delta has the alternating +1,-1,...,+1 coefficient
/// form (read from the top exponent down, odd term count). Throws
/// ArgumentError otherwise.
StaircaseExponents staircase_exponents(const LaurentPoly& delta);

}  // namespace knotcalc

#endif
