#include "knotcalc/laurent.hpp"

#include <numeric>
#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {

LaurentPoly LaurentPoly::monomial(int exponent, long long coefficient) {
    LaurentPoly p;
    p.set_coeff(exponent, coefficient);
    return p;
}

void LaurentPoly::set_coeff(int exponent, long long value) {
    if (value == 0)
        coeffs_.erase(exponent);
    else
        coeffs_[exponent] = value;
}

long long LaurentPoly::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::top_exponent() const {
    if (coeffs_.empty()) throw ArgumentError("top_exponent of the zero polynomial");
    return coeffs_.rbegin()->first;
}

LaurentPoly LaurentPoly::substitute_power(int s) const {
    LaurentPoly out;
    for (const auto& [e, c] : coeffs_) out.set_coeff(e * s, c);
    return out;
}

long long LaurentPoly::evaluate_at_one() const {
    long long sum = 0;
    for (const auto& [e, c] : coeffs_) sum += c;
    return sum;
}

bool LaurentPoly::is_symmetric() const {
    for (const auto& [e, c] : coeffs_)
        if (coeff(-e) != c) return false;
    return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.coeffs_) out.set_coeff(e, out.coeff(e) + c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.coeffs_) out.set_coeff(e, out.coeff(e) - c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : coeffs_)
        for (const auto& [e2, c2] : other.coeffs_)
            out.set_coeff(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        long long c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Dense polynomial in non-negative powers, index = exponent.
using Dense = std::vector<long long>;

Dense dense_mul(const Dense& a, const Dense& b) {
    Dense out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// t^n - 1
Dense dense_tn_minus_1(int n) {
    Dense d(n + 1, 0);
    d[0] = -1;
    d[n] = 1;
    return d;
}

// Exact division; any nonzero remainder is an internal error (the torus
// formula always divides evenly).
Dense dense_div_exact(Dense num, const Dense& den) {
    Dense quot(num.size() - den.size() + 1, 0);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        long long lead = num[k + den.size() - 1];
        if (lead % den.back() != 0) throw Error("internal: polynomial division not exact");
        long long q = lead / den.back();
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= q * den[j];
    }
    for (long long r : num)
        if (r != 0) throw Error("internal: polynomial division left a remainder");
    return quot;
}

}  // namespace

LaurentPoly torus_alexander(int p, int q) {
    if (p < 2 || q < 2) throw ArgumentError("torus_alexander requires p, q >= 2");
    if (std::gcd(p, q) != 1) throw ArgumentError("torus_alexander requires gcd(p,q) = 1");
    if (static_cast<long long>(p) * q > 10000)
        throw ArgumentError("torus_alexander requires p*q <= 10^4");

    Dense num = dense_mul(dense_tn_minus_1(p * q), dense_tn_minus_1(1));
    Dense den = dense_mul(dense_tn_minus_1(p), dense_tn_minus_1(q));
    Dense quot = dense_div_exact(std::move(num), den);

    int shift = (p - 1) * (q - 1) / 2;
    LaurentPoly out;
    for (std::size_t e = 0; e < quot.size(); ++e)
        if (quot[e] != 0) out = out + LaurentPoly::monomial(static_cast<int>(e) - shift, quot[e]);
    return out;
}

LaurentPoly cable_alexander(int s, int t, const LaurentPoly& deltaK) {
    if (s < 2) throw ArgumentError("cable_alexander requires s >= 2");
    if (t < 1) throw ArgumentError("cable_alexander requires t >= 1");
    if (std::gcd(s, t) != 1) throw ArgumentError("cable_alexander requires gcd(s,t) = 1");
    if (!deltaK.is_symmetric()) throw ArgumentError("cable companion polynomial must be symmetric");

    LaurentPoly pattern = (t == 1) ? LaurentPoly::one() : torus_alexander(s, t);
    return deltaK.substitute_power(s) * pattern;
}

StaircaseExponents staircase_exponents(const LaurentPoly& delta) {
    std::vector<int> exps;
    long long expected = 1;
    const auto& coeffs = delta.coeffs();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (it->second != expected)
            throw ArgumentError("not an admissible L-space staircase polynomial: coefficient of t^" +
                                std::to_string(it->first) + " is " + std::to_string(it->second) +
                                ", expected " + std::to_string(expected));
        exps.push_back(it->first);
        expected = -expected;
    }
    if (exps.empty() || exps.size() % 2 == 0)
        throw ArgumentError("not an admissible L-space staircase polynomial: even or zero term count");
    return StaircaseExponents{std::move(exps)};
}

}  // namespace knotcalc
