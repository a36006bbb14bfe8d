#include "knotcalc/rational.hpp"

#include <cstdlib>

#include "knotcalc/errors.hpp"

namespace knotcalc {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational");
    std::size_t slash = text.find('/');
    try {
        std::size_t used = 0;
        long long num = std::stoll(text.substr(0, slash), &used);
        if (slash == std::string::npos) {
            if (used != text.size()) throw ParseError("trailing characters in rational", used);
            return Rational(num);
        }
        std::string den_text = text.substr(slash + 1);
        long long den = std::stoll(den_text, &used);
        if (used != den_text.size())
            throw ParseError("trailing characters in rational", slash + 1 + used);
        if (den == 0) throw ParseError("zero denominator", slash + 1);
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + text);
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range: " + text);
    }
}

}  // namespace knotcalc
