#include "knotcalc/knots.hpp"

#include <cctype>
#include <cstdlib>

#include "knotcalc/errors.hpp"
#include "knotcalc/reduce.hpp"

namespace knotcalc {

KnotExpr KnotExpr::unknot() { return KnotExpr{}; }

KnotExpr KnotExpr::torus(int p, int q) {
    KnotExpr e;
    e.kind = Kind::Torus;
    e.p = p;
    e.q = q;
    return e;
}

KnotExpr KnotExpr::cable(int s, int t, KnotExpr companion) {
    KnotExpr e;
    e.kind = Kind::Cable;
    e.p = s;
    e.q = t;
    e.children.push_back(std::move(companion));
    return e;
}

KnotExpr KnotExpr::mirror(KnotExpr inner) {
    if (inner.kind == Kind::Mirror) return std::move(inner.children[0]);
    KnotExpr e;
    e.kind = Kind::Mirror;
    e.children.push_back(std::move(inner));
    return e;
}

KnotExpr KnotExpr::sum(std::vector<KnotExpr> terms) {
    if (terms.size() == 1) return std::move(terms[0]);
    KnotExpr e;
    e.kind = Kind::Sum;
    e.children = std::move(terms);
    return e;
}

KnotExpr KnotExpr::times(long long n, KnotExpr inner) {
    KnotExpr e;
    e.kind = Kind::Multiple;
    e.multiple = n;
    e.children.push_back(std::move(inner));
    return e;
}

std::string KnotExpr::to_string() const {
    switch (kind) {
        case Kind::Unknot:
            return "U";
        case Kind::Torus:
            return "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case Kind::Cable:
            return "C(" + std::to_string(p) + "," + std::to_string(q) + ";" +
                   children[0].to_string() + ")";
        case Kind::Mirror: {
            std::string inner = children[0].to_string();
            if (children[0].kind == Kind::Sum) inner = "(" + inner + ")";
            return "-" + inner;
        }
        case Kind::Multiple: {
            std::string inner = children[0].to_string();
            if (children[0].kind == Kind::Sum || children[0].kind == Kind::Mirror)
                inner = "(" + inner + ")";
            return std::to_string(multiple) + "*" + inner;
        }
        case Kind::Sum: {
            std::string out;
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) out += " # ";
                std::string piece = children[i].to_string();
                if (children[i].kind == Kind::Sum) piece = "(" + piece + ")";
                out += piece;
            }
            return out;
        }
    }
    return "";
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    KnotExpr parse() {
        KnotExpr e = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    KnotExpr expr() {
        std::vector<KnotExpr> terms;
        terms.push_back(term());
        while (try_consume('#')) terms.push_back(term());
        return KnotExpr::sum(std::move(terms));
    }

    KnotExpr term() {
        if (try_consume('-')) return KnotExpr::mirror(factor());
        return factor();
    }

    KnotExpr factor() {
        skip_ws();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            long long n = integer();
            consume('*');
            return KnotExpr::times(n, factor());
        }
        return atom();
    }

    KnotExpr atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a knot atom");
        char c = text_[pos_];
        if (c == 'U') {
            ++pos_;
            return KnotExpr::unknot();
        }
        if (c == 'T') {
            ++pos_;
            consume('(');
            int p = small_int();
            consume(',');
            int q = small_int();
            consume(')');
            return KnotExpr::torus(p, q);
        }
        if (c == 'C') {
            ++pos_;
            consume('(');
            int s = small_int();
            consume(',');
            int t = small_int();
            consume(';');
            KnotExpr companion = expr();
            consume(')');
            return KnotExpr::cable(s, t, std::move(companion));
        }
        if (c == '(') {
            ++pos_;
            KnotExpr e = expr();
            consume(')');
            return e;
        }
        fail("expected 'U', 'T(', 'C(' or '('");
    }

    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected an integer");
        if (pos_ - start > 9) fail("integer too large");
        return std::strtoll(text_.substr(start, pos_ - start).c_str(), nullptr, 10);
    }

    int small_int() { return static_cast<int>(integer()); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void consume(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

/// Staircase gate with the offending atom named in the error.
StaircaseExponents gated_exponents(const LaurentPoly& delta, const KnotExpr& atom) {
    try {
        return staircase_exponents(delta);
    } catch (const ArgumentError& err) {
        throw ArgumentError(atom.to_string() + ": " + err.what());
    }
}

BifilteredComplex atom_staircase(const KnotExpr& atom) {
    return BifilteredComplex::staircase(gated_exponents(alexander(atom), atom));
}

/// Keeps only the summand carrying the global homology; the discarded
/// summands are verified invisible by homology_component, and the input
/// is returned untouched when that verification cannot be completed.
BifilteredComplex shrink(const BifilteredComplex& c) {
    try {
        return homology_component(c);
    } catch (const Error&) {
        return c;
    }
}

}  // namespace

KnotExpr parse_knot(const std::string& text) { return Parser(text).parse(); }

LaurentPoly alexander(const KnotExpr& expr) {
    switch (expr.kind) {
        case KnotExpr::Kind::Unknot:
            return LaurentPoly::one();
        case KnotExpr::Kind::Torus:
            return torus_alexander(expr.p, expr.q);
        case KnotExpr::Kind::Cable:
            return cable_alexander(expr.p, expr.q, alexander(expr.children[0]));
        case KnotExpr::Kind::Mirror:
            return alexander(expr.children[0]);  // symmetric, mirror-invariant
        case KnotExpr::Kind::Sum: {
            LaurentPoly product = LaurentPoly::one();
            for (const KnotExpr& child : expr.children) product = product * alexander(child);
            return product;
        }
        case KnotExpr::Kind::Multiple: {
            LaurentPoly base = alexander(expr.children[0]);
            LaurentPoly product = LaurentPoly::one();
            for (long long i = 0; i < std::llabs(expr.multiple); ++i) product = product * base;
            return product;
        }
    }
    throw ArgumentError("unsupported knot expression");
}

BifilteredComplex build(const KnotExpr& expr) {
    switch (expr.kind) {
        case KnotExpr::Kind::Unknot:
        case KnotExpr::Kind::Torus:
            return atom_staircase(expr);
        case KnotExpr::Kind::Cable:
            // The companion itself must pass the staircase gate.
            gated_exponents(alexander(expr.children[0]), expr.children[0]);
            return atom_staircase(expr);
        case KnotExpr::Kind::Mirror:
            return BifilteredComplex::dual(build(expr.children[0]));
        case KnotExpr::Kind::Sum: {
            BifilteredComplex acc = build(expr.children[0]);
            for (std::size_t i = 1; i < expr.children.size(); ++i)
                acc = BifilteredComplex::tensor(acc, build(expr.children[i]));
            return acc;
        }
        case KnotExpr::Kind::Multiple: {
            if (expr.multiple == 0) return atom_staircase(KnotExpr::unknot());
            KnotExpr copy = expr.children[0];
            if (expr.multiple < 0) copy = KnotExpr::mirror(std::move(copy));
            BifilteredComplex factor = build(copy);
            BifilteredComplex acc = factor;
            for (long long i = 1; i < std::llabs(expr.multiple); ++i)
                acc = BifilteredComplex::tensor(acc, factor);
            return acc;
        }
    }
    throw ArgumentError("unsupported knot expression");
}

BifilteredComplex build_reduced_model(const KnotExpr& expr) {
    switch (expr.kind) {
        case KnotExpr::Kind::Unknot:
        case KnotExpr::Kind::Torus:
        case KnotExpr::Kind::Cable:
            return build(expr);  // staircases are already reduced and small
        case KnotExpr::Kind::Mirror:
            return BifilteredComplex::dual(build_reduced_model(expr.children[0]));
        case KnotExpr::Kind::Sum: {
            BifilteredComplex acc = build_reduced_model(expr.children[0]);
            for (std::size_t i = 1; i < expr.children.size(); ++i)
                acc = shrink(
                    BifilteredComplex::tensor(acc, build_reduced_model(expr.children[i])));
            return acc;
        }
        case KnotExpr::Kind::Multiple: {
            if (expr.multiple == 0) return build(KnotExpr::unknot());
            KnotExpr copy = expr.children[0];
            if (expr.multiple < 0) copy = KnotExpr::mirror(std::move(copy));
            BifilteredComplex factor = build_reduced_model(copy);
            BifilteredComplex acc = factor;
            for (long long i = 1; i < std::llabs(expr.multiple); ++i)
                acc = shrink(BifilteredComplex::tensor(acc, factor));
            return acc;
        }
    }
    throw ArgumentError("unsupported knot expression");
}

PLFunction upsilon_knot(const KnotExpr& expr, int cap) {
    switch (expr.kind) {
        case KnotExpr::Kind::Unknot:
            return PLFunction();
        case KnotExpr::Kind::Torus:
        case KnotExpr::Kind::Cable:
            return upsilon(build(expr), cap);
        case KnotExpr::Kind::Mirror:
            return -upsilon_knot(expr.children[0], cap);
        case KnotExpr::Kind::Sum: {
            PLFunction total;
            for (const KnotExpr& child : expr.children)
                total = total + upsilon_knot(child, cap);
            return total;
        }
        case KnotExpr::Kind::Multiple:
            return upsilon_knot(expr.children[0], cap).scaled(expr.multiple);
    }
    throw ArgumentError("unsupported knot expression");
}

InvariantReport invariants_of(const KnotExpr& expr) {
    BifilteredComplex model = build_reduced_model(expr);
    InvariantReport report;
    report.tau = tau(model);
    report.epsilon = epsilon(model);
    try {
        report.a1 = a1(model);
    } catch (const NotStandardError&) {
        report.a1 = std::nullopt;
    }
    report.upsilon = upsilon_knot(expr);
    report.genus_bound_slope = max_slope(report.upsilon);
    return report;
}

}  // namespace knotcalc
