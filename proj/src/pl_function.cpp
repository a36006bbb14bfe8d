#include "knotcalc/pl_function.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "knotcalc/errors.hpp"

namespace knotcalc {

namespace {

const Rational kZero(0);
const Rational kTwo(2);

}  // namespace

PLFunction::PLFunction() : points_{{kZero, kZero}, {kTwo, kZero}} {}

PLFunction::PLFunction(std::vector<Breakpoint> breakpoints) : points_(std::move(breakpoints)) {
    if (points_.size() < 2) throw ArgumentError("a PL function needs at least two breakpoints");
    if (points_.front().first != kZero || points_.back().first != kTwo)
        throw ArgumentError("PL breakpoints must start at t = 0 and end at t = 2");
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (!(points_[i - 1].first < points_[i].first))
            throw ArgumentError("PL breakpoints must have strictly increasing t");
    normalize();
}

void PLFunction::normalize() {
    std::vector<Breakpoint> pruned;
    for (const Breakpoint& p : points_) {
        while (pruned.size() >= 2) {
            const Breakpoint& a = pruned[pruned.size() - 2];
            const Breakpoint& b = pruned.back();
            // Drop b when a, b, p are collinear.
            if ((b.second - a.second) * (p.first - b.first) ==
                (p.second - b.second) * (b.first - a.first))
                pruned.pop_back();
            else
                break;
        }
        pruned.push_back(p);
    }
    points_ = std::move(pruned);
}

Rational PLFunction::evaluate(const Rational& t) const {
    if (t < kZero || t > kTwo) throw ArgumentError("PL functions live on t in [0,2]");
    auto it = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const Breakpoint& p, const Rational& x) { return p.first < x; });
    if (it->first == t) return it->second;
    const Breakpoint& right = *it;
    const Breakpoint& left = *(it - 1);
    return left.second +
           (right.second - left.second) * (t - left.first) / (right.first - left.first);
}

bool PLFunction::is_zero() const {
    return points_.size() == 2 && points_[0].second == kZero && points_[1].second == kZero;
}

PLFunction PLFunction::operator+(const PLFunction& other) const {
    std::set<Rational> ts;
    for (const Breakpoint& p : points_) ts.insert(p.first);
    for (const Breakpoint& p : other.points_) ts.insert(p.first);
    std::vector<Breakpoint> sum;
    for (const Rational& t : ts) sum.push_back({t, evaluate(t) + other.evaluate(t)});
    return PLFunction(std::move(sum));
}

PLFunction PLFunction::operator-() const {
    std::vector<Breakpoint> flipped = points_;
    for (Breakpoint& p : flipped) p.second = -p.second;
    return PLFunction(std::move(flipped));
}

PLFunction PLFunction::scaled(long long factor) const {
    std::vector<Breakpoint> scaled_points = points_;
    for (Breakpoint& p : scaled_points) p.second *= factor;
    return PLFunction(std::move(scaled_points));
}

PLFunction PLFunction::reflected() const {
    std::vector<Breakpoint> mirrored(points_.rbegin(), points_.rend());
    for (Breakpoint& p : mirrored) p.first = kTwo - p.first;
    return PLFunction(std::move(mirrored));
}

Rational PLFunction::max_slope() const {
    Rational best;
    bool first = true;
    for (std::size_t i = 1; i < points_.size(); ++i) {
        Rational slope = (points_[i].second - points_[i - 1].second) /
                         (points_[i].first - points_[i - 1].first);
        if (first || slope > best) best = slope;
        first = false;
    }
    return best;
}

Rational PLFunction::initial_slope() const {
    return (points_[1].second - points_[0].second) / (points_[1].first - points_[0].first);
}

std::string PLFunction::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (i) os << " ";
        os << "(" << knotcalc::to_string(points_[i].first) << ", "
           << knotcalc::to_string(points_[i].second) << ")";
    }
    return os.str();
}

}  // namespace knotcalc
