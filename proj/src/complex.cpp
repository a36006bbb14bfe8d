#include "knotcalc/complex.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "knotcalc/errors.hpp"

namespace knotcalc {

using nlohmann::json;

std::string alpha_name(std::size_t k) {
    std::string name;
    ++k;  // 1-based so that 0 -> "a", 26 -> "aa"
    while (k > 0) {
        --k;
        name.insert(name.begin(), static_cast<char>('a' + k % 26));
        k /= 26;
    }
    return name;
}

BifilteredComplex::BifilteredComplex(std::vector<Generator> generators,
                                     std::vector<Arrow> arrows)
    : gens_(std::move(generators)) {
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!index_.emplace(gens_[i].name, static_cast<int>(i)).second)
            throw ArgumentError("duplicate generator name: " + gens_[i].name);
    }
    for (const Arrow& a : arrows) {
        int from = index_of(a.from);
        int to = index_of(a.to);
        if (!arrows_.emplace(std::make_pair(from, to), a.upower).second)
            throw ArgumentError("duplicate arrow: " + a.from + " -> " + a.to);
    }
}

std::vector<Arrow> BifilteredComplex::arrows() const {
    std::vector<Arrow> out;
    out.reserve(arrows_.size());
    for (const auto& [key, power] : arrows_)
        out.push_back(Arrow{gens_[key.first].name, gens_[key.second].name, power});
    return out;
}

bool BifilteredComplex::has_generator(const std::string& name) const {
    return index_.count(name) != 0;
}

int BifilteredComplex::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw ArgumentError("unknown generator: " + name);
    return it->second;
}

const Generator& BifilteredComplex::gen(const std::string& name) const {
    return gens_[index_of(name)];
}

bool BifilteredComplex::has_arrow(const std::string& from, const std::string& to) const {
    return arrows_.count({index_of(from), index_of(to)}) != 0;
}

int BifilteredComplex::arrow_power(const std::string& from, const std::string& to) const {
    auto it = arrows_.find({index_of(from), index_of(to)});
    if (it == arrows_.end()) throw ArgumentError("no arrow " + from + " -> " + to);
    return it->second;
}

ArrowKind BifilteredComplex::classify(const Arrow& a) const {
    const Generator& src = gen(a.from);
    const Generator& tgt = gen(a.to);
    if (a.upower == 0) {
        if (tgt.alexander < src.alexander) return ArrowKind::Vertical;
        if (tgt.alexander == src.alexander) return ArrowKind::ZeroZero;
        return ArrowKind::Diagonal;
    }
    if (tgt.alexander - a.upower == src.alexander) return ArrowKind::Horizontal;
    return ArrowKind::Diagonal;
}

LatticeElement BifilteredComplex::lattice(const std::string& generator, int translate) const {
    const Generator& g = gen(generator);
    return LatticeElement{generator, translate, -translate, g.alexander - translate,
                          g.maslov - 2 * translate};
}

ValidationReport BifilteredComplex::validate() const {
    ValidationReport report;
    for (const auto& [key, power] : arrows_) {
        const Generator& src = gens_[key.first];
        const Generator& tgt = gens_[key.second];
        std::string name = src.name + " -> U^" + std::to_string(power) + " " + tgt.name;
        if (power < 0) report.problems.push_back("negative U-power on arrow " + name);
        if (tgt.maslov - 2 * power != src.maslov - 1)
            report.problems.push_back("grading law violated on arrow " + name);
        if (tgt.alexander - power > src.alexander)
            report.problems.push_back("filtration law violated on arrow " + name);
    }
    // d^2 = 0: the number of length-2 paths between any ordered pair with
    // any fixed total U-power must be even.
    std::map<std::tuple<int, int, int>, int> paths;
    for (const auto& [k1, n1] : arrows_) {
        auto it = arrows_.lower_bound({k1.second, 0});
        for (; it != arrows_.end() && it->first.first == k1.second; ++it)
            paths[{k1.first, it->first.second, n1 + it->second}] ^= 1;
    }
    for (const auto& [key, parity] : paths) {
        if (parity)
            report.problems.push_back("d^2 != 0: odd path count " +
                                      gens_[std::get<0>(key)].name + " => " +
                                      gens_[std::get<1>(key)].name + " at U^" +
                                      std::to_string(std::get<2>(key)));
    }
    return report;
}

bool BifilteredComplex::is_reduced() const {
    for (const auto& [key, power] : arrows_)
        if (power == 0 && gens_[key.first].alexander == gens_[key.second].alexander)
            return false;
    return true;
}

BifilteredComplex BifilteredComplex::staircase(const StaircaseExponents& exps) {
    const std::vector<int>& a = exps.alphas;
    if (a.empty() || a.size() % 2 == 0)
        throw ArgumentError("staircase exponent sequence must have odd length");
    for (std::size_t k = 1; k < a.size(); ++k)
        if (a[k - 1] <= a[k])
            throw ArgumentError("staircase exponents must be strictly decreasing");

    std::vector<Generator> gens(a.size());
    std::vector<Arrow> arrows;
    // M(x0) = 0; odd k: dx_k = U^{a_{k-1}-a_k} x_{k-1} + x_{k+1}; the rest
    // of the Maslov gradings are forced by the grading law.
    gens[0] = Generator{alpha_name(0), 0, a[0]};
    for (std::size_t k = 1; k < a.size(); k += 2) {
        int drop = a[k - 1] - a[k];
        gens[k] = Generator{alpha_name(k), gens[k - 1].maslov - 2 * drop + 1, a[k]};
        gens[k + 1] = Generator{alpha_name(k + 1), gens[k].maslov - 1, a[k + 1]};
        arrows.push_back(Arrow{gens[k].name, gens[k - 1].name, drop});
        arrows.push_back(Arrow{gens[k].name, gens[k + 1].name, 0});
    }
    return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex BifilteredComplex::tensor(const BifilteredComplex& c1,
                                            const BifilteredComplex& c2) {
    std::vector<Generator> gens;
    gens.reserve(c1.size() * c2.size());
    for (const Generator& g1 : c1.gens_)
        for (const Generator& g2 : c2.gens_)
            gens.push_back(Generator{g1.name + "|" + g2.name, g1.maslov + g2.maslov,
                                     g1.alexander + g2.alexander});

    std::vector<Arrow> arrows;
    for (const auto& [key, power] : c1.arrows_) {
        const std::string& from = c1.gens_[key.first].name;
        const std::string& to = c1.gens_[key.second].name;
        for (const Generator& g2 : c2.gens_)
            arrows.push_back(Arrow{from + "|" + g2.name, to + "|" + g2.name, power});
    }
    for (const auto& [key, power] : c2.arrows_) {
        const std::string& from = c2.gens_[key.first].name;
        const std::string& to = c2.gens_[key.second].name;
        for (const Generator& g1 : c1.gens_)
            arrows.push_back(Arrow{g1.name + "|" + from, g1.name + "|" + to, power});
    }
    return BifilteredComplex(std::move(gens), std::move(arrows));
}

BifilteredComplex BifilteredComplex::dual(const BifilteredComplex& c) {
    // Toggling the suffix (rather than always appending) makes the
    // operation an involution on the nose.
    auto dual_name = [](const std::string& name) {
        if (name.size() > 1 && name.back() == '*') return name.substr(0, name.size() - 1);
        return name + "*";
    };
    std::vector<Generator> gens;
    gens.reserve(c.size());
    for (const Generator& g : c.gens_)
        gens.push_back(Generator{dual_name(g.name), -g.maslov, -g.alexander});
    std::vector<Arrow> arrows;
    for (const auto& [key, power] : c.arrows_)
        arrows.push_back(Arrow{dual_name(c.gens_[key.second].name),
                               dual_name(c.gens_[key.first].name), power});
    return BifilteredComplex(std::move(gens), std::move(arrows));
}

std::string BifilteredComplex::serialize() const {
    json doc;
    doc["generators"] = json::array();
    for (const Generator& g : gens_)
        doc["generators"].push_back(
            {{"name", g.name}, {"maslov", g.maslov}, {"alexander", g.alexander}});
    doc["arrows"] = json::array();
    for (const Arrow& a : arrows())
        doc["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"upower", a.upower}});
    return doc.dump(2) + "\n";
}

BifilteredComplex BifilteredComplex::deserialize(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed complex document: ") + e.what(), e.byte);
    }
    try {
        if (!doc.is_object() || !doc.contains("generators") || !doc.contains("arrows"))
            throw ParseError("complex document must contain 'generators' and 'arrows'");
        std::vector<Generator> gens;
        for (const json& g : doc.at("generators")) {
            if (!g.at("maslov").is_number_integer() || !g.at("alexander").is_number_integer())
                throw ParseError("gradings must be exact integers");
            gens.push_back(Generator{g.at("name").get<std::string>(), g.at("maslov").get<int>(),
                                     g.at("alexander").get<int>()});
        }
        if (gens.empty()) throw ParseError("complex must be nonempty");
        std::vector<Arrow> arrows;
        for (const json& a : doc.at("arrows")) {
            if (!a.at("upower").is_number_integer())
                throw ParseError("upower must be an exact integer");
            arrows.push_back(Arrow{a.at("from").get<std::string>(), a.at("to").get<std::string>(),
                                   a.at("upower").get<int>()});
        }
        BifilteredComplex c(std::move(gens), std::move(arrows));
        ValidationReport report = c.validate();
        if (!report.ok()) {
            std::string msg = "complex document fails validation:";
            for (const std::string& p : report.problems) msg += "\n  " + p;
            throw ParseError(msg);
        }
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed complex document: ") + e.what());
    }
}

bool BifilteredComplex::operator==(const BifilteredComplex& other) const {
    return gens_ == other.gens_ && arrows_ == other.arrows_;
}

bool BifilteredComplex::isomorphic_by_order(const BifilteredComplex& other) const {
    if (gens_.size() != other.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].maslov != other.gens_[i].maslov ||
            gens_[i].alexander != other.gens_[i].alexander)
            return false;
    return arrows_ == other.arrows_;
}

}  // namespace knotcalc
