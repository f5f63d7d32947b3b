#include "ngk/bounds.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace ngk {

std::int64_t lemma1Bound(int g, int k, std::int64_t priorLower) {
    if (g < 4) throw std::invalid_argument("lemma1Bound needs girth >= 4");
    if (k < 2) throw std::invalid_argument("lemma1Bound needs k >= 2");
    if (priorLower < 1) throw std::invalid_argument("prior lower bound must be positive");
    const std::int64_t byBrooks = k;
    const std::int64_t byMaxDegree = (3 * (static_cast<std::int64_t>(k) - 2) + 1) / 2;
    return priorLower + std::max(byBrooks, byMaxDegree) + 1;
}

std::int64_t mooreBound(int minDegree, int girth) {
    if (minDegree < 3)
        throw std::invalid_argument("mooreBound needs minimum degree >= 3");
    if (girth < 3) throw std::invalid_argument("mooreBound needs girth >= 3");
    const std::int64_t d = minDegree;
    std::int64_t numerator;
    if (girth % 2 == 1) {
        std::int64_t pow = 1;
        for (int i = 0; i < (girth - 1) / 2; ++i) pow *= d - 1;
        numerator = d * pow - 2;
    } else {
        std::int64_t pow = 1;
        for (int i = 0; i < girth / 2; ++i) pow *= d - 1;
        numerator = 2 * pow - 2;
    }
    return (numerator + d - 3) / (d - 2);  // ceiling: orders are integers
}

std::int64_t lemma3Bound(int g, int k) {
    if (k < 4) throw std::invalid_argument("lemma3Bound needs k >= 4");
    const std::int64_t kk = k;
    switch (g) {
        case 4: return 3 * kk - 3;
        case 5: return kk * kk - kk + 1;
        case 6: return 2 * kk * kk - 4 * kk + 3;
        case 7: return kk * kk * kk - 3 * kk * kk + 3 * kk + 1;
        default: throw std::invalid_argument("lemma3Bound supports girth 4..7 only");
    }
}

const AnchorEntry* AnchorSet::find(int g, int k) const {
    auto it = entries.find({g, k});
    return it == entries.end() ? nullptr : &it->second;
}

AnchorSet AnchorSet::defaults() {
    AnchorSet a;
    a.add(4, 4, {11, 11, true, "Chvatal 1974 (Groetzsch graph is smallest)"});
    a.add(4, 5, {22, 22, true, "Jensen & Royle 1995"});
    a.add(5, 4, {21, 21, true, "Brinkmann 1997 (upper); Royle 2015 (exact)"});
    a.add(4, 6, {32, 40, false, "exhaustive generation (lower); 40-vertex witness, HoG 30633 (upper)"});
    a.add(5, 5, {29, 80, false, "exhaustive generation (lower); 80-vertex witness, HoG 30635 (upper)"});
    a.add(6, 4, {26, 66, false, "exhaustive generation (lower); 66-vertex witness, HoG 30637 (upper)"});
    a.add(7, 4, {30, 171, false, "exhaustive generation (lower); 171-vertex witness, HoG 30639 (upper)"});
    a.add(4, 7, {std::nullopt, 77, false, "77-vertex witness, HoG 30631"});
    a.add(4, 8, {std::nullopt, 155, false, "Mycielskian of the 77-vertex witness"});
    return a;
}

AnchorSet AnchorSet::fromJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open anchor file: " + path);
    nlohmann::json j;
    in >> j;
    AnchorSet a;
    for (const auto& item : j.at("anchors")) {
        AnchorEntry e;
        if (item.contains("lower")) e.lower = item["lower"].get<std::int64_t>();
        if (item.contains("upper")) e.upper = item["upper"].get<std::int64_t>();
        e.exact = item.value("exact", false);
        e.citation = item.value("citation", "");
        if (e.exact) {
            if (!e.lower && e.upper) e.lower = e.upper;
            if (!e.upper && e.lower) e.upper = e.lower;
        }
        a.add(item.at("g").get<int>(), item.at("k").get<int>(), e);
    }
    return a;
}

BoundsTable buildBoundsTable(const AnchorSet& anchors, int gMax, int kMax) {
    if (gMax < 4 || kMax < 4)
        throw std::invalid_argument("bounds table covers g >= 4, k >= 4");
    BoundsTable t;
    t.gMin = 4;
    t.gMax = gMax;
    t.kMin = 4;
    t.kMax = kMax;
    for (int g = 4; g <= gMax; ++g) {
        for (int k = 4; k <= kMax; ++k) {
            BoundsCell cell;
            const AnchorEntry* anchor = anchors.find(g, k);
            std::int64_t best = 0;
            std::string why = "trivial";
            auto consider = [&](std::optional<std::int64_t> v, const std::string& label) {
                if (v && *v > best) {
                    best = *v;
                    why = label;
                }
            };
            if (g >= 4 && g <= 7) consider(lemma3Bound(g, k), "degree-counting formula");
            if (k >= 4) consider(mooreBound(k - 1, g), "Moore bound, min degree k-1");
            if (k > 4) {
                auto below = t.cells.find({g, k - 1});
                if (below != t.cells.end())
                    consider(lemma1Bound(g, k, below->second.lower),
                             "recurrence on n_g(k-1)");
            }
            if (anchor && anchor->lower)
                consider(anchor->lower, "anchor: " + anchor->citation);
            cell.lower = best;
            cell.lowerProvenance = why;
            if (anchor && anchor->upper) {
                cell.upper = anchor->upper;
                cell.upperProvenance = "anchor: " + anchor->citation;
                cell.exact = anchor->exact && cell.lower == *anchor->upper;
            }
            t.cells[{g, k}] = std::move(cell);
        }
    }
    return t;
}

std::string renderBoundsTable(const BoundsTable& t) {
    std::ostringstream out;
    out << "n_g(k) lower/upper bounds (exact values marked =)\n";
    out << "k\\g ";
    for (int g = t.gMin; g <= t.gMax; ++g) {
        std::ostringstream h;
        h << g;
        out << ' ' << h.str();
        for (std::size_t i = h.str().size(); i < 11; ++i) out << ' ';
    }
    out << '\n';
    for (int k = t.kMin; k <= t.kMax; ++k) {
        out << k << "   ";
        for (int g = t.gMin; g <= t.gMax; ++g) {
            const BoundsCell& c = t.at(g, k);
            std::ostringstream cellText;
            if (c.exact)
                cellText << '=' << c.lower;
            else {
                cellText << c.lower << "..";
                if (c.upper)
                    cellText << *c.upper;
                else
                    cellText << '?';
            }
            out << ' ' << cellText.str();
            for (std::size_t i = cellText.str().size(); i < 11; ++i) out << ' ';
        }
        out << '\n';
    }
    return out.str();
}

std::string renderBoundsRecords(const BoundsTable& t) {
    std::ostringstream out;
    for (int g = t.gMin; g <= t.gMax; ++g)
        for (int k = t.kMin; k <= t.kMax; ++k) {
            const BoundsCell& c = t.at(g, k);
            out << "g=" << g << " k=" << k << " lower=" << c.lower;
            if (c.upper) out << " upper=" << *c.upper;
            if (c.exact) out << " exact=1";
            out << " lower_from=\"" << c.lowerProvenance << '"';
            if (!c.upperProvenance.empty()) out << " upper_from=\"" << c.upperProvenance << '"';
            out << '\n';
        }
    return out.str();
}

}  // namespace ngk
