#pragma once

// Crystallographic root systems in simple-root coordinates, lower ideals of
// the root poset, and the coned Weyl / Shi / Catalan constructions. The
// staged certificate builder grows the Catalan cone out of the Shi cone one
// root height at a time, checking every stage.
//
// Roots are kept in simple-root coordinates throughout, and the reflection
// arrangement uses those coordinate vectors directly as normals. Any
// invertible linear substitution of a realization yields the same lattice
// and the same derivation theory, so nothing downstream can tell.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "freearr/oracle.hpp"
#include "freearr/theorems.hpp"

namespace freearr {

struct UnsupportedFamily : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootSystem {
    std::string label;  // "B3"
    char series = 'A';
    size_t rank = 0;
    std::vector<IntVec> positive;  // grouped by height, lex within a height
};

inline long root_height(const IntVec& r) {
    Integer s = 0;
    for (const Integer& c : r) s += c;
    return static_cast<long>(s.get_si());
}

namespace rootdetail {

// cartan[i][j] = 2 (a_i, a_j) / (a_j, a_j)
inline std::vector<std::vector<int>> cartan_matrix(char series, size_t l) {
    std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
    for (size_t i = 0; i < l; ++i) c[i][i] = 2;
    auto bond = [&](size_t i, size_t j) { c[i][j] = c[j][i] = -1; };
    switch (series) {
        case 'A':
            for (size_t i = 0; i + 1 < l; ++i) bond(i, i + 1);
            break;
        case 'B':  // last simple root short
            for (size_t i = 0; i + 1 < l; ++i) bond(i, i + 1);
            c[l - 2][l - 1] = -2;
            break;
        case 'C':  // last simple root long
            for (size_t i = 0; i + 1 < l; ++i) bond(i, i + 1);
            c[l - 1][l - 2] = -2;
            break;
        case 'D':  // fork at the tail
            for (size_t i = 0; i + 2 < l; ++i) bond(i, i + 1);
            bond(l - 3, l - 1);
            break;
        case 'G':
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        case 'F':
            bond(0, 1);
            bond(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
    }
    return c;
}

// close the simple roots under root strings, height by height
inline std::vector<IntVec> positive_roots(const std::vector<std::vector<int>>& cartan) {
    size_t l = cartan.size();
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> layer;
    for (size_t i = 0; i < l; ++i) {
        std::vector<int> e(l, 0);
        e[i] = 1;
        known.insert(e);
        layer.push_back(e);
    }
    std::vector<IntVec> out;
    auto emit = [&](std::vector<std::vector<int>>& lv) {
        std::sort(lv.begin(), lv.end());
        for (const auto& r : lv) out.push_back(IntVec(r.begin(), r.end()));
    };
    while (!layer.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& b : layer) {
            for (size_t j = 0; j < l; ++j) {
                int pair = 0;
                for (size_t i = 0; i < l; ++i) pair += b[i] * cartan[i][j];
                int p = 0;
                std::vector<int> t = b;
                while (t[j] > 0) {
                    --t[j];
                    if (!known.count(t)) break;
                    ++p;
                }
                if (p - pair < 1) continue;
                std::vector<int> up = b;
                ++up[j];
                if (known.insert(up).second) next.push_back(up);
            }
        }
        emit(layer);
        layer = std::move(next);
    }
    return out;
}

}  // namespace rootdetail

inline RootSystem build_root_system(char series, size_t rank) {
    bool ok = (series == 'A' && rank >= 1) || (series == 'B' && rank >= 2) ||
              (series == 'C' && rank >= 2) || (series == 'D' && rank >= 3) ||
              (series == 'G' && rank == 2) || (series == 'F' && rank == 4);
    if (!ok)
        throw UnsupportedFamily("unsupported root system " + std::string(1, series) +
                                std::to_string(rank));
    RootSystem rs;
    rs.series = series;
    rs.rank = rank;
    rs.label = std::string(1, series) + std::to_string(rank);
    rs.positive = rootdetail::positive_roots(rootdetail::cartan_matrix(series, rank));
    return rs;
}

inline RootSystem build_root_system(const std::string& label) {
    if (label.size() < 2) throw UnsupportedFamily("bad root system label '" + label + "'");
    char series = label[0];
    size_t rank = 0;
    for (size_t i = 1; i < label.size(); ++i) {
        if (label[i] < '0' || label[i] > '9')
            throw UnsupportedFamily("bad root system label '" + label + "'");
        rank = rank * 10 + static_cast<size_t>(label[i] - '0');
    }
    return build_root_system(series, rank);
}

inline long coxeter_number(const RootSystem& rs) {
    long m = 0;
    for (const IntVec& r : rs.positive) m = std::max(m, root_height(r));
    return m + 1;
}

// c[t-1] = number of roots of height t
inline std::vector<long> height_counts(const std::vector<IntVec>& roots) {
    std::vector<long> c;
    for (const IntVec& r : roots) {
        size_t t = static_cast<size_t>(root_height(r));
        if (c.size() < t) c.resize(t, 0);
        ++c[t - 1];
    }
    return c;
}

// --- lower ideals of the root poset ----------------------------------------

struct Ideal {
    std::vector<IntVec> roots;  // grouped by height, lex within a height
};

inline bool dominates(const IntVec& a, const IntVec& b) {  // b <= a componentwise
    for (size_t i = 0; i < a.size(); ++i)
        if (b[i] > a[i]) return false;
    return true;
}

inline bool is_ideal(const RootSystem& rs, const std::vector<IntVec>& roots) {
    std::set<IntVec> have(roots.begin(), roots.end());
    std::set<IntVec> all(rs.positive.begin(), rs.positive.end());
    for (const IntVec& r : roots)
        if (!all.count(r)) return false;
    for (const IntVec& r : roots)
        for (const IntVec& below : rs.positive)
            if (dominates(r, below) && !have.count(below)) return false;
    return true;
}

inline Ideal ideal_closure(const RootSystem& rs, const std::vector<IntVec>& gens) {
    std::set<IntVec> all(rs.positive.begin(), rs.positive.end());
    for (const IntVec& g : gens)
        if (!all.count(g)) throw std::invalid_argument("ideal_closure: not a positive root");
    Ideal out;
    for (const IntVec& r : rs.positive)  // keeps the canonical root order
        for (const IntVec& g : gens)
            if (dominates(g, r)) {
                out.roots.push_back(r);
                break;
            }
    return out;
}

// ideal of all roots of height <= s
inline Ideal height_ideal(const RootSystem& rs, long s) {
    Ideal out;
    for (const IntVec& r : rs.positive)
        if (root_height(r) <= s) out.roots.push_back(r);
    return out;
}

// Conjugate of the height distribution of the ideal, padded with zeros to
// the rank and sorted ascending. On the full positive system this gives the
// exponents of the reflection arrangement.
inline std::vector<int> dual_partition_exponents(const RootSystem& rs, const Ideal& ideal) {
    std::vector<long> c = height_counts(ideal.roots);
    std::vector<int> d;
    for (size_t k = 1; k <= rs.rank; ++k) {
        int v = 0;
        for (long ct : c)
            if (ct >= static_cast<long>(k)) ++v;
        d.push_back(v);
    }
    std::sort(d.begin(), d.end());
    return d;
}

// --- arrangement constructions ----------------------------------------------

inline Arrangement weyl_arrangement(const RootSystem& rs) {
    std::vector<Hyperplane> hs;
    for (const IntVec& r : rs.positive) hs.emplace_back(r);
    return Arrangement(rs.rank, hs);
}

// sub-reflection-arrangement {ker a | a in the ideal}
inline Arrangement ideal_subarrangement(const RootSystem& rs, const Ideal& ideal) {
    if (!is_ideal(rs, ideal.roots))
        throw std::invalid_argument("ideal_subarrangement: not a lower ideal");
    std::vector<Hyperplane> hs;
    for (const IntVec& r : ideal.roots) hs.emplace_back(r);
    return Arrangement(rs.rank, hs);
}

struct ConeArrangement {
    Arrangement arr;           // rank+1 variables, last one the cone variable
    std::string construction;  // "shi", "cat", or "shiplus"
    long k = 0;
};

// normal of {a = j z} in the cone coordinates
inline IntVec cone_normal(const IntVec& root, long j) {
    IntVec v = root;
    v.push_back(Integer(-j));
    return v;
}

namespace rootdetail {

inline ConeArrangement level_cone(const RootSystem& rs, long k, long low, long high,
                                  std::string construction) {
    if (k < 1) throw std::invalid_argument("level cones need k >= 1");
    std::vector<Hyperplane> hs;
    for (const IntVec& r : rs.positive)
        for (long j = low; j <= high; ++j) hs.emplace_back(cone_normal(r, j));
    IntVec zn(rs.rank + 1, 0);
    zn[rs.rank] = 1;
    hs.emplace_back(zn);
    ConeArrangement cone;
    cone.arr = Arrangement(rs.rank + 1, hs);
    cone.arr.set_vars(cone_vars(rs.rank));
    cone.construction = std::move(construction);
    cone.k = k;
    return cone;
}

}  // namespace rootdetail

// levels -k+1 .. k plus the plane at infinity
inline ConeArrangement shi_cone(const RootSystem& rs, long k) {
    return rootdetail::level_cone(rs, k, -k + 1, k, "shi");
}

// levels -k .. k plus the plane at infinity
inline ConeArrangement catalan_cone(const RootSystem& rs, long k) {
    return rootdetail::level_cone(rs, k, -k, k, "cat");
}

// Shi cone extended by the level -k planes of an ideal
inline ConeArrangement shi_ideal_cone(const RootSystem& rs, long k, const Ideal& ideal) {
    if (!is_ideal(rs, ideal.roots))
        throw std::invalid_argument("shi_ideal_cone: not a lower ideal");
    ConeArrangement cone = shi_cone(rs, k);
    for (const IntVec& r : ideal.roots) cone.arr = cone.arr.with(Hyperplane{cone_normal(r, -k)});
    cone.construction = "shiplus";
    return cone;
}

// Grow the Catalan cone from the Shi cone: stage s adjoins the level -k
// plane of every height-s root through one multiple-addition step. Stages
// are 1 .. h-1, so the final arrangement is the full Catalan cone. Seed
// exponents come from the derivation solver unless the caller supplies
// them. A failing stage throws; the construction is valid for every
// supported system, so a throw means a bug, not bad input.
inline Certificate catalan_certificate(const RootSystem& rs, long k,
                                       const std::optional<std::vector<int>>& seed_exponents =
                                           std::nullopt) {
    ConeArrangement shi = shi_cone(rs, k);
    Certificate cert;
    cert.seed.family = "shi:" + rs.label + ":k=" + std::to_string(k);
    cert.seed.dim = shi.arr.dim();
    for (const Hyperplane& h : shi.arr.planes()) cert.seed.hyperplanes.push_back(h.normal);
    cert.seed.verdict = "free";

    std::vector<int> exp;
    if (seed_exponents) {
        exp = *seed_exponents;
        if (exp.size() != shi.arr.dim() || !sorted_ascending(exp))
            throw std::invalid_argument("catalan_certificate: bad seed exponents");
    } else {
        FreenessReport fr = freeness_oracle(shi.arr);
        if (fr.verdict != Freeness::FreeWithExponents)
            throw std::runtime_error("catalan_certificate: seed oracle failed: " + fr.detail);
        exp = fr.exponents;
    }
    cert.seed.exponents = exp;

    Arrangement cur = shi.arr;
    long h = coxeter_number(rs);
    for (long s = 1; s <= h - 1; ++s) {
        std::vector<Hyperplane> fam;
        for (const IntVec& r : rs.positive)
            if (root_height(r) == s) fam.emplace_back(cone_normal(r, -k));
        if (fam.empty()) continue;
        CheckResult r = check_MAT2(cur, fam, exp);
        if (!r.ok())
            throw std::runtime_error("catalan_certificate: stage " + std::to_string(s) +
                                     ": " + r.message);
        cert.steps.push_back(r.step);
        cur = r.result;
        exp = r.exponents;
    }
    return cert;
}

// --- named families ----------------------------------------------------------
//
// weyl:A2
// shi:B2:k=1
// cat:A2:k=1
// shiplus:A2:k=1:ideal=a1,a1+a2          (roots as sums of simple roots,
//                                         with optional coefficients: 2a1+3a2)

namespace rootdetail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

inline IntVec parse_root_expr(const std::string& text, size_t rank) {
    IntVec v(rank, 0);
    for (const std::string& term : split(text, '+')) {
        size_t i = 0;
        long coeff = 1;
        if (i < term.size() && term[i] >= '0' && term[i] <= '9') {
            coeff = 0;
            while (i < term.size() && term[i] >= '0' && term[i] <= '9')
                coeff = coeff * 10 + (term[i++] - '0');
        }
        if (i >= term.size() || term[i] != 'a')
            throw std::invalid_argument("bad root term '" + term + "'");
        ++i;
        size_t idx = 0;
        if (i >= term.size()) throw std::invalid_argument("bad root term '" + term + "'");
        while (i < term.size() && term[i] >= '0' && term[i] <= '9')
            idx = idx * 10 + static_cast<size_t>(term[i++] - '0');
        if (i != term.size() || idx < 1 || idx > rank)
            throw std::invalid_argument("bad root term '" + term + "'");
        v[idx - 1] += coeff;
    }
    return v;
}

inline long parse_level(const std::string& part) {
    if (part.rfind("k=", 0) != 0) throw std::invalid_argument("expected k=<level>");
    long k = 0;
    size_t i = 2;
    if (i >= part.size()) throw std::invalid_argument("expected k=<level>");
    for (; i < part.size(); ++i) {
        if (part[i] < '0' || part[i] > '9') throw std::invalid_argument("expected k=<level>");
        k = k * 10 + (part[i] - '0');
    }
    return k;
}

}  // namespace rootdetail

// Build an arrangement from a family label. Throws UnsupportedFamily for
// types outside the supported set and invalid_argument for malformed labels.
inline Arrangement family_arrangement(const std::string& label) {
    std::vector<std::string> parts = rootdetail::split(label, ':');
    if (parts.size() < 2) throw std::invalid_argument("bad family label '" + label + "'");
    const std::string& kind = parts[0];
    RootSystem rs = build_root_system(parts[1]);
    if (kind == "weyl") {
        if (parts.size() != 2) throw std::invalid_argument("bad family label '" + label + "'");
        return weyl_arrangement(rs);
    }
    if (parts.size() < 3) throw std::invalid_argument("bad family label '" + label + "'");
    long k = rootdetail::parse_level(parts[2]);
    if (k < 1) throw std::invalid_argument("level k must be at least 1");
    if (kind == "shi") {
        if (parts.size() != 3) throw std::invalid_argument("bad family label '" + label + "'");
        return shi_cone(rs, k).arr;
    }
    if (kind == "cat") {
        if (parts.size() != 3) throw std::invalid_argument("bad family label '" + label + "'");
        return catalan_cone(rs, k).arr;
    }
    if (kind == "shiplus") {
        if (parts.size() != 4 || parts[3].rfind("ideal=", 0) != 0)
            throw std::invalid_argument("bad family label '" + label + "'");
        std::vector<IntVec> gens;
        std::string list = parts[3].substr(6);
        if (!list.empty())
            for (const std::string& expr : rootdetail::split(list, ','))
                gens.push_back(rootdetail::parse_root_expr(expr, rs.rank));
        return shi_ideal_cone(rs, k, ideal_closure(rs, gens)).arr;
    }
    throw std::invalid_argument("unknown family kind '" + kind + "'");
}

}  // namespace freearr
