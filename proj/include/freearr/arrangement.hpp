#pragma once

// Central hyperplane arrangements over Q. A hyperplane is stored as a
// primitive integer normal with positive first nonzero entry; an
// arrangement keeps its hyperplanes sorted and duplicate-free, so equal
// arrangements compare equal and serialization is canonical.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "freearr/poly.hpp"

namespace freearr {

struct Hyperplane {
    IntVec normal;

    Hyperplane() = default;
    explicit Hyperplane(IntVec raw) : normal(primitive_integer(raw)) {
        if (is_zero_vec(normal)) throw std::invalid_argument("Hyperplane: zero normal");
    }

    size_t dim() const { return normal.size(); }
    bool operator==(const Hyperplane& o) const { return normal == o.normal; }
    bool operator<(const Hyperplane& o) const { return normal < o.normal; }

    Poly form(const std::vector<std::string>& vars) const {
        return Poly::linear_form(vars, normal);
    }
};

// A linear subspace, canonically presented: `forms` cut it out, `span`
// parametrizes it, both produced by deterministic elimination.
struct Subspace {
    size_t ambient = 0;
    std::vector<IntVec> forms;
    std::vector<IntVec> span;

    size_t dim() const { return span.size(); }
    size_t codim() const { return ambient - span.size(); }

    static Subspace from_forms(const std::vector<IntVec>& fs, size_t ambient_dim) {
        Subspace s;
        s.ambient = ambient_dim;
        FlatCoords fc = flat_coordinates(fs, ambient_dim);
        s.span = fc.basis;
        s.forms = kernel_basis(Matrix::from_int_rows(pad_rows(s.span, ambient_dim)));
        return s;
    }

    static Subspace from_span(const std::vector<IntVec>& vecs, size_t ambient_dim) {
        Subspace s;
        s.ambient = ambient_dim;
        s.forms = kernel_basis(Matrix::from_int_rows(pad_rows(vecs, ambient_dim)));
        s.span = flat_coordinates(s.forms, ambient_dim).basis;
        return s;
    }

    static Subspace whole_space(size_t ambient_dim) { return from_forms({}, ambient_dim); }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && forms == o.forms;
    }

    // true when this subspace lies inside the given hyperplane
    bool contained_in(const Hyperplane& h) const {
        for (const IntVec& b : span) {
            Integer dot = 0;
            for (size_t i = 0; i < ambient; ++i) dot += h.normal[i] * b[i];
            if (dot != 0) return false;
        }
        return true;
    }

  private:
    static std::vector<IntVec> pad_rows(const std::vector<IntVec>& rows, size_t dim) {
        if (rows.empty()) return {IntVec(dim, 0)};  // zero row: full kernel
        return rows;
    }
};

class Arrangement {
  public:
    Arrangement() = default;
    explicit Arrangement(size_t dim, std::vector<Hyperplane> planes = {},
                         std::vector<std::string> vars = {})
        : m_dim(dim), m_vars(vars.empty() ? default_vars(dim) : std::move(vars)) {
        for (Hyperplane& h : planes) add_in_place(std::move(h));
    }

    size_t dim() const { return m_dim; }
    size_t size() const { return m_planes.size(); }
    const std::vector<Hyperplane>& planes() const { return m_planes; }
    const Hyperplane& plane(size_t i) const { return m_planes[i]; }
    const std::vector<std::string>& vars() const { return m_vars; }
    void set_vars(std::vector<std::string> v) {
        if (v.size() != m_dim) throw std::invalid_argument("set_vars: wrong count");
        m_vars = std::move(v);
    }

    bool operator==(const Arrangement& o) const {
        return m_dim == o.m_dim && m_planes == o.m_planes;
    }

    bool contains(const Hyperplane& h) const {
        return std::binary_search(m_planes.begin(), m_planes.end(), h);
    }

    // index in the canonical order; -1 if absent
    long index_of(const Hyperplane& h) const {
        auto it = std::lower_bound(m_planes.begin(), m_planes.end(), h);
        if (it == m_planes.end() || !(*it == h)) return -1;
        return it - m_planes.begin();
    }

    Arrangement with(const Hyperplane& h) const {
        Arrangement a = *this;
        a.add_in_place(h);
        return a;
    }

    Arrangement without(const Hyperplane& h) const {
        Arrangement a = *this;
        long i = index_of(h);
        if (i < 0) throw std::invalid_argument("Arrangement::without: hyperplane absent");
        a.m_planes.erase(a.m_planes.begin() + i);
        return a;
    }

    size_t rank() const {
        Matrix m(m_planes.size(), m_dim);
        for (size_t i = 0; i < m_planes.size(); ++i)
            for (size_t j = 0; j < m_dim; ++j) m(i, j) = Rational(m_planes[i].normal[j]);
        return m.rank();
    }

    bool essential() const { return rank() == m_dim; }

    // product of the defining forms, with optional multiplicities
    Poly defining_poly(const std::vector<int>& mult = {}) const {
        if (!mult.empty() && mult.size() != m_planes.size())
            throw std::invalid_argument("defining_poly: multiplicity length mismatch");
        Poly q = Poly::constant(m_vars, 1);
        for (size_t i = 0; i < m_planes.size(); ++i) {
            int m = mult.empty() ? 1 : mult[i];
            if (m < 0) throw std::invalid_argument("defining_poly: negative multiplicity");
            q = q * m_planes[i].form(m_vars).pow(m);
        }
        return q;
    }

  private:
    void add_in_place(Hyperplane h) {
        if (h.dim() != m_dim) throw std::invalid_argument("Arrangement: dimension mismatch");
        auto it = std::lower_bound(m_planes.begin(), m_planes.end(), h);
        if (it != m_planes.end() && *it == h) return;  // set semantics
        m_planes.insert(it, std::move(h));
    }

    size_t m_dim = 0;
    std::vector<Hyperplane> m_planes;
    std::vector<std::string> m_vars;
};

inline int multiplicity_total(const std::vector<int>& mult) {
    int t = 0;
    for (int m : mult) t += m;
    return t;
}

// sub-arrangement of hyperplanes containing the subspace
inline Arrangement localize(const Arrangement& a, const Subspace& x) {
    if (x.ambient != a.dim()) throw std::invalid_argument("localize: ambient mismatch");
    std::vector<Hyperplane> sel;
    for (const Hyperplane& h : a.planes())
        if (x.contained_in(h)) sel.push_back(h);
    return Arrangement(a.dim(), sel, a.vars());
}

struct Restriction {
    Arrangement arr;            // the restricted arrangement in flat coordinates
    std::vector<int> mult;      // aligned with arr.planes(): number of preimages
    Subspace flat;              // the subspace restricted to, canonical presentation
};

// Restriction of the hyperplanes not containing x onto x, with natural
// multiplicities (how many hyperplanes of a cut out each trace).
inline Restriction restrict(const Arrangement& a, const Subspace& x) {
    if (x.ambient != a.dim()) throw std::invalid_argument("restrict: ambient mismatch");
    size_t k = x.dim();
    std::vector<std::pair<Hyperplane, int>> traces;
    for (const Hyperplane& h : a.planes()) {
        if (x.contained_in(h)) continue;
        RatVec w(k);
        for (size_t c = 0; c < k; ++c) {
            Integer dot = 0;
            for (size_t i = 0; i < x.ambient; ++i) dot += h.normal[i] * x.span[c][i];
            w[c] = Rational(dot);
        }
        Hyperplane t{IntVec(primitive_integer(w))};
        auto it = std::lower_bound(traces.begin(), traces.end(), t,
                                   [](const auto& p, const Hyperplane& v) { return p.first < v; });
        if (it != traces.end() && it->first == t) ++it->second;
        else traces.insert(it, {t, 1});
    }
    Restriction r;
    std::vector<Hyperplane> hs;
    for (auto& [h, m] : traces) hs.push_back(h);
    r.arr = Arrangement(k, hs, flat_vars(k));
    r.mult.resize(r.arr.size());
    for (auto& [h, m] : traces) r.mult[r.arr.index_of(h)] = m;
    r.flat = x;
    return r;
}

// Ziegler restriction onto a member hyperplane: traces of the others with
// multiplicities counting preimages.
inline Restriction ziegler_restriction(const Arrangement& a, const Hyperplane& h) {
    if (!a.contains(h)) throw std::invalid_argument("ziegler_restriction: hyperplane absent");
    return restrict(a.without(h), Subspace::from_forms({h.normal}, a.dim()));
}

// The reduced-to-unreduced cofactor of the restriction: product over the
// traces of alpha^(multiplicity-1), scaled to leading coefficient 1.
// For a = a' + h this is the degree |A'| - |A''| obstruction polynomial:
// every theta in D(A') has theta(alpha_h) in (alpha_h, B).
inline Poly b_polynomial(const Arrangement& a_prime, const Hyperplane& h) {
    if (a_prime.contains(h)) throw std::invalid_argument("b_polynomial: h already present");
    Restriction r = restrict(a_prime, Subspace::from_forms({h.normal}, a_prime.dim()));
    Poly b = Poly::constant(r.arr.vars(), 1);
    for (size_t i = 0; i < r.arr.size(); ++i)
        b = b * r.arr.plane(i).form(r.arr.vars()).pow(r.mult[i] - 1);
    Rational lc = b.leading_coeff();
    return b / lc;
}

struct ParseError : std::runtime_error {
    int line;
    ParseError(int ln, const std::string& what)
        : std::runtime_error("line " + std::to_string(ln) + ": " + what), line(ln) {}
};

// Text format: first line "dim N", then one hyperplane per line as N
// integers. '#' starts a comment. Writing is canonical, so
// write(parse(write(a))) == write(a) byte for byte.
inline Arrangement parse_arrangement(std::istream& in) {
    std::string line;
    int ln = 0;
    long dim = -1;
    std::vector<Hyperplane> planes;
    while (std::getline(in, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank
        if (dim < 0) {
            if (tok != "dim") throw ParseError(ln, "expected 'dim N' header");
            if (!(ls >> dim) || dim < 0) throw ParseError(ln, "bad dimension");
            std::string extra;
            if (ls >> extra) throw ParseError(ln, "trailing tokens after dimension");
            continue;
        }
        IntVec normal;
        normal.reserve(dim);
        do {
            try {
                normal.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                throw ParseError(ln, "non-integer entry '" + tok + "'");
            }
        } while (ls >> tok);
        if (normal.size() != static_cast<size_t>(dim))
            throw ParseError(ln, "expected " + std::to_string(dim) + " entries, got " +
                                     std::to_string(normal.size()));
        if (is_zero_vec(normal)) throw ParseError(ln, "zero normal vector");
        planes.emplace_back(normal);
    }
    if (dim < 0) throw ParseError(ln, "missing 'dim N' header");
    return Arrangement(static_cast<size_t>(dim), planes);
}

inline void write_arrangement(std::ostream& out, const Arrangement& a) {
    out << "dim " << a.dim() << "\n";
    for (const Hyperplane& h : a.planes()) {
        for (size_t j = 0; j < h.normal.size(); ++j) {
            if (j) out << " ";
            out << h.normal[j].get_str();
        }
        out << "\n";
    }
}

inline std::string write_arrangement(const Arrangement& a) {
    std::ostringstream os;
    write_arrangement(os, a);
    return os.str();
}

}  // namespace freearr
