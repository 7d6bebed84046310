#pragma once

// Sparse multivariate polynomials over Q. Terms are kept in a graded
// lexicographic order so serialization and leading-term choices are
// canonical. Zero coefficients are never stored.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "freearr/matrix.hpp"
#include "freearr/rational.hpp"

namespace freearr {

using ExpVec = std::vector<int>;

// Graded order; ties broken lexicographically, earlier variables first.
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

inline std::vector<std::string> default_vars(size_t n) {
    std::vector<std::string> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = "x" + std::to_string(i + 1);
    return v;
}

inline std::vector<std::string> cone_vars(size_t rank) {
    std::vector<std::string> v = default_vars(rank);
    v.push_back("z");
    return v;
}

inline std::vector<std::string> flat_vars(size_t k) {
    std::vector<std::string> v(k);
    for (size_t i = 0; i < k; ++i) v[i] = "u" + std::to_string(i + 1);
    return v;
}

class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : m_vars(std::move(vars)) {}

    static Poly constant(const std::vector<std::string>& vars, const Rational& c) {
        Poly p(vars);
        if (c != 0) p.m_terms.emplace(ExpVec(vars.size(), 0), c);
        return p;
    }

    static Poly variable(const std::vector<std::string>& vars, size_t i) {
        if (i >= vars.size()) throw std::invalid_argument("Poly::variable: index out of range");
        Poly p(vars);
        ExpVec e(vars.size(), 0);
        e[i] = 1;
        p.m_terms.emplace(e, Rational(1));
        return p;
    }

    template <typename Coeffs>
    static Poly linear_form(const std::vector<std::string>& vars, const Coeffs& coeffs) {
        if (coeffs.size() != vars.size())
            throw std::invalid_argument("Poly::linear_form: length mismatch");
        Poly p(vars);
        for (size_t i = 0; i < vars.size(); ++i) {
            Rational c(coeffs[i]);
            if (c == 0) continue;
            ExpVec e(vars.size(), 0);
            e[i] = 1;
            p.m_terms.emplace(e, c);
        }
        return p;
    }

    static Poly monomial(const std::vector<std::string>& vars, const ExpVec& e,
                         const Rational& c = Rational(1)) {
        if (e.size() != vars.size()) throw std::invalid_argument("Poly::monomial: length mismatch");
        Poly p(vars);
        if (c != 0) p.m_terms.emplace(e, c);
        return p;
    }

    const std::vector<std::string>& vars() const { return m_vars; }
    size_t nvars() const { return m_vars.size(); }
    bool is_zero() const { return m_terms.empty(); }
    size_t term_count() const { return m_terms.size(); }
    const std::map<ExpVec, Rational, GradedLex>& terms() const { return m_terms; }

    // total degree; -1 for the zero polynomial
    int degree() const {
        if (m_terms.empty()) return -1;
        const ExpVec& e = m_terms.rbegin()->first;
        int d = 0;
        for (int x : e) d += x;
        return d;
    }

    bool is_homogeneous() const {
        if (m_terms.empty()) return true;
        int d = -1;
        for (const auto& [e, c] : m_terms) {
            int t = 0;
            for (int x : e) t += x;
            if (d < 0) d = t;
            else if (t != d) return false;
        }
        return true;
    }

    Rational coeff(const ExpVec& e) const {
        auto it = m_terms.find(e);
        return it == m_terms.end() ? Rational(0) : it->second;
    }

    const ExpVec& leading_exponent() const {
        if (m_terms.empty()) throw std::logic_error("leading_exponent of zero");
        return m_terms.rbegin()->first;
    }

    Rational leading_coeff() const {
        if (m_terms.empty()) return Rational(0);
        return m_terms.rbegin()->second;
    }

    void add_term(const ExpVec& e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = m_terms.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) m_terms.erase(it);
        }
    }

    Poly operator+(const Poly& o) const {
        check_vars(o);
        Poly r = *this;
        for (const auto& [e, c] : o.m_terms) r.add_term(e, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        check_vars(o);
        Poly r = *this;
        for (const auto& [e, c] : o.m_terms) r.add_term(e, -c);
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.m_terms) c = -c;
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_vars(o);
        Poly r(m_vars);
        for (const auto& [e1, c1] : m_terms)
            for (const auto& [e2, c2] : o.m_terms) {
                ExpVec e = e1;
                for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
                r.add_term(e, c1 * c2);
            }
        return r;
    }

    Poly operator*(const Rational& c) const {
        Poly r(m_vars);
        if (c == 0) return r;
        r.m_terms = m_terms;
        for (auto& [e, v] : r.m_terms) v *= c;
        return r;
    }

    Poly operator/(const Rational& c) const {
        if (c == 0) throw std::invalid_argument("Poly: division by zero scalar");
        return *this * (Rational(1) / c);
    }

    bool operator==(const Poly& o) const { return m_vars == o.m_vars && m_terms == o.m_terms; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
        Poly r = constant(m_vars, 1);
        Poly b = *this;
        while (k > 0) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    Poly derivative(size_t i) const {
        Poly r(m_vars);
        for (const auto& [e, c] : m_terms) {
            if (e[i] == 0) continue;
            ExpVec d = e;
            d[i] -= 1;
            r.add_term(d, c * Rational(e[i]));
        }
        return r;
    }

    // Substitute images[i] for variable i; images live in a common new ring.
    Poly substitute(const std::vector<Poly>& images) const {
        if (images.size() != m_vars.size())
            throw std::invalid_argument("substitute: wrong image count");
        std::vector<std::string> tvars =
            images.empty() ? std::vector<std::string>{} : images.front().vars();
        for (const Poly& im : images)
            if (im.vars() != tvars) throw std::invalid_argument("substitute: mixed image rings");
        // power cache per variable
        std::vector<std::vector<Poly>> pows(images.size());
        for (size_t i = 0; i < images.size(); ++i) pows[i].push_back(constant(tvars, 1));
        Poly out(tvars);
        for (const auto& [e, c] : m_terms) {
            Poly t = constant(tvars, c);
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                while (static_cast<int>(pows[i].size()) <= e[i])
                    pows[i].push_back(pows[i].back() * images[i]);
                t = t * pows[i][e[i]];
            }
            out = out + t;
        }
        return out;
    }

    std::string str() const {
        if (m_terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = m_terms.rbegin(); it != m_terms.rend(); ++it) {
            Rational c = it->second;
            if (first) {
                if (c < 0) { os << "-"; c = -c; }
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            bool any_var = false;
            for (int e : it->first)
                if (e > 0) any_var = true;
            if (c != 1 || !any_var) {
                os << to_string(c);
                if (any_var) os << "*";
            }
            bool started = false;
            for (size_t i = 0; i < it->first.size(); ++i) {
                int e = it->first[i];
                if (e == 0) continue;
                if (started) os << "*";
                os << m_vars[i];
                if (e > 1) os << "^" << e;
                started = true;
            }
        }
        return os.str();
    }

  private:
    void check_vars(const Poly& o) const {
        if (m_vars != o.m_vars) throw std::invalid_argument("Poly: mixed variable rings");
    }

    std::vector<std::string> m_vars;
    std::map<ExpVec, Rational, GradedLex> m_terms;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

// All exponent vectors of the given total degree, ascending graded lex.
inline std::vector<ExpVec> monomials_of_degree(size_t nvars, int d) {
    std::vector<ExpVec> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    ExpVec cur(nvars, 0);
    auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (i + 1 == nvars) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            cur[i] = e;
            self(self, i + 1, rem - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GradedLex{});
    return out;
}

// If p == c*q for a nonzero scalar c, return c.
inline std::optional<Rational> scalar_multiple_of(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return std::nullopt;
    Rational c = p.leading_coeff() / q.leading_coeff();
    if (p == q * c) return c;
    return std::nullopt;
}

// Invertible change of coordinates whose first new coordinate is the given
// linear form: rows are lambda followed by standard unit vectors in index
// order, skipping those dependent on the rows already chosen.
inline Matrix completion_matrix(const IntVec& lambda) {
    size_t n = lambda.size();
    if (is_zero_vec(lambda)) throw std::invalid_argument("completion_matrix: zero form");
    Matrix c;
    RatVec first(n);
    for (size_t j = 0; j < n; ++j) first[j] = Rational(lambda[j]);
    c.append_row(first);
    size_t have = 1;
    for (size_t i = 0; i < n && have < n; ++i) {
        Matrix trial = c;
        RatVec unit(n);
        unit[i] = 1;
        trial.append_row(unit);
        if (trial.rank() == have + 1) {
            c = trial;
            ++have;
        }
    }
    return c;
}

struct LinearPowerRemainder {
    bool divisible = false;
    Poly witness;  // the part below lambda^m in adapted coordinates; zero iff divisible
};

// Decide p in (lambda^m) by an invertible substitution sending lambda to the
// first coordinate; the witness collects every term of degree < m in that
// coordinate.
inline LinearPowerRemainder linear_power_remainder(const Poly& p, const IntVec& lambda, int m) {
    if (m < 0) throw std::invalid_argument("linear_power_remainder: negative power");
    if (lambda.size() != p.nvars())
        throw std::invalid_argument("linear_power_remainder: form length mismatch");
    if (is_zero_vec(lambda)) throw std::invalid_argument("linear_power_remainder: zero form");
    std::vector<std::string> yvars(p.nvars());
    for (size_t i = 0; i < yvars.size(); ++i) yvars[i] = "y" + std::to_string(i + 1);
    LinearPowerRemainder r;
    if (m == 0) {
        r.divisible = true;
        r.witness = Poly(yvars);
        return r;
    }
    Matrix c = completion_matrix(lambda);
    Matrix inv = inverse(c);
    std::vector<Poly> images(p.nvars());
    for (size_t i = 0; i < p.nvars(); ++i) images[i] = Poly::linear_form(yvars, inv.row(i));
    Poly q = p.substitute(images);
    Poly w(yvars);
    for (const auto& [e, coef] : q.terms())
        if (e[0] < m) w.add_term(e, coef);
    r.witness = w;
    r.divisible = w.is_zero();
    return r;
}

struct LinearDivision {
    Poly quotient;
    Poly remainder;
};

// p = lambda*quotient + remainder with remainder free of the adapted first
// coordinate; exact when remainder is zero.
inline LinearDivision divide_by_linear(const Poly& p, const IntVec& lambda) {
    if (lambda.size() != p.nvars())
        throw std::invalid_argument("divide_by_linear: form length mismatch");
    Matrix c = completion_matrix(lambda);
    Matrix inv = inverse(c);
    std::vector<std::string> yvars(p.nvars());
    for (size_t i = 0; i < yvars.size(); ++i) yvars[i] = "y" + std::to_string(i + 1);
    std::vector<Poly> fwd(p.nvars());
    for (size_t i = 0; i < p.nvars(); ++i) fwd[i] = Poly::linear_form(yvars, inv.row(i));
    Poly q = p.substitute(fwd);
    Poly qy(yvars), ry(yvars);
    for (const auto& [e, coef] : q.terms()) {
        if (e[0] == 0) {
            ry.add_term(e, coef);
        } else {
            ExpVec d = e;
            d[0] -= 1;
            qy.add_term(d, coef);
        }
    }
    std::vector<Poly> back(p.nvars());
    for (size_t i = 0; i < p.nvars(); ++i) back[i] = Poly::linear_form(p.vars(), c.row(i));
    LinearDivision out;
    out.quotient = qy.substitute(back);
    out.remainder = ry.substitute(back);
    return out;
}

}  // namespace freearr
