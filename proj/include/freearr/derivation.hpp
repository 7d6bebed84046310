#pragma once

// Logarithmic derivation modules D(A,m). A derivation is a polynomial
// vector field sum_i p_i d/dx_i; membership asks theta(alpha_H) to lie in
// (alpha_H^{m(H)}) for every hyperplane. Degree-d slices are solved
// exactly as kernels of integer constraint matrices.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "freearr/arrangement.hpp"

namespace freearr {

struct Derivation {
    std::vector<Poly> coeffs;  // entry i multiplies d/dx_i

    Derivation() = default;
    explicit Derivation(std::vector<Poly> cs) : coeffs(std::move(cs)) {}

    static Derivation zero(const std::vector<std::string>& vars) {
        Derivation d;
        d.coeffs.assign(vars.size(), Poly(vars));
        return d;
    }

    size_t nvars() const { return coeffs.size(); }
    const std::vector<std::string>& vars() const {
        if (coeffs.empty()) throw std::logic_error("Derivation: empty coefficient list");
        return coeffs.front().vars();
    }

    bool is_zero() const {
        for (const Poly& p : coeffs)
            if (!p.is_zero()) return false;
        return true;
    }

    // common total degree of the nonzero coefficients; -1 when zero
    int degree() const {
        int d = -1;
        for (const Poly& p : coeffs)
            if (!p.is_zero() && p.degree() > d) d = p.degree();
        return d;
    }

    bool is_homogeneous() const {
        int d = degree();
        for (const Poly& p : coeffs)
            if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != d)) return false;
        return true;
    }

    Poly apply(const Poly& p) const {
        Poly r(p.vars());
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) r = r + coeffs[i] * p.derivative(i);
        return r;
    }

    Poly apply_linear(const IntVec& normal) const {
        Poly r(vars());
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (normal[i] != 0) r = r + coeffs[i] * Rational(normal[i]);
        return r;
    }

    Derivation operator+(const Derivation& o) const {
        Derivation r = *this;
        for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] + o.coeffs[i];
        return r;
    }

    Derivation operator-(const Derivation& o) const {
        Derivation r = *this;
        for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = r.coeffs[i] - o.coeffs[i];
        return r;
    }

    Derivation scaled(const Rational& c) const {
        Derivation r = *this;
        for (Poly& p : r.coeffs) p = p * c;
        return r;
    }

    Derivation times(const Poly& f) const {
        Derivation r = *this;
        for (Poly& p : r.coeffs) p = p * f;
        return r;
    }

    bool operator==(const Derivation& o) const { return coeffs == o.coeffs; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ", ";
            s += coeffs[i].str();
        }
        return s + ")";
    }
};

inline Derivation euler_derivation(const std::vector<std::string>& vars) {
    Derivation d;
    for (size_t i = 0; i < vars.size(); ++i) d.coeffs.push_back(Poly::variable(vars, i));
    return d;
}

inline std::vector<int> unit_multiplicities(const Arrangement& a) {
    return std::vector<int>(a.size(), 1);
}

// index of the first hyperplane whose membership condition fails
inline std::optional<size_t> membership_failure(const Derivation& theta, const Arrangement& a,
                                                const std::vector<int>& mult) {
    for (size_t i = 0; i < a.size(); ++i) {
        Poly v = theta.apply_linear(a.plane(i).normal);
        if (v.is_zero()) continue;
        if (!linear_power_remainder(v, a.plane(i).normal, mult[i]).divisible) return i;
    }
    return std::nullopt;
}

inline bool is_member(const Derivation& theta, const Arrangement& a,
                      const std::vector<int>& mult) {
    return !membership_failure(theta, a, mult).has_value();
}

inline bool is_member(const Derivation& theta, const Arrangement& a) {
    return is_member(theta, a, unit_multiplicities(a));
}

// Basis of the homogeneous degree-d slice of D(A,m), deterministic:
// unknowns ordered by (coordinate, monomial) and solved by reduced
// echelon elimination.
inline std::vector<Derivation> derivation_slice(const Arrangement& a,
                                                const std::vector<int>& mult, int d) {
    if (mult.size() != a.size()) throw std::invalid_argument("derivation_slice: mult length");
    if (d < 0) return {};
    size_t l = a.dim();
    std::vector<ExpVec> mons = monomials_of_degree(l, d);
    size_t M = mons.size();
    size_t ncols = l * M;

    // one constraint block per hyperplane, in adapted coordinates
    std::vector<RatVec> rows;
    std::vector<std::string> yvars(l);
    for (size_t i = 0; i < l; ++i) yvars[i] = "y" + std::to_string(i + 1);

    for (size_t hi = 0; hi < a.size(); ++hi) {
        const IntVec& normal = a.plane(hi).normal;
        int m = mult[hi];
        if (m <= 0) {
            if (m < 0) throw std::invalid_argument("derivation_slice: negative multiplicity");
            continue;
        }
        Matrix c = completion_matrix(normal);
        Matrix inv = inverse(c);
        std::vector<Poly> images(l);
        for (size_t i = 0; i < l; ++i) images[i] = Poly::linear_form(yvars, inv.row(i));
        // substituted monomials, cached by shared variable powers
        std::vector<std::vector<Poly>> pows(l);
        for (size_t i = 0; i < l; ++i) pows[i].push_back(Poly::constant(yvars, 1));
        std::vector<Poly> sub(M, Poly(yvars));
        for (size_t mi = 0; mi < M; ++mi) {
            Poly t = Poly::constant(yvars, 1);
            for (size_t i = 0; i < l; ++i) {
                int e = mons[mi][i];
                while (static_cast<int>(pows[i].size()) <= e)
                    pows[i].push_back(pows[i].back() * images[i]);
                if (e > 0) t = t * pows[i][e];
            }
            sub[mi] = t;
        }
        // row registry: exponent vectors of degree d with y1-exponent < m
        std::map<ExpVec, size_t, GradedLex> row_of;
        for (const ExpVec& nu : monomials_of_degree(l, d)) {
            if (nu[0] < m) {
                row_of.emplace(nu, rows.size());
                rows.emplace_back(ncols);
            }
        }
        for (size_t i = 0; i < l; ++i) {
            if (normal[i] == 0) continue;
            Rational ai{normal[i]};
            for (size_t mi = 0; mi < M; ++mi) {
                for (const auto& [nu, cf] : sub[mi].terms()) {
                    if (nu[0] >= m) continue;
                    rows[row_of.at(nu)][i * M + mi] += ai * cf;
                }
            }
        }
    }

    Matrix sys(rows.size(), ncols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t cidx = 0; cidx < ncols; ++cidx) sys(r, cidx) = rows[r][cidx];
    std::vector<IntVec> kernel = kernel_basis(sys);

    std::vector<Derivation> out;
    for (const IntVec& v : kernel) {
        Derivation th = Derivation::zero(a.vars());
        for (size_t i = 0; i < l; ++i)
            for (size_t mi = 0; mi < M; ++mi)
                if (v[i * M + mi] != 0)
                    th.coeffs[i].add_term(mons[mi], Rational(v[i * M + mi]));
        out.push_back(std::move(th));
    }
    return out;
}

inline std::vector<Derivation> derivation_slice(const Arrangement& a, int d) {
    return derivation_slice(a, unit_multiplicities(a), d);
}

// determinant of a square polynomial matrix by cofactor expansion
inline Poly poly_det(const std::vector<std::vector<Poly>>& m, const std::vector<std::string>& vars) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(vars, 1);
    if (n == 1) return m[0][0];
    Poly acc(vars);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * poly_det(minor, vars);
        acc = (j % 2) ? acc - term : acc + term;
    }
    return acc;
}

// exact division by prod alpha_i^{e_i}; throws if any step leaves a remainder
inline Poly divide_by_forms(Poly p, const std::vector<std::pair<IntVec, int>>& factors) {
    for (const auto& [normal, e] : factors)
        for (int k = 0; k < e; ++k) {
            LinearDivision d = divide_by_linear(p, normal);
            if (!d.remainder.is_zero())
                throw std::logic_error("divide_by_forms: inexact division");
            p = d.quotient;
        }
    return p;
}

enum class SaitoFailure {
    None,
    WrongCount,       // tuple size differs from the ambient dimension
    Membership,       // some candidate leaves D(A,m); witness = hyperplane index
    DegreeSum,        // degrees do not add up to |m|
    DeterminantZero,  // coefficient determinant vanishes
};

struct SaitoResult {
    bool ok = false;
    SaitoFailure failure = SaitoFailure::None;
    size_t witness_candidate = 0;  // candidate index for Membership failures
    size_t witness_plane = 0;      // hyperplane index for Membership failures
    Rational factor;               // det = factor * Q(A,m) on success
    Poly det;
};

// Saito's criterion with the divisibility clause asserted unconditionally:
// whenever all candidates are members and the determinant is nonzero it
// must be divisible by Q(A,m).
inline SaitoResult saito_check(const std::vector<Derivation>& cands, const Arrangement& a,
                               const std::vector<int>& mult) {
    SaitoResult res;
    size_t l = a.dim();
    if (cands.size() != l) {
        res.failure = SaitoFailure::WrongCount;
        return res;
    }
    for (size_t i = 0; i < cands.size(); ++i) {
        auto bad = membership_failure(cands[i], a, mult);
        if (bad) {
            res.failure = SaitoFailure::Membership;
            res.witness_candidate = i;
            res.witness_plane = *bad;
            return res;
        }
    }
    std::vector<std::vector<Poly>> m(l, std::vector<Poly>(l));
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) m[i][j] = cands[i].coeffs[j];
    res.det = poly_det(m, a.vars());
    if (!res.det.is_zero()) {
        std::vector<std::pair<IntVec, int>> q;
        for (size_t i = 0; i < a.size(); ++i) q.emplace_back(a.plane(i).normal, mult[i]);
        Poly cof = divide_by_forms(res.det, q);  // theorem guarantee; throws on bug
        int degree_sum = 0;
        for (const Derivation& th : cands) degree_sum += std::max(th.degree(), 0);
        if (degree_sum != multiplicity_total(mult)) {
            res.failure = SaitoFailure::DegreeSum;
            return res;
        }
        if (cof.degree() == 0) {
            res.ok = true;
            res.factor = cof.leading_coeff();
            return res;
        }
        // degree sum matched but quotient nonconstant: impossible for
        // homogeneous members, treated as a degree accounting failure
        res.failure = SaitoFailure::DegreeSum;
        return res;
    }
    res.failure = SaitoFailure::DeterminantZero;
    return res;
}

inline SaitoResult saito_check(const std::vector<Derivation>& cands, const Arrangement& a) {
    return saito_check(cands, a, unit_multiplicities(a));
}

// --- restriction of derivations to flats ---------------------------------

// Coordinate frame adapted to a subspace: x = span * u + (completion) * v.
struct FlatFrame {
    Subspace flat;
    Matrix change;   // columns: span basis then completion vectors
    Matrix inverse;  // rows 0..dim-1 are the dual forms of the u coordinates
};

inline FlatFrame flat_frame(const Subspace& x) {
    size_t n = x.ambient;
    FlatFrame fr;
    fr.flat = x;
    // complete with standard unit vectors in index order, skipping dependents
    Matrix work(x.dim(), n);
    for (size_t k = 0; k < x.dim(); ++k)
        for (size_t i = 0; i < n; ++i) work(k, i) = Rational(x.span[k][i]);
    size_t have = x.dim();
    Matrix full(n, n);
    for (size_t k = 0; k < x.dim(); ++k)
        for (size_t i = 0; i < n; ++i) full(i, k) = Rational(x.span[k][i]);
    for (size_t i = 0; i < n && have < n; ++i) {
        Matrix trial = work;
        RatVec unit(n);
        unit[i] = 1;
        trial.append_row(unit);
        if (trial.rank() == have + 1) {
            work = trial;
            for (size_t r = 0; r < n; ++r) full(r, have) = unit[r];
            ++have;
        }
    }
    fr.change = full;
    fr.inverse = freearr::inverse(full);
    return fr;
}

// theta restricted to the flat: sum_k theta(beta_k)|_x d/du_k where beta_k
// is the dual form of the k-th flat coordinate. Requires tangency.
inline Derivation restrict_to_flat(const Derivation& theta, const Subspace& x) {
    if (theta.nvars() != x.ambient)
        throw std::invalid_argument("restrict_to_flat: ambient mismatch");
    std::vector<std::string> uv = flat_vars(x.dim());
    // substitution x = span * u
    std::vector<Poly> onto(x.ambient);
    for (size_t i = 0; i < x.ambient; ++i) {
        RatVec row(x.dim());
        for (size_t k = 0; k < x.dim(); ++k) row[k] = Rational(x.span[k][i]);
        onto[i] = Poly::linear_form(uv, row);
    }
    for (const IntVec& f : x.forms) {
        Poly v = theta.apply_linear(f).substitute(onto);
        if (!v.is_zero())
            throw std::invalid_argument("restrict_to_flat: derivation not tangent to the flat");
    }
    FlatFrame fr = flat_frame(x);
    Derivation out = Derivation::zero(uv);
    for (size_t k = 0; k < x.dim(); ++k) {
        Poly beta(theta.vars());
        RatVec dual = fr.inverse.row(k);
        beta = Poly::linear_form(theta.vars(), dual);
        out.coeffs[k] = theta.apply(beta).substitute(onto);
    }
    return out;
}

// Restriction D(A) -> D(A^H) along a member hyperplane (the map that sends
// the Euler derivation to the Euler derivation of the restriction).
inline Derivation euler_restrict(const Derivation& theta, const Hyperplane& h,
                                 const Arrangement& a) {
    if (!a.contains(h)) throw std::invalid_argument("euler_restrict: hyperplane absent");
    if (!is_member(theta, a)) throw std::invalid_argument("euler_restrict: not in D(A)");
    Subspace x = Subspace::from_forms({h.normal}, a.dim());
    return restrict_to_flat(theta, x);
}

// Ziegler restriction D_H(A) -> D(A^H, m^H); input must annihilate alpha_H.
inline Derivation ziegler_restrict(const Derivation& theta, const Hyperplane& h,
                                   const Arrangement& a) {
    if (!a.contains(h)) throw std::invalid_argument("ziegler_restrict: hyperplane absent");
    if (!theta.apply_linear(h.normal).is_zero())
        throw std::invalid_argument("ziegler_restrict: theta(alpha_H) != 0");
    if (!is_member(theta, a)) throw std::invalid_argument("ziegler_restrict: not in D(A)");
    Subspace x = Subspace::from_forms({h.normal}, a.dim());
    Derivation out = restrict_to_flat(theta, x);
    Restriction rz = ziegler_restriction(a, h);
    for (size_t i = 0; i < rz.arr.size(); ++i) {
        Poly v = out.apply_linear(rz.arr.plane(i).normal);
        if (v.is_zero()) continue;
        if (!linear_power_remainder(v, rz.arr.plane(i).normal, rz.mult[i]).divisible)
            throw std::logic_error("ziegler_restrict: image escaped D(A^H, m^H)");
    }
    return out;
}

struct LiftResult {
    bool applicable = false;
    std::string reason;               // set when not applicable
    std::vector<Derivation> basis;    // basis of D(A' + h) on success
    Poly b;                           // the obstruction polynomial used
};

// Push a Saito basis of D(A') across the addition of h: members of degree
// below deg B pass through, others are corrected by multiples of the
// member realizing B, which gets multiplied by alpha_h.
inline LiftResult lift_basis_addition(const Arrangement& a_prime,
                                      const std::vector<Derivation>& basis,
                                      const Hyperplane& h) {
    if (a_prime.contains(h))
        throw std::invalid_argument("lift_basis_addition: h already present");
    SaitoResult pre = saito_check(basis, a_prime);
    if (!pre.ok) throw std::invalid_argument("lift_basis_addition: input is not a Saito basis");

    Subspace x = Subspace::from_forms({h.normal}, a_prime.dim());
    Restriction rest = restrict(a_prime, x);
    Poly braw = Poly::constant(rest.arr.vars(), 1);
    for (size_t i = 0; i < rest.arr.size(); ++i)
        braw = braw * rest.arr.plane(i).form(rest.arr.vars()).pow(rest.mult[i] - 1);
    Rational blc = braw.leading_coeff();
    Poly b = braw / blc;
    int d = b.degree();

    // restriction of theta(alpha_h) onto the hyperplane, in u coordinates
    std::vector<Poly> onto(a_prime.dim());
    std::vector<std::string> uv = rest.arr.vars();
    for (size_t i = 0; i < a_prime.dim(); ++i) {
        RatVec row(x.dim());
        for (size_t k = 0; k < x.dim(); ++k) row[k] = Rational(x.span[k][i]);
        onto[i] = Poly::linear_form(uv, row);
    }
    std::vector<Poly> r(basis.size(), Poly(uv));
    for (size_t i = 0; i < basis.size(); ++i)
        r[i] = basis[i].apply_linear(h.normal).substitute(onto);

    LiftResult out;
    out.b = b;
    long pivot = -1;
    Rational c;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].degree() != d || r[i].is_zero()) continue;
        auto s = scalar_multiple_of(r[i], b);
        if (s) {
            pivot = i;
            c = *s;
            break;
        }
    }
    if (pivot < 0) {
        out.reason = "no basis member of degree " + std::to_string(d) +
                     " realizes the obstruction polynomial";
        return out;
    }
    Derivation theta = basis[pivot].scaled(Rational(1) / c);

    // dual forms of the u coordinates, for lifting quotients back to x
    FlatFrame fr = flat_frame(x);
    std::vector<Poly> beta(x.dim());
    for (size_t k = 0; k < x.dim(); ++k)
        beta[k] = Poly::linear_form(a_prime.vars(), fr.inverse.row(k));

    std::vector<std::pair<IntVec, int>> bfactors;
    for (size_t i = 0; i < rest.arr.size(); ++i)
        if (rest.mult[i] > 1) bfactors.emplace_back(rest.arr.plane(i).normal, rest.mult[i] - 1);

    for (size_t i = 0; i < basis.size(); ++i) {
        if (static_cast<long>(i) == pivot) continue;
        if (r[i].is_zero() || basis[i].degree() < d) {
            out.basis.push_back(basis[i]);
            continue;
        }
        Poly g_u = divide_by_forms(r[i], bfactors) * blc;  // r[i] = g_u * b
        Poly g = g_u.substitute(beta);
        out.basis.push_back(basis[i] - theta.times(g));
    }
    out.basis.push_back(theta.times(h.form(a_prime.vars())));

    Arrangement a = a_prime.with(h);
    SaitoResult post = saito_check(out.basis, a);
    if (!post.ok) throw std::logic_error("lift_basis_addition: lifted tuple failed Saito");
    out.applicable = true;
    return out;
}

}  // namespace freearr
