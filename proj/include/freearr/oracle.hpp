#pragma once

// Freeness decision for (multi)arrangements. Strategy: factor the
// characteristic polynomial over the integers when all multiplicities are
// one (free implies split, so a non-split polynomial settles the
// question), then harvest minimal generators of D(A,m) degree by degree
// and test candidate tuples with Saito's criterion.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "freearr/derivation.hpp"
#include "freearr/lattice.hpp"

namespace freearr {

// Integer roots of chi, listed ascending with one zero per unused ambient
// dimension; nullopt when chi does not split into integer linear factors.
// All nonzero roots of a split chi are positive, so trying positive
// divisors of the constant term is exhaustive.
inline std::optional<std::vector<int>> chi_integer_roots(const Arrangement& a) {
    CharPoly cp = char_poly(a);
    size_t l = a.dim();
    size_t rank = a.rank();
    std::vector<Integer> coeff(l + 1, 0);
    for (const auto& [e, c] : cp.chi.terms()) coeff[e[0]] = c.get_num();
    // drop the guaranteed power of t
    std::vector<Integer> p(coeff.begin() + (l - rank), coeff.end());
    std::vector<int> roots(l - rank, 0);
    size_t deg = rank;
    while (deg > 0) {
        Integer c0 = p[0];
        if (c0 == 0) return std::nullopt;  // cannot happen for a central arrangement
        bool found = false;
        Integer ac0 = abs(c0);
        Integer cap = Integer(static_cast<long>(a.size()));  // every root is at most |A|
        if (ac0 < cap) cap = ac0;
        for (Integer r = 1; r <= cap; ++r) {
            if (ac0 % r != 0) continue;
            // evaluate p at r by Horner
            Integer val = p[deg];
            for (size_t i = deg; i-- > 0;) val = val * r + p[i];
            if (val != 0) continue;
            // synthetic division by (t - r)
            std::vector<Integer> q(deg);
            Integer carry = p[deg];
            for (size_t i = deg; i-- > 0;) {
                q[i] = carry;
                carry = p[i] + carry * r;
            }
            p = std::move(q);
            roots.push_back(static_cast<int>(r.get_si()));
            --deg;
            found = true;
            break;
        }
        if (!found) return std::nullopt;
    }
    return roots;
}

enum class Freeness { FreeWithExponents, NotFreeByFactorization, Unknown };

struct FreenessReport {
    Freeness verdict = Freeness::Unknown;
    std::vector<int> exponents;      // ascending, on FreeWithExponents
    std::vector<Derivation> basis;   // Saito basis, on FreeWithExponents
    std::string detail;
};

namespace detail {

// incremental row reduction over the rationals
struct RowReducer {
    std::vector<RatVec> rows;
    std::vector<size_t> pivots;

    bool add(RatVec v) {
        for (size_t k = 0; k < rows.size(); ++k) {
            const Rational& c = v[pivots[k]];
            if (c != 0) {
                Rational f = c;
                for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[k][j];
            }
        }
        size_t piv = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                piv = j;
                break;
            }
        if (piv == v.size()) return false;
        Rational lead = v[piv];
        for (Rational& e : v) e /= lead;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }
};

inline RatVec vectorize(const Derivation& th, size_t l,
                        const std::map<ExpVec, size_t, GradedLex>& index, size_t M) {
    RatVec v(l * M);
    for (size_t i = 0; i < l; ++i)
        for (const auto& [e, c] : th.coeffs[i].terms()) v[i * M + index.at(e)] = c;
    return v;
}

}  // namespace detail

inline FreenessReport freeness_oracle(const Arrangement& a, std::vector<int> mult = {},
                                      int degree_bound = -1) {
    FreenessReport rep;
    size_t l = a.dim();
    if (mult.empty()) mult.assign(a.size(), 1);
    if (mult.size() != a.size()) throw std::invalid_argument("freeness_oracle: mult length");
    bool simple = std::all_of(mult.begin(), mult.end(), [](int m) { return m == 1; });
    int total = multiplicity_total(mult);

    std::optional<std::vector<int>> target;  // required exponent multiset
    if (simple) {
        target = chi_integer_roots(a);
        if (!target) {
            rep.verdict = Freeness::NotFreeByFactorization;
            rep.detail = "characteristic polynomial has no full integer factorization";
            return rep;
        }
    }
    int bound = degree_bound;
    if (bound < 0) bound = target ? (target->empty() ? 0 : target->back()) : total;

    if (l == 0) {
        SaitoResult s = saito_check({}, a, mult);
        if (s.ok) {
            rep.verdict = Freeness::FreeWithExponents;
            return rep;
        }
        rep.detail = "empty tuple rejected";
        return rep;
    }

    std::vector<Derivation> gens;
    std::vector<int> gen_deg;
    std::set<std::vector<size_t>> tried;

    // pick l generators whose degrees hit the target multiset (or just the
    // right total) and run Saito on them
    auto attempt = [&]() -> bool {
        if (gens.size() < l) return false;
        std::vector<size_t> pick;
        auto rec = [&](auto&& self, size_t from, int remaining) -> bool {
            size_t need = l - pick.size();
            if (need == 0) {
                if (remaining != 0) return false;
                if (target) {
                    for (size_t k = 0; k < l; ++k)
                        if (gen_deg[pick[k]] != (*target)[k]) return false;
                }
                if (tried.count(pick)) return false;
                tried.insert(pick);
                std::vector<Derivation> tuple;
                for (size_t idx : pick) tuple.push_back(gens[idx]);
                if (saito_check(tuple, a, mult).ok) {
                    rep.verdict = Freeness::FreeWithExponents;
                    for (size_t idx : pick) rep.exponents.push_back(gen_deg[idx]);
                    rep.basis = std::move(tuple);
                    return true;
                }
                return false;
            }
            for (size_t i = from; i + need <= gens.size(); ++i) {
                if (gen_deg[i] > remaining) break;  // degrees ascend with index
                if (target && gen_deg[i] != (*target)[pick.size()]) continue;
                pick.push_back(i);
                if (self(self, i + 1, remaining - gen_deg[i])) return true;
                pick.pop_back();
            }
            return false;
        };
        return rec(rec, 0, total);
    };

    for (int d = 0; d <= bound; ++d) {
        std::vector<Derivation> slice = derivation_slice(a, mult, d);
        if (slice.empty()) continue;
        std::vector<ExpVec> mons = monomials_of_degree(l, d);
        std::map<ExpVec, size_t, GradedLex> index;
        for (size_t i = 0; i < mons.size(); ++i) index.emplace(mons[i], i);
        detail::RowReducer red;
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            for (const ExpVec& nu : monomials_of_degree(l, d - gen_deg[gi])) {
                Derivation prod = gens[gi].times(Poly::monomial(a.vars(), nu, 1));
                red.add(detail::vectorize(prod, l, index, mons.size()));
            }
        }
        bool grew = false;
        for (Derivation& th : slice) {
            if (red.add(detail::vectorize(th, l, index, mons.size()))) {
                gens.push_back(std::move(th));
                gen_deg.push_back(d);
                grew = true;
            }
        }
        if (grew && attempt()) return rep;
    }

    rep.detail = gens.size() < l ? "fewer than dim generators within the degree bound"
                                 : "no generator tuple satisfied the determinant criterion";
    return rep;
}

}  // namespace freearr
