#pragma once

// Condition checkers for the addition, deletion, and restriction rules on
// free arrangements, each emitting a certificate step holding the exact
// combinatorial evidence (cardinalities, restriction counts, codimensions)
// that a replayer can re-verify from lattice data alone.
//
// Checkers verify hypotheses; conclusions are trusted. Freeness facts about
// the inputs are supplied by the caller (oracle-verified or certified).

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "freearr/arrangement.hpp"

namespace freearr {

enum class StepKind { AdditionDeletion, MAT, MAT2, MDT, MDTSubset, MAT2Subset, MRTCount };

inline std::string step_kind_name(StepKind k) {
    switch (k) {
        case StepKind::AdditionDeletion: return "AdditionDeletion";
        case StepKind::MAT: return "MAT";
        case StepKind::MAT2: return "MAT2";
        case StepKind::MDT: return "MDT";
        case StepKind::MDTSubset: return "MDTSubset";
        case StepKind::MAT2Subset: return "MAT2Subset";
        case StepKind::MRTCount: return "MRTCount";
    }
    return "?";
}

inline std::optional<StepKind> parse_step_kind(const std::string& s) {
    for (StepKind k : {StepKind::AdditionDeletion, StepKind::MAT, StepKind::MAT2,
                       StepKind::MDT, StepKind::MDTSubset, StepKind::MAT2Subset,
                       StepKind::MRTCount})
        if (step_kind_name(k) == s) return k;
    return std::nullopt;
}

struct StepEvidence {
    long card_before = -1;
    long card_after = -1;
    std::vector<long> restriction_cards;  // |A''_j| per listed hyperplane
    long codim_x = -1;                    // codim of the family intersection
    std::vector<size_t> subset;           // chosen positions, subset variants only
    // restriction-count assertions
    std::vector<IntVec> flat_members;     // planes of the arrangement containing X
    long flat_codim = -1;
    long restriction_count = -1;          // |A^X|
    std::vector<int> restricted_exponents;
    // single addition/deletion bookkeeping
    int direction = 0;                       // +1 add, -1 delete, 0 assertion
    std::vector<int> restriction_exponents;  // exponents of the restriction
    std::vector<int> aux_exponents;          // exponents of the deletion, direction 0
};

struct CertificateStep {
    StepKind kind = StepKind::MAT2;
    std::vector<IntVec> hyperplanes;  // the full family involved
    std::vector<int> before;          // ascending exponents of the input
    std::vector<int> after;           // ascending exponents of the output
    StepEvidence evidence;
};

struct CertificateSeed {
    std::string family;  // optional generator name
    std::string file;    // optional source label
    size_t dim = 0;
    std::vector<IntVec> hyperplanes;
    std::string verdict;  // "free" or "empty"
    std::vector<int> exponents;
};

struct Certificate {
    CertificateSeed seed;
    std::vector<CertificateStep> steps;

    Arrangement seed_arrangement() const {
        std::vector<Hyperplane> hs;
        for (const IntVec& n : seed.hyperplanes) hs.push_back(Hyperplane{n});
        return Arrangement(seed.dim, hs);
    }
};

enum class CheckStatus {
    Accepted,
    NotApplicable,     // a standing hypothesis of the rule fails
    Condition1Failed,  // a restriction count is off
    Condition2Failed,  // the family intersection has the wrong codimension
    Condition3Failed,  // some untouched hyperplane contains the intersection
    ShapeMismatch,     // exponent tuples are inconsistent
    NotAFlat,          // the given subspace is not in the intersection lattice
};

struct CheckResult {
    CheckStatus status = CheckStatus::NotApplicable;
    std::string message;
    size_t witness = 0;          // failing index, when one exists
    std::vector<int> exponents;  // conclusion (or inferred fact)
    Arrangement result;          // arrangement after the step
    CertificateStep step;        // filled only on Accepted

    bool ok() const { return status == CheckStatus::Accepted; }
};

// number of distinct traces of a's members on the given subspace
inline long restriction_card(const Arrangement& a, const Subspace& x) {
    return static_cast<long>(restrict(a, x).arr.size());
}

inline bool sorted_ascending(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end());
}

namespace detail {

inline CheckResult fail(CheckStatus st, std::string msg, size_t witness = 0) {
    CheckResult r;
    r.status = st;
    r.message = std::move(msg);
    r.witness = witness;
    return r;
}

// shared validation for the multi-addition and multi-deletion families
inline std::optional<CheckResult> validate_family(const Arrangement& base,
                                                  const std::vector<Hyperplane>& family,
                                                  const std::vector<int>& exp,
                                                  bool members_of_base) {
    size_t l = base.dim();
    if (family.empty()) return fail(CheckStatus::NotApplicable, "empty hyperplane family");
    if (l < 2 || family.size() > l - 1)
        return fail(CheckStatus::NotApplicable, "family larger than dim - 1");
    if (exp.size() != l)
        return fail(CheckStatus::NotApplicable, "exponent tuple length != dim");
    if (!sorted_ascending(exp))
        return fail(CheckStatus::NotApplicable, "exponent tuple not ascending");
    for (size_t i = 0; i < family.size(); ++i) {
        if (family[i].dim() != l)
            return fail(CheckStatus::NotApplicable, "hyperplane dimension mismatch", i);
        if (base.contains(family[i]) != members_of_base)
            return fail(CheckStatus::NotApplicable,
                        members_of_base ? "hyperplane not in the arrangement"
                                        : "hyperplane already present",
                        i);
        for (size_t j = i + 1; j < family.size(); ++j)
            if (family[i] == family[j])
                return fail(CheckStatus::NotApplicable, "repeated hyperplane in family", j);
    }
    return std::nullopt;
}

// condition (3): no hyperplane of `rest` may contain x
inline std::optional<size_t> covering_member(const Arrangement& rest, const Subspace& x) {
    for (size_t k = 0; k < rest.size(); ++k)
        if (x.contained_in(rest.plane(k))) return k;
    return std::nullopt;
}

inline std::vector<IntVec> normals_of(const std::vector<Hyperplane>& hs) {
    std::vector<IntVec> out;
    for (const Hyperplane& h : hs) out.push_back(h.normal);
    return out;
}

}  // namespace detail

// Multiple addition with a constant top block: exp(A') ends in s copies of
// d; each new hyperplane must see |A'| - |A''_j| = d, the family must cut
// codimension s, and nothing in A' may contain the cut. Conclusion: the
// top block becomes d+1.
inline CheckResult check_MAT(const Arrangement& a_prime, const std::vector<Hyperplane>& new_hs,
                             const std::vector<int>& exp_prime) {
    using detail::fail;
    if (auto bad = detail::validate_family(a_prime, new_hs, exp_prime, false)) return *bad;
    size_t l = a_prime.dim();
    size_t s = new_hs.size();
    int d = exp_prime[l - s];
    for (size_t i = l - s; i < l; ++i)
        if (exp_prime[i] != d)
            return fail(CheckStatus::NotApplicable, "top exponent block not constant", i);

    std::vector<long> cards(s);
    for (size_t j = 0; j < s; ++j) {
        Subspace hj = Subspace::from_forms({new_hs[j].normal}, l);
        cards[j] = restriction_card(a_prime, hj);
        long delta = static_cast<long>(a_prime.size()) - cards[j];
        if (delta != d)
            return fail(CheckStatus::Condition1Failed,
                        "restriction count " + std::to_string(delta) + " != " +
                            std::to_string(d) + " at family index " + std::to_string(j),
                        j);
    }
    Subspace x = Subspace::from_forms(detail::normals_of(new_hs), l);
    if (x.codim() != s)
        return fail(CheckStatus::Condition2Failed,
                    "family cuts codimension " + std::to_string(x.codim()) + ", expected " +
                        std::to_string(s),
                    x.codim());
    if (auto k = detail::covering_member(a_prime, x))
        return fail(CheckStatus::Condition3Failed,
                    "hyperplane " + std::to_string(*k) + " contains the intersection", *k);

    CheckResult r;
    r.status = CheckStatus::Accepted;
    r.exponents = exp_prime;
    for (size_t i = l - s; i < l; ++i) ++r.exponents[i];
    r.result = a_prime;
    for (const Hyperplane& h : new_hs) r.result = r.result.with(h);
    r.step.kind = StepKind::MAT;
    r.step.hyperplanes = detail::normals_of(new_hs);
    r.step.before = exp_prime;
    r.step.after = r.exponents;
    r.step.evidence.card_before = static_cast<long>(a_prime.size());
    r.step.evidence.card_after = static_cast<long>(r.result.size());
    r.step.evidence.restriction_cards = cards;
    r.step.evidence.codim_x = static_cast<long>(s);
    return r;
}

// Multiple addition, graded variant: exp(A') = (1, d_2..d_l) and the new
// hyperplanes are matched to the top s entries, hyperplane j to d_j, by
// sorting on the observed counts. An optional subset restricts which
// hyperplanes are actually added (the conditions are still checked for the
// whole family); only the matched exponents are incremented.
inline CheckResult check_MAT2(const Arrangement& a_prime, const std::vector<Hyperplane>& new_hs,
                              const std::vector<int>& exp_prime,
                              const std::optional<std::vector<size_t>>& subset = std::nullopt) {
    using detail::fail;
    if (auto bad = detail::validate_family(a_prime, new_hs, exp_prime, false)) return *bad;
    size_t l = a_prime.dim();
    size_t s = new_hs.size();
    if (exp_prime[0] != 1)
        return fail(CheckStatus::NotApplicable, "leading exponent is not 1");

    std::vector<long> deltas(s);
    std::vector<long> cards(s);
    for (size_t j = 0; j < s; ++j) {
        Subspace hj = Subspace::from_forms({new_hs[j].normal}, l);
        cards[j] = restriction_card(a_prime, hj);
        deltas[j] = static_cast<long>(a_prime.size()) - cards[j];
    }
    std::vector<size_t> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return deltas[i] < deltas[j]; });
    for (size_t p = 0; p < s; ++p) {
        if (deltas[order[p]] != exp_prime[l - s + p])
            return fail(CheckStatus::Condition1Failed,
                        "no index matching: count " + std::to_string(deltas[order[p]]) +
                            " != exponent " + std::to_string(exp_prime[l - s + p]) +
                            " at block position " + std::to_string(p),
                        p);
    }
    Subspace x = Subspace::from_forms(detail::normals_of(new_hs), l);
    if (x.codim() != s)
        return fail(CheckStatus::Condition2Failed,
                    "family cuts codimension " + std::to_string(x.codim()) + ", expected " +
                        std::to_string(s),
                    x.codim());
    if (auto k = detail::covering_member(a_prime, x))
        return fail(CheckStatus::Condition3Failed,
                    "hyperplane " + std::to_string(*k) + " contains the intersection", *k);

    // positions (into the count-sorted family) that are actually added
    std::vector<size_t> chosen;
    if (subset) {
        for (size_t p = 0; p < s; ++p)
            if (std::find(subset->begin(), subset->end(), order[p]) != subset->end())
                chosen.push_back(p);
        if (chosen.size() != subset->size())
            return fail(CheckStatus::NotApplicable, "subset index out of range");
    } else {
        chosen.resize(s);
        std::iota(chosen.begin(), chosen.end(), 0);
    }

    CheckResult r;
    r.status = CheckStatus::Accepted;
    r.exponents = exp_prime;
    for (size_t p : chosen) ++r.exponents[l - s + p];
    std::sort(r.exponents.begin(), r.exponents.end());
    r.result = a_prime;
    for (size_t p : chosen) r.result = r.result.with(new_hs[order[p]]);
    r.step.kind = subset ? StepKind::MAT2Subset : StepKind::MAT2;
    for (size_t p = 0; p < s; ++p) r.step.hyperplanes.push_back(new_hs[order[p]].normal);
    r.step.before = exp_prime;
    r.step.after = r.exponents;
    r.step.evidence.card_before = static_cast<long>(a_prime.size());
    r.step.evidence.card_after = static_cast<long>(r.result.size());
    for (size_t p = 0; p < s; ++p) r.step.evidence.restriction_cards.push_back(cards[order[p]]);
    r.step.evidence.codim_x = static_cast<long>(s);
    if (subset) r.step.evidence.subset = chosen;
    return r;
}

// Multiple deletion: exp(A) = (1, d_2..d_l) with 1 < d_2; the deleted
// hyperplanes are matched to d_2..d_q by their counts |A| - |A^{H_j}|; the
// matched exponents are decremented. Condition (3) quantifies over the
// post-deletion arrangement of the whole family even in the subset variant.
inline CheckResult check_MDT(const Arrangement& a, const std::vector<Hyperplane>& del_hs,
                             const std::vector<int>& exp_a,
                             const std::optional<std::vector<size_t>>& subset = std::nullopt) {
    using detail::fail;
    if (auto bad = detail::validate_family(a, del_hs, exp_a, true)) return *bad;
    size_t l = a.dim();
    size_t s = del_hs.size();
    if (exp_a[0] != 1) return fail(CheckStatus::NotApplicable, "leading exponent is not 1");
    if (exp_a[1] <= 1)
        return fail(CheckStatus::NotApplicable, "second exponent not larger than 1");

    std::vector<long> deltas(s);
    std::vector<long> cards(s);
    for (size_t j = 0; j < s; ++j) {
        Subspace hj = Subspace::from_forms({del_hs[j].normal}, l);
        cards[j] = restriction_card(a, hj);
        deltas[j] = static_cast<long>(a.size()) - cards[j];
    }
    std::vector<size_t> order(s);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t i, size_t j) { return deltas[i] < deltas[j]; });
    for (size_t p = 0; p < s; ++p) {
        if (deltas[order[p]] != exp_a[1 + p])
            return fail(CheckStatus::Condition1Failed,
                        "no index matching: count " + std::to_string(deltas[order[p]]) +
                            " != exponent " + std::to_string(exp_a[1 + p]) +
                            " at block position " + std::to_string(p),
                        p);
    }
    Subspace x = Subspace::from_forms(detail::normals_of(del_hs), l);
    if (x.codim() != s)
        return fail(CheckStatus::Condition2Failed,
                    "family cuts codimension " + std::to_string(x.codim()) + ", expected " +
                        std::to_string(s),
                    x.codim());
    Arrangement rest = a;
    for (const Hyperplane& h : del_hs) rest = rest.without(h);
    if (auto k = detail::covering_member(rest, x))
        return fail(CheckStatus::Condition3Failed,
                    "hyperplane " + std::to_string(*k) + " contains the intersection", *k);

    std::vector<size_t> chosen;
    if (subset) {
        for (size_t p = 0; p < s; ++p)
            if (std::find(subset->begin(), subset->end(), order[p]) != subset->end())
                chosen.push_back(p);
        if (chosen.size() != subset->size())
            return fail(CheckStatus::NotApplicable, "subset index out of range");
    } else {
        chosen.resize(s);
        std::iota(chosen.begin(), chosen.end(), 0);
    }

    CheckResult r;
    r.status = CheckStatus::Accepted;
    r.exponents = exp_a;
    for (size_t p : chosen) --r.exponents[1 + p];
    std::sort(r.exponents.begin(), r.exponents.end());
    r.result = a;
    for (size_t p : chosen) r.result = r.result.without(del_hs[order[p]]);
    r.step.kind = subset ? StepKind::MDTSubset : StepKind::MDT;
    for (size_t p = 0; p < s; ++p) r.step.hyperplanes.push_back(del_hs[order[p]].normal);
    r.step.before = exp_a;
    r.step.after = r.exponents;
    r.step.evidence.card_before = static_cast<long>(a.size());
    r.step.evidence.card_after = static_cast<long>(r.result.size());
    for (size_t p = 0; p < s; ++p) r.step.evidence.restriction_cards.push_back(cards[order[p]]);
    r.step.evidence.codim_x = static_cast<long>(s);
    if (subset) r.step.evidence.subset = chosen;
    return r;
}

// Restriction count criterion: for a free A with exp (1, d_2..d_l) and a
// codim-k lattice flat X, the restriction A^X is free with exponents
// (1, d_{k+2}..d_l) exactly when |A^X| = 1 + d_{k+2} + ... + d_l. A count
// mismatch refutes only that exponent tuple.
inline CheckResult check_MRT_count(const Arrangement& a, const Subspace& x,
                                   const std::vector<int>& exp_a) {
    using detail::fail;
    size_t l = a.dim();
    if (x.ambient != l) return fail(CheckStatus::NotApplicable, "flat ambient mismatch");
    if (exp_a.size() != l || !sorted_ascending(exp_a) || (l > 0 && exp_a[0] != 1))
        return fail(CheckStatus::NotApplicable, "exponent tuple must be ascending with lead 1");

    std::vector<IntVec> members;
    for (size_t i = 0; i < a.size(); ++i)
        if (x.contained_in(a.plane(i))) members.push_back(a.plane(i).normal);
    if (!(Subspace::from_forms(members, l) == x))
        return fail(CheckStatus::NotAFlat, "subspace is not an intersection of members");

    size_t k = x.codim();
    long expected = 1;
    for (size_t i = k + 1; i < l; ++i) expected += exp_a[i];
    long count = restriction_card(a, x);
    if (count != expected)
        return fail(CheckStatus::Condition1Failed,
                    "|A^X| = " + std::to_string(count) + " != " + std::to_string(expected),
                    static_cast<size_t>(count));

    CheckResult r;
    r.status = CheckStatus::Accepted;
    r.exponents.push_back(1);
    for (size_t i = k + 1; i < l; ++i) r.exponents.push_back(exp_a[i]);
    r.result = a;
    r.step.kind = StepKind::MRTCount;
    r.step.before = exp_a;
    r.step.after = exp_a;
    r.step.evidence.card_before = static_cast<long>(a.size());
    r.step.evidence.card_after = r.step.evidence.card_before;
    r.step.evidence.flat_members = members;
    r.step.evidence.flat_codim = static_cast<long>(k);
    r.step.evidence.restriction_count = count;
    r.step.evidence.restricted_exponents = r.exponents;
    return r;
}

// --- single addition/deletion bookkeeping ---------------------------------

struct AdditionDeletionKnown {
    std::optional<std::vector<int>> exp_full;         // exponents of A
    std::optional<std::vector<int>> exp_deleted;      // exponents of A minus h
    std::optional<std::vector<int>> exp_restriction;  // exponents of A^h
};

namespace detail {

// multiset difference big minus small; nullopt when small is not contained
inline std::optional<std::vector<int>> multiset_minus(std::vector<int> big,
                                                      std::vector<int> small) {
    std::sort(big.begin(), big.end());
    std::sort(small.begin(), small.end());
    std::vector<int> rest;
    size_t i = 0, j = 0;
    while (i < big.size()) {
        if (j < small.size() && big[i] == small[j]) {
            ++i, ++j;
        } else if (j < small.size() && small[j] < big[i]) {
            return std::nullopt;
        } else {
            rest.push_back(big[i++]);
        }
    }
    if (j != small.size()) return std::nullopt;
    return rest;
}

inline long sum_of(const std::vector<int>& v) {
    long s = 0;
    for (int x : v) s += x;
    return s;
}

}  // namespace detail

// Exponent bookkeeping for a single addition/deletion triple: given two of
// exp(A), exp(A \ h), exp(A^h), infer the third. Tuples must be related by
// exp(A) = common + {d}, exp(A \ h) = common + {d-1}, exp(A^h) = common,
// and every sum must match the corresponding cardinality. Freeness of the
// two given facts is the caller's responsibility.
inline CheckResult check_addition_deletion(const Arrangement& a, const Hyperplane& h,
                                           const AdditionDeletionKnown& known) {
    using detail::fail;
    size_t l = a.dim();
    if (!a.contains(h))
        return fail(CheckStatus::NotApplicable, "hyperplane not in the arrangement");
    int given = int(known.exp_full.has_value()) + int(known.exp_deleted.has_value()) +
                int(known.exp_restriction.has_value());
    if (given != 2) return fail(CheckStatus::NotApplicable, "exactly two facts required");

    long n = static_cast<long>(a.size());
    long card_rest = restriction_card(a, Subspace::from_forms({h.normal}, l));
    auto checked = [&](const std::optional<std::vector<int>>& t, size_t len, long sum,
                       const char* what) -> std::optional<CheckResult> {
        if (!t) return std::nullopt;
        if (t->size() != len)
            return fail(CheckStatus::ShapeMismatch, std::string(what) + ": wrong length");
        if (detail::sum_of(*t) != sum)
            return fail(CheckStatus::ShapeMismatch,
                        std::string(what) + ": exponent sum != cardinality");
        return std::nullopt;
    };
    if (auto bad = checked(known.exp_full, l, n, "exp(A)")) return *bad;
    if (auto bad = checked(known.exp_deleted, l, n - 1, "exp(A')")) return *bad;
    if (auto bad = checked(known.exp_restriction, l - 1, card_rest, "exp(A'')")) return *bad;

    CheckResult r;
    r.step.kind = StepKind::AdditionDeletion;
    r.step.hyperplanes = {h.normal};
    r.step.evidence.restriction_cards = {card_rest};

    if (!known.exp_restriction) {
        // infer exp(A^h): the two tuples must differ in a single entry, by one
        std::vector<int> ea = *known.exp_full, ep = *known.exp_deleted;
        std::sort(ea.begin(), ea.end());
        std::sort(ep.begin(), ep.end());
        size_t pos = 0;
        while (pos < l && ea[pos] == ep[pos]) ++pos;
        std::vector<int> common;
        {
            size_t i = 0, j = 0;
            std::vector<int> xa, xp;
            while (i < ea.size() || j < ep.size()) {
                if (j >= ep.size() || (i < ea.size() && ea[i] < ep[j]))
                    xa.push_back(ea[i++]);
                else if (i >= ea.size() || ep[j] < ea[i])
                    xp.push_back(ep[j++]);
                else {
                    common.push_back(ea[i]);
                    ++i, ++j;
                }
            }
            if (xa.size() != 1 || xp.size() != 1 || xa[0] != xp[0] + 1)
                return fail(CheckStatus::ShapeMismatch,
                            "exp(A) and exp(A') do not differ by one in a single entry",
                            pos);
        }
        if (detail::sum_of(common) != card_rest)
            return fail(CheckStatus::ShapeMismatch, "exp(A^h) sum != |A^h|");
        r.status = CheckStatus::Accepted;
        r.exponents = common;
        r.result = a;
        r.step.before = ea;
        r.step.after = ea;
        r.step.evidence.direction = 0;
        r.step.evidence.restriction_exponents = common;
        r.step.evidence.aux_exponents = ep;
        r.step.evidence.card_before = n;
        r.step.evidence.card_after = n;
        return r;
    }

    std::vector<int> er = *known.exp_restriction;
    std::sort(er.begin(), er.end());
    if (!known.exp_deleted) {
        // infer exp(A \ h) = er + {d-1} where exp(A) = er + {d}
        std::vector<int> ea = *known.exp_full;
        std::sort(ea.begin(), ea.end());
        auto rest = detail::multiset_minus(ea, er);
        if (!rest || rest->size() != 1)
            return fail(CheckStatus::ShapeMismatch, "exp(A^h) is not exp(A) minus one entry");
        int d = (*rest)[0];
        if (d < 1) return fail(CheckStatus::ShapeMismatch, "cannot decrement exponent 0");
        std::vector<int> ep = er;
        ep.push_back(d - 1);
        std::sort(ep.begin(), ep.end());
        r.status = CheckStatus::Accepted;
        r.exponents = ep;
        r.result = a.without(h);
        r.step.before = ea;
        r.step.after = ep;
        r.step.evidence.direction = -1;
        r.step.evidence.restriction_exponents = er;
        r.step.evidence.card_before = n;
        r.step.evidence.card_after = n - 1;
        return r;
    }

    // infer exp(A) = er + {d+1} where exp(A \ h) = er + {d}
    std::vector<int> ep = *known.exp_deleted;
    std::sort(ep.begin(), ep.end());
    auto rest = detail::multiset_minus(ep, er);
    if (!rest || rest->size() != 1)
        return fail(CheckStatus::ShapeMismatch, "exp(A^h) is not exp(A') minus one entry");
    int d = (*rest)[0];
    std::vector<int> ea = er;
    ea.push_back(d + 1);
    std::sort(ea.begin(), ea.end());
    r.status = CheckStatus::Accepted;
    r.exponents = ea;
    r.result = a;
    r.step.before = ep;
    r.step.after = ea;
    r.step.evidence.direction = 1;
    r.step.evidence.restriction_exponents = er;
    r.step.evidence.card_before = n - 1;
    r.step.evidence.card_after = n;
    return r;
}

}  // namespace freearr
