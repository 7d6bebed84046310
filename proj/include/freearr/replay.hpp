#pragma once

// Certificate replay from lattice data. The certificate carries its own
// normal vectors, so the replayer rebuilds the union of every plane the
// proof ever touches, forms one intersection lattice, and re-verifies each
// step's counts, codimensions, and containments combinatorially inside it.
// The candidate arrangement contributes nothing but its lattice: at the
// end the replayer searches for an atom bijection identifying the lattice
// of the certified result with the candidate's.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "freearr/lattice.hpp"
#include "freearr/oracle.hpp"
#include "freearr/theorems.hpp"

namespace freearr {

struct ReplayReport {
    bool accepted = false;
    size_t failed_step = static_cast<size_t>(-1);  // index into steps, or -1
    std::string message;
};

// Does an atom bijection exist carrying the flats of `a` onto the flats of
// `b` with matching codimensions? Backtracking over atoms, pruned by per-
// atom signatures and checked flat-by-flat as masks complete.
inline bool lattice_isomorphic(const IntersectionLattice& a, const IntersectionLattice& b) {
    size_t n = a.arrangement().size();
    if (b.arrangement().size() != n) return false;
    if (a.flats().size() != b.flats().size()) return false;
    if (a.rank() != b.rank()) return false;
    size_t maxc = a.rank();
    for (size_t c = 0; c <= maxc; ++c)
        if (a.level(c).size() != b.level(c).size()) return false;

    // signature of an atom: sorted (codim, member count) over flats through it
    auto signatures = [](const IntersectionLattice& lat, size_t atoms) {
        std::vector<std::vector<std::pair<size_t, int>>> sig(atoms);
        for (const Flat& f : lat.flats())
            for (size_t i = 0; i < atoms; ++i)
                if (f.members >> i & 1)
                    sig[i].emplace_back(f.codim, __builtin_popcountll(f.members));
        for (auto& s : sig) std::sort(s.begin(), s.end());
        return sig;
    };
    auto siga = signatures(a, n), sigb = signatures(b, n);

    std::vector<std::vector<size_t>> candidates(n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j)
            if (siga[i] == sigb[j]) candidates[i].push_back(j);
        if (candidates[i].empty()) return false;
    }
    // assign scarce atoms first
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t x, size_t y) { return candidates[x].size() < candidates[y].size(); });

    // flats of b by member mask for O(log) lookup
    std::map<uint64_t, size_t> bcodim;
    for (const Flat& f : b.flats()) bcodim[f.members] = f.codim;

    std::vector<long> image(n, -1);
    uint64_t used = 0, assigned = 0;

    // flats of a whose member set lies inside the assigned atoms get their
    // image checked as soon as the last member is placed
    auto consistent = [&](uint64_t just_assigned_mask) {
        for (const Flat& f : a.flats()) {
            if (!(f.members & just_assigned_mask)) continue;
            if (!mask_subset(f.members, assigned)) continue;
            uint64_t img = 0;
            for (size_t i = 0; i < n; ++i)
                if (f.members >> i & 1) img |= uint64_t(1) << image[i];
            auto it = bcodim.find(img);
            if (it == bcodim.end() || it->second != f.codim) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t k) -> bool {
        if (k == n) return true;
        size_t i = order[k];
        for (size_t j : candidates[i]) {
            if (used >> j & 1) continue;
            image[i] = static_cast<long>(j);
            used |= uint64_t(1) << j;
            assigned |= uint64_t(1) << i;
            if (consistent(uint64_t(1) << i) && self(self, k + 1)) return true;
            assigned &= ~(uint64_t(1) << i);
            used &= ~(uint64_t(1) << j);
            image[i] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

namespace replaydetail {

struct Ctx {
    IntersectionLattice lat;  // lattice of the plane universe
    uint64_t state_mask = 0;
    std::vector<int> exponents;
    size_t step_index = 0;
    ReplayReport out;

    bool reject(const std::string& msg) {
        out.accepted = false;
        out.failed_step = step_index;
        out.message = "step " + std::to_string(step_index) + ": " + msg;
        return false;
    }

    long atom_of(const IntVec& normal) const {
        return lat.arrangement().index_of(Hyperplane{normal});
    }

    static int popcount(uint64_t m) { return __builtin_popcountll(m); }

    // |A^H| inside the current state, H an atom of the state
    long restriction_card_in(uint64_t arrangement_mask, size_t h) const {
        std::set<long> traces;
        for (size_t k = 0; k < lat.arrangement().size(); ++k) {
            if (k == h || !(arrangement_mask >> k & 1)) continue;
            traces.insert(lat.closure((uint64_t(1) << h) | (uint64_t(1) << k)));
        }
        return static_cast<long>(traces.size());
    }

    // |A^X| for a flat given by its atom mask, over the given arrangement
    long flat_restriction_card(uint64_t arrangement_mask, uint64_t flat_atoms) const {
        long fl = lat.closure(flat_atoms);
        uint64_t members = lat.flat(fl).members;
        std::set<long> traces;
        for (size_t k = 0; k < lat.arrangement().size(); ++k) {
            if (!(arrangement_mask >> k & 1) || (members >> k & 1)) continue;
            traces.insert(lat.closure(members | (uint64_t(1) << k)));
        }
        return static_cast<long>(traces.size());
    }
};

inline bool family_atoms(Ctx& c, const CertificateStep& st, std::vector<size_t>& atoms,
                         bool expect_in_state) {
    for (const IntVec& nrm : st.hyperplanes) {
        long idx;
        try {
            idx = c.atom_of(nrm);
        } catch (const std::invalid_argument&) {
            return c.reject("bad hyperplane normal");
        }
        if (idx < 0) return c.reject("hyperplane missing from the universe");
        bool in_state = c.state_mask >> idx & 1;
        if (in_state != expect_in_state)
            return c.reject(expect_in_state ? "hyperplane not in the arrangement"
                                            : "hyperplane already in the arrangement");
        atoms.push_back(static_cast<size_t>(idx));
    }
    std::set<size_t> uniq(atoms.begin(), atoms.end());
    if (uniq.size() != atoms.size()) return c.reject("repeated hyperplane in family");
    return true;
}

// shared verification for the four multi-addition/deletion kinds
inline bool replay_multi(Ctx& c, const CertificateStep& st) {
    bool adding = st.kind == StepKind::MAT || st.kind == StepKind::MAT2 ||
                  st.kind == StepKind::MAT2Subset;
    bool subset_kind = st.kind == StepKind::MAT2Subset || st.kind == StepKind::MDTSubset;
    size_t l = c.lat.arrangement().dim();
    size_t s = st.hyperplanes.size();
    if (s == 0 || l < 2 || s > l - 1) return c.reject("family size out of range");
    if (st.before.size() != l || !sorted_ascending(st.before))
        return c.reject("malformed input exponents");

    std::vector<size_t> atoms;
    if (!family_atoms(c, st, atoms, !adding)) return false;

    // condition (1): counts against the matched exponent block; for
    // additions the count is |A'| - |(A' + H_j)^{H_j}|, plane by plane
    uint64_t arrangement_mask = c.state_mask;
    long base_card = c.popcount(c.state_mask);
    if (st.evidence.card_before != base_card) return c.reject("cardinality evidence mismatch");
    if (st.evidence.restriction_cards.size() != s)
        return c.reject("restriction count list has wrong length");

    bool graded = st.kind != StepKind::MAT;
    int flat_d = 0;
    if (st.kind == StepKind::MAT) {
        flat_d = st.before[l - s];
        for (size_t i = l - s; i < l; ++i)
            if (st.before[i] != flat_d) return c.reject("top exponent block not constant");
    } else if (st.before[0] != 1) {
        return c.reject("leading exponent is not 1");
    }
    if (!adding && st.before[1] <= 1) return c.reject("second exponent not larger than 1");

    for (size_t p = 0; p < s; ++p) {
        uint64_t mask = adding ? (arrangement_mask | (uint64_t(1) << atoms[p]))
                               : arrangement_mask;
        long card = c.restriction_card_in(mask, atoms[p]);
        if (card != st.evidence.restriction_cards[p])
            return c.reject("restriction count evidence mismatch at position " +
                            std::to_string(p));
        long delta = base_card - card;
        long target = graded ? (adding ? st.before[l - s + p] : st.before[1 + p])
                             : flat_d;
        if (delta != target)
            return c.reject("count condition fails at position " + std::to_string(p));
    }

    // condition (2): the family cuts codimension s
    uint64_t family_mask = 0;
    for (size_t at : atoms) family_mask |= uint64_t(1) << at;
    long xflat = c.lat.closure(family_mask);
    if (static_cast<long>(c.lat.flat(xflat).codim) != static_cast<long>(s) ||
        st.evidence.codim_x != static_cast<long>(s))
        return c.reject("family intersection has wrong codimension");

    // condition (3): no remaining hyperplane contains the intersection
    uint64_t rest_mask = adding ? c.state_mask : (c.state_mask & ~family_mask);
    if (c.lat.flat(xflat).members & rest_mask)
        return c.reject("a hyperplane of the base contains the intersection");

    // chosen positions and the exponent transform
    std::vector<size_t> chosen;
    if (subset_kind) {
        chosen = st.evidence.subset;
        for (size_t p : chosen)
            if (p >= s) return c.reject("subset position out of range");
        std::set<size_t> uniq(chosen.begin(), chosen.end());
        if (uniq.size() != chosen.size()) return c.reject("repeated subset position");
    } else {
        for (size_t p = 0; p < s; ++p) chosen.push_back(p);
    }
    std::vector<int> after = st.before;
    for (size_t p : chosen) {
        size_t slot = adding ? (l - s + p) : (1 + p);
        after[slot] += adding ? 1 : -1;
    }
    std::sort(after.begin(), after.end());
    if (after != st.after) return c.reject("claimed output exponents do not follow");
    long expected_card = base_card + (adding ? 1 : -1) * static_cast<long>(chosen.size());
    if (st.evidence.card_after != expected_card)
        return c.reject("output cardinality evidence mismatch");

    for (size_t p : chosen) {
        uint64_t bit = uint64_t(1) << atoms[p];
        if (adding)
            c.state_mask |= bit;
        else
            c.state_mask &= ~bit;
    }
    c.exponents = after;
    return true;
}

inline bool replay_mrt(Ctx& c, const CertificateStep& st) {
    size_t l = c.lat.arrangement().dim();
    if (st.before.size() != l || !sorted_ascending(st.before) || st.before[0] != 1)
        return c.reject("malformed input exponents");
    if (st.after != st.before) return c.reject("restriction step must not change exponents");

    uint64_t flat_atoms = 0;
    for (const IntVec& nrm : st.evidence.flat_members) {
        long idx;
        try {
            idx = c.atom_of(nrm);
        } catch (const std::invalid_argument&) {
            return c.reject("bad hyperplane normal");
        }
        if (idx < 0 || !(c.state_mask >> idx & 1))
            return c.reject("flat member not in the arrangement");
        flat_atoms |= uint64_t(1) << idx;
    }
    // an empty member list denotes the whole space (codim 0)
    long fl = c.lat.closure(flat_atoms);
    uint64_t members_in_state = c.lat.flat(fl).members & c.state_mask;
    if (members_in_state != flat_atoms)
        return c.reject("flat member list is not closed in the arrangement");
    size_t k = c.lat.flat(fl).codim;
    if (st.evidence.flat_codim != static_cast<long>(k))
        return c.reject("flat codimension evidence mismatch");

    long count = c.flat_restriction_card(c.state_mask, flat_atoms);
    if (count != st.evidence.restriction_count)
        return c.reject("restriction count evidence mismatch");
    long expected = 1;
    for (size_t i = k + 1; i < l; ++i) expected += st.before[i];
    if (count != expected) return c.reject("restriction count criterion fails");

    std::vector<int> claimed;
    claimed.push_back(1);
    for (size_t i = k + 1; i < l; ++i) claimed.push_back(st.before[i]);
    if (st.evidence.restricted_exponents != claimed)
        return c.reject("claimed restricted exponents do not follow");
    return true;
}

inline bool replay_single(Ctx& c, const CertificateStep& st) {
    size_t l = c.lat.arrangement().dim();
    if (st.hyperplanes.size() != 1) return c.reject("single-plane step needs one hyperplane");
    long idx;
    try {
        idx = c.atom_of(st.hyperplanes[0]);
    } catch (const std::invalid_argument&) {
        return c.reject("bad hyperplane normal");
    }
    if (idx < 0) return c.reject("hyperplane missing from the universe");
    uint64_t bit = uint64_t(1) << idx;
    int dir = st.evidence.direction;
    if (dir != -1 && dir != 0 && dir != 1) return c.reject("bad direction");
    bool in_state = c.state_mask & bit;
    if ((dir == 1) == in_state)
        return c.reject(dir == 1 ? "hyperplane already present" : "hyperplane not present");

    uint64_t full_mask = c.state_mask | bit;  // the arrangement containing h
    long n = c.popcount(full_mask);
    long card_rest = c.restriction_card_in(full_mask, static_cast<size_t>(idx));
    if (st.evidence.restriction_cards != std::vector<long>{card_rest})
        return c.reject("restriction count evidence mismatch");

    const std::vector<int>& ea = dir == -1 || dir == 0 ? st.before : st.after;
    const std::vector<int>& ep = dir == 0 ? st.evidence.aux_exponents
                                          : (dir == -1 ? st.after : st.before);
    const std::vector<int>& er = st.evidence.restriction_exponents;
    if (ea.size() != l || ep.size() != l || er.size() + 1 != l)
        return c.reject("exponent tuple lengths are wrong");
    if (!sorted_ascending(ea) || !sorted_ascending(ep) || !sorted_ascending(er))
        return c.reject("exponent tuples not ascending");
    if (detail::sum_of(ea) != n || detail::sum_of(ep) != n - 1 ||
        detail::sum_of(er) != card_rest)
        return c.reject("exponent sums do not match cardinalities");
    auto da = detail::multiset_minus(ea, er), dp = detail::multiset_minus(ep, er);
    if (!da || !dp || da->size() != 1 || dp->size() != 1 || (*da)[0] != (*dp)[0] + 1)
        return c.reject("triple exponents are inconsistent");
    if (dir == 0 && st.after != st.before)
        return c.reject("assertion step must not change exponents");

    if (dir == 1) c.state_mask |= bit;
    if (dir == -1) c.state_mask &= ~bit;
    c.exponents = st.after;
    return true;
}

}  // namespace replaydetail

// Re-verify a certificate against a candidate lattice. All step evidence is
// recomputed inside the lattice rebuilt from the certificate's own data;
// the candidate is only consulted through a final isomorphism search.
// With verify_seed set, the seed's freeness claim is re-established by the
// derivation oracle on the embedded seed arrangement.
inline ReplayReport replay_certificate(const IntersectionLattice& target,
                                       const Certificate& cert, bool verify_seed = true) {
    replaydetail::Ctx c;
    c.out.accepted = false;
    c.step_index = static_cast<size_t>(-1);

    Arrangement universe;
    Arrangement seed_arr;
    try {
        seed_arr = cert.seed_arrangement();
        std::vector<Hyperplane> all;
        for (const IntVec& nrm : cert.seed.hyperplanes) all.push_back(Hyperplane{nrm});
        for (const CertificateStep& st : cert.steps) {
            for (const IntVec& nrm : st.hyperplanes) all.push_back(Hyperplane{nrm});
            for (const IntVec& nrm : st.evidence.flat_members) all.push_back(Hyperplane{nrm});
        }
        universe = Arrangement(cert.seed.dim, all);
    } catch (const std::invalid_argument& e) {
        c.out.message = std::string("malformed certificate: ") + e.what();
        return c.out;
    }
    if (universe.size() > 64) {
        c.out.message = "more than 64 hyperplanes";
        return c.out;
    }
    c.lat = build_lattice(universe);

    // seed bookkeeping
    size_t l = cert.seed.dim;
    if (cert.seed.exponents.size() != l || !sorted_ascending(cert.seed.exponents)) {
        c.out.message = "seed exponents malformed";
        return c.out;
    }
    for (size_t i = 0; i < seed_arr.size(); ++i)
        c.state_mask |= uint64_t(1) << universe.index_of(seed_arr.plane(i));
    c.exponents = cert.seed.exponents;
    if (detail::sum_of(c.exponents) != static_cast<long>(seed_arr.size())) {
        c.out.message = "seed exponent sum != seed cardinality";
        return c.out;
    }
    if (cert.seed.verdict == "empty") {
        if (!seed_arr.planes().empty()) {
            c.out.message = "empty verdict on a nonempty seed";
            return c.out;
        }
    } else if (cert.seed.verdict == "free") {
        if (verify_seed) {
            FreenessReport fr = freeness_oracle(seed_arr);
            if (fr.verdict != Freeness::FreeWithExponents ||
                fr.exponents != cert.seed.exponents) {
                c.out.message = "seed freeness claim failed re-verification";
                return c.out;
            }
        }
    } else {
        c.out.message = "unknown seed verdict";
        return c.out;
    }

    for (size_t i = 0; i < cert.steps.size(); ++i) {
        c.step_index = i;
        const CertificateStep& st = cert.steps[i];
        if (st.before != c.exponents) {
            c.reject("input exponents do not match state");
            return c.out;
        }
        bool okstep = false;
        switch (st.kind) {
            case StepKind::MAT:
            case StepKind::MAT2:
            case StepKind::MAT2Subset:
            case StepKind::MDT:
            case StepKind::MDTSubset:
                okstep = replaydetail::replay_multi(c, st);
                break;
            case StepKind::MRTCount:
                okstep = replaydetail::replay_mrt(c, st);
                break;
            case StepKind::AdditionDeletion:
                okstep = replaydetail::replay_single(c, st);
                break;
        }
        if (!okstep) return c.out;
    }

    // final lattice comparison, atoms of the surviving state
    std::vector<Hyperplane> final_planes;
    for (size_t i = 0; i < universe.size(); ++i)
        if (c.state_mask >> i & 1) final_planes.push_back(universe.plane(i));
    Arrangement final_arr(universe.dim(), final_planes);
    IntersectionLattice final_lat = build_lattice(final_arr);
    if (!lattice_isomorphic(final_lat, target)) {
        c.out.accepted = false;
        c.out.failed_step = static_cast<size_t>(-1);
        c.out.message = "candidate lattice is not isomorphic to the certified result";
        return c.out;
    }
    c.out.accepted = true;
    c.out.failed_step = static_cast<size_t>(-1);
    c.out.message = "accepted";
    return c.out;
}

}  // namespace freearr
