#pragma once

// Intersection lattice of a central arrangement. Flats are identified by
// their member set (the hyperplanes containing them), which is faithful
// because every flat is the intersection of its members. Mobius values
// are computed top-down from the ambient space.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "freearr/arrangement.hpp"

namespace freearr {

struct Flat {
    uint64_t members = 0;  // bit i set when plane i contains the flat
    Subspace space;
    size_t codim = 0;
    Integer mobius = 0;
};

inline bool mask_subset(uint64_t a, uint64_t b) { return (a & b) == a; }

class IntersectionLattice {
  public:
    const Arrangement& arrangement() const { return m_arr; }
    const std::vector<Flat>& flats() const { return m_flats; }
    size_t rank() const { return m_rank; }

    // flats of a given codimension, in construction (canonical) order
    std::vector<size_t> level(size_t codim) const {
        std::vector<size_t> ids;
        for (size_t i = 0; i < m_flats.size(); ++i)
            if (m_flats[i].codim == codim) ids.push_back(i);
        return ids;
    }

    long find(uint64_t members) const {
        auto it = m_index.find(members);
        return it == m_index.end() ? -1 : static_cast<long>(it->second);
    }

    // smallest flat containing the intersection of the given atoms
    // (their join); every subset of hyperplanes closes to a unique flat
    long closure(uint64_t atoms) const {
        long best = -1;
        for (size_t i = 0; i < m_flats.size(); ++i) {
            if (!mask_subset(atoms, m_flats[i].members)) continue;
            if (best < 0 || m_flats[i].codim < m_flats[best].codim) best = i;
        }
        return best;
    }

    const Flat& flat(size_t i) const { return m_flats[i]; }

    friend IntersectionLattice build_lattice(const Arrangement& a);

  private:
    Arrangement m_arr;
    std::vector<Flat> m_flats;  // grouped by ascending codim
    std::map<uint64_t, size_t> m_index;
    size_t m_rank = 0;
};

inline IntersectionLattice build_lattice(const Arrangement& a) {
    if (a.size() > 64) throw std::invalid_argument("build_lattice: more than 64 hyperplanes");
    IntersectionLattice lat;
    lat.m_arr = a;

    auto member_mask = [&](const Subspace& s) {
        uint64_t m = 0;
        for (size_t i = 0; i < a.size(); ++i)
            if (s.contained_in(a.plane(i))) m |= uint64_t(1) << i;
        return m;
    };

    Flat top;
    top.space = Subspace::whole_space(a.dim());
    top.members = member_mask(top.space);  // zero for any true arrangement
    top.codim = 0;
    lat.m_flats.push_back(top);
    lat.m_index[top.members] = 0;

    // grow codimension by codimension: every flat of codim c+1 is
    // (flat of codim c) intersected with one more hyperplane
    size_t level_begin = 0;
    for (size_t c = 0; level_begin < lat.m_flats.size(); ++c) {
        size_t level_end = lat.m_flats.size();
        for (size_t fi = level_begin; fi < level_end; ++fi) {
            for (size_t hi = 0; hi < a.size(); ++hi) {
                if (lat.m_flats[fi].members & (uint64_t(1) << hi)) continue;
                std::vector<IntVec> forms = lat.m_flats[fi].space.forms;
                forms.push_back(a.plane(hi).normal);
                Subspace s = Subspace::from_forms(forms, a.dim());
                // key by the full member set, so equal flats collide
                uint64_t full = member_mask(s);
                if (lat.m_index.count(full)) continue;
                Flat f;
                f.members = full;
                f.space = s;
                f.codim = c + 1;
                lat.m_index[full] = lat.m_flats.size();
                lat.m_flats.push_back(f);
            }
        }
        level_begin = level_end;
    }
    lat.m_rank = lat.m_flats.empty() ? 0 : lat.m_flats.back().codim;

    // Mobius: mu(V) = 1; mu(X) = -sum of mu over flats strictly above X
    for (size_t i = 0; i < lat.m_flats.size(); ++i) {
        if (lat.m_flats[i].codim == 0) {
            lat.m_flats[i].mobius = 1;
            continue;
        }
        Integer acc = 0;
        for (size_t j = 0; j < lat.m_flats.size(); ++j) {
            if (j == i) continue;
            if (mask_subset(lat.m_flats[j].members, lat.m_flats[i].members))
                acc += lat.m_flats[j].mobius;
        }
        lat.m_flats[i].mobius = -acc;
    }
    return lat;
}

struct CharPoly {
    Poly chi;       // characteristic polynomial in t
    Poly poincare;  // Poincare polynomial in t
};

inline CharPoly char_poly(const IntersectionLattice& lat) {
    std::vector<std::string> tv{"t"};
    CharPoly cp{Poly(tv), Poly(tv)};
    size_t l = lat.arrangement().dim();
    for (const Flat& f : lat.flats()) {
        cp.chi.add_term(ExpVec{static_cast<int>(l - f.codim)}, Rational(f.mobius));
        Rational sgn = (f.codim % 2) ? Rational(-1) : Rational(1);
        cp.poincare.add_term(ExpVec{static_cast<int>(f.codim)}, sgn * Rational(f.mobius));
    }
    return cp;
}

inline CharPoly char_poly(const Arrangement& a) { return char_poly(build_lattice(a)); }

}  // namespace freearr
