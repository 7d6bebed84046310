#pragma once

// Shared builders for the test suites.

#include <numeric>
#include <random>
#include <vector>

#include "freearr/arrangement.hpp"

namespace freearr::testsupport {

inline Arrangement boolean_arrangement(size_t n) {
    std::vector<Hyperplane> hs;
    for (size_t i = 0; i < n; ++i) {
        IntVec v(n, 0);
        v[i] = 1;
        hs.emplace_back(v);
    }
    return Arrangement(n, hs);
}

// {x, y, x+y}
inline Arrangement weyl_a2() {
    return Arrangement(2, {Hyperplane{{1, 0}}, Hyperplane{{0, 1}}, Hyperplane{{1, 1}}});
}

// {x, x-z, z} with z the cone coordinate
inline Arrangement shi1_a1() {
    Arrangement a(2, {Hyperplane{{1, 0}}, Hyperplane{{1, -1}}, Hyperplane{{0, 1}}});
    a.set_vars({"x1", "z"});
    return a;
}

// {x, x-z, x+z, z}
inline Arrangement cat1_a1() {
    return shi1_a1().with(Hyperplane{{1, 1}});
}

inline Arrangement random_arrangement(std::mt19937& rng, size_t dim, size_t max_planes) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<size_t> count(1, max_planes);
    std::vector<Hyperplane> hs;
    size_t want = count(rng);
    int guard = 0;
    while (hs.size() < want && guard++ < 200) {
        IntVec v(dim);
        for (auto& x : v) x = coeff(rng);
        if (is_zero_vec(v)) continue;
        hs.emplace_back(v);
    }
    return Arrangement(dim, hs);
}

// apply a coordinate permutation to every normal
inline Arrangement permute_coordinates(const Arrangement& a, const std::vector<size_t>& perm) {
    std::vector<Hyperplane> hs;
    for (const Hyperplane& h : a.planes()) {
        IntVec v(h.normal.size());
        for (size_t i = 0; i < v.size(); ++i) v[perm[i]] = h.normal[i];
        hs.emplace_back(v);
    }
    return Arrangement(a.dim(), hs);
}

}  // namespace freearr::testsupport
