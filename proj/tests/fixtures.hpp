#pragma once

#include <cstdint>
#include <vector>

#include "hopfk/comodule.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/matched.hpp"

// Small matched pairs over k(Z2 x Z2) used by the bicrossed tests and the
// acceptance suite.
namespace fixtures {

using namespace hopfk;

// Automorphism of k(Z2 x Z2) permuting the basis {1, a, b, ab}.
inline StructureMap basis_permutation(const std::vector<std::uint32_t>& p) {
    StructureMap t({4}, {4});
    for (std::uint32_t i = 0; i < 4; ++i) t.set(i, SparseVec::basis({4}, p[i]));
    return t;
}

// A = k(Z2 x Z2) graded over kZ2 by the swap a <-> b, trivial phi.
inline MatchedPairData klein_pair() {
    MatchedPairData mp;
    mp.name = "klein-swap";
    mp.A = group_algebra(klein_group());
    mp.H = group_algebra(cyclic_group(2, "a"));
    mp.rho = involution_coaction(mp.H, basis_permutation({0, 2, 1, 3}));
    mp.phi = trivial_right_coaction(2, mp.A);
    return mp;
}

// Grading by b <-> ab, which does not commute with the swap a <-> b.
inline StructureMap klein_twisted_grading() {
    return involution_coaction(group_algebra(cyclic_group(2, "a")), basis_permutation({0, 1, 3, 2}));
}

// H = k(Z2 x Z2), A = its dual; phi from the action of Z2 x Z2 on itself where
// the elements with an a-component swap a <-> b. rho is trivial.
inline MatchedPairData klein_action_pair() {
    MatchedPairData mp;
    mp.name = "klein-swap-action";
    mp.H = group_algebra(klein_group());
    mp.A = dual_hopf(mp.H);
    mp.rho = trivial_left_coaction(mp.H, 4);
    mp.phi = StructureMap({4}, {4, 4});
    for (std::uint32_t h = 0; h < 4; ++h) {
        SparseVec v({4, 4});
        for (std::uint32_t g = 0; g < 4; ++g) v.add(Tuple{(g & 1) ? ((h & 1) << 1) | (h >> 1) : h, g}, Scalar(1));
        mp.phi.set(h, v);
    }
    return mp;
}

// Grading of k^(Z2 x Z2) by f_a <-> f_b, pushed into k(Z2 x Z2) along 1, a.
inline StructureMap klein_dual_grading() {
    const StructureMap r = involution_coaction(group_algebra(cyclic_group(2, "a")), basis_permutation({0, 2, 1, 3}));
    StructureMap out({4}, {4, 4});
    for (std::uint32_t i = 0; i < 4; ++i) {
        SparseVec v({4, 4});
        for (const auto& [idx, c] : r.at(std::uint64_t(i)).entries()) v.add(unflatten({2, 4}, idx), c);
        out.set(i, v);
    }
    return out;
}

}  // namespace fixtures
