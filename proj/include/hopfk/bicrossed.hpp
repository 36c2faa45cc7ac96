#pragma once

#include <optional>

#include "hopfk/brace.hpp"
#include "hopfk/matched.hpp"

namespace hopfk {

// Hopf structure on the tensor algebra A (x) H, basis index a * dim(H) + h.
struct BicrossedData {
    HopfData result;  // comultiplication delta_tilde, antipode s_tilde
    MatchedPairData provenance;
    StructureMap delta_tilde;
    StructureMap s_tilde;
    StructureMap delta_hat;                  // tensor coalgebra
    std::optional<StructureMap> delta_bar;   // smash coproduct, when one is used
};

// Delta~(a (x) h) = a1 (x) a2(-1) h1[0] (x) a2(0) h1[1] (x) h2,
// S~(a (x) h) = S(h[1])S(a(0)) (x) S(h[0])S(a(-1)). Throws MatchedCheckFailed.
BicrossedData bicrossed_coproduct(const MatchedPairData& mp);
// Same tables without checking the matched pair.
BicrossedData bicrossed_unchecked(const MatchedPairData& mp);

// Delta-(a (x) h) = a1 (x) a2(-1) h1 (x) a2(0) (x) h2 for a left H-comodule
// bialgebra (A, rho). Throws ComoduleBialgebraCheckFailed.
HopfData smash_coproduct(const HopfData& A, const HopfData& H, const StructureMap& rho);
HopfData smash_unchecked(const HopfData& A, const HopfData& H, const StructureMap& rho);

// phi: H -> H (x) A. h[0] (x) h[1]1 (x) h[1]2 = h1[0] S(h2) h3[0] (x) h1[1] (x) h3[1],
// with the comultiplication of A.
CheckReport check_phi_splitting(const HopfData& H, const HopfData& A, const StructureMap& phi);

// Candidate brace on A_Delta' (x) H with first comultiplication the tensor
// one (Delta (x) Delta_H) and second the bicrossed one. mp must have A equal
// to the second half of braceA.
std::pair<HopfData, HopfData> tensor_bicrossed_candidate(const BraceData& braceA, const HopfData& H, const MatchedPairData& mp);
// Checked version. Throws HypothesisFailed (naming the hypothesis) or
// Eq41Failed.
BraceData tensor_bicrossed_brace(const BraceData& braceA, const HopfData& H, const MatchedPairData& mp);

// rho, rho': A -> H (x) A, braceH = (H, Delta, Delta').
// a(-1)' (x) a(0)'(-1) (x) a(0)'(0) = a(-1)11' S(a(-1)2) a(0)(-1)' (x) a(-1)12' (x) a(0)(0)'.
CheckReport check_rho_prime_splitting(const HopfData& A, const BraceData& braceH, const StructureMap& rho,
                                      const StructureMap& rho_prime);
// h1' (x) h2'[0] (x) h2'[1] = h1[0]11' S(h1[0]2) h1[1](-1)' h2 (x) h1[0]12' (x) h1[1](0)'.
CheckReport check_phi_rho_prime_splitting(const HopfData& A, const BraceData& braceH, const StructureMap& phi,
                                          const StructureMap& rho_prime);
// h1[0] (x) h2 (x) h1[1] = h1[0] (x) h1[1](-1)' h2 (x) h1[1](0)'. For
// commutative H also evaluates the previous identity with (H, Delta, Delta^cop)
// and fails if the two verdicts disagree.
CheckReport check_phi_rho_prime_reduced(const HopfData& H, const HopfData& A, const StructureMap& phi,
                                        const StructureMap& rho_prime);

// Candidate brace on A (x) H with first comultiplication the bicrossed one and
// second the smash coproduct over H_Delta'.
std::pair<HopfData, HopfData> bicrossed_smash_candidate(const HopfData& A, const BraceData& braceH, const MatchedPairData& mp,
                                                        const StructureMap& rho_prime);
// Checked version. Throws HypothesisFailed, Eq42Failed, Eq43Failed.
BraceData bicrossed_smash_brace(const HopfData& A, const BraceData& braceH, const MatchedPairData& mp,
                                const StructureMap& rho_prime);

// R = sum h_i (x) h_i* in H^op (x) H*.
SparseVec canonical_element(const HopfData& H);
// x1 (x) h_i* f1 h_j* (x) S^-1(h_j) x2 h_i (x) f2 on H^op (x) H*. The product
// in the third leg is that of H^op when op_product is set, else that of H
// (the one that matches Delta~).
StructureMap double_dual_closed_formula(const HopfData& H, bool op_product);

struct DoubleDualResult {
    BraceData brace;          // (Delta~, Delta^)
    BicrossedData bicrossed;  // H^op >< H*
    SparseVec R;
    CheckReport closed_formula;  // comparison of Delta~ with the closed formula
    // Brace check of (Delta~, Delta^) with H* carrying its own comultiplication
    // instead of the co-opposite one. Fails for noncommutative H.
    CheckReport plain_dual;
};
// (Delta~, Delta^) on H^op >< H*, where Delta^ is the tensor coalgebra of H^op
// and H*^cop. Throws NotCocommutative, SingularAntipode, BraceCheckFailed.
DoubleDualResult drinfeld_double_dual(const HopfData& H);

// R = (1 (x) 1 + 1 (x) a + g (x) 1 - g (x) a)/2 in H4 (x) kZ2.
SparseVec h4_z2_rmatrix(const FieldSpec& field);
// (H4 >< kZ2, Delta~, Delta^). Throws CharacteristicTwo.
BraceData h4_z2_brace(const FieldSpec& field = FieldSpec::rationals());

}  // namespace hopfk
