#pragma once

#include "hopfk/brace.hpp"

namespace hopfk {

// Hopf algebras A, H with rho: A -> H (x) A (left H-comodule algebra) and
// phi: H -> H (x) A (right A-comodule algebra).
struct MatchedPairData {
    std::string name;
    HopfData A;
    HopfData H;
    StructureMap rho;  // {dimA} -> {dimH, dimA}
    StructureMap phi;  // {dimH} -> {dimH, dimA}
    // "A,H" when built in these roles; "H,A" when built from an R-matrix in
    // H (x) A, whose H plays the role of A here.
    std::string source_order = "A,H";
};

// Comodule-algebra axioms on both sides and HM1 to HM4.
CheckReport check_matched_pair(const MatchedPairData& mp);
// HM4 alone: h[0]a(-1) (x) h[1]a(0) = a(-1)h[0] (x) a(0)h[1].
CheckReport check_hm4(const MatchedPairData& mp);

// Invertible R in H (x) A with inverse R_inv.
struct WeakRMatrix {
    SparseVec R;
    SparseVec R_inv;
};

// Invertibility, (Delta (x) id)R = R' (x) r' (x) R''r'',
// (id (x) Delta)R = R'r' (x) r'' (x) R''.
CheckReport check_weak_rmatrix(const HopfData& H, const HopfData& A, const SparseVec& R);
// Inverts R in the tensor algebra H (x) A. Throws NotInvertible.
WeakRMatrix make_weak_rmatrix(const HopfData& H, const HopfData& A, const SparseVec& R);

// rho(h) = tau(R)(1 (x) h)tau(R^-1), phi(a) = tau(R)(a (x) 1)tau(R^-1), emitted
// with this H in the A role and this A in the H role. Throws
// RMatrixCheckFailed.
MatchedPairData matched_from_rmatrix(const HopfData& H, const HopfData& A, const SparseVec& R);

// Commutative brace -> the pair (A_Delta', A_Delta') with rho and phi from the
// brace. Throws NotCommutative, BraceCheckFailed.
MatchedPairData brace_to_matched(const BraceData& b);
// Delta'(a) = a1'(-1) a2'[0] (x) a1'(0) a2'[1], where ' is the
// comultiplication of A. Throws RolesDiffer when A and H differ.
CheckReport check_second_from_coactions(const MatchedPairData& mp);
// Delta(a) = a1' T(a2'(-1)) (x) a2'(0), S(a) = a(-1) T(a(0)); the result
// has the constructed Delta first. Throws NotCommutative, RolesDiffer,
// MatchedCheckFailed, Eq31Failed, BraceCheckFailed.
BraceData matched_to_brace(const MatchedPairData& mp);

// Identities of a brace built from a matched pair:
// Delta'(a) = a1 a2(-1) (x) a2(0),
// a(-1) (x) a(0)1 (x) a(0)2 = a1(-1)a2(-1) (x) a1(0) (x) a2(0),
// rho(a) = S(a1) a21' (x) a22'.
CheckReport check_constructed_brace(const BraceData& b, const MatchedPairData& mp);

CheckReport compare_matched(const MatchedPairData& a, const MatchedPairData& b);

MatchedPairData trivial_matched_pair(const HopfData& A, const HopfData& H);

}  // namespace hopfk
