#pragma once

#include <string>

#include "hopfk/algebra.hpp"
#include "hopfk/comodule.hpp"
#include "hopfk/report.hpp"

namespace hopfk {

// One algebra with two Hopf coalgebra structures: (m, 1, Delta, eps, S) and
// (m, 1, Delta', eps, T). The counits are equal, so only one is stored.
struct BraceData {
    std::string name;
    HopfData first;
    StructureMap delta_prime;
    StructureMap T;

    std::uint32_t dim() const { return first.dim(); }
    const Labels& labels() const { return first.labels(); }
    const FieldSpec& field() const { return first.field(); }
    const StructureMap& m() const { return first.m(); }
    const StructureMap& delta() const { return first.delta(); }
    const StructureMap& eps() const { return first.eps(); }
    const StructureMap& S() const { return first.S(); }
    // (m, 1, Delta', eps, T) as Hopf data.
    HopfData second() const;
};

// Same algebra as h with another comultiplication, counit and antipode.
HopfData with_coalgebra(const HopfData& h, std::string name, StructureMap comult, StructureMap counit, StructureMap antipode);

// Both Hopf checks, equal algebras, equal counits and the compatibility
// h1' (x) h2'1 (x) h2'2 = h11' S(h2) h31' (x) h12' (x) h32'.
CheckReport check_brace(const HopfData& first, const HopfData& second);
CheckReport check_brace(const BraceData& b);
// The compatibility identity alone.
CheckReport check_brace_compatibility(const HopfData& first, const HopfData& second);

// Checked constructor. Throws CounitMismatch, SignatureMismatch or
// BraceCheckFailed.
BraceData make_brace(std::string name, const HopfData& first, const HopfData& second);
// No checks beyond shape and counit equality.
BraceData unchecked_brace(std::string name, const HopfData& first, const HopfData& second);

BraceData trivial_brace(const HopfData& h);
// (H, Delta, Delta^cop). Throws SingularAntipode, BraceCheckFailed.
BraceData cop_brace(const HopfData& h);
// (H, Delta^cop, Delta).
BraceData cop_brace_reversed(const HopfData& h);

bool is_commutative(const BraceData& b);

// rho(h) = S(h1) h21' (x) h22'.
CoactionData rho_coaction(const BraceData& b);
// phi(a) = T(a1')(-1) a2' (x) T(a1')(0) a3'. Throws NotCommutative.
CoactionData phi_coaction(const BraceData& b);
// c(x (x) y) = x(-1) y[0] (x) x(0) y[1]. Throws NotCommutative.
StructureMap braid_operator(const BraceData& b);
// gamma(x (x) y) = x y(-1) (x) y(0) and its inverse x T(y(-1)) (x) y(0).
StructureMap gamma_map(const BraceData& b);
StructureMap gamma_inverse(const BraceData& b);
// sigma(x (x) y) = y2 (x) x S(y1) y3.
StructureMap sigma_map(const HopfData& h);
StructureMap flip_map(std::uint32_t n);

// (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c).
CheckReport check_braid_equation(const StructureMap& c, const Labels& labels = {});
// Inverse of a 2 -> 2 map on V (x) V. Throws NotInvertible.
StructureMap invert_two_leg_map(const StructureMap& c);

// Identities every brace satisfies.
CheckReport check_lemma_s_split(const BraceData& b);       // S(h1)1' h2 (x) S(h1)2' = S(h1) h21' (x) S(h22')
CheckReport check_unit_split(const BraceData& b);          // h (x) 1 = h11' S(h2) h31' (x) h12' S(h32')
CheckReport check_second_from_rho(const BraceData& b);     // Delta'(h) = h1 h2(-1) (x) h2(0)
CheckReport check_first_from_rho(const BraceData& b);      // Delta(h) = h1' T(h2'(-1)) (x) h2'(0)
CheckReport check_rho_comodule_coalgebra(const BraceData& b);
// Commutative braces: rho left comodule algebra, phi right comodule algebra,
// (id (x) S)rho = rho S.
CheckReport check_commutative_coactions(const BraceData& b);
// gamma^-1 c gamma = sigma.
CheckReport check_gamma_conjugation(const BraceData& b);
// All of the above that apply.
CheckReport check_brace_invariants(const BraceData& b);

// R in H (x) H. r' R'1 (x) r'' R'2 (x) R'' = R' (x) r' R''1 (x) r'' R''2,
// eps(R')R'' = 1 = R' eps(R'').
CheckReport check_harrison_cocycle(const HopfData& h, const SparseVec& R);
// Conditions LC1 to LC5.
CheckReport check_long_copaired(const HopfData& h, const SparseVec& R);
// Delta_R(h) = R Delta(h) R^-1 and S^R(x) = R'S(R'')S(x)S(R'^-1)R''^-1.
// Throws HarrisonCheckFailed or NotAHopfAlgebra.
HopfData twist_comultiplication(const HopfData& h, const SparseVec& R);
// (H, Delta, Delta_R). Throws LongCheckFailed, BraceCheckFailed.
BraceData long_brace(const HopfData& h, const SparseVec& R);

// Table equality of both halves.
CheckReport compare_braces(const BraceData& a, const BraceData& b);

}  // namespace hopfk
