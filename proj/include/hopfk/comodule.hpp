#pragma once

#include "hopfk/algebra.hpp"
#include "hopfk/report.hpp"

namespace hopfk {

enum class Side { left, right };

// A coaction of a Hopf algebra C on a space V: left V -> C (x) V, right
// V -> V (x) C.
struct CoactionData {
    Side side = Side::left;
    StructureMap map;
};

// rho: A -> H (x) A. (Delta_H (x) id)rho = (id (x) rho)rho, (eps (x) id)rho = id.
CheckReport check_left_comodule(const HopfData& H, const Labels& A_labels, const StructureMap& rho);
// Comodule plus rho(ab) = rho(a)rho(b), rho(1) = 1 (x) 1.
CheckReport check_left_comodule_algebra(const HopfData& H, const AlgebraData& A, const StructureMap& rho);
// Comodule plus a(-1) (x) a(0)1 (x) a(0)2 = a1(-1)a2(-1) (x) a1(0) (x) a2(0)
// and a(-1)eps(a(0)) = eps(a)1. Uses the coalgebra of A.
CheckReport check_left_comodule_coalgebra(const HopfData& H, const HopfData& A, const StructureMap& rho);
CheckReport check_left_comodule_bialgebra(const HopfData& H, const HopfData& A, const StructureMap& rho);

// phi: V -> V (x) C. (phi (x) id)phi = (id (x) Delta_C)phi, (id (x) eps)phi = id.
CheckReport check_right_comodule(const HopfData& C, const Labels& V_labels, const StructureMap& phi);
CheckReport check_right_comodule_algebra(const HopfData& C, const AlgebraData& V, const StructureMap& phi);

// Leg-by-leg product of two elements of A1 (x) ... (x) An, one
// multiplication per leg.
SparseVec legwise_product(const std::vector<const StructureMap*>& mults, const SparseVec& u, const SparseVec& v);
// Inserts a leg holding `unit` at position pos.
SparseVec insert_leg(const SparseVec& x, std::size_t pos, const SparseVec& unit);

// Trivial coactions a -> 1 (x) a and h -> h (x) 1.
StructureMap trivial_left_coaction(const HopfData& H, std::uint32_t dimA);
StructureMap trivial_right_coaction(std::uint32_t dimV, const HopfData& C);

// Z2-grading by the eigenspaces of an involution theta of A:
// a -> (1 (x) (a + theta a) + g (x) (a - theta a))/2, with kZ2 = {1, g}.
// Throws CharacteristicTwo.
StructureMap involution_coaction(const HopfData& kZ2, const StructureMap& theta);

}  // namespace hopfk
