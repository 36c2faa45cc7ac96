#pragma once

#include "hopfk/brace.hpp"

namespace hopfk {

// An algebra isomorphism pi: A -> H with A a left H-comodule coalgebra via
// rho: A -> H (x) A, such that pi(a)1 (x) pi(a)2 = pi(a1)a2(-1) (x) pi(a2(0)).
struct CocycleData {
    std::string name;
    HopfData A;
    HopfData H;
    StructureMap pi;   // {dimA} -> {dimH}
    StructureMap rho;  // {dimA} -> {dimH, dimA}
};

CheckReport check_cocycle(const CocycleData& c);
// eps_H pi = eps_A, a consequence of the cocycle identity.
CheckReport check_cocycle_counit(const CocycleData& c);

// pi = id: A_Delta -> A_Delta', rho from the brace.
CocycleData brace_to_cocycle(const BraceData& b);
// Delta'(a) = pi^-1(pi(a)1) (x) pi^-1(pi(a)2), T = pi^-1 S pi. Throws
// CocycleCheckFailed, NotInvertible.
BraceData cocycle_to_brace(const CocycleData& c);

// Morphism (f, g) from eta: B -> K to pi: A -> H, with f: K -> H and
// g: B -> A.
struct CocycleMorphism {
    StructureMap f;
    StructureMap g;
};

// f and g Hopf maps, pi g = f eta, g(b)(-1) (x) g(b)(0) = f(b(-1)) (x) g(b(0)).
CheckReport check_cocycle_morphism(const CocycleMorphism& mor, const CocycleData& src, const CocycleData& dst);

// Multiplicative, unital, comultiplicative, counital, commutes with antipodes.
CheckReport check_hopf_map(const StructureMap& f, const HopfData& from, const HopfData& to);

// Table equality of A, H, pi and rho.
CheckReport compare_cocycles(const CocycleData& a, const CocycleData& b);

}  // namespace hopfk
