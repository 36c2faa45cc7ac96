#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfk/algebra.hpp"
#include "hopfk/report.hpp"

namespace hopfk {

CheckReport check_algebra(const AlgebraData& a);
CheckReport check_coalgebra(const Labels& labels, const CoalgebraData& c);
CheckReport check_coalgebra(const HopfData& h);
// Algebra + coalgebra + Delta and epsilon multiplicative and unital.
CheckReport check_bialgebra(const HopfData& b);
// Both antipode identities m(S (x) id)Delta = u eps = m(id (x) S)Delta.
CheckReport check_antipode(const HopfData& h);
CheckReport check_hopf(const HopfData& h);

// Convolution inverse of the identity, found by solving
// m(S (x) id)Delta = u eps and then checking the other side. The supplied
// antipode of b is ignored. Throws NotAHopfAlgebra for a one-sided inverse.
std::optional<StructureMap> solve_antipode(const HopfData& b);

// Pairing <fg, h> = <f (x) g, Delta h> and <Delta f, x (x) y> = <f, xy>.
HopfData dual_hopf(const HopfData& h);
// Reversed multiplication, antipode S^-1. Throws SingularAntipode.
HopfData opposite(const HopfData& h);
// Reversed comultiplication, antipode S^-1. Throws SingularAntipode.
HopfData co_opposite(const HopfData& h);
// Componentwise structure on A (x) B, basis index a * dim(B) + b.
HopfData tensor_hopf(const HopfData& a, const HopfData& b);

struct GroupTable {
    std::string name;
    Labels labels;
    std::vector<std::vector<std::uint32_t>> mult;  // mult[i][j] = index of i*j
};

GroupTable cyclic_group(std::uint32_t n, const std::string& gen);
GroupTable klein_group();
GroupTable symmetric_group3();
GroupTable dihedral_group4();

// kG with Delta(g) = g (x) g, S(g) = g^-1. Throws NotAGroup.
HopfData group_algebra(const GroupTable& g, const FieldSpec& field = FieldSpec::rationals());
// Sweedler's 4-dimensional algebra: g^2 = 1, x^2 = 0, xg = -gx,
// Delta(x) = x (x) g + 1 (x) x, S(x) = gx. Throws CharacteristicTwo.
HopfData sweedler_h4(const FieldSpec& field = FieldSpec::rationals());

bool is_commutative(const AlgebraData& a);
bool is_cocommutative(const HopfData& h);

// Table equality of all structure maps (names are ignored).
bool same_tables(const HopfData& a, const HopfData& b);
CheckReport compare_hopf_tables(const HopfData& a, const HopfData& b);

// Flip of the two legs of a 2-leg space.
StructureMap flip(std::uint32_t d1, std::uint32_t d2);

// Rebuilds every table over another field. Throws FieldMismatch when a
// rational coefficient has a denominator divisible by the characteristic.
HopfData to_field(const HopfData& h, const FieldSpec& field);
SparseVec to_field(const SparseVec& v, const FieldSpec& field);
StructureMap to_field(const StructureMap& f, const FieldSpec& field);

// Leg label lists for reports.
LegLabels legs_of(const Labels& l, std::size_t n);

}  // namespace hopfk
