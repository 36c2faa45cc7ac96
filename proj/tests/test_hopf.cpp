#include <doctest.h>

#include "helpers.hpp"
#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/zoo.hpp"
#include "oracle.hpp"

using namespace hopfk;
using testutil::el;
using testutil::el2;
using testutil::q;
using testutil::require_pass;

namespace {

// Monoid algebra of the 16 2x2 matrices over F2 under matrix product, with
// every element group-like. A bialgebra whose non-invertible elements leave
// no antipode.
HopfData matrix_monoid_bialgebra() {
    auto prod = [](unsigned a, unsigned b) {
        // bits: a11 a12 a21 a22 from high to low
        auto e = [](unsigned m, int i, int j) { return (m >> (3 - (2 * i + j))) & 1u; };
        unsigned r = 0;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                unsigned v = (e(a, i, 0) & e(b, 0, j)) ^ (e(a, i, 1) & e(b, 1, j));
                r |= v << (3 - (2 * i + j));
            }
        }
        return r;
    };
    HopfData h;
    h.name = "M2(F2) monoid";
    h.algebra.dim = 16;
    for (unsigned i = 0; i < 16; ++i) h.algebra.labels.push_back("m" + std::to_string(i));
    h.algebra.mult = StructureMap({16, 16}, {16});
    h.coalgebra.comult = StructureMap({16}, {16, 16});
    h.coalgebra.counit = StructureMap({16}, {});
    for (unsigned i = 0; i < 16; ++i) {
        for (unsigned j = 0; j < 16; ++j) h.algebra.mult.set(Tuple{i, j}, SparseVec::basis({16}, prod(i, j)));
        h.coalgebra.comult.set(std::uint64_t(i), SparseVec::basis({16, 16}, Tuple{i, i}));
        h.coalgebra.counit.set(std::uint64_t(i), SparseVec::scalar(q(1)));
    }
    h.algebra.unit = SparseVec::basis({16}, 0b1001);
    h.antipode = StructureMap({16}, {16});
    return h;
}

std::vector<HopfData> base_objects() {
    return {sweedler_h4(),
            group_algebra(cyclic_group(2, "a")),
            group_algebra(cyclic_group(3, "g")),
            group_algebra(klein_group()),
            group_algebra(symmetric_group3()),
            group_algebra(dihedral_group4())};
}

}  // namespace

TEST_CASE("check_algebra") {
    require_pass(check_algebra(group_algebra(cyclic_group(3, "g")).algebra));
    const HopfData h4 = sweedler_h4();
    require_pass(check_algebra(h4.algebra));
    CHECK(h4.algebra.product(el(h4, {{"x", q(1)}}), el(h4, {{"g", q(1)}})) == el(h4, {{"gx", q(-1)}}));

    SUBCASE("xg = +gx keeps associativity but breaks the bialgebra") {
        HopfData bad = h4;
        const auto x = bad.algebra.index_of("x"), g = bad.algebra.index_of("g"), gx = bad.algebra.index_of("gx");
        bad.algebra.mult.set(Tuple{x, g}, el(bad, {{"gx", q(1)}}));
        bad.algebra.mult.set(Tuple{gx, g}, el(bad, {{"x", q(1)}}));
        bad.algebra.mult.set(Tuple{x, gx}, SparseVec({4}));
        bad.algebra.mult.set(Tuple{gx, x}, SparseVec({4}));
        require_pass(check_algebra(bad.algebra));
        const CheckReport r = check_bialgebra(bad);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.residual.is_zero());
    }
    SUBCASE("non-associative 2-dim table") {
        AlgebraData a = group_algebra(cyclic_group(2, "a")).algebra;
        // a*1 = 1: (a*1)*a = a but a*(1*a) = 1
        a.mult.set(Tuple{1, 0}, SparseVec::basis({2}, 0));
        const CheckReport r = check_algebra(a);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.witness_labels.empty());
        CHECK_FALSE(r.residual.is_zero());
    }
}

TEST_CASE("check_hopf on H4 and kZ2") {
    const HopfData h4 = sweedler_h4();
    require_pass(check_coalgebra(h4));
    require_pass(check_bialgebra(h4));
    require_pass(check_hopf(h4));
    CHECK(testutil::at(h4.delta(), h4, "x") == el2(h4, h4, {{"x", "g", q(1)}, {"1", "x", q(1)}}));
    CHECK(testutil::at(h4.eps(), h4, "x").is_zero());
    CHECK(testutil::at(h4.S(), h4, "x") == el(h4, {{"gx", q(1)}}));
    require_pass(check_hopf(group_algebra(cyclic_group(2, "a"))));
}

TEST_CASE("S(x) = x fails at x") {
    HopfData bad = sweedler_h4();
    bad.antipode.set(std::uint64_t(bad.algebra.index_of("x")), el(bad, {{"x", q(1)}}));
    const CheckReport r = check_hopf(bad);
    CHECK_FALSE(r.pass);
    CHECK(r.witness_labels == std::vector<std::string>{"x"});
    // m(S (x) id)Delta(x) = S(x)g + S(1)x = xg + x = x - gx
    CHECK(r.residual == el(bad, {{"x", q(1)}, {"gx", q(-1)}}));
    CHECK(oracle::hopf_failure(oracle::read(bad)) == "antipode");
}

TEST_CASE("solve_antipode") {
    HopfData h4 = sweedler_h4();
    const StructureMap expected = h4.antipode;
    h4.antipode = StructureMap({4}, {4});
    const auto S = solve_antipode(h4);
    REQUIRE(S.has_value());
    CHECK(*S == expected);
    CHECK(testutil::at(*S, h4, "g") == el(h4, {{"g", q(1)}}));
    CHECK(testutil::at(*S, h4, "x") == el(h4, {{"gx", q(1)}}));

    const HopfData M = matrix_monoid_bialgebra();
    require_pass(check_bialgebra(M));
    CHECK_FALSE(solve_antipode(M).has_value());
}

TEST_CASE("dual_hopf") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    const HopfData d = dual_hopf(z2);
    require_pass(check_hopf(d));
    // k^{Z2} is commutative and cocommutative, like kZ2
    CHECK(is_commutative(d.algebra));
    CHECK(is_cocommutative(d));

    const HopfData ds3 = dual_hopf(group_algebra(symmetric_group3()));
    CHECK(is_commutative(ds3.algebra));
    CHECK_FALSE(is_cocommutative(ds3));

    const HopfData h4 = sweedler_h4();
    const HopfData dd = dual_hopf(dual_hopf(h4));
    // the double dual in the dual basis of the dual basis has the same tables
    require_pass(compare_hopf_tables(dd, h4));
}

TEST_CASE("opposite and co_opposite") {
    const HopfData z3 = group_algebra(cyclic_group(3, "g"));
    CHECK(same_tables(opposite(z3), z3));
    const HopfData s3 = group_algebra(symmetric_group3());
    CHECK(same_tables(co_opposite(s3), s3));
    CHECK_FALSE(same_tables(opposite(s3), s3));

    const HopfData h4 = sweedler_h4();
    const HopfData c = co_opposite(h4);
    require_pass(check_hopf(c));
    CHECK(testutil::at(c.delta(), c, "x") == el2(c, c, {{"g", "x", q(1)}, {"x", "1", q(1)}}));
    CHECK(testutil::at(c.S(), c, "x") == el(c, {{"gx", q(-1)}}));
}

TEST_CASE("tensor_hopf") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    const HopfData zz = tensor_hopf(z2, z2);
    require_pass(check_hopf(zz));
    CHECK(zz.labels() == Labels{"1|1", "1|a", "a|1", "a|a"});
    // kZ2 (x) kZ2 ~ k(Z2 x Z2): both are group algebras of a group of exponent 2
    const HopfData k = group_algebra(klein_group());
    for (std::uint32_t i = 0; i < 4; ++i) CHECK(zz.m().at(Tuple{i, i}) == zz.unit());
    CHECK(is_commutative(zz.algebra) == is_commutative(k.algebra));

    const HopfData h = tensor_hopf(sweedler_h4(), z2);
    CHECK(h.dim() == 8);
    require_pass(check_hopf(h));
    for (std::uint32_t i = 0; i < 8; ++i) {
        const Scalar e = h.eps().at(std::uint64_t(i)).as_scalar();
        const Scalar ea = sweedler_h4().eps().at(std::uint64_t(i / 2)).as_scalar();
        const Scalar eb = z2.eps().at(std::uint64_t(i % 2)).as_scalar();
        CHECK(e == ea * eb);
    }
}

TEST_CASE("group algebras") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    CHECK(z2.labels() == Labels{"1", "a"});
    const HopfData s3 = group_algebra(symmetric_group3());
    CHECK(s3.dim() == 6);
    CHECK_FALSE(is_commutative(s3.algebra));
    CHECK(is_cocommutative(s3));

    GroupTable notgroup = cyclic_group(2, "a");
    notgroup.mult[1][1] = 1;
    CHECK_THROWS_AS(group_algebra(notgroup), HopfError);
    CHECK_THROWS_AS(sweedler_h4(FieldSpec::prime(2)), HopfError);
}

TEST_CASE("oracle agrees on every base object and its duals, opposites and co-opposites") {
    for (const HopfData& h : base_objects()) {
        for (const HopfData& v : {h, dual_hopf(h), opposite(h), co_opposite(h)}) {
            INFO(v.name);
            CHECK(oracle::hopf_failure(oracle::read(v)).empty());
            CHECK(check_hopf(v).pass);
        }
    }
}

TEST_CASE("Hopf objects over F5") {
    ZooOptions o;
    o.field = FieldSpec::prime(5);
    for (const auto& n : zoo_names(ZooKind::hopf, o)) {
        INFO(n);
        CHECK(check_hopf(zoo_hopf(n, o)).pass);
    }
}
