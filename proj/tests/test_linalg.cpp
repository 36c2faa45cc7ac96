#include <doctest.h>

#include "helpers.hpp"
#include "hopfk/bicrossed.hpp"
#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/linalg.hpp"
#include "hopfk/zoo.hpp"

using namespace hopfk;
using testutil::el;
using testutil::el2;
using testutil::q;

TEST_CASE("field parsing and arithmetic") {
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("Fp:5") == FieldSpec::prime(5));
    CHECK(FieldSpec::prime(7).name() == "Fp:7");
    CHECK_THROWS_AS(FieldSpec::prime(6), HopfError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), HopfError);

    const FieldSpec f5 = FieldSpec::prime(5);
    Scalar half = f5.from(mpq_class(1, 2));
    CHECK(half == f5.from(3L));
    CHECK((half + half).is_one());
    CHECK((f5.from(2L) * f5.from(3L)).is_one());
    CHECK_THROWS_AS(f5.zero().inverse(), HopfError);
    CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
    CHECK(q(-3, 4).str() == "-3/4");
}

TEST_CASE("flattening is row-major") {
    const Dims d{2, 3, 4};
    CHECK(flatten(d, Tuple{1, 2, 3}) == 1 * 12 + 2 * 4 + 3);
    CHECK(unflatten(d, 23) == Tuple{1, 2, 3});
    CHECK(volume(d) == 24);
}

TEST_CASE("sparse vectors drop zero coefficients") {
    SparseVec v({3});
    v.add(std::uint64_t(1), q(2));
    v.add(std::uint64_t(1), q(-2));
    CHECK(v.is_zero());
    CHECK(v.size() == 0);
}

TEST_CASE("compose") {
    const HopfData z3 = group_algebra(cyclic_group(3, "g"));
    const StructureMap& m = z3.m();
    SUBCASE("identity law") {
        CHECK(compose(StructureMap::identity({3}), m) == m);
        CHECK(compose(m, StructureMap::identity({3, 3})) == m);
    }
    SUBCASE("flip is an involution") {
        CHECK(compose(flip(3, 3), flip(3, 3)) == StructureMap::identity({3, 3}));
    }
    SUBCASE("g^3 = 1") {
        const StructureMap mm = compose(m, tensor(m, StructureMap::identity({3})));
        const auto g = z3.algebra.index_of("g");
        CHECK(mm.at(Tuple{g, g, g}) == z3.unit());
    }
    SUBCASE("signature mismatch") {
        CHECK_THROWS_AS(compose(m, m), HopfError);
    }
}

TEST_CASE("tensor of maps") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    const HopfData z3 = group_algebra(cyclic_group(3, "g"));
    SUBCASE("counit law through tensor(id, eps)") {
        const StructureMap f = compose(tensor(StructureMap::identity({2}), z2.eps()), z2.delta());
        CHECK(f == StructureMap::identity({2}));
    }
    SUBCASE("antipode law through tensor(S, id)") {
        const StructureMap f = compose(z3.m(), compose(tensor(z3.S(), StructureMap::identity({3})), z3.delta()));
        CHECK(f(el(z3, {{"g", q(1)}})) == z3.unit());
    }
    SUBCASE("dims multiply") {
        const StructureMap t = tensor(z2.delta(), z3.m());
        CHECK(t.in_dims() == Dims{2, 3, 3});
        CHECK(t.out_dims() == Dims{2, 2, 3});
    }
}

TEST_CASE("leg permutations") {
    const HopfData h4 = sweedler_h4();
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    const StructureMap tau = leg_permute({4, 2}, {1, 0});
    CHECK(tau.in_dims() == Dims{4, 2});
    CHECK(tau.out_dims() == Dims{2, 4});
    CHECK(tau(el2(h4, z2, {{"x", "a", q(1)}})) == el2(z2, h4, {{"a", "x", q(1)}}));
    CHECK(leg_permute({4, 2}, {0, 1}) == StructureMap::identity({4, 2}));
    CHECK(compose(leg_permute({2, 4}, {1, 0}), tau) == StructureMap::identity({4, 2}));
    CHECK_THROWS_AS(leg_permute({2, 2}, {0, 0}), HopfError);
}

TEST_CASE("solve_linear") {
    const Matrix I = Matrix::identity(3);
    std::vector<Scalar> b{q(1), q(-2), q(1, 3)};
    CHECK(solve_linear(I, b) == b);

    Matrix A(2, 2);
    A.at(0, 0) = q(1);
    A.at(0, 1) = q(1);
    A.at(1, 0) = q(2);
    A.at(1, 1) = q(2);
    CHECK_FALSE(solve_linear(A, std::vector<Scalar>{q(1), q(3)}).has_value());
    CHECK(rank(A) == 1);
    CHECK_FALSE(inverse(A).has_value());

    Matrix B(2, 2);
    B.at(0, 0) = q(2);
    B.at(0, 1) = q(1);
    B.at(1, 0) = q(1);
    B.at(1, 1) = q(1);
    const auto Binv = inverse(B);
    REQUIRE(Binv.has_value());
    CHECK(B * *Binv == Matrix::identity(2));
}

TEST_CASE("antipode system of kZ3 forces S(g) = g^2") {
    HopfData b = group_algebra(cyclic_group(3, "g"));
    b.antipode = StructureMap({3}, {3});
    const auto S = solve_antipode(b);
    REQUIRE(S.has_value());
    CHECK(testutil::at(*S, b, "g") == el(b, {{"g2", q(1)}}));
}

TEST_CASE("invert_element") {
    const HopfData h4 = sweedler_h4();
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    SUBCASE("unit") {
        CHECK(invert_element(h4.algebra, h4.unit()) == h4.unit());
    }
    SUBCASE("R in H4 (x) kZ2 is its own inverse") {
        const SparseVec R = h4_z2_rmatrix(FieldSpec::rationals());
        CHECK(R == el2(h4, z2, {{"1", "1", q(1, 2)}, {"1", "a", q(1, 2)}, {"g", "1", q(1, 2)}, {"g", "a", q(-1, 2)}}));
        CHECK(invert_element(tensor_algebra(h4.algebra, z2.algebra), reshape(R, {8})) == reshape(R, {8}));
    }
    SUBCASE("canonical element of kZ2 has inverse sum S^-1(h_i) (x) h_i*") {
        const HopfData Hop = opposite(z2);
        const HopfData D = dual_hopf(z2);
        const SparseVec R = canonical_element(z2);
        CHECK(R == el2(Hop, D, {{"1", "f_1", q(1)}, {"a", "f_a", q(1)}}));
        // S^-1(a) = a in kZ2, so the inverse coincides with R
        CHECK(invert_element(tensor_algebra(Hop.algebra, D.algebra), reshape(R, {4})) == reshape(R, {4}));
    }
    SUBCASE("non-invertible element") {
        CHECK_THROWS_AS(invert_element(h4.algebra, el(h4, {{"x", q(1)}})), HopfError);
    }
}

TEST_CASE("inverse_map") {
    const HopfData h4 = sweedler_h4();
    const StructureMap Sinv = inverse_map(h4.S());
    CHECK(compose(h4.S(), Sinv) == StructureMap::identity({4}));
    CHECK(testutil::at(Sinv, h4, "x") == el(h4, {{"gx", q(-1)}}));
    CHECK_THROWS_AS(inverse_map(StructureMap({2}, {2})), HopfError);
}
