#include <doctest.h>

#include "helpers.hpp"
#include "hopfk/brace.hpp"
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

const FieldSpec Q = FieldSpec::rationals();

// Index of the first basis element where the oracle sees the brace identity
// fail, or -1.
int oracle_brace_witness(const HopfData& first, const HopfData& second) {
    const oracle::Tables D = oracle::read(first), P = oracle::read(second);
    for (int h = 0; h < D.n; ++h) {
        if (!oracle::brace_residual(D, P, h).empty()) return h;
    }
    return -1;
}

std::vector<oracle::Vec> table_of(const StructureMap& c) {
    std::vector<oracle::Vec> v;
    for (std::uint64_t i = 0; i < volume(c.in_dims()); ++i) v.push_back(oracle::from_sparse(c.at(i)));
    return v;
}

}  // namespace

TEST_CASE("check_brace on H4") {
    const HopfData h4 = sweedler_h4();
    require_pass(check_brace(trivial_brace(h4)));
    const BraceData cop = cop_brace(h4);
    require_pass(check_brace(cop));
    CHECK(testutil::at(cop.delta_prime, h4, "x") == el2(h4, h4, {{"g", "x", q(1)}, {"x", "1", q(1)}}));
    CHECK(oracle_brace_witness(cop.first, cop.second()) == -1);
}

TEST_CASE("H4 with the reindexed Klein comultiplication fails at x") {
    const HopfData h4 = sweedler_h4();
    const HopfData k = group_algebra(klein_group());
    const HopfData second = with_coalgebra(h4, "klein-reindexed", k.delta(), k.eps(), k.S());
    const CheckReport r = check_brace_compatibility(h4, second);
    CHECK_FALSE(r.pass);
    CHECK(r.witness_labels == std::vector<std::string>{"x"});
    CHECK_FALSE(r.residual.is_zero());
    CHECK(oracle_brace_witness(h4, second) == static_cast<int>(h4.algebra.index_of("x")));
    CHECK_THROWS_AS(make_brace("bad", h4, second), HopfError);
}

TEST_CASE("trivial and co-opposite braces") {
    require_pass(check_brace(trivial_brace(group_algebra(cyclic_group(3, "g")))));

    const HopfData ds3 = dual_hopf(group_algebra(symmetric_group3()));
    const BraceData b = cop_brace(ds3);
    require_pass(check_brace(b));
    CHECK(is_commutative(b));
    CHECK_FALSE(is_cocommutative(b.first));
    CHECK(oracle_brace_witness(b.first, b.second()) == -1);

    const HopfData s3 = group_algebra(symmetric_group3());
    require_pass(compare_braces(cop_brace(s3), trivial_brace(s3)));
}

TEST_CASE("rho coaction") {
    SUBCASE("trivial brace gives 1 (x) h") {
        const HopfData h4 = sweedler_h4();
        const CoactionData rho = rho_coaction(trivial_brace(h4));
        CHECK(rho.side == Side::left);
        for (std::uint32_t i = 0; i < 4; ++i) CHECK(rho.map.at(std::uint64_t(i)) == tensor(h4.unit(), h4.basis(i)));
    }
    SUBCASE("matches the composite (m (x) id)(S (x) id (x) id)(id (x) Delta')Delta") {
        const BraceData b = cop_brace(dual_hopf(group_algebra(symmetric_group3())));
        const std::uint32_t n = b.dim();
        const StructureMap id = StructureMap::identity({n});
        const StructureMap composite =
            compose(tensor(b.m(), id), compose(tensor(b.S(), tensor(id, id)), compose(tensor(id, b.delta_prime), b.delta())));
        CHECK(rho_coaction(b).map == composite);
    }
}

TEST_CASE("phi coaction") {
    SUBCASE("trivial brace on a commutative H gives a2 (x) S(a1)a3") {
        const HopfData z3 = group_algebra(cyclic_group(3, "g"));
        const CoactionData phi = phi_coaction(trivial_brace(z3));
        CHECK(phi.side == Side::right);
        // group-like a: a2 (x) S(a1)a3 = a (x) a^-1 a = a (x) 1
        for (std::uint32_t i = 0; i < 3; ++i) CHECK(phi.map.at(std::uint64_t(i)) == tensor(z3.basis(i), z3.unit()));
    }
    SUBCASE("cop_brace(dual kS3)") {
        const BraceData b = cop_brace(dual_hopf(group_algebra(symmetric_group3())));
        const CoactionData phi = phi_coaction(b);
        require_pass(check_right_comodule(b.second(), b.labels(), phi.map));
        CHECK(phi.map(b.first.unit()) == tensor(b.first.unit(), b.first.unit()));
    }
}

TEST_CASE("braid operator") {
    SUBCASE("trivial brace on kG with G abelian is the flip") {
        const HopfData k = group_algebra(klein_group());
        CHECK(braid_operator(trivial_brace(k)) == flip(4, 4));
    }
    SUBCASE("trivial brace on a commutative H is sigma") {
        const HopfData ds3 = dual_hopf(group_algebra(symmetric_group3()));
        CHECK(braid_operator(trivial_brace(ds3)) == sigma_map(ds3));
    }
    SUBCASE("cop_brace(dual kS3)") {
        const BraceData b = cop_brace(dual_hopf(group_algebra(symmetric_group3())));
        const StructureMap c = braid_operator(b);
        require_pass(check_braid_equation(c, b.labels()));
        CHECK(oracle::braid_failure(table_of(c), 6).empty());
        const StructureMap ci = invert_two_leg_map(c);
        CHECK(compose(c, ci) == StructureMap::identity({6, 6}));
        CHECK(compose(gamma_inverse(b), compose(c, gamma_map(b))) == sigma_map(b.first));
    }
}

TEST_CASE("gamma and sigma") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    CHECK(gamma_map(trivial_brace(z2)) == StructureMap::identity({2, 2}));
    CHECK(sigma_map(z2) == flip(2, 2));
    const BraceData b = cop_brace(dual_hopf(group_algebra(symmetric_group3())));
    CHECK(compose(gamma_map(b), gamma_inverse(b)) == StructureMap::identity({6, 6}));
    CHECK(compose(gamma_inverse(b), gamma_map(b)) == StructureMap::identity({6, 6}));
}

TEST_CASE("check_braid_equation") {
    require_pass(check_braid_equation(flip(3, 3)));
    // c(1 (x) 1) = 1 (x) a, identity elsewhere; fails at (1, 1, 1)
    StructureMap c = StructureMap::identity({2, 2});
    c.set(Tuple{0, 0}, SparseVec::basis({2, 2}, Tuple{0, 1}));
    const CheckReport r = check_braid_equation(c, Labels{"1", "a"});
    CHECK_FALSE(r.pass);
    CHECK(r.witness_labels == std::vector<std::string>{"1", "1", "1"});
    CHECK_FALSE(r.residual.is_zero());
    CHECK(oracle::braid_failure(table_of(c), 2) == oracle::Key{0, 0, 0});
}

TEST_CASE("Harrison cocycles") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    require_pass(check_harrison_cocycle(z2, el2(z2, z2, {{"1", "1", q(1)}})));
    require_pass(check_harrison_cocycle(z2, long_copairing_z2(Q)));
    const CheckReport r = check_harrison_cocycle(z2, el2(z2, z2, {{"1", "a", q(1)}}));
    CHECK_FALSE(r.pass);
    CHECK(r.failed_axiom.find("normal") != std::string::npos);
    CHECK_THROWS_AS(check_harrison_cocycle(z2, el2(z2, z2, {{"1", "1", q(1)}, {"a", "a", q(1)}})), HopfError);
}

TEST_CASE("Long copairings agree with the brute-force expansion") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    oracle::PermGroup pz2;
    pz2.elems = {{0, 1}, {1, 0}};
    pz2.labels = {"1", "a"};
    const SparseVec R0 = long_copairing_z2(Q);
    CHECK(R0 == el2(z2, z2, {{"1", "1", q(1, 2)}, {"1", "a", q(1, 2)}, {"a", "1", q(1, 2)}, {"a", "a", q(-1, 2)}}));
    CHECK(oracle::long_failure(pz2, oracle::from_sparse(R0)).empty());
    CHECK(oracle::gmul(pz2, oracle::from_sparse(R0), oracle::from_sparse(R0)) == oracle::Vec{{{0, 0}, 1}});
    require_pass(check_long_copaired(z2, R0));
    require_pass(check_long_copaired(z2, el2(z2, z2, {{"1", "1", q(1)}})));

    const HopfData d4 = group_algebra(dihedral_group4());
    const oracle::PermGroup pd4 = oracle::dihedral_perms(4);
    REQUIRE(pd4.labels == d4.labels());
    const SparseVec RD = long_copairing_d4(Q);
    CHECK(RD == el2(d4, d4, {{"e", "e", q(1, 2)}, {"e", "s", q(1, 2)}, {"r2", "e", q(1, 2)}, {"r2", "s", q(-1, 2)}}));
    CHECK(oracle::long_failure(pd4, oracle::from_sparse(RD)).empty());
    require_pass(check_long_copaired(d4, RD));

    // first leg r is not central
    const SparseVec bad = el2(d4, d4, {{"r", "e", q(1)}});
    CHECK(oracle::long_failure(pd4, oracle::from_sparse(bad)) == "LC1");
    CHECK_FALSE(check_long_copaired(d4, bad).pass);
}

TEST_CASE("twisted comultiplication") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    CHECK(same_tables(twist_comultiplication(z2, el2(z2, z2, {{"1", "1", q(1)}})), z2));
    CHECK(same_tables(twist_comultiplication(z2, long_copairing_z2(Q)), z2));

    const HopfData d4 = group_algebra(dihedral_group4());
    const SparseVec RD = long_copairing_d4(Q);
    const HopfData t = twist_comultiplication(d4, RD);
    require_pass(check_hopf(t));
    const SparseVec dr = testutil::at(t.delta(), d4, "r");
    CHECK(dr != testutil::at(d4.delta(), d4, "r"));
    // frozen from the permutation-group oracle
    CHECK(dr == el2(d4, d4, {{"r", "r", q(1, 2)}, {"r", "r3", q(1, 2)}, {"r3", "r", q(1, 2)}, {"r3", "r3", q(-1, 2)}}));
    const oracle::PermGroup pd4 = oracle::dihedral_perms(4);
    const oracle::Vec R = oracle::from_sparse(RD);
    for (std::uint32_t x = 0; x < 8; ++x) {
        CHECK(oracle::from_sparse(t.delta().at(std::uint64_t(x))) == oracle::twisted_coproduct(pd4, R, R, static_cast<int>(x)));
    }
}

TEST_CASE("long braces") {
    const HopfData z2 = group_algebra(cyclic_group(2, "a"));
    const BraceData b0 = long_brace(z2, long_copairing_z2(Q));
    require_pass(check_brace(b0));
    CHECK(b0.delta_prime == z2.delta());

    const HopfData d4 = group_algebra(dihedral_group4());
    const BraceData b = long_brace(d4, long_copairing_d4(Q));
    require_pass(check_brace(b));
    CHECK(b.delta_prime != d4.delta());
    CHECK(oracle_brace_witness(b.first, b.second()) == -1);

    const HopfData h4 = sweedler_h4();
    require_pass(compare_braces(long_brace(h4, el2(h4, h4, {{"1", "1", q(1)}})), trivial_brace(h4)));
    CHECK_THROWS_AS(long_brace(d4, el2(d4, d4, {{"r", "e", q(1)}})), HopfError);
}

TEST_CASE("every zoo brace passes the brace identity and its derived identities") {
    for (const auto& n : zoo_names(ZooKind::brace)) {
        INFO(n);
        const BraceData b = zoo_brace(n);
        CHECK(check_brace(b).pass);
        CHECK(check_brace_invariants(b).pass);
        CHECK(oracle_brace_witness(b.first, b.second()) == -1);
    }
}
