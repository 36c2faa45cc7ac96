#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hopfk/brace.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/zoo.hpp"

using namespace hopfk;

namespace {

// Random element with small rational (or F_p) coefficients on a random support.
SparseVec random_element(std::mt19937& rng, const Dims& dims, const FieldSpec& field) {
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    std::bernoulli_distribution keep(0.6);
    SparseVec v(dims);
    for (std::uint64_t i = 0; i < volume(dims); ++i)
        if (keep(rng)) v.add(i, field.from(mpq_class(num(rng), den(rng))));
    return v;
}

// Product of two elements of H (x) H in the tensor product algebra.
SparseVec product2(const HopfData& h, const SparseVec& a, const SparseVec& b) {
    const AlgebraData t = tensor_algebra(h.algebra, h.algebra);
    const Dims d{h.dim(), h.dim()};
    return reshape(t.product(reshape(a, {h.dim() * h.dim()}), reshape(b, {h.dim() * h.dim()})), d);
}

// h1' (x) h2'1 (x) h2'2
SparseVec brace_lhs(const BraceData& b, const SparseVec& h) {
    return apply_at(b.delta(), b.delta_prime(h), 1);
}

// h11' S(h2) h31' (x) h12' (x) h32'
SparseVec brace_rhs(const BraceData& b, const SparseVec& h) {
    SparseVec v = apply_at(b.delta(), b.delta()(h), 0);
    v = apply_at(b.S(), v, 1);
    v = apply_at(b.delta_prime, v, 2);
    v = apply_at(b.delta_prime, v, 0);
    v = multiply_legs(b.m(), v, 0, 2);
    return multiply_legs(b.m(), v, 0, 2);
}

std::vector<ZooOptions> fields() { return {ZooOptions{}, ZooOptions{FieldSpec::prime(5)}, ZooOptions{FieldSpec::prime(7)}}; }

}  // namespace

TEST_CASE("bialgebra and antipode laws on random elements") {
    std::mt19937 rng(20261016);
    for (const auto& opts : fields()) {
        for (const auto& n : zoo_names(ZooKind::hopf, opts)) {
            const HopfData h = zoo_hopf(n, opts);
            INFO(n << " over " << opts.field.name());
            for (int trial = 0; trial < 4; ++trial) {
                const SparseVec x = random_element(rng, {h.dim()}, opts.field);
                const SparseVec y = random_element(rng, {h.dim()}, opts.field);
                const SparseVec xy = h.algebra.product(x, y);
                CHECK(h.delta()(xy) == product2(h, h.delta()(x), h.delta()(y)));
                CHECK(h.eps()(xy).as_scalar() == h.eps()(x).as_scalar() * h.eps()(y).as_scalar());
                CHECK(h.S()(xy) == h.algebra.product(h.S()(y), h.S()(x)));
                // m(S (x) id)Delta(x) = eps(x) 1
                CHECK(multiply_legs(h.m(), apply_at(h.S(), h.delta()(x), 0), 0, 1) == h.eps()(x).as_scalar() * h.unit());
                // S is a coalgebra anti-map: Delta S = (S (x) S) tau Delta
                CHECK(h.delta()(h.S()(x)) == tensor(h.S(), h.S())(flip(h.dim(), h.dim())(h.delta()(x))));
            }
        }
    }
}

TEST_CASE("brace identity is linear: random combinations on every zoo brace") {
    std::mt19937 rng(7);
    for (const auto& opts : fields()) {
        for (const auto& n : zoo_names(ZooKind::brace, opts)) {
            const BraceData b = zoo_brace(n, opts);
            INFO(n << " over " << opts.field.name());
            for (int trial = 0; trial < 3; ++trial) {
                const SparseVec h = random_element(rng, {b.dim()}, opts.field);
                CHECK(brace_lhs(b, h) == brace_rhs(b, h));
                // Delta' is multiplicative as well
                const SparseVec k = random_element(rng, {b.dim()}, opts.field);
                CHECK(b.delta_prime(b.first.algebra.product(h, k)) ==
                      product2(b.first, b.delta_prime(h), b.delta_prime(k)));
            }
        }
    }
}

TEST_CASE("a corrupted antipode entry is caught at that element") {
    std::mt19937 rng(99);
    for (const auto& name : {"z2", "z3", "klein", "s3", "d4"}) {
        for (const auto& opts : fields()) {
            const HopfData h = zoo_hopf(name, opts);
            std::uniform_int_distribution<std::uint32_t> pick(0, h.dim() - 1);
            for (int trial = 0; trial < 3; ++trial) {
                HopfData bad = h;
                const std::uint32_t i = pick(rng);
                SparseVec w = random_element(rng, {h.dim()}, opts.field);
                if (w.is_zero()) w = h.basis(pick(rng));
                bad.antipode.set(i, h.S().at(std::uint64_t(i)) + w);
                INFO(name << " entry " << h.labels()[i]);
                const CheckReport r = check_hopf(bad);
                CHECK_FALSE(r.pass);
                // group-like basis: Delta(g) = g (x) g only sees S(g)
                CHECK(r.witness_labels == std::vector<std::string>{h.labels()[i]});
                CHECK_FALSE(r.residual.is_zero());
            }
        }
    }
}

TEST_CASE("random single-entry corruptions of any table are detected") {
    std::mt19937 rng(2024);
    const std::vector<std::string> names{"h4", "z3", "dual-s3", "dual-h4", "klein", "h4-z2"};
    for (int trial = 0; trial < 60; ++trial) {
        const std::string& n = names[trial % names.size()];
        const HopfData h = zoo_hopf(n);
        HopfData bad = h;
        const std::uint32_t d = h.dim();
        SparseVec w;
        std::string where;
        switch (trial % 3) {
            case 0: {
                const std::uint64_t idx = std::uniform_int_distribution<std::uint64_t>(0, std::uint64_t(d) * d - 1)(rng);
                w = random_element(rng, {d}, h.field());
                if (w.is_zero()) w = h.basis(0);
                bad.algebra.mult.set(idx, h.m().at(idx) + w);
                where = "mult";
                break;
            }
            case 1: {
                const std::uint32_t i = std::uniform_int_distribution<std::uint32_t>(0, d - 1)(rng);
                w = random_element(rng, {d, d}, h.field());
                if (w.is_zero()) w = SparseVec::basis({d, d}, std::uint64_t(0));
                bad.coalgebra.comult.set(i, h.delta().at(std::uint64_t(i)) + w);
                where = "comult";
                break;
            }
            default: {
                const std::uint32_t i = std::uniform_int_distribution<std::uint32_t>(0, d - 1)(rng);
                bad.coalgebra.counit.set(i, h.eps().at(std::uint64_t(i)) + SparseVec::scalar(Scalar(1)));
                where = "counit";
            }
        }
        INFO(n << " " << where << " trial " << trial);
        const CheckReport r = check_hopf(bad);
        CHECK_FALSE(r.pass);
        CHECK_FALSE(r.failed_axiom.empty());
        CHECK_FALSE(r.witness_labels.empty());
    }
}

TEST_CASE("double duals and double opposites give back the zoo objects") {
    for (const auto& n : zoo_names(ZooKind::hopf)) {
        INFO(n);
        const HopfData h = zoo_hopf(n);
        const HopfData dd = dual_hopf(dual_hopf(h));
        CHECK(dd.m() == h.m());
        CHECK(dd.delta() == h.delta());
        CHECK(dd.S() == h.S());
        CHECK(opposite(opposite(h)).m() == h.m());
        CHECK(co_opposite(co_opposite(h)).delta() == h.delta());
    }
}
