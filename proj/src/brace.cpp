#include "hopfk/brace.hpp"

#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/linalg.hpp"

namespace hopfk {

HopfData with_coalgebra(const HopfData& h, std::string name, StructureMap comult, StructureMap counit, StructureMap antipode) {
    HopfData r;
    r.name = std::move(name);
    r.algebra = h.algebra;
    r.coalgebra.comult = std::move(comult);
    r.coalgebra.counit = std::move(counit);
    r.antipode = std::move(antipode);
    return r;
}

HopfData BraceData::second() const {
    return with_coalgebra(first, name + "'", delta_prime, first.eps(), T);
}

CheckReport check_brace_compatibility(const HopfData& first, const HopfData& second) {
    const auto& L = first.labels();
    const auto& D = first.delta();
    const auto& Dp = second.delta();
    const auto& m = first.m();
    return compare_on_basis(
        "brace compatibility", legs_of(L, 1), legs_of(L, 3),
        [&](const SparseVec& b) { return Chain(b).ap(Dp, 0).ap(D, 1).take(); },
        [&](const SparseVec& b) {
            return Chain(b)
                .ap(D, 0)
                .ap(D, 1)
                .ap(Dp, 2)
                .ap(Dp, 0)
                .ap(first.S(), 2)
                .perm({0, 2, 3, 1, 4})
                .mul(m, 0, 1)
                .mul(m, 0, 1)
                .take();
        });
}

CheckReport check_brace(const HopfData& first, const HopfData& second) {
    const auto& L = first.labels();
    CheckReport r = first_failure({
        [&] {
            if (first.dim() != second.dim()) return CheckReport::failure("shared algebra", "dimensions differ");
            return CheckReport::ok();
        },
        [&] {
            return compare_on_basis(
                "shared multiplication", legs_of(L, 2), legs_of(L, 1), [&](const SparseVec& b) { return first.m()(b); },
                [&](const SparseVec& b) { return second.m()(b); });
        },
        [&] { return compare_elements("shared unit", legs_of(L, 1), first.unit(), second.unit()); },
        [&] {
            return compare_on_basis(
                "counit equality", legs_of(L, 1), {}, [&](const SparseVec& b) { return first.eps()(b); },
                [&](const SparseVec& b) { return second.eps()(b); });
        },
        [&] {
            CheckReport h = check_hopf(first);
            if (!h) h.failed_axiom = "first half: " + h.failed_axiom;
            return h;
        },
        [&] {
            CheckReport h = check_hopf(second);
            if (!h) h.failed_axiom = "second half: " + h.failed_axiom;
            return h;
        },
        [&] { return check_brace_compatibility(first, second); },
    });
    r.object = first.name;
    return r;
}

CheckReport check_brace(const BraceData& b) {
    CheckReport r = check_brace(b.first, b.second());
    r.object = b.name;
    return r;
}

BraceData unchecked_brace(std::string name, const HopfData& first, const HopfData& second) {
    if (first.dim() != second.dim() || first.m() != second.m() || first.unit() != second.unit()) {
        throw HopfError(ErrorKind::SignatureMismatch, "brace halves live on different algebras");
    }
    if (first.eps() != second.eps()) throw HopfError(ErrorKind::CounitMismatch, "the two counits differ");
    BraceData b;
    b.name = std::move(name);
    b.first = first;
    b.first.name = b.name;
    b.delta_prime = second.delta();
    b.T = second.S();
    return b;
}

BraceData make_brace(std::string name, const HopfData& first, const HopfData& second) {
    BraceData b = unchecked_brace(std::move(name), first, second);
    CheckReport r = check_brace(b);
    if (!r) throw HopfError(ErrorKind::BraceCheckFailed, r.summary());
    return b;
}

BraceData trivial_brace(const HopfData& h) { return make_brace("trivial(" + h.name + ")", h, h); }

BraceData cop_brace(const HopfData& h) { return make_brace("cop-brace(" + h.name + ")", h, co_opposite(h)); }

BraceData cop_brace_reversed(const HopfData& h) {
    return make_brace("cop-brace-rev(" + h.name + ")", co_opposite(h), h);
}

bool is_commutative(const BraceData& b) { return is_commutative(b.first.algebra); }

namespace {

void require_commutative(const BraceData& b) {
    if (!is_commutative(b)) throw HopfError(ErrorKind::NotCommutative, b.name + " has a noncommutative algebra");
}

StructureMap one_leg_map(const BraceData& b, std::uint32_t out_legs, const std::function<SparseVec(const SparseVec&)>& fn) {
    const std::uint32_t n = b.dim();
    return StructureMap::from_function({n}, Dims(out_legs, n), [&](std::uint64_t i) { return fn(SparseVec::basis({n}, i, b.field().one())); });
}

StructureMap two_leg_map(std::uint32_t n, const FieldSpec& f, const std::function<SparseVec(const SparseVec&)>& fn) {
    return StructureMap::from_function({n, n}, {n, n}, [&](std::uint64_t i) { return fn(SparseVec::basis({n, n}, i, f.one())); });
}

}  // namespace

CoactionData rho_coaction(const BraceData& b) {
    CoactionData c;
    c.side = Side::left;
    c.map = one_leg_map(b, 2, [&](const SparseVec& v) {
        return Chain(v).ap(b.delta(), 0).ap(b.S(), 0).ap(b.delta_prime, 1).mul(b.m(), 0, 1).take();
    });
    return c;
}

CoactionData phi_coaction(const BraceData& b) {
    require_commutative(b);
    const StructureMap rho = rho_coaction(b).map;
    CoactionData c;
    c.side = Side::right;
    c.map = one_leg_map(b, 2, [&](const SparseVec& v) {
        return Chain(v)
            .ap(b.delta_prime, 0)
            .ap(b.delta_prime, 1)
            .ap(b.T, 0)
            .ap(rho, 0)
            .mul(b.m(), 0, 2)
            .mul(b.m(), 1, 2)
            .take();
    });
    return c;
}

StructureMap braid_operator(const BraceData& b) {
    require_commutative(b);
    const StructureMap rho = rho_coaction(b).map;
    const StructureMap phi = phi_coaction(b).map;
    return two_leg_map(b.dim(), b.field(), [&](const SparseVec& v) {
        return Chain(v).ap(rho, 0).ap(phi, 2).mul(b.m(), 0, 2).mul(b.m(), 1, 2).take();
    });
}

StructureMap gamma_map(const BraceData& b) {
    const StructureMap rho = rho_coaction(b).map;
    return two_leg_map(b.dim(), b.field(), [&](const SparseVec& v) { return Chain(v).ap(rho, 1).mul(b.m(), 0, 1).take(); });
}

StructureMap gamma_inverse(const BraceData& b) {
    const StructureMap rho = rho_coaction(b).map;
    return two_leg_map(b.dim(), b.field(),
                       [&](const SparseVec& v) { return Chain(v).ap(rho, 1).ap(b.T, 1).mul(b.m(), 0, 1).take(); });
}

StructureMap sigma_map(const HopfData& h) {
    return two_leg_map(h.dim(), h.field(), [&](const SparseVec& v) {
        return Chain(v)
            .ap(h.delta(), 1)
            .ap(h.delta(), 1)
            .ap(h.S(), 1)
            .perm({2, 0, 1, 3})
            .mul(h.m(), 1, 2)
            .mul(h.m(), 1, 2)
            .take();
    });
}

StructureMap flip_map(std::uint32_t n) { return flip(n, n); }

CheckReport check_braid_equation(const StructureMap& c, const Labels& labels) {
    if (c.in_arity() != 2 || c.out_arity() != 2 || c.in_dims() != c.out_dims() || c.in_dims()[0] != c.in_dims()[1]) {
        return CheckReport::failure("braid equation", "not a map V (x) V -> V (x) V");
    }
    const std::uint32_t n = c.in_dims()[0];
    Labels L = labels;
    if (L.size() != n) {
        L.clear();
        for (std::uint32_t i = 0; i < n; ++i) L.push_back("e" + std::to_string(i));
    }
    return compare_on_basis(
        "braid equation", legs_of(L, 3), legs_of(L, 3),
        [&](const SparseVec& b) { return Chain(b).ap(c, 0).ap(c, 1).ap(c, 0).take(); },
        [&](const SparseVec& b) { return Chain(b).ap(c, 1).ap(c, 0).ap(c, 1).take(); });
}

StructureMap invert_two_leg_map(const StructureMap& c) {
    const Dims in = c.in_dims();
    const Dims out = c.out_dims();
    const auto nin = static_cast<std::uint32_t>(volume(in));
    const auto nout = static_cast<std::uint32_t>(volume(out));
    StructureMap flat = StructureMap::from_function({nin}, {nout}, [&](std::uint64_t i) { return reshape(c.at(i), {nout}); });
    StructureMap inv = inverse_map(flat);
    return StructureMap::from_function(out, in, [&](std::uint64_t i) { return reshape(inv.at(i), in); });
}

CheckReport check_lemma_s_split(const BraceData& b) {
    const auto& L = b.labels();
    return compare_on_basis(
        "antipode splitting identity", legs_of(L, 1), legs_of(L, 2),
        [&](const SparseVec& v) {
            return Chain(v).ap(b.delta(), 0).ap(b.S(), 0).ap(b.delta_prime, 0).mul(b.m(), 0, 2).take();
        },
        [&](const SparseVec& v) {
            return Chain(v).ap(b.delta(), 0).ap(b.S(), 0).ap(b.delta_prime, 1).ap(b.S(), 2).mul(b.m(), 0, 1).take();
        });
}

CheckReport check_unit_split(const BraceData& b) {
    const auto& L = b.labels();
    return compare_on_basis(
        "unit splitting identity", legs_of(L, 1), legs_of(L, 2),
        [&](const SparseVec& v) { return tensor(v, b.first.unit()); },
        [&](const SparseVec& v) {
            return Chain(v)
                .ap(b.delta(), 0)
                .ap(b.delta(), 1)
                .ap(b.delta_prime, 2)
                .ap(b.delta_prime, 0)
                .ap(b.S(), 2)
                .ap(b.S(), 4)
                .perm({0, 2, 3, 1, 4})
                .mul(b.m(), 0, 1)
                .mul(b.m(), 0, 1)
                .mul(b.m(), 1, 2)
                .take();
        });
}

CheckReport check_second_from_rho(const BraceData& b) {
    const auto& L = b.labels();
    const StructureMap rho = rho_coaction(b).map;
    return compare_on_basis(
        "second comultiplication from rho", legs_of(L, 1), legs_of(L, 2),
        [&](const SparseVec& v) { return b.delta_prime(v); },
        [&](const SparseVec& v) { return Chain(v).ap(b.delta(), 0).ap(rho, 1).mul(b.m(), 0, 1).take(); });
}

CheckReport check_first_from_rho(const BraceData& b) {
    const auto& L = b.labels();
    const StructureMap rho = rho_coaction(b).map;
    return compare_on_basis(
        "first comultiplication from rho", legs_of(L, 1), legs_of(L, 2), [&](const SparseVec& v) { return b.delta()(v); },
        [&](const SparseVec& v) { return Chain(v).ap(b.delta_prime, 0).ap(rho, 1).ap(b.T, 1).mul(b.m(), 0, 1).take(); });
}

CheckReport check_rho_comodule_coalgebra(const BraceData& b) {
    return check_left_comodule_coalgebra(b.second(), b.first, rho_coaction(b).map);
}

CheckReport check_commutative_coactions(const BraceData& b) {
    require_commutative(b);
    const HopfData second = b.second();
    const StructureMap rho = rho_coaction(b).map;
    const StructureMap phi = phi_coaction(b).map;
    const auto& L = b.labels();
    return first_failure({
        [&] { return check_left_comodule_algebra(second, b.first.algebra, rho); },
        [&] { return check_right_comodule_algebra(second, b.first.algebra, phi); },
        [&] {
            return compare_on_basis(
                "rho commutes with the antipode", legs_of(L, 1), legs_of(L, 2),
                [&](const SparseVec& v) { return Chain(v).ap(rho, 0).ap(b.S(), 1).take(); },
                [&](const SparseVec& v) { return Chain(v).ap(b.S(), 0).ap(rho, 0).take(); });
        },
    });
}

CheckReport check_gamma_conjugation(const BraceData& b) {
    const StructureMap c = braid_operator(b);
    const StructureMap g = gamma_map(b);
    const StructureMap gi = gamma_inverse(b);
    const StructureMap s = sigma_map(b.first);
    const auto& L = b.labels();
    return first_failure({
        [&] {
            return compare_on_basis(
                "gamma inverse", legs_of(L, 2), legs_of(L, 2), [&](const SparseVec& v) { return Chain(v).ap(g, 0).ap(gi, 0).take(); },
                [](const SparseVec& v) { return v; });
        },
        [&] {
            return compare_on_basis(
                "gamma conjugation", legs_of(L, 2), legs_of(L, 2),
                [&](const SparseVec& v) { return Chain(v).ap(g, 0).ap(c, 0).ap(gi, 0).take(); },
                [&](const SparseVec& v) { return s(v); });
        },
    });
}

CheckReport check_brace_invariants(const BraceData& b) {
    CheckReport r = first_failure({
        [&] { return check_lemma_s_split(b); },
        [&] { return check_unit_split(b); },
        [&] { return check_second_from_rho(b); },
        [&] { return check_first_from_rho(b); },
        [&] { return check_rho_comodule_coalgebra(b); },
        [&] { return is_commutative(b) ? check_commutative_coactions(b) : CheckReport::ok(); },
        [&] { return is_commutative(b) ? check_gamma_conjugation(b) : CheckReport::ok(); },
    });
    r.object = b.name;
    return r;
}

namespace {

struct TwoLegs {
    const HopfData& h;
    std::uint32_t n;
    AlgebraData hh;
    SparseVec R;
    SparseVec Rinv;
    std::vector<const StructureMap*> m2, m3;

    TwoLegs(const HopfData& H, const SparseVec& r) : h(H), n(H.dim()), hh(tensor_algebra(H.algebra, H.algebra)), R(r) {
        if (R.dims() != Dims{n, n}) throw HopfError(ErrorKind::SignatureMismatch, "R must live in H (x) H");
        Rinv = reshape(invert_element(hh, reshape(R, {n * n})), {n, n});
        m2 = {&h.m(), &h.m()};
        m3 = {&h.m(), &h.m(), &h.m()};
    }
    SparseVec unit() const { return h.unit(); }
    // R placed on legs (i, j) of a 3-leg tensor, unit on the remaining leg.
    SparseVec place(const SparseVec& x, std::size_t free_leg) const { return insert_leg(x, free_leg, unit()); }
};

}  // namespace

CheckReport check_harrison_cocycle(const HopfData& h, const SparseVec& R) {
    TwoLegs t(h, R);
    const auto& L = h.labels();
    CheckReport r = first_failure({
        [&] { return compare_elements("left normalization", legs_of(L, 1), Chain(R).ap(h.eps(), 0).take(), h.unit()); },
        [&] { return compare_elements("right normalization", legs_of(L, 1), Chain(R).ap(h.eps(), 1).take(), h.unit()); },
        [&] {
            SparseVec lhs = legwise_product(t.m3, t.place(R, 2), Chain(R).ap(h.delta(), 0).take());
            SparseVec rhs = legwise_product(t.m3, t.place(R, 0), Chain(R).ap(h.delta(), 1).take());
            return compare_elements("Harrison cocycle identity", legs_of(L, 3), lhs, rhs);
        },
    });
    r.object = h.name;
    return r;
}

CheckReport check_long_copaired(const HopfData& h, const SparseVec& R) {
    TwoLegs t(h, R);
    const auto& L = h.labels();
    const std::uint32_t n = h.dim();
    CheckReport r = first_failure({
        [&] {
            for (std::uint32_t x = 0; x < n; ++x) {
                SparseVec xe = tensor(h.basis(x), h.unit());
                CheckReport c = compare_elements("LC1", legs_of(L, 2), legwise_product(t.m2, R, xe), legwise_product(t.m2, xe, R));
                if (!c) {
                    c.witness = {x};
                    c.witness_labels = {L[x]};
                    return c;
                }
            }
            return CheckReport::ok();
        },
        [&] { return compare_elements("LC2", legs_of(L, 1), Chain(R).ap(h.eps(), 0).take(), h.unit()); },
        [&] {
            // R'1 (x) R'2 (x) R'' = R' (x) r' (x) r''R''
            SparseVec rhs = legwise_product(t.m3, t.place(R, 0), t.place(R, 1));
            return compare_elements("LC3", legs_of(L, 3), Chain(R).ap(h.delta(), 0).take(), rhs);
        },
        [&] { return compare_elements("LC4", legs_of(L, 1), Chain(R).ap(h.eps(), 1).take(), h.unit()); },
        [&] {
            // R' (x) R''1 (x) R''2 = R'r' (x) R'' (x) r''
            SparseVec rhs = legwise_product(t.m3, t.place(R, 2), t.place(R, 1));
            return compare_elements("LC5", legs_of(L, 3), Chain(R).ap(h.delta(), 1).take(), rhs);
        },
    });
    r.object = h.name;
    return r;
}

HopfData twist_comultiplication(const HopfData& h, const SparseVec& R) {
    CheckReport hc = check_harrison_cocycle(h, R);
    if (!hc) throw HopfError(ErrorKind::HarrisonCheckFailed, hc.summary());
    TwoLegs t(h, R);
    const std::uint32_t n = h.dim();
    StructureMap dr = StructureMap::from_function({n}, {n, n}, [&](std::uint64_t i) {
        return legwise_product(t.m2, legwise_product(t.m2, R, h.delta().at(i)), t.Rinv);
    });
    // u = R' S(R''), v = S(R'^-1) R''^-1
    const SparseVec u = Chain(R).ap(h.S(), 1).mul(h.m(), 0, 1).take();
    const SparseVec v = Chain(t.Rinv).ap(h.S(), 0).mul(h.m(), 0, 1).take();
    StructureMap sr = StructureMap::from_function({n}, {n}, [&](std::uint64_t i) {
        return h.algebra.product(h.algebra.product(u, h.S().at(i)), v);
    });
    HopfData tw = with_coalgebra(h, "twist(" + h.name + ")", std::move(dr), h.eps(), std::move(sr));
    CheckReport r = check_hopf(tw);
    if (!r) throw HopfError(ErrorKind::NotAHopfAlgebra, "twisted structure: " + r.summary());
    return tw;
}

BraceData long_brace(const HopfData& h, const SparseVec& R) {
    CheckReport lc = check_long_copaired(h, R);
    if (!lc) throw HopfError(ErrorKind::LongCheckFailed, lc.summary());
    return make_brace("long(" + h.name + ")", h, twist_comultiplication(h, R));
}

CheckReport compare_braces(const BraceData& a, const BraceData& b) {
    return first_failure({
        [&] {
            CheckReport r = compare_hopf_tables(a.first, b.first);
            if (!r) r.failed_axiom = "first half: " + r.failed_axiom;
            return r;
        },
        [&] {
            CheckReport r = compare_hopf_tables(a.second(), b.second());
            if (!r) r.failed_axiom = "second half: " + r.failed_axiom;
            return r;
        },
    });
}

}  // namespace hopfk
