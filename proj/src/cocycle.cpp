#include "hopfk/cocycle.hpp"

#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/linalg.hpp"

namespace hopfk {

CheckReport check_cocycle(const CocycleData& c) {
    const auto& AL = c.A.labels();
    const auto& HL = c.H.labels();
    CheckReport r = first_failure({
        [&] {
            if (c.A.dim() != c.H.dim()) return CheckReport::failure("pi bijective", "dimensions differ");
            try {
                (void)inverse_map(c.pi);
            } catch (const HopfError&) {
                return CheckReport::failure("pi bijective", "pi is singular");
            }
            return CheckReport::ok();
        },
        [&] {
            return compare_on_basis(
                "pi multiplicative", legs_of(AL, 2), legs_of(HL, 1),
                [&](const SparseVec& b) { return Chain(b).mul(c.A.m(), 0, 1).ap(c.pi, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(c.pi, 0).ap(c.pi, 1).mul(c.H.m(), 0, 1).take(); });
        },
        [&] { return compare_elements("pi unital", legs_of(HL, 1), c.pi(c.A.unit()), c.H.unit()); },
        [&] { return check_left_comodule_coalgebra(c.H, c.A, c.rho); },
        [&] {
            return compare_on_basis(
                "cocycle identity", legs_of(AL, 1), {HL, HL},
                [&](const SparseVec& b) { return Chain(b).ap(c.pi, 0).ap(c.H.delta(), 0).take(); },
                [&](const SparseVec& b) {
                    return Chain(b).ap(c.A.delta(), 0).ap(c.rho, 1).ap(c.pi, 0).ap(c.pi, 2).mul(c.H.m(), 0, 1).take();
                });
        },
    });
    r.object = c.name;
    return r;
}

CheckReport check_cocycle_counit(const CocycleData& c) {
    return compare_on_basis(
        "counit preserved by pi", legs_of(c.A.labels(), 1), {},
        [&](const SparseVec& b) { return Chain(b).ap(c.pi, 0).ap(c.H.eps(), 0).take(); },
        [&](const SparseVec& b) { return c.A.eps()(b); });
}

CocycleData brace_to_cocycle(const BraceData& b) {
    CheckReport r = check_brace(b);
    if (!r) throw HopfError(ErrorKind::BraceCheckFailed, r.summary());
    CocycleData c;
    c.name = "F(" + b.name + ")";
    c.A = b.first;
    c.H = b.second();
    c.pi = StructureMap::identity({b.dim()});
    c.rho = rho_coaction(b).map;
    return c;
}

BraceData cocycle_to_brace(const CocycleData& c) {
    CheckReport r = check_cocycle(c);
    if (!r) throw HopfError(ErrorKind::CocycleCheckFailed, r.summary());
    const StructureMap pinv = inverse_map(c.pi);
    const std::uint32_t n = c.A.dim();
    StructureMap dp = StructureMap::from_function({n}, {n, n}, [&](std::uint64_t i) {
        return Chain(c.pi.at(i)).ap(c.H.delta(), 0).ap(pinv, 0).ap(pinv, 1).take();
    });
    StructureMap T = compose(pinv, compose(c.H.S(), c.pi));
    HopfData second = with_coalgebra(c.A, c.A.name + "'", std::move(dp), c.A.eps(), std::move(T));
    std::string name = c.name.rfind("F(", 0) == 0 && c.name.back() == ')' ? c.name.substr(2, c.name.size() - 3) : "G(" + c.name + ")";
    return make_brace(name, c.A, second);
}

CheckReport check_hopf_map(const StructureMap& f, const HopfData& from, const HopfData& to) {
    const auto& XL = from.labels();
    const auto& YL = to.labels();
    return first_failure({
        [&] {
            if (f.in_dims() != Dims{from.dim()} || f.out_dims() != Dims{to.dim()}) {
                return CheckReport::failure("Hopf map signature", "map has the wrong shape");
            }
            return CheckReport::ok();
        },
        [&] {
            return compare_on_basis(
                "map multiplicative", legs_of(XL, 2), legs_of(YL, 1),
                [&](const SparseVec& b) { return Chain(b).mul(from.m(), 0, 1).ap(f, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(f, 0).ap(f, 1).mul(to.m(), 0, 1).take(); });
        },
        [&] { return compare_elements("map unital", legs_of(YL, 1), f(from.unit()), to.unit()); },
        [&] {
            return compare_on_basis(
                "map comultiplicative", legs_of(XL, 1), legs_of(YL, 2),
                [&](const SparseVec& b) { return Chain(b).ap(f, 0).ap(to.delta(), 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(from.delta(), 0).ap(f, 0).ap(f, 1).take(); });
        },
        [&] {
            return compare_on_basis(
                "map counital", legs_of(XL, 1), {}, [&](const SparseVec& b) { return Chain(b).ap(f, 0).ap(to.eps(), 0).take(); },
                [&](const SparseVec& b) { return from.eps()(b); });
        },
        [&] {
            return compare_on_basis(
                "map commutes with antipodes", legs_of(XL, 1), legs_of(YL, 1),
                [&](const SparseVec& b) { return Chain(b).ap(f, 0).ap(to.S(), 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(from.S(), 0).ap(f, 0).take(); });
        },
    });
}

CheckReport check_cocycle_morphism(const CocycleMorphism& mor, const CocycleData& src, const CocycleData& dst) {
    const auto& BL = src.A.labels();
    return first_failure({
        [&] {
            CheckReport r = check_hopf_map(mor.f, src.H, dst.H);
            if (!r) r.failed_axiom = "f: " + r.failed_axiom;
            return r;
        },
        [&] {
            CheckReport r = check_hopf_map(mor.g, src.A, dst.A);
            if (!r) r.failed_axiom = "g: " + r.failed_axiom;
            return r;
        },
        [&] {
            return compare_on_basis(
                "pi g = f eta", legs_of(BL, 1), {dst.H.labels()},
                [&](const SparseVec& b) { return Chain(b).ap(mor.g, 0).ap(dst.pi, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(src.pi, 0).ap(mor.f, 0).take(); });
        },
        [&] {
            return compare_on_basis(
                "coaction intertwined", legs_of(BL, 1), {dst.H.labels(), dst.A.labels()},
                [&](const SparseVec& b) { return Chain(b).ap(mor.g, 0).ap(dst.rho, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(src.rho, 0).ap(mor.f, 0).ap(mor.g, 1).take(); });
        },
    });
}

CheckReport compare_cocycles(const CocycleData& a, const CocycleData& b) {
    return first_failure({
        [&] { return compare_hopf_tables(a.A, b.A); },
        [&] { return compare_hopf_tables(a.H, b.H); },
        [&] { return a.pi == b.pi ? CheckReport::ok() : CheckReport::failure("pi table", "pi differs"); },
        [&] { return a.rho == b.rho ? CheckReport::ok() : CheckReport::failure("rho table", "rho differs"); },
    });
}

}  // namespace hopfk
