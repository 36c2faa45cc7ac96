#include "hopfk/comodule.hpp"

#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"

namespace hopfk {

namespace {

SparseVec id_fn(const SparseVec& b) { return b; }

}  // namespace

CheckReport check_left_comodule(const HopfData& H, const Labels& AL, const StructureMap& rho) {
    const auto& HL = H.labels();
    return first_failure({
        [&] {
            return compare_on_basis(
                "left coaction coassociative", {AL}, {HL, HL, AL},
                [&](const SparseVec& b) { return Chain(b).ap(rho, 0).ap(H.delta(), 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(rho, 0).ap(rho, 1).take(); });
        },
        [&] {
            return compare_on_basis(
                "left coaction counital", {AL}, {AL},
                [&](const SparseVec& b) { return Chain(b).ap(rho, 0).ap(H.eps(), 0).take(); }, id_fn);
        },
    });
}

CheckReport check_left_comodule_algebra(const HopfData& H, const AlgebraData& A, const StructureMap& rho) {
    const auto& HL = H.labels();
    const auto& AL = A.labels;
    return first_failure({
        [&] { return check_left_comodule(H, AL, rho); },
        [&] {
            return compare_on_basis(
                "left coaction multiplicative", {AL, AL}, {HL, AL},
                [&](const SparseVec& b) { return Chain(b).mul(A.mult, 0, 1).ap(rho, 0).take(); },
                [&](const SparseVec& b) {
                    return Chain(b).ap(rho, 1).ap(rho, 0).mul(H.m(), 0, 2).mul(A.mult, 1, 2).take();
                });
        },
        [&] { return compare_elements("left coaction unital", {HL, AL}, rho(A.unit), tensor(H.unit(), A.unit)); },
    });
}

CheckReport check_left_comodule_coalgebra(const HopfData& H, const HopfData& A, const StructureMap& rho) {
    const auto& HL = H.labels();
    const auto& AL = A.labels();
    return first_failure({
        [&] { return check_left_comodule(H, AL, rho); },
        [&] {
            return compare_on_basis(
                "left coaction comultiplicative", {AL}, {HL, AL, AL},
                [&](const SparseVec& b) { return Chain(b).ap(rho, 0).ap(A.delta(), 1).take(); },
                [&](const SparseVec& b) {
                    return Chain(b).ap(A.delta(), 0).ap(rho, 1).ap(rho, 0).mul(H.m(), 0, 2).take();
                });
        },
        [&] {
            return compare_on_basis(
                "left coaction counit compatible", {AL}, {HL},
                [&](const SparseVec& b) { return Chain(b).ap(rho, 0).ap(A.eps(), 1).take(); },
                [&](const SparseVec& b) { return tensor(H.unit(), A.eps()(b)); });
        },
    });
}

CheckReport check_left_comodule_bialgebra(const HopfData& H, const HopfData& A, const StructureMap& rho) {
    return first_failure({[&] { return check_left_comodule_algebra(H, A.algebra, rho); },
                          [&] { return check_left_comodule_coalgebra(H, A, rho); }});
}

CheckReport check_right_comodule(const HopfData& C, const Labels& VL, const StructureMap& phi) {
    const auto& CL = C.labels();
    return first_failure({
        [&] {
            return compare_on_basis(
                "right coaction coassociative", {VL}, {VL, CL, CL},
                [&](const SparseVec& b) { return Chain(b).ap(phi, 0).ap(phi, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(phi, 0).ap(C.delta(), 1).take(); });
        },
        [&] {
            return compare_on_basis(
                "right coaction counital", {VL}, {VL},
                [&](const SparseVec& b) { return Chain(b).ap(phi, 0).ap(C.eps(), 1).take(); }, id_fn);
        },
    });
}

CheckReport check_right_comodule_algebra(const HopfData& C, const AlgebraData& V, const StructureMap& phi) {
    const auto& CL = C.labels();
    const auto& VL = V.labels;
    return first_failure({
        [&] { return check_right_comodule(C, VL, phi); },
        [&] {
            return compare_on_basis(
                "right coaction multiplicative", {VL, VL}, {VL, CL},
                [&](const SparseVec& b) { return Chain(b).mul(V.mult, 0, 1).ap(phi, 0).take(); },
                [&](const SparseVec& b) {
                    return Chain(b).ap(phi, 1).ap(phi, 0).mul(V.mult, 0, 2).mul(C.m(), 1, 2).take();
                });
        },
        [&] { return compare_elements("right coaction unital", {VL, CL}, phi(V.unit), tensor(V.unit, C.unit())); },
    });
}

SparseVec legwise_product(const std::vector<const StructureMap*>& mults, const SparseVec& u, const SparseVec& v) {
    const std::size_t n = mults.size();
    if (u.legs() != n || v.legs() != n) throw HopfError(ErrorKind::SignatureMismatch, "legwise_product: leg count");
    SparseVec w = tensor(u, v);
    for (std::size_t k = 0; k < n; ++k) w = multiply_legs(*mults[k], w, k, n);
    return w;
}

SparseVec insert_leg(const SparseVec& x, std::size_t pos, const SparseVec& unit) {
    const std::size_t n = x.legs();
    if (pos > n) throw HopfError(ErrorKind::InvalidPermutation, "insert_leg: position out of range");
    std::vector<std::size_t> perm;
    for (std::size_t k = 0; k < pos; ++k) perm.push_back(k);
    perm.push_back(n);
    for (std::size_t k = pos; k < n; ++k) perm.push_back(k);
    return permute(tensor(x, unit), perm);
}

StructureMap trivial_left_coaction(const HopfData& H, std::uint32_t dimA) {
    return StructureMap::from_function({dimA}, {H.dim(), dimA}, [&](std::uint64_t i) {
        return tensor(H.unit(), SparseVec::basis({dimA}, i, H.field().one()));
    });
}

StructureMap trivial_right_coaction(std::uint32_t dimV, const HopfData& C) {
    return StructureMap::from_function({dimV}, {dimV, C.dim()}, [&](std::uint64_t i) {
        return tensor(SparseVec::basis({dimV}, i, C.field().one()), C.unit());
    });
}

StructureMap involution_coaction(const HopfData& kZ2, const StructureMap& theta) {
    const FieldSpec& f = kZ2.field();
    if (f.characteristic == 2) throw HopfError(ErrorKind::CharacteristicTwo, "grading by an involution needs 1/2");
    if (kZ2.dim() != 2) throw HopfError(ErrorKind::DimensionMismatch, "expected a 2-dimensional group algebra");
    const std::uint32_t n = theta.in_dims().at(0);
    const Scalar half = f.one() / f.from(2L);
    return StructureMap::from_function({n}, {2, n}, [&](std::uint64_t i) {
        const SparseVec a = SparseVec::basis({n}, i, f.one());
        const SparseVec t = theta.at(i);
        return half * (tensor(kZ2.basis(0), a + t) + tensor(kZ2.basis(1), a - t));
    });
}

}  // namespace hopfk
