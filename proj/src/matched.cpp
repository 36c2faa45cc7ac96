#include "hopfk/matched.hpp"

#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/linalg.hpp"

namespace hopfk {

CheckReport check_hm4(const MatchedPairData& mp) {
    const auto& AL = mp.A.labels();
    const auto& HL = mp.H.labels();
    return compare_on_basis(
        "HM4", {HL, AL}, {HL, AL},
        [&](const SparseVec& b) { return Chain(b).ap(mp.phi, 0).ap(mp.rho, 2).mul(mp.H.m(), 0, 2).mul(mp.A.m(), 1, 2).take(); },
        [&](const SparseVec& b) { return Chain(b).ap(mp.phi, 0).ap(mp.rho, 2).mul(mp.H.m(), 2, 0).mul(mp.A.m(), 2, 1).take(); });
}

CheckReport check_matched_pair(const MatchedPairData& mp) {
    const HopfData& A = mp.A;
    const HopfData& H = mp.H;
    const auto& AL = A.labels();
    const auto& HL = H.labels();
    CheckReport r = first_failure({
        [&] {
            if (mp.rho.in_dims() != Dims{A.dim()} || mp.rho.out_dims() != Dims{H.dim(), A.dim()} ||
                mp.phi.in_dims() != Dims{H.dim()} || mp.phi.out_dims() != Dims{H.dim(), A.dim()}) {
                return CheckReport::failure("coaction signature", "rho must map A -> H (x) A and phi H -> H (x) A");
            }
            return CheckReport::ok();
        },
        [&] { return check_left_comodule_algebra(H, A.algebra, mp.rho); },
        [&] { return check_right_comodule_algebra(A, H.algebra, mp.phi); },
        [&] {
            return compare_on_basis(
                "HM1 (rho)", legs_of(AL, 1), {HL}, [&](const SparseVec& b) { return Chain(b).ap(mp.rho, 0).ap(A.eps(), 1).take(); },
                [&](const SparseVec& b) { return tensor(A.eps()(b), H.unit()); });
        },
        [&] {
            return compare_on_basis(
                "HM1 (phi)", legs_of(HL, 1), {AL}, [&](const SparseVec& b) { return Chain(b).ap(mp.phi, 0).ap(H.eps(), 0).take(); },
                [&](const SparseVec& b) { return tensor(H.eps()(b), A.unit()); });
        },
        [&] {
            return compare_on_basis(
                "HM2", legs_of(AL, 1), {HL, AL, AL},
                [&](const SparseVec& b) { return Chain(b).ap(mp.rho, 0).ap(A.delta(), 1).take(); },
                [&](const SparseVec& b) {
                    return Chain(b)
                        .ap(A.delta(), 0)
                        .ap(mp.rho, 1)
                        .ap(mp.rho, 0)
                        .ap(mp.phi, 2)
                        .mul(H.m(), 0, 2)
                        .mul(A.m(), 1, 2)
                        .take();
                });
        },
        [&] {
            return compare_on_basis(
                "HM3", legs_of(HL, 1), {HL, HL, AL},
                [&](const SparseVec& b) { return Chain(b).ap(mp.phi, 0).ap(H.delta(), 0).take(); },
                [&](const SparseVec& b) {
                    return Chain(b)
                        .ap(H.delta(), 0)
                        .ap(mp.phi, 1)
                        .ap(mp.phi, 0)
                        .ap(mp.rho, 1)
                        .mul(H.m(), 1, 3)
                        .mul(A.m(), 2, 3)
                        .take();
                });
        },
        [&] { return check_hm4(mp); },
    });
    r.object = mp.name;
    return r;
}

CheckReport check_weak_rmatrix(const HopfData& H, const HopfData& A, const SparseVec& R) {
    if (R.dims() != Dims{H.dim(), A.dim()}) return CheckReport::failure("R signature", "R must live in H (x) A");
    const auto& HL = H.labels();
    const auto& AL = A.labels();
    CheckReport r = first_failure({
        [&] {
            try {
                (void)make_weak_rmatrix(H, A, R);
            } catch (const HopfError& e) {
                return CheckReport::failure("R invertible", e.what());
            }
            return CheckReport::ok();
        },
        [&] {
            // R13 r23 = R' (x) r' (x) R''r''
            std::vector<const StructureMap*> m{&H.m(), &H.m(), &A.m()};
            SparseVec rhs = legwise_product(m, insert_leg(R, 1, H.unit()), insert_leg(R, 0, H.unit()));
            return compare_elements("WM1", {HL, HL, AL}, Chain(R).ap(H.delta(), 0).take(), rhs);
        },
        [&] {
            // R13 r12 = R'r' (x) r'' (x) R''
            std::vector<const StructureMap*> m{&H.m(), &A.m(), &A.m()};
            SparseVec rhs = legwise_product(m, insert_leg(R, 1, A.unit()), insert_leg(R, 2, A.unit()));
            return compare_elements("WM2", {HL, AL, AL}, Chain(R).ap(A.delta(), 1).take(), rhs);
        },
    });
    return r;
}

WeakRMatrix make_weak_rmatrix(const HopfData& H, const HopfData& A, const SparseVec& R) {
    AlgebraData ha = tensor_algebra(H.algebra, A.algebra);
    const Dims d{H.dim(), A.dim()};
    WeakRMatrix w;
    w.R = R;
    w.R_inv = reshape(invert_element(ha, reshape(R, {H.dim() * A.dim()})), d);
    return w;
}

MatchedPairData matched_from_rmatrix(const HopfData& H, const HopfData& A, const SparseVec& R) {
    CheckReport c = check_weak_rmatrix(H, A, R);
    if (!c) throw HopfError(ErrorKind::RMatrixCheckFailed, c.summary());
    const WeakRMatrix w = make_weak_rmatrix(H, A, R);
    const SparseVec tR = permute(w.R, {1, 0});
    const SparseVec tRinv = permute(w.R_inv, {1, 0});
    const std::vector<const StructureMap*> m{&A.m(), &H.m()};
    auto conj = [&](const SparseVec& x) { return legwise_product(m, legwise_product(m, tR, x), tRinv); };
    MatchedPairData mp;
    mp.name = "matched(" + H.name + "," + A.name + ")";
    mp.A = H;
    mp.H = A;
    mp.rho = StructureMap::from_function({H.dim()}, {A.dim(), H.dim()},
                                         [&](std::uint64_t i) { return conj(tensor(A.unit(), H.basis(static_cast<std::uint32_t>(i)))); });
    mp.phi = StructureMap::from_function({A.dim()}, {A.dim(), H.dim()},
                                         [&](std::uint64_t i) { return conj(tensor(A.basis(static_cast<std::uint32_t>(i)), H.unit())); });
    mp.source_order = "H,A";
    return mp;
}

MatchedPairData brace_to_matched(const BraceData& b) {
    if (!is_commutative(b)) throw HopfError(ErrorKind::NotCommutative, b.name + " has a noncommutative algebra");
    CheckReport r = check_brace(b);
    if (!r) throw HopfError(ErrorKind::BraceCheckFailed, r.summary());
    MatchedPairData mp;
    mp.name = "M(" + b.name + ")";
    mp.A = b.second();
    mp.H = mp.A;
    mp.rho = rho_coaction(b).map;
    mp.phi = phi_coaction(b).map;
    return mp;
}

namespace {

void require_same_roles(const MatchedPairData& mp) {
    if (!same_tables(mp.A, mp.H)) throw HopfError(ErrorKind::RolesDiffer, "A and H are different Hopf algebras");
}

}  // namespace

CheckReport check_second_from_coactions(const MatchedPairData& mp) {
    require_same_roles(mp);
    const auto& L = mp.A.labels();
    const auto& m = mp.A.m();
    CheckReport r = compare_on_basis(
        "comultiplication from coactions", legs_of(L, 1), legs_of(L, 2), [&](const SparseVec& b) { return mp.A.delta()(b); },
        [&](const SparseVec& b) {
            return Chain(b).ap(mp.A.delta(), 0).ap(mp.phi, 1).ap(mp.rho, 0).mul(m, 0, 2).mul(m, 1, 2).take();
        });
    r.object = mp.name;
    return r;
}

BraceData matched_to_brace(const MatchedPairData& mp) {
    require_same_roles(mp);
    const HopfData& A = mp.A;
    if (!is_commutative(A.algebra)) throw HopfError(ErrorKind::NotCommutative, A.name + " is not commutative");
    CheckReport c = check_matched_pair(mp);
    if (!c) throw HopfError(ErrorKind::MatchedCheckFailed, c.summary());
    CheckReport e = check_second_from_coactions(mp);
    if (!e) throw HopfError(ErrorKind::Eq31Failed, e.summary());
    const std::uint32_t n = A.dim();
    const auto& m = A.m();
    StructureMap d = StructureMap::from_function({n}, {n, n}, [&](std::uint64_t i) {
        return Chain(A.basis(static_cast<std::uint32_t>(i))).ap(A.delta(), 0).ap(mp.rho, 1).ap(A.S(), 1).mul(m, 0, 1).take();
    });
    StructureMap s = StructureMap::from_function({n}, {n}, [&](std::uint64_t i) {
        return Chain(A.basis(static_cast<std::uint32_t>(i))).ap(mp.rho, 0).ap(A.S(), 1).mul(m, 0, 1).take();
    });
    std::string name = mp.name.rfind("M(", 0) == 0 && mp.name.back() == ')' ? mp.name.substr(2, mp.name.size() - 3) : "B(" + mp.name + ")";
    std::string first_name = A.name;
    if (first_name.size() > 1 && first_name.back() == '\'') first_name.pop_back();
    HopfData first = with_coalgebra(A, first_name, std::move(d), A.eps(), std::move(s));
    return make_brace(name, first, A);
}

CheckReport check_constructed_brace(const BraceData& b, const MatchedPairData& mp) {
    const auto& L = b.labels();
    const auto& m = b.m();
    CheckReport r = first_failure({
        [&] {
            return compare_on_basis(
                "second comultiplication via rho", legs_of(L, 1), legs_of(L, 2), [&](const SparseVec& v) { return b.delta_prime(v); },
                [&](const SparseVec& v) { return Chain(v).ap(b.delta(), 0).ap(mp.rho, 1).mul(m, 0, 1).take(); });
        },
        [&] {
            return compare_on_basis(
                "rho comultiplicative", legs_of(L, 1), legs_of(L, 3),
                [&](const SparseVec& v) { return Chain(v).ap(mp.rho, 0).ap(b.delta(), 1).take(); },
                [&](const SparseVec& v) { return Chain(v).ap(b.delta(), 0).ap(mp.rho, 1).ap(mp.rho, 0).mul(m, 0, 2).take(); });
        },
        [&] {
            const StructureMap rho = rho_coaction(b).map;
            return compare_on_basis(
                "rho recovered from the brace", legs_of(L, 1), legs_of(L, 2), [&](const SparseVec& v) { return mp.rho(v); },
                [&](const SparseVec& v) { return rho(v); });
        },
    });
    r.object = b.name;
    return r;
}

CheckReport compare_matched(const MatchedPairData& a, const MatchedPairData& b) {
    return first_failure({
        [&] { return compare_hopf_tables(a.A, b.A); },
        [&] { return compare_hopf_tables(a.H, b.H); },
        [&] { return a.rho == b.rho ? CheckReport::ok() : CheckReport::failure("rho table", "rho differs"); },
        [&] { return a.phi == b.phi ? CheckReport::ok() : CheckReport::failure("phi table", "phi differs"); },
    });
}

MatchedPairData trivial_matched_pair(const HopfData& A, const HopfData& H) {
    MatchedPairData mp;
    mp.name = "trivial(" + A.name + "," + H.name + ")";
    mp.A = A;
    mp.H = H;
    mp.rho = trivial_left_coaction(H, A.dim());
    mp.phi = trivial_right_coaction(H.dim(), A);
    return mp;
}

}  // namespace hopfk
