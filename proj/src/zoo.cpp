#include "hopfk/zoo.hpp"

#include <functional>
#include <map>

#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"

namespace hopfk {

namespace {

Scalar half(const FieldSpec& f) {
    if (f.characteristic == 2) throw HopfError(ErrorKind::CharacteristicTwo, "this object needs 1/2");
    return f.one() / f.from(2L);
}

HopfData kz2(const FieldSpec& f) { return group_algebra(cyclic_group(2, "a"), f); }
HopfData kz3(const FieldSpec& f) { return group_algebra(cyclic_group(3, "g"), f); }
HopfData ks3(const FieldSpec& f) { return group_algebra(symmetric_group3(), f); }

HopfData named(HopfData h, const std::string& name) {
    h.name = name;
    return h;
}

BraceData named(BraceData b, const std::string& name) {
    b.name = name;
    b.first.name = name;
    return b;
}

const std::map<std::string, std::function<HopfData(const FieldSpec&)>>& base_hopf() {
    static const std::map<std::string, std::function<HopfData(const FieldSpec&)>> m{
        {"z2", kz2},
        {"z3", kz3},
        {"klein", [](const FieldSpec& f) { return group_algebra(klein_group(), f); }},
        {"s3", ks3},
        {"d4", [](const FieldSpec& f) { return group_algebra(dihedral_group4(), f); }},
        {"h4", [](const FieldSpec& f) { return sweedler_h4(f); }},
    };
    return m;
}

void require_visible(const std::string& name, ZooKind kind, const ZooOptions& opts) {
    for (const auto& e : zoo_entries()) {
        if (e.name != name || e.kind != kind) continue;
        if (e.extended_only && !opts.extended) {
            throw HopfError(ErrorKind::UnknownObject, name + " is only available with --extended");
        }
        return;
    }
    throw HopfError(ErrorKind::UnknownObject, std::string("no ") + zoo_kind_name(kind) + " named " + name);
}

// A = k^Z2 (dual basis), H = kZ3, phi(h) = h (x) f_1 + h^-1 (x) f_a.
MatchedPairData inversion_pair(const FieldSpec& f) {
    MatchedPairData mp;
    mp.name = "inversion-z3";
    mp.A = dual_hopf(kz2(f));
    mp.H = kz3(f);
    mp.rho = trivial_left_coaction(mp.H, 2);
    mp.phi = StructureMap({3}, {3, 2});
    for (std::uint32_t h = 0; h < 3; ++h) {
        SparseVec v({3, 2});
        v.add(Tuple{h, 0}, f.one());
        v.add(Tuple{(3 - h) % 3, 1}, f.one());
        mp.phi.set(h, v);
    }
    return mp;
}

MatchedPairData graded_pair(const std::string& name, const HopfData& A, const StructureMap& theta, const FieldSpec& f) {
    MatchedPairData mp;
    mp.name = name;
    mp.A = A;
    mp.H = kz2(f);
    mp.rho = involution_coaction(mp.H, theta);
    mp.phi = trivial_right_coaction(2, A);
    return mp;
}

StructureMap z3_inversion(const FieldSpec& f) {
    StructureMap t({3}, {3});
    for (std::uint32_t k = 0; k < 3; ++k) t.set(k, SparseVec::basis({3}, (3 - k) % 3, f.one()));
    return t;
}

MatchedPairData double_dual_pair(const HopfData& H) {
    MatchedPairData mp = matched_from_rmatrix(opposite(H), dual_hopf(H), canonical_element(H));
    mp.name = "double-dual(" + H.name + ")";
    return mp;
}

}  // namespace

const char* zoo_kind_name(ZooKind k) {
    switch (k) {
        case ZooKind::hopf: return "hopf";
        case ZooKind::brace: return "brace";
        case ZooKind::matched: return "matched";
        case ZooKind::rmatrix: return "rmatrix";
        case ZooKind::lazy: return "lazy";
    }
    return "?";
}

const std::vector<ZooEntry>& zoo_entries() {
    static const std::vector<ZooEntry> entries = [] {
        std::vector<ZooEntry> v;
        const std::vector<std::pair<std::string, std::string>> groups{
            {"z2", "group algebra kZ2"},        {"z3", "group algebra kZ3"},
            {"klein", "group algebra k(Z2xZ2)"}, {"s3", "group algebra kS3"},
            {"d4", "group algebra kD4"},        {"h4", "Sweedler's 4-dimensional Hopf algebra"},
        };
        for (const auto& [n, d] : groups) v.push_back({n, ZooKind::hopf, d});
        for (const auto& [n, d] : groups) v.push_back({"dual-" + n, ZooKind::hopf, "dual of " + n});
        v.push_back({"h4-z2", ZooKind::hopf, "bicrossed coproduct H4 >< kZ2 (dim 8)"});
        v.push_back({"smash-z3-z2", ZooKind::hopf, "smash coproduct kZ3 # kZ2, kZ2 grading by inversion (dim 6)"});

        for (const auto& [n, d] : groups) v.push_back({"trivial-" + n, ZooKind::brace, "trivial brace on " + n});
        v.push_back({"trivial-dual-s3", ZooKind::brace, "trivial brace on dual-s3"});
        v.push_back({"h4-cop", ZooKind::brace, "(H4, Delta, Delta^cop)"});
        v.push_back({"h4-cop-rev", ZooKind::brace, "(H4, Delta^cop, Delta)"});
        v.push_back({"dual-s3-cop", ZooKind::brace, "(k^S3, Delta, Delta^cop)"});
        v.push_back({"dual-s3-cop-rev", ZooKind::brace, "(k^S3, Delta^cop, Delta)"});
        v.push_back({"long-z2", ZooKind::brace, "kZ2 twisted by the copairing R0 (trivial twist)"});
        v.push_back({"long-d4", ZooKind::brace, "kD4 twisted by the Long copairing R_D4"});
        v.push_back({"h4-z2", ZooKind::brace, "(H4 >< kZ2, Delta~, Delta^)"});
        v.push_back({"graded-dual-s3", ZooKind::brace, "(k^S3 (x) kZ2, Delta^, Delta~) from an involution grading"});
        v.push_back({"double-dual-z2", ZooKind::brace, "D(kZ2)* (dim 4)"});
        v.push_back({"double-dual-z3", ZooKind::brace, "D(kZ3)* (dim 9)"});
        v.push_back({"double-dual-s3", ZooKind::brace, "D(kS3)* (dim 36)", true});

        v.push_back({"h4-z2", ZooKind::matched, "pair (H4, kZ2) from the weak R-matrix R"});
        v.push_back({"dual-s3-cop", ZooKind::matched, "pair from the commutative brace dual-s3-cop"});
        v.push_back({"graded-z3", ZooKind::matched, "(kZ3, kZ2), rho grading by inversion, trivial phi"});
        v.push_back({"graded-dual-s3", ZooKind::matched, "(k^S3 with Delta^cop, kZ2), rho grading by s-conjugation"});
        v.push_back({"inversion-z3", ZooKind::matched, "(k^Z2, kZ3), phi by inversion; fails the phi splitting"});
        v.push_back({"double-dual-z2", ZooKind::matched, "(kZ2^op, kZ2*) from the canonical element"});
        v.push_back({"double-dual-z3", ZooKind::matched, "(kZ3^op, kZ3*) from the canonical element"});
        v.push_back({"double-dual-s3", ZooKind::matched, "(kS3^op, kS3*) from the canonical element", true});

        v.push_back({"h4-z2", ZooKind::rmatrix, "weak R-matrix (1(x)1 + 1(x)a + g(x)1 - g(x)a)/2 in H4 (x) kZ2"});
        v.push_back({"double-dual-z3", ZooKind::rmatrix, "canonical element in kZ3^op (x) kZ3*"});
        v.push_back({"long-z2", ZooKind::rmatrix, "copairing R0 on kZ2"});
        v.push_back({"long-d4", ZooKind::rmatrix, "Long copairing R_D4 on kD4"});

        v.push_back({"laurent", ZooKind::lazy, "Laurent brace on k[g, g^-1, x]"});
        return v;
    }();
    return entries;
}

std::vector<std::string> zoo_names(ZooKind kind, const ZooOptions& opts) {
    std::vector<std::string> out;
    for (const auto& e : zoo_entries()) {
        if (e.kind == kind && (!e.extended_only || opts.extended)) out.push_back(e.name);
    }
    return out;
}

SparseVec long_copairing_z2(const FieldSpec& f) {
    const Scalar h = half(f);
    SparseVec R({2, 2});
    R.add(Tuple{0, 0}, h);
    R.add(Tuple{0, 1}, h);
    R.add(Tuple{1, 0}, h);
    R.add(Tuple{1, 1}, -h);
    return R;
}

SparseVec long_copairing_d4(const FieldSpec& f) {
    const Scalar h = half(f);
    // e = 0, r2 = 2, s = 4
    SparseVec R({8, 8});
    R.add(Tuple{0, 0}, h);
    R.add(Tuple{0, 4}, h);
    R.add(Tuple{2, 0}, h);
    R.add(Tuple{2, 4}, -h);
    return R;
}

StructureMap s3_conjugation_on_dual(const FieldSpec& f) {
    const HopfData S3 = ks3(f);
    const std::uint32_t s = S3.algebra.index_of("s");
    StructureMap t({6}, {6});
    for (std::uint32_t g = 0; g < 6; ++g) {
        const SparseVec sg = S3.algebra.product(S3.basis(s), S3.basis(g));
        const SparseVec sgs = S3.algebra.product(sg, S3.basis(s));
        t.set(g, SparseVec::basis({6}, sgs.entries().begin()->first, f.one()));
    }
    return t;
}

HopfData zoo_hopf(const std::string& name, const ZooOptions& opts) {
    require_visible(name, ZooKind::hopf, opts);
    const FieldSpec& f = opts.field;
    const auto& base = base_hopf();
    if (auto it = base.find(name); it != base.end()) return named(it->second(f), name);
    if (name.rfind("dual-", 0) == 0) return named(dual_hopf(base.at(name.substr(5))(f)), name);
    if (name == "h4-z2") return named(zoo_brace("h4-z2", opts).first, name);
    if (name == "smash-z3-z2") {
        MatchedPairData mp = zoo_matched("graded-z3", opts);
        return named(smash_coproduct(mp.A, mp.H, mp.rho), name);
    }
    throw HopfError(ErrorKind::UnknownObject, "no hopf named " + name);
}

BraceData zoo_brace(const std::string& name, const ZooOptions& opts) {
    require_visible(name, ZooKind::brace, opts);
    const FieldSpec& f = opts.field;
    const auto& base = base_hopf();
    if (name.rfind("trivial-", 0) == 0) {
        const std::string h = name.substr(8);
        if (base.count(h)) return named(trivial_brace(base.at(h)(f)), name);
        return named(trivial_brace(zoo_hopf(h, opts)), name);
    }
    if (name == "h4-cop") return named(cop_brace(sweedler_h4(f)), name);
    if (name == "h4-cop-rev") return named(cop_brace_reversed(sweedler_h4(f)), name);
    if (name == "dual-s3-cop") return named(cop_brace(dual_hopf(ks3(f))), name);
    if (name == "dual-s3-cop-rev") return named(cop_brace_reversed(dual_hopf(ks3(f))), name);
    if (name == "long-z2") return named(long_brace(kz2(f), long_copairing_z2(f)), name);
    if (name == "long-d4") return named(long_brace(base.at("d4")(f), long_copairing_d4(f)), name);
    if (name == "h4-z2") return named(h4_z2_brace(f), name);
    if (name == "graded-dual-s3") {
        MatchedPairData mp = zoo_matched("graded-dual-s3", opts);
        return named(tensor_bicrossed_brace(cop_brace(dual_hopf(ks3(f))), mp.H, mp), name);
    }
    if (name == "double-dual-z2") return named(drinfeld_double_dual(kz2(f)).brace, name);
    if (name == "double-dual-z3") return named(drinfeld_double_dual(kz3(f)).brace, name);
    if (name == "double-dual-s3") return named(drinfeld_double_dual(ks3(f)).brace, name);
    throw HopfError(ErrorKind::UnknownObject, "no brace named " + name);
}

MatchedPairData zoo_matched(const std::string& name, const ZooOptions& opts) {
    require_visible(name, ZooKind::matched, opts);
    const FieldSpec& f = opts.field;
    MatchedPairData mp;
    if (name == "h4-z2") {
        mp = matched_from_rmatrix(sweedler_h4(f), kz2(f), h4_z2_rmatrix(f));
    } else if (name == "dual-s3-cop") {
        mp = brace_to_matched(zoo_brace("dual-s3-cop", opts));
    } else if (name == "graded-z3") {
        mp = graded_pair(name, kz3(f), z3_inversion(f), f);
    } else if (name == "graded-dual-s3") {
        mp = graded_pair(name, cop_brace(dual_hopf(ks3(f))).second(), s3_conjugation_on_dual(f), f);
    } else if (name == "inversion-z3") {
        mp = inversion_pair(f);
    } else if (name == "double-dual-z2") {
        mp = double_dual_pair(kz2(f));
    } else if (name == "double-dual-z3") {
        mp = double_dual_pair(kz3(f));
    } else if (name == "double-dual-s3") {
        mp = double_dual_pair(ks3(f));
    } else {
        throw HopfError(ErrorKind::UnknownObject, "no matched pair named " + name);
    }
    mp.name = name;
    return mp;
}

ZooRMatrix zoo_rmatrix(const std::string& name, const ZooOptions& opts) {
    require_visible(name, ZooKind::rmatrix, opts);
    const FieldSpec& f = opts.field;
    ZooRMatrix z;
    z.name = name;
    if (name == "h4-z2") {
        z.kind = "weak";
        z.H = sweedler_h4(f);
        z.A = kz2(f);
        z.R = h4_z2_rmatrix(f);
    } else if (name == "double-dual-z3") {
        z.kind = "weak";
        const HopfData H = kz3(f);
        z.H = opposite(H);
        z.A = dual_hopf(H);
        z.R = canonical_element(H);
    } else if (name == "long-z2") {
        z.kind = "long";
        z.H = z.A = kz2(f);
        z.R = long_copairing_z2(f);
    } else if (name == "long-d4") {
        z.kind = "long";
        z.H = z.A = base_hopf().at("d4")(f);
        z.R = long_copairing_d4(f);
    } else {
        throw HopfError(ErrorKind::UnknownObject, "no rmatrix named " + name);
    }
    return z;
}

LazyHopfData zoo_lazy(const std::string& name, const ZooOptions& opts) {
    require_visible(name, ZooKind::lazy, opts);
    return laurent_brace(opts.field);
}

}  // namespace hopfk
