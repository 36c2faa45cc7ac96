#include "hopfk/hopf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hopfk/error.hpp"
#include "hopfk/linalg.hpp"

namespace hopfk {

LegLabels legs_of(const Labels& l, std::size_t n) { return LegLabels(n, l); }

StructureMap flip(std::uint32_t d1, std::uint32_t d2) { return leg_permute({d1, d2}, {1, 0}); }

CheckReport check_algebra(const AlgebraData& a) {
    const auto& m = a.mult;
    const auto& L = a.labels;
    return first_failure({
        [&] {
            return compare_on_basis(
                "associativity", legs_of(L, 3), legs_of(L, 1),
                [&](const SparseVec& b) { return Chain(b).mul(m, 0, 1).mul(m, 0, 1).take(); },
                [&](const SparseVec& b) { return Chain(b).mul(m, 1, 2).mul(m, 0, 1).take(); });
        },
        [&] {
            return compare_on_basis(
                "left unit", legs_of(L, 1), legs_of(L, 1),
                [&](const SparseVec& b) { return m(tensor(a.unit, b)); }, [](const SparseVec& b) { return b; });
        },
        [&] {
            return compare_on_basis(
                "right unit", legs_of(L, 1), legs_of(L, 1),
                [&](const SparseVec& b) { return m(tensor(b, a.unit)); }, [](const SparseVec& b) { return b; });
        },
    });
}

CheckReport check_coalgebra(const Labels& L, const CoalgebraData& c) {
    const auto& D = c.comult;
    const auto& e = c.counit;
    return first_failure({
        [&] {
            return compare_on_basis(
                "coassociativity", legs_of(L, 1), legs_of(L, 3),
                [&](const SparseVec& b) { return Chain(b).ap(D, 0).ap(D, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(D, 0).ap(D, 1).take(); });
        },
        [&] {
            return compare_on_basis(
                "left counit", legs_of(L, 1), legs_of(L, 1),
                [&](const SparseVec& b) { return Chain(b).ap(D, 0).ap(e, 0).take(); }, [](const SparseVec& b) { return b; });
        },
        [&] {
            return compare_on_basis(
                "right counit", legs_of(L, 1), legs_of(L, 1),
                [&](const SparseVec& b) { return Chain(b).ap(D, 0).ap(e, 1).take(); }, [](const SparseVec& b) { return b; });
        },
    });
}

CheckReport check_coalgebra(const HopfData& h) { return check_coalgebra(h.labels(), h.coalgebra); }

CheckReport check_bialgebra(const HopfData& h) {
    const auto& L = h.labels();
    const auto& m = h.m();
    const auto& D = h.delta();
    const auto& e = h.eps();
    const std::uint32_t n = h.dim();
    CheckReport r = first_failure({
        [&] { return check_algebra(h.algebra); },
        [&] { return check_coalgebra(h); },
        [&] {
            return compare_on_basis(
                "comultiplication multiplicative", legs_of(L, 2), legs_of(L, 2),
                [&](const SparseVec& b) { return Chain(b).mul(m, 0, 1).ap(D, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(D, 1).ap(D, 0).mul(m, 0, 2).mul(m, 1, 2).take(); });
        },
        [&] { return compare_elements("comultiplication unital", legs_of(L, 2), D(h.unit()), tensor(h.unit(), h.unit())); },
        [&] {
            return compare_on_basis(
                "counit multiplicative", legs_of(L, 2), {},
                [&](const SparseVec& b) { return Chain(b).mul(m, 0, 1).ap(e, 0).take(); },
                [&](const SparseVec& b) { return Chain(b).ap(e, 1).ap(e, 0).take(); });
        },
        [&] { return compare_elements("counit unital", {}, e(h.unit()), SparseVec::scalar(Scalar(1))); },
    });
    (void)n;
    r.object = h.name;
    return r;
}

CheckReport check_antipode(const HopfData& h) {
    const auto& L = h.labels();
    const auto& m = h.m();
    const auto& D = h.delta();
    const auto& e = h.eps();
    const auto& S = h.S();
    auto unit_eps = [&](const SparseVec& b) { return tensor(e(b), h.unit()); };
    return first_failure({
        [&] {
            return compare_on_basis(
                "left antipode", legs_of(L, 1), legs_of(L, 1),
                [&](const SparseVec& b) { return Chain(b).ap(D, 0).ap(S, 0).mul(m, 0, 1).take(); }, unit_eps);
        },
        [&] {
            return compare_on_basis(
                "right antipode", legs_of(L, 1), legs_of(L, 1),
                [&](const SparseVec& b) { return Chain(b).ap(D, 0).ap(S, 1).mul(m, 0, 1).take(); }, unit_eps);
        },
    });
}

CheckReport check_hopf(const HopfData& h) {
    CheckReport r = first_failure({[&] { return check_bialgebra(h); }, [&] { return check_antipode(h); }});
    r.object = h.name;
    return r;
}

std::optional<StructureMap> solve_antipode(const HopfData& b) {
    const std::uint32_t n = b.dim();
    // Unknown s(k, a) = coefficient of e_k in S(e_a), column k * n + a.
    // Row (h, t): sum over Delta(h) = c e_a (x) e_b of c s(k, a) (e_k e_b)_t.
    Matrix A(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n);
    std::vector<Scalar> rhs(static_cast<std::size_t>(n) * n, Scalar(0));
    for (std::uint32_t h = 0; h < n; ++h) {
        const SparseVec& dh = b.delta().at(h);
        for (const auto& [idx, c] : dh.entries()) {
            const auto a = static_cast<std::uint32_t>(idx / n);
            const auto bb = static_cast<std::uint32_t>(idx % n);
            for (std::uint32_t k = 0; k < n; ++k) {
                for (const auto& [t, x] : b.m().at(Tuple{k, bb}).entries()) {
                    A.at(static_cast<std::size_t>(h) * n + t, static_cast<std::size_t>(k) * n + a) += c * x;
                }
            }
        }
        const Scalar eh = b.eps().at(h).as_scalar();
        for (const auto& [t, u] : b.unit().entries()) rhs[static_cast<std::size_t>(h) * n + t] = eh * u;
    }
    auto sol = solve_linear(A, rhs);
    if (!sol) return std::nullopt;
    StructureMap S({n}, {n});
    for (std::uint32_t a = 0; a < n; ++a) {
        SparseVec v({n});
        for (std::uint32_t k = 0; k < n; ++k) v.add(k, (*sol)[static_cast<std::size_t>(k) * n + a]);
        S.set(a, std::move(v));
    }
    HopfData trial = b;
    trial.antipode = S;
    if (!check_antipode(trial)) throw HopfError(ErrorKind::NotAHopfAlgebra, "convolution inverse of id is one-sided");
    return S;
}

HopfData dual_hopf(const HopfData& h) {
    const std::uint32_t n = h.dim();
    HopfData d;
    d.name = "dual(" + h.name + ")";
    d.algebra.field = h.field();
    d.algebra.dim = n;
    for (const auto& l : h.labels()) d.algebra.labels.push_back("f_" + l);
    d.algebra.mult = StructureMap({n, n}, {n});
    {
        std::vector<SparseVec> prods(static_cast<std::size_t>(n) * n, SparseVec({n}));
        for (std::uint32_t k = 0; k < n; ++k) {
            for (const auto& [ij, c] : h.delta().at(k).entries()) prods[ij].add(k, c);
        }
        for (std::uint64_t ij = 0; ij < prods.size(); ++ij) d.algebra.mult.set(ij, std::move(prods[ij]));
    }
    d.algebra.unit = SparseVec({n});
    for (std::uint32_t k = 0; k < n; ++k) d.algebra.unit.add(k, h.eps().at(k).as_scalar());
    d.coalgebra.comult = StructureMap({n}, {n, n});
    {
        std::vector<SparseVec> co(n, SparseVec({n, n}));
        for (std::uint64_t ij = 0; ij < static_cast<std::uint64_t>(n) * n; ++ij) {
            for (const auto& [k, c] : h.m().at(ij).entries()) co[k].add(ij, c);
        }
        for (std::uint32_t k = 0; k < n; ++k) d.coalgebra.comult.set(k, std::move(co[k]));
    }
    d.coalgebra.counit = StructureMap({n}, {});
    for (std::uint32_t k = 0; k < n; ++k) d.coalgebra.counit.set(k, SparseVec::scalar(h.unit().coeff(k)));
    d.antipode = StructureMap({n}, {n});
    {
        std::vector<SparseVec> s(n, SparseVec({n}));
        for (std::uint32_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : h.S().at(j).entries()) s[k].add(j, c);
        }
        for (std::uint32_t k = 0; k < n; ++k) d.antipode.set(k, std::move(s[k]));
    }
    return d;
}

namespace {

StructureMap antipode_inverse(const HopfData& h) {
    try {
        return inverse_map(h.S());
    } catch (const HopfError&) {
        throw HopfError(ErrorKind::SingularAntipode, "antipode of " + h.name + " is not bijective");
    }
}

}  // namespace

HopfData opposite(const HopfData& h) {
    HopfData o = h;
    o.name = "op(" + h.name + ")";
    const std::uint32_t n = h.dim();
    o.algebra.mult = compose(h.m(), flip(n, n));
    o.antipode = antipode_inverse(h);
    return o;
}

HopfData co_opposite(const HopfData& h) {
    HopfData o = h;
    o.name = "cop(" + h.name + ")";
    const std::uint32_t n = h.dim();
    o.coalgebra.comult = compose(flip(n, n), h.delta());
    o.antipode = antipode_inverse(h);
    return o;
}

HopfData tensor_hopf(const HopfData& a, const HopfData& b) {
    if (!(a.field() == b.field())) throw HopfError(ErrorKind::FieldMismatch, "tensor_hopf over different fields");
    HopfData t;
    t.name = a.name + "(x)" + b.name;
    t.algebra = tensor_algebra(a.algebra, b.algebra);
    const std::uint32_t n = t.dim();
    const std::uint32_t nb = b.dim();
    t.coalgebra.comult = StructureMap::from_function({n}, {n, n}, [&](std::uint64_t i) {
        // (a1 (x) a2) (x) (b1 (x) b2) -> (a1 b1) (x) (a2 b2)
        SparseVec v = tensor(a.delta().at(i / nb), b.delta().at(i % nb));
        v = permute(v, {0, 2, 1, 3});
        return reshape(v, {n, n});
    });
    t.coalgebra.counit = StructureMap::from_function({n}, {}, [&](std::uint64_t i) {
        return tensor(a.eps().at(i / nb), b.eps().at(i % nb));
    });
    t.antipode = StructureMap::from_function({n}, {n}, [&](std::uint64_t i) {
        return reshape(tensor(a.S().at(i / nb), b.S().at(i % nb)), {n});
    });
    return t;
}

GroupTable cyclic_group(std::uint32_t n, const std::string& gen) {
    GroupTable g;
    g.name = "Z" + std::to_string(n);
    for (std::uint32_t i = 0; i < n; ++i) g.labels.push_back(i == 0 ? "1" : (i == 1 ? gen : gen + std::to_string(i)));
    g.mult.assign(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) g.mult[i][j] = (i + j) % n;
    }
    return g;
}

GroupTable klein_group() {
    GroupTable g;
    g.name = "Z2xZ2";
    g.labels = {"1", "a", "b", "ab"};
    g.mult.assign(4, std::vector<std::uint32_t>(4));
    for (std::uint32_t i = 0; i < 4; ++i) {
        for (std::uint32_t j = 0; j < 4; ++j) g.mult[i][j] = i ^ j;
    }
    return g;
}

namespace {

// Dihedral group of order 2n, elements s^e r^k stored as index e * n + k,
// with r s = s r^-1.
GroupTable dihedral(std::uint32_t n, const std::string& name) {
    GroupTable g;
    g.name = name;
    for (std::uint32_t e = 0; e < 2; ++e) {
        for (std::uint32_t k = 0; k < n; ++k) {
            std::string l = e ? "s" : "";
            if (k == 1) l += "r";
            if (k > 1) l += "r" + std::to_string(k);
            g.labels.push_back(l.empty() ? "e" : l);
        }
    }
    g.mult.assign(2 * n, std::vector<std::uint32_t>(2 * n));
    for (std::uint32_t e1 = 0; e1 < 2; ++e1) {
        for (std::uint32_t k1 = 0; k1 < n; ++k1) {
            for (std::uint32_t e2 = 0; e2 < 2; ++e2) {
                for (std::uint32_t k2 = 0; k2 < n; ++k2) {
                    // s^e1 r^k1 s^e2 r^k2 = s^(e1+e2) r^(k1 * (-1)^e2 + k2)
                    std::uint32_t k = e2 ? (n - k1 + k2) % n : (k1 + k2) % n;
                    g.mult[e1 * n + k1][e2 * n + k2] = ((e1 + e2) % 2) * n + k;
                }
            }
        }
    }
    return g;
}

}  // namespace

GroupTable symmetric_group3() { return dihedral(3, "S3"); }
GroupTable dihedral_group4() { return dihedral(4, "D4"); }

HopfData group_algebra(const GroupTable& g, const FieldSpec& field) {
    const auto n = static_cast<std::uint32_t>(g.labels.size());
    if (n == 0 || g.mult.size() != n) throw HopfError(ErrorKind::NotAGroup, "table shape");
    for (const auto& row : g.mult) {
        if (row.size() != n) throw HopfError(ErrorKind::NotAGroup, "table shape");
        for (auto x : row) {
            if (x >= n) throw HopfError(ErrorKind::NotAGroup, "table not closed");
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            for (std::uint32_t k = 0; k < n; ++k) {
                if (g.mult[g.mult[i][j]][k] != g.mult[i][g.mult[j][k]]) throw HopfError(ErrorKind::NotAGroup, "not associative");
            }
        }
    }
    std::optional<std::uint32_t> e;
    for (std::uint32_t i = 0; i < n && !e; ++i) {
        bool ok = true;
        for (std::uint32_t j = 0; j < n; ++j) ok = ok && g.mult[i][j] == j && g.mult[j][i] == j;
        if (ok) e = i;
    }
    if (!e) throw HopfError(ErrorKind::NotAGroup, "no identity");
    std::vector<std::uint32_t> inv(n, n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (g.mult[i][j] == *e && g.mult[j][i] == *e) inv[i] = j;
        }
        if (inv[i] == n) throw HopfError(ErrorKind::NotAGroup, "element without inverse");
    }
    HopfData h;
    h.name = "k" + g.name;
    h.algebra.field = field;
    h.algebra.dim = n;
    h.algebra.labels = g.labels;
    const Scalar one = field.one();
    h.algebra.mult = StructureMap::from_function({n, n}, {n}, [&](std::uint64_t ij) {
        return SparseVec::basis({n}, g.mult[ij / n][ij % n], one);
    });
    h.algebra.unit = SparseVec::basis({n}, *e, one);
    h.coalgebra.comult = StructureMap::from_function({n}, {n, n}, [&](std::uint64_t i) {
        return SparseVec::basis({n, n}, Tuple{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i)}, one);
    });
    h.coalgebra.counit = StructureMap::from_function({n}, {}, [&](std::uint64_t) { return SparseVec::scalar(one); });
    h.antipode = StructureMap::from_function({n}, {n}, [&](std::uint64_t i) { return SparseVec::basis({n}, inv[i], one); });
    return h;
}

HopfData sweedler_h4(const FieldSpec& field) {
    if (field.characteristic == 2) throw HopfError(ErrorKind::CharacteristicTwo, "Sweedler's algebra needs char != 2");
    const std::uint32_t n = 4;
    enum { I = 0, G = 1, X = 2, GX = 3 };
    const Scalar one = field.one();
    const Scalar mone = -one;
    HopfData h;
    h.name = "H4";
    h.algebra.field = field;
    h.algebra.dim = n;
    h.algebra.labels = {"1", "g", "x", "gx"};
    h.algebra.mult = StructureMap({n, n}, {n});
    auto setm = [&](std::uint32_t a, std::uint32_t b, std::uint32_t c, const Scalar& s) {
        h.algebra.mult.set(Tuple{a, b}, SparseVec::basis({n}, c, s));
    };
    for (std::uint32_t b = 0; b < n; ++b) setm(I, b, b, one);
    setm(G, I, G, one);
    setm(G, G, I, one);
    setm(G, X, GX, one);
    setm(G, GX, X, one);
    setm(X, I, X, one);
    setm(X, G, GX, mone);
    setm(GX, I, GX, one);
    setm(GX, G, X, mone);
    // x x, x gx, gx x, gx gx are zero.
    h.algebra.unit = SparseVec::basis({n}, I, one);
    h.coalgebra.comult = StructureMap({n}, {n, n});
    auto t = [&](std::uint32_t a, std::uint32_t b) { return SparseVec::basis({n, n}, Tuple{a, b}, one); };
    h.coalgebra.comult.set(I, t(I, I));
    h.coalgebra.comult.set(G, t(G, G));
    h.coalgebra.comult.set(X, t(X, G) + t(I, X));
    h.coalgebra.comult.set(GX, t(GX, I) + t(G, GX));
    h.coalgebra.counit = StructureMap({n}, {});
    h.coalgebra.counit.set(I, SparseVec::scalar(one));
    h.coalgebra.counit.set(G, SparseVec::scalar(one));
    h.coalgebra.counit.set(X, SparseVec::scalar(field.zero()));
    h.coalgebra.counit.set(GX, SparseVec::scalar(field.zero()));
    h.antipode = StructureMap({n}, {n});
    h.antipode.set(I, SparseVec::basis({n}, I, one));
    h.antipode.set(G, SparseVec::basis({n}, G, one));
    h.antipode.set(X, SparseVec::basis({n}, GX, one));
    h.antipode.set(GX, SparseVec::basis({n}, X, mone));
    return h;
}

bool is_commutative(const AlgebraData& a) {
    const std::uint32_t n = a.dim;
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            if (a.mult.at(Tuple{i, j}) != a.mult.at(Tuple{j, i})) return false;
        }
    }
    return true;
}

bool is_cocommutative(const HopfData& h) {
    const std::uint32_t n = h.dim();
    for (std::uint32_t i = 0; i < n; ++i) {
        if (permute(h.delta().at(i), {1, 0}) != h.delta().at(i)) return false;
    }
    return true;
}

CheckReport compare_hopf_tables(const HopfData& a, const HopfData& b) {
    if (a.dim() != b.dim()) return CheckReport::failure("dimension", "dimensions differ");
    const auto& L = a.labels();
    auto map_eq = [&](const std::string& name, const StructureMap& f, const StructureMap& g, std::size_t in, std::size_t out) {
        return compare_on_basis(name, legs_of(L, in), legs_of(L, out), [&](const SparseVec& v) { return f(v); },
                                [&](const SparseVec& v) { return g(v); });
    };
    return first_failure({
        [&] { return map_eq("multiplication table", a.m(), b.m(), 2, 1); },
        [&] { return compare_elements("unit", legs_of(L, 1), a.unit(), b.unit()); },
        [&] { return map_eq("comultiplication table", a.delta(), b.delta(), 1, 2); },
        [&] { return map_eq("counit table", a.eps(), b.eps(), 1, 0); },
        [&] { return map_eq("antipode table", a.S(), b.S(), 1, 1); },
    });
}

bool same_tables(const HopfData& a, const HopfData& b) { return compare_hopf_tables(a, b).pass; }

SparseVec to_field(const SparseVec& v, const FieldSpec& field) {
    SparseVec r(v.dims());
    for (const auto& [i, c] : v.entries()) r.add(i, c.to_field(field));
    return r;
}

StructureMap to_field(const StructureMap& f, const FieldSpec& field) {
    return StructureMap::from_function(f.in_dims(), f.out_dims(), [&](std::uint64_t i) { return to_field(f.at(i), field); });
}

HopfData to_field(const HopfData& h, const FieldSpec& field) {
    HopfData r = h;
    r.algebra.field = field;
    r.algebra.mult = to_field(h.m(), field);
    r.algebra.unit = to_field(h.unit(), field);
    r.coalgebra.comult = to_field(h.delta(), field);
    r.coalgebra.counit = to_field(h.eps(), field);
    r.antipode = to_field(h.S(), field);
    return r;
}

}  // namespace hopfk
