#include "hopfk/lazy.hpp"

#include <stdexcept>

namespace hopfk {

std::string LaurentMonomial::label() const {
    std::string s;
    if (a == 1) s = "g";
    else if (a != 0) s = "g^" + std::to_string(a);
    if (b == 1) s += "x";
    else if (b != 0) s += "x^" + std::to_string(b);
    return s.empty() ? "1" : s;
}

LaurentMonomial operator*(const LaurentMonomial& u, const LaurentMonomial& v) { return {u.a + v.a, u.b + v.b}; }

LazyVec LazyVec::mono(const LaurentMonomial& m, const Scalar& c) {
    LazyVec v(1);
    v.add({m}, c);
    return v;
}

LazyVec LazyVec::scalar(const Scalar& c) {
    LazyVec v(0);
    v.add({}, c);
    return v;
}

void LazyVec::add(const Key& k, const Scalar& c) {
    if (k.size() != legs_) throw std::logic_error("LazyVec: wrong number of legs");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LazyVec& LazyVec::operator+=(const LazyVec& o) {
    if (terms_.empty()) legs_ = o.legs_;
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

LazyVec& LazyVec::operator-=(const LazyVec& o) {
    if (terms_.empty()) legs_ = o.legs_;
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

LazyVec& LazyVec::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::vector<std::pair<std::vector<std::string>, std::string>> LazyVec::render() const {
    std::vector<std::pair<std::vector<std::string>, std::string>> out;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> labels;
        for (const auto& m : k) labels.push_back(m.label());
        out.emplace_back(std::move(labels), c.str());
    }
    return out;
}

LazyVec lazy_tensor(const LazyVec& u, const LazyVec& v) {
    LazyVec r(u.legs() + v.legs());
    for (const auto& [ku, cu] : u.terms()) {
        for (const auto& [kv, cv] : v.terms()) {
            LazyVec::Key k = ku;
            k.insert(k.end(), kv.begin(), kv.end());
            r.add(k, cu * cv);
        }
    }
    return r;
}

LazyVec lazy_apply(const LazyMap& f, const LazyVec& v, std::size_t leg) {
    LazyVec r;
    bool first = true;
    for (const auto& [k, c] : v.terms()) {
        const LazyVec img = f(k[leg]);
        if (first) {
            r = LazyVec(v.legs() - 1 + img.legs());
            first = false;
        }
        for (const auto& [ki, ci] : img.terms()) {
            LazyVec::Key nk(k.begin(), k.begin() + static_cast<long>(leg));
            nk.insert(nk.end(), ki.begin(), ki.end());
            nk.insert(nk.end(), k.begin() + static_cast<long>(leg) + 1, k.end());
            r.add(nk, c * ci);
        }
    }
    if (first) r = LazyVec(v.legs());
    return r;
}

LazyVec lazy_multiply(const LazyVec& v, std::size_t i, std::size_t j) {
    LazyVec r(v.legs() - 1);
    const std::size_t lo = std::min(i, j);
    const std::size_t hi = std::max(i, j);
    for (const auto& [k, c] : v.terms()) {
        LazyVec::Key nk = k;
        nk[lo] = k[i] * k[j];
        nk.erase(nk.begin() + static_cast<long>(hi));
        r.add(nk, c);
    }
    return r;
}

LazyVec lazy_permute(const LazyVec& v, const std::vector<std::size_t>& perm) {
    LazyVec r(v.legs());
    for (const auto& [k, c] : v.terms()) {
        LazyVec::Key nk(k.size());
        for (std::size_t p = 0; p < perm.size(); ++p) nk[p] = k[perm[p]];
        r.add(nk, c);
    }
    return r;
}

namespace {

Scalar binomial(const FieldSpec& f, unsigned n, unsigned k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return f.from(mpq_class(z));
}

Scalar sign(const FieldSpec& f, unsigned b) { return b % 2 ? -f.one() : f.one(); }

// Chain-style helper over lazy vectors.
class LazyChain {
public:
    explicit LazyChain(LazyVec v) : v_(std::move(v)) {}
    LazyChain& ap(const LazyMap& f, std::size_t leg) {
        v_ = lazy_apply(f, v_, leg);
        return *this;
    }
    LazyChain& mul(std::size_t i, std::size_t j) {
        v_ = lazy_multiply(v_, i, j);
        return *this;
    }
    LazyChain& perm(const std::vector<std::size_t>& p) {
        v_ = lazy_permute(v_, p);
        return *this;
    }
    LazyVec take() { return std::move(v_); }

private:
    LazyVec v_;
};

CheckReport mismatch(const std::string& axiom, const std::vector<LaurentMonomial>& witness, const LazyVec& diff) {
    CheckReport r;
    r.pass = false;
    r.failed_axiom = axiom;
    for (const auto& m : witness) r.witness_labels.push_back(m.label());
    r.residual_terms = diff.render();
    return r;
}

// Checks lhs == rhs, recording the first failure in `out`.
bool agree(CheckReport& out, const std::string& axiom, const std::vector<LaurentMonomial>& witness, const LazyVec& lhs,
           const LazyVec& rhs) {
    LazyVec d = lhs - rhs;
    if (d.is_zero()) return true;
    out = mismatch(axiom, witness, d);
    return false;
}

LazyVec unit_times(const LazyVec& s) {
    // scalar (zero legs) -> scalar * 1
    LazyVec r(1);
    for (const auto& [k, c] : s.terms()) r.add({LaurentMonomial{}}, c);
    return r;
}

bool check_half(CheckReport& out, const LazyHopfData& L, const LazyMap& d, const LazyMap& anti, const std::string& tag,
                const LaurentMonomial& m) {
    const LazyVec v = LazyVec::mono(m, L.field.one());
    const std::vector<LaurentMonomial> w{m};
    const LazyVec dm = lazy_apply(d, v, 0);
    if (!agree(out, tag + " coassociative", w, lazy_apply(d, dm, 0), lazy_apply(d, dm, 1))) return false;
    if (!agree(out, tag + " left counit", w, LazyChain(dm).ap(L.counit, 0).take(), v) ||
        !agree(out, tag + " right counit", w, LazyChain(dm).ap(L.counit, 1).take(), v)) {
        return false;
    }
    const LazyVec unit_side = unit_times(lazy_apply(L.counit, v, 0));
    if (!agree(out, tag + " left antipode", w, LazyChain(dm).ap(anti, 0).mul(0, 1).take(), unit_side)) return false;
    if (!agree(out, tag + " right antipode", w, LazyChain(dm).ap(anti, 1).mul(0, 1).take(), unit_side)) return false;
    return true;
}

}  // namespace

LazyHopfData laurent_brace(const FieldSpec& field) {
    LazyHopfData L;
    L.name = "laurent";
    L.field = field;
    L.comult = [field](const LaurentMonomial& m) {
        LazyVec r(2);
        for (unsigned k = 0; k <= m.b; ++k) r.add({{m.a, k}, {m.a, m.b - k}}, binomial(field, m.b, k));
        return r;
    };
    L.comult_prime = [field](const LaurentMonomial& m) {
        LazyVec r(2);
        for (unsigned k = 0; k <= m.b; ++k) {
            r.add({{m.a + static_cast<long>(m.b - k), k}, {m.a, m.b - k}}, binomial(field, m.b, k));
        }
        return r;
    };
    L.counit = [field](const LaurentMonomial& m) { return LazyVec::scalar(m.b == 0 ? field.one() : field.zero()); };
    L.antipode_S = [field](const LaurentMonomial& m) { return LazyVec::mono({-m.a, m.b}, sign(field, m.b)); };
    L.antipode_T = [field](const LaurentMonomial& m) {
        return LazyVec::mono({-m.a - static_cast<long>(m.b), m.b}, sign(field, m.b));
    };
    return L;
}

std::vector<LaurentMonomial> laurent_window(long amax, unsigned bmax) {
    std::vector<LaurentMonomial> w;
    for (long a = -amax; a <= amax; ++a) {
        for (unsigned b = 0; b <= bmax; ++b) w.push_back({a, b});
    }
    return w;
}

LazyVec brace_lhs(const LazyHopfData& L, const LaurentMonomial& m) {
    return LazyChain(LazyVec::mono(m, L.field.one())).ap(L.comult_prime, 0).ap(L.comult, 1).take();
}

LazyVec brace_rhs(const LazyHopfData& L, const LaurentMonomial& m) {
    return LazyChain(LazyVec::mono(m, L.field.one()))
        .ap(L.comult, 0)
        .ap(L.comult, 1)
        .ap(L.comult_prime, 2)
        .ap(L.comult_prime, 0)
        .ap(L.antipode_S, 2)
        .perm({0, 2, 3, 1, 4})
        .mul(0, 1)
        .mul(0, 1)
        .take();
}

CheckReport check_brace_on_monomials(const LazyHopfData& L, const std::vector<LaurentMonomial>& test_set) {
    CheckReport out = CheckReport::ok(L.name);
    for (const auto& m : test_set) {
        if (!check_half(out, L, L.comult, L.antipode_S, "first", m)) break;
        if (!check_half(out, L, L.comult_prime, L.antipode_T, "second", m)) break;
        if (!agree(out, "brace compatibility", {m}, brace_lhs(L, m), brace_rhs(L, m))) break;
    }
    out.object = L.name;
    return out;
}

CheckReport check_comultiplicative_on_products(const LazyHopfData& L, const std::vector<LaurentMonomial>& test_set) {
    CheckReport out = CheckReport::ok(L.name);
    for (const auto& u : test_set) {
        for (const auto& v : test_set) {
            const LazyVec uv = LazyVec::mono(u * v, L.field.one());
            const LazyVec pair = lazy_tensor(LazyVec::mono(u, L.field.one()), LazyVec::mono(v, L.field.one()));
            for (const auto& [d, tag] : {std::pair{L.comult, "first"}, std::pair{L.comult_prime, "second"}}) {
                const LazyVec lhs = lazy_apply(d, uv, 0);
                const LazyVec rhs = LazyChain(pair).ap(d, 1).ap(d, 0).mul(0, 2).mul(1, 2).take();
                if (!agree(out, std::string(tag) + " comultiplication multiplicative", {u, v}, lhs, rhs)) {
                    out.object = L.name;
                    return out;
                }
            }
        }
    }
    return out;
}

LazyMap lazy_rho(const LazyHopfData& L) {
    return [L](const LaurentMonomial& m) {
        return LazyChain(LazyVec::mono(m, L.field.one()))
            .ap(L.comult, 0)
            .ap(L.comult_prime, 1)
            .ap(L.antipode_S, 0)
            .mul(0, 1)
            .take();
    };
}

CheckReport check_cocycle_on_monomials(const LazyHopfData& L, const std::vector<LaurentMonomial>& test_set) {
    const LazyMap rho = lazy_rho(L);
    CheckReport out = CheckReport::ok(L.name);
    for (const auto& m : test_set) {
        const LazyVec v = LazyVec::mono(m, L.field.one());
        const LazyVec lhs = lazy_apply(L.comult_prime, v, 0);
        const LazyVec rhs = LazyChain(v).ap(L.comult, 0).ap(rho, 1).mul(0, 1).take();
        if (!agree(out, "cocycle identity", {m}, lhs, rhs)) break;
        // rho counital: eps(h(-1)) h(0) = h
        if (!agree(out, "rho counital", {m}, LazyChain(v).ap(rho, 0).ap(L.counit, 0).take(), v)) break;
    }
    out.object = L.name;
    return out;
}

}  // namespace hopfk
