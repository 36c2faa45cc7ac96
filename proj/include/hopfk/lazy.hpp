#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopfk/report.hpp"
#include "hopfk/scalar.hpp"

namespace hopfk {

// g^a x^b in k[g, g^-1, x].
struct LaurentMonomial {
    long a = 0;
    unsigned b = 0;

    auto operator<=>(const LaurentMonomial&) const = default;
    std::string label() const;
};

LaurentMonomial operator*(const LaurentMonomial& u, const LaurentMonomial& v);

// Finite linear combination of tensors of monomials with a fixed number of legs.
class LazyVec {
public:
    using Key = std::vector<LaurentMonomial>;

    LazyVec() = default;
    explicit LazyVec(std::size_t legs) : legs_(legs) {}
    static LazyVec mono(const LaurentMonomial& m, const Scalar& c = Scalar(1));
    static LazyVec scalar(const Scalar& c);

    std::size_t legs() const { return legs_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Scalar& c);
    LazyVec& operator+=(const LazyVec& o);
    LazyVec& operator-=(const LazyVec& o);
    friend LazyVec operator-(LazyVec a, const LazyVec& b) { return a -= b; }
    LazyVec& operator*=(const Scalar& c);
    bool operator==(const LazyVec& o) const { return legs_ == o.legs_ && terms_ == o.terms_; }

    std::vector<std::pair<std::vector<std::string>, std::string>> render() const;

private:
    std::size_t legs_ = 1;
    std::map<Key, Scalar> terms_;
};

using LazyMap = std::function<LazyVec(const LaurentMonomial&)>;

// Structure maps given monomial by monomial. The algebra is commutative and
// monomials multiply by adding exponents.
struct LazyHopfData {
    std::string name;
    FieldSpec field;
    LazyMap comult;
    LazyMap comult_prime;
    LazyMap counit;  // one monomial -> zero-leg vector
    LazyMap antipode_S;
    LazyMap antipode_T;
};

LazyVec lazy_tensor(const LazyVec& u, const LazyVec& v);
// Applies f to leg `leg`, replacing it by f's output legs.
LazyVec lazy_apply(const LazyMap& f, const LazyVec& v, std::size_t leg);
// Leg i times leg j lands at min(i, j); the other leg is removed.
LazyVec lazy_multiply(const LazyVec& v, std::size_t i, std::size_t j);
LazyVec lazy_permute(const LazyVec& v, const std::vector<std::size_t>& perm);

// Delta(g) = g (x) g, Delta(x) = x (x) 1 + 1 (x) x, Delta'(x) = x (x) 1 + g (x) x,
// S(x) = -x, T(g) = g^-1, T(x) = -g^-1 x, all extended multiplicatively.
LazyHopfData laurent_brace(const FieldSpec& field = FieldSpec::rationals());

// Monomials g^a x^b with |a| <= amax and 0 <= b <= bmax.
std::vector<LaurentMonomial> laurent_window(long amax, unsigned bmax);

// Both sides of the brace compatibility at one monomial.
LazyVec brace_lhs(const LazyHopfData& L, const LaurentMonomial& m);
LazyVec brace_rhs(const LazyHopfData& L, const LaurentMonomial& m);

// Per monomial: coassociativity, counit and antipode laws of both halves and
// the brace compatibility. Each check is a finite exact computation.
CheckReport check_brace_on_monomials(const LazyHopfData& L, const std::vector<LaurentMonomial>& test_set);
// Delta' and Delta multiplicative on all products of pairs from test_set.
CheckReport check_comultiplicative_on_products(const LazyHopfData& L, const std::vector<LaurentMonomial>& test_set);
// rho(h) = S(h1) h21' (x) h22' and the cocycle identity
// h1' (x) h2' = h1 h2(-1) (x) h2(0) with pi = id, per monomial.
LazyMap lazy_rho(const LazyHopfData& L);
CheckReport check_cocycle_on_monomials(const LazyHopfData& L, const std::vector<LaurentMonomial>& test_set);

}  // namespace hopfk
