#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace hopfk {

class Scalar;

// Either the rationals (characteristic 0) or a prime field F_p.
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint64_t characteristic = 0;

    static FieldSpec rationals() { return {}; }
    // Throws NotAField unless p is prime.
    static FieldSpec prime(std::uint64_t p);
    // Accepts "Q" or "Fp:<p>".
    static FieldSpec parse(const std::string& text);

    std::string name() const;
    Scalar zero() const;
    Scalar one() const;
    Scalar from(const mpq_class& q) const;
    Scalar from(long n) const;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t n);

// Exact field element. A scalar built without a field is a rational; it is
// reduced into F_p as soon as it meets an F_p scalar.
class Scalar {
public:
    Scalar() = default;
    Scalar(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    Scalar(int n) : q_(n) {}   // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    static Scalar residue(std::uint64_t r, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
    bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

    // Only meaningful for rationals.
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue_value() const { return r_; }

    Scalar to_field(const FieldSpec& f) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void unify(Scalar& o);

    mpq_class q_{0};
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;  // 0 means rational
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfk
