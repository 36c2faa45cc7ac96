#include "hopfk/scalar.hpp"

#include <ostream>

#include "hopfk/error.hpp"

namespace hopfk {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime(p)) throw HopfError(ErrorKind::NotAField, std::to_string(p) + " is not prime");
    return {Kind::prime_field, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q" || text == "QQ") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        std::size_t used = 0;
        std::uint64_t p = 0;
        try {
            p = std::stoull(text.substr(3), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size() - 3) throw HopfError(ErrorKind::NotAField, "bad field '" + text + "'");
        return prime(p);
    }
    throw HopfError(ErrorKind::NotAField, "bad field '" + text + "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::name() const {
    return kind == Kind::rationals ? "Q" : "Fp:" + std::to_string(characteristic);
}

Scalar FieldSpec::zero() const { return from(0L); }
Scalar FieldSpec::one() const { return from(1L); }
Scalar FieldSpec::from(long n) const { return from(mpq_class(n)); }

Scalar FieldSpec::from(const mpq_class& q) const {
    Scalar s(q);
    return s.to_field(*this);
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
    Scalar s;
    s.p_ = p;
    s.r_ = r % p;
    return s;
}

Scalar Scalar::to_field(const FieldSpec& f) const {
    if (f.kind == FieldSpec::Kind::rationals) {
        if (p_) throw HopfError(ErrorKind::FieldMismatch, "cannot lift an F_p residue to Q");
        return *this;
    }
    if (p_) {
        if (p_ != f.characteristic) throw HopfError(ErrorKind::FieldMismatch, "mixing F_" + std::to_string(p_) + " and " + f.name());
        return *this;
    }
    std::uint64_t p = f.characteristic;
    std::uint64_t den = reduce(q_.get_den(), p);
    if (den == 0) throw HopfError(ErrorKind::FieldMismatch, "denominator of " + q_.get_str() + " vanishes in " + f.name());
    std::uint64_t num = reduce(q_.get_num(), p);
    return residue(mulmod(num, powmod(den, p - 2, p), p), p);
}

void Scalar::unify(Scalar& o) {
    if (p_ == o.p_) return;
    if (p_ && o.p_) throw HopfError(ErrorKind::FieldMismatch, "mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
    if (p_) {
        o = o.to_field(FieldSpec{FieldSpec::Kind::prime_field, p_});
    } else {
        *this = to_field(FieldSpec{FieldSpec::Kind::prime_field, o.p_});
    }
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (p_) {
        s.r_ = r_ ? p_ - r_ : 0;
    } else {
        s.q_ = -q_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Scalar b = o;
    unify(b);
    if (p_) {
        r_ = (r_ + b.r_) % p_;
    } else {
        q_ += b.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar b = o;
    unify(b);
    if (p_) {
        r_ = mulmod(r_, b.r_, p_);
    } else {
        q_ *= b.q_;
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw HopfError(ErrorKind::NotInvertible, "division by zero");
    if (p_) return residue(powmod(r_, p_ - 2, p_), p_);
    return Scalar(mpq_class(1) / q_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    Scalar b = o;
    unify(b);
    return *this *= b.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ == o.p_) return p_ ? r_ == o.r_ : q_ == o.q_;
    Scalar a = *this;
    Scalar b = o;
    a.unify(b);
    return a.r_ == b.r_;
}

std::string Scalar::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::InvalidPermutation: return "InvalidPermutation";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::NotAField: return "NotAField";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::NotAHopfAlgebra: return "NotAHopfAlgebra";
        case ErrorKind::SingularAntipode: return "SingularAntipode";
        case ErrorKind::NotAGroup: return "NotAGroup";
        case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
        case ErrorKind::BraceCheckFailed: return "BraceCheckFailed";
        case ErrorKind::HarrisonCheckFailed: return "HarrisonCheckFailed";
        case ErrorKind::LongCheckFailed: return "LongCheckFailed";
        case ErrorKind::NotCommutative: return "NotCommutative";
        case ErrorKind::NotCocommutative: return "NotCocommutative";
        case ErrorKind::CocycleCheckFailed: return "CocycleCheckFailed";
        case ErrorKind::RMatrixCheckFailed: return "RMatrixCheckFailed";
        case ErrorKind::Eq31Failed: return "Eq31Failed";
        case ErrorKind::RolesDiffer: return "RolesDiffer";
        case ErrorKind::MatchedCheckFailed: return "MatchedCheckFailed";
        case ErrorKind::ComoduleBialgebraCheckFailed: return "ComoduleBialgebraCheckFailed";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::Eq41Failed: return "Eq41Failed";
        case ErrorKind::Eq42Failed: return "Eq42Failed";
        case ErrorKind::Eq43Failed: return "Eq43Failed";
        case ErrorKind::CounitMismatch: return "CounitMismatch";
        case ErrorKind::UnknownObject: return "UnknownObject";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

}  // namespace hopfk
