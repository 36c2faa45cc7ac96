#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hopfk/scalar.hpp"

namespace hopfk {

using Dims = std::vector<std::uint32_t>;
using Tuple = std::vector<std::uint32_t>;

// Product of leg dimensions (1 for no legs).
std::uint64_t volume(const Dims& dims);
// Row-major flattening: (i1,...,in) -> i1*(d2...dn) + ... + in.
std::uint64_t flatten(const Dims& dims, const Tuple& t);
Tuple unflatten(const Dims& dims, std::uint64_t idx);

// Sparse element of a tensor product V1 (x) ... (x) Vn. Stored coefficients
// are never zero.
class SparseVec {
public:
    SparseVec() = default;
    explicit SparseVec(Dims dims) : dims_(std::move(dims)) {}
    static SparseVec basis(const Dims& dims, std::uint64_t idx, const Scalar& c = Scalar(1));
    static SparseVec basis(const Dims& dims, const Tuple& t, const Scalar& c = Scalar(1));
    // Element of the zero-leg space (a scalar).
    static SparseVec scalar(const Scalar& c);

    const Dims& dims() const { return dims_; }
    std::size_t legs() const { return dims_.size(); }
    std::uint64_t dim() const { return volume(dims_); }
    const std::map<std::uint64_t, Scalar>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    Scalar coeff(std::uint64_t idx) const;
    Scalar coeff(const Tuple& t) const { return coeff(flatten(dims_, t)); }
    void add(std::uint64_t idx, const Scalar& c);
    void add(const Tuple& t, const Scalar& c) { add(flatten(dims_, t), c); }

    SparseVec& operator+=(const SparseVec& o);
    SparseVec& operator-=(const SparseVec& o);
    SparseVec& operator*=(const Scalar& c);
    friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
    friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
    friend SparseVec operator*(const Scalar& c, SparseVec a) { return a *= c; }

    bool operator==(const SparseVec& o) const;
    bool operator!=(const SparseVec& o) const { return !(*this == o); }

    // Coefficient of the zero-leg element.
    Scalar as_scalar() const;

private:
    Dims dims_;
    std::map<std::uint64_t, Scalar> entries_;
};

SparseVec tensor(const SparseVec& a, const SparseVec& b);
// Same coefficients viewed in a space of equal volume (e.g. merging legs).
SparseVec reshape(const SparseVec& v, const Dims& dims);
// Leg k of the result is leg perm[k] of v.
SparseVec permute(const SparseVec& v, const std::vector<std::size_t>& perm);

// A linear map V_in1 (x) ... -> W_1 (x) ..., stored as the images of the
// basis tuples of the input space (flattened row-major).
class StructureMap {
public:
    StructureMap() = default;
    StructureMap(Dims in, Dims out);

    static StructureMap identity(const Dims& dims);
    static StructureMap from_function(const Dims& in, const Dims& out,
                                      const std::function<SparseVec(std::uint64_t)>& f);

    const Dims& in_dims() const { return in_; }
    const Dims& out_dims() const { return out_; }
    std::size_t in_arity() const { return in_.size(); }
    std::size_t out_arity() const { return out_.size(); }

    const SparseVec& at(std::uint64_t idx) const { return table_[idx]; }
    const SparseVec& at(const Tuple& t) const { return table_[flatten(in_, t)]; }
    void set(std::uint64_t idx, SparseVec v);
    void set(const Tuple& t, SparseVec v) { set(flatten(in_, t), std::move(v)); }

    // Linear extension to an arbitrary element of the input space.
    SparseVec operator()(const SparseVec& v) const;

    bool operator==(const StructureMap& o) const;
    bool operator!=(const StructureMap& o) const { return !(*this == o); }

private:
    Dims in_;
    Dims out_;
    std::vector<SparseVec> table_;
};

// f after g. Throws SignatureMismatch.
StructureMap compose(const StructureMap& f, const StructureMap& g);
StructureMap tensor(const StructureMap& f, const StructureMap& g);
StructureMap leg_permute(const Dims& dims, const std::vector<std::size_t>& perm);

// Apply f to the legs [leg, leg + f.in_arity()) of v.
SparseVec apply_at(const StructureMap& f, const SparseVec& v, std::size_t leg);
// Multiply leg i by leg j (in that order) with the 2->1 map m. The product
// lands at position min(i, j) and the other leg is removed.
SparseVec multiply_legs(const StructureMap& m, const SparseVec& v, std::size_t i, std::size_t j);

// Fluent wrapper used to spell out Sweedler-notation formulas leg by leg.
class Chain {
public:
    explicit Chain(SparseVec v) : v_(std::move(v)) {}
    Chain& ap(const StructureMap& f, std::size_t leg) {
        v_ = apply_at(f, v_, leg);
        return *this;
    }
    Chain& mul(const StructureMap& m, std::size_t i, std::size_t j) {
        v_ = multiply_legs(m, v_, i, j);
        return *this;
    }
    Chain& perm(const std::vector<std::size_t>& p) {
        v_ = permute(v_, p);
        return *this;
    }
    Chain& tensor_right(const SparseVec& w) {
        v_ = tensor(v_, w);
        return *this;
    }
    Chain& tensor_left(const SparseVec& w) {
        v_ = tensor(w, v_);
        return *this;
    }
    const SparseVec& get() const { return v_; }
    SparseVec take() { return std::move(v_); }

private:
    SparseVec v_;
};

}  // namespace hopfk
