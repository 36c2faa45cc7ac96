#include "hopfk/tensor.hpp"

#include <algorithm>

#include "hopfk/error.hpp"

namespace hopfk {

std::uint64_t volume(const Dims& dims) {
    std::uint64_t v = 1;
    for (auto d : dims) v *= d;
    return v;
}

std::uint64_t flatten(const Dims& dims, const Tuple& t) {
    if (t.size() != dims.size()) throw HopfError(ErrorKind::DimensionMismatch, "tuple length differs from leg count");
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        if (t[k] >= dims[k]) throw HopfError(ErrorKind::DimensionMismatch, "tuple entry out of range");
        idx = idx * dims[k] + t[k];
    }
    return idx;
}

Tuple unflatten(const Dims& dims, std::uint64_t idx) {
    Tuple t(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        t[k] = static_cast<std::uint32_t>(idx % dims[k]);
        idx /= dims[k];
    }
    return t;
}

SparseVec SparseVec::basis(const Dims& dims, std::uint64_t idx, const Scalar& c) {
    SparseVec v(dims);
    if (idx >= v.dim()) throw HopfError(ErrorKind::DimensionMismatch, "basis index out of range");
    v.add(idx, c);
    return v;
}

SparseVec SparseVec::basis(const Dims& dims, const Tuple& t, const Scalar& c) {
    return basis(dims, flatten(dims, t), c);
}

SparseVec SparseVec::scalar(const Scalar& c) {
    SparseVec v(Dims{});
    v.add(0, c);
    return v;
}

Scalar SparseVec::coeff(std::uint64_t idx) const {
    auto it = entries_.find(idx);
    return it == entries_.end() ? Scalar(0) : it->second;
}

void SparseVec::add(std::uint64_t idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

SparseVec& SparseVec::operator+=(const SparseVec& o) {
    if (o.dims_ != dims_) throw HopfError(ErrorKind::DimensionMismatch, "adding elements of different spaces");
    for (const auto& [i, c] : o.entries_) add(i, c);
    return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& o) {
    if (o.dims_ != dims_) throw HopfError(ErrorKind::DimensionMismatch, "subtracting elements of different spaces");
    for (const auto& [i, c] : o.entries_) add(i, -c);
    return *this;
}

SparseVec& SparseVec::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [i, x] : entries_) x *= c;
    return *this;
}

bool SparseVec::operator==(const SparseVec& o) const {
    if (dims_ != o.dims_ || entries_.size() != o.entries_.size()) return false;
    auto a = entries_.begin();
    auto b = o.entries_.begin();
    for (; a != entries_.end(); ++a, ++b) {
        if (a->first != b->first || a->second != b->second) return false;
    }
    return true;
}

Scalar SparseVec::as_scalar() const {
    if (!dims_.empty()) throw HopfError(ErrorKind::DimensionMismatch, "element is not a scalar");
    return coeff(0);
}

SparseVec tensor(const SparseVec& a, const SparseVec& b) {
    Dims d = a.dims();
    d.insert(d.end(), b.dims().begin(), b.dims().end());
    SparseVec r(d);
    const std::uint64_t bd = b.dim();
    for (const auto& [i, x] : a.entries()) {
        for (const auto& [j, y] : b.entries()) r.add(i * bd + j, x * y);
    }
    return r;
}

SparseVec reshape(const SparseVec& v, const Dims& dims) {
    if (volume(dims) != v.dim()) throw HopfError(ErrorKind::DimensionMismatch, "reshape changes the volume");
    SparseVec r(dims);
    for (const auto& [i, c] : v.entries()) r.add(i, c);
    return r;
}

namespace {

void check_perm(std::size_t n, const std::vector<std::size_t>& perm) {
    if (perm.size() != n) throw HopfError(ErrorKind::InvalidPermutation, "permutation length differs from leg count");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) throw HopfError(ErrorKind::InvalidPermutation, "not a permutation");
        seen[p] = true;
    }
}

}  // namespace

SparseVec permute(const SparseVec& v, const std::vector<std::size_t>& perm) {
    const std::size_t n = v.legs();
    check_perm(n, perm);
    Dims nd(n);
    for (std::size_t k = 0; k < n; ++k) nd[k] = v.dims()[perm[k]];
    SparseVec r(nd);
    Tuple nt(n);
    for (const auto& [i, c] : v.entries()) {
        Tuple t = unflatten(v.dims(), i);
        for (std::size_t k = 0; k < n; ++k) nt[k] = t[perm[k]];
        r.add(flatten(nd, nt), c);
    }
    return r;
}

StructureMap::StructureMap(Dims in, Dims out) : in_(std::move(in)), out_(std::move(out)) {
    table_.assign(volume(in_), SparseVec(out_));
}

StructureMap StructureMap::identity(const Dims& dims) {
    StructureMap f(dims, dims);
    for (std::uint64_t i = 0; i < f.table_.size(); ++i) f.table_[i].add(i, Scalar(1));
    return f;
}

StructureMap StructureMap::from_function(const Dims& in, const Dims& out,
                                         const std::function<SparseVec(std::uint64_t)>& fn) {
    StructureMap f(in, out);
    for (std::uint64_t i = 0; i < f.table_.size(); ++i) f.set(i, fn(i));
    return f;
}

void StructureMap::set(std::uint64_t idx, SparseVec v) {
    if (v.dims() != out_) throw HopfError(ErrorKind::SignatureMismatch, "image lives in the wrong space");
    if (idx >= table_.size()) throw HopfError(ErrorKind::DimensionMismatch, "input index out of range");
    table_[idx] = std::move(v);
}

SparseVec StructureMap::operator()(const SparseVec& v) const {
    if (v.dims() != in_) throw HopfError(ErrorKind::SignatureMismatch, "argument lives in the wrong space");
    SparseVec r(out_);
    for (const auto& [i, c] : v.entries()) {
        for (const auto& [j, d] : table_[i].entries()) r.add(j, c * d);
    }
    return r;
}

bool StructureMap::operator==(const StructureMap& o) const {
    return in_ == o.in_ && out_ == o.out_ && table_ == o.table_;
}

StructureMap compose(const StructureMap& f, const StructureMap& g) {
    if (g.out_dims() != f.in_dims()) throw HopfError(ErrorKind::SignatureMismatch, "compose: output of g is not the input of f");
    return StructureMap::from_function(g.in_dims(), f.out_dims(), [&](std::uint64_t i) { return f(g.at(i)); });
}

StructureMap tensor(const StructureMap& f, const StructureMap& g) {
    Dims in = f.in_dims();
    in.insert(in.end(), g.in_dims().begin(), g.in_dims().end());
    Dims out = f.out_dims();
    out.insert(out.end(), g.out_dims().begin(), g.out_dims().end());
    const std::uint64_t gin = volume(g.in_dims());
    return StructureMap::from_function(in, out, [&](std::uint64_t i) { return tensor(f.at(i / gin), g.at(i % gin)); });
}

StructureMap leg_permute(const Dims& dims, const std::vector<std::size_t>& perm) {
    check_perm(dims.size(), perm);
    Dims out(dims.size());
    for (std::size_t k = 0; k < dims.size(); ++k) out[k] = dims[perm[k]];
    return StructureMap::from_function(dims, out, [&](std::uint64_t i) { return permute(SparseVec::basis(dims, i), perm); });
}

SparseVec apply_at(const StructureMap& f, const SparseVec& v, std::size_t leg) {
    const Dims& d = v.dims();
    const std::size_t r = f.in_arity();
    if (leg + r > d.size() || !std::equal(f.in_dims().begin(), f.in_dims().end(), d.begin() + static_cast<std::ptrdiff_t>(leg))) {
        throw HopfError(ErrorKind::SignatureMismatch, "apply_at: map input does not match the selected legs");
    }
    std::uint64_t suffix = 1;
    for (std::size_t k = leg + r; k < d.size(); ++k) suffix *= d[k];
    const std::uint64_t inner = volume(f.in_dims());
    const std::uint64_t outer = volume(f.out_dims());

    Dims nd(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(leg));
    nd.insert(nd.end(), f.out_dims().begin(), f.out_dims().end());
    nd.insert(nd.end(), d.begin() + static_cast<std::ptrdiff_t>(leg + r), d.end());
    SparseVec res(nd);
    for (const auto& [idx, c] : v.entries()) {
        const std::uint64_t suf = idx % suffix;
        const std::uint64_t mid = (idx / suffix) % inner;
        const std::uint64_t pre = idx / (suffix * inner);
        for (const auto& [o, x] : f.at(mid).entries()) res.add((pre * outer + o) * suffix + suf, c * x);
    }
    return res;
}

SparseVec multiply_legs(const StructureMap& m, const SparseVec& v, std::size_t i, std::size_t j) {
    const std::size_t n = v.legs();
    if (i >= n || j >= n || i == j) throw HopfError(ErrorKind::InvalidPermutation, "multiply_legs: bad leg pair");
    const std::size_t p = std::min(i, j);
    if (j == i + 1) return apply_at(m, v, i);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == p) {
            order.push_back(i);
            order.push_back(j);
        } else if (k != i && k != j) {
            order.push_back(k);
        }
    }
    return apply_at(m, permute(v, order), p);
}

}  // namespace hopfk
