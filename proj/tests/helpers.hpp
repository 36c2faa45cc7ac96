#pragma once

#include <doctest.h>

#include <string>
#include <tuple>
#include <vector>

#include "hopfk/algebra.hpp"
#include "hopfk/report.hpp"

namespace testutil {

using hopfk::HopfData;
using hopfk::Scalar;
using hopfk::SparseVec;

inline Scalar q(long p, long d = 1) { return Scalar(mpq_class(p, d)); }

inline SparseVec el(const HopfData& h, std::vector<std::pair<std::string, Scalar>> terms) {
    SparseVec v({h.dim()});
    for (const auto& [l, c] : terms) v.add(std::uint64_t(h.algebra.index_of(l)), c.to_field(h.field()));
    return v;
}

inline SparseVec el2(const HopfData& a, const HopfData& b, std::vector<std::tuple<std::string, std::string, Scalar>> terms) {
    SparseVec v({a.dim(), b.dim()});
    for (const auto& [x, y, c] : terms) v.add(hopfk::Tuple{a.algebra.index_of(x), b.algebra.index_of(y)}, c.to_field(a.field()));
    return v;
}

inline SparseVec el3(const HopfData& h, std::vector<std::tuple<std::string, std::string, std::string, Scalar>> terms) {
    SparseVec v({h.dim(), h.dim(), h.dim()});
    for (const auto& [x, y, z, c] : terms) {
        v.add(hopfk::Tuple{h.algebra.index_of(x), h.algebra.index_of(y), h.algebra.index_of(z)}, c.to_field(h.field()));
    }
    return v;
}

inline SparseVec at(const hopfk::StructureMap& f, const HopfData& h, const std::string& label) {
    return f.at(std::uint64_t(h.algebra.index_of(label)));
}

inline void require_pass(const hopfk::CheckReport& r) {
    INFO(r.summary());
    REQUIRE(r.pass);
}

}  // namespace testutil
