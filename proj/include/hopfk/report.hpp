#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hopfk/algebra.hpp"
#include "hopfk/tensor.hpp"

namespace hopfk {

struct CheckReport {
    bool pass = true;
    std::string object;
    std::string failed_axiom;
    Tuple witness;                       // basis indices, one per input leg
    std::vector<std::string> witness_labels;
    SparseVec residual;                  // LHS - RHS at the witness
    // Residual rendered as (label tuple, coefficient) pairs.
    std::vector<std::pair<std::vector<std::string>, std::string>> residual_terms;
    std::string note;

    explicit operator bool() const { return pass; }
    static CheckReport ok(std::string object = {}) {
        CheckReport r;
        r.object = std::move(object);
        return r;
    }
    // Failure without a basis witness (e.g. a singular antipode).
    static CheckReport failure(std::string axiom, std::string note);
    std::string summary() const;
};

// Basis labels of each leg, used to render witnesses and residuals.
using LegLabels = std::vector<Labels>;

using BasisFn = std::function<SparseVec(const SparseVec&)>;

// Evaluates lhs and rhs on every basis tuple of the input space (in
// flattened order) and reports the first disagreement.
CheckReport compare_on_basis(const std::string& axiom, const LegLabels& in, const LegLabels& out,
                             const BasisFn& lhs, const BasisFn& rhs);

// First failing report of a sequence of checks, or a pass.
CheckReport first_failure(std::initializer_list<std::function<CheckReport()>> checks);

// Equality of two elements (no input). Fails with an empty witness.
CheckReport compare_elements(const std::string& axiom, const LegLabels& out, const SparseVec& lhs, const SparseVec& rhs);

std::vector<std::pair<std::vector<std::string>, std::string>> render_terms(const SparseVec& v, const LegLabels& out);

}  // namespace hopfk
