#include "hopfk/report.hpp"

#include <sstream>

#include "hopfk/error.hpp"

namespace hopfk {

CheckReport CheckReport::failure(std::string axiom, std::string note) {
    CheckReport r;
    r.pass = false;
    r.failed_axiom = std::move(axiom);
    r.note = std::move(note);
    return r;
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    if (!object.empty()) os << object << ": ";
    if (pass) {
        os << "pass";
        return os.str();
    }
    os << "fail [" << failed_axiom << "]";
    if (!witness_labels.empty()) {
        os << " at (";
        for (std::size_t i = 0; i < witness_labels.size(); ++i) os << (i ? ", " : "") << witness_labels[i];
        os << ")";
    }
    if (!residual_terms.empty()) {
        os << " residual";
        for (const auto& [labels, c] : residual_terms) {
            os << " " << c << "*";
            for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "(*)" : "") << labels[i];
        }
    }
    if (!note.empty()) os << " (" << note << ")";
    return os.str();
}

std::vector<std::pair<std::vector<std::string>, std::string>> render_terms(const SparseVec& v, const LegLabels& out) {
    std::vector<std::pair<std::vector<std::string>, std::string>> terms;
    for (const auto& [i, c] : v.entries()) {
        Tuple t = unflatten(v.dims(), i);
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < t.size(); ++k) {
            labels.push_back(k < out.size() && t[k] < out[k].size() ? out[k][t[k]] : std::to_string(t[k]));
        }
        terms.emplace_back(std::move(labels), c.str());
    }
    return terms;
}

CheckReport compare_on_basis(const std::string& axiom, const LegLabels& in, const LegLabels& out,
                             const BasisFn& lhs, const BasisFn& rhs) {
    Dims dims;
    for (const auto& l : in) dims.push_back(static_cast<std::uint32_t>(l.size()));
    const std::uint64_t n = volume(dims);
    for (std::uint64_t i = 0; i < n; ++i) {
        SparseVec b = SparseVec::basis(dims, i);
        SparseVec diff = lhs(b) - rhs(b);
        if (diff.is_zero()) continue;
        CheckReport r;
        r.pass = false;
        r.failed_axiom = axiom;
        r.witness = unflatten(dims, i);
        for (std::size_t k = 0; k < dims.size(); ++k) r.witness_labels.push_back(in[k][r.witness[k]]);
        r.residual_terms = render_terms(diff, out);
        r.residual = std::move(diff);
        return r;
    }
    return CheckReport::ok();
}

CheckReport compare_elements(const std::string& axiom, const LegLabels& out, const SparseVec& lhs, const SparseVec& rhs) {
    SparseVec diff = lhs - rhs;
    if (diff.is_zero()) return CheckReport::ok();
    CheckReport r;
    r.pass = false;
    r.failed_axiom = axiom;
    r.residual_terms = render_terms(diff, out);
    r.residual = std::move(diff);
    return r;
}

CheckReport first_failure(std::initializer_list<std::function<CheckReport()>> checks) {
    for (const auto& c : checks) {
        CheckReport r = c();
        if (!r.pass) return r;
    }
    return CheckReport::ok();
}

}  // namespace hopfk
