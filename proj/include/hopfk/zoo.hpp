#pragma once

#include <string>
#include <vector>

#include "hopfk/bicrossed.hpp"
#include "hopfk/cocycle.hpp"
#include "hopfk/lazy.hpp"
#include "hopfk/matched.hpp"

namespace hopfk {

struct ZooOptions {
    FieldSpec field = FieldSpec::rationals();
    bool extended = false;  // enables the dim-36 objects
};

enum class ZooKind { hopf, brace, matched, rmatrix, lazy };

struct ZooEntry {
    std::string name;
    ZooKind kind;
    std::string description;
    bool extended_only = false;
};

const char* zoo_kind_name(ZooKind k);

// Every named object, in a fixed order. Extended-only entries are listed
// regardless of the options and marked.
const std::vector<ZooEntry>& zoo_entries();
std::vector<std::string> zoo_names(ZooKind kind, const ZooOptions& opts = {});

// Lookups throw UnknownObject for unknown names or extended-only names
// without opts.extended, and CharacteristicTwo where 1/2 is needed.
HopfData zoo_hopf(const std::string& name, const ZooOptions& opts = {});
BraceData zoo_brace(const std::string& name, const ZooOptions& opts = {});
MatchedPairData zoo_matched(const std::string& name, const ZooOptions& opts = {});

// An element R of H (x) A. kind is "weak" (weak R-matrix in H (x) A) or
// "long" (Long copairing in H (x) H, so A = H).
struct ZooRMatrix {
    std::string name;
    std::string kind;
    HopfData H;
    HopfData A;
    SparseVec R;
};
ZooRMatrix zoo_rmatrix(const std::string& name, const ZooOptions& opts = {});

LazyHopfData zoo_lazy(const std::string& name, const ZooOptions& opts = {});

// R0 = (1 (x) 1 + 1 (x) a + a (x) 1 - a (x) a)/2 on kZ2.
SparseVec long_copairing_z2(const FieldSpec& field);
// (e (x) e + e (x) s + r2 (x) e - r2 (x) s)/2 on kD4.
SparseVec long_copairing_d4(const FieldSpec& field);
// The automorphism g -> s g s of k^S3 (dual basis).
StructureMap s3_conjugation_on_dual(const FieldSpec& field);

}  // namespace hopfk
