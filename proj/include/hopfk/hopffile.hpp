#pragma once

#include <optional>
#include <string>

#include "hopfk/zoo.hpp"

namespace hopfk {

enum class FileKind { hopf, brace, matched, rmatrix };

// Result of reading a .hopf file. Exactly the member matching `kind` is set.
struct ParsedFile {
    FileKind kind = FileKind::hopf;
    std::optional<HopfData> hopf;
    std::optional<BraceData> brace;  // unchecked candidate
    std::optional<MatchedPairData> matched;
    std::optional<ZooRMatrix> rmatrix;
};

// Throws HopfError(ParseError) with a line number for syntax errors, unknown
// labels, duplicate entries and missing entries. `base_dir` resolves file
// references inside BEGIN blocks; zoo references use `zoo`.
ParsedFile parse_hopf_text(const std::string& text, const std::string& base_dir = ".", const ZooOptions& zoo = {});
ParsedFile parse_hopf_file(const std::string& path, const ZooOptions& zoo = {});

std::string serialize(const HopfData& h);
std::string serialize(const BraceData& b);
std::string serialize(const MatchedPairData& mp);
std::string serialize(const ZooRMatrix& r);

// "c * a(*)b + ..." with the given leg labels; "0" for the zero vector.
std::string format_element(const SparseVec& v, const LegLabels& legs);

}  // namespace hopfk
