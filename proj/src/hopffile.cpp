#include "hopfk/hopffile.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"

namespace hopfk {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw HopfError(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + msg);
}

bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '|' || c == '^';
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

struct Token {
    enum Kind { label, plus, minus, star, slash, tensor_sep } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s, std::size_t line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
        } else if (s.compare(i, 3, "(*)") == 0) {
            out.push_back({Token::tensor_sep, "(*)"});
            i += 3;
        } else if (c == '+') {
            out.push_back({Token::plus, "+"});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::minus, "-"});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::star, "*"});
            ++i;
        } else if (c == '/') {
            out.push_back({Token::slash, "/"});
            ++i;
        } else if (label_char(c)) {
            std::size_t j = i;
            while (j < s.size() && label_char(s[j])) ++j;
            out.push_back({Token::label, s.substr(i, j - i)});
            i = j;
        } else {
            fail(line, std::string("unexpected character '") + c + "'");
        }
    }
    return out;
}

using LabelIndex = std::map<std::string, std::uint32_t>;

LabelIndex index_labels(const Labels& l) {
    LabelIndex m;
    for (std::uint32_t i = 0; i < l.size(); ++i) m[l[i]] = i;
    return m;
}

Scalar make_coef(const FieldSpec& f, const std::string& num, const std::string& den, std::size_t line) {
    try {
        const mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den);
        if (d == 0) fail(line, "zero denominator");
        return f.from(mpq_class(mpz_class(num), d));
    } catch (const HopfError& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        fail(line, e.what());
    }
}

// Parses "0" or a signed sum of [coef *] l1(*)l2(*)... over the given legs.
SparseVec parse_expr(const std::string& text, const std::vector<const LabelIndex*>& legs, const FieldSpec& f, std::size_t line) {
    Dims dims;
    for (const auto* l : legs) dims.push_back(static_cast<std::uint32_t>(l->size()));
    SparseVec v(dims);
    const std::string t = trim(text);
    if (t == "0") return v;
    if (t.empty()) fail(line, "empty expression");
    const std::vector<Token> tok = tokenize(t, line);
    std::size_t i = 0;
    bool first = true;
    while (i < tok.size()) {
        Scalar sign = f.one();
        if (tok[i].kind == Token::plus || tok[i].kind == Token::minus) {
            if (tok[i].kind == Token::minus) sign = -sign;
            ++i;
        } else if (!first) {
            fail(line, "expected '+' or '-' before '" + tok[i].text + "'");
        }
        first = false;
        if (i >= tok.size() || tok[i].kind != Token::label) fail(line, "expected a coefficient or a label");
        Scalar coef = f.one();
        if (all_digits(tok[i].text) && i + 1 < tok.size() && (tok[i + 1].kind == Token::star || tok[i + 1].kind == Token::slash)) {
            std::string num = tok[i].text;
            std::string den;
            i += 1;
            if (tok[i].kind == Token::slash) {
                if (i + 1 >= tok.size() || !all_digits(tok[i + 1].text)) fail(line, "expected a denominator after '/'");
                den = tok[i + 1].text;
                i += 2;
            }
            if (i >= tok.size() || tok[i].kind != Token::star) fail(line, "expected '*' after the coefficient");
            ++i;
            coef = make_coef(f, num, den, line);
        }
        Tuple idx;
        for (std::size_t k = 0; k < legs.size(); ++k) {
            if (k > 0) {
                if (i >= tok.size() || tok[i].kind != Token::tensor_sep) {
                    fail(line, "expected " + std::to_string(legs.size()) + " tensor legs");
                }
                ++i;
            }
            if (i >= tok.size() || tok[i].kind != Token::label) fail(line, "expected a label");
            auto it = legs[k]->find(tok[i].text);
            if (it == legs[k]->end()) fail(line, "unknown label '" + tok[i].text + "'");
            idx.push_back(it->second);
            ++i;
        }
        if (i < tok.size() && tok[i].kind == Token::tensor_sep) fail(line, "too many tensor legs");
        v.add(idx, sign * coef);
    }
    return v;
}

Scalar parse_scalar(const std::string& text, const FieldSpec& f, std::size_t line) {
    std::string t = trim(text);
    bool neg = false;
    if (!t.empty() && t[0] == '-') {
        neg = true;
        t = trim(t.substr(1));
    }
    const auto slash = t.find('/');
    const std::string num = trim(t.substr(0, slash));
    const std::string den = slash == std::string::npos ? "" : trim(t.substr(slash + 1));
    if (!all_digits(num) || (slash != std::string::npos && !all_digits(den))) fail(line, "expected a scalar, got '" + text + "'");
    Scalar s = make_coef(f, num, den, line);
    return neg ? -s : s;
}

struct Line {
    std::size_t no;
    std::string text;
};

// Entry lines of one map section, keyed by their argument labels.
struct MapSection {
    std::string keyword;
    std::size_t header_line = 0;
    std::map<std::vector<std::string>, Line> entries;
};

struct RawBlock {
    std::string name;
    std::optional<FieldSpec> field;
    Labels basis;
    std::size_t basis_line = 0;
    std::vector<std::string> section_order;
    std::map<std::string, MapSection> sections;  // keyed by keyword
    std::map<std::string, ParsedFile> parts;     // "A", "H"
    std::string rmatrix_kind;
};

ParsedFile resolve_ref(const std::string& ref, const std::string& base_dir, const ZooOptions& zoo, std::size_t line) {
    try {
        if (ref.rfind("zoo:", 0) == 0) {
            ParsedFile p;
            p.hopf = zoo_hopf(ref.substr(4), zoo);
            return p;
        }
        return parse_hopf_file((std::filesystem::path(base_dir) / ref).string(), zoo);
    } catch (const HopfError& e) {
        fail(line, "cannot load " + ref + ": " + e.what());
    }
}

// Keyword expected for entry lines of a section header.
std::string section_keyword(const std::vector<std::string>& w, std::size_t line) {
    const std::string& h = w[0];
    auto arg = [&](const std::vector<std::string>& allowed) {
        if (w.size() != 2) fail(line, h + " takes one name");
        for (const auto& a : allowed) {
            if (w[1] == a) return a;
        }
        fail(line, "unknown " + h + " name '" + w[1] + "'");
    };
    if (h == "MULT") return "mult";
    if (h == "UNIT") return "unit";
    if (h == "COUNIT") return "counit";
    if (h == "COMUL") return arg({"comul", "comul'"});
    if (h == "ANTIPODE") return arg({"antipode", "antipode'"});
    if (h == "COACTION") return arg({"rho", "phi"});
    if (h == "RMATRIX") return "R";
    if (h == "PAIR") return "pair";
    fail(line, "unknown section '" + h + "'");
}

void parse_block(const std::vector<Line>& lines, RawBlock& b, const std::string& base_dir, const ZooOptions& zoo) {
    std::size_t pos = 0;
    std::string current;
    while (pos < lines.size()) {
        const Line& ln = lines[pos];
        const std::vector<std::string> w = words(ln.text);
        const std::string& head = w[0];
        if (head == "END") fail(ln.no, "END without BEGIN");
        if (head == "BEGIN") {
            if (w.size() != 2 || (w[1] != "A" && w[1] != "H")) fail(ln.no, "BEGIN takes A or H");
            if (b.parts.count(w[1])) fail(ln.no, "duplicate block " + w[1]);
            std::size_t end = pos + 1;
            while (end < lines.size() && lines[end].text != "END") {
                if (words(lines[end].text)[0] == "BEGIN") fail(lines[end].no, "nested BEGIN blocks are not allowed");
                ++end;
            }
            if (end == lines.size()) fail(ln.no, "BEGIN " + w[1] + " is not closed");
            // Pad with empty lines so inner errors keep the file's line numbers.
            std::string inner;
            std::size_t at = 1;
            for (std::size_t k = pos + 1; k < end; ++k) {
                for (; at < lines[k].no; ++at) inner += "\n";
                inner += lines[k].text + "\n";
                ++at;
            }
            b.parts[w[1]] = parse_hopf_text(inner, base_dir, zoo);
            if (b.parts[w[1]].kind != FileKind::hopf) fail(ln.no, "block " + w[1] + " must define one Hopf algebra");
            pos = end + 1;
            current.clear();
            continue;
        }
        if (head == "NAME") {
            const auto p = ln.text.find("NAME");
            b.name = trim(ln.text.substr(p + 4));
            ++pos;
            continue;
        }
        if (head == "FIELD") {
            if (w.size() != 2) fail(ln.no, "FIELD takes one argument");
            try {
                b.field = FieldSpec::parse(w[1]);
            } catch (const HopfError& e) {
                fail(ln.no, e.what());
            }
            ++pos;
            continue;
        }
        if (head == "BASIS") {
            if (!b.basis.empty()) fail(ln.no, "duplicate BASIS");
            for (std::size_t k = 1; k < w.size(); ++k) {
                for (char c : w[k]) {
                    if (!label_char(c)) fail(ln.no, "invalid label '" + w[k] + "'");
                }
                if (w[k] == "0") fail(ln.no, "'0' is reserved for the zero vector");
                for (const auto& l : b.basis) {
                    if (l == w[k]) fail(ln.no, "duplicate label '" + w[k] + "'");
                }
                b.basis.push_back(w[k]);
            }
            if (b.basis.empty()) fail(ln.no, "empty BASIS");
            b.basis_line = ln.no;
            ++pos;
            continue;
        }
        if (std::isupper(static_cast<unsigned char>(head[0])) && head != "A" && head != "H" && head != "R") {
            current = section_keyword(w, ln.no);
            if (current == "R") {
                if (w.size() != 2 || (w[1] != "weak" && w[1] != "long")) fail(ln.no, "RMATRIX takes weak or long");
                b.rmatrix_kind = w[1];
            }
            if (b.sections.count(current)) fail(ln.no, "duplicate section " + ln.text);
            b.sections[current].keyword = current;
            b.sections[current].header_line = ln.no;
            b.section_order.push_back(current);
            ++pos;
            continue;
        }
        // Entry line.
        if (current.empty()) fail(ln.no, "entry outside of a section");
        const auto eq = ln.text.find('=');
        if (eq == std::string::npos) fail(ln.no, "expected '='");
        const std::vector<std::string> lhs = words(ln.text.substr(0, eq));
        if (current == "pair") {
            if (lhs.size() != 1 || (lhs[0] != "A" && lhs[0] != "H")) fail(ln.no, "PAIR entries are 'A = ref' or 'H = ref'");
            if (b.parts.count(lhs[0])) fail(ln.no, "duplicate block " + lhs[0]);
            b.parts[lhs[0]] = resolve_ref(trim(ln.text.substr(eq + 1)), base_dir, zoo, ln.no);
            if (b.parts[lhs[0]].kind != FileKind::hopf) fail(ln.no, lhs[0] + " must be a Hopf algebra");
            ++pos;
            continue;
        }
        if (lhs.empty() || lhs[0] != current) fail(ln.no, "expected an entry starting with '" + current + "'");
        std::vector<std::string> args(lhs.begin() + 1, lhs.end());
        auto& sec = b.sections[current];
        if (sec.entries.count(args)) fail(ln.no, "duplicate entry '" + trim(ln.text.substr(0, eq)) + "'");
        sec.entries.emplace(args, Line{ln.no, ln.text.substr(eq + 1)});
        ++pos;
    }
}

// Fills a map table with one entry per basis tuple of `in`, reporting
// missing ones.
StructureMap build_map(const MapSection& sec, const std::vector<const Labels*>& in, const std::vector<const LabelIndex*>& in_idx,
                       const std::vector<const LabelIndex*>& out_idx, const FieldSpec& f) {
    Dims din;
    for (const auto* l : in) din.push_back(static_cast<std::uint32_t>(l->size()));
    Dims dout;
    for (const auto* l : out_idx) dout.push_back(static_cast<std::uint32_t>(l->size()));
    StructureMap m(din, dout);
    for (const auto& [args, ln] : sec.entries) {
        if (args.size() != in.size()) {
            fail(ln.no, sec.keyword + " takes " + std::to_string(in.size()) + " argument(s)");
        }
        for (std::size_t k = 0; k < args.size(); ++k) {
            if (!in_idx[k]->count(args[k])) fail(ln.no, "unknown label '" + args[k] + "'");
        }
    }
    std::vector<std::string> missing;
    const std::uint64_t n = volume(din);
    for (std::uint64_t i = 0; i < n; ++i) {
        const Tuple t = unflatten(din, i);
        std::vector<std::string> args;
        for (std::size_t k = 0; k < t.size(); ++k) args.push_back((*in[k])[t[k]]);
        auto it = sec.entries.find(args);
        if (it == sec.entries.end()) {
            std::string e = sec.keyword;
            for (const auto& a : args) e += " " + a;
            missing.push_back(e);
            continue;
        }
        if (dout.empty()) {
            m.set(i, SparseVec::scalar(parse_scalar(it->second.text, f, it->second.no)));
        } else {
            m.set(i, parse_expr(it->second.text, out_idx, f, it->second.no));
        }
    }
    if (!missing.empty()) {
        std::string msg = "missing " + std::to_string(missing.size()) + " entr" + (missing.size() == 1 ? "y" : "ies") + ":";
        for (std::size_t k = 0; k < missing.size() && k < 8; ++k) msg += " [" + missing[k] + "]";
        if (missing.size() > 8) msg += " ...";
        fail(sec.header_line, msg);
    }
    return m;
}

const MapSection& need(const RawBlock& b, const std::string& key, const std::string& header, std::size_t line) {
    auto it = b.sections.find(key);
    if (it == b.sections.end()) fail(line, "missing section " + header);
    return it->second;
}

ParsedFile finish_hopf(const RawBlock& b, const FieldSpec& f) {
    const std::size_t l0 = b.basis_line;
    const Labels& L = b.basis;
    const LabelIndex idx = index_labels(L);
    const std::uint32_t n = static_cast<std::uint32_t>(L.size());
    HopfData h;
    h.name = b.name.empty() ? "unnamed" : b.name;
    h.algebra.field = f;
    h.algebra.dim = n;
    h.algebra.labels = L;
    h.algebra.mult = build_map(need(b, "mult", "MULT", l0), {&L, &L}, {&idx, &idx}, {&idx}, f);
    const MapSection& u = need(b, "unit", "UNIT", l0);
    if (u.entries.size() != 1 || !u.entries.count({})) fail(u.header_line, "UNIT needs exactly one entry 'unit = ...'");
    const Line& ul = u.entries.at({});
    h.algebra.unit = parse_expr(ul.text, {&idx}, f, ul.no);
    h.coalgebra.counit = build_map(need(b, "counit", "COUNIT", l0), {&L}, {&idx}, {}, f);
    h.coalgebra.comult = build_map(need(b, "comul", "COMUL comul", l0), {&L}, {&idx}, {&idx, &idx}, f);
    auto antipode_for = [&](const HopfData& hd, const std::string& key) {
        auto it = b.sections.find(key);
        if (it != b.sections.end()) return build_map(it->second, {&L}, {&idx}, {&idx}, f);
        std::optional<StructureMap> s;
        try {
            s = solve_antipode(hd);
        } catch (const HopfError& e) {
            fail(l0, std::string("no ") + key + " given and solving for one failed: " + e.what());
        }
        if (!s) fail(l0, "no " + key + " given and none exists");
        return *s;
    };
    h.antipode = antipode_for(h, "antipode");
    ParsedFile p;
    if (b.sections.count("comul'")) {
        HopfData second = h;
        second.coalgebra.comult = build_map(b.sections.at("comul'"), {&L}, {&idx}, {&idx, &idx}, f);
        second.antipode = antipode_for(second, "antipode'");
        second.name = h.name + "'";
        p.kind = FileKind::brace;
        p.brace = unchecked_brace(h.name, h, second);
    } else {
        if (b.sections.count("antipode'")) fail(b.sections.at("antipode'").header_line, "antipode' without comul'");
        p.kind = FileKind::hopf;
        p.hopf = h;
    }
    return p;
}

const HopfData& part(const RawBlock& b, const std::string& which, std::size_t line) {
    auto it = b.parts.find(which);
    if (it == b.parts.end()) fail(line, "missing Hopf algebra " + which + " (BEGIN " + which + " or PAIR entry)");
    return *it->second.hopf;
}

}  // namespace

ParsedFile parse_hopf_text(const std::string& text, const std::string& base_dir, const ZooOptions& zoo) {
    std::vector<Line> lines;
    {
        std::istringstream is(text);
        std::size_t no = 0;
        for (std::string s; std::getline(is, s);) {
            ++no;
            const auto hash = s.find('#');
            if (hash != std::string::npos) s = s.substr(0, hash);
            s = trim(s);
            if (!s.empty()) lines.push_back({no, s});
        }
    }
    if (lines.empty()) throw HopfError(ErrorKind::ParseError, "line 0: empty file");
    RawBlock b;
    parse_block(lines, b, base_dir, zoo);
    const FieldSpec f = b.field.value_or(FieldSpec::rationals());
    const std::size_t last = lines.back().no;

    const bool has_basis = !b.basis.empty();
    const bool has_coaction = b.sections.count("rho") || b.sections.count("phi");
    const bool has_r = b.sections.count("R") > 0;
    if (has_basis) {
        if (!b.parts.empty() || has_coaction || has_r) fail(b.basis_line, "a file defines either an algebra or a pair, not both");
        return finish_hopf(b, f);
    }
    for (const auto& key : b.section_order) {
        if (key != "rho" && key != "phi" && key != "R" && key != "pair") {
            fail(b.sections.at(key).header_line, "section needs a BASIS");
        }
    }
    if (has_coaction && has_r) fail(last, "a pair file has either COACTION or RMATRIX sections");
    ParsedFile p;
    if (has_coaction) {
        const HopfData& A = part(b, "A", last);
        const HopfData& H = part(b, "H", last);
        const LabelIndex ai = index_labels(A.labels());
        const LabelIndex hi = index_labels(H.labels());
        MatchedPairData mp;
        mp.name = b.name.empty() ? "unnamed" : b.name;
        mp.A = A;
        mp.H = H;
        mp.rho = build_map(need(b, "rho", "COACTION rho", last), {&A.labels()}, {&ai}, {&hi, &ai}, f);
        mp.phi = build_map(need(b, "phi", "COACTION phi", last), {&H.labels()}, {&hi}, {&hi, &ai}, f);
        p.kind = FileKind::matched;
        p.matched = mp;
        return p;
    }
    if (has_r) {
        const MapSection& sec = b.sections.at("R");
        ZooRMatrix z;
        z.name = b.name.empty() ? "unnamed" : b.name;
        z.kind = b.rmatrix_kind;
        z.H = part(b, "H", sec.header_line);
        if (z.kind == "long") {
            if (b.parts.count("A")) fail(sec.header_line, "a long copairing lives in H (x) H; drop A");
            z.A = z.H;
        } else {
            z.A = part(b, "A", sec.header_line);
        }
        if (sec.entries.size() != 1 || !sec.entries.count({})) fail(sec.header_line, "RMATRIX needs exactly one entry 'R = ...'");
        const LabelIndex hi = index_labels(z.H.labels());
        const LabelIndex ai = index_labels(z.A.labels());
        const Line& rl = sec.entries.at({});
        z.R = parse_expr(rl.text, {&hi, &ai}, f, rl.no);
        p.kind = FileKind::rmatrix;
        p.rmatrix = z;
        return p;
    }
    fail(last, "no BASIS, COACTION or RMATRIX section");
}

ParsedFile parse_hopf_file(const std::string& path, const ZooOptions& zoo) {
    std::ifstream in(path);
    if (!in) throw HopfError(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    try {
        return parse_hopf_text(os.str(), std::filesystem::path(path).parent_path().string(), zoo);
    } catch (const HopfError& e) {
        throw HopfError(ErrorKind::ParseError, path + ": " + std::string(e.what()).substr(std::string("ParseError: ").size()));
    }
}

std::string format_element(const SparseVec& v, const LegLabels& legs) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v.entries()) {
        const Tuple t = unflatten(v.dims(), i);
        std::string tensor_text;
        for (std::size_t k = 0; k < t.size(); ++k) tensor_text += (k ? "(*)" : "") + legs[k][t[k]];
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (cs != "1") os << cs << " * ";
        os << tensor_text;
    }
    return os.str();
}

namespace {

void write_map(std::ostream& os, const std::string& kw, const StructureMap& m, const std::vector<const Labels*>& in,
               const LegLabels& out) {
    const std::uint64_t n = volume(m.in_dims());
    for (std::uint64_t i = 0; i < n; ++i) {
        const Tuple t = unflatten(m.in_dims(), i);
        os << kw;
        for (std::size_t k = 0; k < t.size(); ++k) os << " " << (*in[k])[t[k]];
        os << " = ";
        if (out.empty()) {
            os << m.at(i).as_scalar().str();
        } else {
            os << format_element(m.at(i), out);
        }
        os << "\n";
    }
}

void write_algebra(std::ostream& os, const HopfData& h) {
    const Labels& L = h.labels();
    os << "NAME " << h.name << "\n";
    os << "FIELD " << h.field().name() << "\n";
    os << "BASIS";
    for (const auto& l : L) os << " " << l;
    os << "\nMULT\n";
    write_map(os, "mult", h.m(), {&L, &L}, {L});
    os << "UNIT\nunit = " << format_element(h.unit(), {L}) << "\n";
    os << "COUNIT\n";
    write_map(os, "counit", h.eps(), {&L}, {});
}

}  // namespace

std::string serialize(const HopfData& h) {
    std::ostringstream os;
    const Labels& L = h.labels();
    write_algebra(os, h);
    os << "COMUL comul\n";
    write_map(os, "comul", h.delta(), {&L}, {L, L});
    os << "ANTIPODE antipode\n";
    write_map(os, "antipode", h.S(), {&L}, {L});
    return os.str();
}

std::string serialize(const BraceData& b) {
    std::ostringstream os;
    const Labels& L = b.labels();
    HopfData first = b.first;
    first.name = b.name;
    os << serialize(first);
    os << "COMUL comul'\n";
    write_map(os, "comul'", b.delta_prime, {&L}, {L, L});
    os << "ANTIPODE antipode'\n";
    write_map(os, "antipode'", b.T, {&L}, {L});
    return os.str();
}

std::string serialize(const MatchedPairData& mp) {
    std::ostringstream os;
    os << "NAME " << mp.name << "\n";
    os << "FIELD " << mp.A.field().name() << "\n";
    os << "BEGIN A\n" << serialize(mp.A) << "END\n";
    os << "BEGIN H\n" << serialize(mp.H) << "END\n";
    const Labels& AL = mp.A.labels();
    const Labels& HL = mp.H.labels();
    os << "COACTION rho\n";
    write_map(os, "rho", mp.rho, {&AL}, {HL, AL});
    os << "COACTION phi\n";
    write_map(os, "phi", mp.phi, {&HL}, {HL, AL});
    return os.str();
}

std::string serialize(const ZooRMatrix& r) {
    std::ostringstream os;
    os << "NAME " << r.name << "\n";
    os << "FIELD " << r.H.field().name() << "\n";
    os << "BEGIN H\n" << serialize(r.H) << "END\n";
    if (r.kind != "long") os << "BEGIN A\n" << serialize(r.A) << "END\n";
    os << "RMATRIX " << (r.kind == "long" ? "long" : "weak") << "\n";
    os << "R = " << format_element(r.R, {r.H.labels(), r.A.labels()}) << "\n";
    return os.str();
}

}  // namespace hopfk
