#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hopfk/error.hpp"
#include "hopfk/hopf.hpp"
#include "hopfk/hopffile.hpp"

namespace hopfk {

namespace {

using nlohmann::json;

struct Options {
    std::string field = "Q";
    std::vector<long> window{2, 2};
    bool extended = false;
    std::string output = "text";
    std::string out_file;
};

// Raised for conditions that map to a specific exit code.
struct Exit {
    int code;
    std::string kind;
    std::string message;
};

class Runner {
public:
    Runner(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {
        try {
            zoo_.field = FieldSpec::parse(o.field);
        } catch (const HopfError& e) {
            throw Exit{exit_usage, "usage", e.what()};
        }
        zoo_.extended = o.extended;
        if (o.window.size() != 2 || o.window[0] < 0 || o.window[1] < 0) throw Exit{exit_usage, "usage", "--window takes A B >= 0"};
    }

    int check(const std::string& what, const std::string& src);
    int build(const std::string& what, const std::string& src);
    int braid_export(const std::string& src);
    int zoo_list();

private:
    bool structured() const { return o_.output == "structured"; }

    // Loads src as a zoo name of the given kind or as a file.
    ParsedFile load(const std::string& src, ZooKind kind) {
        if (src.rfind("zoo:", 0) == 0) {
            const std::string name = src.substr(4);
            ParsedFile p;
            switch (kind) {
                case ZooKind::hopf:
                    p.kind = FileKind::hopf;
                    p.hopf = zoo_hopf(name, zoo_);
                    break;
                case ZooKind::brace:
                    p.kind = FileKind::brace;
                    p.brace = zoo_brace(name, zoo_);
                    break;
                case ZooKind::matched:
                    p.kind = FileKind::matched;
                    p.matched = zoo_matched(name, zoo_);
                    break;
                case ZooKind::rmatrix:
                    p.kind = FileKind::rmatrix;
                    p.rmatrix = zoo_rmatrix(name, zoo_);
                    break;
                case ZooKind::lazy:
                    break;
            }
            return p;
        }
        return parse_hopf_file(src, zoo_);
    }

    static void expect(const ParsedFile& p, FileKind k, const std::string& what) {
        if (p.kind != k) throw Exit{exit_usage, "usage", "the source does not define a " + what};
    }

    bool is_lazy(const std::string& src) const {
        if (src.rfind("zoo:", 0) != 0) return false;
        for (const auto& n : zoo_names(ZooKind::lazy, zoo_)) {
            if (src.substr(4) == n) return true;
        }
        return false;
    }

    int report(const std::string& command, const CheckReport& r, const std::string& object) {
        if (structured()) {
            json j;
            j["command"] = command;
            j["status"] = r.pass ? "pass" : "fail";
            j["object_name"] = object;
            j["failed_axiom"] = r.failed_axiom;
            j["witness_labels"] = r.witness_labels;
            json res = json::array();
            for (const auto& [labels, c] : r.residual_terms) res.push_back({{"labels", labels}, {"coefficient", c}});
            j["residual"] = res;
            j["note"] = r.note;
            out_ << j.dump(2) << "\n";
        } else {
            CheckReport shown = r;
            shown.object.clear();
            out_ << (r.pass ? "PASS " : "FAIL ") << command << " " << object;
            if (!r.pass) out_ << ": " << shown.summary();
            out_ << "\n";
        }
        return r.pass ? exit_pass : exit_fail;
    }

    // A library error during a check is a failed check.
    int report_error(const std::string& command, const std::string& object, const HopfError& e) {
        CheckReport r = CheckReport::failure(error_kind_name(e.kind()), e.what());
        return report(command, r, object);
    }

    int emit_file(const std::string& command, const std::string& object, const std::string& text, std::uint32_t dim) {
        if (!o_.out_file.empty()) {
            std::ofstream f(o_.out_file);
            if (!f) throw Exit{exit_usage, "usage", "cannot write " + o_.out_file};
            f << text;
        }
        if (structured()) {
            json j;
            j["command"] = command;
            j["status"] = "pass";
            j["object_name"] = object;
            j["dim"] = dim;
            j["output"] = o_.out_file.empty() ? "-" : o_.out_file;
            if (o_.out_file.empty()) j["hopf"] = text;
            out_ << j.dump(2) << "\n";
        } else if (o_.out_file.empty()) {
            out_ << text;
        } else {
            out_ << "wrote " << object << " (dim " << dim << ") to " << o_.out_file << "\n";
        }
        return exit_pass;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
    ZooOptions zoo_;
};

int Runner::check(const std::string& what, const std::string& src) {
    const std::string command = "check " + what;
    std::string object = src;
    try {
        if (what == "hopf") {
            ParsedFile p = load(src, ZooKind::hopf);
            if (p.kind == FileKind::brace) {
                object = p.brace->name;
                CheckReport r = check_hopf(p.brace->first);
                if (r) r = check_hopf(p.brace->second());
                return report(command, r, object);
            }
            expect(p, FileKind::hopf, "Hopf algebra");
            object = p.hopf->name;
            return report(command, check_hopf(*p.hopf), object);
        }
        if (what == "brace") {
            if (is_lazy(src)) {
                const LazyHopfData L = zoo_lazy(src.substr(4), zoo_);
                const auto w = laurent_window(o_.window[0], static_cast<unsigned>(o_.window[1]));
                CheckReport r = check_brace_on_monomials(L, w);
                if (r) r = check_comultiplicative_on_products(L, w);
                return report(command, r, L.name);
            }
            ParsedFile p = load(src, ZooKind::brace);
            expect(p, FileKind::brace, "brace");
            object = p.brace->name;
            return report(command, check_brace(*p.brace), object);
        }
        if (what == "matched") {
            ParsedFile p = load(src, ZooKind::matched);
            expect(p, FileKind::matched, "matched pair");
            object = p.matched->name;
            return report(command, check_matched_pair(*p.matched), object);
        }
        if (what == "cocycle") {
            if (is_lazy(src)) {
                const LazyHopfData L = zoo_lazy(src.substr(4), zoo_);
                const auto w = laurent_window(o_.window[0], static_cast<unsigned>(o_.window[1]));
                return report(command, check_cocycle_on_monomials(L, w), L.name);
            }
            ParsedFile p = load(src, ZooKind::brace);
            expect(p, FileKind::brace, "brace");
            object = "F(" + p.brace->name + ")";
            const CocycleData c = brace_to_cocycle(*p.brace);
            CheckReport r = check_cocycle(c);
            if (r) {
                // G(F(B)) = B and F(G(F(B))) = F(B)
                const BraceData back = cocycle_to_brace(c);
                r = compare_braces(back, *p.brace);
                if (r) r = compare_cocycles(brace_to_cocycle(back), c);
            }
            return report(command, r, object);
        }
        if (what == "rmatrix") {
            ParsedFile p = load(src, ZooKind::rmatrix);
            expect(p, FileKind::rmatrix, "R-matrix");
            const ZooRMatrix& z = *p.rmatrix;
            object = z.name;
            if (z.kind == "long") {
                CheckReport r = check_long_copaired(z.H, z.R);
                if (r) r = check_harrison_cocycle(z.H, z.R);
                return report(command, r, object);
            }
            return report(command, check_weak_rmatrix(z.H, z.A, z.R), object);
        }
        if (what == "braid") {
            ParsedFile p = load(src, ZooKind::brace);
            expect(p, FileKind::brace, "brace");
            object = p.brace->name;
            const StructureMap c = braid_operator(*p.brace);
            CheckReport r = check_braid_equation(c, p.brace->labels());
            if (r) {
                try {
                    (void)invert_two_leg_map(c);
                } catch (const HopfError& e) {
                    r = CheckReport::failure("braid operator invertible", e.what());
                }
            }
            return report(command, r, object);
        }
    } catch (const HopfError& e) {
        if (e.kind() == ErrorKind::ParseError) throw Exit{exit_parse, "parse", e.what()};
        if (e.kind() == ErrorKind::UnknownObject) throw Exit{exit_usage, "usage", e.what()};
        return report_error(command, object, e);
    }
    throw Exit{exit_usage, "usage", "unknown check '" + what + "'"};
}

int Runner::build(const std::string& what, const std::string& src) {
    const std::string command = "build " + what;
    try {
        if (what == "bicrossed" || what == "smash") {
            ParsedFile p = load(src, ZooKind::matched);
            expect(p, FileKind::matched, "matched pair");
            const MatchedPairData& mp = *p.matched;
            HopfData h = what == "bicrossed" ? bicrossed_coproduct(mp).result : smash_coproduct(mp.A, mp.H, mp.rho);
            h.name = mp.name + (what == "bicrossed" ? "-bicrossed" : "-smash");
            return emit_file(command, h.name, serialize(h), h.dim());
        }
        if (what == "double-dual" || what == "cop-brace") {
            ParsedFile p = load(src, ZooKind::hopf);
            expect(p, FileKind::hopf, "Hopf algebra");
            BraceData b = what == "double-dual" ? drinfeld_double_dual(*p.hopf).brace : cop_brace(*p.hopf);
            return emit_file(command, b.name, serialize(b), b.dim());
        }
        if (what == "twist") {
            ParsedFile p = load(src, ZooKind::rmatrix);
            expect(p, FileKind::rmatrix, "R-matrix");
            if (p.rmatrix->kind != "long") throw Exit{exit_usage, "usage", "twist needs a long copairing (RMATRIX long)"};
            BraceData b = long_brace(p.rmatrix->H, p.rmatrix->R);
            b.name = "twist(" + p.rmatrix->name + ")";
            return emit_file(command, b.name, serialize(b), b.dim());
        }
    } catch (const HopfError& e) {
        if (e.kind() == ErrorKind::ParseError) throw Exit{exit_parse, "parse", e.what()};
        if (e.kind() == ErrorKind::UnknownObject) throw Exit{exit_usage, "usage", e.what()};
        return report_error(command, src, e);
    }
    throw Exit{exit_usage, "usage", "unknown build '" + what + "'"};
}

int Runner::braid_export(const std::string& src) {
    try {
        ParsedFile p = load(src, ZooKind::brace);
        expect(p, FileKind::brace, "brace");
        const BraceData& b = *p.brace;
        const StructureMap c = braid_operator(b);
        const Labels& L = b.labels();
        const std::uint32_t n = b.dim();
        if (!o_.out_file.empty() || !structured()) {
            std::ostringstream os;
            os << "# braid operator c(x (x) y) = x(-1) y[0] (x) x(0) y[1] of " << b.name << "\n";
            for (std::uint32_t x = 0; x < n; ++x) {
                for (std::uint32_t y = 0; y < n; ++y) os << "c " << L[x] << " " << L[y] << " = " << format_element(c.at(Tuple{x, y}), {L, L}) << "\n";
            }
            if (o_.out_file.empty()) {
                out_ << os.str();
                return exit_pass;
            }
            std::ofstream f(o_.out_file);
            if (!f) throw Exit{exit_usage, "usage", "cannot write " + o_.out_file};
            f << os.str();
        }
        if (structured()) {
            json j;
            j["command"] = "braid export";
            j["status"] = "pass";
            j["object_name"] = b.name;
            j["labels"] = L;
            json m = json::array();
            for (std::uint32_t x = 0; x < n; ++x) {
                for (std::uint32_t y = 0; y < n; ++y) {
                    json terms = json::array();
                    for (const auto& [labels, coef] : render_terms(c.at(Tuple{x, y}), {L, L})) {
                        terms.push_back({{"labels", labels}, {"coefficient", coef}});
                    }
                    m.push_back({{"input", {L[x], L[y]}}, {"output", terms}});
                }
            }
            j["matrix"] = m;
            out_ << j.dump(2) << "\n";
        } else {
            out_ << "wrote braid operator of " << b.name << " to " << o_.out_file << "\n";
        }
        return exit_pass;
    } catch (const HopfError& e) {
        if (e.kind() == ErrorKind::ParseError) throw Exit{exit_parse, "parse", e.what()};
        if (e.kind() == ErrorKind::UnknownObject) throw Exit{exit_usage, "usage", e.what()};
        return report_error("braid export", src, e);
    }
}

int Runner::zoo_list() {
    if (structured()) {
        json a = json::array();
        for (const auto& e : zoo_entries()) {
            a.push_back({{"name", e.name}, {"kind", zoo_kind_name(e.kind)}, {"description", e.description}, {"extended_only", e.extended_only}});
        }
        out_ << a.dump(2) << "\n";
        return exit_pass;
    }
    for (const auto& e : zoo_entries()) {
        out_ << zoo_kind_name(e.kind) << "\t" << e.name << "\t" << e.description << (e.extended_only ? " [--extended]" : "") << "\n";
    }
    return exit_pass;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks and constructions for finite-dimensional Hopf algebras and Hopf braces", "hopfk"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--field", o.field, "Field for zoo objects: Q or Fp:<p>");
    app.add_option("--window", o.window, "Laurent test window: |a| <= A, b <= B")->expected(2);
    app.add_flag("--extended", o.extended, "Enable the dim-36 objects");
    app.add_option("--output", o.output, "Report format")->check(CLI::IsMember({"text", "structured"}));

    std::string what;
    std::string src;
    auto* check = app.add_subcommand("check", "Check an object: hopf, brace, matched, cocycle, rmatrix or braid");
    check->add_option("what", what)->required()->check(CLI::IsMember({"hopf", "brace", "matched", "cocycle", "rmatrix", "braid"}));
    check->add_option("source", src, "zoo:<name> or a .hopf file")->required();

    auto* build = app.add_subcommand("build", "Build an object and write it as a .hopf file");
    build->add_option("what", what)->required()->check(CLI::IsMember({"bicrossed", "smash", "double-dual", "twist", "cop-brace"}));
    build->add_option("source", src, "zoo:<name> or a .hopf file")->required();
    build->add_option("-o,--out", o.out_file, "Output file (default stdout)");

    auto* braid = app.add_subcommand("braid", "Braid operator tools");
    auto* exp = braid->add_subcommand("export", "Write the matrix of the braid operator");
    exp->add_option("source", src, "zoo:<name> or a .hopf file")->required();
    exp->add_option("-o,--out", o.out_file, "Output file (default stdout)");
    braid->require_subcommand(1);

    auto* zoo = app.add_subcommand("zoo", "Built-in objects");
    auto* list = zoo->add_subcommand("list", "List the built-in objects");
    zoo->require_subcommand(1);

    for (auto* s : {check, build, braid, exp, zoo, list}) s->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    try {
        Runner r(o, out, err);
        if (check->parsed()) return r.check(what, src);
        if (build->parsed()) return r.build(what, src);
        if (exp->parsed()) return r.braid_export(src);
        if (list->parsed()) return r.zoo_list();
    } catch (const Exit& e) {
        if (o.output == "structured") {
            out << json{{"status", "error"}, {"error_kind", e.kind}, {"message", e.message}}.dump(2) << "\n";
        }
        err << e.kind << " error: " << e.message << "\n";
        return e.code;
    }
    err << app.help();
    return exit_usage;
}

}  // namespace hopfk
