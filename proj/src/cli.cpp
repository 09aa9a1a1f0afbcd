#include "eigenscheme/cli.hpp"

#include "CLI11.hpp"

#include "eigenscheme/io.hpp"
#include "eigenscheme/linalg.hpp"
#include "eigenscheme/oracle.hpp"

namespace eigenscheme {

namespace {

struct Options {
    std::string order = "grevlex";
    int tmax = 8;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string matrix;
    std::string spec;
    int r = 0;
};

int exit_code(const std::string& kind) {
    if (kind == "unsupported-field") return 2;
    if (kind == "guard" || kind == "degenerate-sample" || kind == "insufficient-sample" || kind == "inconsistent")
        return 3;
    return 1;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
    err << Json{{"error", kind}, {"message", message}}.dump() << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    int ideal() {
        const Ideal I = eigenscheme_ideal(input_matrix());
        emit_polys(I.generators());
        return 0;
    }

    int gb() {
        const Ideal I = eigenscheme_ideal(input_matrix());
        emit_polys(buchberger(I, order()).elements);
        return 0;
    }

    int decompose() {
        std::vector<ComponentReport> comps;
        Ideal I = [&] {
            if (!opt_.spec.empty()) {
                const JordanSpec spec = input_spec();
                comps = decompose_general(spec);
                return eigenscheme_ideal(jordan_matrix(spec));
            }
            const QMatrix A = input_matrix();
            comps = decompose_matrix(A);
            return eigenscheme_ideal(A);
        }();
        const bool holds = decomposition_holds(comps, I);
        if (json()) {
            Json arr = Json::array();
            for (const auto& c : comps) arr.push_back(report_to_json(c));
            out_ << Json{{"components", arr}, {"intersection_verified", holds}}.dump(2) << "\n";
        } else {
            for (const auto& c : comps) out_ << report_to_text(c);
            out_ << "intersection verified: " << yes_no(holds) << "\n";
        }
        return holds ? 0 : 3;
    }

    int jordan() {
        const QMatrix A = input_matrix();
        const JordanSpec oracle = jordan_type_oracle(A).canonical();
        auto comps = decompose_matrix(A);
        const bool holds = decomposition_holds(comps, eigenscheme_ideal(A));
        for (auto& c : comps) c = measured(std::move(c), opt_.tmax);
        const JordanSpec algebra = reconstruct_jordan(comps, static_cast<int>(A.rows())).canonical();
        const bool agree = holds && algebra == oracle;
        if (json()) {
            out_ << Json{{"ideal", spec_to_json(algebra)},
                         {"oracle", spec_to_json(oracle)},
                         {"intersection_verified", holds},
                         {"agree", agree}}
                        .dump(2)
                 << "\n";
        } else {
            out_ << "ideal route:\n" << spec_to_text(algebra) << "oracle route:\n" << spec_to_text(oracle);
            out_ << "intersection verified: " << yes_no(holds) << "\nagree: " << yes_no(agree) << "\n";
        }
        return agree ? 0 : 3;
    }

    int diagonalizable() {
        const QMatrix A = input_matrix();
        const bool via_ideal = diagonalizable_via_ideal(A);
        const bool via_oracle = diagonalizable_oracle(A);
        const bool agree = via_ideal == via_oracle;
        if (json())
            out_ << Json{{"ideal", via_ideal}, {"oracle", via_oracle}, {"agree", agree}}.dump(2) << "\n";
        else
            out_ << "ideal: " << yes_no(via_ideal) << "\noracle: " << yes_no(via_oracle) << "\nagree: " << yes_no(agree)
                 << "\n";
        return agree ? 0 : 3;
    }

    int hilbert() {
        const Ideal I = eigenscheme_ideal(input_matrix());
        const HilbertSample h = hilbert_function(I, opt_.tmax);
        if (json()) {
            out_ << Json(h.values).dump() << "\n";
        } else {
            for (std::size_t t = 0; t < h.values.size(); ++t) out_ << (t ? " " : "") << h.values[t];
            out_ << "\n";
        }
        return 0;
    }

    int disc_degree() {
        if (opt_.r < 2) throw InvalidArgument("disc-degree needs -r >= 2");
        const int d = discriminant_degree_experiment(opt_.r, opt_.seed);
        if (json())
            out_ << Json{{"r", opt_.r}, {"seed", opt_.seed}, {"degree", d}}.dump() << "\n";
        else
            out_ << d << "\n";
        return 0;
    }

private:
    bool json() const { return opt_.format == "json"; }

    MonomialOrder order() const { return opt_.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex(); }

    JordanSpec input_spec() const {
        const auto pos = opt_.spec.find_first_not_of(" \t\r\n");
        const std::string text =
            pos != std::string::npos && opt_.spec[pos] == '[' ? opt_.spec : read_file(opt_.spec);
        try {
            return spec_from_json(Json::parse(text));
        } catch (const Json::parse_error& e) {
            throw ParseError(std::string("bad JSON: ") + e.what());
        }
    }

    QMatrix input_matrix() const {
        if (!opt_.matrix.empty() && !opt_.spec.empty()) throw ParseError("--matrix and --spec are mutually exclusive");
        if (!opt_.matrix.empty()) return parse_matrix(read_file(opt_.matrix));
        if (!opt_.spec.empty()) return jordan_matrix(input_spec());
        throw ParseError("an input is required: --matrix FILE or --spec FILE");
    }

    void emit_polys(const std::vector<Polynomial>& polys) {
        if (json()) {
            Json arr = Json::array();
            for (const auto& p : polys) arr.push_back(p.to_string());
            out_ << arr.dump(2) << "\n";
        } else {
            out_ << basis_to_text(polys);
        }
    }

    const Options& opt_;
    std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Eigenscheme ideals of rational matrices", "eigenscheme"};
    app.require_subcommand(1);
    app.add_option("--order", opt.order, "monomial order for gb")->check(CLI::IsMember({"grevlex", "lex"}));
    app.add_option("--tmax", opt.tmax, "largest degree of the Hilbert sample")->check(CLI::Range(0, 64));
    app.add_option("--seed", opt.seed, "64-bit seed for disc-degree");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--matrix", opt.matrix, "matrix file (text or JSON)");
    app.add_option("--spec", opt.spec, "Jordan spec file, or inline JSON");
    app.add_option("-r", opt.r, "matrix size for disc-degree");

    struct Verb {
        const char* name;
        const char* help;
        int (Runner::*fn)();
    };
    const Verb verbs[] = {
        {"ideal", "print the generators of I_A", &Runner::ideal},
        {"gb", "print the reduced Groebner basis of I_A", &Runner::gb},
        {"decompose", "print the primary components of I_A", &Runner::decompose},
        {"jordan", "Jordan type from the components and from ranks", &Runner::jordan},
        {"diagonalizable", "radical test against the eigenvector count", &Runner::diagonalizable},
        {"hilbert", "Hilbert function of R / I_A", &Runner::hilbert},
        {"disc-degree", "degree of the pencil discriminant", &Runner::disc_degree},
    };
    for (const auto& v : verbs) app.add_subcommand(v.name, v.help)->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        return 1;
    }

    Runner runner(opt, out);
    try {
        for (const auto& v : verbs)
            if (app.got_subcommand(v.name)) return (runner.*v.fn)();
    } catch (const Error& e) {
        report_error(err, e.kind(), e.what());
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        report_error(err, "internal", e.what());
        return 3;
    }
    return 1;
}

}  // namespace eigenscheme
