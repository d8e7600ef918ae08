#include "lrs/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lrs/berlekamp_massey.hpp"
#include "lrs/error.hpp"
#include "lrs/hankel.hpp"
#include "lrs/lazy.hpp"
#include "lrs/sequence.hpp"

namespace lrs::cli {

namespace {

struct Options {
    std::string field = "Q";
    std::string algorithm = "modified";
    std::string format = "ascending";
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<std::size_t> l0;
    std::size_t extra = 2;
    std::string verifier;
    std::string sequence_path;
    std::string matrix_path;
    std::string u_path;
    std::string v_path;
    std::string poly;
    std::string init;
    std::size_t count = 0;
};

std::string read_source(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw Error(Errc::BadInput, "cannot open '" + path + "'");
    buf << file.rdbuf();
    return buf.str();
}

std::string render(const Poly& p, const std::string& format) {
    return format == "pretty" ? format_pretty(p) : format_ascending(p);
}

int cmd_minpoly(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const FieldSpec spec = FieldSpec::parse(o.field);
    if (o.n < 1) throw Error(Errc::BadInput, "-n must be at least 1");
    Vector terms = parse_vector(read_source(o.sequence_path, in), spec);
    if (terms.size() < 2 * o.n)
        throw Error(Errc::BadInput, "need " + std::to_string(2 * o.n) + " terms, file has " + std::to_string(terms.size()));
    if (terms.size() > 2 * o.n) {
        err << "warning: ignoring " << terms.size() - 2 * o.n << " terms beyond the first " << 2 * o.n << '\n';
        terms.resize(2 * o.n, FieldElement(spec));
    }
    Poly p(spec);
    if (o.algorithm == "usual")
        p = bm_usual(o.n, terms, spec);
    else if (o.algorithm == "hankel")
        p = minpoly_hankel(terms, o.n, spec);
    else
        p = bm_modified(o.n, terms, spec);
    out << render(p, o.format) << '\n';
    return kOk;
}

int cmd_lazy_minpoly(const Options& o, std::istream& in, std::ostream& out, std::ostream&) {
    const FieldSpec spec = FieldSpec::parse(o.field);
    if (o.m < 1) throw Error(Errc::BadInput, "-m must be at least 1");
    const bool matrix_source = !o.matrix_path.empty();
    if (matrix_source == !o.sequence_path.empty())
        throw Error(Errc::BadInput, "give either a sequence file or --matrix with --u and --v");

    std::unique_ptr<SequenceOracle> oracle;
    Verifier verifier;
    if (matrix_source) {
        if (o.u_path.empty() || o.v_path.empty()) throw Error(Errc::BadInput, "--matrix requires --u and --v");
        std::istringstream matrix_text(read_source(o.matrix_path, in));
        SparseMatrix matrix = parse_sparse_matrix(matrix_text, spec);
        Vector u = parse_vector(read_source(o.u_path, in), spec);
        Vector v = parse_vector(read_source(o.v_path, in), spec);
        verifier = o.verifier == "default" ? default_verifier(o.extra) : matrix_verifier(matrix, v);
        oracle = krylov_oracle(std::move(matrix), std::move(u), std::move(v));
    } else {
        if (o.verifier == "matrix") throw Error(Errc::BadInput, "--verifier matrix needs a matrix source");
        oracle = from_list(parse_vector(read_source(o.sequence_path, in), spec), spec);
        verifier = default_verifier(o.extra);
    }
    const std::size_t l0 = o.l0.value_or(default_initial_bound(o.m));
    const Poly p = lazy_minpoly(*oracle, o.m, l0, verifier);
    out << render(p, o.format) << '\n';
    out << "terms consumed: " << oracle->terms_served() << '\n';
    return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
    const FieldSpec spec = FieldSpec::parse(o.field);
    auto oracle = from_recurrence(parse_ascending(o.poly, spec), parse_vector(o.init, spec));
    Vector terms;
    for (std::size_t i = 0; i < o.count; ++i) terms.push_back(oracle->next());
    out << format_vector(terms) << '\n';
    return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
    const FieldSpec spec = FieldSpec::parse(o.field);
    const Poly p = parse_ascending(o.poly, spec);
    const Vector terms = parse_vector(read_source(o.sequence_path, in), spec);
    if (const auto j = first_failing_window(terms, p)) {
        out << "not generating: first failing window j = " << *j << '\n';
        return kVerificationFailed;
    }
    out << "generating" << '\n';
    return kOk;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::NotLinearlyRecurrent: return kNotLinearlyRecurrent;
        case Errc::OracleExhausted: return kOracleExhausted;
        default: return kBadInput;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Minimal polynomials of linearly recurrent sequences", "lrs"};
    app.require_subcommand(1);

    auto add_field = [&o](CLI::App* sub) {
        sub->add_option("--field", o.field, "Coefficient field: Q or gf:<prime>")->capture_default_str();
    };
    auto add_format = [&o](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"ascending", "pretty"}))
            ->capture_default_str();
    };

    auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial from the first 2n terms");
    add_field(minpoly);
    minpoly->add_option("--algorithm", o.algorithm, "usual, modified or hankel")
        ->check(CLI::IsMember({"usual", "modified", "hankel"}))
        ->capture_default_str();
    minpoly->add_option("-n", o.n, "Degree bound")->required();
    add_format(minpoly);
    minpoly->add_option("sequence", o.sequence_path, "Sequence file, '-' for stdin")->required();

    auto* lazy = app.add_subcommand("lazy-minpoly", "Minimal polynomial drawing terms on demand");
    add_field(lazy);
    lazy->add_option("-m", o.m, "Degree bound")->required();
    lazy->add_option("--l0", o.l0, "Initial half-length (default max(1, m/4))");
    lazy->add_option("--extra", o.extra, "Extra terms checked by the default verifier")->capture_default_str();
    lazy->add_option("--verifier", o.verifier, "default or matrix (matrix sources default to matrix)")
        ->check(CLI::IsMember({"default", "matrix"}));
    lazy->add_option("--matrix", o.matrix_path, "Sparse matrix file");
    lazy->add_option("--u", o.u_path, "Projection vector file");
    lazy->add_option("--v", o.v_path, "Seed vector file");
    add_format(lazy);
    lazy->add_option("sequence", o.sequence_path, "Sequence file, '-' for stdin");

    auto* generate = app.add_subcommand("generate", "Terms of the sequence defined by a monic recurrence");
    add_field(generate);
    generate->add_option("--poly", o.poly, "Monic polynomial, ascending coefficients")->required();
    generate->add_option("--init", o.init, "Initial terms, one per degree");
    generate->add_option("--count", o.count, "Number of terms")->required();

    auto* verify = app.add_subcommand("verify", "Check that a polynomial generates a sequence");
    add_field(verify);
    verify->add_option("--poly", o.poly, "Polynomial, ascending coefficients")->required();
    verify->add_option("sequence", o.sequence_path, "Sequence file, '-' for stdin")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (minpoly->parsed()) return cmd_minpoly(o, in, out, err);
        if (lazy->parsed()) return cmd_lazy_minpoly(o, in, out, err);
        if (generate->parsed()) return cmd_generate(o, out);
        return cmd_verify(o, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
}

}  // namespace lrs::cli
