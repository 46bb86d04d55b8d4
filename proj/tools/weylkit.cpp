#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "weylkit/algebra_map.hpp"
#include "weylkit/command.hpp"
#include "weylkit/generator_word.hpp"
#include "weylkit/limits.hpp"
#include "weylkit/parse.hpp"

namespace {

struct CliState {
    weylkit::Command cmd;
    std::string format = "text";
    std::string batch_path;
    bool ran_batch = false;
    bool ran_selftest = false;
};

void add_common_flags(CLI::App* sub, CliState& st) {
    sub->add_option("--format", st.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--bound", st.cmd.bound, "Membership search radius D");
    sub->add_option("--word-length", st.cmd.word_length, "Maximum word length L");
    sub->add_option("--pool-degree", st.cmd.pool_degree, "Triangular pool degree cap");
    sub->add_option("--pool-coeff", st.cmd.pool_coeffs, "Triangular pool coefficient (repeatable)");
    sub->add_option("--seed", st.cmd.seed, "Seed for randomized suites");
}

CLI::App* add_verb(CLI::App& app, CliState& st, const std::string& name,
                   const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("args", st.cmd.exprs, "Positional arguments");
    add_common_flags(sub, st);
    sub->callback([&st, name] { st.cmd.verb = name; });
    return sub;
}

void build_app(CLI::App& app, CliState& st) {
    app.require_subcommand(0, 1);
    app.set_help_flag("-h,--help", "Print help");

    CLI::App* eval = add_verb(app, st, "eval", "Parse and normal-order an expression");
    eval->add_option("--mode", st.cmd.mode, "weyl or comm")
        ->check(CLI::IsMember({"weyl", "comm"}));

    add_verb(app, st, "check-endo", "Validate images of an endomorphism of A1");
    add_verb(app, st, "check-anti", "Validate images of an anti-endomorphism of A1");

    CLI::App* ci = add_verb(app, st, "check-involution", "Check a map for order 2");
    ci->add_option("--kind", st.cmd.kind, "homo or anti (default anti)");

    add_verb(app, st, "conjugate", "Conjugate an involution by a generator word");
    add_verb(app, st, "sym-skew", "Symmetric/skew decomposition of an element");

    CLI::App* fam = add_verb(app, st, "alpha-family", "Build a classified alpha-family member");
    fam->add_option("--variant", st.cmd.variant, "endo or anti")
        ->check(CLI::IsMember({"endo", "anti"}));
    fam->add_flag("--invert", st.cmd.invert, "Also emit the closed-form inverse");

    add_verb(app, st, "centralizer", "Express a centralizing element as h(P)");
    add_verb(app, st, "membership", "Bounded membership of an element in K<P,Q>");
    add_verb(app, st, "auto-decide", "Bounded automorphism certificate for an image pair");
    add_verb(app, st, "gamma-delta", "Check f o gamma = delta o f on the generators");

    CLI::App* gh = add_verb(app, st, "gh-check", "Classify h f g^{-1} against alpha");
    gh->add_option("--kind", st.cmd.kind, "Kind of f (default homo)");

    add_verb(app, st, "restriction", "Bounded restriction-condition check");
    add_verb(app, st, "extension-search", "Bounded extension-condition word search");

    CLI::App* pipe = add_verb(app, st, "sym-pipeline", "Symmetric-image automorphism pipeline");
    pipe->add_option("--which", st.cmd.which, "P or Q")->check(CLI::IsMember({"P", "Q"}));
    pipe->add_option("--parity", st.cmd.parity, "sym or skew")
        ->check(CLI::IsMember({"sym", "skew"}));

    CLI::App* symsearch =
        add_verb(app, st, "symmetrize-search", "Word search making an image alpha-(skew)symmetric");
    symsearch->add_option("--which", st.cmd.which, "P or Q")->check(CLI::IsMember({"P", "Q"}));

    add_verb(app, st, "kxy-jacobian", "Jacobian of a K[x,y] map");
    add_verb(app, st, "kxy-factor", "Tame factorization of a plane automorphism");
    add_verb(app, st, "kxy-classify", "Conjugacy class of a plane involution");
    add_verb(app, st, "kxy-jc-check", "Jacobian and gamma/delta commutation for a plane map");

    CLI::App* batch = app.add_subcommand("batch", "Run commands from a file ('-' for stdin)");
    batch->add_option("file", st.batch_path, "Batch file path")->required();
    batch->add_option("--format", st.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    batch->callback([&st] { st.ran_batch = true; });

    CLI::App* selftest = app.add_subcommand("selftest", "Quick randomized consistency suite");
    selftest->add_option("--seed", st.cmd.seed, "RNG seed");
    selftest->callback([&st] { st.ran_selftest = true; });
}

void print_report(const weylkit::Report& r, const std::string& format) {
    if (format == "json")
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_text();
}

// Tokens are whitespace-separated; double quotes group words.
std::vector<std::string> tokenize_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool in_quotes = false;
    bool have = false;
    for (char ch : line) {
        if (ch == '"') {
            in_quotes = !in_quotes;
            have = true;
            continue;
        }
        if (!in_quotes && std::isspace(static_cast<unsigned char>(ch))) {
            if (have || !cur.empty()) {
                out.push_back(cur);
                cur.clear();
                have = false;
            }
            continue;
        }
        cur += ch;
    }
    if (have || !cur.empty())
        out.push_back(cur);
    return out;
}

int run_batch(const std::string& path, const std::string& format) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) {
            std::cerr << "cannot open batch file: " << path << "\n";
            return 1;
        }
        in = &file;
    }

    int worst = 0;
    bool first = true;
    std::string line;
    while (std::getline(*in, line)) {
        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
            trimmed.erase(trimmed.begin());
        if (trimmed.empty() || trimmed.front() == '#')
            continue;

        CliState st;
        st.format = format;
        CLI::App line_app{"weylkit"};
        build_app(line_app, st);

        weylkit::Report report;
        try {
            std::vector<std::string> tokens = tokenize_line(trimmed);
            std::reverse(tokens.begin(), tokens.end());
            line_app.parse(tokens);
            if (st.cmd.verb.empty()) {
                report.verb = "batch";
                report.outcome = "error";
                report.exit_code = 1;
                report.payload = {{"error", "constraint-violated"},
                                  {"message", "batch lines must name a subcommand"}};
            } else {
                report = weylkit::run_command(st.cmd);
            }
        } catch (const CLI::ParseError& e) {
            report.verb = "batch";
            report.outcome = "error";
            report.exit_code = 1;
            report.payload = {{"error", "cli-parse-error"}, {"message", e.what()}};
        }

        if (format == "json") {
            std::cout << report.to_json().dump() << "\n";
        } else {
            if (!first)
                std::cout << "\n";
            std::cout << report.to_text();
        }
        first = false;

        if (report.exit_code == 1)
            worst = 1;
        else if (report.exit_code == 2 && worst == 0)
            worst = 2;
    }
    return worst;
}

int run_selftest(unsigned seed) {
    using namespace weylkit;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);

    auto random_scalar = [&] {
        return Scalar(mpq_class(small(rng), den(rng)), mpq_class(small(rng), den(rng)));
    };
    auto random_poly = [&] {
        WeylPoly p;
        std::uniform_int_distribution<int> exp(0, 2);
        for (int t = 0; t < 3; ++t)
            p += WeylPoly::monomial(exp(rng), exp(rng), random_scalar());
        return p;
    };

    for (int t = 0; t < 200; ++t) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        if ((a + b) * c != a * c + b * c || a * (b * c) != (a * b) * c || a * b != b * a) {
            std::cout << "selftest: scalar axioms failed\n";
            return 1;
        }
    }
    for (int t = 0; t < 50; ++t) {
        WeylPoly u = random_poly(), v = random_poly(), w = random_poly();
        if ((u * v) * w != u * (v * w)) {
            std::cout << "selftest: associativity failed\n";
            return 1;
        }
    }
    if (commutator(WeylPoly::gen_y(), WeylPoly::gen_x()) != WeylPoly::one()) {
        std::cout << "selftest: defining relation failed\n";
        return 1;
    }
    for (int t = 0; t < 20; ++t) {
        long k = small(rng);
        if (k == 0)
            k = 1;
        Scalar tval = Scalar::rational(k, 1) + (k > 0 ? Scalar::rational(1, 2) : Scalar(0));
        Scalar a = (tval + tval.inverse()) / Scalar(2);
        Scalar b = (tval - tval.inverse()) / Scalar(2);
        AlgebraMap f = alpha_family(a, b, {random_scalar()}, FamilyVariant::endo);
        AlgebraMap g = alpha_family_invert(f);
        if (!is_identity(compose(f, g))) {
            std::cout << "selftest: family inversion failed\n";
            return 1;
        }
    }
    std::cout << "selftest: ok (seed " << seed << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CliState st;
    CLI::App app{"weylkit: exact Weyl-algebra and plane-automorphism toolkit"};
    build_app(app, st);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (st.ran_batch)
        return run_batch(st.batch_path, st.format);
    if (st.ran_selftest)
        return run_selftest(st.cmd.seed.value_or(12345));
    if (st.cmd.verb.empty()) {
        std::cout << app.help();
        return 0;
    }

    weylkit::Report report = weylkit::run_command(st.cmd);
    print_report(report, st.format);
    return report.exit_code;
}
