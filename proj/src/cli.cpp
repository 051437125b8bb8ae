#include "rcanon/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "rcanon/errors.hpp"
#include "rcanon/io.hpp"

namespace rcanon {

namespace {

using io::json;

struct Globals {
    std::optional<double> tol;
    bool json = false;
    bool quiet = false;
};

int exit_code_for(const Error& e) {
    const std::string& n = e.name();
    if (n == "ParseError" || n == "ContextError" || n == "UnsupportedContext" || n == "ContextMismatch")
        return kExitInput;
    return kExitFailure;
}

MatrixPair load_pair(const std::string& path, const Globals& g) {
    MatrixPair p = io::pair_from_json(io::read_json_file(path));
    if (g.tol)
        p.tolerances.relation = *g.tol;
    return p;
}

void print_form(std::ostream& out, const CanonicalForm& cf) {
    out << to_string(cf.case_tag.kind) << " r=" << cf.case_tag.r << " m=" << root_modulus(cf.case_tag.r) << " ("
        << cf.blocks.size() << " blocks)\n";
    for (const auto& b : cf.blocks)
        out << "  " << b.to_string() << "\n";
}

int cmd_validate(const std::string& input, const Globals& g, std::ostream& out) {
    const MatrixPair p = load_pair(input, g);
    const ValidationReport rep = validate_pair(p);
    if (g.quiet)
        return rep.passed() ? kExitOk : kExitFailure;
    if (g.json) {
        out << io::dump(io::report_to_json(rep));
    } else {
        for (const auto& c : rep.checks) {
            out << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name << " residual "
                << std::setprecision(3) << std::scientific << c.residual << std::defaultfloat;
            if (c.derived)
                out << " (derived)";
            if (!c.message.empty())
                out << "  " << c.message;
            out << "\n";
        }
        out << (rep.passed() ? "valid" : "invalid") << "\n";
    }
    return rep.passed() ? kExitOk : kExitFailure;
}

int cmd_canonicalize(const std::string& input, const std::string& output, const Globals& g, std::ostream& out) {
    const MatrixPair p = load_pair(input, g);
    const Canonicalization c = canonicalize(p);
    const std::string doc = io::dump(io::canonicalization_to_json(c));
    if (!output.empty()) {
        io::write_text_file(output, doc);
        if (!g.quiet && !g.json)
            print_form(out, c.form);
    } else if (!g.quiet) {
        out << doc;
    }
    return kExitOk;
}

struct GenerateArgs {
    std::string case_tag;
    int r = 2;
    std::string blocks;
    int dim = 4;
    std::uint64_t seed = 0;
    double cond = 100.0;
    std::string output;
    std::string truth;
    std::optional<double> corrupt;
};

int cmd_generate(const GenerateArgs& a, const Globals& g, std::ostream& out) {
    GeneratorSpec spec;
    require_exponent(a.r);
    spec.case_tag = {parse_case_kind(a.case_tag), a.r};
    spec.dimension = a.dim;
    spec.cond_bound = a.cond;
    if (g.tol)
        spec.tolerances.relation = *g.tol;
    if (!a.blocks.empty()) {
        const json doc = io::read_json_file(a.blocks);
        const json& list = doc.is_object() && doc.contains("blocks") ? doc["blocks"] : doc;
        if (!list.is_array())
            throw ParseError("block file must be an array of blocks or an object with \"blocks\"");
        const int m = root_modulus(a.r);
        for (const auto& b : list)
            spec.blocks.push_back(io::block_from_json(b, m));
    }
    std::mt19937_64 rng(a.seed);
    GeneratedInstance inst = random_instance(spec, rng);
    if (a.corrupt && inst.pair.a.rows() > 0) {
        std::uniform_int_distribution<std::size_t> pick(0, inst.pair.a.rows() - 1);
        const std::size_t i = pick(rng), k = pick(rng);
        inst.pair.a(i, k).a += *a.corrupt;
    }
    const std::string pair_doc = io::dump(io::pair_to_json(inst.pair));
    const std::string truth_doc = io::dump(io::form_to_json(inst.ground_truth));
    if (!a.output.empty())
        io::write_text_file(a.output, pair_doc);
    else if (!g.quiet)
        out << pair_doc;
    if (!a.truth.empty())
        io::write_text_file(a.truth, truth_doc);
    if (!a.output.empty() && !g.quiet && !g.json)
        print_form(out, inst.ground_truth);
    return kExitOk;
}

int cmd_equiv(const std::string& first, const std::string& second, const Globals& g, std::ostream& out) {
    const MatrixPair p1 = load_pair(first, g);
    const MatrixPair p2 = load_pair(second, g);
    if (p1.context != p2.context)
        throw ContextMismatch("pairs have different contexts");
    const bool same_size = p1.a.rows() == p2.a.rows();
    const CanonicalForm f1 = canonicalize(p1).form;
    const CanonicalForm f2 = canonicalize(p2).form;
    const bool eq = same_size && f1 == f2;
    if (g.json) {
        if (!g.quiet)
            out << io::dump({{"equivalent", eq}, {"first", io::form_to_json(f1)}, {"second", io::form_to_json(f2)}});
    } else if (!g.quiet) {
        print_form(out, f1);
        print_form(out, f2);
        out << (eq ? "equivalent" : "inequivalent") << "\n";
    }
    return eq ? kExitOk : kExitInequivalent;
}

int cmd_catalog(const std::string& case_tag, int r, const Globals& g, std::ostream& out) {
    require_exponent(r);
    const CaseTag c{parse_case_kind(case_tag), r};
    const auto templates = catalog(c);
    if (g.quiet)
        return kExitOk;
    if (g.json) {
        json list = json::array();
        for (const auto& b : templates)
            list.push_back(io::block_to_json(b));
        out << io::dump(list);
    } else {
        for (const auto& b : templates)
            out << b.to_string() << "\n";
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Canonical forms of r-selfadjoint matrix pairs over R, C and H", "rcanon"};
    app.require_subcommand(1);

    Globals g;
    double tol = 0.0;
    auto* tol_opt = app.add_option("--tol", tol, "relation tolerance (relative)")->check(CLI::PositiveNumber);
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--quiet", g.quiet, "suppress standard output");

    std::string input, output, first, second;
    auto* validate = app.add_subcommand("validate", "check a pair document");
    validate->add_option("--input,input", input, "pair document")->required();

    auto* canon = app.add_subcommand("canonicalize", "canonical form and witness");
    canon->add_option("--input,input", input, "pair document")->required();
    canon->add_option("--output", output, "canon document (default: stdout)");

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "random pair with known canonical form");
    generate->add_option("--case", gen.case_tag, "a1..c4")->required();
    generate->add_option("--r", gen.r, "exponent")->required();
    auto* blocks_opt = generate->add_option("--blocks", gen.blocks, "JSON list of blocks");
    generate->add_option("--dim", gen.dim, "dimension budget")->excludes(blocks_opt)->check(CLI::NonNegativeNumber);
    generate->add_option("--seed", gen.seed, "random seed");
    generate->add_option("--cond", gen.cond, "condition bound of the scrambling matrix");
    generate->add_option("--output", gen.output, "pair document (default: stdout)");
    generate->add_option("--truth", gen.truth, "ground-truth canon document");
    double corrupt = 0.0;
    auto* corrupt_opt = generate->add_option("--corrupt", corrupt, "perturb one entry of A by this amount");

    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two pairs");
    equiv->add_option("first", first, "pair document")->required();
    equiv->add_option("second", second, "pair document")->required();

    std::string case_tag;
    int r = 2;
    auto* cat = app.add_subcommand("catalog", "admissible block templates");
    cat->add_option("--case", case_tag, "a1..c4")->required();
    cat->add_option("--r", r, "exponent")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ParseError: " << e.what() << "\n";
        return kExitInput;
    }
    if (*tol_opt)
        g.tol = tol;
    if (*corrupt_opt)
        gen.corrupt = corrupt;

    try {
        if (*validate)
            return cmd_validate(input, g, out);
        if (*canon)
            return cmd_canonicalize(input, output, g, out);
        if (*generate)
            return cmd_generate(gen, g, out);
        if (*equiv)
            return cmd_equiv(first, second, g, out);
        return cmd_catalog(case_tag, r, g, out);
    } catch (const Error& e) {
        err << e.name() << ": " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace rcanon
