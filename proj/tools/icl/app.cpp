#include <algorithm>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "icl/error.hpp"

namespace icl::cli {

namespace {

struct OpSpec {
    const char* name;
    const char* help;
    std::vector<std::string> flags;
};

const std::map<std::string, std::vector<OpSpec>>& op_table()
{
    static const std::map<std::string, std::vector<OpSpec>> table{
        {"poly",
         {{"normalize", "print f in canonical form", {"f"}},
          {"lowest-form", "order and lowest homogeneous part of f", {"f"}},
          {"divide", "exact quotient f / g", {"f", "g"}},
          {"map", "apply var -> polynomial substitutions", {"f", "image", "target-ring"}}}},
        {"ideal",
         {{"gb", "reduced Groebner basis", {"ideal", "order"}},
          {"member", "membership of f", {"ideal", "f"}},
          {"intersect", "I ∩ J", {"ideal", "other"}},
          {"quotient", "I : J", {"ideal", "other"}},
          {"sum", "I + J", {"ideal", "other"}},
          {"product", "I J", {"ideal", "other"}},
          {"power", "I^n", {"ideal", "n"}},
          {"eliminate", "I ∩ k[remaining variables]", {"ideal", "vars"}},
          {"dim", "Krull dimension of R/I", {"ideal"}},
          {"colength", "vector-space dimension of R/I", {"ideal"}},
          {"closure", "integral closure of I^n", {"ideal", "monomial", "n"}},
          {"order", "largest r with I inside m^r", {"ideal"}},
          {"nu", "minimal number of generators", {"ideal"}},
          {"contracted", "nu = order + 1", {"ideal"}},
          {"transform", "quadratic transform in one chart", {"ideal", "chart", "shift"}},
          {"base-points", "first-order base points", {"ideal", "shift"}},
          {"is-closed", "is I integrally closed", {"ideal"}},
          {"reduction", "is --other a reduction of I", {"ideal", "other"}},
          {"integral-test", "certificate that f is integral over I", {"ideal", "f"}},
          {"multiplicity", "Hilbert-Samuel multiplicity in k[x,y]", {"ideal", "trials"}},
          {"rees", "defining ideal of the Rees algebra", {"ideal"}},
          {"generic-element", "x = sum z_i a_i", {"ideal", "symbolic"}}}},
        {"module",
         {{"fitting", "Fitting ideal Fitt_i (default i = rank)", {"module", "index"}},
          {"order", "order of Fitt_e", {"module"}},
          {"nu", "minimal number of generators", {"module"}},
          {"contracted", "nu = order + rank", {"module"}},
          {"bourbaki", "generic Bourbaki ideal", {"module", "path", "symbolic"}},
          {"is-closed", "is the module integrally closed", {"module"}},
          {"transform", "columns in one chart", {"module", "chart", "shift"}},
          {"embed", "module of a presentation, inside its double dual", {"presentation", "ngens"}}}},
        {"verify",
         {{"itoh", "closure(I^{n+1}) ∩ I^n = closure(I) I^n for monomial complete intersections",
           {"exponents", "nmax"}},
          {"specialize", "closure commutes with going modulo a generic element", {"ideal", "seeds"}},
          {"radical", "sqrt((x)) inside closure(I) for a generic element x", {"ideal", "draws"}},
          {"product", "products of integrally closed ideals of k[x,y] are closed", {"count"}},
          {"campaign", "run a JSON list of instances", {"file"}}}},
    };
    return table;
}

void add_flag(CLI::App* sub, const std::string& flag, Args& a)
{
    if (flag == "ideal")
        sub->add_option("--ideal", a.ideal, "generators, comma separated");
    else if (flag == "other")
        sub->add_option("--other", a.other, "second ideal (the reduction U for reduction)");
    else if (flag == "f")
        sub->add_option("--f", a.f, "polynomial")->required();
    else if (flag == "g")
        sub->add_option("--g", a.g, "divisor")->required();
    else if (flag == "n")
        sub->add_option("--n,--power", a.n, "exponent")->capture_default_str();
    else if (flag == "vars")
        sub->add_option("--vars", a.vars, "variables to eliminate")->delimiter(',')->required();
    else if (flag == "order")
        sub->add_option("--order", a.order, "grevlex or lex")->capture_default_str();
    else if (flag == "chart")
        sub->add_option("--chart", a.chart, "finite or infinity")->capture_default_str();
    else if (flag == "shift")
        sub->add_option("--shift", a.shift, "c in the pivot x + c*y")->capture_default_str();
    else if (flag == "module")
        sub->add_option("--module", a.module, "JSON list of columns of polynomial strings")->required();
    else if (flag == "presentation")
        sub->add_option("--presentation", a.presentation, "JSON list of relation columns");
    else if (flag == "ngens")
        sub->add_option("--ngens", a.ngens, "number of generators");
    else if (flag == "index")
        sub->add_option("--index", a.index, "Fitting index");
    else if (flag == "path")
        sub->add_option("--path", a.path, "fitting-shortcut or iterated-quotient")->capture_default_str();
    else if (flag == "symbolic")
        sub->add_flag("--symbolic", a.symbolic, "adjoin indeterminates instead of drawing values");
    else if (flag == "trials")
        sub->add_option("--trials", a.trials, "random pairs")->capture_default_str();
    else if (flag == "monomial")
        sub->add_option("--monomial", a.monomial, "exponent lists: 2,0;0,2 or [[2,0],[0,2]]");
    else if (flag == "image")
        sub->add_option("--image", a.images, "var=polynomial, repeatable");
    else if (flag == "target-ring")
        sub->add_option("--target-ring", a.target_ring, "ring of the images");
    else if (flag == "exponents")
        sub->add_option("--exponents", a.exponents, "a1,..,ag")->delimiter(',')->required();
    else if (flag == "nmax")
        sub->add_option("--nmax", a.nmax, "largest n")->capture_default_str();
    else if (flag == "count")
        sub->add_option("--count", a.count, "number of pairs")->capture_default_str();
    else if (flag == "draws")
        sub->add_option("--draws", a.draws, "z values instead of a seeded draw")->delimiter(',');
    else if (flag == "seeds")
        sub->add_option("--seeds", a.seeds, "seeds (default: --seed and one derived from it)")->delimiter(',');
    else if (flag == "file")
        sub->add_option("file", a.file, "campaign file")->required();
}

bool takes_value(const std::string& opt)
{
    static const char* valued[] = {"--ring", "--seed", "--cap", "--degree-bound", "--cache", "--threads"};
    return std::find(std::begin(valued), std::end(valued), opt) != std::end(valued);
}

/* `icl closure ...` means `icl ideal closure ...`. */
void insert_group(std::vector<std::string>& args)
{
    std::size_t i = 0;
    while (i < args.size() && args[i].starts_with("--"))
        i += takes_value(args[i]) && args[i].find('=') == std::string::npos ? 2 : 1;
    if (i >= args.size())
        return;
    const std::string& first = args[i];
    if (op_table().contains(first) || first == "run" || first == "schema")
        return;
    std::string group = infer_group(first);
    if (!group.empty())
        args.insert(args.begin() + static_cast<std::ptrdiff_t>(i), group);
}

} // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    insert_group(args);

    CLI::App app{"Integral closures, quadratic transforms and Bourbaki ideals over polynomial rings", "icl"};
    Settings s;
    Args a;
    std::string ring;
    app.add_option("--ring", ring, "ring, e.g. \"x,y/Q\" or \"x,y/Fp:65537\"");
    app.add_flag("--json", s.json, "JSON on stdout");
    app.add_option("--seed", s.seed, "seed for every random choice")->capture_default_str();
    app.add_option("--cap", s.cap, "reduction-number cap")->capture_default_str();
    app.add_option("--degree-bound", s.degree_bound, "candidate degree for verify specialize (default o + 6)");
    app.add_flag("--trace", s.trace, "base-point trees, with multiplicity checks");
    app.add_option("--cache", s.cache, "directory for Groebner bases");
    app.add_option("--threads", s.threads, "workers for verification campaigns (0: all cores)");
    app.require_subcommand(1);

    for (const auto& [group, ops] : op_table()) {
        CLI::App* g = app.add_subcommand(group, group + " operations");
        g->require_subcommand(1);
        g->fallthrough();
        for (const auto& op : ops) {
            CLI::App* sub = g->add_subcommand(op.name, op.help);
            sub->fallthrough();
            for (const auto& flag : op.flags)
                add_flag(sub, flag, a);
        }
    }
    CLI::App* run = app.add_subcommand("run", "run the tasks of a problem file");
    run->add_option("file", a.file, "problem file")->required();
    run->fallthrough();
    CLI::App* schema = app.add_subcommand("schema", "print the JSON schema of problem files");
    schema->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 3;
    }
    if (app.count("--ring"))
        s.ring = ring;

    try {
        Outcome result;
        if (*schema) {
            out << problem_schema();
            return 0;
        }
        if (*run) {
            result = run_problem(load_problem(a.file, s));
        } else {
            CLI::App* group = app.get_subcommands().front();
            CLI::App* op = group->get_subcommands().front();
            result = execute(group->get_name(), op->get_name(), s, a);
        }
        if (s.json)
            out << result.json.dump(2) << "\n";
        else
            out << result.text << "\n";
        return result.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (s.json) {
            nlohmann::ordered_json j;
            j["error"] = {{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
            out << j.dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return 3;
}

} // namespace icl::cli
