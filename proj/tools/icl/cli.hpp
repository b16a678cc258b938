#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icl/bourbaki/module.hpp"
#include "icl/rees/rees.hpp"
#include "json.hpp"

namespace icl::cli {

struct Settings {
    std::optional<std::string> ring;
    bool json = false;
    std::uint64_t seed = 1;
    unsigned cap = kDefaultReductionCap;
    long degree_bound = -1;
    bool trace = false;
    std::string cache; // directory; empty means no cache
    unsigned threads = 0;
};

/* Operation arguments, from flags or from a problem-file task. Text fields
 * are parsed in the ring when the operation runs; *_value fields hold
 * objects already parsed by a problem file. */
struct Args {
    std::string ideal, other, module, presentation, monomial;
    std::optional<Ideal> ideal_value, other_value;
    std::optional<FModule> module_value;
    std::string f, g, target_ring;
    std::string order = "grevlex";
    std::string chart = "finite";
    std::string shift = "0";
    std::string path = "iterated-quotient";
    std::vector<std::string> images, vars, draws;
    std::vector<int> exponents;
    std::vector<std::uint64_t> seeds;
    unsigned n = 1;
    unsigned nmax = 2;
    long index = -1; // Fitting index; the rank when negative
    int trials = 3;
    std::size_t count = 50;
    std::size_t ngens = 0;
    bool symbolic = false;
    std::string file;
};

struct Outcome {
    nlohmann::ordered_json json;
    std::string text;
    int code = 0; // 0 success, 1 FAIL, 2 inconclusive
};

/* One operation; throws icl::Error. */
Outcome execute(const std::string& group, const std::string& op, const Settings& settings, const Args& args);

/* Integer or integer/integer, reduced into the field. Throws BadCoefficient. */
Rational parse_rational(const std::string& text, const Field& k);

/* Group that owns `op` when the group is left out, or "" if unknown. */
std::string infer_group(std::string_view op);

struct Task {
    std::string group;
    std::string op;
    std::string target;
    Settings settings;
    Args args;
};

struct ProblemFile {
    RingContext ring;
    std::map<std::string, std::string> kinds; // name -> ideal | monomial | module
    std::vector<Task> tasks;
};

/* Throws SchemaError (with a JSON-pointer path) and SyntaxError. */
ProblemFile load_problem(const std::string& path, const Settings& settings = {});
ProblemFile parse_problem(std::string_view text, const Settings& settings = {});
Outcome run_problem(const ProblemFile& problem);

/* A JSON list of verification instances. */
Outcome run_campaign_file(const std::string& path, const Settings& settings);

std::string_view problem_schema();

/* Whole command line, argv[0] included. Returns the exit code. */
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace icl::cli
