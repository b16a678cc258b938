#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "icl/error.hpp"
#include "icl/verify/verify.hpp"

using namespace icl;
using namespace icl::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run icl_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "icl");
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

ErrorKind load_error(const std::string& text, std::string& message)
{
    try {
        parse_problem(text);
    } catch (const Error& e) {
        message = e.what();
        return e.kind();
    }
    message = "loaded";
    return ErrorKind::Unsupported;
}

std::filesystem::path scratch(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("icl-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir / name;
}

const std::string kExamples = ICL_EXAMPLES_DIR;

} // namespace

TEST_CASE("documented invocations")
{
    auto c = icl_run({"closure", "--ring", "x,y/Q", "--ideal", "x^2,y^2"});
    CHECK(c.code == 0);
    CHECK(c.out == "x^2, x*y, y^2\n");

    auto m = icl_run({"member", "--ring", "x,y/Q", "--ideal", "x^2,y^2", "--f", "x*y"});
    CHECK(m.code == 0);
    CHECK(m.out == "false\n");

    auto v = icl_run({"verify", "itoh", "--exponents", "2,3", "--nmax", "4", "--json"});
    CHECK(v.code == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["result"]["verdict"] == "PASS");
    CHECK(VerificationReport::from_json(j["result"]) == verify_itoh({2, 3}, 4));

    // the group may be given or left out
    CHECK(icl_run({"ideal", "closure", "--ring", "x,y/Q", "--ideal", "x^2,y^2"}).out == c.out);
    CHECK(icl_run({"--ring", "x,y/Q", "closure", "--ideal", "x^2,y^2"}).out == c.out);
    CHECK(icl_run({"closure", "--monomial", "2,0;0,2"}).out == c.out);
}

TEST_CASE("exit codes")
{
    CHECK(icl_run({"integral-test", "--ring", "x,y/Q", "--ideal", "x^2,y^2", "--f", "x"}).code == 2);
    CHECK(icl_run({"integral-test", "--ring", "x,y/Q", "--ideal", "x^2,y^2", "--f", "x*y"}).code == 0);
    CHECK(icl_run({"verify", "radical", "--ring", "x,y/Q", "--ideal", "x^2,x*y,y^2", "--draws", "1,2,1"}).code == 2);

    auto unknown = icl_run({"ideal", "frobnicate"});
    CHECK(unknown.code == 3);
    CHECK(icl_run({"closure", "--ideal", "x^2"}).code == 3);
    auto bad = icl_run({"closure", "--ring", "x,y/Q", "--ideal", "x^2,z", "--json"});
    CHECK(bad.code == 3);
    CHECK(bad.err.find("UnknownVariable") != std::string::npos);
    CHECK(nlohmann::json::parse(bad.out)["error"]["kind"] == "UnknownVariable");
    CHECK(icl_run({"verify", "specialize", "--ring", "x,y/Q", "--ideal", "x^2,x*y"}).code == 3);
    CHECK(icl_run({"--help"}).code == 0);
}

TEST_CASE("fixed seeds give byte-identical JSON")
{
    std::vector<std::vector<std::string>> commands{
        {"closure", "--ring", "x,y/Q", "--ideal", "x^3 + y^4, x*y^2", "--trace"},
        {"multiplicity", "--ring", "x,y/Q", "--ideal", "x^2 + y^3, x*y", "--seed", "9"},
        {"generic-element", "--ring", "x,y/Q", "--ideal", "x^2, y^2", "--seed", "4"},
        {"module", "bourbaki", "--ring", "x,y/Q", "--module", R"([["x","0"],["y","0"],["0","x"],["0","y"]])"},
        {"verify", "specialize", "--ring", "x,y/Q", "--ideal", "x^2, y^3", "--seed", "12"},
        {"verify", "product", "--count", "8", "--seed", "5"},
        {"run", kExamples + "/problem.json"},
        {"verify", "campaign", kExamples + "/campaign.json"},
    };
    for (auto args : commands) {
        args.push_back("--json");
        auto a = icl_run(args);
        auto b = icl_run(args);
        CHECK_MESSAGE(a.code == 0, args[1]);
        CHECK(a.out == b.out);
        CHECK(a.out.find("seconds") == std::string::npos);
    }
}

TEST_CASE("problem files")
{
    std::string msg;
    auto ok = parse_problem(
        R"({"ring":{"vars":["x","y"],"field":"Q"},"objects":{"I":{"gens":["x^2","y^2"]}},"tasks":[{"op":"closure","target":"I"}]})");
    CHECK(ok.tasks.size() == 1);
    CHECK(run_problem(ok).text == "[0] ideal closure I: x^2, x*y, y^2");

    CHECK(load_error(R"({"ring":{"vars":["x","y"]},"objects":{},"tasks":[]})", msg) == ErrorKind::SchemaError);
    CHECK(msg.find("/ring/field") != std::string::npos);
    CHECK(load_error(R"({"ring":{"vars":["x","y"],"field":"Q"},"objects":{"I":{"gens":["x","z"]}},"tasks":[]})",
                     msg) == ErrorKind::SyntaxError);
    CHECK(msg.find("/objects/I/gens/1") != std::string::npos);
    CHECK(load_error(R"({"ring":{"vars":["x"],"field":"Q"},"objects":{"I":{"gens":["x"]},"I":{"gens":["x^2"]}},"tasks":[]})",
                     msg) == ErrorKind::SchemaError);
    CHECK(msg.find("/objects/I") != std::string::npos);
    CHECK(load_error(R"({"ring":{"vars":["x","y"],"field":"Q"},"objects":{},"tasks":[{"op":"closure","target":"I"}]})",
                     msg) == ErrorKind::SchemaError);
    CHECK(msg.find("/tasks/0/target") != std::string::npos);
    CHECK(load_error(R"({"ring":{"vars":["x","y"],"field":"Q"},"objects":{"I":{"gens":["x"]}},"tasks":[{"op":"closure","target":"I","args":{"n":"two"}}]})",
                     msg) == ErrorKind::SchemaError);
    CHECK(msg.find("/tasks/0/args/n") != std::string::npos);
    CHECK(load_error(R"({"ring":{"vars":["x","y"],"field":"Q"},"objects":{},"tasks":[{"op":"juggle"}]})", msg) ==
          ErrorKind::SchemaError);
    CHECK(msg.find("/tasks/0/op") != std::string::npos);
    CHECK(load_error(R"({"ring":{"vars":["x","y"],"field":"Fp:12"},"objects":{},"tasks":[]})", msg) !=
          ErrorKind::Unsupported);

    auto full = load_problem(kExamples + "/problem.json");
    auto out = run_problem(full);
    CHECK(out.code == 0);
    CHECK(out.json["results"].size() == 9);
    CHECK(out.json["results"][2]["result"]["member"] == false);

    auto schema = nlohmann::json::parse(problem_schema());
    CHECK(schema["$id"] == "icl-problem-v1");
    CHECK(icl_run({"schema"}).out == std::string(problem_schema()));
}

TEST_CASE("Groebner cache")
{
    auto dir = scratch("cache");
    std::filesystem::remove_all(dir);
    std::vector<std::string> gb{"gb", "--ring", "x,y,z/Q", "--ideal", "x^2 + y*z, y^2 - x, z^3", "--json"};
    auto plain = icl_run(gb);
    gb.push_back("--cache");
    gb.push_back(dir.string());
    CHECK(icl_run(gb).out == plain.out);
    REQUIRE(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);
    CHECK(icl_run(gb).out == plain.out);

    // a tampered entry fails the checksum and is recomputed
    auto file = std::filesystem::directory_iterator(dir)->path();
    std::string content;
    {
        std::ifstream in(file);
        std::stringstream s;
        s << in.rdbuf();
        content = s.str();
    }
    auto cut = content.find("-- ");
    auto eol = content.find('\n', cut);
    {
        std::ofstream out(file);
        out << content.substr(0, eol + 1) << "x\ny\nz\n";
    }
    CHECK(icl_run(gb).out == plain.out);
    auto member = icl_run({"member", "--ring", "x,y,z/Q", "--ideal", "x^2 + y*z, y^2 - x, z^3", "--f", "x", "--cache",
                           dir.string()});
    CHECK(member.out == "false\n");
    std::filesystem::remove_all(dir.parent_path());
}

TEST_CASE("module and poly groups")
{
    auto f = icl_run({"module", "fitting", "--ring", "x,y/Q", "--module", R"([["x","0"],["y","0"],["0","1"]])"});
    CHECK(f.out == "x, y\n");
    auto closed = icl_run({"module", "is-closed", "--ring", "x,y/Q", "--module", R"([["x^2","0"],["y^2","0"],["0","1"]])"});
    CHECK(closed.out == "false\n");
    auto e = icl_run({"module", "embed", "--ring", "x,y/Q", "--presentation", R"([["y","-x"]])", "--json"});
    CHECK(nlohmann::json::parse(e.out)["result"]["rank"] == 1);
    CHECK(icl_run({"poly", "lowest-form", "--ring", "x,y/Q", "--f", "x^3 + x*y + y^2"}).out == "2: x*y + y^2\n");
    CHECK(icl_run({"poly", "divide", "--ring", "x,y/Q", "--f", "x^2 - y^2", "--g", "x + y"}).out == "x - y\n");
    CHECK(icl_run({"poly", "map", "--ring", "x,y/Q", "--f", "x*y", "--image", "y=x*t", "--target-ring", "x,t/Q"}).out ==
          "x^2*t\n");
}

TEST_CASE("cache entries that are not a basis of the ideal")
{
    auto dir = scratch("cache-sum");
    std::filesystem::remove_all(dir);
    std::vector<std::string> gb{"gb", "--ring", "x,y/Q", "--ideal", "x^2, y^3", "--cache", dir.string()};
    auto first = icl_run(gb);
    auto file = std::filesystem::directory_iterator(dir)->path();
    std::string content;
    {
        std::ifstream in(file);
        std::stringstream s;
        s << in.rdbuf();
        content = s.str();
    }
    // garbage lines with a bad checksum
    {
        std::ofstream out(file);
        out << content << "not a polynomial ((\n";
    }
    CHECK(icl_run(gb).out == first.out);
    {
        std::ofstream out(file);
        out << "junk";
    }
    CHECK(icl_run(gb).out == first.out);
    std::filesystem::remove_all(dir.parent_path());
}
