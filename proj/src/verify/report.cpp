#include "icl/verify/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "icl/error.hpp"

namespace icl {

namespace {

using nlohmann::json;

[[noreturn]] void schema(const std::string& pointer, const std::string& what)
{
    raise(ErrorKind::SchemaError, pointer + ": " + what);
}

const json& field(const json& j, const std::string& pointer, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        schema(pointer + "/" + key, "missing");
    return *it;
}

std::string string_at(const json& j, const std::string& pointer)
{
    if (!j.is_string())
        schema(pointer, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> strings_at(const json& j, const std::string& pointer)
{
    if (!j.is_array())
        schema(pointer, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(string_at(j[i], pointer + "/" + std::to_string(i)));
    return out;
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Verdict parse_verdict(std::string_view text)
{
    if (text == "PASS")
        return Verdict::Pass;
    if (text == "FAIL")
        return Verdict::Fail;
    if (text == "INCONCLUSIVE")
        return Verdict::Inconclusive;
    schema("/verdict", "unknown verdict '" + std::string(text) + "'");
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const
{
    nlohmann::ordered_json j;
    j["theorem"] = theorem;
    j["instance"] = instance;
    j["verdict"] = to_string(verdict);
    if (witness)
        j["witness"] = {{"element", witness->element}, {"facts", witness->facts}};
    else
        j["witness"] = nullptr;
    j["caps"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : caps)
        j["caps"][name] = value;
    j["seeds"] = seeds;
    j["notes"] = notes;
    if (with_timing)
        j["seconds"] = seconds;
    return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j)
{
    if (!j.is_object())
        schema("", "expected an object");
    VerificationReport r;
    r.theorem = string_at(field(j, "", "theorem"), "/theorem");
    r.instance = string_at(field(j, "", "instance"), "/instance");
    r.verdict = parse_verdict(string_at(field(j, "", "verdict"), "/verdict"));

    const json& w = field(j, "", "witness");
    if (!w.is_null()) {
        if (!w.is_object())
            schema("/witness", "expected an object or null");
        r.witness = Witness{string_at(field(w, "/witness", "element"), "/witness/element"),
                            strings_at(field(w, "/witness", "facts"), "/witness/facts")};
    }
    if ((r.verdict == Verdict::Fail) != r.witness.has_value())
        schema("/witness", "a witness goes with FAIL and only with FAIL");

    const json& caps = field(j, "", "caps");
    if (!caps.is_object())
        schema("/caps", "expected an object");
    for (const auto& [name, value] : caps.items()) {
        if (!value.is_number_integer())
            schema("/caps/" + name, "expected an integer");
        r.caps[name] = value.get<long>();
    }
    const json& seeds = field(j, "", "seeds");
    if (!seeds.is_array())
        schema("/seeds", "expected an array");
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!seeds[i].is_number_unsigned() && !(seeds[i].is_number_integer() && seeds[i].get<long long>() >= 0))
            schema("/seeds/" + std::to_string(i), "expected a non-negative integer");
        r.seeds.push_back(seeds[i].get<std::uint64_t>());
    }
    r.notes = strings_at(field(j, "", "notes"), "/notes");
    if (auto it = j.find("seconds"); it != j.end()) {
        if (!it->is_number())
            schema("/seconds", "expected a number");
        r.seconds = it->get<double>();
    }
    return r;
}

bool operator==(const VerificationReport& a, const VerificationReport& b)
{
    return a.theorem == b.theorem && a.instance == b.instance && a.verdict == b.verdict && a.witness == b.witness &&
           a.caps == b.caps && a.seeds == b.seeds && a.notes == b.notes;
}

int exit_code(std::span<const VerificationReport> reports)
{
    bool inconclusive = false;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::Fail)
            return 1;
        inconclusive = inconclusive || r.verdict == Verdict::Inconclusive;
    }
    return inconclusive ? 2 : 0;
}

std::vector<VerificationReport> run_campaign(const std::vector<std::function<VerificationReport()>>& tasks,
                                             unsigned threads)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));

    std::vector<VerificationReport> out(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                out[i] = tasks[i]();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace icl
