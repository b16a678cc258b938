#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "icl/error.hpp"
#include "icl/monomial/monomial_ideal.hpp"
#include "icl/verify/verify.hpp"

namespace icl::cli {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void schema(const std::string& pointer, const std::string& what)
{
    raise(ErrorKind::SchemaError, (pointer.empty() ? "/" : pointer) + ": " + what);
}

std::string escape(const std::string& key)
{
    std::string out;
    for (char c : key) {
        if (c == '~')
            out += "~0";
        else if (c == '/')
            out += "~1";
        else
            out += c;
    }
    return out;
}

/* Parses JSON, rejecting duplicate keys with their pointer. */
json parse_strict(std::string_view text)
{
    struct Frame {
        bool array = false;
        long index = -1;
        std::string key;
        std::set<std::string> keys;
    };
    std::vector<Frame> stack;
    std::string duplicate;
    auto pointer = [&] {
        std::string p;
        for (const auto& f : stack)
            p += "/" + (f.array ? std::to_string(f.index) : escape(f.key));
        return p;
    };
    auto element = [&] {
        if (!stack.empty() && stack.back().array)
            ++stack.back().index;
    };
    json::parser_callback_t cb = [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
        case json::parse_event_t::object_start:
        case json::parse_event_t::array_start:
            element();
            stack.emplace_back();
            stack.back().array = event == json::parse_event_t::array_start;
            break;
        case json::parse_event_t::object_end:
        case json::parse_event_t::array_end:
            stack.pop_back();
            break;
        case json::parse_event_t::key: {
            auto& top = stack.back();
            top.key = parsed.get<std::string>();
            if (!top.keys.insert(top.key).second && duplicate.empty())
                duplicate = pointer();
            break;
        }
        case json::parse_event_t::value:
            element();
            break;
        }
        return true;
    };
    json j;
    try {
        j = json::parse(text, cb);
    } catch (const json::parse_error& e) {
        raise(ErrorKind::SchemaError, std::string("/: not valid JSON: ") + e.what());
    }
    if (!duplicate.empty())
        schema(duplicate, "duplicate key");
    return j;
}

const json& need(const json& j, const std::string& pointer, const char* key)
{
    if (!j.is_object())
        schema(pointer, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        schema(pointer + "/" + key, "missing");
    return *it;
}

std::string need_string(const json& j, const std::string& pointer)
{
    if (!j.is_string())
        schema(pointer, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> need_strings(const json& j, const std::string& pointer)
{
    if (!j.is_array())
        schema(pointer, "expected an array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(need_string(j[i], pointer + "/" + std::to_string(i)));
    return out;
}

long need_int(const json& j, const std::string& pointer, long lo = 0)
{
    if (!j.is_number_integer())
        schema(pointer, "expected an integer");
    long v = j.get<long>();
    if (v < lo)
        schema(pointer, "must be at least " + std::to_string(lo));
    return v;
}

std::uint64_t need_seed(const json& j, const std::string& pointer)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        schema(pointer, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

bool need_bool(const json& j, const std::string& pointer)
{
    if (!j.is_boolean())
        schema(pointer, "expected true or false");
    return j.get<bool>();
}

/* Parse errors become SyntaxError at the pointer of the offending string. */
template <class F>
auto at(const std::string& pointer, F&& fn)
{
    try {
        return fn();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::SchemaError)
            throw;
        ErrorKind kind = e.kind() == ErrorKind::UnknownVariable || e.kind() == ErrorKind::BadCoefficient
                             ? ErrorKind::SyntaxError
                             : e.kind();
        raise(kind, pointer + ": " + e.what());
    }
}

std::string draw_text(const json& j, const std::string& pointer)
{
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    return need_string(j, pointer);
}

void read_args(const json& args, const std::string& p, Args& a)
{
    if (!args.is_object())
        schema(p, "expected an object");
    for (const auto& [key, v] : args.items()) {
        const std::string q = p + "/" + escape(key);
        if (key == "f")
            a.f = need_string(v, q);
        else if (key == "g")
            a.g = need_string(v, q);
        else if (key == "n")
            a.n = static_cast<unsigned>(need_int(v, q, 0));
        else if (key == "vars")
            a.vars = need_strings(v, q);
        else if (key == "chart")
            a.chart = need_string(v, q);
        else if (key == "shift")
            a.shift = v.is_number_integer() ? std::to_string(v.get<long long>()) : need_string(v, q);
        else if (key == "path")
            a.path = need_string(v, q);
        else if (key == "order")
            a.order = need_string(v, q);
        else if (key == "symbolic")
            a.symbolic = need_bool(v, q);
        else if (key == "index")
            a.index = need_int(v, q, 0);
        else if (key == "trials")
            a.trials = static_cast<int>(need_int(v, q, 1));
        else if (key == "nmax")
            a.nmax = static_cast<unsigned>(need_int(v, q, 0));
        else if (key == "count")
            a.count = static_cast<std::size_t>(need_int(v, q, 1));
        else if (key == "ngens")
            a.ngens = static_cast<std::size_t>(need_int(v, q, 1));
        else if (key == "target_ring")
            a.target_ring = need_string(v, q);
        else if (key == "images")
            a.images = need_strings(v, q);
        else if (key == "exponents") {
            if (!v.is_array())
                schema(q, "expected an array");
            for (std::size_t i = 0; i < v.size(); ++i)
                a.exponents.push_back(static_cast<int>(need_int(v[i], q + "/" + std::to_string(i), 1)));
        } else if (key == "seeds") {
            if (!v.is_array())
                schema(q, "expected an array");
            for (std::size_t i = 0; i < v.size(); ++i)
                a.seeds.push_back(need_seed(v[i], q + "/" + std::to_string(i)));
        } else if (key == "draws") {
            if (!v.is_array())
                schema(q, "expected an array");
            for (std::size_t i = 0; i < v.size(); ++i)
                a.draws.push_back(draw_text(v[i], q + "/" + std::to_string(i)));
        } else if (key == "presentation") {
            a.presentation = v.dump();
        } else {
            schema(q, "unknown argument");
        }
    }
}

int combine(int a, int b)
{
    if (a == 1 || b == 1)
        return 1;
    return std::max(a, b);
}

} // namespace

ProblemFile parse_problem(std::string_view text, const Settings& settings)
{
    json j = parse_strict(text);
    if (!j.is_object())
        schema("", "expected an object");
    if (auto it = j.find("version"); it != j.end() && need_int(*it, "/version") != 1)
        schema("/version", "only version 1 is known");
    for (const auto& [key, v] : j.items())
        if (key != "version" && key != "ring" && key != "objects" && key != "tasks")
            schema("/" + escape(key), "unknown key");

    const json& r = need(j, "", "ring");
    std::vector<std::string> vars = need_strings(need(r, "/ring", "vars"), "/ring/vars");
    std::string field = need_string(need(r, "/ring", "field"), "/ring/field");
    for (const auto& [key, v] : r.items())
        if (key != "vars" && key != "field")
            schema("/ring/" + escape(key), "unknown key");
    RingContext ring = at("/ring", [&] { return RingContext(vars, Field::parse(field)); });

    ProblemFile pf{ring, {}, {}};
    std::map<std::string, Ideal> ideals;
    std::map<std::string, FModule> modules;
    const json& objects = need(j, "", "objects");
    if (!objects.is_object())
        schema("/objects", "expected an object");
    for (const auto& [name, obj] : objects.items()) {
        const std::string p = "/objects/" + escape(name);
        if (!obj.is_object() || obj.size() != 1)
            schema(p, "expected exactly one of gens, monomial_gens, columns");
        if (obj.contains("gens")) {
            auto gens = need_strings(obj["gens"], p + "/gens");
            std::vector<Polynomial> polys;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const std::string q = p + "/gens/" + std::to_string(i);
                polys.push_back(at(q, [&] { return parse_polynomial(gens[i], ring); }));
            }
            ideals.emplace(name, Ideal(ring, std::move(polys)));
            pf.kinds[name] = "ideal";
        } else if (obj.contains("monomial_gens")) {
            const json& m = obj["monomial_gens"];
            if (!m.is_array())
                schema(p + "/monomial_gens", "expected an array");
            std::vector<ExpVec> gens;
            for (std::size_t i = 0; i < m.size(); ++i) {
                const std::string q = p + "/monomial_gens/" + std::to_string(i);
                if (!m[i].is_array() || m[i].size() != ring.nvars())
                    schema(q, "expected " + std::to_string(ring.nvars()) + " exponents");
                ExpVec v;
                for (std::size_t k = 0; k < m[i].size(); ++k)
                    v.push_back(static_cast<int>(need_int(m[i][k], q + "/" + std::to_string(k))));
                gens.push_back(std::move(v));
            }
            ideals.emplace(name, MonomialIdeal(ring, gens).to_ideal());
            pf.kinds[name] = "monomial";
        } else if (obj.contains("columns")) {
            const json& c = obj["columns"];
            if (!c.is_array())
                schema(p + "/columns", "expected an array");
            std::vector<std::vector<std::string>> cols;
            for (std::size_t i = 0; i < c.size(); ++i)
                cols.push_back(need_strings(c[i], p + "/columns/" + std::to_string(i)));
            modules.emplace(name, at(p + "/columns", [&] { return FModule::parse(cols, ring); }));
            pf.kinds[name] = "module";
        } else {
            schema(p, "expected exactly one of gens, monomial_gens, columns");
        }
    }

    const json& tasks = need(j, "", "tasks");
    if (!tasks.is_array())
        schema("/tasks", "expected an array");
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const std::string p = "/tasks/" + std::to_string(i);
        const json& t = tasks[i];
        Task task;
        task.settings = settings;
        task.settings.ring = ring.to_string();
        task.op = need_string(need(t, p, "op"), p + "/op");
        for (const auto& [key, v] : t.items()) {
            const std::string q = p + "/" + escape(key);
            if (key == "op")
                continue;
            if (key == "target")
                task.target = need_string(v, q);
            else if (key == "with")
                continue;
            else if (key == "group")
                task.group = need_string(v, q);
            else if (key == "seed")
                task.settings.seed = need_seed(v, q);
            else if (key == "cap")
                task.settings.cap = static_cast<unsigned>(need_int(v, q, 0));
            else if (key == "degree_bound")
                task.settings.degree_bound = need_int(v, q, 0);
            else if (key == "trace")
                task.settings.trace = need_bool(v, q);
            else if (key == "args")
                read_args(v, q + "", task.args);
            else
                schema(q, "unknown key");
        }
        std::string kind;
        if (!task.target.empty()) {
            auto k = pf.kinds.find(task.target);
            if (k == pf.kinds.end())
                schema(p + "/target", "'" + task.target + "' is not defined");
            kind = k->second;
            if (kind == "module")
                task.args.module_value = modules.at(task.target);
            else
                task.args.ideal_value = ideals.at(task.target);
        }
        if (auto w = t.find("with"); w != t.end()) {
            std::string other = need_string(*w, p + "/with");
            auto it = ideals.find(other);
            if (it == ideals.end())
                schema(p + "/with", "'" + other + "' is not a defined ideal");
            task.args.other_value = it->second;
        }
        if (task.group.empty()) {
            if (kind == "module")
                task.group = "module";
            else
                task.group = infer_group(task.op);
        }
        if (task.group.empty() || infer_group(task.op).empty())
            schema(p + "/op", "unknown operation '" + task.op + "'");
        if (task.group != "verify" && task.group != "poly" && task.target.empty() && task.op != "embed")
            schema(p + "/target", "missing");
        pf.tasks.push_back(std::move(task));
    }
    return pf;
}

ProblemFile load_problem(const std::string& path, const Settings& settings)
{
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::SchemaError, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str(), settings);
}

Outcome run_problem(const ProblemFile& problem)
{
    Outcome out;
    ojson results = ojson::array();
    for (std::size_t i = 0; i < problem.tasks.size(); ++i) {
        const Task& t = problem.tasks[i];
        Outcome one = at("/tasks/" + std::to_string(i), [&] { return execute(t.group, t.op, t.settings, t.args); });
        ojson r;
        r["task"] = i;
        r["command"] = t.group + " " + t.op;
        r["target"] = t.target.empty() ? ojson(nullptr) : ojson(t.target);
        r["seed"] = t.settings.seed;
        r["result"] = std::move(one.json["result"]);
        results.push_back(std::move(r));
        out.text += "[" + std::to_string(i) + "] " + t.group + " " + t.op + (t.target.empty() ? "" : " " + t.target) +
                    ": " + one.text + "\n";
        out.code = combine(out.code, one.code);
    }
    if (!out.text.empty())
        out.text.pop_back();
    out.json["command"] = "run";
    out.json["ring"] = problem.ring.to_string();
    out.json["results"] = std::move(results);
    return out;
}

Outcome run_campaign_file(const std::string& path, const Settings& settings)
{
    std::ifstream in(path);
    if (!in)
        raise(ErrorKind::SchemaError, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    json list = parse_strict(buf.str());
    if (!list.is_array())
        schema("", "expected a list of instances");

    std::vector<std::function<VerificationReport()>> tasks;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string p = "/" + std::to_string(i);
        const json& inst = list[i];
        std::string theorem = need_string(need(inst, p, "theorem"), p + "/theorem");
        Settings s = settings;
        s.threads = 1;
        Args a;
        std::optional<RingContext> ring;
        std::string ideal;
        for (const auto& [key, v] : inst.items()) {
            const std::string q = p + "/" + escape(key);
            if (key == "theorem")
                continue;
            if (key == "ring")
                ring = at(q, [&] { return RingContext::parse(need_string(v, q)); });
            else if (key == "ideal")
                ideal = need_string(v, q);
            else if (key == "seed")
                s.seed = need_seed(v, q);
            else if (key == "cap")
                s.cap = static_cast<unsigned>(need_int(v, q, 0));
            else if (key == "degree_bound")
                s.degree_bound = need_int(v, q, 0);
            else if (key == "exponents" || key == "nmax" || key == "count" || key == "seeds" || key == "draws")
                read_args(json{{key, v}}, p, a);
            else
                schema(q, "unknown key");
        }
        if (theorem == "itoh") {
            need(inst, p, "exponents");
            tasks.push_back([a] { return verify_itoh(a.exponents, a.nmax); });
        } else if (theorem == "product") {
            tasks.push_back([a, s] { return verify_product_closure(a.count, s.seed, 1); });
        } else if (theorem == "specialize" || theorem == "radical") {
            if (!ring)
                schema(p + "/ring", "missing");
            need(inst, p, "ideal");
            Ideal I = at(p + "/ideal", [&] { return Ideal::parse(ideal, *ring); });
            VerifyCaps caps{s.cap, s.degree_bound};
            if (theorem == "specialize") {
                auto seeds = a.seeds.empty() ? default_seeds(s.seed) : a.seeds;
                tasks.push_back([I, seeds, caps] { return verify_specialization(I, seeds, caps); });
            } else {
                std::optional<std::vector<Rational>> draws;
                if (!a.draws.empty()) {
                    draws.emplace();
                    for (std::size_t k = 0; k < a.draws.size(); ++k)
                        draws->push_back(at(p + "/draws/" + std::to_string(k),
                                            [&] { return parse_rational(a.draws[k], ring->field()); }));
                }
                tasks.push_back([I, s, caps, draws] { return verify_radical(I, s.seed, caps, draws); });
            }
        } else {
            schema(p + "/theorem", "unknown theorem '" + theorem + "'");
        }
    }

    auto reports = run_campaign(tasks, settings.threads);
    Outcome out;
    out.json["reports"] = ojson::array();
    for (const auto& r : reports) {
        out.json["reports"].push_back(r.to_json());
        out.text += to_string(r.verdict) + "  " + r.theorem + "  " + r.instance + "\n";
    }
    if (!out.text.empty())
        out.text.pop_back();
    out.code = exit_code(reports);
    return out;
}

} // namespace icl::cli
