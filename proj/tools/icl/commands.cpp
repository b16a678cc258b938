#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "cache.hpp"
#include "cli.hpp"
#include "icl/bourbaki/bourbaki.hpp"
#include "icl/error.hpp"
#include "icl/groebner/buchberger.hpp"
#include "icl/monomial/monomial_ideal.hpp"
#include "icl/rlr2/rlr2.hpp"
#include "icl/verify/verify.hpp"

namespace icl::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::set<std::string, std::less<>> kPolyOps{"normalize", "lowest-form", "map", "divide"};
const std::set<std::string, std::less<>> kIdealOps{
    "gb",        "member",   "intersect", "quotient", "sum",        "product",     "power",     "eliminate",
    "dim",       "colength", "closure",   "order",    "nu",         "contracted",  "transform", "base-points",
    "is-closed", "reduction", "integral-test", "multiplicity", "rees", "generic-element"};
const std::set<std::string, std::less<>> kModuleOps{"fitting", "order",     "nu",       "contracted",
                                                    "bourbaki", "is-closed", "transform", "embed"};
const std::set<std::string, std::less<>> kVerifyOps{"itoh", "specialize", "radical", "product", "campaign"};

RingContext ring_of(const Settings& s)
{
    if (!s.ring)
        raise(ErrorKind::SchemaError, "--ring is required for this operation");
    return RingContext::parse(*s.ring);
}

std::vector<Polynomial> sorted_desc(std::vector<Polynomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.ring().compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return gens;
}

/* Reduced basis, largest leading monomial first. */
std::vector<Polynomial> canonical(const Ideal& I)
{
    std::vector<Polynomial> gb;
    for (const auto& g : I.groebner_basis())
        gb.push_back(g.with_ring(I.ring()));
    return sorted_desc(std::move(gb));
}

ojson poly_list(const std::vector<Polynomial>& gens)
{
    ojson a = ojson::array();
    for (const auto& g : gens)
        a.push_back(g.to_string());
    return a;
}

std::string poly_text(const std::vector<Polynomial>& gens)
{
    if (gens.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i)
        s += (i ? ", " : "") + gens[i].to_string();
    return s;
}

Outcome ideal_outcome(const Ideal& I, ojson extra = ojson::object())
{
    auto gens = canonical(I);
    extra["generators"] = poly_list(gens);
    return {extra, poly_text(gens)};
}

Outcome value_outcome(const char* key, ojson value)
{
    ojson j;
    j[key] = value;
    return {j, value.is_string() ? value.get<std::string>() : value.dump()};
}

Ideal ideal_arg(const RingContext& ring, const Args& a)
{
    if (a.ideal_value)
        return *a.ideal_value;
    if (!a.monomial.empty() && a.ideal.empty())
        raise(ErrorKind::Unsupported, "--monomial is accepted by closure only");
    if (a.ideal.empty())
        raise(ErrorKind::SchemaError, "--ideal is required");
    return Ideal::parse(a.ideal, ring);
}

Ideal other_arg(const RingContext& ring, const Args& a)
{
    if (a.other_value)
        return *a.other_value;
    if (a.other.empty())
        raise(ErrorKind::SchemaError, "--other is required");
    return Ideal::parse(a.other, ring);
}

std::vector<std::vector<std::string>> string_matrix(const std::string& text, const char* what)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(ErrorKind::SchemaError, std::string(what) + ": " + e.what());
    }
    if (!j.is_array())
        raise(ErrorKind::SchemaError, std::string(what) + ": expected a list of columns");
    std::vector<std::vector<std::string>> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array())
            raise(ErrorKind::SchemaError, std::string(what) + " /" + std::to_string(i) + ": expected a column");
        std::vector<std::string> col;
        for (std::size_t r = 0; r < j[i].size(); ++r) {
            if (!j[i][r].is_string())
                raise(ErrorKind::SchemaError, std::string(what) + " /" + std::to_string(i) + "/" +
                                                  std::to_string(r) + ": expected a polynomial string");
            col.push_back(j[i][r].get<std::string>());
        }
        out.push_back(std::move(col));
    }
    return out;
}

FModule module_arg(const RingContext& ring, const Args& a)
{
    if (a.module_value)
        return *a.module_value;
    if (a.module.empty())
        raise(ErrorKind::SchemaError, "--module is required");
    return FModule::parse(string_matrix(a.module, "--module"), ring);
}

ojson columns_json(const std::vector<Column>& cols)
{
    ojson a = ojson::array();
    for (const auto& c : cols) {
        ojson col = ojson::array();
        for (const auto& f : c)
            col.push_back(f.to_string());
        a.push_back(col);
    }
    return a;
}

std::string columns_text(const std::vector<Column>& cols)
{
    std::string s;
    for (const auto& c : cols) {
        s += "(";
        for (std::size_t i = 0; i < c.size(); ++i)
            s += (i ? ", " : "") + c[i].to_string();
        s += ")\n";
    }
    if (!s.empty())
        s.pop_back();
    return s;
}

QuadraticChart chart_arg(const RingContext& ring, const Args& a)
{
    QuadraticChart::Kind kind;
    if (a.chart == "finite")
        kind = QuadraticChart::Kind::Finite;
    else if (a.chart == "infinity")
        kind = QuadraticChart::Kind::Infinity;
    else
        raise(ErrorKind::SchemaError, "--chart must be finite or infinity, not '" + a.chart + "'");
    return make_chart(ring, kind, parse_rational(a.shift, ring.field()));
}

ojson tree_json(const BasePointTree& t)
{
    ojson j;
    j["chart"] = t.chart;
    j["point"] = format_rational(t.point);
    j["shift"] = format_rational(t.shift);
    j["order"] = t.order;
    if (t.multiplicity >= 0)
        j["multiplicity"] = t.multiplicity;
    j["ideal"] = t.ideal;
    j["children"] = ojson::array();
    for (const auto& c : t.children)
        j["children"].push_back(tree_json(c));
    return j;
}

ClosureOptions closure_options(const Settings& s)
{
    ClosureOptions opt;
    opt.seed = s.seed;
    opt.trace = s.trace;
    return opt;
}

std::optional<MonomialIdeal> as_monomial(const Ideal& I)
{
    try {
        return MonomialIdeal::from_ideal(I);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Unsupported)
            throw;
    }
    return std::nullopt;
}

std::vector<ExpVec> exponent_lists(const std::string& text)
{
    std::vector<ExpVec> out;
    if (!text.empty() && text.front() == '[') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
            for (const auto& g : j)
                out.push_back(g.get<ExpVec>());
        } catch (const nlohmann::json::exception& e) {
            raise(ErrorKind::SchemaError, std::string("--monomial: ") + e.what());
        }
        return out;
    }
    std::istringstream gens(text);
    for (std::string g; std::getline(gens, g, ';');) {
        ExpVec v;
        std::istringstream parts(g);
        for (std::string p; std::getline(parts, p, ',');) {
            try {
                v.push_back(std::stoi(p));
            } catch (const std::exception&) {
                raise(ErrorKind::SyntaxError, "--monomial: '" + p + "' is not an exponent");
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

RingContext default_ring(std::size_t dim)
{
    static const char* names[] = {"x", "y", "z"};
    std::vector<std::string> vars;
    for (std::size_t i = 0; i < dim; ++i)
        vars.push_back(dim <= 3 ? names[i] : "x" + std::to_string(i + 1));
    return RingContext(vars, Field::rationals());
}

Outcome closure_op(const Settings& s, const Args& a)
{
    std::optional<MonomialIdeal> mono;
    std::optional<Ideal> I;
    if (!a.monomial.empty()) {
        auto gens = exponent_lists(a.monomial);
        if (gens.empty())
            raise(ErrorKind::ZeroIdeal, "--monomial has no generators");
        RingContext ring = s.ring ? RingContext::parse(*s.ring) : default_ring(gens.front().size());
        for (const auto& g : gens)
            if (g.size() != ring.nvars())
                raise(ErrorKind::ArityMismatch, "exponent list of length " + std::to_string(g.size()) + " in " +
                                                    ring.to_string());
        mono = MonomialIdeal(ring, gens);
    } else {
        I = ideal_arg(ring_of(s), a);
        mono = as_monomial(*I);
    }
    ojson j;
    j["power"] = a.n;
    if (mono) {
        j["method"] = "newton-polyhedron";
        auto out = ideal_outcome(monomial_closure_power(*mono, a.n).to_ideal(), j);
        out.json["monomial_gens"] = monomial_closure_power(*mono, a.n).gens();
        return out;
    }
    j["method"] = "base-points";
    Ideal target = a.n == 1 ? *I : ideal_power(*I, a.n);
    ClosureReport rep = integral_closure_2d_report(target, closure_options(s));
    j["attempts"] = rep.attempts;
    auto out = ideal_outcome(rep.closure, j);
    if (s.trace)
        out.json["tree"] = tree_json(rep.tree);
    return out;
}

Outcome is_closed_op(const Settings& s, const Args& a)
{
    Ideal I = ideal_arg(ring_of(s), a);
    ojson j;
    if (I.ring().nvars() != 2) {
        auto mono = as_monomial(I);
        if (!mono)
            raise(ErrorKind::Unsupported, "closedness is decided for monomial ideals and ideals of k[x,y]");
        bool closed = is_monomial_closed(*mono);
        j["closed"] = closed;
        return {j, closed ? "true" : "false"};
    }
    ClosednessReport rep = is_integrally_closed_2d_report(I, closure_options(s));
    j["closed"] = rep.closed;
    j["contracted"] = rep.contracted;
    j["attempts"] = rep.attempts;
    if (s.trace)
        j["tree"] = tree_json(rep.tree);
    return {j, rep.closed ? "true" : "false"};
}

Outcome gb_op(const Settings& s, const Args& a)
{
    Ideal I = ideal_arg(ring_of(s), a);
    MonomialOrder order;
    if (a.order == "grevlex")
        order = MonomialOrder::grevlex();
    else if (a.order == "lex")
        order = MonomialOrder::lex();
    else
        raise(ErrorKind::SchemaError, "--order must be grevlex or lex, not '" + a.order + "'");
    Ideal J = I.with_ring(I.ring().with_order(order));
    std::vector<Polynomial> basis;
    if (!s.cache.empty()) {
        basis = GbCache(s.cache).basis(J);
    } else {
        for (const auto& g : J.groebner_basis())
            basis.push_back(g.with_ring(J.ring()));
    }
    basis = sorted_desc(std::move(basis));
    ojson j;
    j["order"] = a.order;
    j["basis"] = poly_list(basis);
    return {j, poly_text(basis)};
}

Outcome member_op(const Settings& s, const Args& a)
{
    RingContext ring = ring_of(s);
    Ideal I = ideal_arg(ring, a);
    Polynomial f = parse_polynomial(a.f, ring);
    bool in = !s.cache.empty() ? reduce(f, GbCache(s.cache).basis(I)).is_zero() : ideal_member(f, I);
    return value_outcome("member", in);
}

Outcome ideal_op(const std::string& op, const Settings& s, const Args& a)
{
    if (op == "closure")
        return closure_op(s, a);
    if (op == "gb")
        return gb_op(s, a);
    if (op == "member")
        return member_op(s, a);
    if (op == "is-closed")
        return is_closed_op(s, a);

    RingContext ring = ring_of(s);
    Ideal I = ideal_arg(ring, a);
    if (op == "intersect")
        return ideal_outcome(ideal_intersect(I, other_arg(ring, a)));
    if (op == "quotient")
        return ideal_outcome(ideal_quotient(I, other_arg(ring, a)));
    if (op == "sum")
        return ideal_outcome(ideal_sum(I, other_arg(ring, a)));
    if (op == "product")
        return ideal_outcome(ideal_product(I, other_arg(ring, a)));
    if (op == "power")
        return ideal_outcome(ideal_power(I, a.n));
    if (op == "eliminate") {
        std::set<std::string> drop(a.vars.begin(), a.vars.end());
        for (const auto& v : drop)
            ring.require_index(v);
        Ideal J = eliminate(I, drop);
        ojson j;
        j["ring"] = J.ring().to_string();
        return ideal_outcome(J, j);
    }
    if (op == "dim")
        return value_outcome("dim", krull_dim(I));
    if (op == "colength")
        return value_outcome("colength", colength_0dim(I));
    if (op == "order")
        return value_outcome("order", order_local(I));
    if (op == "nu")
        return value_outcome("nu", nu_local(I));
    if (op == "contracted") {
        ojson j;
        j["contracted"] = is_contracted(I);
        j["order"] = order_local(I);
        j["nu"] = nu_local(I);
        return {j, j["contracted"].get<bool>() ? "true" : "false"};
    }
    if (op == "transform") {
        QuadraticChart chart = chart_arg(ring, a);
        ojson j;
        j["chart"] = chart.to_string();
        j["ring"] = chart.ring.to_string();
        return ideal_outcome(quadratic_transform(I, chart), j);
    }
    if (op == "base-points") {
        ojson list = ojson::array();
        std::string text;
        for (const auto& p : base_points(I, parse_rational(a.shift, ring.field()))) {
            ojson j;
            j["chart"] = p.chart.to_string();
            j["ring"] = p.chart.ring.to_string();
            j["point"] = format_rational(p.chart.point);
            j["local"] = poly_list(canonical(p.local));
            list.push_back(j);
            text += p.chart.to_string() + ": " + poly_text(canonical(p.local)) + "\n";
        }
        if (!text.empty())
            text.pop_back();
        ojson j;
        j["base_points"] = list;
        return {j, text.empty() ? "none" : text};
    }
    if (op == "reduction") {
        Ideal U = other_arg(ring, a);
        ReductionResult r = is_reduction(U, I, s.cap);
        ojson j;
        j["reduction"] = r.found;
        j["n"] = r.n;
        j["cap"] = r.cap;
        return {j, r.to_string(), r.found ? 0 : 2};
    }
    if (op == "integral-test") {
        IntegralityResult r = is_integral_element(parse_polynomial(a.f, ring), I, s.cap);
        ojson j;
        j["integral"] = r.integral;
        j["n"] = r.n;
        j["cap"] = r.cap;
        return {j, r.to_string(), r.integral ? 0 : 2};
    }
    if (op == "multiplicity") {
        ojson j;
        j["multiplicity"] = multiplicity_2d(I, a.trials, s.seed);
        j["trials"] = a.trials;
        return {j, std::to_string(j["multiplicity"].get<long>())};
    }
    if (op == "rees") {
        Ideal P = rees_presentation(I);
        ojson j;
        j["ring"] = P.ring().to_string();
        return ideal_outcome(P, j);
    }
    if (op == "generic-element") {
        auto mode = a.symbolic ? GenericExtension::Mode::Symbolic : GenericExtension::Mode::Random;
        GenericExtension ext = generic_element(I, mode, s.seed);
        ojson j;
        j["mode"] = a.symbolic ? "symbolic" : "random";
        j["ring"] = ext.ring.to_string();
        j["element"] = ext.element.to_string();
        ojson draws = ojson::array();
        for (const auto& z : ext.draws)
            draws.push_back(format_rational(z));
        j["draws"] = draws;
        return {j, ext.element.to_string()};
    }
    raise(ErrorKind::SchemaError, "unknown ideal operation '" + op + "'");
}

Outcome poly_op(const std::string& op, const Settings& s, const Args& a)
{
    RingContext ring = ring_of(s);
    Polynomial f = parse_polynomial(a.f, ring);
    if (op == "normalize")
        return value_outcome("polynomial", f.to_string());
    if (op == "lowest-form") {
        auto [order, form] = lowest_degree_form(f);
        ojson j;
        j["order"] = order;
        j["form"] = form.to_string();
        return {j, std::to_string(order) + ": " + form.to_string()};
    }
    if (op == "divide") {
        auto q = exact_divide(f, parse_polynomial(a.g, ring));
        ojson j;
        j["divisible"] = q.has_value();
        j["quotient"] = q ? ojson(q->to_string()) : ojson(nullptr);
        return {j, q ? q->to_string() : "not divisible"};
    }
    if (op == "map") {
        RingContext target = a.target_ring.empty() ? ring : RingContext::parse(a.target_ring);
        std::map<std::string, Polynomial> images;
        for (const auto& entry : a.images) {
            auto eq = entry.find('=');
            if (eq == std::string::npos)
                raise(ErrorKind::SyntaxError, "--image expects var=polynomial, got '" + entry + "'");
            std::string var = entry.substr(0, eq);
            var.erase(std::remove(var.begin(), var.end(), ' '), var.end());
            ring.require_index(var);
            images.emplace(var, parse_polynomial(entry.substr(eq + 1), target));
        }
        for (const auto& v : ring.variables())
            if (!images.contains(v)) {
                if (!target.index_of(v))
                    raise(ErrorKind::ArityMismatch, "no image for " + v);
                images.emplace(v, Polynomial::variable(target, v));
            }
        return value_outcome("polynomial", ring_map_apply(f, images, target).to_string());
    }
    raise(ErrorKind::SchemaError, "unknown poly operation '" + op + "'");
}

Outcome module_op(const std::string& op, const Settings& s, const Args& a)
{
    RingContext ring = ring_of(s);
    if (op == "embed") {
        if (a.presentation.empty() && a.ngens == 0)
            raise(ErrorKind::SchemaError, "--presentation or --ngens is required");
        std::vector<Column> pres;
        if (!a.presentation.empty())
            for (const auto& col : string_matrix(a.presentation, "--presentation")) {
                Column c;
                for (const auto& t : col)
                    c.push_back(parse_polynomial(t, ring));
                pres.push_back(std::move(c));
            }
        std::size_t n = a.ngens ? a.ngens : pres.front().size();
        FModule M = embed_into_free(ring, n, pres);
        ojson j;
        j["rank"] = M.rank();
        j["columns"] = columns_json(M.columns());
        return {j, columns_text(M.columns())};
    }
    FModule M = module_arg(ring, a);
    if (op == "fitting") {
        long i = a.index >= 0 ? a.index : static_cast<long>(M.rank());
        ojson j;
        j["index"] = i;
        return ideal_outcome(fitting_ideal(M, i), j);
    }
    if (op == "order")
        return value_outcome("order", order_module(M));
    if (op == "nu")
        return value_outcome("nu", nu_module(M));
    if (op == "contracted") {
        ojson j;
        j["contracted"] = is_contracted_module(M);
        j["order"] = order_module(M);
        j["nu"] = nu_module(M);
        j["rank"] = M.rank();
        return {j, j["contracted"].get<bool>() ? "true" : "false"};
    }
    if (op == "is-closed")
        return value_outcome("closed", is_integrally_closed_module(M, s.seed));
    if (op == "transform") {
        QuadraticChart chart = chart_arg(ring, a);
        FModule T = module_transform(M, chart);
        ojson j;
        j["chart"] = chart.to_string();
        j["ring"] = chart.ring.to_string();
        j["columns"] = columns_json(T.columns());
        return {j, columns_text(T.columns())};
    }
    if (op == "bourbaki") {
        BourbakiOptions opt;
        if (a.path == "fitting-shortcut")
            opt.path = BourbakiPath::FittingShortcut;
        else if (a.path != "iterated-quotient")
            raise(ErrorKind::SchemaError, "--path must be fitting-shortcut or iterated-quotient");
        opt.symbolic = a.symbolic;
        opt.seed = s.seed;
        BourbakiResult r = generic_bourbaki_ideal(M, opt);
        ojson j;
        j["path"] = to_string(r.path);
        j["ring"] = r.ring.to_string();
        ojson z = ojson::array();
        for (const auto& row : r.z) {
            ojson zr = ojson::array();
            for (const auto& q : row)
                zr.push_back(format_rational(q));
            z.push_back(zr);
        }
        j["z"] = z;
        j["z_names"] = r.z_names;
        auto out = ideal_outcome(r.ideal, j);
        if (!a.symbolic && ring.nvars() == 2) {
            IdealInvariants inv = ideal_invariants(r.ideal, s.seed);
            out.json["invariants"] = {{"order", inv.order},
                                      {"nu", inv.nu},
                                      {"multiplicity", inv.multiplicity},
                                      {"closed", inv.closed}};
            out.text += "\n" + inv.to_string();
        }
        return out;
    }
    raise(ErrorKind::SchemaError, "unknown module operation '" + op + "'");
}

std::string report_text(const VerificationReport& r)
{
    std::string s = r.theorem + "  " + r.instance + "  " + to_string(r.verdict) + "\n";
    if (!r.caps.empty()) {
        s += "  caps:";
        for (const auto& [k, v] : r.caps)
            s += " " + k + "=" + std::to_string(v);
        s += "\n";
    }
    if (!r.seeds.empty()) {
        s += "  seeds:";
        for (auto x : r.seeds)
            s += " " + std::to_string(x);
        s += "\n";
    }
    for (const auto& n : r.notes)
        s += "  " + n + "\n";
    if (r.witness) {
        s += "  witness: " + r.witness->element + "\n";
        for (const auto& f : r.witness->facts)
            s += "    " + f + "\n";
    }
    s.pop_back();
    return s;
}

Outcome report_outcome(const VerificationReport& r)
{
    VerificationReport one[] = {r};
    return {r.to_json(), report_text(r), exit_code(one)};
}

VerifyCaps caps_of(const Settings& s)
{
    VerifyCaps c;
    c.reduction_cap = s.cap;
    c.degree_bound = s.degree_bound;
    return c;
}

std::vector<Rational> draws_arg(const Args& a, const Field& k)
{
    std::vector<Rational> z;
    for (const auto& d : a.draws)
        z.push_back(parse_rational(d, k));
    return z;
}

Outcome verify_op(const std::string& op, const Settings& s, const Args& a)
{
    if (op == "itoh")
        return report_outcome(verify_itoh(a.exponents, a.nmax));
    if (op == "product")
        return report_outcome(verify_product_closure(a.count, s.seed, s.threads));
    if (op == "campaign")
        return run_campaign_file(a.file, s);
    RingContext ring = ring_of(s);
    Ideal I = ideal_arg(ring, a);
    if (op == "specialize")
        return report_outcome(verify_specialization(I, a.seeds.empty() ? default_seeds(s.seed) : a.seeds, caps_of(s)));
    if (op == "radical") {
        std::optional<std::vector<Rational>> draws;
        if (!a.draws.empty())
            draws = draws_arg(a, ring.field());
        return report_outcome(verify_radical(I, s.seed, caps_of(s), draws));
    }
    raise(ErrorKind::SchemaError, "unknown verify operation '" + op + "'");
}

} // namespace

Rational parse_rational(const std::string& text, const Field& k)
{
    try {
        Rational q(text);
        q.canonicalize();
        if (q.get_den() == 0)
            raise(ErrorKind::BadCoefficient, "zero denominator in '" + text + "'");
        return k.normalize(q);
    } catch (const std::invalid_argument&) {
        raise(ErrorKind::BadCoefficient, "'" + text + "' is not a rational number");
    }
}

std::string infer_group(std::string_view op)
{
    if (kIdealOps.contains(op))
        return "ideal";
    if (kModuleOps.contains(op))
        return "module";
    if (kPolyOps.contains(op))
        return "poly";
    if (kVerifyOps.contains(op))
        return "verify";
    return "";
}

Outcome execute(const std::string& group, const std::string& op, const Settings& settings, const Args& args)
{
    Outcome out;
    if (group == "poly" && kPolyOps.contains(op))
        out = poly_op(op, settings, args);
    else if (group == "ideal" && kIdealOps.contains(op))
        out = ideal_op(op, settings, args);
    else if (group == "module" && kModuleOps.contains(op))
        out = module_op(op, settings, args);
    else if (group == "verify" && kVerifyOps.contains(op))
        out = verify_op(op, settings, args);
    else
        raise(ErrorKind::SchemaError, "unknown operation '" + group + " " + op + "'");

    ojson env;
    env["command"] = group + " " + op;
    env["ring"] = settings.ring ? ojson(*settings.ring) : ojson(nullptr);
    env["seed"] = settings.seed;
    env["result"] = std::move(out.json);
    out.json = std::move(env);
    return out;
}

} // namespace icl::cli
