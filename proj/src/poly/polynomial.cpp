#include "icl/poly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "icl/error.hpp"

namespace icl {

namespace {

struct DescendingBy {
    const RingContext& ring;
    bool operator()(const Term& a, const Term& b) const { return ring.compare(a.mono, b.mono) > 0; }
};

} // namespace

Polynomial Polynomial::constant(const RingContext& ring, const Rational& c)
{
    Rational v = ring.field().normalize(c);
    if (v == 0)
        return Polynomial(ring);
    return Polynomial(ring, {Term{Monomial(ring.nvars()), v}});
}

Polynomial Polynomial::variable(const RingContext& ring, std::size_t index)
{
    if (index >= ring.nvars())
        raise(ErrorKind::ArityMismatch, "variable index out of range");
    return Polynomial(ring, {Term{Monomial::variable(ring.nvars(), index), Rational(1)}});
}

Polynomial Polynomial::variable(const RingContext& ring, std::string_view name)
{
    return variable(ring, ring.require_index(name));
}

Polynomial Polynomial::monomial(const RingContext& ring, const Monomial& m, const Rational& c)
{
    if (m.size() != ring.nvars())
        raise(ErrorKind::ArityMismatch, "monomial length does not match the ring");
    Rational v = ring.field().normalize(c);
    if (v == 0)
        return Polynomial(ring);
    return Polynomial(ring, {Term{m, v}});
}

Polynomial Polynomial::from_terms(const RingContext& ring, std::vector<Term> terms)
{
    const Field& k = ring.field();
    for (auto& t : terms) {
        if (t.mono.size() != ring.nvars())
            raise(ErrorKind::ArityMismatch, "monomial length does not match the ring");
        t.coeff = k.normalize(t.coeff);
    }
    std::sort(terms.begin(), terms.end(), DescendingBy{ring});
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff = k.add(out.back().coeff, t.coeff);
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    return Polynomial(ring, std::move(out));
}

void Polynomial::require_same_ring(const Polynomial& other) const
{
    if (!ring_.identical(other.ring_))
        raise(ErrorKind::RingMismatch, "operands live in " + ring_.to_string() + " and " + other.ring_.to_string());
}

unsigned Polynomial::total_degree() const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    for (const auto& t : terms_)
        if (t.mono == m)
            return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    require_same_ring(other);
    const Field& k = ring_.field();
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = other.terms_.begin(), be = other.terms_.end();
    while (a != ae && b != be) {
        auto c = ring_.compare(a->mono, b->mono);
        if (c > 0) {
            out.push_back(*a++);
        } else if (c < 0) {
            out.push_back(*b++);
        } else {
            Rational s = k.add(a->coeff, b->coeff);
            if (s != 0)
                out.push_back(Term{a->mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const
{
    std::vector<Term> out = terms_;
    for (auto& t : out)
        t.coeff = ring_.field().neg(t.coeff);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    return *this + (-other);
}

Polynomial Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const
{
    require_same_ring(g);
    const Field& k = ring_.field();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = g.terms_.begin(), be = g.terms_.end();
    while (a != ae || b != be) {
        if (b == be) {
            out.insert(out.end(), a, ae);
            break;
        }
        Monomial bm = b->mono * m;
        auto cmp = a == ae ? std::strong_ordering::less : ring_.compare(a->mono, bm);
        if (cmp > 0) {
            out.push_back(*a++);
        } else if (cmp < 0) {
            out.push_back(Term{bm, k.neg(k.mul(c, b->coeff))});
            ++b;
        } else {
            Rational s = k.sub(a->coeff, k.mul(c, b->coeff));
            if (s != 0)
                out.push_back(Term{a->mono, std::move(s)});
            ++a;
            ++b;
        }
    }
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::tail() const
{
    if (terms_.empty())
        return *this;
    return Polynomial(ring_, std::vector<Term>(terms_.begin() + 1, terms_.end()));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const
{
    const Field& k = ring_.field();
    Rational cc = k.normalize(c);
    if (cc == 0)
        return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_)
        out.push_back(Term{t.mono * m, k.mul(t.coeff, cc)});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::scale(const Rational& c) const
{
    return mul_term(Monomial(ring_.nvars()), c);
}

Polynomial Polynomial::operator*(const Polynomial& other) const
{
    require_same_ring(other);
    if (is_zero() || other.is_zero())
        return Polynomial(ring_);
    const Field& k = ring_.field();
    std::unordered_map<Monomial, Rational, MonomialHash> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) {
            auto [it, fresh] = acc.try_emplace(a.mono * b.mono, 0);
            it->second = k.add(it->second, k.mul(a.coeff, b.coeff));
        }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0)
            out.push_back(Term{m, std::move(c)});
    std::sort(out.begin(), out.end(), DescendingBy{ring_});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned n) const
{
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (n) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const
{
    if (is_zero() || leading_coeff() == 1)
        return *this;
    return scale(ring_.field().inv(leading_coeff()));
}

Polynomial Polynomial::derivative(std::size_t var) const
{
    std::vector<Term> out;
    for (const auto& t : terms_) {
        unsigned e = t.mono[var];
        if (e == 0)
            continue;
        Monomial m = t.mono;
        m.set(var, e - 1);
        out.push_back(Term{m, t.coeff * e});
    }
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::with_ring(const RingContext& ring) const
{
    if (!ring.same_ring(ring_))
        raise(ErrorKind::RingMismatch, "cannot move " + ring_.to_string() + " polynomial into " + ring.to_string());
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(), DescendingBy{ring});
    return Polynomial(ring, std::move(out));
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (!a.ring_.same_ring(b.ring_) || a.terms_.size() != b.terms_.size())
        return false;
    if (a.ring_.order() == b.ring_.order()) {
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }
    return a == b.with_ring(a.ring_);
}

std::string format_rational(const Rational& q)
{
    return q.get_str();
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    const auto& names = ring_.variables();
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        bool negative = ring_.field().is_rationals() && c < 0;
        if (negative)
            c = -c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            unsigned e = t.mono[i];
            if (e == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += names[i];
            if (e > 1)
                mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            s += format_rational(c);
        else if (c == 1)
            s += mono;
        else
            s += format_rational(c) + "*" + mono;
    }
    return s;
}

/* ---- parsing ---- */

namespace {

class Parser {
  public:
    Parser(std::string_view text, const RingContext& ring) : text_(text), ring_(ring) {}

    Polynomial parse_all()
    {
        Polynomial p = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        raise(ErrorKind::SyntaxError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Integer parse_integer()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial parse_sum()
    {
        std::vector<Term> terms;
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        while (true) {
            Term t = parse_term();
            if (negate)
                t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            if (peek('+') || peek('-')) {
                negate = text_[pos_] == '-';
                ++pos_;
                continue;
            }
            break;
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

    Term parse_term()
    {
        Term t{Monomial(ring_.nvars()), Rational(1)};
        bool any = false;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size())
                break;
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t at = pos_;
                Integer num = parse_integer();
                Rational value(num);
                if (peek('/')) {
                    ++pos_;
                    skip_ws();
                    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                        fail("expected a denominator");
                    Integer den = parse_integer();
                    if (den == 0) {
                        pos_ = at;
                        raise(ErrorKind::BadCoefficient, "zero denominator at position " + std::to_string(at) +
                                                             " in '" + std::string(text_) + "'");
                    }
                    value = Rational(num, den);
                    value.canonicalize();
                }
                t.coeff *= value;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t start = pos_;
                while (pos_ < text_.size() &&
                       (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                    ++pos_;
                std::string name(text_.substr(start, pos_ - start));
                auto idx = ring_.index_of(name);
                if (!idx)
                    raise(ErrorKind::UnknownVariable, "'" + name + "' at position " + std::to_string(start) +
                                                          " is not a variable of " + ring_.to_string());
                unsigned e = 1;
                if (peek('^')) {
                    ++pos_;
                    Integer ez = parse_integer();
                    if (ez > 65535)
                        fail("exponent too large");
                    e = static_cast<unsigned>(ez.get_ui());
                }
                t.mono.set(*idx, t.mono[*idx] + e);
            } else if (c == '(') {
                fail("parentheses are not part of the polynomial grammar");
            } else {
                break;
            }
            any = true;
            if (peek('*')) {
                ++pos_;
                skip_ws();
                if (pos_ >= text_.size())
                    fail("dangling '*'");
            }
        }
        if (!any)
            fail("expected a term");
        return t;
    }

    std::string_view text_;
    const RingContext& ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, const RingContext& ring)
{
    return Parser(text, ring).parse_all();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingContext& ring)
{
    std::vector<Polynomial> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        bool blank = std::all_of(piece.begin(), piece.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (!blank)
            out.push_back(parse_polynomial(piece, ring));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

/* ---- free functions ---- */

std::pair<unsigned, Polynomial> lowest_degree_form(const Polynomial& f)
{
    if (f.is_zero())
        raise(ErrorKind::ZeroPolynomial, "lowest degree form of the zero polynomial");
    unsigned order = f.terms().front().mono.degree();
    for (const auto& t : f.terms())
        order = std::min(order, t.mono.degree());
    std::vector<Term> form;
    for (const auto& t : f.terms())
        if (t.mono.degree() == order)
            form.push_back(t);
    return {order, Polynomial::from_terms(f.ring(), std::move(form))};
}

Polynomial ring_map_apply(const Polynomial& f, std::span<const Polynomial> images, const RingContext& target)
{
    const RingContext& source = f.ring();
    if (images.size() != source.nvars())
        raise(ErrorKind::ArityMismatch, "ring map needs " + std::to_string(source.nvars()) + " images, got " +
                                            std::to_string(images.size()));
    for (const auto& img : images)
        if (!img.ring().identical(target))
            raise(ErrorKind::ArityMismatch, "ring map image does not live in " + target.to_string());
    const Field& k = target.field();
    // powers[i][e] = images[i]^e, filled lazily
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
        auto& row = powers[i];
        if (row.empty())
            row.push_back(Polynomial::constant(target, 1));
        while (row.size() <= e)
            row.push_back(row.back() * images[i]);
        return row[e];
    };
    Polynomial result(target);
    for (const auto& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, k.normalize(t.coeff));
        for (std::size_t i = 0; i < t.mono.size() && !prod.is_zero(); ++i)
            if (t.mono[i])
                prod = prod * power(i, t.mono[i]);
        result += prod;
    }
    return result;
}

Polynomial ring_map_apply(const Polynomial& f, const std::map<std::string, Polynomial>& images,
                          const RingContext& target)
{
    std::vector<Polynomial> ordered;
    for (const auto& name : f.ring().variables()) {
        auto it = images.find(name);
        if (it == images.end())
            raise(ErrorKind::ArityMismatch, "ring map leaves variable '" + name + "' unmapped");
        ordered.push_back(it->second);
    }
    if (images.size() != ordered.size())
        raise(ErrorKind::ArityMismatch, "ring map mentions variables outside the source ring");
    return ring_map_apply(f, ordered, target);
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g)
{
    if (g.is_zero())
        raise(ErrorKind::ZeroDivisor, "division by the zero polynomial");
    const Field& k = f.ring().field();
    const Polynomial gg = g.with_ring(f.ring());
    const Monomial& lm = gg.leading_monomial();
    Rational lc_inv = k.inv(gg.leading_coeff());
    Polynomial rest = f;
    std::vector<Term> quotient;
    while (!rest.is_zero()) {
        const Term& lt = rest.leading_term();
        if (!lm.divides(lt.mono))
            return std::nullopt;
        Monomial m = lt.mono / lm;
        Rational c = k.mul(lt.coeff, lc_inv);
        quotient.push_back(Term{m, c});
        rest = rest.sub_mul(c, m, gg);
    }
    return Polynomial::from_terms(f.ring(), std::move(quotient));
}

} // namespace icl
