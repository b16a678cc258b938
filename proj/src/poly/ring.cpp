#include "icl/poly/ring.hpp"

#include <cctype>
#include <set>

#include "icl/error.hpp"

namespace icl {

RingContext::RingContext(std::vector<std::string> variables, Field field, MonomialOrder order)
{
    if (variables.size() > kMaxVariables)
        raise(ErrorKind::ArityMismatch, "at most " + std::to_string(kMaxVariables) + " variables are supported");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty())
            raise(ErrorKind::SyntaxError, "empty variable name");
        if (!seen.insert(v).second)
            raise(ErrorKind::SyntaxError, "duplicate variable name '" + v + "'");
    }
    if (order.kind == MonomialOrder::Kind::Block && order.block > variables.size())
        raise(ErrorKind::OrderMismatch, "elimination block larger than the variable list");
    data_ = std::make_shared<const Data>(Data{std::move(variables), field, order});
}

RingContext RingContext::parse(std::string_view text)
{
    std::string_view vars = text;
    Field field = Field::rationals();
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        vars = text.substr(0, slash);
        field = Field::parse(text.substr(slash + 1));
    }
    std::vector<std::string> names;
    std::string current;
    for (char c : vars) {
        if (c == ',') {
            names.push_back(current);
            current.clear();
        } else if (c != ' ' && c != '\t') {
            current.push_back(c);
        }
    }
    names.push_back(current);
    for (const auto& n : names) {
        bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_');
        for (char c : n)
            ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
        if (!ok)
            raise(ErrorKind::SyntaxError, "bad variable name '" + n + "' in ring '" + std::string(text) + "'");
    }
    return RingContext(std::move(names), field);
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const
{
    const auto& vars = data_->variables;
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name)
            return i;
    return std::nullopt;
}

std::size_t RingContext::require_index(std::string_view name) const
{
    auto i = index_of(name);
    if (!i)
        raise(ErrorKind::UnknownVariable, "'" + std::string(name) + "' is not a variable of " + to_string());
    return *i;
}

RingContext RingContext::with_order(MonomialOrder order) const
{
    return RingContext(data_->variables, data_->field, order);
}

bool RingContext::same_ring(const RingContext& other) const noexcept
{
    return data_ == other.data_ ||
           (data_->variables == other.data_->variables && data_->field == other.data_->field);
}

std::string RingContext::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < nvars(); ++i) {
        if (i)
            s += ',';
        s += data_->variables[i];
    }
    return s + "/" + data_->field.to_string();
}

bool operator==(const RingContext& a, const RingContext& b) noexcept
{
    return a.data_ == b.data_ || (a.same_ring(b) && a.data_->order == b.data_->order);
}

} // namespace icl
