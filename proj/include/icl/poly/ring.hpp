#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icl/poly/field.hpp"
#include "icl/poly/monomial.hpp"

namespace icl {

/* Polynomial ring k[vars] with a fixed monomial order. Cheap to copy: the
 * data is shared and immutable. */
class RingContext {
  public:
    RingContext(std::vector<std::string> variables, Field field, MonomialOrder order = MonomialOrder::grevlex());

    /* "x,y/Q", "x,y,z/Fp:65537"; a missing field means Q. */
    static RingContext parse(std::string_view text);

    const std::vector<std::string>& variables() const noexcept { return data_->variables; }
    std::size_t nvars() const noexcept { return data_->variables.size(); }
    const Field& field() const noexcept { return data_->field; }
    const MonomialOrder& order() const noexcept { return data_->order; }

    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const;

    RingContext with_order(MonomialOrder order) const;

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept
    {
        return data_->order.compare(a, b);
    }

    /* Same variables and field; the order may differ. */
    bool same_ring(const RingContext& other) const noexcept;
    bool identical(const RingContext& other) const noexcept { return data_ == other.data_ || *this == other; }

    std::string to_string() const;

    friend bool operator==(const RingContext& a, const RingContext& b) noexcept;

  private:
    struct Data {
        std::vector<std::string> variables;
        Field field;
        MonomialOrder order;
    };
    std::shared_ptr<const Data> data_;
};

} // namespace icl
