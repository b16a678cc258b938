#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "icl/groebner/ideal.hpp"

namespace icl {

/* A vector in R^k; matrices are lists of columns. */
using Column = std::vector<Polynomial>;

/*
 * Submodule of R^e generated by the columns. The presentation (the
 * syzygies of the columns) is computed on first use and shared by copies.
 */
class FModule {
  public:
    /* Throws NotTorsionfree when the columns do not span a rank-e module. */
    FModule(RingContext ring, std::size_t ambient_rank, std::vector<Column> columns);

    /* Each inner list is one column, written as polynomial strings. */
    static FModule parse(const std::vector<std::vector<std::string>>& columns, const RingContext& ring);
    static FModule free(const RingContext& ring, std::size_t rank);
    /* I_1 ⊕ ... ⊕ I_k inside R^k. */
    static FModule direct_sum(const std::vector<Ideal>& summands);

    const RingContext& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return rank_; }
    std::size_t ngens() const noexcept { return columns_.size(); }
    const std::vector<Column>& columns() const noexcept { return columns_; }

    /* Syzygy columns, each of length ngens(). */
    const std::vector<Column>& presentation() const;

    std::string to_string() const;

  private:
    RingContext ring_;
    std::size_t rank_;
    std::vector<Column> columns_;
    struct Presentation {
        std::once_flag once;
        std::vector<Column> columns;
    };
    std::shared_ptr<Presentation> presentation_;
};

/* Kernel of R^cols -> R^len sending the i-th basis vector to cols[i]. */
std::vector<Column> syzygies(const RingContext& ring, const std::vector<Column>& cols, std::size_t len);
bool module_member(const Column& v, const std::vector<Column>& gens, const RingContext& ring);

Polynomial determinant(const std::vector<Column>& square);
/* I_k of a matrix with `rows` rows: (1) for k <= 0, (0) past the size. */
Ideal ideal_of_minors(const RingContext& ring, const std::vector<Column>& matrix, std::size_t rows, long k);
/* Rank over the fraction field (evaluation at a seeded random point). */
std::size_t generic_rank(const RingContext& ring, const std::vector<Column>& matrix, std::size_t rows);

/* Fitt_i(M) = I_{n-i}(presentation). */
Ideal fitting_ideal(const FModule& M, long i);

/*
 * The module with the given presentation (n generators), embedded in its
 * double dual R^e. Throws NotTorsionfree, or Unsupported when the dual has
 * no basis found by trimming generators.
 */
FModule embed_into_free(const RingContext& ring, std::size_t ngens, const std::vector<Column>& presentation);

/* Columns left after greedily dropping those in m*M + (the others). */
std::vector<Column> minimal_generators(const FModule& M);

} // namespace icl
