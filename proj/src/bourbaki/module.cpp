#include "icl/bourbaki/module.hpp"

#include <mutex>

#include "icl/error.hpp"
#include "icl/util/rng.hpp"

namespace icl {

namespace {

constexpr std::uint64_t kRankSeed = 0x1c1;

std::vector<std::string> tag_names(const char* stem, std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back(std::string("@") + stem + std::to_string(i));
    return out;
}

/* Tags first, then the variables of `base`. */
RingContext tagged_ring(const RingContext& base, const std::vector<std::string>& tags)
{
    std::vector<std::string> vars = tags;
    vars.insert(vars.end(), base.variables().begin(), base.variables().end());
    return RingContext(vars, base.field());
}

/* All products of two tags; with them the tag-degree-one part of an ideal is a module. */
void add_tag_squares(const RingContext& T, std::size_t ntags, std::vector<Polynomial>& gens)
{
    for (std::size_t i = 0; i < ntags; ++i)
        for (std::size_t j = i; j < ntags; ++j)
            gens.push_back(Polynomial::variable(T, i) * Polynomial::variable(T, j));
}

Polynomial encode(const Column& v, const RingContext& T, std::size_t first_tag)
{
    Polynomial out(T);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            out += embed_by_name(v[i], T) * Polynomial::variable(T, first_tag + i);
    return out;
}

bool is_zero_column(const Column& c)
{
    for (const auto& f : c)
        if (!f.is_zero())
            return false;
    return true;
}

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point)
{
    const Field& k = f.ring().field();
    Rational acc = 0;
    for (const auto& t : f.terms()) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (unsigned e = 0; e < t.mono[i]; ++e)
                v = k.mul(v, point[i]);
        acc = k.add(acc, v);
    }
    return acc;
}

std::vector<Column> trim(const RingContext& ring, std::vector<Column> cols)
{
    std::erase_if(cols, is_zero_column);
    for (std::size_t k = 0; k < cols.size();) {
        std::vector<Column> others;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (std::size_t v = 0; v < ring.nvars(); ++v) {
                Column scaled;
                for (const auto& f : cols[j])
                    scaled.push_back(f * Polynomial::variable(ring, v));
                others.push_back(std::move(scaled));
            }
            if (j != k)
                others.push_back(cols[j]);
        }
        if (module_member(cols[k], others, ring))
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
        else
            ++k;
    }
    return cols;
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& fn)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Column> syzygies(const RingContext& ring, const std::vector<Column>& cols, std::size_t len)
{
    const std::size_t n = cols.size();
    if (n == 0)
        return {};
    auto e = tag_names("e", len);
    auto g = tag_names("g", n);
    std::vector<std::string> tags = e;
    tags.insert(tags.end(), g.begin(), g.end());
    RingContext T = tagged_ring(ring, tags);
    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < n; ++k)
        gens.push_back(encode(cols[k], T, 0) + Polynomial::variable(T, len + k));
    add_tag_squares(T, len + n, gens);
    Ideal K = eliminate(Ideal(T, std::move(gens)), std::set<std::string>(e.begin(), e.end()));

    // K lives in (g..., ring vars); keep the elements of tag degree one
    std::vector<Column> out;
    for (const auto& h : K.generators()) {
        Column col(n, Polynomial(ring));
        bool linear = true;
        for (const auto& t : h.terms()) {
            unsigned deg = 0;
            std::size_t which = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (t.mono[k] != 0) {
                    deg += t.mono[k];
                    which = k;
                }
            if (deg != 1) {
                linear = false;
                break;
            }
            std::vector<int> ex(ring.nvars());
            for (std::size_t v = 0; v < ring.nvars(); ++v)
                ex[v] = static_cast<int>(t.mono[n + v]);
            col[which] += Polynomial::monomial(ring, Monomial(std::span<const int>(ex)), t.coeff);
        }
        if (linear && !is_zero_column(col))
            out.push_back(std::move(col));
    }
    return out;
}

bool module_member(const Column& v, const std::vector<Column>& gens, const RingContext& ring)
{
    if (is_zero_column(v))
        return true;
    const std::size_t len = v.size();
    RingContext T = tagged_ring(ring, tag_names("e", len));
    std::vector<Polynomial> polys;
    for (const auto& c : gens)
        if (!is_zero_column(c))
            polys.push_back(encode(c, T, 0));
    add_tag_squares(T, len, polys);
    return ideal_member(encode(v, T, 0), Ideal(T, std::move(polys)));
}

Polynomial determinant(const std::vector<Column>& square)
{
    const std::size_t k = square.size();
    if (k == 0)
        raise(ErrorKind::ArityMismatch, "determinant of an empty matrix needs a ring");
    if (k == 1)
        return square[0][0];
    Polynomial det(square[0][0].ring());
    for (std::size_t row = 0; row < k; ++row) {
        if (square[0][row].is_zero())
            continue;
        std::vector<Column> minor;
        for (std::size_t c = 1; c < k; ++c) {
            Column col;
            for (std::size_t r = 0; r < k; ++r)
                if (r != row)
                    col.push_back(square[c][r]);
            minor.push_back(std::move(col));
        }
        Polynomial term = square[0][row] * determinant(minor);
        det = row % 2 == 0 ? det + term : det - term;
    }
    return det;
}

Ideal ideal_of_minors(const RingContext& ring, const std::vector<Column>& matrix, std::size_t rows, long k)
{
    if (k <= 0)
        return Ideal::unit(ring);
    const std::size_t kk = static_cast<std::size_t>(k);
    if (kk > rows || kk > matrix.size())
        return Ideal(ring);
    std::vector<Polynomial> minors;
    for_each_subset(matrix.size(), kk, [&](const std::vector<std::size_t>& cs) {
        for_each_subset(rows, kk, [&](const std::vector<std::size_t>& rs) {
            std::vector<Column> square;
            for (std::size_t c : cs) {
                Column col;
                for (std::size_t r : rs)
                    col.push_back(matrix[c][r]);
                square.push_back(std::move(col));
            }
            Polynomial d = determinant(square);
            if (!d.is_zero())
                minors.push_back(d.monic());
        });
    });
    std::sort(minors.begin(), minors.end(), [](const Polynomial& a, const Polynomial& b) {
        return a.to_string() < b.to_string();
    });
    minors.erase(std::unique(minors.begin(), minors.end()), minors.end());
    Ideal I(ring, std::move(minors));
    const auto& gb = I.groebner_basis();
    return gb.size() < I.generators().size() ? Ideal(ring, gb) : I;
}

std::size_t generic_rank(const RingContext& ring, const std::vector<Column>& matrix, std::size_t rows)
{
    const Field& k = ring.field();
    Rng rng(kRankSeed);
    std::vector<Rational> point;
    for (std::size_t i = 0; i < ring.nvars(); ++i)
        point.push_back(k.from_int(rng.uniform(-1000, 1000)));
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(matrix.size()));
    for (std::size_t c = 0; c < matrix.size(); ++c)
        for (std::size_t r = 0; r < rows; ++r)
            a[r][c] = evaluate(matrix[c][r], point);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < matrix.size() && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        Rational inv = k.inv(a[rank][c]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0)
                continue;
            Rational f = k.mul(a[r][c], inv);
            for (std::size_t j = c; j < matrix.size(); ++j)
                a[r][j] = k.sub(a[r][j], k.mul(f, a[rank][j]));
        }
        ++rank;
    }
    return rank;
}

FModule::FModule(RingContext ring, std::size_t ambient_rank, std::vector<Column> columns)
    : ring_(std::move(ring)), rank_(ambient_rank), presentation_(std::make_shared<Presentation>())
{
    if (rank_ == 0)
        raise(ErrorKind::NotTorsionfree, "modules of rank zero are not supported");
    for (auto& col : columns) {
        if (col.size() != rank_)
            raise(ErrorKind::ArityMismatch, "column of length " + std::to_string(col.size()) + " in R^" +
                                                std::to_string(rank_));
        for (auto& f : col)
            f = f.with_ring(ring_);
    }
    columns_ = std::move(columns);
    std::size_t r = generic_rank(ring_, columns_, rank_);
    if (r != rank_)
        raise(ErrorKind::NotTorsionfree, "columns span a module of rank " + std::to_string(r) + " inside R^" +
                                             std::to_string(rank_));
}

FModule FModule::parse(const std::vector<std::vector<std::string>>& columns, const RingContext& ring)
{
    if (columns.empty())
        raise(ErrorKind::ArityMismatch, "a module needs at least one generator");
    std::vector<Column> cols;
    for (const auto& c : columns) {
        Column col;
        for (const auto& s : c)
            col.push_back(parse_polynomial(s, ring));
        cols.push_back(std::move(col));
    }
    std::size_t e = cols.front().size();
    return FModule(ring, e, std::move(cols));
}

FModule FModule::free(const RingContext& ring, std::size_t rank)
{
    std::vector<Column> cols;
    for (std::size_t i = 0; i < rank; ++i) {
        Column c(rank, Polynomial(ring));
        c[i] = Polynomial::constant(ring, 1);
        cols.push_back(std::move(c));
    }
    return FModule(ring, rank, std::move(cols));
}

FModule FModule::direct_sum(const std::vector<Ideal>& summands)
{
    if (summands.empty())
        raise(ErrorKind::ArityMismatch, "direct sum of no ideals");
    const RingContext& ring = summands.front().ring();
    std::vector<Column> cols;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        Ideal part = summands[i].with_ring(ring);
        for (const auto& g : part.generators()) {
            Column c(summands.size(), Polynomial(ring));
            c[i] = g;
            cols.push_back(std::move(c));
        }
    }
    return FModule(ring, summands.size(), std::move(cols));
}

const std::vector<Column>& FModule::presentation() const
{
    std::call_once(presentation_->once, [this] { presentation_->columns = syzygies(ring_, columns_, rank_); });
    return presentation_->columns;
}

std::string FModule::to_string() const
{
    std::string out = "[";
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        out += c ? ", [" : "[";
        for (std::size_t r = 0; r < rank_; ++r)
            out += (r ? ", " : "") + columns_[c][r].to_string();
        out += "]";
    }
    return out + "]";
}

Ideal fitting_ideal(const FModule& M, long i)
{
    const auto& phi = M.presentation();
    return ideal_of_minors(M.ring(), phi, M.ngens(), static_cast<long>(M.ngens()) - i);
}

std::vector<Column> minimal_generators(const FModule& M)
{
    return trim(M.ring(), M.columns());
}

FModule embed_into_free(const RingContext& ring, std::size_t ngens, const std::vector<Column>& presentation)
{
    for (const auto& c : presentation)
        if (c.size() != ngens)
            raise(ErrorKind::ArityMismatch, "presentation column of length " + std::to_string(c.size()) +
                                                " for " + std::to_string(ngens) + " generators");
    const std::size_t e = ngens - generic_rank(ring, presentation, ngens);
    if (e == 0)
        raise(ErrorKind::NotTorsionfree, "the presented module has rank zero");
    // rows of the presentation, as columns
    std::vector<Column> rows(ngens);
    for (std::size_t i = 0; i < ngens; ++i)
        for (const auto& c : presentation)
            rows[i].push_back(c[i].with_ring(ring));
    std::vector<Column> dual;
    if (presentation.empty()) {
        for (std::size_t i = 0; i < ngens; ++i) {
            Column u(ngens, Polynomial(ring));
            u[i] = Polynomial::constant(ring, 1);
            dual.push_back(std::move(u));
        }
    } else {
        dual = syzygies(ring, rows, presentation.size());
    }
    dual = trim(ring, std::move(dual));
    if (dual.size() != e)
        raise(ErrorKind::Unsupported, "the dual needs " + std::to_string(dual.size()) +
                                          " generators; expected a free module of rank " + std::to_string(e));
    std::vector<Column> cols(ngens);
    for (std::size_t i = 0; i < ngens; ++i)
        for (const auto& u : dual)
            cols[i].push_back(u[i]);
    FModule M(ring, e, cols);
    // torsionfree iff the map to the double dual is injective
    std::vector<Column> given;
    for (const auto& c : presentation) {
        Column cc;
        for (const auto& f : c)
            cc.push_back(f.with_ring(ring));
        given.push_back(std::move(cc));
    }
    for (const auto& s : M.presentation())
        if (!module_member(s, given, ring))
            raise(ErrorKind::NotTorsionfree, "the presented module has torsion");
    return M;
}

} // namespace icl
