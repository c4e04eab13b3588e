#include "gradedlie/linalg.hpp"

#include "gradedlie/error.hpp"

#include <algorithm>
#include <numeric>

namespace gradedlie {

namespace {

void axpy(Vector& y, const Scalar& c, const Vector& x) {
    for (std::size_t k = 0; k < y.size(); ++k)
        if (!x[k].is_zero())
            y[k] -= c * x[k];
}

Vector flat_copy(const Matrix& m) { return Vector(m.flat().begin(), m.flat().end()); }

std::size_t common_dim(std::span<const Matrix> vectors) {
    if (vectors.empty())
        return 0;
    std::size_t n = vectors.front().dim();
    for (const auto& v : vectors)
        if (v.dim() != n)
            throw Error(ErrorKind::DimensionMismatch, "span of matrices of differing size");
    return n;
}

} // namespace

Vector EchelonBasis::residual(Vector v) const {
    if (v.size() != width_)
        throw Error(ErrorKind::DimensionMismatch, "vector width does not match basis");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = v[pivots_[r]];
        if (!c.is_zero())
            axpy(v, c, rows_[r]);
    }
    return v;
}

bool EchelonBasis::insert(Vector v) {
    v = residual(std::move(v));
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& x) { return !x.is_zero(); });
    if (lead == v.end())
        return false;
    const std::size_t pivot = static_cast<std::size_t>(lead - v.begin());
    const Scalar inv = lead->inverse();
    for (auto& x : v)
        if (!x.is_zero())
            x *= inv;
    for (auto& row : rows_) {
        const Scalar c = row[pivot];
        if (!c.is_zero())
            axpy(row, c, v);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

bool EchelonBasis::contains(const Vector& v) const {
    auto r = residual(v);
    return std::all_of(r.begin(), r.end(), [](const Scalar& x) { return x.is_zero(); });
}

std::optional<Vector> EchelonBasis::coordinates(const Vector& v) const {
    if (!contains(v))
        return std::nullopt;
    Vector coords(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        coords[r] = v[pivots_[r]];
    return coords;
}

std::vector<Vector> EchelonBasis::sorted_rows() const {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
    std::vector<Vector> out;
    out.reserve(order.size());
    for (auto r : order)
        out.push_back(rows_[r]);
    return out;
}

std::vector<Matrix> span_basis(std::span<const Matrix> vectors) {
    const std::size_t n = common_dim(vectors);
    EchelonBasis ech(n * n);
    std::vector<Matrix> out;
    for (const auto& v : vectors)
        if (ech.insert(flat_copy(v)))
            out.push_back(v);
    return out;
}

std::vector<Matrix> reduced_basis(std::span<const Matrix> vectors) {
    const std::size_t n = common_dim(vectors);
    EchelonBasis ech(n * n);
    for (const auto& v : vectors)
        ech.insert(flat_copy(v));
    std::vector<Matrix> out;
    for (auto& row : ech.sorted_rows())
        out.push_back(Matrix::from_flat(n, std::move(row)));
    return out;
}

std::size_t rank(std::span<const Matrix> vectors) { return span_basis(vectors).size(); }

bool same_span(std::span<const Matrix> a, std::span<const Matrix> b) {
    if (a.empty() || b.empty())
        return rank(a) == rank(b);
    if (a.front().dim() != b.front().dim())
        return false;
    auto ra = reduced_basis(a);
    auto rb = reduced_basis(b);
    return ra == rb;
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t unknowns) {
    EchelonBasis ech(unknowns);
    for (const auto& row : rows)
        ech.insert(row);
    std::vector<bool> is_pivot(unknowns, false);
    for (auto p : ech.pivots())
        is_pivot[p] = true;

    EchelonBasis solutions(unknowns);
    for (std::size_t free = 0; free < unknowns; ++free) {
        if (is_pivot[free])
            continue;
        Vector x(unknowns);
        x[free] = Scalar(1);
        // Row r reads x[pivot_r] + sum_{free} row_r[free] x[free] = 0.
        for (std::size_t r = 0; r < ech.rank(); ++r)
            x[ech.pivots()[r]] = -ech.rows()[r][free];
        solutions.insert(std::move(x));
    }
    return solutions.sorted_rows();
}

std::vector<Matrix> matrix_nullspace(std::size_t n, std::span<const UnitIndex> free_units,
                                     const std::function<Vector(const Matrix&)>& condition) {
    std::vector<UnitIndex> units(free_units.begin(), free_units.end());
    std::sort(units.begin(), units.end());
    if (units.empty())
        return {};
    std::vector<Vector> columns;
    columns.reserve(units.size());
    for (auto [i, j] : units)
        columns.push_back(condition(Matrix::unit(n, i, j)));
    const std::size_t m = columns.front().size();
    std::vector<Vector> rows(m, Vector(units.size()));
    for (std::size_t u = 0; u < units.size(); ++u) {
        if (columns[u].size() != m)
            throw Error(ErrorKind::DimensionMismatch, "condition returned varying lengths");
        for (std::size_t k = 0; k < m; ++k)
            rows[k][u] = columns[u][k];
    }
    std::vector<Matrix> out;
    for (const auto& x : nullspace(rows, units.size())) {
        Matrix a(n);
        for (std::size_t u = 0; u < units.size(); ++u)
            a(units[u].first, units[u].second) = x[u];
        out.push_back(std::move(a));
    }
    return out;
}

} // namespace gradedlie
