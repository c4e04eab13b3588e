#include "gradedlie/algebra.hpp"

#include "gradedlie/error.hpp"

#include <string>

namespace gradedlie {

namespace {

void require_partition(const Matrix& mat, const DegreePartition& partition) {
    if (mat.dim() != partition.size())
        throw Error(ErrorKind::DimensionMismatch,
                    "partition of length " + std::to_string(partition.size()) +
                        " on a matrix of size " + std::to_string(mat.dim()));
}

} // namespace

std::optional<Degree> homogeneous_degree(const Matrix& mat, const DegreePartition& partition) {
    require_partition(mat, partition);
    std::optional<Degree> deg;
    const std::size_t n = mat.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (mat(i, j).is_zero())
                continue;
            Degree d = partition[i] + partition[j];
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
    return deg;
}

std::array<Matrix, 4> homogeneous_components(const Matrix& mat,
                                             const DegreePartition& partition) {
    require_partition(mat, partition);
    const std::size_t n = mat.dim();
    std::array<Matrix, 4> out{Matrix(n), Matrix(n), Matrix(n), Matrix(n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!mat(i, j).is_zero())
                out[(partition[i] + partition[j]).index()](i, j) = mat(i, j);
    return out;
}

GradedMatrix::GradedMatrix(Matrix mat, DegreePartition partition)
    : mat_(std::move(mat)), partition_(std::move(partition)) {
    require_partition(mat_, partition_);
}

GradedMatrix::GradedMatrix(Matrix mat, DegreePartition partition, Degree degree)
    : mat_(std::move(mat)), partition_(std::move(partition)), degree_(degree) {
    require_partition(mat_, partition_);
    const std::size_t n = mat_.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!mat_(i, j).is_zero() && partition_[i] + partition_[j] != degree)
                throw Error(ErrorKind::NotHomogeneous,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") has degree " + (partition_[i] + partition_[j]).to_string() +
                                ", expected " + degree.to_string());
}

GradedMatrix GradedMatrix::homogeneous(Matrix mat, DegreePartition partition) {
    if (mat.is_zero())
        throw Error(ErrorKind::InvalidParameter, "zero matrix has no unique degree");
    auto deg = homogeneous_degree(mat, partition);
    if (!deg)
        throw Error(ErrorKind::NotHomogeneous, "matrix mixes several degrees");
    return GradedMatrix(std::move(mat), std::move(partition), *deg);
}

Degree GradedMatrix::require_degree() const {
    if (!degree_)
        throw Error(ErrorKind::NotHomogeneous, "element is not homogeneous");
    return *degree_;
}

GradedMatrix graded_bracket(const GradedMatrix& x, const GradedMatrix& y, Convention conv) {
    const Degree a = x.require_degree();
    const Degree b = y.require_degree();
    if (x.partition() != y.partition())
        throw Error(ErrorKind::PartitionMismatch, "bracket of elements with different gradings");
    Matrix out = x.mat() * y.mat();
    if (bracket_sign(conv, a, b) > 0)
        out -= y.mat() * x.mat();
    else
        out += y.mat() * x.mat();
    // The checking constructor turns a partition bug into an error.
    return GradedMatrix(std::move(out), x.partition(), a + b);
}

int transpose_sign(const DegreePartition& partition, TransposeKind kind, std::size_t i,
                   std::size_t j) {
    const Degree d_i = partition.at(i);
    return bracket_sign(convention_of(kind), d_i + partition.at(j), d_i);
}

Matrix graded_transpose(const Matrix& x, const DegreePartition& partition, TransposeKind kind) {
    require_partition(x, partition);
    const std::size_t n = x.dim();
    Matrix t(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar& v = x(i, j);
            if (v.is_zero())
                continue;
            t(j, i) = transpose_sign(partition, kind, i, j) > 0 ? v : -v;
        }
    return t;
}

GradedMatrix graded_transpose(const GradedMatrix& x, TransposeKind kind) {
    Matrix t = graded_transpose(x.mat(), x.partition(), kind);
    if (x.degree())
        return GradedMatrix(std::move(t), x.partition(), *x.degree());
    return GradedMatrix(std::move(t), x.partition());
}

int supertrace_weight(Degree d) noexcept { return d.a1() == d.a2() ? 1 : -1; }

Scalar graded_supertrace(const Matrix& x, const DegreePartition& partition) {
    require_partition(x, partition);
    Scalar str;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        if (supertrace_weight(partition[i]) > 0)
            str += x(i, i);
        else
            str -= x(i, i);
    }
    return str;
}

Scalar graded_supertrace(const GradedMatrix& x) {
    return graded_supertrace(x.mat(), x.partition());
}

bool jacobi_check(const GradedMatrix& x, const GradedMatrix& y, const GradedMatrix& z,
                  Convention conv) {
    const Degree a = x.require_degree();
    const Degree b = y.require_degree();
    z.require_degree();
    const auto lhs = graded_bracket(x, graded_bracket(y, z, conv), conv);
    Matrix rhs = graded_bracket(graded_bracket(x, y, conv), z, conv).mat();
    const auto swapped = graded_bracket(y, graded_bracket(x, z, conv), conv);
    if (bracket_sign(conv, a, b) > 0)
        rhs += swapped.mat();
    else
        rhs -= swapped.mat();
    return lhs.mat() == rhs;
}

Matrix form_residual(const Matrix& x, const DegreePartition& partition,
                     const FormCondition& cond) {
    if (cond.form.dim() != x.dim())
        throw Error(ErrorKind::DimensionMismatch, "form and matrix sizes differ");
    return graded_transpose(x, partition, cond.transpose_kind) * cond.form + cond.form * x;
}

bool form_membership(const GradedMatrix& x, const FormCondition& cond) {
    return form_residual(x.mat(), x.partition(), cond).is_zero();
}

Matrix so_q_form(int n, int q) {
    if (q < 1 || q > n - 1)
        throw Error(ErrorKind::InvalidParameter, "so_q requires 1 <= q <= n-1");
    const std::size_t size = 2 * static_cast<std::size_t>(n) + 1;
    Matrix k(size);
    for (int i = 0; i < n; ++i) {
        const Scalar s = i < q ? Scalar(1) : Scalar(-1);
        k(i, n + i) = s;
        k(n + i, i) = s;
    }
    k(size - 1, size - 1) = Scalar(1);
    return k;
}

Matrix osp_form(int m1, int m2, int n1, int n2) {
    if (m1 < 0 || m2 < 0 || n1 < 0 || n2 < 0)
        throw Error(ErrorKind::InvalidParameter, "osp block sizes must be nonnegative");
    const std::size_t m = static_cast<std::size_t>(m1 + m2);
    const std::size_t nn = static_cast<std::size_t>(n1 + n2);
    const std::size_t size = 2 * m + 1 + 2 * nn;
    Matrix j(size);
    for (std::size_t i = 0; i < m; ++i) {
        j(i, m + i) = Scalar(1);
        j(m + i, i) = Scalar(1);
    }
    j(2 * m, 2 * m) = Scalar(1);
    const std::size_t base = 2 * m + 1;
    for (std::size_t i = 0; i < nn; ++i) {
        j(base + i, base + nn + i) = Scalar(1);
        j(base + nn + i, base + i) = Scalar(-1);
    }
    return j;
}

} // namespace gradedlie
