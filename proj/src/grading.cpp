#include "gradedlie/grading.hpp"

#include "gradedlie/error.hpp"

namespace gradedlie {

std::string Degree::to_string() const {
    return {static_cast<char>('0' + a1_), static_cast<char>('0' + a2_)};
}

Degree Degree::parse(std::string_view text) {
    auto bit = [&](char c) {
        if (c != '0' && c != '1')
            throw Error(ErrorKind::Parse, "bad degree '" + std::string(text) + "'");
        return c - '0';
    };
    if (text.size() != 2)
        throw Error(ErrorKind::Parse, "bad degree '" + std::string(text) + "'");
    return Degree(bit(text[0]), bit(text[1]));
}

std::string_view to_string(Convention conv) noexcept {
    return conv == Convention::GradedLieAlgebra ? "graded_lie_algebra"
                                                : "graded_lie_superalgebra";
}

Degree DegreePartition::at(std::size_t i) const {
    if (i >= degrees_.size())
        throw Error(ErrorKind::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside partition of size " +
                        std::to_string(degrees_.size()));
    return degrees_[i];
}

Degree DegreePartition::entry_degree(std::size_t i, std::size_t j) const {
    return at(i) + at(j);
}

std::string DegreePartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i)
            out += ',';
        out += degrees_[i].to_string();
    }
    return out;
}

DegreePartition DegreePartition::parse(std::string_view text) {
    std::vector<Degree> degs;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        degs.push_back(Degree::parse(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return DegreePartition(std::move(degs));
}

namespace {

void append(std::vector<Degree>& v, int count, Degree d) { v.insert(v.end(), count, d); }

void require_nonnegative(std::initializer_list<int> values, const char* family) {
    for (int v : values)
        if (v < 0)
            throw Error(ErrorKind::InvalidParameter,
                        std::string(family) + ": block sizes must be nonnegative");
}

} // namespace

DegreePartition DegreePartition::gl_pqrs(int p, int q, int r, int s) {
    require_nonnegative({p, q, r, s}, "gl_pqrs");
    std::vector<Degree> d;
    append(d, p, {0, 0});
    append(d, q, {0, 1});
    append(d, r, {1, 0});
    append(d, s, {1, 1});
    return DegreePartition(std::move(d));
}

DegreePartition DegreePartition::so_q(int n, int q) {
    if (q < 1 || q > n - 1)
        throw Error(ErrorKind::InvalidParameter, "so_q requires 1 <= q <= n-1");
    // Block order q, n-q, q, n-q, 1: the sl_{2q,1,0,2n-2q}(2n+1) grading with its
    // blocks permuted.
    std::vector<Degree> d;
    for (int half = 0; half < 2; ++half) {
        append(d, q, {0, 0});
        append(d, n - q, {1, 1});
    }
    d.push_back({0, 1});
    return DegreePartition(std::move(d));
}

DegreePartition DegreePartition::gl_super(int m1, int m2, int n1, int n2) {
    require_nonnegative({m1, m2, n1, n2}, "gl_super");
    std::vector<Degree> d;
    append(d, m1, {0, 0});
    append(d, m2, {1, 1});
    append(d, n1, {1, 0});
    append(d, n2, {0, 1});
    return DegreePartition(std::move(d));
}

DegreePartition DegreePartition::osp(int m1, int m2, int n1, int n2) {
    require_nonnegative({m1, m2, n1, n2}, "osp");
    std::vector<Degree> d;
    for (int half = 0; half < 2; ++half) {
        append(d, m1, {0, 0});
        append(d, m2, {1, 1});
    }
    d.push_back({0, 0});
    for (int half = 0; half < 2; ++half) {
        append(d, n1, {1, 0});
        append(d, n2, {0, 1});
    }
    return DegreePartition(std::move(d));
}

} // namespace gradedlie
