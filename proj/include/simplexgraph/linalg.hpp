/**************************************************************************
 * linalg.hpp
 *
 * Copyright 2026 The simplexgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

// Dense matrices and subspaces over GF(q).

#pragma once

#include "common.hpp"
#include "field.hpp"

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simplexgraph {

using Vec = std::vector<Elem>;

/// Row-major dense matrix of encoded field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols = 0)
    {
        if (!rows.empty())
            cols = rows.front().size();
        Matrix out(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("ragged rows");
            std::copy(rows[i].begin(), rows[i].end(), out.row(i).begin());
        }
        return out;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }

    Vec column(std::size_t c) const
    {
        Vec out(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            out[r] = (*this)(r, c);
        return out;
    }

    std::vector<Vec> row_list() const
    {
        std::vector<Vec> out;
        for (std::size_t r = 0; r < rows_; ++r)
            out.push_back(row_vec(r));
        return out;
    }

    void append_row(std::span<const Elem> v)
    {
        if (rows_ == 0 && cols_ == 0)
            cols_ = v.size();
        if (v.size() != cols_)
            throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }

    /// Rows of this followed by rows of other.
    Matrix stacked(const Matrix& other) const
    {
        if (rows_ != 0 && other.rows_ != 0 && cols_ != other.cols_)
            throw std::invalid_argument("stacking matrices of different widths");
        Matrix out = *this;
        if (out.rows_ == 0)
            out.cols_ = other.cols_;
        out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
        out.rows_ += other.rows_;
        return out;
    }

    Matrix without_row(std::size_t skip) const
    {
        Matrix out(0, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (r != skip)
                out.append_row(row(r));
        return out;
    }

    const std::vector<Elem>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elem> data_;
};

struct RrefResult {
    Matrix reduced;                   // same shape as the input, zero rows last
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
inline RrefResult rref(const Field& f, Matrix m)
{
    RrefResult res;
    std::size_t r = 0;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m(piv, c) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(m(piv, j), m(r, j));
        const Elem s = f.inv(m(r, c));
        if (s != 1)
            for (std::size_t j = c; j < cols; ++j)
                m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const Elem factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

inline std::size_t rank(const Field& f, const Matrix& m) { return rref(f, m).rank; }

/// Canonical representative of a subspace of F^n: its reduced row echelon basis.
class SubspaceKey {
public:
    SubspaceKey() = default;

    /// Key of the row space of m.
    SubspaceKey(const Field& f, const Matrix& m) : n_(m.cols())
    {
        auto res = rref(f, m);
        basis_ = Matrix(0, n_);
        for (std::size_t r = 0; r < res.rank; ++r)
            basis_.append_row(res.reduced.row(r));
        pivots_ = std::move(res.pivots);
    }

    /// The zero subspace of F^n.
    static SubspaceKey zero(std::size_t n)
    {
        SubspaceKey k;
        k.n_ = n;
        k.basis_ = Matrix(0, n);
        return k;
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Reduces v against the basis; the result is zero iff v lies in the subspace.
    Vec reduce(const Field& f, Vec v) const
    {
        for (std::size_t r = 0; r < basis_.rows(); ++r) {
            const Elem c = v[pivots_[r]];
            if (c == 0)
                continue;
            const auto row = basis_.row(r);
            for (std::size_t j = pivots_[r]; j < n_; ++j)
                if (row[j] != 0)
                    v[j] = f.sub(v[j], f.mul(c, row[j]));
        }
        return v;
    }

    bool contains(const Field& f, std::span<const Elem> v) const
    {
        if (v.size() != n_)
            throw std::invalid_argument("vector length does not match ambient dimension");
        const Vec r = reduce(f, Vec(v.begin(), v.end()));
        return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
    }

    bool contains(const Field& f, const SubspaceKey& other) const
    {
        for (std::size_t r = 0; r < other.dim(); ++r)
            if (!contains(f, other.basis().row(r)))
                return false;
        return true;
    }

    friend bool operator==(const SubspaceKey& a, const SubspaceKey& b)
    {
        return a.n_ == b.n_ && a.basis_ == b.basis_;
    }

    /// Lexicographic on (ambient, dim, basis bytes).
    friend bool operator<(const SubspaceKey& a, const SubspaceKey& b)
    {
        if (a.n_ != b.n_)
            return a.n_ < b.n_;
        if (a.dim() != b.dim())
            return a.dim() < b.dim();
        return a.basis_.data() < b.basis_.data();
    }

    /// 64-bit FNV-1a over (ambient, dim, basis bytes).
    std::uint64_t hash() const
    {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t b) {
            h ^= b;
            h *= 1099511628211ull;
        };
        mix(n_);
        mix(dim());
        for (Elem e : basis_.data())
            mix(e);
        return h;
    }

private:
    std::size_t n_ = 0;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

struct SubspaceKeyHash {
    std::size_t operator()(const SubspaceKey& k) const { return static_cast<std::size_t>(k.hash()); }
};

inline void check_same_ambient(const SubspaceKey& a, const SubspaceKey& b)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspaces live in different ambient spaces");
}

/// dim(A) + dim(B) - dim(A + B).
inline std::size_t intersection_dim(const Field& f, const SubspaceKey& a, const SubspaceKey& b)
{
    check_same_ambient(a, b);
    return a.dim() + b.dim() - rank(f, a.basis().stacked(b.basis()));
}

inline SubspaceKey subspace_sum(const Field& f, const SubspaceKey& a, const SubspaceKey& b)
{
    check_same_ambient(a, b);
    return SubspaceKey(f, a.basis().stacked(b.basis()));
}

/// A ∩ B via the kernel of [A; -B] restricted to the A-coefficients.
inline SubspaceKey subspace_intersection(const Field& f, const SubspaceKey& a, const SubspaceKey& b)
{
    check_same_ambient(a, b);
    const std::size_t n = a.ambient();
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    // Solve x A = y B: rows of [A | I_a 0 ; B | 0 I_b], eliminate on the first n columns.
    Matrix aug(da + db, n + da);
    for (std::size_t r = 0; r < da; ++r) {
        for (std::size_t j = 0; j < n; ++j)
            aug(r, j) = a.basis()(r, j);
        aug(r, n + r) = 1;
    }
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t j = 0; j < n; ++j)
            aug(da + r, j) = b.basis()(r, j);
    auto red = rref(f, aug);
    Matrix out(0, n);
    for (std::size_t r = 0; r < red.reduced.rows(); ++r) {
        const auto row = red.reduced.row(r);
        if (!std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n), [](Elem e) { return e == 0; }))
            continue;
        // the A-part of a kernel combination gives an intersection vector
        Vec v(n, 0);
        for (std::size_t i = 0; i < da; ++i) {
            const Elem c = row[n + i];
            if (c == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                v[j] = f.add(v[j], f.mul(c, a.basis()(i, j)));
        }
        out.append_row(v);
    }
    if (out.rows() == 0)
        return SubspaceKey::zero(n);
    return SubspaceKey(f, out);
}

inline std::size_t weight(std::span<const Elem> v)
{
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

inline std::size_t hamming_distance(const Field& f, std::span<const Elem> u, std::span<const Elem> v)
{
    if (u.size() != v.size())
        throw std::invalid_argument("length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        d += f.sub(u[i], v[i]) != 0;
    return d;
}

inline Vec vec_add(const Field& f, std::span<const Elem> u, std::span<const Elem> v)
{
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = f.add(u[i], v[i]);
    return out;
}

inline Vec vec_sub(const Field& f, std::span<const Elem> u, std::span<const Elem> v)
{
    Vec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = f.sub(u[i], v[i]);
    return out;
}

inline Vec vec_scale(const Field& f, Elem c, std::span<const Elem> v)
{
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = f.mul(c, v[i]);
    return out;
}

/// acc += c * v
inline void vec_axpy(const Field& f, Elem c, std::span<const Elem> v, std::span<Elem> acc)
{
    if (c == 0)
        return;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0)
            acc[i] = f.add(acc[i], f.mul(c, v[i]));
}

/// coeffs * m (row vector times matrix).
inline Vec combine_rows(const Field& f, std::span<const Elem> coeffs, const Matrix& m)
{
    Vec out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        vec_axpy(f, coeffs[r], m.row(r), out);
    return out;
}

inline Matrix multiply(const Field& f, const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            vec_axpy(f, a(i, k), b.row(k), out.row(i));
    return out;
}

/// Scales v so its first nonzero coordinate is 1; returns the scalar s with v = s * normalized.
inline Elem normalize_in_place(const Field& f, std::span<Elem> v)
{
    for (Elem e : v) {
        if (e == 0)
            continue;
        const Elem s = e;
        const Elem si = f.inv(s);
        if (s != 1)
            for (auto& x : v)
                x = f.mul(x, si);
        return s;
    }
    return 0;
}

inline Vec normalized(const Field& f, Vec v)
{
    normalize_in_place(f, v);
    return v;
}

/// True iff all columns are nonzero and pairwise non-proportional.
inline bool columns_admissible(const Field& f, const Matrix& m)
{
    std::vector<Vec> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Vec col = m.column(c);
        if (normalize_in_place(f, col) == 0)
            return false;
        cols.push_back(std::move(col));
    }
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

/// q^e with overflow detection.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned e)
{
    std::uint64_t out = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (base != 0 && out > UINT64_MAX / base)
            throw std::overflow_error("integer power overflows 64 bits");
        out *= base;
    }
    return out;
}

/// Calls fn(coeffs, vector) for every vector of the row space of basis, zero first.
/// Coefficient vectors run through F^dim in base-q odometer order (last coordinate fastest).
template <typename Fn>
void for_each_combination(const Field& f, const Matrix& basis, Fn&& fn)
{
    const std::size_t d = basis.rows();
    const std::size_t n = basis.cols();
    Vec coeffs(d, 0);
    Vec v(n, 0);
    while (true) {
        fn(std::as_const(coeffs), std::as_const(v));
        // increment odometer; update v incrementally
        std::size_t i = d;
        while (i > 0) {
            --i;
            const Elem old = coeffs[i];
            const Elem next = static_cast<Elem>((old + 1) % f.q());
            coeffs[i] = next;
            // v += (next - old) * row_i
            const Elem delta = f.sub(next, old);
            vec_axpy(f, delta, basis.row(i), v);
            if (next != 0)
                break;
            if (i == 0)
                return;
        }
        if (d == 0)
            return;
    }
}

/// Weight -> number of nonzero codewords of that weight.
inline std::map<std::size_t, std::uint64_t> weight_distribution(const Field& f, const SubspaceKey& code,
                                                                std::uint64_t budget = default_budget())
{
    const std::uint64_t total = checked_pow(f.q(), static_cast<unsigned>(code.dim()));
    require_budget(total, budget, "weight distribution");
    std::map<std::size_t, std::uint64_t> dist;
    for_each_combination(f, code.basis(), [&](const Vec&, const Vec& v) {
        const std::size_t w = weight(v);
        if (w != 0)
            ++dist[w];
    });
    return dist;
}

/// All nonzero vectors of F^dim with first nonzero coordinate 1, lexicographic by encoding.
inline std::vector<Vec> normalized_vectors(const Field& f, std::size_t dim)
{
    std::vector<Vec> out;
    // later leading positions sort first lexicographically
    for (std::size_t lead = dim; lead-- > 0;) {
        const std::size_t free = dim - lead - 1;
        const std::uint64_t count = checked_pow(f.q(), static_cast<unsigned>(free));
        for (std::uint64_t code = 0; code < count; ++code) {
            Vec v(dim, 0);
            v[lead] = 1;
            std::uint64_t c = code;
            for (std::size_t j = dim; j-- > lead + 1;) {
                v[j] = static_cast<Elem>(c % f.q());
                c /= f.q();
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

/// All q^dim vectors of F^dim in lexicographic order.
inline std::vector<Vec> all_vectors(const Field& f, std::size_t dim)
{
    const std::uint64_t count = checked_pow(f.q(), static_cast<unsigned>(dim));
    std::vector<Vec> out;
    out.reserve(count);
    for (std::uint64_t code = 0; code < count; ++code) {
        Vec v(dim, 0);
        std::uint64_t c = code;
        for (std::size_t j = dim; j-- > 0;) {
            v[j] = static_cast<Elem>(c % f.q());
            c /= f.q();
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// Gaussian binomial [n choose d]_q, the number of d-subspaces of F_q^n.
inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t d, std::uint64_t q)
{
    if (d > n)
        return 0;
    // Pascal-type recurrence [n,d] = [n-1,d-1] + q^d [n-1,d]
    std::vector<std::uint64_t> row(d + 1, 0);
    row[0] = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
        for (std::uint64_t j = std::min(i, d); j >= 1; --j) {
            const std::uint64_t scaled = checked_pow(q, static_cast<unsigned>(j));
            if (row[j] != 0 && scaled > (UINT64_MAX - row[j - 1]) / row[j])
                throw std::overflow_error("gaussian binomial overflows 64 bits");
            row[j] = row[j - 1] + scaled * row[j];
        }
    }
    return row[d];
}

/// Calls fn(rref_basis) for every d-dimensional subspace of F^n, via RREF patterns:
/// pivot sets in lexicographic order, free entries in odometer order.
template <typename Fn>
void for_each_subspace(const Field& f, std::size_t n, std::size_t d, Fn&& fn)
{
    if (d > n)
        return;
    std::vector<std::size_t> piv(d);
    std::iota(piv.begin(), piv.end(), 0);
    while (true) {
        // free positions: (row i, column c) with c > piv[i], c not a pivot
        std::vector<std::pair<std::size_t, std::size_t>> free;
        std::vector<bool> is_piv(n, false);
        for (auto p : piv)
            is_piv[p] = true;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t c = piv[i] + 1; c < n; ++c)
                if (!is_piv[c])
                    free.emplace_back(i, c);
        Matrix m(d, n);
        for (std::size_t i = 0; i < d; ++i)
            m(i, piv[i]) = 1;
        while (true) {
            fn(std::as_const(m));
            std::size_t j = free.size();
            bool carry = true;
            while (carry && j > 0) {
                --j;
                auto [r, c] = free[j];
                m(r, c) = static_cast<Elem>((m(r, c) + 1) % f.q());
                carry = m(r, c) == 0;
            }
            if (carry)
                break;
        }
        // next pivot combination
        std::size_t i = d;
        while (i > 0 && piv[i - 1] == n - d + i - 1)
            --i;
        if (i == 0)
            return;
        ++piv[i - 1];
        for (std::size_t j = i; j < d; ++j)
            piv[j] = piv[j - 1] + 1;
    }
}

// Matrix text format: header "p m rows cols", then one row per line of element codes.

inline void write_matrix(std::ostream& os, const Field& f, const Matrix& m)
{
    os << f.p() << ' ' << f.m() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                os << ' ';
            os << static_cast<unsigned>(m(r, c));
        }
        os << '\n';
    }
}

inline std::string matrix_to_text(const Field& f, const Matrix& m)
{
    std::ostringstream os;
    write_matrix(os, f, m);
    return os.str();
}

struct ParsedMatrix {
    unsigned p = 0;
    unsigned m = 0;
    Matrix matrix;
};

inline ParsedMatrix read_matrix(std::istream& is)
{
    ParsedMatrix out;
    std::size_t rows = 0;
    std::size_t cols = 0;
    if (!(is >> out.p >> out.m >> rows >> cols))
        throw std::invalid_argument("malformed matrix header");
    unsigned q = 1;
    for (unsigned i = 0; i < out.m; ++i)
        q *= out.p;
    out.matrix = Matrix(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            unsigned v = 0;
            if (!(is >> v))
                throw std::invalid_argument("matrix text truncated");
            if (v >= q)
                throw std::invalid_argument("matrix entry " + std::to_string(v) + " outside the field");
            out.matrix(r, c) = static_cast<Elem>(v);
        }
    }
    return out;
}

inline ParsedMatrix matrix_from_text(const std::string& text)
{
    std::istringstream is(text);
    return read_matrix(is);
}

} // namespace simplexgraph
