/**************************************************************************
 * field.hpp
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

// Arithmetic in GF(p^m) for small prime powers.
//
// An element is encoded as the integer sum(c_i * p^i) where c_0 + c_1 x + ... +
// c_{m-1} x^{m-1} is its polynomial-basis representative modulo a fixed monic
// irreducible polynomial. Code 0 is zero and code 1 is one. The irreducible
// polynomial is the lexicographically smallest monic irreducible of degree m,
// comparing coefficient lists constant term first; the default primitive element
// is the smallest code of multiplicative order q - 1.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplexgraph {

using Elem = std::uint8_t;

inline constexpr unsigned kDefaultMaxFieldOrder = 64;

namespace detail {

inline bool is_prime(unsigned p)
{
    if (p < 2)
        return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
using Poly = std::vector<unsigned>;

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline unsigned inv_mod(unsigned a, unsigned p)
{
    for (unsigned x = 1; x < p; ++x)
        if (a * x % p == 1)
            return x;
    throw std::domain_error("no inverse modulo p");
}

// Remainder of a modulo b (b nonzero).
inline Poly poly_mod(Poly a, const Poly& b, unsigned p)
{
    trim(a);
    const std::size_t db = b.size() - 1;
    const unsigned lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const unsigned factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + p * p - factor * b[i] % p) % p;
        trim(a);
    }
    return a;
}

inline bool is_irreducible(const Poly& f, unsigned p)
{
    const std::size_t m = f.size() - 1;
    // trial division by every monic polynomial of degree 1..m/2
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i)
            count *= p;
        for (std::size_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            std::size_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<unsigned>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty())
                return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree m, constant term first.
inline Poly smallest_irreducible(unsigned p, unsigned m)
{
    std::size_t count = 1;
    for (unsigned i = 0; i < m; ++i)
        count *= p;
    for (std::size_t rank = 0; rank < count; ++rank) {
        // rank enumerates (c_0, ..., c_{m-1}) with c_0 most significant
        Poly f(m + 1, 0);
        std::size_t r = rank;
        for (unsigned i = m; i-- > 0;) {
            f[i] = static_cast<unsigned>(r % p);
            r /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p))
            return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

} // namespace detail

/// Immutable descriptor of GF(p^m) with precomputed addition and log/antilog tables.
class Field {
public:
    /// Builds GF(p^m). Throws std::invalid_argument for non-prime p, m == 0 or q above max_order.
    Field(unsigned p, unsigned m, unsigned max_order = kDefaultMaxFieldOrder)
        : p_(p), m_(m)
    {
        if (!detail::is_prime(p))
            throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (m == 0)
            throw std::invalid_argument("extension degree must be at least 1");
        unsigned long long q = 1;
        for (unsigned i = 0; i < m; ++i) {
            q *= p;
            if (q > max_order || q > 256)
                throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(m) +
                                            " exceeds bound " + std::to_string(max_order));
        }
        q_ = static_cast<unsigned>(q);
        irr_ = detail::smallest_irreducible(p, m);
        build_tables();
        Elem prim = 0;
        for (unsigned a = 1; a < q_; ++a) {
            if (order_of(static_cast<Elem>(a)) == q_ - 1) {
                prim = static_cast<Elem>(a);
                break;
            }
        }
        set_primitive(prim);
    }

    unsigned p() const { return p_; }
    unsigned m() const { return m_; }
    unsigned q() const { return q_; }
    /// Coefficients of the modulus, constant term first, monic.
    const std::vector<unsigned>& irreducible() const { return irr_; }
    Elem primitive() const { return prim_; }

    Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }

    Elem mul(Elem a, Elem b) const
    {
        if (a == 0 || b == 0)
            return 0;
        return exp_[log_[a] + log_[b]];
    }

    Elem inv(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }

    Elem div(Elem a, Elem b) const
    {
        if (b == 0)
            throw std::domain_error("division by zero");
        return mul(a, inv(b));
    }

    /// a^e; negative exponents require a != 0. pow(0, 0) == 1.
    Elem pow(Elem a, long long e) const
    {
        if (e == 0)
            return 1;
        if (a == 0) {
            if (e < 0)
                throw std::domain_error("negative power of zero");
            return 0;
        }
        const long long n = q_ - 1;
        long long t = (static_cast<long long>(log_[a]) * (e % n)) % n;
        if (t < 0)
            t += n;
        return exp_[t];
    }

    /// Discrete log base the primitive element; a must be nonzero.
    unsigned log(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("log of zero");
        return log_[a];
    }

    /// primitive^t for any integer t.
    Elem alpha_pow(long long t) const
    {
        const long long n = q_ - 1;
        long long r = t % n;
        if (r < 0)
            r += n;
        return exp_[r];
    }

    std::vector<Elem> elements() const
    {
        std::vector<Elem> out(q_);
        for (unsigned a = 0; a < q_; ++a)
            out[a] = static_cast<Elem>(a);
        return out;
    }

    /// Nonzero elements as primitive^0, primitive^1, ..., primitive^(q-2).
    std::vector<Elem> nonzero_elements() const
    {
        return std::vector<Elem>(exp_.begin(), exp_.begin() + (q_ - 1));
    }

    unsigned order_of(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("order of zero");
        Elem x = a;
        unsigned ord = 1;
        while (x != 1) {
            x = mul_slow(x, a);
            ++ord;
        }
        return ord;
    }

    std::vector<Elem> primitive_elements() const
    {
        std::vector<Elem> out;
        for (unsigned a = 1; a < q_; ++a)
            if (order_of(static_cast<Elem>(a)) == q_ - 1)
                out.push_back(static_cast<Elem>(a));
        return out;
    }

    /// Same field with another generator used as the primitive element.
    Field with_primitive(Elem prim) const
    {
        if (prim == 0 || prim >= q_ || order_of(prim) != q_ - 1)
            throw std::invalid_argument("element " + std::to_string(prim) + " is not primitive");
        Field f = *this;
        f.set_primitive(prim);
        return f;
    }

    /// Polynomial coefficients (base-p digits) of an encoded element.
    std::vector<unsigned> digits(Elem a) const
    {
        std::vector<unsigned> d(m_);
        unsigned v = a;
        for (unsigned i = 0; i < m_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    }

    friend bool operator==(const Field& a, const Field& b)
    {
        return a.p_ == b.p_ && a.m_ == b.m_ && a.prim_ == b.prim_;
    }

private:
    unsigned p_ = 0;
    unsigned m_ = 0;
    unsigned q_ = 0;
    std::vector<unsigned> irr_;
    Elem prim_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> neg_;
    std::vector<Elem> mul_;   // full table from polynomial arithmetic
    std::vector<Elem> exp_;   // length 2(q-1) so log sums need no reduction
    std::vector<unsigned> log_;

    Elem mul_slow(Elem a, Elem b) const { return mul_[a * q_ + b]; }

    Elem encode(const std::vector<unsigned>& d) const
    {
        unsigned v = 0;
        for (unsigned i = m_; i-- > 0;)
            v = v * p_ + d[i];
        return static_cast<Elem>(v);
    }

    void build_tables()
    {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        for (unsigned a = 0; a < q_; ++a) {
            const auto da = digits(static_cast<Elem>(a));
            std::vector<unsigned> dn(m_);
            for (unsigned i = 0; i < m_; ++i)
                dn[i] = (p_ - da[i]) % p_;
            neg_[a] = encode(dn);
            for (unsigned b = 0; b < q_; ++b) {
                const auto db = digits(static_cast<Elem>(b));
                std::vector<unsigned> s(m_);
                for (unsigned i = 0; i < m_; ++i)
                    s[i] = (da[i] + db[i]) % p_;
                add_[a * q_ + b] = encode(s);

                detail::Poly prod(2 * m_, 0);
                for (unsigned i = 0; i < m_; ++i)
                    for (unsigned j = 0; j < m_; ++j)
                        prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
                detail::Poly r = detail::poly_mod(prod, irr_, p_);
                r.resize(m_, 0);
                mul_[a * q_ + b] = encode(r);
            }
        }
    }

    void set_primitive(Elem prim)
    {
        prim_ = prim;
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        Elem x = 1;
        for (unsigned t = 0; t < q_ - 1; ++t) {
            exp_[t] = x;
            exp_[t + q_ - 1] = x;
            log_[x] = t;
            x = mul_slow(x, prim);
        }
    }
};

/// GF(p^m) with the default irreducible polynomial and primitive element.
inline Field make_field(unsigned p, unsigned m, unsigned max_order = kDefaultMaxFieldOrder)
{
    return Field(p, m, max_order);
}

/// GF(q) for a prime power q.
inline Field make_field_of_order(unsigned q, unsigned max_order = kDefaultMaxFieldOrder)
{
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0)
            continue;
        unsigned m = 0;
        unsigned r = q;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r != 1)
            break;
        return Field(p, m, max_order);
    }
    throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

} // namespace simplexgraph
