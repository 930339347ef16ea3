/*
 * Copyright 2026 The pufecc Authors
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
 */

#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace pufecc::gf {

/// Field element of GF(2^m); bit i is the coefficient of x^i.
using Element = std::uint16_t;

inline constexpr unsigned kMaxBits = 16;
inline constexpr std::uint32_t kDefaultPoly4 = 0x13;   // x^4 + x + 1
inline constexpr std::uint32_t kDefaultPoly8 = 0x11D;  // x^8 + x^4 + x^3 + x^2 + 1

/// Default primitive polynomial for the supported widths, 0 if none is shipped.
std::uint32_t default_reduction_poly(unsigned m) noexcept;

/**
 * GF(2^m) with log/antilog tables.
 *
 * Construction rejects any reduction polynomial that is not primitive, i.e.
 * for which x does not generate the full multiplicative group. The context is
 * immutable afterwards and may be shared freely between threads.
 */
class GFContext {
public:
    GFContext(unsigned m, std::uint32_t reduction_poly);

    unsigned bits() const noexcept { return m_; }
    std::uint32_t reduction_poly() const noexcept { return poly_; }
    /// Number of field elements, 2^m.
    std::uint32_t size() const noexcept { return std::uint32_t{1} << m_; }
    /// Multiplicative group order, 2^m - 1.
    std::uint32_t order() const noexcept { return size() - 1; }

    Element add(Element a, Element b) const noexcept { return a ^ b; }

    Element mul(Element a, Element b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return antilog_[log_[a] + log_[b]];
    }

    /// Throws Error(ZeroInverse) on a == 0.
    Element inv(Element a) const;
    /// a / b; throws Error(ZeroInverse) on b == 0.
    Element div(Element a, Element b) const;
    Element pow(Element a, long long e) const;

    /// alpha^e for any integer e (reduced modulo the group order).
    Element alpha_pow(long long e) const noexcept;
    /// Discrete log base alpha; precondition a != 0.
    std::uint32_t log(Element a) const noexcept { return log_[a]; }

    std::span<const std::uint32_t> log_table() const noexcept { return log_; }
    /// antilog_table()[i] == alpha^i for 0 <= i < order().
    std::span<const Element> antilog_table() const noexcept {
        return {antilog_.data(), order()};
    }

    bool operator==(const GFContext& other) const noexcept {
        return m_ == other.m_ && poly_ == other.poly_;
    }

private:
    unsigned m_;
    std::uint32_t poly_;
    std::vector<std::uint32_t> log_;
    // Doubled so mul() never reduces the exponent sum.
    std::vector<Element> antilog_;
};

/// Polynomial over GF(2^m), lowest-degree coefficient first, always normalized.
class GFPoly {
public:
    GFPoly() = default;
    GFPoly(std::initializer_list<Element> coeffs) : coeffs_(coeffs) { normalize(); }
    explicit GFPoly(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static GFPoly constant(Element c) { return GFPoly{c}; }
    /// c * x^degree
    static GFPoly monomial(Element c, int degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^i, zero beyond the degree.
    Element operator[](std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : Element{0};
    }
    Element leading() const noexcept { return coeffs_.empty() ? Element{0} : coeffs_.back(); }
    std::span<const Element> coeffs() const noexcept { return coeffs_; }

    bool operator==(const GFPoly&) const = default;

private:
    void normalize() noexcept {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Element> coeffs_;
};

Element poly_eval(const GFContext& f, const GFPoly& p, Element x) noexcept;
GFPoly poly_add(const GFPoly& a, const GFPoly& b);
GFPoly poly_scale(const GFContext& f, const GFPoly& p, Element c);
GFPoly poly_mul(const GFContext& f, const GFPoly& a, const GFPoly& b);
/// Quotient and remainder; throws Error(ZeroInverse) when the divisor is zero.
std::pair<GFPoly, GFPoly> poly_divmod(const GFContext& f, const GFPoly& a, const GFPoly& d);
GFPoly poly_mod(const GFContext& f, const GFPoly& a, const GFPoly& d);
/// Keeps the terms of degree < n.
GFPoly poly_truncate(const GFPoly& p, int n);
/// Characteristic 2: only odd-degree terms survive, shifted down by one.
GFPoly poly_formal_derivative(const GFPoly& p);

}  // namespace pufecc::gf
