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

#include "pufecc/gf.hpp"

#include <algorithm>
#include <string>

#include "pufecc/error.hpp"

namespace pufecc {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ZeroInverse: return "ZeroInverse";
        case ErrorCode::InvalidField: return "InvalidField";
        case ErrorCode::InvalidCode: return "InvalidCode";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::ForneyDivideByZero: return "ForneyDivideByZero";
        case ErrorCode::ReconstructFailed: return "ReconstructFailed";
        case ErrorCode::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorCode::SpecInvalid: return "SpecInvalid";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace pufecc

namespace pufecc::gf {

std::uint32_t default_reduction_poly(unsigned m) noexcept {
    switch (m) {
        case 4: return kDefaultPoly4;
        case 8: return kDefaultPoly8;
        default: return 0;
    }
}

GFContext::GFContext(unsigned m, std::uint32_t reduction_poly) : m_(m), poly_(reduction_poly) {
    if (m < 2 || m > kMaxBits) {
        throw Error(ErrorCode::InvalidField, "field width m=" + std::to_string(m) + " outside [2, 16]");
    }
    if ((reduction_poly >> m) != 1) {
        throw Error(ErrorCode::InvalidField,
                    "reduction polynomial must have degree exactly m=" + std::to_string(m));
    }

    const std::uint32_t n = order();
    log_.assign(size(), 0);
    antilog_.assign(2 * static_cast<std::size_t>(n), 0);

    // Walk the powers of x; primitive iff 1 does not reappear before step n.
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (i > 0 && x == 1) {
            throw Error(ErrorCode::InvalidField, "reduction polynomial is not primitive");
        }
        antilog_[i] = static_cast<Element>(x);
        log_[x] = i;
        x <<= 1;
        if (x & size()) x ^= reduction_poly;
    }
    if (x != 1) {
        throw Error(ErrorCode::InvalidField, "reduction polynomial is not primitive");
    }
    std::copy_n(antilog_.begin(), n, antilog_.begin() + n);
}

Element GFContext::inv(Element a) const {
    if (a == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
    return antilog_[(order() - log_[a]) % order()];
}

Element GFContext::div(Element a, Element b) const {
    if (b == 0) throw Error(ErrorCode::ZeroInverse, "division by zero");
    if (a == 0) return 0;
    return antilog_[log_[a] + order() - log_[b]];
}

Element GFContext::pow(Element a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw Error(ErrorCode::ZeroInverse, "negative power of zero");
        return 0;
    }
    const long long n = order();
    long long r = (static_cast<long long>(log_[a]) * (e % n)) % n;
    if (r < 0) r += n;
    return antilog_[static_cast<std::size_t>(r)];
}

Element GFContext::alpha_pow(long long e) const noexcept {
    const long long n = order();
    long long r = e % n;
    if (r < 0) r += n;
    return antilog_[static_cast<std::size_t>(r)];
}

GFPoly GFPoly::monomial(Element c, int degree) {
    if (c == 0 || degree < 0) return {};
    std::vector<Element> v(static_cast<std::size_t>(degree) + 1, 0);
    v.back() = c;
    return GFPoly(std::move(v));
}

Element poly_eval(const GFContext& f, const GFPoly& p, Element x) noexcept {
    Element acc = 0;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.mul(acc, x) ^ *it;
    return acc;
}

GFPoly poly_add(const GFPoly& a, const GFPoly& b) {
    const auto& big = a.degree() >= b.degree() ? a : b;
    const auto& small = a.degree() >= b.degree() ? b : a;
    std::vector<Element> out(big.coeffs().begin(), big.coeffs().end());
    for (std::size_t i = 0; i < small.coeffs().size(); ++i) out[i] ^= small.coeffs()[i];
    return GFPoly(std::move(out));
}

GFPoly poly_scale(const GFContext& f, const GFPoly& p, Element c) {
    std::vector<Element> out(p.coeffs().begin(), p.coeffs().end());
    for (auto& v : out) v = f.mul(v, c);
    return GFPoly(std::move(out));
}

GFPoly poly_mul(const GFContext& f, const GFPoly& a, const GFPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Element> out(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            out[i + j] ^= f.mul(a.coeffs()[i], b.coeffs()[j]);
        }
    }
    return GFPoly(std::move(out));
}

std::pair<GFPoly, GFPoly> poly_divmod(const GFContext& f, const GFPoly& a, const GFPoly& d) {
    if (d.is_zero()) throw Error(ErrorCode::ZeroInverse, "polynomial division by zero");
    if (a.degree() < d.degree()) return {GFPoly{}, a};

    std::vector<Element> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Element> quo(static_cast<std::size_t>(a.degree() - d.degree()) + 1, 0);
    const Element lead_inv = f.inv(d.leading());
    const auto dc = d.coeffs();
    for (int i = a.degree(); i >= d.degree(); --i) {
        const Element top = rem[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        const Element q = f.mul(top, lead_inv);
        const auto shift = static_cast<std::size_t>(i - d.degree());
        quo[shift] = q;
        for (std::size_t j = 0; j < dc.size(); ++j) rem[shift + j] ^= f.mul(q, dc[j]);
    }
    rem.resize(static_cast<std::size_t>(d.degree()));
    return {GFPoly(std::move(quo)), GFPoly(std::move(rem))};
}

GFPoly poly_mod(const GFContext& f, const GFPoly& a, const GFPoly& d) {
    return poly_divmod(f, a, d).second;
}

GFPoly poly_truncate(const GFPoly& p, int n) {
    if (n <= 0) return {};
    const auto keep = std::min<std::size_t>(p.coeffs().size(), static_cast<std::size_t>(n));
    return GFPoly(std::vector<Element>(p.coeffs().begin(), p.coeffs().begin() + keep));
}

GFPoly poly_formal_derivative(const GFPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<Element> out(static_cast<std::size_t>(p.degree()), 0);
    for (std::size_t j = 0; j < out.size(); j += 2) out[j] = p[j + 1];
    return GFPoly(std::move(out));
}

}  // namespace pufecc::gf
