#pragma once

#include <utility>
#include <vector>

#include "normalmt/rational.hpp"

namespace nmt {

// Dense rational polynomial, coeffs[k] is the coefficient of t^k.
using RationalPoly = std::vector<Rational>;

inline RationalPoly poly_trim(RationalPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

inline int poly_degree(const RationalPoly& p) { return static_cast<int>(p.size()) - 1; }

inline bool poly_is_zero(const RationalPoly& p) { return poly_trim(p).empty(); }

inline Rational poly_eval(const RationalPoly& p, const Rational& t) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
    return acc;
}

inline RationalPoly poly_sub(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly out(std::max(a.size(), b.size()), Rational(0));
    for (size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
    return poly_trim(std::move(out));
}

// p(a*t + b), expanded by Horner over the coefficient list.
inline RationalPoly poly_compose_affine(const RationalPoly& p, const Rational& a, const Rational& b) {
    RationalPoly acc;  // starts as the zero polynomial
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        RationalPoly next(acc.size() + 1, Rational(0));
        for (size_t k = 0; k < acc.size(); ++k) {
            next[k + 1] += acc[k] * a;
            next[k] += acc[k] * b;
        }
        if (next.empty()) next.push_back(Rational(0));
        next[0] += *it;
        acc = poly_trim(std::move(next));
    }
    return acc;
}

// Newton interpolation through distinct rational nodes.
inline RationalPoly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& pts) {
    const size_t n = pts.size();
    std::vector<Rational> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
    for (size_t level = 1; level < n; ++level)
        for (size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - level].first);

    // Expand the Newton form back to the monomial basis.
    RationalPoly out;
    for (size_t i = n; i-- > 0;) {
        RationalPoly next(out.size() + 1, Rational(0));
        for (size_t k = 0; k < out.size(); ++k) {
            next[k + 1] += out[k];
            next[k] -= out[k] * pts[i].first;
        }
        if (next.empty()) next.push_back(Rational(0));
        next[0] += dd[i];
        out = poly_trim(std::move(next));
    }
    return out;
}

}  // namespace nmt
