#include "normalmt/scheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "normalmt/errors.hpp"

namespace nmt {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::map<int, Rational> shift_offsets(const std::map<int, Rational>& st, int by) {
    std::map<int, Rational> out;
    for (const auto& [k, c] : st) out.emplace(k + by, c);
    return out;
}

Rational stencil_sum(const std::map<int, Rational>& st) {
    Rational s(0);
    for (const auto& [k, c] : st) s += c;
    return s;
}

// Rewrites sum_k b[k] x_{i+k} with sum(b) = 0 as sum_k c[k] (x_{i+k+1}-x_{i+k});
// c[k] = -(partial sum of b up to k).
std::map<int, Rational> as_difference_stencil(const std::map<int, Rational>& b) {
    if (!stencil_sum(b).is_zero())
        throw NoDerivedScheme("difference system inconsistent: stencil does not annihilate constants");
    std::map<int, Rational> c;
    Rational partial(0);
    for (const auto& [k, coeff] : b) {
        partial += coeff;
        if (!partial.is_zero()) c[k] = -partial;
    }
    return c;
}

}  // namespace

int Scheme::min_offset() const {
    int m = even.empty() ? 0 : even.begin()->first;
    if (!odd.empty()) m = std::min(m, odd.begin()->first);
    return m;
}

int Scheme::max_offset() const {
    int m = even.empty() ? 0 : even.rbegin()->first;
    if (!odd.empty()) m = std::max(m, odd.rbegin()->first);
    return m;
}

Scheme lr_scheme(int p) {
    if (p < 0) throw ConfigError("lr_scheme: degree must be >= 0");
    Scheme s;
    s.even = {{0, Rational(1)}};
    s.odd = {{0, Rational(1)}};
    const Rational half(1, 2);
    for (int q = 1; q <= p; ++q) {
        // (S_q x)_i = ((S_{q-1} x)_i + (S_{q-1} x)_{i+1}) / 2, split by parity.
        std::map<int, Rational> even_next, odd_next;
        for (const auto& [k, c] : s.even) even_next[k] += c * half;
        for (const auto& [k, c] : s.odd) even_next[k] += c * half;
        for (const auto& [k, c] : s.odd) odd_next[k] += c * half;
        for (const auto& [k, c] : s.even) odd_next[k + 1] += c * half;
        s.even = std::move(even_next);
        s.odd = std::move(odd_next);
    }
    if (p >= 1) s.shift = Rational(p - 1, 4);
    s.label = "LR:p=" + std::to_string(p);
    return s;
}

Scheme dd_scheme(int points) {
    if (points < 4 || points % 2 != 0)
        throw ConfigError("dd_scheme: point count must be even and >= 4");
    const int n = points / 2;
    Scheme s;
    s.even = {{0, Rational(1)}};
    // Lagrange weights of the nodes -(n-1)..n at the midpoint 1/2.
    for (int k = -(n - 1); k <= n; ++k) {
        Rational w(1);
        for (int m = -(n - 1); m <= n; ++m) {
            if (m == k) continue;
            w *= Rational(1 - 2 * m, 2 * (k - m));
        }
        s.odd[k] = w;
    }
    s.shift = Rational(0);
    s.label = "DD:2n=" + std::to_string(points);
    return s;
}

Scheme reindex(const Scheme& s, int m) {
    if (m == 0) return s;
    Scheme out;
    if (m % 2 == 0) {
        const int r = m / 2;
        out.even = shift_offsets(s.even, -r);
        out.odd = shift_offsets(s.odd, -r);
    } else {
        // (S'x)_{2i} = (Sx)_{2(i-(m+1)/2)+1}, (S'x)_{2i+1} = (Sx)_{2(i-(m-1)/2)}.
        const int r = (m + 1) / 2;
        out.even = shift_offsets(s.odd, -r);
        out.odd = shift_offsets(s.even, -(r - 1));
    }
    if (s.shift) out.shift = *s.shift - Rational(m, 2);
    out.label = s.label;
    return out;
}

Scheme center(const Scheme& s) {
    if (!s.shift) throw NonCenterable("center: scheme has no shift parameter");
    const Rational c = *s.shift;
    const Rational two_c = c * Rational(2);
    int m = 0;
    if (two_c.is_integer()) {
        m = static_cast<int>(two_c.num());  // target shift 0
    } else {
        const Rational m_dual = two_c - Rational(1, 2);  // target shift 1/4
        if (!m_dual.is_integer())
            throw NonCenterable("center: no integer re-index reaches shift 0 or 1/4 from " + c.str());
        m = static_cast<int>(m_dual.num());
    }
    if (m == 0) return s;
    Scheme out = reindex(s, m);
    out.label = "centered(" + s.label + ")";
    return out;
}

Scheme derived(const Scheme& s) {
    // Delta(Sx)_{2i} = sum_k (odd[k]-even[k]) x_{i+k}
    // Delta(Sx)_{2i+1} = sum_k (even[k-1]-odd[k]) x_{i+k}
    std::map<int, Rational> b_even, b_odd;
    for (const auto& [k, c] : s.odd) b_even[k] += c;
    for (const auto& [k, c] : s.even) b_even[k] -= c;
    for (const auto& [k, c] : s.even) b_odd[k + 1] += c;
    for (const auto& [k, c] : s.odd) b_odd[k] -= c;
    Scheme out;
    out.even = as_difference_stencil(b_even);
    out.odd = as_difference_stencil(b_odd);
    out.label = "derived(" + s.label + ")";
    return out;
}

Rational apply_exact_at(const Scheme& s, long long K,
                        const std::function<Rational(long long)>& sample) {
    const long long i = floor_div(K, 2);
    const auto& stencil = (K % 2 == 0) ? s.even : s.odd;
    Rational acc(0);
    for (const auto& [k, c] : stencil) acc += c * sample(i + k);
    return acc;
}

Rational shift_of(const Scheme& s) {
    const auto ramp = [](long long i) { return Rational(i); };
    const int span = s.width() + 4;
    std::optional<Rational> c;
    for (long long K = -2 * span; K <= 2 * span; ++K) {
        const Rational image = apply_exact_at(s, K, ramp);
        const Rational cK = image - Rational(K, 2);
        if (!c) {
            c = cK;
        } else if (cK != *c) {
            throw NotExactlyLinear("shift_of: ramp image is not affine with slope 1/2");
        }
    }
    return *c;
}

ReproductionReport reproduction_report(const Scheme& s, int degree) {
    if (degree < 0) throw ConfigError("reproduction_report: degree must be >= 0");
    Rational c(0);
    if (degree >= 1) {
        if (s.shift) {
            c = *s.shift;
        } else {
            try {
                c = shift_of(s);
            } catch (const NotExactlyLinear&) {
                throw FitFailure("reproduction_report: image of linear samples is not polynomial");
            }
        }
    }

    const auto sample = [degree](long long i) {
        Rational v(1);
        for (int k = 0; k < degree; ++k) v *= Rational(i);
        return v;
    };

    // Interpolate through degree+1 image values, then demand the polynomial
    // matches everywhere a stencil width away in both directions and parities.
    std::vector<std::pair<Rational, Rational>> pts;
    for (long long K = 0; K <= degree; ++K)
        pts.emplace_back(Rational(K), apply_exact_at(s, K, sample));
    const RationalPoly q = poly_interpolate(pts);

    const int span = 2 * (s.width() + degree + 4);
    for (long long K = -span; K <= span; ++K) {
        if (poly_eval(q, Rational(K)) != apply_exact_at(s, K, sample))
            throw FitFailure("reproduction_report: image is not a single polynomial in the index");
    }

    // Substitute K = 2(t - c) to express the image over the shifted half-grid.
    RationalPoly in_t = poly_compose_affine(q, Rational(2), -c * Rational(2));
    RationalPoly target(static_cast<size_t>(degree) + 1, Rational(0));
    target[degree] = Rational(1);
    RationalPoly residual = poly_sub(in_t, target);
    if (poly_degree(residual) >= degree && degree > 0)
        throw FitFailure("reproduction_report: residual degree not below probe degree");

    ReproductionReport rep;
    rep.degree = degree;
    rep.residual = residual;
    rep.exact = residual.empty();
    return rep;
}

Scheme parse_scheme_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        const std::string arg = spec.substr(colon + 1);
        try {
            if (kind == "lr") return lr_scheme(std::stoi(arg));
            if (kind == "dd") return dd_scheme(std::stoi(arg));
        } catch (const std::logic_error&) {
            // fall through to the ConfigError below
        }
    }
    throw ConfigError("unknown scheme spec '" + spec + "' (expected lr:<p> or dd:<2n>)");
}

}  // namespace nmt
