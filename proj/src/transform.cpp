#include "normalmt/transform.hpp"

#include <algorithm>
#include <cmath>

namespace nmt {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

bool support_contained(const Scheme& inner, const Scheme& outer) {
    const auto contained = [](const std::map<int, Rational>& a, const std::map<int, Rational>& b) {
        for (const auto& [k, c] : a)
            if (!c.is_zero() && !b.count(k)) return false;
        return true;
    };
    return contained(inner.even, outer.even) && contained(inner.odd, outer.odd);
}

void check_normal_scheme(const Scheme& n) {
    Rational even_sum(0), odd_sum(0);
    for (const auto& [k, c] : n.even) {
        if (!c.is_positive()) throw ConfigError("normal scheme must have a positive mask");
        even_sum += c;
    }
    for (const auto& [k, c] : n.odd) {
        if (!c.is_positive()) throw ConfigError("normal scheme must have a positive mask");
        odd_sum += c;
    }
    if (even_sum != Rational(1) || odd_sum != Rational(1))
        throw ConfigError("normal scheme must reproduce constants");
}

// Coarse index window [lo, hi] for fine index K, clamped so the arc bracket
// stays inside one period.
std::pair<long long, long long> coarse_window(long long K, long long N, int w) {
    const long long i = floor_div(K, 2);
    const long long lo_half = std::min<long long>(w + 1, (N - 1) / 2);
    const long long hi_half = std::min<long long>(w + 1, (N - 1) - lo_half);
    return {i - lo_half, i + hi_half};
}

PeriodicSequence<Point2> apply_details(const PeriodicSequence<Point2>& prediction,
                                       const NormalField& nf, const std::vector<double>& d) {
    PeriodicSequence<Point2> out = prediction;
    for (size_t k = 0; k < out.values.size(); ++k)
        out.values[k] = prediction.values[k] + nf.dir[k] * d[k];
    return out;
}

}  // namespace

ResolvedSchemes resolve(const TransformConfig& config) {
    if (config.p < 2) throw ConfigError("predictor degree must be >= 2");
    if (config.levels < 0) throw ConfigError("level count must be >= 0");
    if (config.effective_window() < 1) throw ConfigError("window half-width must be >= 1");

    ResolvedSchemes out;
    out.predictor = lr_scheme(config.p);
    out.normal_gen = parse_scheme_spec(config.effective_normal_spec());
    check_normal_scheme(out.normal_gen);

    if (config.combined()) {
        Scheme t = parse_scheme_spec(*config.tangential_spec);
        const Scheme predictor_raw = out.predictor;
        out.predictor = center(predictor_raw);
        const Rational shift_change = *predictor_raw.shift - *out.predictor.shift;
        const int m = static_cast<int>((shift_change * Rational(2)).num());
        out.normal_gen = reindex(out.normal_gen, m);
        out.tangential = center(t);
        if (*out.tangential->shift != *out.predictor.shift)
            throw ConfigError("combined mode needs matching centered shifts, got " +
                              out.predictor.shift->str() + " vs " + out.tangential->shift->str());
    }

    out.normal_support_ok = support_contained(out.normal_gen, derived(out.predictor));
    return out;
}

NormalField normals(const Scheme& nscheme, const PeriodicSequence<Point2>& v) {
    check_normal_scheme(nscheme);
    const PeriodicSequence<Point2> dv = diff(v);
    const PeriodicSequence<Point2> w = apply(nscheme, dv);

    double max_gap = 0.0;
    for (const Point2& g : dv.values) max_gap = std::max(max_gap, norm(g));

    NormalField nf;
    nf.level = v.level + 1;
    nf.dir.reserve(w.values.size());
    nf.base.reserve(w.values.size());
    for (long long K = 0; K < w.period(); ++K) {
        const Point2 wk = w.values[static_cast<size_t>(K)];
        const double len = norm(wk);
        if (len < 1e-14 * max_gap)
            throw DegenerateDifference("averaged difference vanished", nf.level, K);
        nf.dir.push_back(rotate_cw(wk) / len);
        nf.base.push_back(floor_div(K, 2));
    }
    return nf;
}

PeriodicSequence<Point2> predict(const ResolvedSchemes& schemes,
                                 const PeriodicSequence<Point2>& v, const NormalField& nf) {
    PeriodicSequence<Point2> sv = apply(schemes.predictor, v);
    if (!schemes.tangential) return sv;
    const PeriodicSequence<Point2> tv = apply(*schemes.tangential, v);
    for (size_t k = 0; k < sv.values.size(); ++k) {
        const Point2 n = nf.dir[k];
        sv.values[k] += n * dot(tv.values[k] - sv.values[k], n);
    }
    return sv;
}

RefineResult refine(const Curve& curve, const PeriodicSequence<Point2>& v,
                    const PeriodicSequence<double>& s, const std::vector<double>& params,
                    const ResolvedSchemes& schemes, const TransformConfig& config) {
    const long long N = v.period();
    const double L = curve.total_length();
    const double U = curve.param_period();
    const int level = v.level + 1;

    const NormalField nf = normals(schemes.normal_gen, v);
    const PeriodicSequence<Point2> prediction = predict(schemes, v, nf);
    const PeriodicSequence<double> sp = apply(schemes.predictor, s);

    // Curve parameters on the cover, for bracketing without re-inverting s.
    const auto param_at = [&](long long i) {
        const long long q = floor_div(i, N);
        return params[static_cast<size_t>(i - q * N)] + U * static_cast<double>(q);
    };

    RefineResult out;
    out.details.resize(static_cast<size_t>(2 * N));
    out.offsets.resize(static_cast<size_t>(2 * N));
    out.params.resize(static_cast<size_t>(2 * N));
    out.arclengths.values.resize(static_cast<size_t>(2 * N));
    out.arclengths.level = level;
    out.arclengths.stride = L;

    for (long long K = 0; K < 2 * N; ++K) {
        const auto [lo, hi] = coarse_window(K, N, config.effective_window());
        const double u_lo = param_at(lo);
        const double u_hi = param_at(hi);
        const int scan = static_cast<int>(std::min<long long>(10 * (hi - lo) + 8, 4096));

        const Ray ray{prediction.values[static_cast<size_t>(K)], nf.dir[static_cast<size_t>(K)]};
        std::vector<RayHit> hits;
        try {
            hits = intersect_ray(curve, ray, u_lo, u_hi, scan);
        } catch (const NoIntersection&) {
            throw NoIntersection("normal line misses the curve inside the coarse window",
                                 level, K);
        }

        const RayHit* best = &hits.front();
        for (const RayHit& h : hits)
            if (std::abs(h.t) < std::abs(best->t)) best = &h;
        for (const RayHit& h : hits)
            if (&h != best && std::abs(std::abs(h.t) - std::abs(best->t)) <=
                                  1e-9 * (1.0 + std::abs(best->t)))
                ++out.ambiguous_roots;

        out.details[static_cast<size_t>(K)] = best->t;
        out.params[static_cast<size_t>(K)] = best->u;
        out.arclengths.values[static_cast<size_t>(K)] = curve.arclength(best->u);
        out.offsets[static_cast<size_t>(K)] =
            out.arclengths.values[static_cast<size_t>(K)] - sp.values[static_cast<size_t>(K)];
    }

    for (long long K = 0; K < 2 * N; ++K) {
        if (!(out.arclengths.at(K + 1) > out.arclengths.at(K)))
            throw MonotonicityViolation("refined arc lengths are not strictly increasing",
                                        level, K);
    }

    out.points = apply_details(prediction, nf, out.details);
    out.points.level = level;
    return out;
}

Decomposition decompose(const Curve& curve, const CurveSample& sample,
                        const TransformConfig& config) {
    const ResolvedSchemes schemes = resolve(config);
    const long long min_points = (config.p + 1) / 2 + 1;
    if (sample.points.period() < min_points)
        throw ConfigError("initial data needs at least " + std::to_string(min_points) +
                          " distinct points for degree " + std::to_string(config.p));

    Decomposition dec;
    dec.config = config;
    dec.base_points = sample.points;
    dec.point_levels.push_back(sample.points);
    dec.arclen_levels.push_back(sample.arclengths);
    dec.param_levels.push_back(sample.params);

    PeriodicSequence<Point2> v = sample.points;
    PeriodicSequence<double> s = sample.arclengths;
    std::vector<double> params = sample.params;

    for (int j = 1; j <= config.levels; ++j) {
        try {
            RefineResult r = refine(curve, v, s, params, schemes, config);
            dec.details.push_back(std::move(r.details));
            dec.offset_levels.push_back(std::move(r.offsets));
            dec.point_levels.push_back(r.points);
            dec.arclen_levels.push_back(r.arclengths);
            dec.param_levels.push_back(r.params);
            dec.ambiguous_roots += r.ambiguous_roots;
            v = std::move(r.points);
            s = std::move(r.arclengths);
            params = std::move(r.params);
        } catch (const NoIntersection& e) {
            dec.failure = DecompositionFailure{"no_intersection", e.level, e.index};
            break;
        } catch (const MonotonicityViolation& e) {
            dec.failure = DecompositionFailure{"monotonicity_violation", e.level, e.index};
            break;
        } catch (const DegenerateDifference& e) {
            dec.failure = DecompositionFailure{"degenerate_difference", e.level, e.index};
            break;
        }
    }
    return dec;
}

PeriodicSequence<Point2> reconstruct(const Decomposition& dec) {
    const ResolvedSchemes schemes = resolve(dec.config);
    PeriodicSequence<Point2> v = dec.base_points;
    for (const auto& d : dec.details) {
        const NormalField nf = normals(schemes.normal_gen, v);
        const PeriodicSequence<Point2> prediction = predict(schemes, v, nf);
        PeriodicSequence<Point2> next = apply_details(prediction, nf, d);
        next.level = v.level + 1;
        v = std::move(next);
    }
    return v;
}

}  // namespace nmt
