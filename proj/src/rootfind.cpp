#include "normalmt/rootfind.hpp"

#include <algorithm>
#include <cmath>

namespace nmt {

namespace {

double polish(const std::function<double(double)>& f, const std::function<double(double)>& df,
              double a, double b, double fa, double f_tol) {
    // Bisection until the bracket is tight, then Newton inside it.
    double x = 0.5 * (a + b);
    for (int it = 0; it < 80; ++it) {
        x = 0.5 * (a + b);
        const double fx = f(x);
        if (std::abs(fx) <= f_tol || (b - a) < 1e-15 * (1.0 + std::abs(x))) break;
        if ((fa < 0.0) == (fx < 0.0)) {
            a = x;
            fa = fx;
        } else {
            b = x;
        }
    }
    for (int it = 0; it < 12; ++it) {
        const double fx = f(x);
        if (std::abs(fx) <= f_tol) return x;
        const double d = df(x);
        if (d == 0.0) break;
        const double next = x - fx / d;
        if (next <= a || next >= b) break;  // keep the iterate bracketed
        if (next == x) return x;
        x = next;
    }
    return x;
}

}  // namespace

std::vector<RootHit> find_roots(const std::function<double(double)>& f,
                                const std::function<double(double)>& df,
                                double lo, double hi, int samples, double f_tol) {
    std::vector<RootHit> hits;
    samples = std::max(samples, 8);
    const double h = (hi - lo) / samples;

    double u_prev = lo;
    double f_prev = f(u_prev);
    bool prev_small = std::abs(f_prev) <= f_tol;
    if (prev_small) hits.push_back({u_prev, false});

    for (int k = 1; k <= samples; ++k) {
        const double u = (k == samples) ? hi : lo + k * h;
        const double fu = f(u);
        const bool small = std::abs(fu) <= f_tol;
        if (small && prev_small) {
            // Degenerate bracket: the function hugs zero across the cell.
            hits.back() = {0.5 * (u_prev + u), true};
        } else if (small) {
            hits.push_back({u, false});
        } else if (!prev_small && (f_prev < 0.0) != (fu < 0.0)) {
            hits.push_back({polish(f, df, u_prev, u, f_prev, f_tol), false});
        }
        u_prev = u;
        f_prev = fu;
        prev_small = small;
    }

    std::sort(hits.begin(), hits.end(), [](const RootHit& a, const RootHit& b) { return a.x < b.x; });
    std::vector<RootHit> out;
    for (const RootHit& r : hits) {
        if (!out.empty() && std::abs(r.x - out.back().x) <= 1e-9 * (hi - lo)) continue;
        out.push_back(r);
    }
    return out;
}

}  // namespace nmt
