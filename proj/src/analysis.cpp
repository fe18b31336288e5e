#include "normalmt/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "normalmt/rootfind.hpp"

namespace nmt {

DecayTable make_decay_table(const std::vector<std::pair<int, double>>& norms) {
    DecayTable table;
    double prev = 1.0;
    for (const auto& [j, norm] : norms) {
        if (!(norm > 0.0)) throw std::invalid_argument("decay table needs positive norms");
        DecayRow row;
        row.j = j;
        row.norm = norm;
        row.order_cumulative = j != 0 ? -std::log2(norm) / j : 0.0;
        row.order_ratio = std::log2(prev / norm);
        prev = norm;
        table.rows.push_back(row);
    }
    return table;
}

DecayTable detail_decay(const Decomposition& dec) {
    if (dec.details.empty()) throw std::invalid_argument("decomposition has no detail levels");
    std::vector<std::pair<int, double>> norms;
    for (size_t j = 0; j < dec.details.size(); ++j)
        norms.emplace_back(static_cast<int>(j + 1), inf_norm(dec.details[j]));
    return make_decay_table(norms);
}

DecayTable omega_decay(const Decomposition& dec) {
    if (dec.offset_levels.empty())
        throw std::invalid_argument("offset diagnostics missing (curve-backed run required)");
    std::vector<std::pair<int, double>> norms;
    for (size_t j = 0; j < dec.offset_levels.size(); ++j)
        norms.emplace_back(static_cast<int>(j + 1), inf_norm(dec.offset_levels[j]));
    return make_decay_table(norms);
}

DecayTable difference_norms(const std::vector<PeriodicSequence<double>>& s_levels, int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("difference order must be in 1..4");
    if (s_levels.empty())
        throw std::invalid_argument("arc-length diagnostics missing");
    std::vector<std::pair<int, double>> norms;
    for (const auto& s : s_levels) {
        PeriodicSequence<double> d = s;
        for (int k = 0; k < n; ++k) d = diff(d);
        norms.emplace_back(s.level, inf_norm(d.values));
    }
    return make_decay_table(norms);
}

double fit_order(const DecayTable& table, int window) {
    const int total = static_cast<int>(table.rows.size());
    const int use = std::min(window, total);
    if (use < 2) throw std::invalid_argument("fit window needs at least 2 rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int k = total - use; k < total; ++k) {
        const double x = table.rows[static_cast<size_t>(k)].j;
        const double y = std::log2(table.rows[static_cast<size_t>(k)].norm);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = use * sxx - sx * sx;
    return -(use * sxy - sx * sy) / denom;
}

NormalAccuracyReport normal_accuracy(const Decomposition& dec, const Curve& curve,
                                     int fit_window) {
    if (!dec.has_diagnostics() || dec.param_levels.empty())
        throw std::invalid_argument("normal accuracy needs curve-backed diagnostics");
    const ResolvedSchemes schemes = resolve(dec.config);
    const double U = curve.param_period();
    const double L = curve.total_length();
    const int w = dec.config.effective_window();

    NormalAccuracyReport report;
    std::vector<std::pair<int, double>> norms;
    for (size_t j = 1; j < dec.arclen_levels.size(); ++j) {
        const PeriodicSequence<Point2>& coarse = dec.point_levels[j - 1];
        const std::vector<double>& coarse_params = dec.param_levels[j - 1];
        const PeriodicSequence<double>& fine_s = dec.arclen_levels[j];
        const long long N = coarse.period();

        const PeriodicSequence<Point2> avg = apply(schemes.normal_gen, diff(coarse));

        const auto param_at = [&](long long i) {
            long long q = i / N;
            long long r = i % N;
            if (r < 0) {
                r += N;
                --q;
            }
            return coarse_params[static_cast<size_t>(r)] + U * static_cast<double>(q);
        };

        double worst = 0.0;
        for (long long K = 0; K < 2 * N; ++K) {
            const Point2 dir = avg.values[static_cast<size_t>(K)];
            const long long i = K >= 0 ? K / 2 : -((-K + 1) / 2);
            const long long lo_half = std::min<long long>(w + 1, (N - 1) / 2);
            const long long hi_half = std::min<long long>(w + 1, (N - 1) - lo_half);
            const double u_lo = param_at(i - lo_half);
            const double u_hi = param_at(i + hi_half);

            // Tangent parallel to dir with matching orientation.
            const auto f = [&](double u) { return cross(curve.derivative(u), dir); };
            const auto df = [&](double u) { return cross(curve.second_derivative(u), dir); };
            const int scan = static_cast<int>(std::min<long long>(10 * (lo_half + hi_half) + 8, 4096));
            const auto roots = find_roots(f, df, u_lo, u_hi, scan, 1e-13 * L);

            const double sK = fine_s.values[static_cast<size_t>(K)];
            bool found = false;
            double best = 0.0;
            for (const RootHit& r : roots) {
                if (dot(curve.derivative(r.x), dir) <= 0.0) continue;
                const double xi = curve.arclength(r.x);
                if (!found || std::abs(xi - sK) < std::abs(best - sK)) {
                    best = xi;
                    found = true;
                }
            }
            if (!found)
                throw NoIntersection("no matching tangent direction inside the window",
                                     static_cast<int>(j), K);
            worst = std::max(worst, std::abs(best - sK));
        }
        norms.emplace_back(static_cast<int>(j), worst);
    }

    report.per_level = norms;
    report.fitted_order = fit_order(make_decay_table(norms), fit_window);
    return report;
}

Decomposition decompose_unit_circle_quadratic(double h, int p, const std::string& normal_spec,
                                              const std::optional<std::string>& tangential_spec,
                                              int levels) {
    const Circle circle({0.0, 0.0}, 1.0);
    const CurveSample sample = initial_sample_quadratic(circle, h);
    TransformConfig config;
    config.p = p;
    config.normal_spec = normal_spec;
    config.tangential_spec = tangential_spec;
    config.levels = levels;
    return decompose(circle, sample, config);
}

std::vector<ExperimentRow> detail_decay_experiment(int levels) {
    std::vector<ExperimentRow> rows;
    for (int p : {3, 5, 7}) {
        const std::string normal = "lr:" + std::to_string(p - 2);
        const std::string tangential = "dd:" + std::to_string(p + 1);
        for (double h : {0.01, 0.1}) {
            Decomposition dec =
                decompose_unit_circle_quadratic(h, p, normal, tangential, levels);
            if (dec.failure)
                throw std::runtime_error("experiment run failed at level " +
                                         std::to_string(dec.failure->level));
            const DecayTable table = detail_decay(dec);
            ExperimentRow row;
            row.label = "(S" + std::to_string(p) + ",S" + std::to_string(p - 2) + ",T" +
                        std::to_string(p) + "),h=" + (h == 0.01 ? std::string("0.01")
                                                               : std::string("0.1"));
            for (const DecayRow& r : table.rows) row.order_cumulative.push_back(r.order_cumulative);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace nmt
