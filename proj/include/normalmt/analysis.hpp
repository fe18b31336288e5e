#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normalmt/transform.hpp"

namespace nmt {

struct DecayRow {
    int j = 0;
    double norm = 0.0;
    double order_cumulative = 0.0;  // -log2(norm)/j
    double order_ratio = 0.0;       // log2(norm_{prev}/norm); first row measured from 1
};

struct DecayTable {
    std::vector<DecayRow> rows;
};

// Builds the table from (level, sup-norm) pairs. The first row's ratio is
// taken relative to a unit norm so the cumulative column telescopes exactly.
DecayTable make_decay_table(const std::vector<std::pair<int, double>>& norms);

// Per-level sup norms of the stored details.
DecayTable detail_decay(const Decomposition& dec);

// Per-level sup norms of the arc-length offsets (diagnostics required).
DecayTable omega_decay(const Decomposition& dec);

// Per-level sup norms of the n-th forward differences of the arc-length
// sequences, 1 <= n <= 4.
DecayTable difference_norms(const std::vector<PeriodicSequence<double>>& s_levels, int n);

// Least-squares slope of log2(norm) against j over the last `window` rows,
// negated. Needs at least two rows in the window.
double fit_order(const DecayTable& table, int window);

struct NormalAccuracyReport {
    std::vector<std::pair<int, double>> per_level;  // max_K |xi_K - s_K|
    double fitted_order = 0.0;
};

// Recovers, per fine index, the arc parameter xi where the curve tangent is
// parallel to the averaged difference that generated the normal, and reports
// max |xi - s| per level. diagnostics required; fit window as in fit_order.
NormalAccuracyReport normal_accuracy(const Decomposition& dec, const Curve& curve,
                                     int fit_window = 4);

// One row of the decay-order experiment on the unit circle.
struct ExperimentRow {
    std::string label;
    std::vector<double> order_cumulative;  // j = 1..levels
};

// Decomposes the quadratic sample s = pi*(x + x^2) on the unit circle.
Decomposition decompose_unit_circle_quadratic(double h, int p, const std::string& normal_spec,
                                              const std::optional<std::string>& tangential_spec,
                                              int levels);

// The six combined runs (p = 3, 5, 7 for h = 0.01 and 0.1), ten levels each,
// reported as cumulative detail-decay orders.
std::vector<ExperimentRow> detail_decay_experiment(int levels = 10);

}  // namespace nmt
