#pragma once

#include <optional>
#include <string>
#include <vector>

#include "normalmt/curve.hpp"
#include "normalmt/periodic.hpp"
#include "normalmt/scheme.hpp"

namespace nmt {

// Run parameters for a normal multi-scale transform. `p` picks the B-spline
// predictor; the normal generator defaults to the B-spline scheme of degree
// p-2. A tangential scheme switches the prediction to combined mode, which
// requires both schemes to center to the same shift.
struct TransformConfig {
    int p = 3;
    std::string normal_spec;                    // empty -> "lr:<p-2>"
    std::optional<std::string> tangential_spec; // e.g. "dd:4"
    int levels = 1;
    int window = 0;                             // coarse half-width; 0 -> p+1
    double root_tol = 1e-13;

    bool combined() const { return tangential_spec.has_value(); }
    int effective_window() const { return window > 0 ? window : p + 1; }
    std::string effective_normal_spec() const {
        return normal_spec.empty() ? "lr:" + std::to_string(p - 2) : normal_spec;
    }
};

// The schemes actually applied per level. In combined mode the predictor and
// tangential scheme are centered and the normal generator is re-indexed by
// the same integer so it stays attached to the predictor's midpoint geometry.
struct ResolvedSchemes {
    Scheme predictor;
    Scheme normal_gen;
    std::optional<Scheme> tangential;
    bool normal_support_ok = true;  // supp(N) within supp of the derived predictor
};

// Validates the configuration and builds the level operators. Throws
// ConfigError on bad degrees, non-positive normal stencils, or shift mismatch.
ResolvedSchemes resolve(const TransformConfig& config);

// Unit directions n_K = rotate_cw((N Delta v)_K) / |...| for every fine index,
// plus the coarse base index governing each K. Outward for counterclockwise
// data, so details on convex curves come out positive.
struct NormalField {
    std::vector<Point2> dir;
    std::vector<long long> base;
    int level = 0;
};

NormalField normals(const Scheme& nscheme, const PeriodicSequence<Point2>& v);

// Pure mode: S v. Combined mode: the orthogonal projection of (T v)_K onto
// the normal line through (S v)_K.
PeriodicSequence<Point2> predict(const ResolvedSchemes& schemes,
                                 const PeriodicSequence<Point2>& v, const NormalField& nf);

struct RefineResult {
    PeriodicSequence<Point2> points;      // v^j, assembled as prediction + d*n
    PeriodicSequence<double> arclengths;  // s^j
    std::vector<double> params;           // curve parameters of the new points
    std::vector<double> details;          // d^j
    std::vector<double> offsets;          // w^j = s^j - (S s^{j-1})
    long long ambiguous_roots = 0;        // windows where |t| had a near-tie
};

// One level: predict, intersect each normal line with the curve inside the
// coarse arc window, keep the root with the smallest displacement.
RefineResult refine(const Curve& curve, const PeriodicSequence<Point2>& v,
                    const PeriodicSequence<double>& s, const std::vector<double>& params,
                    const ResolvedSchemes& schemes, const TransformConfig& config);

struct DecompositionFailure {
    std::string reason;
    int level = 0;
    long long index = -1;
};

// Multi-scale decomposition. `details` alone (with the config and base
// points) suffices for reconstruction; everything under "diagnostics" needs
// the curve and never feeds back into reconstruct.
struct Decomposition {
    TransformConfig config;
    PeriodicSequence<Point2> base_points;
    std::vector<std::vector<double>> details;

    // diagnostics
    std::vector<PeriodicSequence<Point2>> point_levels;   // v^0..v^J
    std::vector<PeriodicSequence<double>> arclen_levels;  // s^0..s^J
    std::vector<std::vector<double>> param_levels;        // curve parameters per level
    std::vector<std::vector<double>> offset_levels;       // w^1..w^J
    long long ambiguous_roots = 0;
    std::optional<DecompositionFailure> failure;

    bool has_diagnostics() const { return !arclen_levels.empty(); }
    int completed_levels() const { return static_cast<int>(details.size()); }
};

// Runs `config.levels` refinement steps. A well-posedness failure stops the
// run and is recorded on the returned partial decomposition instead of being
// thrown; configuration errors still throw.
Decomposition decompose(const Curve& curve, const CurveSample& sample,
                        const TransformConfig& config);

// Curve-free inverse: replays prediction + detail * normal from the base
// points. Uses only config, base_points and details.
PeriodicSequence<Point2> reconstruct(const Decomposition& dec);

}  // namespace nmt
