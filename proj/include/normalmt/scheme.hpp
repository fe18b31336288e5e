#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "normalmt/polynomial.hpp"
#include "normalmt/rational.hpp"

namespace nmt {

// A stationary binary subdivision operator given by its even/odd stencils:
//   (Sx)_{2i}   = sum_k even[k] * x_{i+k}
//   (Sx)_{2i+1} = sum_k odd[k]  * x_{i+k}
// Stencils are offset -> coefficient maps so masks with negative entries and
// positive B-spline masks share one representation. Immutable after
// construction; safe to share across threads.
struct Scheme {
    std::map<int, Rational> even;
    std::map<int, Rational> odd;
    // Half-grid offset of the image of linear samples; absent when the
    // operator does not reproduce linears exactly (e.g. derived schemes).
    std::optional<Rational> shift;
    std::string label;

    int min_offset() const;
    int max_offset() const;
    // Number of coarse points the widest stencil touches.
    int width() const { return max_offset() - min_offset() + 1; }
    // Total number of mask coefficients across both stencils.
    int mask_size() const { return static_cast<int>(even.size() + odd.size()); }

    bool same_stencils(const Scheme& o) const { return even == o.even && odd == o.odd; }
};

// Degree-p B-spline scheme from the duplicate-then-average recursion, kept in
// the recursion's own right-shifted indexing. shift = (p-1)/4 for p >= 1.
Scheme lr_scheme(int p);

// 2n-point interpolatory Deslauriers-Dubuc scheme; `points` must be even and
// >= 4. Odd stencil = Lagrange weights of 2n consecutive nodes at their
// midpoint; even stencil is the identity; shift = 0.
Scheme dd_scheme(int points);

// Re-index by an integer: (S'x)_K = (Sx)_{K-m}. Changes shift by -m/2.
Scheme reindex(const Scheme& s, int m);

// Re-index so the shift lands in {0, 1/4}. Throws NonCenterable when no
// integer re-index reaches either target.
Scheme center(const Scheme& s);

// The operator S^[1] with Delta(Sx) = S^[1](Delta x); throws NoDerivedScheme
// when the difference system is inconsistent (constants not reproduced).
Scheme derived(const Scheme& s);

// Measures the shift on the integer ramp x_i = i; the image must equal
// K/2 + c for a single rational c, otherwise NotExactlyLinear.
Rational shift_of(const Scheme& s);

// Exact image value at index K for sampled data x_i = sample(i).
Rational apply_exact_at(const Scheme& s, long long K,
                        const std::function<Rational(long long)>& sample);

// Result of probing polynomial reproduction at one degree: the image of
// (t^n)|_Z equals (t^n + residual)|_{Z/2 + shift}. `exact` means the residual
// vanishes identically.
struct ReproductionReport {
    int degree = 0;
    RationalPoly residual;
    bool exact = false;
};

ReproductionReport reproduction_report(const Scheme& s, int degree);

// Parses the scheme mini-language: "lr:<p>" or "dd:<2n>".
Scheme parse_scheme_spec(const std::string& spec);

}  // namespace nmt
