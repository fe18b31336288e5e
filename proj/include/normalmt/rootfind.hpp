#pragma once

#include <functional>
#include <vector>

namespace nmt {

struct RootHit {
    double x = 0.0;
    bool tangency = false;
};

// All roots of f inside [lo, hi]: a uniform scan for sign changes, bisection
// on each bracket, then a Newton polish kept inside the bracket. A scan point
// where |f| already sits below f_tol counts as a root; a bracket whose both
// ends are that small is reported once at the midpoint, flagged as tangency.
std::vector<RootHit> find_roots(const std::function<double(double)>& f,
                                const std::function<double(double)>& df,
                                double lo, double hi, int samples, double f_tol);

}  // namespace nmt
