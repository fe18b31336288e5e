#include "normalmt/curve.hpp"

#include <algorithm>
#include <cmath>

#include "normalmt/rootfind.hpp"

namespace nmt {

namespace {

constexpr double kQuadTol = 1e-12;
constexpr int kTableCells = 1024;

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= 48)
        throw QuadratureNonConvergence("adaptive Simpson did not reach tolerance");
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace

void Curve::ensure_tables() const {
    std::call_once(tables_once_, [this] {
        const double U = param_period();
        cell_ = U / kTableCells;
        const auto speed = [this](double u) { return norm(derivative(u)); };
        prefix_.assign(kTableCells + 1, 0.0);
        for (int i = 0; i < kTableCells; ++i) {
            const double piece =
                adaptive_simpson(speed, i * cell_, (i + 1) * cell_, kQuadTol / kTableCells);
            prefix_[i + 1] = prefix_[i] + piece;
        }
        length_ = prefix_.back();
    });
}

double Curve::total_length() const {
    // Circle overrides arclength but not the table; arclength(U) is exact there too.
    return arclength(param_period()) - arclength(0.0);
}

double Curve::arclength(double u) const {
    ensure_tables();
    const double U = param_period();
    const double wind = std::floor(u / U);
    const double u0 = u - wind * U;
    int cell = std::min(static_cast<int>(u0 / cell_), kTableCells - 1);
    const auto speed = [this](double t) { return norm(derivative(t)); };
    const double rest = adaptive_simpson(speed, cell * cell_, u0, kQuadTol);
    return wind * length_ + prefix_[cell] + rest;
}

double Curve::param_of_arclength(double s) const {
    ensure_tables();
    const double U = param_period();
    const double wind = std::floor(s / length_);
    const double s0 = s - wind * length_;
    // Bracket from the table, then Newton with bisection fallback.
    const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), s0);
    int cell = std::max(0, static_cast<int>(it - prefix_.begin()) - 1);
    cell = std::min(cell, kTableCells - 1);
    double lo = cell * cell_, hi = (cell + 1) * cell_;
    double u = lo + (hi - lo) * (s0 - prefix_[cell]) /
                        std::max(prefix_[cell + 1] - prefix_[cell], 1e-300);
    for (int it2 = 0; it2 < 100; ++it2) {
        const double g = arclength(u) - s0;
        if (std::abs(g) <= 1e-13 * std::max(1.0, length_)) break;
        if (g > 0.0) hi = u; else lo = u;
        const double speed = norm(derivative(u));
        double next = u - g / speed;
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        u = next;
    }
    return wind * U + u;
}

void Curve::validate_regular() const {
    const double U = param_period();
    for (int i = 0; i < 512; ++i) {
        if (norm(derivative(i * U / 512.0)) <= 1e-12)
            throw ConfigError("curve is not regular: |c'(u)| vanishes");
    }
}

Circle::Circle(Point2 center, double radius) : center_(center), radius_(radius) {
    if (!(radius > 0.0)) throw ConfigError("circle radius must be positive");
}
Point2 Circle::eval(double u) const {
    return {center_.x + radius_ * std::cos(u), center_.y + radius_ * std::sin(u)};
}
Point2 Circle::derivative(double u) const {
    return {-radius_ * std::sin(u), radius_ * std::cos(u)};
}
Point2 Circle::second_derivative(double u) const {
    return {-radius_ * std::cos(u), -radius_ * std::sin(u)};
}
double Circle::param_period() const { return 2.0 * M_PI; }

Ellipse::Ellipse(Point2 center, double a, double b) : center_(center), a_(a), b_(b) {
    if (!(a > 0.0) || !(b > 0.0)) throw ConfigError("ellipse semi-axes must be positive");
    validate_regular();
}
Point2 Ellipse::eval(double u) const {
    return {center_.x + a_ * std::cos(u), center_.y + b_ * std::sin(u)};
}
Point2 Ellipse::derivative(double u) const { return {-a_ * std::sin(u), b_ * std::cos(u)}; }
Point2 Ellipse::second_derivative(double u) const { return {-a_ * std::cos(u), -b_ * std::sin(u)}; }
double Ellipse::param_period() const { return 2.0 * M_PI; }

TrigCurve::TrigCurve(std::vector<double> cx, std::vector<double> sx,
                     std::vector<double> cy, std::vector<double> sy)
    : cx_(std::move(cx)), sx_(std::move(sx)), cy_(std::move(cy)), sy_(std::move(sy)) {
    validate_regular();
}
Point2 TrigCurve::eval(double u) const {
    Point2 p{0.0, 0.0};
    for (size_t k = 0; k < cx_.size(); ++k) p.x += cx_[k] * std::cos(k * u);
    for (size_t k = 0; k < sx_.size(); ++k) p.x += sx_[k] * std::sin(k * u);
    for (size_t k = 0; k < cy_.size(); ++k) p.y += cy_[k] * std::cos(k * u);
    for (size_t k = 0; k < sy_.size(); ++k) p.y += sy_[k] * std::sin(k * u);
    return p;
}
Point2 TrigCurve::derivative(double u) const {
    Point2 p{0.0, 0.0};
    for (size_t k = 0; k < cx_.size(); ++k) p.x -= k * cx_[k] * std::sin(k * u);
    for (size_t k = 0; k < sx_.size(); ++k) p.x += k * sx_[k] * std::cos(k * u);
    for (size_t k = 0; k < cy_.size(); ++k) p.y -= k * cy_[k] * std::sin(k * u);
    for (size_t k = 0; k < sy_.size(); ++k) p.y += k * sy_[k] * std::cos(k * u);
    return p;
}
Point2 TrigCurve::second_derivative(double u) const {
    Point2 p{0.0, 0.0};
    for (size_t k = 0; k < cx_.size(); ++k) p.x -= k * k * cx_[k] * std::cos(k * u);
    for (size_t k = 0; k < sx_.size(); ++k) p.x -= k * k * sx_[k] * std::sin(k * u);
    for (size_t k = 0; k < cy_.size(); ++k) p.y -= k * k * cy_[k] * std::cos(k * u);
    for (size_t k = 0; k < sy_.size(); ++k) p.y -= k * k * sy_[k] * std::sin(k * u);
    return p;
}
double TrigCurve::param_period() const { return 2.0 * M_PI; }

std::vector<RayHit> intersect_ray(const Curve& c, const Ray& ray, double u_lo, double u_hi,
                                  int samples) {
    const double L = c.total_length();
    const Point2 side = perp(ray.direction);
    const auto f = [&](double u) { return dot(c.eval(u) - ray.origin, side); };
    const auto df = [&](double u) { return dot(c.derivative(u), side); };
    const auto roots = find_roots(f, df, u_lo, u_hi, samples, 1e-13 * L);
    if (roots.empty())
        throw NoIntersection("line misses the curve inside the bracket");
    std::vector<RayHit> hits;
    hits.reserve(roots.size());
    for (const RootHit& r : roots)
        hits.push_back({r.x, dot(c.eval(r.x) - ray.origin, ray.direction), r.tangency});
    return hits;
}

std::pair<Point2, Point2> frame_at(const Curve& c, double s) {
    const double u = c.param_of_arclength(s);
    const Point2 tangent = normalized(c.derivative(u));
    return {tangent, perp(tangent)};
}

namespace {

CurveSample make_sample(const Curve& c, std::vector<double> s) {
    const double L = c.total_length();
    for (size_t i = 0; i + 1 < s.size(); ++i) {
        if (!(s[i] < s[i + 1]))
            throw NotMonotone("arc lengths must increase strictly within one period");
    }
    if (!s.empty() && !(s.back() < s.front() + L))
        throw NotMonotone("arc-length range exceeds one period");

    CurveSample out;
    out.arclengths.values = s;
    out.arclengths.stride = L;
    out.points.values.reserve(s.size());
    out.params.reserve(s.size());
    for (double si : s) {
        const double u = c.param_of_arclength(si);
        out.params.push_back(u);
        out.points.values.push_back(c.eval(u));
    }

    // Signed area of the control polygon; the transform needs data running
    // counterclockwise.
    double area2 = 0.0;
    const auto& pts = out.points.values;
    for (size_t i = 0; i < pts.size(); ++i)
        area2 += cross(pts[i], pts[(i + 1) % pts.size()]);
    if (pts.size() >= 3 && !(area2 > 0.0))
        throw NotMonotone("sample polygon must traverse the curve counterclockwise");
    return out;
}

}  // namespace

CurveSample initial_sample_quadratic(const Curve& c, double h) {
    if (!(h > 0.0) || std::abs(1.0 / h - std::llround(1.0 / h)) > 1e-9)
        throw ConfigError("quadratic sample: 1/h must be a positive integer");
    const long long n = std::llround(1.0 / h);
    std::vector<double> s(static_cast<size_t>(n));
    for (long long i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) * h;
        s[static_cast<size_t>(i)] = M_PI * (x + x * x);
    }
    return make_sample(c, std::move(s));
}

CurveSample initial_sample_uniform(const Curve& c, int n) {
    if (n < 3) throw ConfigError("uniform sample needs at least 3 points");
    std::vector<double> s(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<size_t>(i)] = c.arclength(i * c.param_period() / n);
    return make_sample(c, std::move(s));
}

CurveSample initial_sample_arclengths(const Curve& c, std::vector<double> s) {
    return make_sample(c, std::move(s));
}

}  // namespace nmt
