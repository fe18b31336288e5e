#pragma once

#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "normalmt/errors.hpp"
#include "normalmt/periodic.hpp"
#include "normalmt/point2.hpp"

namespace nmt {

// Analytic closed planar curve. eval/derivative accept any real parameter
// (the parametrization is periodic); arclength and its inverse act on the
// universal cover, so arclength(u + U) = arclength(u) + L and
// param_of_arclength(s + L) = param_of_arclength(s) + U.
//
// Instances are immutable after construction and safe to share; the lazy
// arc-length table is built under a once_flag.
class Curve {
public:
    virtual ~Curve() = default;

    virtual Point2 eval(double u) const = 0;
    virtual Point2 derivative(double u) const = 0;
    virtual Point2 second_derivative(double u) const = 0;
    virtual double param_period() const = 0;

    double total_length() const;
    virtual double arclength(double u) const;
    virtual double param_of_arclength(double s) const;

protected:
    // Samples |c'| over a full period and rejects non-regular curves.
    void validate_regular() const;

private:
    void ensure_tables() const;

    mutable std::once_flag tables_once_;
    mutable std::vector<double> prefix_;  // arc length at the table knots
    mutable double cell_ = 0.0;
    mutable double length_ = 0.0;
};

class Circle final : public Curve {
public:
    Circle(Point2 center, double radius);
    Point2 eval(double u) const override;
    Point2 derivative(double u) const override;
    Point2 second_derivative(double u) const override;
    double param_period() const override;
    double arclength(double u) const override { return radius_ * u; }
    double param_of_arclength(double s) const override { return s / radius_; }
    Point2 center() const { return center_; }
    double radius() const { return radius_; }

private:
    Point2 center_;
    double radius_;
};

class Ellipse final : public Curve {
public:
    Ellipse(Point2 center, double a, double b);
    Point2 eval(double u) const override;
    Point2 derivative(double u) const override;
    Point2 second_derivative(double u) const override;
    double param_period() const override;
    Point2 center() const { return center_; }
    double a() const { return a_; }
    double b() const { return b_; }

private:
    Point2 center_;
    double a_, b_;
};

// x(u) = sum_k cx[k] cos(ku) + sx[k] sin(ku), same for y; lets tests build
// non-convex shapes.
class TrigCurve final : public Curve {
public:
    TrigCurve(std::vector<double> cx, std::vector<double> sx,
              std::vector<double> cy, std::vector<double> sy);
    Point2 eval(double u) const override;
    Point2 derivative(double u) const override;
    Point2 second_derivative(double u) const override;
    double param_period() const override;
    const std::vector<double>& cx() const { return cx_; }
    const std::vector<double>& sx() const { return sx_; }
    const std::vector<double>& cy() const { return cy_; }
    const std::vector<double>& sy() const { return sy_; }

private:
    std::vector<double> cx_, sx_, cy_, sy_;
};

struct Ray {
    Point2 origin;
    Point2 direction;  // unit length
};

struct RayHit {
    double u = 0.0;  // curve parameter of the intersection
    double t = 0.0;  // signed distance along the ray direction
    bool tangency = false;
};

// All intersections of the line through `ray` with the curve for parameters
// in [u_lo, u_hi] (width below one period). Each root is refined until
// |(c(u) - origin) . perp(direction)| <= 1e-13 * L. Throws NoIntersection
// when the bracket contains no root.
std::vector<RayHit> intersect_ray(const Curve& c, const Ray& ray, double u_lo, double u_hi,
                                  int samples = 128);

// Unit tangent and frame normal perp(tangent) at arc length s.
std::pair<Point2, Point2> frame_at(const Curve& c, double s);

// Initial data for a transform run: points on the curve, their arc lengths
// (stride L), and their curve parameters.
struct CurveSample {
    PeriodicSequence<Point2> points;
    PeriodicSequence<double> arclengths;
    std::vector<double> params;
};

// Arc lengths s_i = pi*(x + x^2) on the grid x = i*h; the irregular sample
// used by the unit-circle decay experiments. 1/h must be a positive integer.
CurveSample initial_sample_quadratic(const Curve& c, double h);

// n points uniform in the curve parameter.
CurveSample initial_sample_uniform(const Curve& c, int n);

// Explicit arc-length list; must increase strictly within one period.
CurveSample initial_sample_arclengths(const Curve& c, std::vector<double> s);

}  // namespace nmt
