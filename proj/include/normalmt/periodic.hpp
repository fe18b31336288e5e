#pragma once

#include <cstddef>
#include <vector>

#include "normalmt/errors.hpp"
#include "normalmt/point2.hpp"
#include "normalmt/scheme.hpp"

namespace nmt {

// One period of data at dyadic level `level`. Index arithmetic is mod N with
// a per-period stride: arc-length sequences carry stride L (s_{i+N} = s_i + L),
// closed point data carries stride zero.
template <typename T>
struct PeriodicSequence {
    std::vector<T> values;
    int level = 0;
    T stride{};

    long long period() const { return static_cast<long long>(values.size()); }

    T at(long long i) const {
        const long long N = period();
        long long q = i / N;
        long long r = i % N;
        if (r < 0) {
            r += N;
            --q;
        }
        return values[static_cast<size_t>(r)] + stride * static_cast<double>(q);
    }
};

template <typename T>
PeriodicSequence<T> diff(const PeriodicSequence<T>& x) {
    PeriodicSequence<T> out;
    out.level = x.level;
    out.values.reserve(x.values.size());
    for (long long i = 0; i < x.period(); ++i) out.values.push_back(x.at(i + 1) - x.at(i));
    return out;  // differences of a strided sequence are purely periodic
}

// One refinement step: output has period 2N at level+1, same stride.
template <typename T>
PeriodicSequence<T> apply(const Scheme& s, const PeriodicSequence<T>& x) {
    const long long N = x.period();
    if (N < s.width())
        throw PeriodTooSmall("apply: period " + std::to_string(N) + " below stencil width " +
                             std::to_string(s.width()));
    PeriodicSequence<T> out;
    out.level = x.level + 1;
    out.stride = x.stride;
    out.values.resize(static_cast<size_t>(2 * N));
    for (long long i = 0; i < N; ++i) {
        T even_acc{};
        for (const auto& [k, c] : s.even) even_acc += x.at(i + k) * c.to_double();
        T odd_acc{};
        for (const auto& [k, c] : s.odd) odd_acc += x.at(i + k) * c.to_double();
        out.values[static_cast<size_t>(2 * i)] = even_acc;
        out.values[static_cast<size_t>(2 * i + 1)] = odd_acc;
    }
    return out;
}

inline double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double inf_norm(const std::vector<Point2>& v) {
    double m = 0.0;
    for (Point2 p : v) m = std::max(m, norm(p));
    return m;
}

}  // namespace nmt
