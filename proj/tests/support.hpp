#pragma once

#include <complex>
#include <random>

#include "rcanon/instance.hpp"

namespace testing {

using namespace rcanon;

inline Scalar random_quaternion(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    return {n(rng), n(rng), n(rng), n(rng)};
}

inline Mat mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
    Mat m(rows.size(), rows.size() ? rows.begin()->size() : 0);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const auto& x : row)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

inline double dist(const Mat& x, const Mat& y) { return (x - y).norm(); }

inline Complex root_value(int k, int m) { return std::polar(1.0, 2.0 * 3.14159265358979323846 * k / m); }

inline MatrixPair make_pair(const Mat& a, const Mat& f, CaseTag c) {
    MatrixPair p;
    p.a = a;
    p.f = f;
    p.context = context_of(c);
    return p;
}

} // namespace testing
