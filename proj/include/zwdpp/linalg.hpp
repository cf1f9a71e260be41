#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace zwdpp {

// Determinant by LU with partial pivoting; m is row-major n*n, consumed.
inline double det_inplace(std::vector<double>& m, std::size_t n) {
    double det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::fabs(m[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            double v = std::fabs(m[i * n + k]);
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            det = -det;
        }
        double d = m[k * n + k];
        det *= d;
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = m[i * n + k] / d;
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
        }
    }
    return det;
}

inline double det_copy(const std::vector<double>& m, std::size_t n) {
    std::vector<double> work(m);
    return det_inplace(work, n);
}

}  // namespace zwdpp
