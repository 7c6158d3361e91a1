#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "characteristic.hpp"
#include "siegel_point.hpp"

namespace siegeltheta {

/// Deterministic sampler: doubles are built from the raw 64-bit stream so
/// the values are identical across standard library implementations.
class sampler {
public:
    explicit sampler(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }
    int uniform_int(int a, int b) { // inclusive
        return a + static_cast<int>(eng_() % static_cast<std::uint64_t>(b - a + 1));
    }

    // Rejection-sampled Siegel point: symmetric imaginary part with
    // eigenvalues inside [0.8, 2.5], real entries in [-0.5, 0.5]. Keeps the
    // theta truncation radii small.
    siegel_point siegel(int g) {
        for (;;) {
            rmatrix im(g, g);
            for (int i = 0; i < g; ++i) {
                im(i, i) = uniform(0.8, 2.5);
                for (int j = i + 1; j < g; ++j) im(i, j) = im(j, i) = uniform(-0.5, 0.5);
            }
            Eigen::SelfAdjointEigenSolver<rmatrix> es(im, Eigen::EigenvaluesOnly);
            if (es.eigenvalues().minCoeff() < 0.8 || es.eigenvalues().maxCoeff() > 2.5) continue;
            cmatrix tau(g, g);
            for (int i = 0; i < g; ++i) {
                tau(i, i) = complex_t{uniform(-0.5, 0.5), im(i, i)};
                for (int j = i + 1; j < g; ++j) {
                    tau(i, j) = complex_t{uniform(-0.5, 0.5), im(i, j)};
                    tau(j, i) = tau(i, j);
                }
            }
            return siegel_point(tau);
        }
    }

    characteristic rational_characteristic(int g, int max_den) {
        std::vector<rational> a, b;
        for (int i = 0; i < g; ++i) {
            const int d1 = uniform_int(1, max_den), d2 = uniform_int(1, max_den);
            a.emplace_back(uniform_int(0, d1 - 1), d1);
            b.emplace_back(uniform_int(0, d2 - 1), d2);
        }
        return characteristic(std::move(a), std::move(b));
    }

    cvector complex_vector(int g, double box_re, double box_im) {
        cvector z(g);
        for (int i = 0; i < g; ++i)
            z(i) = complex_t{uniform(-box_re, box_re), uniform(-box_im, box_im)};
        return z;
    }

private:
    std::mt19937_64 eng_;
};

} // namespace siegeltheta
