#pragma once

#include <Eigen/Dense>
#include <complex>

#include "errors.hpp"

namespace siegeltheta {

using cmatrix = Eigen::MatrixXcd;
using cvector = Eigen::VectorXcd;
using rmatrix = Eigen::MatrixXd;

/// A point of the Siegel upper half space: a symmetric complex g x g matrix
/// whose imaginary part is positive definite. Symmetry must hold exactly as
/// stored; definiteness is decided by the smallest eigenvalue of Im(tau)
/// against the pivot tolerance 1e-12 * max|Im tau|.
class siegel_point {
public:
    explicit siegel_point(cmatrix tau) : tau_(std::move(tau)) {
        if (tau_.rows() != tau_.cols() || tau_.rows() < 1)
            throw std::invalid_argument("siegel_point: tau must be square and nonempty");
        const Eigen::Index g = tau_.rows();
        for (Eigen::Index i = 0; i < g; ++i)
            for (Eigen::Index j = i + 1; j < g; ++j)
                if (tau_(i, j) != tau_(j, i))
                    throw std::invalid_argument("siegel_point: tau must be exactly symmetric");
        const rmatrix im = tau_.imag();
        Eigen::SelfAdjointEigenSolver<rmatrix> es(im, Eigen::EigenvaluesOnly);
        lambda_min_ = es.eigenvalues().minCoeff();
        const double pivot_tol = 1e-12 * im.cwiseAbs().maxCoeff();
        if (!(lambda_min_ > pivot_tol))
            throw non_positive_definite("siegel_point: Im(tau) is not positive definite");
    }

    // Genus-1 convenience.
    explicit siegel_point(std::complex<double> tau1)
        : siegel_point(cmatrix::Constant(1, 1, tau1)) {}

    // Averages tau with its transpose before validating; absorbs round-off
    // asymmetry from matrix arithmetic.
    static siegel_point symmetrized(const cmatrix& tau) {
        return siegel_point(((tau + tau.transpose()) / 2.0).eval());
    }

    int genus() const { return static_cast<int>(tau_.rows()); }
    const cmatrix& tau() const { return tau_; }
    rmatrix im() const { return tau_.imag(); }
    double lambda_min() const { return lambda_min_; }
    double det_im() const { return tau_.imag().determinant(); }

    std::complex<double> scalar() const {
        if (genus() != 1) throw wrong_genus("scalar: genus must be 1");
        return tau_(0, 0);
    }

private:
    cmatrix tau_;
    double lambda_min_;
};

// [[tau, t], [t, tau]]: the family that pinches an abelian surface into a
// product of two copies of the same elliptic curve as t -> 0.
inline siegel_point offdiagonal_family(std::complex<double> tau, std::complex<double> t) {
    cmatrix m(2, 2);
    m(0, 0) = tau; m(1, 1) = tau;
    m(0, 1) = t;   m(1, 0) = t;
    return siegel_point(m);
}

inline siegel_point diag2(std::complex<double> tau1, std::complex<double> tau2) {
    cmatrix m = cmatrix::Zero(2, 2);
    m(0, 0) = tau1; m(1, 1) = tau2;
    return siegel_point(m);
}

} // namespace siegeltheta
