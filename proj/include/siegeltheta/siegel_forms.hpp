#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "certified.hpp"
#include "characteristic.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "modular_g1.hpp"
#include "siegel_point.hpp"
#include "theta.hpp"

namespace siegeltheta {

using imatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer symplectic matrix in block form (A, B; C, D); the symplectic
/// relations are checked exactly in integer arithmetic.
class symplectic_element {
public:
    symplectic_element(imatrix A, imatrix B, imatrix C, imatrix D)
        : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)) {
        const Eigen::Index g = A_.rows();
        auto square = [g](const imatrix& m) { return m.rows() == g && m.cols() == g; };
        if (g < 1 || !square(A_) || !square(B_) || !square(C_) || !square(D_))
            throw std::invalid_argument("symplectic_element: blocks must be g x g");
        const imatrix tAC = A_.transpose() * C_;
        const imatrix tBD = B_.transpose() * D_;
        const imatrix tAD_tCB = A_.transpose() * D_ - C_.transpose() * B_;
        if (tAC != imatrix(tAC.transpose()) || tBD != imatrix(tBD.transpose()) ||
            tAD_tCB != imatrix(imatrix::Identity(g, g)))
            throw std::invalid_argument("symplectic_element: symplectic relations fail");
    }

    int genus() const { return static_cast<int>(A_.rows()); }
    const imatrix& A() const { return A_; }
    const imatrix& B() const { return B_; }
    const imatrix& C() const { return C_; }
    const imatrix& D() const { return D_; }

    // diag(tA C) and diag(tB D) both even
    bool in_gamma12() const {
        const imatrix tAC = A_.transpose() * C_;
        const imatrix tBD = B_.transpose() * D_;
        for (Eigen::Index i = 0; i < A_.rows(); ++i)
            if ((tAC(i, i) % 2 + 2) % 2 != 0 || (tBD(i, i) % 2 + 2) % 2 != 0) return false;
        return true;
    }

    symplectic_element operator*(const symplectic_element& o) const {
        return symplectic_element(A_ * o.A_ + B_ * o.C_, A_ * o.B_ + B_ * o.D_,
                                  C_ * o.A_ + D_ * o.C_, C_ * o.B_ + D_ * o.D_);
    }

    static symplectic_element identity(int g) {
        return symplectic_element(imatrix::Identity(g, g), imatrix::Zero(g, g),
                                  imatrix::Zero(g, g), imatrix::Identity(g, g));
    }
    // (0, -I; I, 0)
    static symplectic_element inversion(int g) {
        return symplectic_element(imatrix::Zero(g, g), -imatrix::Identity(g, g),
                                  imatrix::Identity(g, g), imatrix::Zero(g, g));
    }
    // (I, B; 0, I) with symmetric integer B
    static symplectic_element translation(const imatrix& B) {
        const Eigen::Index g = B.rows();
        if (B != imatrix(B.transpose()))
            throw std::invalid_argument("translation: B must be symmetric");
        return symplectic_element(imatrix::Identity(g, g), B, imatrix::Zero(g, g),
                                  imatrix::Identity(g, g));
    }
    // Elementary symmetric matrices: E_ii and E_ij + E_ji.
    static std::vector<symplectic_element> standard_generators(int g) {
        std::vector<symplectic_element> gens;
        gens.push_back(inversion(g));
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j) {
                imatrix B = imatrix::Zero(g, g);
                B(i, j) = 1;
                B(j, i) = 1;
                gens.push_back(translation(B));
            }
        return gens;
    }

private:
    imatrix A_, B_, C_, D_;
};

inline complex_t j_factor(const siegel_point& tau, const symplectic_element& gamma) {
    const cmatrix cz = gamma.C().cast<double>().cast<complex_t>();
    const cmatrix dz = gamma.D().cast<double>().cast<complex_t>();
    return (cz * tau.tau() + dz).determinant();
}

/// gamma . (z, tau) = (t(C tau + D)^{-1} z, (A tau + B)(C tau + D)^{-1});
/// the transformed tau is symmetrized against round-off and re-validated.
inline std::pair<cvector, siegel_point> sympl_act(const symplectic_element& gamma,
                                                  const cvector& z, const siegel_point& tau) {
    const int g = tau.genus();
    if (gamma.genus() != g || z.size() != g)
        throw std::invalid_argument("sympl_act: genus mismatch");
    const cmatrix az = gamma.A().cast<double>().cast<complex_t>();
    const cmatrix bz = gamma.B().cast<double>().cast<complex_t>();
    const cmatrix cz = gamma.C().cast<double>().cast<complex_t>();
    const cmatrix dz = gamma.D().cast<double>().cast<complex_t>();
    const cmatrix f = cz * tau.tau() + dz;
    Eigen::PartialPivLU<cmatrix> lu(f);
    if (std::abs(lu.determinant()) < 1e-12)
        throw singular_factor("sympl_act: det(C tau + D) is numerically singular");
    const cmatrix tau_out = (az * tau.tau() + bz) * lu.inverse();
    const cvector z_out = f.transpose().partialPivLu().solve(z);
    return {z_out, siegel_point::symmetrized(tau_out)};
}

inline siegel_point sympl_act_tau(const symplectic_element& gamma, const siegel_point& tau) {
    return sympl_act(gamma, cvector::Zero(tau.genus()), tau).second;
}

/// chi_g: product of all even theta constants of genus g.
inline certified_complex chi_g(int g, const siegel_point& tau, const truncation_spec& spec = {}) {
    if (tau.genus() != g) throw wrong_genus("chi_g: tau has the wrong genus");
    const cvector z0 = cvector::Zero(g);
    certified_complex prod(complex_t{1.0, 0.0});
    for (const auto& ch : even_characteristics(g)) prod = prod * theta(ch, z0, tau, spec);
    return prod;
}

/// (det Im tau)^weight |value|^2.
inline double petersson_norm_sq(complex_t value, double weight, const siegel_point& tau) {
    return std::pow(tau.det_im(), weight) * std::norm(value);
}

struct delta_g_value {
    certified_complex value;
    // false for g = 3: the overall constant is not pinned, only ratios of
    // values are meaningful.
    bool exact_constant = true;
};

/// The normalized cusp form vanishing on the locus of singular theta
/// divisors: exactly c2 * chi_2 for g = 2, chi_3 up to an undetermined
/// constant for g = 3.
inline delta_g_value delta_g_normalized(int g, const siegel_point& tau,
                                        const truncation_spec& spec = {}) {
    if (g == 2) return {chi_g(2, tau, spec) * constants::c2(), true};
    if (g == 3) return {chi_g(3, tau, spec), false};
    throw unsupported_genus("delta_g_normalized: g must be 2 or 3");
}

} // namespace siegeltheta
