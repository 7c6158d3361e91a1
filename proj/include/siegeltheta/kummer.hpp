#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "certified.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "siegel_forms.hpp"
#include "siegel_point.hpp"
#include "theta.hpp"

namespace siegeltheta {

using quad4 = std::array<complex_t, 4>;

/// The four theta constants of the doubled point that parametrize the
/// quartic model of an abelian surface: values of theta_{a,0}(0, 2 tau) at
/// a = (1/2,0), (1/2,1/2), (0,1/2), (0,0), in this order.
struct theta_four_tuple {
    certified_complex alpha, beta, gamma, delta;

    static theta_four_tuple at(const siegel_point& tau, const truncation_spec& spec = {}) {
        if (tau.genus() != 2) throw wrong_genus("theta_four_tuple: genus must be 2");
        const siegel_point tau2 = siegel_point((2.0 * tau.tau()).eval());
        const cvector z0 = cvector::Zero(2);
        theta_four_tuple t;
        t.alpha = theta(characteristic::half({1, 0}, {0, 0}), z0, tau2, spec);
        t.beta = theta(characteristic::half({1, 1}, {0, 0}), z0, tau2, spec);
        t.gamma = theta(characteristic::half({0, 1}, {0, 0}), z0, tau2, spec);
        t.delta = theta(characteristic::half({0, 0}, {0, 0}), z0, tau2, spec);
        return t;
    }

    std::array<certified_complex, 4> as_array() const { return {alpha, beta, gamma, delta}; }
};

/// The level-2 theta map of z: the same four characteristics evaluated at
/// (2z, 2 tau). Even in z, so it factors through z -> -z.
inline quad4 level2_map(const cvector& z, const siegel_point& tau,
                        const truncation_spec& spec = {}) {
    if (tau.genus() != 2) throw wrong_genus("level2_map: genus must be 2");
    const siegel_point tau2 = siegel_point((2.0 * tau.tau()).eval());
    const cvector z2 = 2.0 * z;
    return {theta(characteristic::half({1, 0}, {0, 0}), z2, tau2, spec).value,
            theta(characteristic::half({1, 1}, {0, 0}), z2, tau2, spec).value,
            theta(characteristic::half({0, 1}, {0, 0}), z2, tau2, spec).value,
            theta(characteristic::half({0, 0}, {0, 0}), z2, tau2, spec).value};
}

/// Coefficients (A, B, C, D, E) of the quartic
///   F = A (x^4+y^4+z^4+t^4) + B (x^2 t^2 + y^2 z^2) + C (y^2 t^2 + z^2 x^2)
///     + D (z^2 t^2 + x^2 y^2) + 2 E xyzt
/// as polynomials in the four-tuple. They are, up to a common scale, the
/// cofactors of the linear system expressing that the tuple point is a node
/// of the surface.
inline std::array<certified_complex, 5> kummer_coeffs_from(const theta_four_tuple& t) {
    const certified_complex a2 = t.alpha * t.alpha, b2 = t.beta * t.beta;
    const certified_complex g2 = t.gamma * t.gamma, d2 = t.delta * t.delta;
    const certified_complex a4 = a2 * a2, b4 = b2 * b2, g4 = g2 * g2, d4 = d2 * d2;
    const certified_complex u = a2 * d2 - b2 * g2;
    const certified_complex v = b2 * d2 - g2 * a2;
    const certified_complex w = g2 * d2 - a2 * b2;
    const certified_complex A = u * v * w;
    const certified_complex B = (b4 + g4 - a4 - d4) * v * w;
    const certified_complex C = (g4 + a4 - b4 - d4) * u * w;
    const certified_complex D = (a4 + b4 - g4 - d4) * u * v;
    const certified_complex E = t.alpha * t.beta * t.gamma * t.delta * (d2 + a2 - b2 - g2) *
                                (d2 + b2 - g2 - a2) * (d2 + g2 - a2 - b2) * (a2 + b2 + g2 + d2);
    return {A, B, C, D, E};
}

inline std::array<certified_complex, 5> kummer_coeffs(const siegel_point& tau,
                                                      const truncation_spec& spec = {}) {
    return kummer_coeffs_from(theta_four_tuple::at(tau, spec));
}

inline certified_complex kummer_quartic_eval(const quad4& w,
                                             const std::array<certified_complex, 5>& co) {
    const complex_t x = w[0], y = w[1], z = w[2], t = w[3];
    const complex_t x2 = x * x, y2 = y * y, z2 = z * z, t2 = t * t;
    certified_complex acc = co[0] * (x2 * x2 + y2 * y2 + z2 * z2 + t2 * t2);
    acc = acc + co[1] * (x2 * t2 + y2 * z2);
    acc = acc + co[2] * (y2 * t2 + z2 * x2);
    acc = acc + co[3] * (z2 * t2 + x2 * y2);
    acc = acc + co[4] * (2.0 * x * y * z * t);
    return acc;
}

inline certified_complex kummer_quartic_eval(const quad4& w, const siegel_point& tau,
                                             const truncation_spec& spec = {}) {
    if (w[0] == complex_t{} && w[1] == complex_t{} && w[2] == complex_t{} && w[3] == complex_t{})
        throw std::invalid_argument("kummer_quartic_eval: w must be nonzero");
    return kummer_quartic_eval(w, kummer_coeffs(tau, spec));
}

/// Exact polynomial gradient of the quartic at w.
inline std::array<certified_complex, 4> kummer_quartic_grad(
    const quad4& w, const std::array<certified_complex, 5>& co) {
    const complex_t x = w[0], y = w[1], z = w[2], t = w[3];
    const complex_t x2 = x * x, y2 = y * y, z2 = z * z, t2 = t * t;
    std::array<certified_complex, 4> g;
    g[0] = co[0] * (4.0 * x2 * x) + co[1] * (2.0 * x * t2) + co[2] * (2.0 * z2 * x) +
           co[3] * (2.0 * x * y2) + co[4] * (2.0 * y * z * t);
    g[1] = co[0] * (4.0 * y2 * y) + co[1] * (2.0 * y * z2) + co[2] * (2.0 * y * t2) +
           co[3] * (2.0 * x2 * y) + co[4] * (2.0 * x * z * t);
    g[2] = co[0] * (4.0 * z2 * z) + co[1] * (2.0 * y2 * z) + co[2] * (2.0 * z * x2) +
           co[3] * (2.0 * t2 * z) + co[4] * (2.0 * x * y * t);
    g[3] = co[0] * (4.0 * t2 * t) + co[1] * (2.0 * x2 * t) + co[2] * (2.0 * y2 * t) +
           co[3] * (2.0 * z2 * t) + co[4] * (2.0 * x * y * z);
    return g;
}

// ---------------------------------------------------------------------------
// The order-16 projective group of sign/permutation symmetries of the model.
// Element (perm, sign) acts by (sigma u)_i = sign_i * u_{perm_i}; generators:
//   s1: (u0,u1,u2,u3) -> (u2,u3,u0,u1)
//   s2: (u0,u1,u2,u3) -> (u1,u0,u3,u2)
//   s3: (u0,u1,u2,u3) -> (u0,u1,-u2,-u3)
//   s4: (u0,u1,u2,u3) -> (u0,-u1,u2,-u3)
// The canonical element order is lexicographic in the generator exponents
// (e1, e2, e3, e4) of s1^e1 s2^e2 s3^e3 s4^e4.
// ---------------------------------------------------------------------------
struct heisenberg_element {
    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> sign{1, 1, 1, 1};

    quad4 apply(const quad4& u) const {
        quad4 out;
        for (int i = 0; i < 4; ++i) out[i] = static_cast<double>(sign[i]) * u[perm[i]];
        return out;
    }
    heisenberg_element compose(const heisenberg_element& o) const {
        heisenberg_element r;
        for (int i = 0; i < 4; ++i) {
            r.perm[i] = o.perm[perm[i]];
            r.sign[i] = sign[i] * o.sign[perm[i]];
        }
        return r;
    }
};

inline const std::array<heisenberg_element, 16>& heisenberg_group() {
    static const std::array<heisenberg_element, 16> table = [] {
        const heisenberg_element s1{{2, 3, 0, 1}, {1, 1, 1, 1}};
        const heisenberg_element s2{{1, 0, 3, 2}, {1, 1, 1, 1}};
        const heisenberg_element s3{{0, 1, 2, 3}, {1, 1, -1, -1}};
        const heisenberg_element s4{{0, 1, 2, 3}, {1, -1, 1, -1}};
        std::array<heisenberg_element, 16> t;
        int k = 0;
        for (int e1 = 0; e1 < 2; ++e1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int e3 = 0; e3 < 2; ++e3)
                    for (int e4 = 0; e4 < 2; ++e4) {
                        heisenberg_element e;
                        if (e1) e = e.compose(s1);
                        if (e2) e = e.compose(s2);
                        if (e3) e = e.compose(s3);
                        if (e4) e = e.compose(s4);
                        t[k++] = e;
                    }
        return t;
    }();
    return table;
}

// Scale so the max-modulus coordinate is 1 (projective gauge).
inline quad4 projective_normalize(const quad4& u) {
    int imax = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(u[i]) > std::abs(u[imax])) imax = i;
    if (u[imax] == complex_t{}) throw std::invalid_argument("projective point must be nonzero");
    quad4 out;
    for (int i = 0; i < 4; ++i) out[i] = u[i] / u[imax];
    return out;
}

inline double projective_distance(const quad4& a, const quad4& b) {
    const quad4 an = projective_normalize(a), bn = projective_normalize(b);
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(an[i] - bn[i]));
    return d;
}

/// The 16 images of the seed under the group, in canonical element order.
/// Throws degenerate_orbit when two images coincide projectively.
inline std::vector<quad4> heisenberg_orbit(const quad4& seed) {
    std::vector<quad4> orbit;
    orbit.reserve(16);
    for (const auto& e : heisenberg_group()) orbit.push_back(e.apply(seed));
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = i + 1; j < orbit.size(); ++j)
            if (projective_distance(orbit[i], orbit[j]) < 1e-10)
                throw degenerate_orbit("heisenberg_orbit: orbit members coincide projectively");
    return orbit;
}

/// G(u) = prod over the group of <sigma . tuple, u>, certified through the
/// products of interval-bounded factors.
inline certified_complex dual_form_product(const quad4& u, const theta_four_tuple& tuple) {
    const auto vals = tuple.as_array();
    certified_complex prod(complex_t{1.0, 0.0});
    for (const auto& e : heisenberg_group()) {
        certified_complex lin(complex_t{0.0, 0.0});
        for (int i = 0; i < 4; ++i)
            lin = lin + vals[e.perm[i]] * (static_cast<double>(e.sign[i]) * u[i]);
        prod = prod * lin;
    }
    return prod;
}

inline certified_complex dual_form_product(const quad4& u, const siegel_point& tau,
                                           const truncation_spec& spec = {}) {
    return dual_form_product(u, theta_four_tuple::at(tau, spec));
}

struct discriminant_value {
    quad4 u{};
    certified_complex value;
    double constant_used = 0.0;
};

/// Delta_{2,2}(u, tau) = c22 * F(u, tau)^2 * G(u, tau); homogeneous of
/// degree 24 in u. Computed in the max-modulus gauge and rescaled.
inline discriminant_value discriminant_2_2(const quad4& u, const siegel_point& tau,
                                           const truncation_spec& spec = {}) {
    double s = 0.0;
    for (const auto& c : u) s = std::max(s, std::abs(c));
    if (s == 0.0) throw std::invalid_argument("discriminant_2_2: u must be nonzero");
    quad4 un;
    for (int i = 0; i < 4; ++i) un[i] = u[i] / s;
    const auto tuple = theta_four_tuple::at(tau, spec);
    const auto co = kummer_coeffs_from(tuple);
    const certified_complex f = kummer_quartic_eval(un, co);
    const certified_complex g = dual_form_product(un, tuple);
    const double scale24 = std::pow(s, 24);
    discriminant_value out;
    out.u = u;
    out.value = f * f * g * (constants::c22() * scale24);
    out.constant_used = constants::c22();
    return out;
}

/// Full model of the quartic surface at tau: coefficients, the 16 nodes
/// (group orbit of the tuple) and the 16 dual linear forms, in matching
/// canonical order.
struct kummer_model {
    std::array<certified_complex, 5> coeffs;
    std::vector<quad4> nodes;
    std::vector<quad4> dual_forms;

    static kummer_model at(const siegel_point& tau, const truncation_spec& spec = {}) {
        kummer_model m;
        const auto tuple = theta_four_tuple::at(tau, spec);
        m.coeffs = kummer_coeffs_from(tuple);
        const quad4 seed{tuple.alpha.value, tuple.beta.value, tuple.gamma.value,
                         tuple.delta.value};
        m.nodes = heisenberg_orbit(seed);
        // a trope's coefficient vector is the node tuple of the matching
        // group element; the surface is self-dual
        m.dual_forms = m.nodes;
        return m;
    }
};

/// Gradient coordinates at a smooth surface point are the coordinates of the
/// tangent plane (projective duality).
inline quad4 tangent_plane(const quad4& w, const siegel_point& tau,
                           const truncation_spec& spec = {}) {
    const auto co = kummer_coeffs(tau, spec);
    const auto g = kummer_quartic_grad(w, co);
    return {g[0].value, g[1].value, g[2].value, g[3].value};
}

} // namespace siegeltheta
