#pragma once

// Brute-force derivatives from the deformed holonomy R_1(z) ... R_n(z) gamma.
//
// The closed geodesic's axis is normalized to (0, inf) with translation
// gamma = diag(e^{L/2}, e^{-L/2}). The i-th lift of the twisting curve crosses
// the axis at height e^{l_i} and has endpoints a_i > 0 > b_i. R_i(z) is the
// complex shear-bend about that lift, i.e. f_i^{-1} diag(e^{z/2}, e^{-z/2}) f_i
// with f_i(w) = (w - a_i) / (w - b_i). Nothing here uses the closed form.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <twistderiv/jet.hpp>
#include <twistderiv/mat2.hpp>
#include <twistderiv/model.hpp>

namespace twistderiv {

struct LiftEndpoints {
    double a = 0.0; // > 0
    double b = 0.0; // < 0
};

// The unique endpoints with -ab = e^{2l} and -(a+b)/(a-b) = cos(theta):
// a = e^l tan(theta/2), b = -e^l / tan(theta/2).
LiftEndpoints lift_endpoints(double length, double angle);

// f_i normalized to unit determinant.
Mat2<double> lift_normalizer(const LiftEndpoints& ends);
Mat2<double> lift_normalizer_inverse(const LiftEndpoints& ends);

// R'_i(0) = (1 / (2(a - b))) [[-(a+b), 2ab], [-2, a+b]].
Mat2<double> twist_generator_matrix(const LiftEndpoints& ends);

// A(l + i theta) = [[cos theta, -e^l sin theta], [-e^{-l} sin theta, -cos theta]].
Mat2<double> a_matrix(const IntersectionPoint& point);

// diag(e^{L/2}, e^{-L/2}).
Mat2<double> translation_matrix(double total_length);

// Tr(A(u_1) ... A(u_r) gamma) by direct matrix multiplication.
double trace_A_product(std::span<const IntersectionPoint> points, double total_length);

// R_1(z), ..., R_n(z) as matrices of jets in t, where z = direction * t.
std::vector<Mat2<Jet<double>>> deformation_factors(const IntersectionConfig& config, std::size_t order);
std::vector<Mat2<Jet<std::complex<double>>>> deformation_factors(const IntersectionConfig& config, std::size_t order,
                                                                 std::complex<double> direction);

// Trace of R_1(z) ... R_n(z) gamma as a jet in the real twist parameter.
Jet<double> holonomy_jet(const IntersectionConfig& config, std::size_t order);

// Same, along z = direction * t; direction = i is pure bending.
Jet<std::complex<double>> holonomy_jet(const IntersectionConfig& config, std::size_t order,
                                       std::complex<double> direction);

double oracle_trace_derivative(const IntersectionConfig& config, unsigned k);
double oracle_length_derivative(const IntersectionConfig& config, unsigned k);
std::vector<double> oracle_trace_derivatives(const IntersectionConfig& config, unsigned max_order);
std::vector<double> oracle_length_derivatives(const IntersectionConfig& config, unsigned max_order);

// k-th bend derivative of length as i^k times the k-th twist derivative.
std::complex<double> bend_derivative(const IntersectionConfig& config, unsigned k);

// k-th bend derivative of length from a complex jet run along z = i t.
std::complex<double> bend_derivative_direct(const IntersectionConfig& config, unsigned k);

// Trace of the holonomy at a finite real twist s, with S(s) evaluated numerically.
double trace_at_twist(const IntersectionConfig& config, double s);

inline constexpr double min_fd_step = 1e-6;

/// k-th trace derivative (k <= 3) from central differences of trace_at_twist,
/// with one Richardson level combining steps h and 2h. Throws step_too_small
/// for h < min_fd_step and invalid_range for k > 3.
double finite_difference_check(const IntersectionConfig& config, unsigned k, double step);

} // namespace twistderiv
