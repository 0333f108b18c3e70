#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <twistderiv/combinatorics.hpp>
#include <twistderiv/jet.hpp>
#include <twistderiv/model.hpp>

namespace twistderiv {

/// One summand of F_r: sign * prod_{i in I} sin(theta_i) * prod_{i not in I} cos(theta_i) * H,
/// where H = 2 cosh(L/2 - L_I) for even r and 2 sinh(L/2 - L_I) for odd r.
struct FTermBreakdown {
    IndexSubset subset;
    int sign = 1;
    double sin_product = 1.0;
    double cos_product = 1.0;
    double hyperbolic = 0.0;
    double total = 0.0;
};

// Every even-cardinality subset term of F_r for the given points (r = points.size()).
std::vector<FTermBreakdown> F_terms(std::span<const IntersectionPoint> points, double total_length);

// F_r(u_1, ..., u_r, L): trace of A(u_1)...A(u_r)*diag(e^{L/2}, e^{-L/2}) in closed form.
// Points need not be ordered; angles must lie in (0, pi) and L > 0.
double eval_F(std::span<const IntersectionPoint> points, double total_length);

// G_r = sum of F_r over all size-r subsets of the config's points. Throws invalid_range for r > n.
double eval_G(std::size_t r, const IntersectionConfig& config);

// k-th twist derivative of the trace at the given structure:
// 2^{-k} sum_{r = k mod 2}^{min(k, n)} B_{n,k,r} G_r.
double trace_derivative_closed(const IntersectionConfig& config, unsigned k);
std::vector<double> trace_derivatives_closed(const IntersectionConfig& config, unsigned max_order);

// Trace series T(z) up to z^K assembled from the closed-form derivatives.
Jet<double> trace_jet_closed(const IntersectionConfig& config, unsigned max_order);

// k-th twist derivative of the geodesic length, via L(z) = 2 arccosh(T(z)/2).
double length_derivative_closed(const IntersectionConfig& config, unsigned k);
std::vector<double> length_derivatives_closed(const IntersectionConfig& config, unsigned max_order);

// Wolpert's second-derivative double sum over ordered pairs (p, q), including p = q:
// sum (e^{l_pq} + e^{l_qp}) / (2(e^L - 1)) sin(theta_p) sin(theta_q).
double wolpert_second_literal(const IntersectionConfig& config);

// The worked third trace derivative:
// (1/8)[(6n - 4) sinh(L/2) sum cos(theta_i)
//       + 12 sum_{i<j<k} ( sinh(L/2) c_i c_j c_k + sinh(L/2 - l_ij) s_i s_j c_k
//                          - sinh(L/2 - l_ik) s_i c_j s_k + sinh(L/2 - l_jk) c_i s_j s_k )].
double third_derivative_literal(const IntersectionConfig& config);

} // namespace twistderiv
