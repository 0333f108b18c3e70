#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <twistderiv/combinatorics.hpp>
#include <twistderiv/model.hpp>

namespace twistderiv {

/// coefficient * H(L/2 - sum l_{a,b}) * prod sin(theta_i) * prod cos(theta_j),
/// with H = cosh or sinh and 1-based crossing indices.
struct FormulaTerm {
    BigInt numerator;
    BigInt denominator; // > 0, coprime to numerator
    bool hyperbolic_sine = false;
    std::vector<std::pair<std::size_t, std::size_t>> distances; // l_{a,b} = l_b - l_a, a < b
    std::vector<std::size_t> sines;
    std::vector<std::size_t> cosines;
};

/// Fully expanded k-th twist derivative of the trace for n crossings.
struct TraceFormula {
    std::size_t n = 0;
    unsigned k = 0;
    // (r, B_{n,k,r}) for every contributing r.
    std::vector<std::pair<std::size_t, BigInt>> groups;
    std::vector<FormulaTerm> terms;
};

inline constexpr std::size_t max_formula_terms = 100000;

// Number of expanded terms: sum over contributing r of C(n, r) 2^{r-1} (1 for r = 0).
BigInt formula_term_count(std::size_t n, unsigned k);

// Throws size_guard when the expansion would exceed max_formula_terms.
TraceFormula build_trace_formula(std::size_t n, unsigned k);

// Plain text: '#' comment lines, a "T^(k)(0) =" line, then one signed term per line, e.g.
//   + 3/2 * sinh(L/2 - l[1,2]) * sin(t[1]) * sin(t[2]) * cos(t[3])
std::string render_formula_text(const TraceFormula& formula);
std::string render_formula_latex(const TraceFormula& formula);

// Substitutes a config with formula.n points into the expansion.
double evaluate_formula(const TraceFormula& formula, const IntersectionConfig& config);

} // namespace twistderiv
