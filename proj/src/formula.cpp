#include <twistderiv/error.hpp>
#include <twistderiv/formula.hpp>

#include <cmath>
#include <sstream>

#include <boost/multiprecision/integer.hpp>
#include <fmt/core.h>

namespace twistderiv {

namespace {

std::vector<std::size_t> contributing_orders(std::size_t n, unsigned k)
{
    std::vector<std::size_t> out;
    if (n == 0) {
        if (k == 0) {
            out.push_back(0);
        }
        return out;
    }
    for (std::size_t r = k % 2; r <= std::min<std::size_t>(k, n); r += 2) {
        out.push_back(r);
    }
    return out;
}

std::string coefficient_text(const FormulaTerm& t)
{
    const BigInt mag = abs(t.numerator);
    if (t.denominator == 1) {
        return mag.str();
    }
    return mag.str() + "/" + t.denominator.str();
}

std::string argument_text(const FormulaTerm& t, bool latex)
{
    std::string arg = "L/2";
    for (auto [a, b] : t.distances) {
        if (!latex) {
            arg += fmt::format(" - l[{},{}]", a, b);
        } else if (a > 9 || b > 9) {
            arg += fmt::format(" - l_{{{},{}}}", a, b);
        } else {
            arg += fmt::format(" - l_{{{}{}}}", a, b);
        }
    }
    return arg;
}

} // namespace

BigInt formula_term_count(std::size_t n, unsigned k)
{
    BigInt count = 0;
    for (auto r : contributing_orders(n, k)) {
        BigInt per = 1;
        if (r > 0) {
            per <<= static_cast<unsigned>(r - 1);
        }
        count += binomial(static_cast<unsigned>(n), static_cast<unsigned>(r)) * per;
    }
    return count;
}

TraceFormula build_trace_formula(std::size_t n, unsigned k)
{
    const auto count = formula_term_count(n, k);
    if (count > max_formula_terms) {
        throw error(errc::size_guard,
                    fmt::format("expansion for n = {}, k = {} has {} terms (limit {})", n, k, count.str(),
                                max_formula_terms));
    }

    TraceFormula formula;
    formula.n = n;
    formula.k = k;
    const BigInt two_k = BigInt(1) << k;
    for (auto r : contributing_orders(n, k)) {
        const BigInt B = n == 0 ? BigInt(1) : coefficient_B(n, k, r);
        formula.groups.emplace_back(r, B);

        for_each_subset_of_size(n, r, [&](const IndexSubset& chosen) {
            const auto& global = chosen.indices();
            for (std::size_t m = 0; m <= r; m += 2) {
                for_each_subset_of_size(r, m, [&](const IndexSubset& inner) {
                    FormulaTerm term;
                    const int sign = signature(inner) % 2 == 0 ? 1 : -1;
                    BigInt num = 2 * B * sign;
                    BigInt den = two_k;
                    const BigInt g = boost::multiprecision::gcd(abs(num), den);
                    term.numerator = num / g;
                    term.denominator = den / g;
                    term.hyperbolic_sine = r % 2 == 1;
                    // Alternating length of an even subset is sum of l_{i_{2j}} - l_{i_{2j-1}}.
                    const auto& idx = inner.indices();
                    for (std::size_t j = 0; j + 1 < idx.size(); j += 2) {
                        term.distances.emplace_back(global[idx[j] - 1], global[idx[j + 1] - 1]);
                    }
                    for (std::size_t i = 1; i <= r; ++i) {
                        (inner.contains(i) ? term.sines : term.cosines).push_back(global[i - 1]);
                    }
                    formula.terms.push_back(std::move(term));
                });
            }
        });
    }
    return formula;
}

std::string render_formula_text(const TraceFormula& f)
{
    std::ostringstream os;
    os << fmt::format("# twist derivative of order {} of the trace, {} crossings\n", f.k, f.n);
    os << fmt::format("# T^({})(0) = 1/{} * (", f.k, (BigInt(1) << f.k).str());
    for (std::size_t g = 0; g < f.groups.size(); ++g) {
        os << (g == 0 ? "" : " + ") << f.groups[g].second.str() << " * G_" << f.groups[g].first;
    }
    os << (f.groups.empty() ? "0)\n" : ")\n");
    os << "# l[a,b] = l_b - l_a, t[i] = theta_i\n";
    os << fmt::format("T^({})(0) =\n", f.k);
    if (f.terms.empty()) {
        os << "  0\n";
    }
    for (const auto& t : f.terms) {
        os << "  " << (t.numerator < 0 ? "- " : "+ ") << coefficient_text(t) << " * "
           << (t.hyperbolic_sine ? "sinh(" : "cosh(") << argument_text(t, false) << ")";
        for (auto i : t.sines) {
            os << " * sin(t[" << i << "])";
        }
        for (auto i : t.cosines) {
            os << " * cos(t[" << i << "])";
        }
        os << '\n';
    }
    return os.str();
}

std::string render_formula_latex(const TraceFormula& f)
{
    std::ostringstream os;
    os << fmt::format("T^{{({})}}(0) =", f.k);
    if (f.terms.empty()) {
        os << " 0";
    }
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& t = f.terms[i];
        os << (i > 0 ? "\n  " : " ") << (t.numerator < 0 ? "- " : (i > 0 ? "+ " : ""));
        const BigInt mag = abs(t.numerator);
        if (t.denominator == 1) {
            if (mag != 1) {
                os << mag.str();
            }
        } else {
            os << "\\frac{" << mag.str() << "}{" << t.denominator.str() << "}";
        }
        os << (t.hyperbolic_sine ? "\\sinh(" : "\\cosh(") << argument_text(t, true) << ")";
        for (auto s : t.sines) {
            os << "\\sin\\theta_{" << s << "}";
        }
        for (auto c : t.cosines) {
            os << "\\cos\\theta_{" << c << "}";
        }
    }
    os << '\n';
    return os.str();
}

double evaluate_formula(const TraceFormula& f, const IntersectionConfig& config)
{
    if (config.size() != f.n) {
        throw error(errc::invalid_range,
                    fmt::format("formula is for {} crossings, config has {}", f.n, config.size()));
    }
    const auto& pts = config.points;
    double sum = 0.0;
    for (const auto& t : f.terms) {
        double arg = 0.5 * config.total_length;
        for (auto [a, b] : t.distances) {
            arg -= pts[b - 1].length - pts[a - 1].length;
        }
        double v = t.numerator.convert_to<double>() / t.denominator.convert_to<double>();
        v *= t.hyperbolic_sine ? std::sinh(arg) : std::cosh(arg);
        for (auto i : t.sines) {
            v *= std::sin(pts[i - 1].angle);
        }
        for (auto i : t.cosines) {
            v *= std::cos(pts[i - 1].angle);
        }
        sum += v;
    }
    return sum;
}

} // namespace twistderiv
