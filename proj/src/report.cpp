#include <twistderiv/closed_form.hpp>
#include <twistderiv/error.hpp>
#include <twistderiv/oracle.hpp>
#include <twistderiv/report.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include <fmt/core.h>

namespace twistderiv {

std::string_view to_string(DerivativeSource source) noexcept
{
    switch (source) {
        case DerivativeSource::closed_form:
            return "closed_form";
        case DerivativeSource::jet_oracle:
            return "jet_oracle";
        case DerivativeSource::finite_difference:
            return "finite_difference";
    }
    return "unknown";
}

std::optional<DerivativeSource> parse_source(std::string_view text) noexcept
{
    for (auto s : {DerivativeSource::closed_form, DerivativeSource::jet_oracle, DerivativeSource::finite_difference}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    return std::nullopt;
}

DerivativeReport make_report(const IntersectionConfig& input, unsigned order, DerivativeSource source)
{
    const auto config = validate(input);
    DerivativeReport report;
    report.n = config.size();
    report.total_length = config.total_length;
    report.order = order;
    report.source = source;
    switch (source) {
        case DerivativeSource::closed_form:
            report.trace_derivs = trace_derivatives_closed(config, order);
            report.length_derivs = length_derivatives_closed(config, order);
            break;
        case DerivativeSource::jet_oracle:
            report.trace_derivs = oracle_trace_derivatives(config, order);
            report.length_derivs = oracle_length_derivatives(config, order);
            break;
        case DerivativeSource::finite_difference:
            throw error(errc::invalid_range, "finite differences give spot checks, not full reports");
    }
    return report;
}

double relative_delta(double value, double reference)
{
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

std::string format_double(double value)
{
    return fmt::format("{:.17g}", value);
}

namespace {

void write_array(std::ostringstream& os, std::string_view key, const std::vector<double>& values)
{
    os << key;
    for (double v : values) {
        os << ' ' << format_double(v);
    }
    os << '\n';
}

[[noreturn]] void fail(std::size_t line, const std::string& msg)
{
    throw error(errc::parse_error, fmt::format("line {}: {}", line, msg));
}

double parse_number(std::string_view tok, std::size_t line)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        // from_chars rejects "inf"/"nan" spellings fmt may produce; accept them explicitly.
        if (tok == "inf") {
            return HUGE_VAL;
        }
        if (tok == "-inf") {
            return -HUGE_VAL;
        }
        if (tok == "nan" || tok == "-nan") {
            return std::nan("");
        }
        fail(line, fmt::format("'{}' is not a number", tok));
    }
    return v;
}

unsigned long long parse_count(std::string_view tok, std::size_t line)
{
    unsigned long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        fail(line, fmt::format("'{}' is not a non-negative integer", tok));
    }
    return v;
}

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

} // namespace

std::string render_structured(const DerivativeReport& report)
{
    std::ostringstream os;
    os << "schema twistderiv-report\n";
    os << "version " << report_schema_version << '\n';
    os << "source " << to_string(report.source) << '\n';
    os << "n " << report.n << '\n';
    os << "L " << format_double(report.total_length) << '\n';
    os << "order " << report.order << '\n';
    write_array(os, "trace_derivs", report.trace_derivs);
    write_array(os, "length_derivs", report.length_derivs);
    if (report.deltas) {
        write_array(os, "deltas", *report.deltas);
    }
    return os.str();
}

DerivativeReport parse_structured(std::string_view text)
{
    DerivativeReport report;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        const auto line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        const auto tokens = split(line);
        if (tokens.empty() || tokens.front().starts_with('#')) {
            continue;
        }
        const auto key = tokens.front();
        if (seen.contains(key)) {
            fail(line_no, fmt::format("duplicate key '{}' (first on line {})", key, seen.find(key)->second));
        }
        seen.emplace(std::string(key), line_no);

        auto scalar = [&]() {
            if (tokens.size() != 2) {
                fail(line_no, fmt::format("key '{}' expects exactly one value", key));
            }
            return tokens[1];
        };
        auto array = [&]() {
            std::vector<double> values;
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                values.push_back(parse_number(tokens[i], line_no));
            }
            return values;
        };

        if (key == "schema") {
            if (scalar() != "twistderiv-report") {
                fail(line_no, fmt::format("unknown schema '{}'", tokens[1]));
            }
        } else if (key == "version") {
            if (parse_count(scalar(), line_no) != report_schema_version) {
                fail(line_no, fmt::format("unsupported version {}", tokens[1]));
            }
        } else if (key == "source") {
            auto src = parse_source(scalar());
            if (!src) {
                fail(line_no, fmt::format("unknown source '{}'", tokens[1]));
            }
            report.source = *src;
        } else if (key == "n") {
            report.n = parse_count(scalar(), line_no);
        } else if (key == "L") {
            report.total_length = parse_number(scalar(), line_no);
        } else if (key == "order") {
            report.order = static_cast<unsigned>(parse_count(scalar(), line_no));
        } else if (key == "trace_derivs") {
            report.trace_derivs = array();
        } else if (key == "length_derivs") {
            report.length_derivs = array();
        } else if (key == "deltas") {
            report.deltas = array();
        } else {
            fail(line_no, fmt::format("unknown key '{}'", key));
        }
    }
    for (auto required : {"schema", "version", "source", "n", "L", "order", "trace_derivs", "length_derivs"}) {
        if (!seen.contains(std::string_view(required))) {
            throw error(errc::parse_error, fmt::format("missing key '{}'", required));
        }
    }
    const auto expected = static_cast<std::size_t>(report.order) + 1;
    if (report.trace_derivs.size() != expected || report.length_derivs.size() != expected) {
        throw error(errc::parse_error, fmt::format("derivative arrays must hold order + 1 = {} values", expected));
    }
    return report;
}

std::string render_text(const DerivativeReport& report)
{
    std::ostringstream os;
    os << fmt::format("n = {}, L = {}, order = {}, source = {}\n", report.n, report.total_length,
                      report.order, to_string(report.source));
    os << fmt::format("{:>3}  {:>25}  {:>25}", "m", "T^(m)(0)", "L^(m)(0)");
    if (report.deltas) {
        os << fmt::format("  {:>12}", "delta");
    }
    os << '\n';
    for (std::size_t m = 0; m < report.trace_derivs.size(); ++m) {
        os << fmt::format("{:>3}  {:>25.17g}  {:>25.17g}", m, report.trace_derivs[m], report.length_derivs[m]);
        if (report.deltas) {
            os << fmt::format("  {:>12.3e}", (*report.deltas)[m]);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace twistderiv
