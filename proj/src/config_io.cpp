#include <twistderiv/config_io.hpp>
#include <twistderiv/error.hpp>
#include <twistderiv/report.hpp>

#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

#include <fmt/core.h>
#include <json.hpp>

namespace twistderiv {

namespace {

using nlohmann::json;

std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
        }
    }
    return line;
}

// Lines on which each element object of the "points" array opens. Relies on the
// config layout: root object, points array, point objects at nesting depth 3.
std::vector<std::size_t> point_lines(std::string_view text)
{
    std::vector<std::size_t> lines;
    std::size_t line = 1;
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
        }
        if (in_string) {
            if (c == '\\') {
                ++i;
            } else if (c == '"') {
                in_string = false;
            }
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{' || c == '[') {
            ++depth;
            if (c == '{' && depth == 3) {
                lines.push_back(line);
            }
        } else if (c == '}' || c == ']') {
            --depth;
        }
    }
    return lines;
}

[[noreturn]] void fail(std::optional<std::size_t> line, errc code, const std::string& msg)
{
    if (line) {
        throw error(code, fmt::format("line {}: {}", *line, msg));
    }
    throw error(code, msg);
}

double number_field(const json& obj, const char* key, std::optional<std::size_t> line, const std::string& where)
{
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(line, errc::parse_error, fmt::format("{}: missing field \"{}\"", where, key));
    }
    if (!it->is_number()) {
        fail(line, errc::parse_error, fmt::format("{}: field \"{}\" must be a number", where, key));
    }
    return it->get<double>();
}

} // namespace

IntersectionConfig parse_config(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(line_of_offset(text, e.byte == 0 ? 0 : e.byte - 1), errc::parse_error,
             fmt::format("malformed JSON: {}", e.what()));
    }
    if (!doc.is_object()) {
        fail(1, errc::parse_error, "config must be a JSON object");
    }

    const auto lines = point_lines(text);
    auto line_for = [&](std::size_t i) -> std::optional<std::size_t> {
        if (i < lines.size()) {
            return lines[i];
        }
        return std::nullopt;
    };

    IntersectionConfig config;
    config.total_length = number_field(doc, "L", std::nullopt, "config");

    bool degrees = false;
    if (auto it = doc.find("degrees"); it != doc.end()) {
        if (!it->is_boolean()) {
            fail(std::nullopt, errc::parse_error, "field \"degrees\" must be true or false");
        }
        degrees = it->get<bool>();
    }

    const auto pts = doc.find("points");
    if (pts == doc.end() || !pts->is_array()) {
        fail(std::nullopt, errc::parse_error, "config needs a \"points\" array");
    }
    for (std::size_t i = 0; i < pts->size(); ++i) {
        const auto& p = (*pts)[i];
        const auto where = fmt::format("points[{}]", i);
        if (!p.is_object()) {
            fail(line_for(i), errc::parse_error, fmt::format("{} must be an object", where));
        }
        IntersectionPoint point;
        point.length = number_field(p, "l", line_for(i), where);
        point.angle = number_field(p, "theta", line_for(i), where);
        if (degrees) {
            point.angle *= std::numbers::pi / 180.0;
        }
        config.points.push_back(point);
    }

    if (auto it = doc.find("n"); it != doc.end()) {
        if (!it->is_number_unsigned() || it->get<std::size_t>() != config.size()) {
            fail(std::nullopt, errc::parse_error,
                 fmt::format("field \"n\" does not match the {} listed points", config.size()));
        }
    }

    // Re-run validation point by point so the message can carry a line number.
    try {
        return validate(config);
    } catch (const error& e) {
        const std::string msg = e.what();
        if (msg.starts_with("points[")) {
            const auto idx = std::stoul(msg.substr(7));
            fail(line_for(idx), e.code(), msg);
        }
        throw;
    }
}

IntersectionConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw error(errc::parse_error, fmt::format("cannot open config file '{}'", path.string()));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const error& e) {
        throw error(e.code(), fmt::format("{}: {}", path.string(), e.what()));
    }
}

std::string render_config(const IntersectionConfig& config)
{
    std::string out = fmt::format("{{\n  \"L\": {},\n  \"points\": [", format_double(config.total_length));
    for (std::size_t i = 0; i < config.size(); ++i) {
        out += fmt::format("{}\n    {{\"l\": {}, \"theta\": {}}}", i == 0 ? "" : ",",
                           format_double(config.points[i].length), format_double(config.points[i].angle));
    }
    out += config.size() == 0 ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

} // namespace twistderiv
