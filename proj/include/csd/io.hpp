#pragma once

/**
 * @file io.hpp
 * @brief JSON file formats. Coordinates are exact rational strings
 * ("num/den", or an integer); JSON integers are accepted on input, floats
 * are rejected.
 *
 *   configuration: {"dimension": d, "colours": [[[x1, ..., xd], ...], ...]}
 *   point set:     {"dimension": d, "points": [[x1, ..., xd], ...]}
 *   point:         {"dimension": d, "point": [x1, ..., xd]}
 */

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "csd/configuration.hpp"

namespace csd::io {

using Json = nlohmann::ordered_json;

inline Json point_coords(const Point& p)
{
    Json a = Json::array();
    for (const auto& x : p.coords()) a.push_back(to_string(x));
    return a;
}

inline Rational parse_coordinate(const Json& v)
{
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Rational(Integer(std::to_string(v.get<std::uint64_t>())));
        return Rational(Integer(std::to_string(v.get<std::int64_t>())));
    }
    throw InputError("coordinates must be rational strings or integers, got " + v.dump());
}

inline Point parse_point(const Json& v, std::size_t dim)
{
    if (!v.is_array()) throw InputError("a point must be a list of coordinates");
    if (v.size() != dim) {
        throw InputError("point " + v.dump() + " has " + std::to_string(v.size()) + " coordinates, expected " +
                         std::to_string(dim));
    }
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = parse_coordinate(v[i]);
    return p;
}

inline std::size_t parse_dimension(const Json& j)
{
    if (!j.is_object() || !j.contains("dimension")) throw InputError("missing \"dimension\"");
    const auto& d = j["dimension"];
    if (!d.is_number_integer() || d.get<std::int64_t>() < 1) throw InputError("\"dimension\" must be a positive integer");
    return static_cast<std::size_t>(d.get<std::int64_t>());
}

inline Json to_json(const ColourfulConfiguration& cfg)
{
    Json j;
    j["dimension"] = cfg.dim();
    Json colours = Json::array();
    for (const auto& cls : cfg.classes()) {
        Json c = Json::array();
        for (const auto& p : cls) c.push_back(point_coords(p));
        colours.push_back(std::move(c));
    }
    j["colours"] = std::move(colours);
    return j;
}

inline ColourfulConfiguration configuration_from_json(const Json& j)
{
    const std::size_t d = parse_dimension(j);
    if (!j.contains("colours") || !j["colours"].is_array()) throw InputError("missing \"colours\" list");
    std::vector<std::vector<Point>> classes;
    for (const auto& c : j["colours"]) {
        if (!c.is_array()) throw InputError("each colour must be a list of points");
        std::vector<Point> pts;
        for (const auto& p : c) pts.push_back(parse_point(p, d));
        classes.push_back(std::move(pts));
    }
    return ColourfulConfiguration(d, std::move(classes));
}

inline Json point_set_to_json(const std::vector<Point>& pts)
{
    Json j;
    j["dimension"] = pts.empty() ? 0 : pts[0].dim();
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(point_coords(p));
    j["points"] = std::move(a);
    return j;
}

inline std::vector<Point> point_set_from_json(const Json& j)
{
    const std::size_t d = parse_dimension(j);
    if (!j.contains("points") || !j["points"].is_array()) throw InputError("missing \"points\" list");
    std::vector<Point> pts;
    for (const auto& p : j["points"]) pts.push_back(parse_point(p, d));
    return pts;
}

inline Json point_to_json(const Point& p)
{
    Json j;
    j["dimension"] = p.dim();
    j["point"] = point_coords(p);
    return j;
}

inline Point point_from_json(const Json& j)
{
    const std::size_t d = parse_dimension(j);
    if (!j.contains("point")) throw InputError("missing \"point\"");
    return parse_point(j["point"], d);
}

/// Comma-separated rationals, e.g. "1/2,-3".
inline Point parse_inline_point(const std::string& text)
{
    std::vector<Rational> coords;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) coords.push_back(parse_rational(item));
    if (coords.empty()) throw InputError("empty point '" + text + "'");
    return Point(std::move(coords));
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

inline void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace csd::io
