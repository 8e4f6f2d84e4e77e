#include "geomcut/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "geomcut/errors.hpp"

namespace geomcut {

namespace {

using nlohmann::json;

// byte offset -> 1-based line/column for parse diagnostics
std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(line, col, e.what());
  }
}

Point parse_point(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
    throw ParseError(0, 0, std::string(where) + ": a point is a pair of coordinate strings");
  return {Rational::from_string(j[0].get<std::string>()),
          Rational::from_string(j[1].get<std::string>())};
}

json point_to_json(const Point& p) {
  return json::array({p.x.to_decimal(), p.y.to_decimal()});
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("num_colors") || !j.contains("objects"))
    throw ParseError(0, 0, "instance needs \"num_colors\" and \"objects\"");
  if (!j["num_colors"].is_number_integer())
    throw ParseError(0, 0, "\"num_colors\" must be an integer");
  if (!j["objects"].is_array()) throw ParseError(0, 0, "\"objects\" must be an array");

  Instance inst;
  inst.num_colors = j["num_colors"].get<int>();
  for (const auto& jo : j["objects"]) {
    if (!jo.is_object() || !jo.contains("color") || !jo.contains("vertices") ||
        !jo["color"].is_number_integer() || !jo["vertices"].is_array())
      throw ParseError(0, 0, "each object needs an integer \"color\" and a \"vertices\" array");
    Polygon poly;
    poly.color = jo["color"].get<int>();
    for (const auto& jv : jo["vertices"]) poly.vertices.push_back(parse_point(jv, "vertices"));
    inst.objects.push_back(std::move(poly));
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json objects = json::array();
  for (const auto& obj : inst.objects) {
    json verts = json::array();
    for (const auto& v : obj.vertices) verts.push_back(point_to_json(v));
    objects.push_back({{"color", obj.color}, {"vertices", std::move(verts)}});
  }
  json j = {{"num_colors", inst.num_colors}, {"objects", std::move(objects)}};
  return j.dump(2) + "\n";
}

Fence parse_fence(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("total_length") || !j.contains("segments") ||
      !j["total_length"].is_number() || !j["segments"].is_array())
    throw ParseError(0, 0, "fence needs a numeric \"total_length\" and a \"segments\" array");
  Fence fence;
  fence.total_length = j["total_length"].get<double>();
  for (const auto& js : j["segments"]) {
    if (!js.is_array() || js.size() != 2)
      throw ParseError(0, 0, "each fence segment is a pair of points");
    fence.segments.push_back({parse_point(js[0], "segments"), parse_point(js[1], "segments")});
  }
  return fence;
}

std::string serialize_fence(const Fence& fence) {
  json segments = json::array();
  for (const auto& s : fence.segments)
    segments.push_back(json::array({point_to_json(s.a), point_to_json(s.b)}));
  json j = {{"total_length", fence.total_length}, {"segments", std::move(segments)}};
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw InputError("error while reading " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SinkWriteFailure("cannot open " + path + " for writing");
  out << data;
  out.flush();
  if (!out) throw SinkWriteFailure("failed writing " + path);
}

}  // namespace geomcut
