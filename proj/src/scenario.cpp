#include "vcvis/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "vcvis/error.hpp"

namespace vcvis {

using Json = nlohmann::ordered_json;

bool operator==(const Scenario& a, const Scenario& b) {
  if (a.name != b.name || a.metric != b.metric || !(a.polygon == b.polygon) ||
      !(a.expected == b.expected) || a.points.size() != b.points.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points.points[i].label != b.points.points[i].label ||
        !(a.points.points[i].position == b.points.points[i].position)) {
      return false;
    }
  }
  return true;
}

namespace {

[[noreturn]] void parse_fail(const std::string& message) {
  throw Error(ErrorCode::kParseError, message);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Rational coordinate(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const Error& e) {
      parse_fail(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long>());
  parse_fail(where + ": coordinates must be strings or integers");
}

const Json& require(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("column "); pos != std::string::npos) {
      if (auto colon = msg.find(": ", pos); colon != std::string::npos) msg = msg.substr(colon + 2);
    }
    parse_fail("malformed JSON at " + line_column(text, e.byte > 0 ? e.byte - 1 : 0) +
               ": " + msg);
  }
  if (!doc.is_object()) parse_fail("scenario must be a JSON object");
  const Json& format = require(doc, "format", "scenario");
  if (!format.is_number_integer() || format.get<int>() != 1) {
    parse_fail("unsupported scenario format (expected 1)");
  }

  Scenario s;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) parse_fail("\"name\" must be a string");
    s.name = it->get<std::string>();
  }
  if (auto it = doc.find("metric"); it != doc.end()) {
    if (!it->is_string()) parse_fail("\"metric\" must be a string");
    s.metric = parse_metric(it->get<std::string>());
  }

  const Json& poly = require(doc, "polygon", "scenario");
  if (!poly.is_array()) parse_fail("\"polygon\" must be an array");
  std::vector<ExactPoint> vertices;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    std::string where = "polygon[" + std::to_string(i) + "]";
    const Json& v = poly[i];
    if (!v.is_array() || v.size() != 2) parse_fail(where + ": expected [x, y]");
    vertices.push_back({coordinate(v[0], where), coordinate(v[1], where)});
  }

  std::vector<LabeledPoint> labeled;
  if (auto it = doc.find("points"); it != doc.end()) {
    if (!it->is_array()) parse_fail("\"points\" must be an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      std::string where = "points[" + std::to_string(i) + "]";
      const Json& p = (*it)[i];
      if (!p.is_object()) parse_fail(where + ": expected an object");
      LabeledPoint lp;
      if (auto lab = p.find("label"); lab != p.end()) {
        if (!lab->is_number_integer()) parse_fail(where + ": label must be an integer");
        lp.label = lab->get<int>();
      } else {
        lp.label = static_cast<int>(i) + 1;
      }
      lp.position = {coordinate(require(p, "x", where), where),
                     coordinate(require(p, "y", where), where)};
      labeled.push_back(std::move(lp));
    }
  }
  std::sort(labeled.begin(), labeled.end(),
            [](const LabeledPoint& a, const LabeledPoint& b) { return a.label < b.label; });
  s.points.points = std::move(labeled);

  if (auto it = doc.find("expected"); it != doc.end()) {
    if (!it->is_object()) parse_fail("\"expected\" must be an object");
    if (auto sh = it->find("shattered"); sh != it->end()) {
      if (!sh->is_boolean()) parse_fail("expected.shattered must be a boolean");
      s.expected.shattered = sh->get<bool>();
    }
    if (auto sc = it->find("signatureCount"); sc != it->end()) {
      if (!sc->is_number_integer()) parse_fail("expected.signatureCount must be an integer");
      s.expected.signature_count = sc->get<int>();
    }
  }

  try {
    s.polygon = validate_polygon(std::move(vertices));
    validate_point_set(s.polygon, s.points);
  } catch (const Error& e) {
    throw Error(ErrorCode::kValidationError, e.what());
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& s) {
  Json doc;
  doc["format"] = 1;
  doc["name"] = s.name;
  doc["metric"] = std::string(to_string(s.metric));
  Json poly = Json::array();
  for (const ExactPoint& v : s.polygon.vertices()) {
    poly.push_back({format_rational(v.x), format_rational(v.y)});
  }
  doc["polygon"] = std::move(poly);
  Json pts = Json::array();
  for (const LabeledPoint& lp : s.points.points) {
    pts.push_back({{"label", lp.label},
                   {"x", format_rational(lp.position.x)},
                   {"y", format_rational(lp.position.y)}});
  }
  doc["points"] = std::move(pts);
  if (s.expected.shattered || s.expected.signature_count) {
    Json exp = Json::object();
    if (s.expected.shattered) exp["shattered"] = *s.expected.shattered;
    if (s.expected.signature_count) exp["signatureCount"] = *s.expected.signature_count;
    doc["expected"] = std::move(exp);
  }
  return doc.dump(2) + "\n";
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << serialize_scenario(scenario);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

}  // namespace vcvis
