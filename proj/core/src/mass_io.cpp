#include "mfdim/mass_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mfdim/error.hpp"

namespace mfdim {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

MassFunction parse_mass_function_json(std::string_view text, double sum_tolerance) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
  if (!doc.is_object()) parse_fail("document root must be an object");

  const auto& frame_node = require_field(doc, "frame");
  if (!frame_node.is_array() || frame_node.empty()) parse_fail("'frame' must be a non-empty array of labels");
  std::vector<std::string> labels;
  for (const auto& l : frame_node) {
    if (!l.is_string()) parse_fail("frame labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const FrameOfDiscernment frame(std::move(labels));

  const auto& assignments = require_field(doc, "assignments");
  if (!assignments.is_array()) parse_fail("'assignments' must be an array");
  std::vector<RawAssignment> raw;
  raw.reserve(assignments.size());
  for (const auto& a : assignments) {
    if (!a.is_object()) parse_fail("each assignment must be an object");
    const auto& subset = require_field(a, "subset");
    const auto& mass = require_field(a, "mass");
    if (!subset.is_array()) parse_fail("'subset' must be an array of labels");
    if (!mass.is_number()) parse_fail("'mass' must be a number");
    RawAssignment r{{}, mass.get<double>()};
    for (const auto& l : subset) {
      if (!l.is_string()) parse_fail("subset labels must be strings");
      const auto label = l.get<std::string>();
      auto idx = frame.index_of(label);
      if (!idx) throw Error(ErrorCode::UnknownLabel, "label '" + label + "' is not in the frame");
      r.members.push_back(*idx);
    }
    raw.push_back(std::move(r));
  }
  return validate_mass_function(frame, raw, sum_tolerance);
}

MassFunction read_mass_function_file(const std::filesystem::path& path, double sum_tolerance) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_mass_function_json(buf.str(), sum_tolerance);
}

std::string to_json(const MassFunction& m) {
  using ordered = nlohmann::ordered_json;
  const auto& frame = m.frame();
  ordered doc;
  doc["frame"] = ordered::array();
  for (std::size_t i = 0; i < frame.size(); ++i) doc["frame"].push_back(frame.label(i));
  doc["assignments"] = ordered::array();
  for (const auto& a : m.assignments()) {
    ordered subset = ordered::array();
    for (auto i : a.element.members()) subset.push_back(frame.label(i));
    ordered entry;
    entry["subset"] = std::move(subset);
    entry["mass"] = a.mass;
    doc["assignments"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace mfdim
