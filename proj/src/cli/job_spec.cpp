#include "placeforge/cli/job_spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "placeforge/errors.hpp"
#include "placeforge/places/json.hpp"

namespace placeforge {

namespace {

std::vector<std::string> string_list(const Json& j, const char* key) {
  if (!j.is_array()) throw ParseError(std::string("job spec: \"") + key + "\" must be a list of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(std::string("job spec: \"") + key + "\" must be a list of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

std::string string_field(const Json& j, const char* key) {
  if (!j.is_string()) throw ParseError(std::string("job spec: \"") + key + "\" must be a string");
  return j.get<std::string>();
}

std::vector<RatFunc> parse_all(const std::vector<std::string>& texts, const Job& job, const char* what) {
  std::vector<RatFunc> out;
  for (const auto& t : texts) {
    try {
      out.push_back(parse_expr(t, job.arity, job.base, job.vars));
    } catch (const ParseError& e) {
      // e.what() already names the position.
      throw ParseError(std::string(what) + " \"" + t + "\": " + e.what());
    }
  }
  return out;
}

}  // namespace

Json load_json_argument(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  try {
    if (first != std::string::npos && text[first] == '{') return Json::parse(text);
    std::ifstream in(text);
    if (!in) throw ParseError("cannot open \"" + text + "\"");
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

JobSpec job_spec_from_json(const Json& j, const std::filesystem::path& dir) {
  if (!j.is_object()) throw ParseError("job spec: expected a JSON object");
  static const std::set<std::string> known{"command", "base",  "arity", "vars",  "place", "outer", "elems",
                                           "A",       "B",     "sample", "shape", "mode",  "output"};
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw ParseError("job spec: unknown key \"" + key + "\"");
  }
  JobSpec s;
  if (j.contains("command")) s.command = string_field(j["command"], "command");
  if (j.contains("base")) s.base = j["base"];
  if (j.contains("arity")) {
    if (!j["arity"].is_number_unsigned()) throw ParseError("job spec: \"arity\" must be a nonnegative integer");
    s.arity = j["arity"].get<std::size_t>();
  }
  if (j.contains("vars")) s.vars = string_list(j["vars"], "vars");
  auto place_field = [&](const Json& v) {
    return v.is_string() ? load_json_argument((dir / v.get<std::string>()).string()) : v;
  };
  if (j.contains("place")) s.place = place_field(j["place"]);
  if (j.contains("outer")) s.outer = place_field(j["outer"]);
  if (j.contains("elems")) s.elems = string_list(j["elems"], "elems");
  if (j.contains("A")) s.a = string_list(j["A"], "A");
  if (j.contains("B")) s.b = string_list(j["B"], "B");
  if (j.contains("sample")) s.sample = string_list(j["sample"], "sample");
  if (j.contains("shape")) s.shape = string_field(j["shape"], "shape");
  if (j.contains("mode")) s.mode = string_field(j["mode"], "mode");
  if (j.contains("output")) s.output = string_field(j["output"], "output");
  return s;
}

Job resolve(const JobSpec& spec) {
  if (!spec.place) throw ParseError("no place given");
  Place place = [&] {
    try {
      return place_from_json(*spec.place);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("place: ") + e.what());
    }
  }();
  Job job{place, std::nullopt, place.base(), place.arity(), spec.vars, {}, {}, {}, {}, spec.elems, std::nullopt};
  if (spec.base && !(base_field_from_json(*spec.base) == place.base())) {
    throw DomainError("base " + spec.base->dump() + " does not match the place's base " + place.base().name());
  }
  if (spec.arity && *spec.arity != place.arity()) {
    throw DomainError("arity " + std::to_string(*spec.arity) + " does not match the place's " +
                      std::to_string(place.arity()) + " weights");
  }
  if (!job.vars.empty() && job.vars.size() != place.arity()) {
    throw DomainError("expected " + std::to_string(place.arity()) + " variable names");
  }
  if (spec.outer) {
    try {
      job.outer = place_from_json(*spec.outer);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("outer place: ") + e.what());
    }
  }
  job.elems = parse_all(spec.elems, job, "element");
  job.a = parse_all(spec.a, job, "A element");
  job.b = parse_all(spec.b, job, "B element");
  job.sample = parse_all(spec.sample, job, "sample element");
  if (spec.shape) {
    std::optional<Mode> mode;
    if (spec.mode) mode = parse_mode(*spec.mode);
    TargetShape shape = parse_shape(*spec.shape, mode.value_or(Mode::preserve_residues));
    if (!mode && shape.cls == ShapeClass::composite_drop) shape.mode = Mode::preserve_values;
    job.shape = shape;
  } else if (spec.mode) {
    parse_mode(*spec.mode);
  }
  return job;
}

}  // namespace placeforge
