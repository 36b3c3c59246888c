#include "placeforge/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "placeforge/approx/report.hpp"
#include "placeforge/errors.hpp"
#include "placeforge/places/invariants.hpp"
#include "placeforge/places/json.hpp"
#include "placeforge/places/topology.hpp"

namespace placeforge {

namespace {

VarNames residue_names(std::size_t k) {
  VarNames out;
  for (std::size_t j = 1; j <= k; ++j) out.push_back("u" + std::to_string(j));
  return out;
}

Json residue_field_json(const Place& p) {
  Json gens = Json::array();
  for (const auto& g : p.residue_field().gens) gens.push_back(intvec_to_json(g));
  return Json{{"base", base_field_to_json(p.base())}, {"gens", gens}};
}

const TargetShape& require_shape(const Job& job) {
  if (!job.shape) throw ParseError("this command needs a target shape (--shape)");
  return *job.shape;
}

Json cmd_value(const Job& job) {
  Json results = Json::array();
  for (std::size_t i = 0; i < job.elems.size(); ++i) {
    results.push_back(Json{{"elem", job.elem_text[i]}, {"value", value_to_json(value(job.place, job.elems[i]))}});
  }
  return Json{{"ambient", ambient_to_json(job.place.ambient())}, {"results", results}};
}

Json cmd_residue(const Job& job) {
  const VarNames names = residue_names(job.place.dim());
  Json results = Json::array();
  for (std::size_t i = 0; i < job.elems.size(); ++i) {
    const Residue r = residue(job.place, job.elems[i]);
    results.push_back(
        Json{{"elem", job.elem_text[i]}, {"residue", r.is_infinite() ? "infinity" : to_expr(r.function(), names)}});
  }
  return Json{{"residue_field", residue_field_json(job.place)}, {"results", results}};
}

Json classify_json(const Place& p) {
  return Json{{"invariants", invariants_to_json(invariants(p))},
              {"residue_field", residue_field_json(p)},
              {"value_group", elems_to_json(p.ambient(), p.value_group().basis())}};
}

Json cmd_compose(const Job& job) {
  if (!job.outer) throw ParseError("compose needs an outer place (--outer)");
  const Place p = compose(job.place, *job.outer);
  Json out = classify_json(p);
  out["place"] = place_to_json(p);
  return out;
}

Json cmd_witness(const Job& job) {
  const auto r = density_witness(job.place, job.a, job.b, require_shape(job));
  Json out = report_to_json(r, job.vars);
  out["in_neighborhood"] = in_basic_open(r.place, job.a, job.b);
  return out;
}

Json cmd_check_axioms(const Job& job) {
  const auto& sample = job.sample.empty() ? job.elems : job.sample;
  const SpvReport r = check_spv_axioms(job.place, sample);
  Json out{{"pass", r.pass}, {"sample_size", sample.size()}};
  if (!r.pass) {
    out["axiom"] = r.axiom;
    Json w = Json::array();
    for (const auto& f : r.witness) w.push_back(to_expr(f, job.vars));
    out["witness"] = w;
  }
  return out;
}

// "Q", "p" or "Fp".
Json base_flag(const std::string& text) {
  if (text == "Q") return "Q";
  const std::string digits = !text.empty() && text[0] == 'F' ? text.substr(1) : text;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19) {
    throw ParseError("--base: expected Q, a prime p or Fp, got \"" + text + "\"");
  }
  return Json{{"p", std::stoull(digits)}};
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"value",   "residue", "classify",    "compose",
                                              "goodify", "witness", "check-axioms"};
  return names;
}

Json run_command(const std::string& command, const Job& job) {
  if (command == "value") return cmd_value(job);
  if (command == "residue") return cmd_residue(job);
  if (command == "classify") return classify_json(job.place);
  if (command == "compose") return cmd_compose(job);
  if (command == "goodify") return report_to_json(goodify(job.place, job.elems, require_shape(job)), job.vars);
  if (command == "witness") return cmd_witness(job);
  if (command == "check-axioms") return cmd_check_axioms(job);
  throw ParseError("unknown command \"" + command + "\"");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact places of rational function fields: evaluation and good-place witnesses", "placeforge"};
  std::string command, spec_path, base, place, outer, shape, mode, output;
  std::optional<std::size_t> arity;
  std::vector<std::string> vars, elems, a, b;
  app.add_option("command", command, "value | residue | classify | compose | goodify | witness | check-axioms")
      ->check(CLI::IsMember(command_names()));
  app.add_option("--spec", spec_path, "JSON job spec file");
  app.add_option("--base", base, "base field: Q or a prime p");
  app.add_option("--arity", arity, "number of variables");
  app.add_option("--vars", vars, "variable names")->delimiter(',');
  app.add_option("--place", place, "place as JSON text or file");
  app.add_option("--outer", outer, "outer place for compose, JSON text or file");
  app.add_option("--elem", elems, "element expression (repeatable)");
  app.add_option("--a", a, "element required to have value >= 0 (witness)");
  app.add_option("--b", b, "element required to have value > 0 (witness)");
  app.add_option("--shape", shape, "discrete | weighted_rational:r1 | lex_max_rank | composite_drop:d1,r1");
  app.add_option("--mode", mode, "preserve_residues | preserve_both | preserve_values");
  app.add_option("--output", output, "write the report here instead of stdout");

  std::vector<const char*> argv{"placeforge"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    JobSpec spec;
    if (!spec_path.empty()) spec = job_spec_from_json(load_json_argument(spec_path), std::filesystem::path(spec_path).parent_path());
    if (!command.empty()) spec.command = command;
    if (!spec.command) throw ParseError("no command given");
    if (!base.empty()) spec.base = base_flag(base);
    if (arity) spec.arity = arity;
    if (!vars.empty()) spec.vars = vars;
    if (!place.empty()) spec.place = load_json_argument(place);
    if (!outer.empty()) spec.outer = load_json_argument(outer);
    if (!elems.empty()) spec.elems = elems;
    if (!a.empty()) spec.a = a;
    if (!b.empty()) spec.b = b;
    if (!shape.empty()) spec.shape = shape;
    if (!mode.empty()) spec.mode = mode;
    if (!output.empty()) spec.output = output;

    const Job job = resolve(spec);
    const std::string text = run_command(*spec.command, job).dump(2) + "\n";
    if (spec.output) {
      std::ofstream file(*spec.output);
      if (!(file << text)) throw Error("cannot write \"" + *spec.output + "\"");
    } else {
      out << text;
    }
    return 0;
  } catch (const InfeasibleError& e) {
    err << "placeforge: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "placeforge: parse error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "placeforge: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace placeforge
