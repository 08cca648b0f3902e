#include "groupent/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "groupent/detection.hpp"
#include "groupent/error.hpp"
#include "groupent/io.hpp"

namespace groupent {

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string out;
  std::string format = "json";
  std::string group;
};

struct Inputs {
  std::string function, blocks, state, map, oracle = "blocks";
  int samples = SamplingBudget{}.samples;
  int k = 1;
};

// Result of one command: the report document and the exit code.
struct Outcome {
  Json report;
  int code = 0;
};

double default_tolerance() {
  if (const char* env = std::getenv("PDE_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw CLI::ValidationError("PDE_TOL", "must be a positive number, got '" + std::string(env) + "'");
    }
    return v;
  }
  return kDefaultTolerance;
}

void render_text(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (it->is_object()) {
        render_text(*it, key, os);
      } else {
        os << key << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
      }
    }
  } else {
    os << (prefix.empty() ? "" : prefix + ": ") << j.dump() << "\n";
  }
}

// Appends the fields of src not already present in dst.
void merge(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) {
    if (!dst.contains(it.key())) dst[it.key()] = it.value();
  }
}

TablePtr optional_group(const Common& c) { return c.group.empty() ? nullptr : resolve_group(c.group); }

TablePtr required_group(const Common& c, const char* command) {
  if (c.group.empty()) throw CLI::RequiredError(std::string(command) + ": --group");
  return resolve_group(c.group);
}

GroupFunction load_function(const Inputs& in, const Common& c) {
  return parse_function(read_json_file(in.function), optional_group(c));
}

bool is_builtin(const std::string& spec) { return spec == "theta" || spec == "inversion" || spec == "identity"; }

MapPtr builtin_or_file(const std::string& spec, const TablePtr& g) {
  if (is_builtin(spec) && !g) throw CLI::RequiredError("--group (needed for builtin map '" + spec + "')");
  if (spec == "theta" || spec == "inversion") return make_inversion(g);
  if (spec == "identity") {
    std::vector<int> perm(g->order());
    std::iota(perm.begin(), perm.end(), 0);
    return make_automorphism(g, perm, "identity");
  }
  return parse_map(read_json_file(spec), g);
}

std::vector<MapPtr> detector_maps(const std::string& spec, const TablePtr& g, std::uint64_t seed) {
  if (spec == "library") return detector_library(g, seed);
  return {builtin_or_file(spec, g)};
}

Outcome verify_group_cmd(const Common& c, double tol) {
  const TablePtr t = required_group(c, "verify-group");
  const VerificationReport r = verify_irrep_table(*t, tol);
  Json j;
  j["group"] = t->name();
  j["order"] = t->order();
  j["irreps"] = t->size();
  merge(j, to_json(r));
  return {std::move(j), r.empty() ? 0 : 1};
}

Outcome check_pd_cmd(const Inputs& in, const Common& c, double tol) {
  const GroupFunction f = load_function(in, c);
  if (in.oracle == "blocks") {
    const PDVerdict v = is_positive_definite(f, tol);
    return {to_json(v), v.is_pd ? 0 : 1};
  }
  if (in.oracle == "gram") {
    const PDVerdict v = pd_oracle_gram(f, tol);
    return {to_json(v), v.is_pd ? 0 : 1};
  }
  const PDVerdict b = is_positive_definite(f, tol);
  const PDVerdict g = pd_oracle_gram(f, tol);
  Json j;
  j["is_pd"] = b.is_pd && g.is_pd;
  j["agree"] = b.is_pd == g.is_pd;
  j["blocks"] = to_json(b);
  j["gram"] = to_json(g);
  return {std::move(j), b.is_pd && g.is_pd ? 0 : 1};
}

Outcome gns_cmd(const Inputs& in, const Common& c, double tol) {
  const GroupFunction f = load_function(in, c);
  const GNSData d = gns_construct(f, tol);
  double err = 0.0;
  for (int g = 0; g < f.domain->order(); ++g) {
    err = std::max(err, std::abs(d.cyclic_vector.dot(d.representation[g] * d.cyclic_vector) - f.values(g)));
  }
  Json j;
  j["dimension"] = d.dimension;
  j["gram_rank"] = gram_rank(f, tol);
  j["reconstruction_error"] = err;
  merge(j, to_json(d));
  return {std::move(j), 0};
}

int sep_code(SepVerdict v) {
  switch (v) {
    case SepVerdict::kSeparable:
      return 0;
    case SepVerdict::kEntangled:
      return 1;
    case SepVerdict::kPPTUndecided:
      return 2;
  }
  return kExitInternal;
}

GroupFunction function_or_state(const Inputs& in, const Common& c, const char* command) {
  if (!in.function.empty() && !in.state.empty()) {
    throw CLI::ValidationError(command, "give either --function or --state, not both");
  }
  if (!in.function.empty()) return load_function(in, c);
  if (in.state.empty()) throw CLI::RequiredError(std::string(command) + ": --function or --state");
  const TablePtr t = required_group(c, command);
  const PlacedOperator s = parse_state(read_json_file(in.state), t);
  return characteristic_function(s.matrix, t, s.irrep, true);
}

Outcome classify_cmd(const Inputs& in, const Common& c, double tol) {
  if (in.map.empty()) throw CLI::RequiredError("classify-map: --map");
  const MapPtr m = builtin_or_file(in.map, optional_group(c));
  SamplingBudget budget;
  budget.samples = in.samples;
  budget.seed = c.seed;
  const MapClassification cls = classify_map(*m, budget, tol);
  Json j;
  j["map"] = m->name;
  j["form"] = form_name(m->form);
  merge(j, to_json(cls));
  const int code = cls.is_pd == PDStatus::kProvenPD ? 0 : cls.is_pd == PDStatus::kCounterexampleFound ? 1 : 2;
  return {std::move(j), code};
}

Outcome apply_cmd(const Inputs& in, const Common& c) {
  if (in.map.empty()) throw CLI::RequiredError("apply-map: --map");
  const GroupFunction f = load_function(in, c);
  const ProductFactors* pf = f.domain->factors();
  const TablePtr map_group = pf ? pf->right : f.domain;
  const MapPtr m = builtin_or_file(in.map, map_group);
  if (m->source->same_as(*f.domain)) return {function_to_json(apply_map(*m, f)), 0};
  if (pf && m->source->same_as(*map_group)) return {function_to_json(apply_extended(*m, f)), 0};
  throw DomainMismatch("apply-map: map source '" + m->source->name() + "' matches neither the function domain '" +
                       f.domain->name() + "' nor its second factor");
}

Outcome detect_cmd(const Inputs& in, const Common& c, double tol) {
  const std::string spec = in.map.empty() ? "library" : in.map;
  if (!in.state.empty()) {
    const TablePtr t = required_group(c, "detect");
    const ProductFactors& pf = require_product(t, "detect");
    const PlacedOperator s = parse_state(read_json_file(in.state), t);
    const auto [alpha, beta] = pf.irrep_pairs[s.irrep];
    const SeparabilityReport r = horodecki_scan(s.matrix, t, alpha, beta, detector_maps(spec, pf.right, c.seed), tol);
    Json j;
    j["fired"] = !r.detectors_fired.empty();
    merge(j, to_json(r));
    return {std::move(j), r.detectors_fired.empty() ? 0 : 1};
  }
  if (in.function.empty()) throw CLI::RequiredError("detect: --state or --function");
  const GroupFunction f = load_function(in, c);
  const ProductFactors& pf = require_product(f.domain, "detect");
  bool any = false;
  Json results = Json::array();
  for (const MapPtr& m : detector_maps(spec, pf.right, c.seed)) {
    const DetectionResult d = detect_with_map(f, *m, tol);
    any |= d.fired;
    results.push_back(to_json(d));
  }
  Json j;
  j["fired"] = any;
  j["results"] = std::move(results);
  return {std::move(j), any ? 1 : 0};
}

int exit_for(const std::exception& e, std::ostream& err, int code) {
  err << "error: " << e.what() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-group harmonic analysis and entanglement detection", "groupent"};
  app.require_subcommand(1);
  Common common;
  Inputs in;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Random seed (default 0)");
    sub->add_option("--tol", common.tol, "Tolerance (default $PDE_TOL or 1e-9)")->check(CLI::PositiveNumber);
    sub->add_option("--out", common.out, "Write the report to this file");
    sub->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--group", common.group, "Bundled group name, product such as s3xs3, or group file");
    return sub;
  };

  std::map<std::string, std::function<Outcome(double)>> commands;
  auto command = [&](const char* name, const char* help, std::function<Outcome(double)> body) {
    commands[name] = std::move(body);
    return add_common(app.add_subcommand(name, help));
  };

  command("verify-group", "Check group axioms and irrep table", [&](double tol) {
    return verify_group_cmd(common, tol);
  });
  command("fourier", "Fourier blocks of a function", [&](double) {
    return Outcome{blocks_to_json(fourier_forward(load_function(in, common))), 0};
  })->add_option("--function", in.function)->required();
  command("inv-fourier", "Function from Fourier blocks", [&](double) {
    return Outcome{function_to_json(fourier_inverse(parse_blocks(read_json_file(in.blocks), optional_group(common)))),
                   0};
  })->add_option("--blocks", in.blocks)->required();
  auto* pd = command("check-pd", "Positive definiteness", [&](double tol) { return check_pd_cmd(in, common, tol); });
  pd->add_option("--function", in.function)->required();
  pd->add_option("--oracle", in.oracle, "blocks, gram or both")->check(CLI::IsMember({"blocks", "gram", "both"}));
  command("gns", "GNS reconstruction", [&](double tol) { return gns_cmd(in, common, tol); })
      ->add_option("--function", in.function)
      ->required();
  command("check-ppt", "Partial transpose test on a product group", [&](double tol) {
    const PPTResult r = check_ppt(load_function(in, common), tol);
    return Outcome{to_json(r), r.holds ? 0 : 1};
  })->add_option("--function", in.function)->required();
  auto* sep = command("check-sep", "Per-block separability verdict", [&](double tol) {
    const SeparabilityReport r = check_separability(function_or_state(in, common, "check-sep"), tol);
    return Outcome{to_json(r), sep_code(r.verdict)};
  });
  sep->add_option("--function", in.function);
  sep->add_option("--state", in.state);
  auto* cls = command("classify-map", "PD / CPD classification of a map",
                      [&](double tol) { return classify_cmd(in, common, tol); });
  cls->add_option("--map", in.map, "theta, identity or a map file")->required();
  cls->add_option("--samples", in.samples, "Random probes per block")->check(CLI::PositiveNumber);
  auto* app_map = command("apply-map", "Apply a map (or id⊗map on a product)", [&](double) {
    return apply_cmd(in, common);
  });
  app_map->add_option("--map", in.map)->required();
  app_map->add_option("--function", in.function)->required();
  auto* det = command("detect", "Run detector maps on a state or function", [&](double tol) {
    return detect_cmd(in, common, tol);
  });
  det->add_option("--state", in.state);
  det->add_option("--function", in.function);
  det->add_option("--map", in.map, "theta, identity, library (default) or a map file");
  command("sample-sep", "Random certified separable function", [&](double) {
    return Outcome{function_to_json(make_separable_sample(required_group(common, "sample-sep"), in.k, common.seed)), 0};
  })->add_option("--k", in.k, "Number of product terms")->check(CLI::PositiveNumber);
  command("charfn", "Characteristic function of an operator placed at one block", [&](double) {
    const TablePtr t = required_group(common, "charfn");
    const PlacedOperator s = parse_state(read_json_file(in.state), t);
    return Outcome{function_to_json(characteristic_function(s.matrix, t, s.irrep)), 0};
  })->add_option("--state", in.state)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    return exit_for(e, err, kExitUsage);
  }

  try {
    const double tol = common.tol.value_or(default_tolerance());
    const std::string name = app.get_subcommands().front()->get_name();
    const Outcome result = commands.at(name)(tol);
    std::string text;
    if (common.format == "json") {
      text = result.report.dump(2) + "\n";
    } else {
      std::ostringstream os;
      render_text(result.report, "", os);
      text = os.str();
    }
    if (common.out.empty()) {
      out << text;
    } else {
      write_text_file(common.out, text);
    }
    return result.code;
  } catch (const CLI::Error& e) {
    return exit_for(e, err, kExitUsage);
  } catch (const FormatError& e) {
    return exit_for(e, err, kExitFormat);
  } catch (const DomainMismatch& e) {
    return exit_for(e, err, kExitDomain);
  } catch (const ShapeMismatch& e) {
    return exit_for(e, err, kExitDomain);
  } catch (const PreconditionError& e) {
    return exit_for(e, err, kExitPrecondition);
  } catch (const std::exception& e) {
    return exit_for(e, err, kExitInternal);
  }
}

}  // namespace groupent
