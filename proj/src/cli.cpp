#include "sphemb/cli.hpp"

#include <CLI11.hpp>

#include "sphemb/families.hpp"
#include "sphemb/model_json.hpp"
#include "sphemb/oracle.hpp"

namespace sphemb::cli {

namespace {

struct Options {
  std::string family;
  std::string chi;
  std::string divisor;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  bool oracle = false;
  bool dump = false;
  bool json = true;
};

// "label:int,label:int"
std::vector<std::pair<std::string, Integer>> parse_sparse(const std::string& text, const std::string& flag) {
  std::vector<std::pair<std::string, Integer>> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    std::string item = text.substr(start, comma - start);
    auto colon = item.rfind(':');
    if (colon == std::string::npos || colon == 0)
      throw UsageError(flag + " expects label:coefficient pairs, got '" + item + "'");
    Integer k;
    std::string num = item.substr(colon + 1);
    if (num.empty() || k.set_str(num[0] == '+' ? num.substr(1) : num, 10) != 0)
      throw UsageError(flag + ": bad coefficient '" + num + "'");
    out.emplace_back(item.substr(0, colon), k);
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

Character parse_character(const LatticePtr& lattice, const std::string& text) {
  IntegerVector c(lattice->rank(), 0);
  for (const auto& [label, k] : parse_sparse(text, "--chi")) c[lattice->index_of(label)] += k;
  return Character(lattice, c);
}

Divisor parse_divisor(const SphericalDivisorModel& model, const std::string& text) {
  Divisor d;
  for (const auto& [label, k] : parse_sparse(text, "--divisor")) d.add(model.resolve(label), k);
  return d;
}

Json sparse_character(const Character& chi) {
  Json o = Json::object();
  for (std::size_t i = 0; i < chi.coords().size(); ++i)
    if (chi[i] != 0) o[chi.lattice()->labels()[i]] = to_json(chi[i]);
  return o;
}

Json names_json(const ClassGroup& cg) { return Json(cg.generator_names()); }

const SphericalDivisorModel& need_model(const FamilyInstance& inst) {
  if (!inst.model) throw UsageError("family '" + inst.spec.family + "' has no divisor model");
  return *inst.model;
}

Json class_group_result(const FamilyInstance& inst) {
  ClassGroup cg = class_group(need_model(inst));
  auto p = to_json(cg.presentation());
  p["generators"] = names_json(cg);
  return p;
}

Json canonical_result(const FamilyInstance& inst) {
  const auto& model = need_model(inst);
  ClassGroup cg = class_group(model);
  Divisor k = canonical_divisor(model);
  return Json{{"divisor", to_json(k)}, {"class", to_json(cg.class_of(k))}, {"generators", names_json(cg)}};
}

Json divisor_result(const FamilyInstance& inst, const Options& o) {
  const auto& model = need_model(inst);
  if (o.chi.empty()) throw UsageError("divisor needs --chi");
  Character chi = parse_character(model.lattice, o.chi);
  return Json{{"character", sparse_character(chi)}, {"divisor", to_json(principal_divisor(model, chi))}};
}

Json principality_json(const PrincipalityResult& p) {
  return p.witness ? sparse_character(*p.witness) : Json(nullptr);
}

Json gorenstein_result(const FamilyInstance& inst) {
  const auto& model = need_model(inst);
  ClassGroup cg = class_group(model);
  Divisor k = canonical_divisor(model);
  auto p = is_principal(model, k);
  return Json{{"gorenstein", p.principal},
              {"witness_character", principality_json(p)},
              {"canonical_class", to_json(cg.class_of(k))},
              {"generators", names_json(cg)}};
}

Json class_of_result(const FamilyInstance& inst, const Options& o) {
  const auto& model = need_model(inst);
  if (o.divisor.empty()) throw UsageError("class-of needs --divisor");
  ClassGroup cg = class_group(model);
  Divisor d = parse_divisor(model, o.divisor);
  auto p = is_principal(model, d);
  return Json{{"divisor", to_json(d)},
              {"class", to_json(cg.class_of(d))},
              {"generators", names_json(cg)},
              {"principal", p.principal},
              {"witness_character", principality_json(p)}};
}

Json wonderful_result(const FamilyInstance& inst, const Options& o) {
  if (!inst.wonderful) throw UsageError("wonderful-section needs a wonderful family");
  if (o.chi.empty()) throw UsageError("wonderful-section needs --chi");
  Character chi = parse_character(inst.wonderful->lattice, o.chi);
  return Json{{"character", sparse_character(chi)}, {"divisor", to_json(wonderful_section_divisor(*inst.wonderful, chi))}};
}

Json model_result(const FamilyInstance& inst, const Options& o) {
  if (!o.dump) throw UsageError("model needs --dump");
  return model_to_json(need_model(inst));
}

OracleReport verify_report(const FamilyInstance& inst, const Options& o) {
  if (!o.oracle) throw UsageError("verify needs --oracle");
  if (!inst.realization) throw UsageError("family '" + inst.spec.family + "' has no matrix realization");
  if (o.trials == 0) throw UsageError("--trials must be positive");
  MatrixRealization real = inst.realization(o.seed);
  OracleReport report;

  if (inst.model) {
    std::vector<std::string> names;
    for (const auto& f : real.semi_invariants) names.push_back(f.name);
    report = verify_boundary_valuations(*inst.model, real, names, o.trials, o.seed);
  }
  if (inst.spec.family == "determinantal") {
    auto done = complete_determinantal_model(inst.spec.at("m"), inst.spec.at("n"), inst.spec.at("r"), o.trials, o.seed);
    report.records.insert(report.records.end(), done.records.begin(), done.records.end());
  }

  OracleRecord dim;
  dim.check = "orbit_dimension";
  dim.inputs = Json::object();
  std::size_t found = orbit_dimension(real, o.seed);
  dim.model_value = inst.expected_dimension ? Json(*inst.expected_dimension) : Json(nullptr);
  dim.oracle_value = found;
  dim.match = !inst.expected_dimension || *inst.expected_dimension == found;
  dim.trials = 1;
  report.records.push_back(dim);

  for (bool respect : {true, false}) {
    OracleRecord st;
    st.check = "stabilizer";
    st.inputs = Json{{"block_conditions", respect ? "respected" : "violated"}};
    bool fixed = sampled_stabilizer_check(real, respect, o.trials, o.seed);
    st.model_value = respect;
    st.oracle_value = fixed;
    st.match = fixed == respect;
    st.trials = o.trials;
    report.records.push_back(st);
  }
  return report;
}

Json inputs_json(const std::string& command, const Options& o) {
  Json in = Json::object();
  if (!o.family.empty()) in["family"] = o.family;
  if (!o.chi.empty()) in["chi"] = o.chi;
  if (!o.divisor.empty()) in["divisor"] = o.divisor;
  if (command == "verify") {
    in["trials"] = o.trials;
    in["seed"] = o.seed;
  }
  return in;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Divisor class groups and canonical divisors of spherical embeddings", "sphemb"};
  app.require_subcommand(1, 1);

  std::vector<std::pair<std::string, std::string>> commands = {
      {"class-group", "class group of the family"},
      {"canonical", "canonical divisor and its class"},
      {"divisor", "principal divisor of a character (--chi)"},
      {"gorenstein", "whether the canonical class is trivial"},
      {"class-of", "class of a divisor (--divisor)"},
      {"verify", "randomized matrix oracle (--oracle)"},
      {"wonderful-section", "divisor of the section tau_chi (--chi)"},
      {"model", "serialize the divisor model (--dump)"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--family", o.family, "family spec, e.g. monoid:m=3")->required();
    sub->add_flag("--json", o.json, "JSON output (always on)");
    if (name == "divisor" || name == "wonderful-section") sub->add_option("--chi", o.chi, "label:coefficient,...");
    if (name == "class-of") sub->add_option("--divisor", o.divisor, "label:coefficient,...");
    if (name == "verify") {
      sub->add_flag("--oracle", o.oracle, "run the matrix oracle");
      sub->add_option("--trials", o.trials, "random translates per check");
      sub->add_option("--seed", o.seed, "random seed");
    }
    if (name == "model") sub->add_flag("--dump", o.dump, "print the model document");
  }

  std::string command;
  Json doc;
  int code = kOk;
  try {
    std::vector<std::string> argv_store{"sphemb"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << Json{{"command", "help"}, {"inputs", Json::object()}, {"status", "ok"}, {"result", app.help()}}.dump()
          << "\n";
      return kOk;
    } catch (const CLI::ParseError& e) {
      throw UsageError(e.what());
    }
    command = app.get_subcommands().front()->get_name();

    FamilyInstance inst = make_family(parse_family_spec(o.family), o.trials, o.seed);
    Json result;
    if (command == "class-group")
      result = class_group_result(inst);
    else if (command == "canonical")
      result = canonical_result(inst);
    else if (command == "divisor")
      result = divisor_result(inst, o);
    else if (command == "gorenstein")
      result = gorenstein_result(inst);
    else if (command == "class-of")
      result = class_of_result(inst, o);
    else if (command == "wonderful-section")
      result = wonderful_result(inst, o);
    else if (command == "model")
      result = model_result(inst, o);
    else if (command == "verify") {
      OracleReport report = verify_report(inst, o);
      if (!report.stable()) throw OracleInstability("oracle trials disagree: " + report.to_json().dump());
      result = report.to_json();
    }
    doc = Json{{"command", command}, {"inputs", inputs_json(command, o)}, {"status", "ok"}, {"result", result}};
  } catch (const UsageError& e) {
    code = kUsage;
    doc = Json{{"command", command}, {"inputs", inputs_json(command, o)}, {"status", "error"}, {"message", e.what()}};
  } catch (const DomainError& e) {
    code = kDomain;
    doc = Json{{"command", command}, {"inputs", inputs_json(command, o)}, {"status", "error"}, {"message", e.what()}};
  } catch (const OracleInstability& e) {
    code = kOracleInstability;
    doc = Json{{"command", command}, {"inputs", inputs_json(command, o)}, {"status", "error"}, {"message", e.what()}};
  } catch (const std::exception& e) {
    code = kInternal;
    doc = Json{{"command", command},
               {"inputs", inputs_json(command, o)},
               {"status", "error"},
               {"message", std::string("internal error: ") + e.what()}};
  }
  out << doc.dump() << "\n";
  return code;
}

}  // namespace sphemb::cli
