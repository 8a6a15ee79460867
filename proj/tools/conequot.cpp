// conequot: classify embeddings from a lattice grading given as a JSON document.

#include "conequot/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace conequot;

namespace {

struct Options {
  std::string output = "json";
  std::size_t max_omega = kDefaultMaxOmega;
  bool strict = false;
  std::string path;
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InputDocument load(const Options& opt) {
  ParseResult parsed = parse_input(read_all(opt.path), opt.strict);
  for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(parsed.document);
}

void print(const Options& opt, const Json& json, const std::string& text) {
  if (opt.output == "json")
    std::cout << format_json(json);
  else
    std::cout << text;
}

int run(const std::string& verb, const Options& opt) {
  const InputDocument doc = load(opt);
  if (verb == "validate") {
    const ValidationReport v = validate(doc.grading);
    print(opt, validation_to_json(doc, v), validation_to_text(doc, v));
    return v.faithful && v.facet_condition_holds() ? 0 : 2;
  }
  if (verb == "orbit-cones" || verb == "git-fan") {
    validate_faithful(doc.grading);
    const OrbitConeSet omega = orbit_cones(doc.grading);
    for (const auto& w : omega.warnings) std::cerr << "warning: " << w << "\n";
    if (verb == "orbit-cones") {
      print(opt, orbit_cones_to_json(omega), orbit_cones_to_text(omega));
    } else {
      const GitFan fan = git_fan(omega);
      print(opt, git_fan_to_json(fan), git_fan_to_text(fan));
    }
    return 0;
  }
  PipelineOptions popts;
  popts.max_omega = opt.max_omega;
  popts.with_geometry = verb != "collections";
  const Classification c = classify(doc, popts);
  if (verb == "collections")
    print(opt, collections_to_json(c), collections_to_text(c));
  else if (verb == "classify")
    print(opt, classification_to_json(c), classification_to_text(c));
  else
    std::cout << emit_dot(c);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify small equivariant embeddings from a lattice grading"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("CONEQUOT_MAX_OMEGA")) {
    try {
      opt.max_omega = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: CONEQUOT_MAX_OMEGA must be a positive integer\n";
      return 2;
    }
  }
  app.add_option("--output", opt.output, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-omega", opt.max_omega, "Largest orbit cone set enumerated for collections")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", opt.strict, "Reject unknown fields in the input document");

  const std::pair<const char*, const char*> verbs[] = {
      {"validate", "Check the input and the facet condition"},
      {"orbit-cones", "List the orbit cones"},
      {"git-fan", "List the GIT fan"},
      {"collections", "List the 2-maximal collections and the morphisms between embeddings"},
      {"classify", "Full report including geometry of every embedding"},
      {"dot", "Morphism diagram of the embeddings in DOT"},
  };
  for (const auto& [name, help] : verbs) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("input", opt.path, "Input document (- for stdin)")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    return run(verb, opt);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
