// idcode: identifying/separating codes on digraphs, the closure family of
// extremal digraphs, and set-system tooling around distinguishing elements.
//
// Exit codes: 0 on success (including negative answers), 1 when a
// verification sweep records failures, 2 on usage, format or input errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "idcode/code_solver.hpp"
#include "idcode/errors.hpp"
#include "idcode/family.hpp"
#include "idcode/io.hpp"
#include "idcode/set_system.hpp"
#include "idcode/verify.hpp"

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw idcode::Error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw idcode::Error("malformed vertex list entry '" + item + "'");
    }
  }
  return out;
}

// Set-system elements are 0-indexed in every file format and in --json
// output; human-readable output shifts them up by one.
int human_element(int e) { return e + 1; }

ordered_json elements_json(const idcode::VertexSet& s) {
  return ordered_json(s.to_vector());
}

std::string human_element_set(const idcode::VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(human_element(e));
    first = false;
  }
  return out + "}";
}

int default_workers() {
  if (const char* env = std::getenv("IDCODE_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return 1;
    }
  }
  return 1;
}

struct Options {
  bool json = false;
  std::string file;
  std::string code_list;
  bool emit_forest = false;
  std::string theorem;
  idcode::VerifyParams params;
};

int cmd_min_code(const Options& opt, bool identifying) {
  const idcode::Digraph d = idcode::parse_digraph(read_file(opt.file));
  const idcode::MinCode result = identifying ? idcode::min_identifying_code(d)
                                             : idcode::min_separating_code(d);
  const char* name = identifying ? "gamma_id" : "gamma_s";
  if (opt.json) {
    ordered_json j;
    j[name] = result.size;
    j["code"] = result.code.to_vector();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << name << " = " << result.size << "; code = " << result.code.to_string()
              << "\n";
  }
  return 0;
}

int cmd_check_code(const Options& opt) {
  const idcode::Digraph d = idcode::parse_digraph(read_file(opt.file));
  const idcode::VertexSet code =
      idcode::VertexSet::of(d.order(), parse_int_list(opt.code_list));
  const idcode::CodeReport r = idcode::check_code(d, code);
  if (opt.json) {
    ordered_json j;
    j["dominating"] = r.dominating;
    if (r.undominated_witness) j["undominated"] = *r.undominated_witness;
    j["separating"] = r.separating;
    if (r.unseparated_witness)
      j["unseparated"] = {r.unseparated_witness->first, r.unseparated_witness->second};
    j["identifying"] = r.identifying;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "dominating = " << (r.dominating ? "true" : "false");
    if (r.undominated_witness)
      std::cout << " (vertex " << *r.undominated_witness << " undominated)";
    std::cout << "; separating = " << (r.separating ? "true" : "false");
    if (r.unseparated_witness)
      std::cout << " (pair (" << r.unseparated_witness->first << ","
                << r.unseparated_witness->second << ") unseparated)";
    std::cout << "; identifying = " << (r.identifying ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_check_family(const Options& opt) {
  const idcode::Digraph d = idcode::parse_digraph(read_file(opt.file));
  const auto forest = idcode::recognize_family(d);
  if (opt.json) {
    ordered_json j;
    j["in_family"] = forest.has_value();
    if (forest) {
      ordered_json pairs = ordered_json::array();
      for (int v = 0; v < forest->size(); ++v)
        if (auto p = forest->parent(v)) pairs.push_back({v, *p});
      j["forest"] = std::move(pairs);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (forest ? "in family" : "not in family") << "\n";
    if (forest && opt.emit_forest) std::cout << idcode::serialize_forest(*forest);
  }
  return 0;
}

int cmd_bondy(const Options& opt, const std::string& which) {
  const idcode::SetSystem sys = idcode::parse_set_system(read_file(opt.file));
  if (which == "element") {
    const int x = idcode::bondy_element(sys);
    if (opt.json) {
      ordered_json j;
      j["element"] = x;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "element = " << human_element(x) << "\n";
    }
    return 0;
  }
  const idcode::VertexSet removed =
      which == "reduce" ? idcode::bondy_reduce(sys) : idcode::bondy_reduce_nonempty(sys);
  if (opt.json) {
    ordered_json j;
    j["removed"] = elements_json(removed);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "removed = " << human_element_set(removed) << "\n";
  }
  return 0;
}

int cmd_extremal_check(const Options& opt) {
  const idcode::SetSystem sys = idcode::parse_set_system(read_file(opt.file));
  const idcode::DirectExtremalCheck c = idcode::is_extremal_direct(sys);
  if (opt.json) {
    ordered_json j;
    j["extremal"] = c.extremal;
    if (c.good_element) j["witness_element"] = *c.good_element;
    std::cout << j.dump() << "\n";
  } else if (c.extremal) {
    std::cout << "extremal\n";
  } else {
    std::cout << "not extremal; witness element " << human_element(*c.good_element)
              << "\n";
  }
  return 0;
}

int cmd_extremal_witness(const Options& opt) {
  const idcode::SetSystem sys = idcode::parse_set_system(read_file(opt.file));
  const idcode::ExtremalWitness w = idcode::extremal_witness(sys);
  if (opt.json) {
    ordered_json j;
    j["extremal"] = w.extremal();
    if (w.extremal()) {
      j["digraph"] = idcode::serialize_digraph(w.certificate->digraph);
      ordered_json pairs = ordered_json::array();
      for (int v = 0; v < w.certificate->forest.size(); ++v)
        if (auto p = w.certificate->forest.parent(v)) pairs.push_back({v, *p});
      j["forest"] = std::move(pairs);
      j["matching"] = w.certificate->matching;
    } else {
      j["witness_element"] = *w.good_element;
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (!w.extremal()) {
    std::cout << "not extremal; witness element " << human_element(*w.good_element)
              << "\n";
    return 0;
  }
  std::cout << "extremal\n";
  std::cout << "digraph:\n" << idcode::serialize_digraph(w.certificate->digraph);
  std::cout << "forest:\n" << idcode::serialize_forest(w.certificate->forest);
  std::cout << "matching:";
  for (std::size_t i = 0; i < w.certificate->matching.size(); ++i)
    std::cout << " A" << i + 1 << "->" << human_element(w.certificate->matching[i]);
  std::cout << "\n";
  return 0;
}

int cmd_convert(const Options& opt, const std::string& which) {
  const std::string text = read_file(opt.file);
  if (which == "d2b") {
    std::cout << idcode::serialize_bipartite(
                     idcode::digraph_to_bipartite(idcode::parse_digraph(text)))
              << "\n";
  } else if (which == "b2d") {
    std::cout << idcode::serialize_digraph(
        idcode::bipartite_to_digraph(idcode::parse_bipartite(text)));
  } else {  // sys2b
    std::cout << idcode::serialize_bipartite(
                     idcode::incidence_bipartite(idcode::parse_set_system(text)))
              << "\n";
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  const idcode::VerifyReport r = idcode::verify(opt.theorem, opt.params);
  if (opt.json)
    std::cout << idcode::report_to_json(r) << "\n";
  else
    std::cout << idcode::report_to_text(r);
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"identifying codes, extremal digraphs and set-system tools"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  opt.params.workers = default_workers();
  app.add_flag("--json", opt.json, "machine-readable output");

  auto* min_id = app.add_subcommand("min-id", "minimum identifying code of a digraph");
  min_id->add_option("file", opt.file, "digraph file")->required();

  auto* min_sep = app.add_subcommand("min-sep", "minimum separating code of a digraph");
  min_sep->add_option("file", opt.file, "digraph file")->required();

  auto* check_code = app.add_subcommand("check-code", "evaluate a candidate code");
  check_code->add_option("file", opt.file, "digraph file")->required();
  check_code->add_option("--code", opt.code_list, "comma-separated vertices")->required();

  auto* check_family =
      app.add_subcommand("check-family", "closure-family membership of a digraph");
  check_family->add_option("file", opt.file, "digraph file")->required();
  check_family->add_flag("--emit-forest", opt.emit_forest, "print the underlying forest");

  auto* bondy = app.add_subcommand("bondy", "distinguishing-element operations");
  bondy->require_subcommand(1);
  std::string bondy_mode;
  for (const char* name : {"element", "reduce", "reduce-nonempty"}) {
    auto* sub = bondy->add_subcommand(name);
    sub->add_option("file", opt.file, "set-system JSON file")->required();
    sub->callback([&bondy_mode, name] { bondy_mode = name; });
  }

  auto* extremal = app.add_subcommand("extremal", "extremal set-system operations");
  extremal->require_subcommand(1);
  std::string extremal_mode;
  for (const char* name : {"check", "witness"}) {
    auto* sub = extremal->add_subcommand(name);
    sub->add_option("file", opt.file, "set-system JSON file")->required();
    sub->callback([&extremal_mode, name] { extremal_mode = name; });
  }

  auto* convert = app.add_subcommand("convert", "format conversions");
  convert->require_subcommand(1);
  std::string convert_mode;
  for (const char* name : {"d2b", "b2d", "sys2b"}) {
    auto* sub = convert->add_subcommand(name);
    sub->add_option("file", opt.file, "input file")->required();
    sub->callback([&convert_mode, name] { convert_mode = name; });
  }

  auto* verify = app.add_subcommand("verify", "exhaustive/randomized theorem sweeps");
  verify->add_option("theorem", opt.theorem, "theorem id")->required();
  verify->add_option("--max-n", opt.params.max_n, "largest instance size");
  verify->add_option("--samples", opt.params.samples, "number of random samples");
  verify->add_option("--seed", opt.params.seed, "random seed");
  verify->add_option("--workers", opt.params.workers,
                     "parallel workers (default: IDCODE_WORKERS or 1)");
  verify->add_flag("--oriented", opt.params.oriented, "sweep oriented digraphs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (min_id->parsed()) return cmd_min_code(opt, true);
    if (min_sep->parsed()) return cmd_min_code(opt, false);
    if (check_code->parsed()) return cmd_check_code(opt);
    if (check_family->parsed()) return cmd_check_family(opt);
    if (bondy->parsed()) return cmd_bondy(opt, bondy_mode);
    if (extremal->parsed())
      return extremal_mode == "check" ? cmd_extremal_check(opt) : cmd_extremal_witness(opt);
    if (convert->parsed()) return cmd_convert(opt, convert_mode);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
