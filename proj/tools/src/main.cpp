#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace coarsetr::cli;

namespace {

std::string read_input(std::string const& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kUsage, "", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file holding a single group description is read as a workspace with
// that one group.
Workspace load(std::string const& path) {
  std::string text = read_input(path);
  auto doc = Json::parse(text, nullptr, false);
  if (doc.is_object() &&
      (doc.contains("builtin") || doc.contains("table") || doc.contains("permutations"))) {
    Json ws = Json::object();
    ws["schema"] = 1;
    ws["groups"]["G"] = doc;
    return parse_workspace(ws.dump());
  }
  return parse_workspace(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coarse homology with transfers and Mackey functors over finite groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  std::string format = "table";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  app.add_option("--max-degree", opt.max_degree, "Highest homology degree")->capture_default_str();
  app.add_option("--window", opt.window, "Probe window for tape spaces")->capture_default_str();
  app.add_option("--seed", opt.seed, "Fuzzing seed")->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  std::string file;
  Json task = Json::object();
  std::string name, group, family, suite;
  std::vector<std::string> span_list;
  std::size_t degree = 0;
  std::uint64_t cases = 100;

  auto command = [&](char const* op, char const* help) {
    auto* sub = app.add_subcommand(op, help);
    sub->callback([&task, op] { task["op"] = op; });
    return sub;
  };
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("workspace", file, "Workspace JSON file, or - for stdin")->required();
  };

  auto* homology = command("homology", "Homology groups of finite spaces");
  with_file(homology);
  homology->add_option("--space", name, "Space name (default: every finite space)");

  auto* induced = command("induced-map", "Maps induced on homology by spans");
  with_file(induced);
  induced->add_option("--span", name, "Span name (default: every span)");

  auto* covering = command("check-covering", "Bounded covering checks for maps");
  with_file(covering);
  covering->add_option("--map", name, "Map name (default: every map)");

  auto* square = command("check-square", "Admissibility of squares");
  with_file(square);
  square->add_option("--square", name, "Square name (default: every square)");

  auto* compose = command("compose", "Compose spans left to right");
  with_file(compose);
  compose->add_option("spans", span_list, "Span names")->required();

  auto* axioms = command("check-axioms", "Homology axioms and flasque witnesses");
  with_file(axioms);
  axioms->add_option("--space", name, "Space name (default: every finite space)");

  auto* mackey = command("mackey-table", "Values, restrictions and transfers of EM");
  with_file(mackey);
  mackey->add_option("--group", group, "Group name (default: the only group)");
  mackey->add_option("--family", family, "all, trivial, sol, cyclic or a declared family");

  auto* assembly = command("assembly", "Assembly map for a family in one degree");
  with_file(assembly);
  assembly->add_option("--group", group, "Group name (default: the only group)");
  assembly->add_option("--family", family, "all, trivial, sol, cyclic or a declared family")
      ->required();
  assembly->add_option("--degree", degree, "Degree")->capture_default_str();

  auto* fuzz = command("fuzz", "Run the property suites on generated cases");
  fuzz->add_option("--cases", cases, "Cases per suite")->capture_default_str();
  fuzz->add_option("--suite", suite, "Suite name (default: all)");

  auto* run = command("run", "Run the task list of a workspace");
  with_file(run);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::table;
  try {
    Workspace ws;
    if (!fuzz->parsed()) ws = load(file);
    Output out;
    if (run->parsed()) {
      out = run_tasks(ws, opt);
    } else {
      auto put = [&](char const* key, std::string const& v) {
        if (!v.empty()) task[key] = v;
      };
      std::string op = task["op"];
      put(op == "homology" || op == "check-axioms" ? "space"
          : op == "induced-map"                    ? "span"
          : op == "check-covering"                 ? "map"
                                                   : "square",
          op == "mackey-table" || op == "assembly" || op == "compose" || op == "fuzz" ? ""
                                                                                      : name);
      put("group", group);
      put("family", family);
      put("suite", suite);
      if (op == "compose") task["spans"] = span_list;
      if (op == "assembly") task["degree"] = degree;
      if (op == "fuzz") task["cases"] = cases;
      out = run_task(ws, task, opt);
    }
    std::cout << render(out, fmt);
    return out.code;
  } catch (CliError const& e) {
    std::cerr << render_error(e, fmt);
    return e.code;
  } catch (std::exception const& e) {
    CliError err(kInternal, "", e.what());
    std::cerr << render_error(err, fmt);
    return kInternal;
  }
}
