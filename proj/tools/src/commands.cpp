#include "commands.hpp"

#include <atomic>
#include <thread>

#include "coarsetr/error.hpp"
#include "coarsetr/fuzz/properties.hpp"
#include "coarsetr/homology/axioms.hpp"
#include "coarsetr/homology/homology.hpp"
#include "coarsetr/mackey/em.hpp"
#include "coarsetr/spans/covering.hpp"

namespace coarsetr::cli {

using homology::Homology;

namespace {

std::string pointer_of(char const* section, std::string const& name) {
  std::string out = std::string("/") + section + "/";
  for (char c : name) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::uint64_t param(Json const& task, char const* key, std::uint64_t fallback) {
  if (!task.contains(key)) return fallback;
  auto const& v = task[key];
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw CliError(kValidation, std::string("/") + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::optional<std::string> name_param(Json const& task, char const* key) {
  if (!task.contains(key)) return std::nullopt;
  if (!task[key].is_string())
    throw CliError(kValidation, std::string("/") + key, "expected a name");
  return task[key].get<std::string>();
}

template <class F>
auto guarded(std::string const& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (CliError const&) {
    throw;
  } catch (OutOfScopeError const& e) {
    throw CliError(kOutOfScope, pointer, e.what());
  } catch (ValidationError const& e) {
    throw CliError(kValidation, pointer, e.what());
  }
}

// Finite spaces named by the task, or all of them.
std::vector<std::pair<std::string, coarse::Space>> finite_spaces(
    Workspace const& ws, std::optional<std::string> const& name, char const* what) {
  if (!name) return ws.spaces;
  if (auto s = ws.space(*name)) return {{*name, *s}};
  if (ws.tape(*name))
    throw CliError(kOutOfScope, pointer_of("spaces", *name),
                   std::string(what) + " of tape spaces is out of scope");
  throw CliError(kDangling, "/space", "unknown space \"" + *name + "\"");
}

template <class T>
std::vector<std::pair<std::string, T>> select(
    std::vector<std::pair<std::string, T>> const& all, T const* one,
    std::optional<std::string> const& name, char const* kind) {
  if (!name) return all;
  if (!one)
    throw CliError(kDangling, std::string("/") + kind,
                   std::string("unknown ") + kind + " \"" + *name + "\"");
  return {{*name, *one}};
}

Json group_json(homology::AbelianGroup const& a) {
  Json j = Json::object();
  j["rank"] = a.rank;
  Json t = Json::array();
  for (auto const& d : a.torsion) t.push_back(big_json(d));
  j["torsion"] = std::move(t);
  j["group"] = a.str();
  return j;
}

Json diagnostic_json(spans::Diagnostic const& d) {
  Json j = Json::object();
  j["ok"] = d.ok;
  j["label"] = d.label;
  j["condition"] = d.condition;
  j["witness"] = d.witness;
  return j;
}

Output homology_op(Workspace const& ws, Json const& task, Options const& opt) {
  std::size_t deg = param(task, "max_degree", opt.max_degree);
  Output out;
  out.json["op"] = "homology";
  out.json["max_degree"] = deg;
  Json results = Json::array();
  Table t{"homology", {"space", "degree", "rank", "torsion", "group"}, {}};
  for (auto const& [name, x] : finite_spaces(ws, name_param(task, "space"), "homology")) {
    Homology h(x, deg);
    Json r = Json::object();
    r["space"] = name;
    r["points"] = x.size();
    Json degrees = Json::array();
    for (std::size_t n = 0; n <= deg; ++n) {
      auto a = h.degree(n).group();
      Json d = Json::object();
      d["degree"] = n;
      d.update(group_json(a));
      degrees.push_back(std::move(d));
      t.rows.push_back({name, std::to_string(n), std::to_string(a.rank),
                        torsion_text(a), a.str()});
    }
    r["degrees"] = std::move(degrees);
    results.push_back(std::move(r));
  }
  out.json["results"] = std::move(results);
  out.tables.push_back(std::move(t));
  return out;
}

Output induced_map_op(Workspace const& ws, Json const& task, Options const& opt) {
  std::size_t deg = param(task, "max_degree", opt.max_degree);
  auto name = name_param(task, "span");
  Output out;
  out.json["op"] = "induced-map";
  out.json["max_degree"] = deg;
  Json results = Json::array();
  Table t{"induced maps", {"span", "degree", "source", "target", "matrix"}, {}};
  for (auto const& [sname, s] : select(ws.spans, name ? ws.span(*name) : nullptr, name, "span")) {
    Homology src(s.src, deg), dst(s.dst, deg);
    Json r = Json::object();
    r["span"] = sname;
    Json degrees = Json::array();
    for (std::size_t n = 0; n <= deg; ++n) {
      auto m = homology::induced_map(s, src, dst, n);
      auto a = src.degree(n).group(), b = dst.degree(n).group();
      Json d = Json::object();
      d["degree"] = n;
      d["source"] = a.str();
      d["target"] = b.str();
      d["matrix"] = matrix_json(m);
      degrees.push_back(std::move(d));
      t.rows.push_back({sname, std::to_string(n), a.str(), b.str(), matrix_text(m)});
    }
    r["degrees"] = std::move(degrees);
    results.push_back(std::move(r));
  }
  out.json["results"] = std::move(results);
  out.tables.push_back(std::move(t));
  return out;
}

Output check_covering_op(Workspace const& ws, Json const& task, Options const& opt) {
  std::uint64_t window = param(task, "window", opt.window);
  auto name = name_param(task, "map");
  Output out;
  out.json["op"] = "check-covering";
  out.json["window"] = window;
  Json results = Json::array();
  Table t{"coverings", {"map", "check", "ok", "label", "condition", "witness"}, {}};
  for (auto const& [mname, m] : select(ws.maps, name ? ws.map(*name) : nullptr, name, "map")) {
    spans::Diagnostic coarse_cov, cov;
    if (m.finite) {
      auto const& w = *ws.space(m.src);
      auto const& z = *ws.space(m.dst);
      coarse_cov = spans::is_bounded_coarse_covering(*m.finite, w, z);
      cov = spans::is_bounded_covering(*m.finite, w, z);
    } else {
      auto end = [&](std::string const& n) {
        if (auto s = ws.space(n)) return coarse::Endpoint::of(*s);
        return coarse::Endpoint::of(*ws.tape(n));
      };
      auto src = end(m.src), dst = end(m.dst);
      coarse_cov = spans::tape_is_bounded_coarse_covering(*m.tape, src, dst);
      cov = spans::tape_is_bounded_covering(*m.tape, src, dst, window);
    }
    Json r = Json::object();
    r["map"] = mname;
    r["kind"] = m.finite ? "finite" : "tape";
    r["bounded_coarse_covering"] = diagnostic_json(coarse_cov);
    r["bounded_covering"] = diagnostic_json(cov);
    results.push_back(std::move(r));
    for (auto const& [check, d] : {std::pair{"bounded coarse covering", &coarse_cov},
                                   std::pair{"bounded covering", &cov}})
      t.rows.push_back({mname, check, yes(d->ok), d->label, d->condition, d->witness});
  }
  out.json["results"] = std::move(results);
  out.tables.push_back(std::move(t));
  return out;
}

Output check_square_op(Workspace const& ws, Json const& task, Options const&) {
  auto name = name_param(task, "square");
  Output out;
  out.json["op"] = "check-square";
  Json results = Json::array();
  Table t{"squares", {"square", "admissible", "left edge covering", "label", "condition", "witness"}, {}};
  for (auto const& [sname, sq] : select(ws.squares, name ? ws.square(*name) : nullptr, name, "square")) {
    auto d = spans::is_admissible(sq);
    Json r = Json::object();
    r["square"] = sname;
    r["admissible"] = d.verdict.ok;
    r["left_edge_covering"] = d.left_edge_covering;
    r["label"] = d.verdict.label;
    r["condition"] = d.verdict.condition;
    r["witness"] = d.verdict.witness;
    results.push_back(std::move(r));
    t.rows.push_back({sname, yes(d.verdict.ok), yes(d.left_edge_covering), d.verdict.label,
                      d.verdict.condition, d.verdict.witness});
  }
  out.json["results"] = std::move(results);
  out.tables.push_back(std::move(t));
  return out;
}

Json map_json(coarse::Map const& m) {
  Json j = Json::array();
  for (auto v : m) j.push_back(v);
  return j;
}

Output compose_op(Workspace const& ws, Json const& task, Options const&) {
  if (!task.contains("spans") || !task["spans"].is_array() || task["spans"].empty())
    throw CliError(kUsage, "/spans", "compose needs at least one span name");
  Output out;
  out.json["op"] = "compose";
  Json names = Json::array();
  Table t{"composite", {"step", "span", "source", "apex", "target"}, {}};
  std::optional<spans::Span> acc;
  std::size_t step = 0;
  for (auto const& n : task["spans"]) {
    if (!n.is_string()) throw CliError(kValidation, "/spans", "expected span names");
    auto name = n.get<std::string>();
    auto const* s = ws.span(name);
    if (!s) throw CliError(kDangling, "/spans", "unknown span \"" + name + "\"");
    acc = acc ? guarded(pointer_of("spans", name), [&] { return spans::compose(*acc, *s); }) : *s;
    names.push_back(name);
    t.rows.push_back({std::to_string(step++), name, std::to_string(acc->src.size()),
                      std::to_string(acc->apex.size()), std::to_string(acc->dst.size())});
  }
  auto valid = spans::validate_span(*acc);
  Json c = Json::object();
  c["source_points"] = acc->src.size();
  c["apex_points"] = acc->apex.size();
  c["target_points"] = acc->dst.size();
  c["left"] = map_json(acc->left);
  c["right"] = map_json(acc->right);
  c["valid"] = diagnostic_json(valid);
  out.json["spans"] = std::move(names);
  out.json["composite"] = std::move(c);
  out.tables.push_back(std::move(t));
  auto legs = [](coarse::Map const& m) {
    std::string s;
    for (auto v : m) s += (s.empty() ? "" : " ") + std::to_string(v);
    return s.empty() ? "-" : s;
  };
  out.lines.push_back("left leg:  " + legs(acc->left));
  out.lines.push_back("right leg: " + legs(acc->right));
  out.lines.push_back(std::string("valid span: ") + yes(valid.ok));
  return out;
}

Json flasque_json(std::string const& map, homology::FlasqueReport const& f) {
  Json j = Json::object();
  j["map"] = map;
  j["witness"] = f.ok();
  j["is_morphism"] = f.is_morphism;
  j["close_to_identity"] = f.close_to_identity;
  j["iterates_controlled"] = f.iterates_controlled;
  j["escapes_bounded_sets"] = f.escapes_bounded_sets;
  j["label"] = f.label;
  return j;
}

void flasque_row(Table& t, std::string const& map, homology::FlasqueReport const& f) {
  t.rows.push_back({map, yes(f.ok()), yes(f.is_morphism), yes(f.close_to_identity),
                    yes(f.iterates_controlled), yes(f.escapes_bounded_sets), f.label});
}

Table flasque_table() {
  return {"flasque witnesses",
          {"map", "witness", "morphism", "close to id", "iterates controlled",
           "escapes bounded", "label"},
          {}};
}

homology::FlasqueReport flasque_of(Workspace const& ws, MapEntry const& m,
                                   std::string const& pointer) {
  if (m.src != m.dst)
    throw CliError(kValidation, pointer, "a flasque witness must be an endomorphism");
  return guarded(pointer, [&] {
    if (m.finite) return homology::check_flasque_witness(*ws.space(m.src), *m.finite);
    return homology::check_flasque_witness(*ws.tape(m.src), *m.tape);
  });
}

Output check_axioms_op(Workspace const& ws, Json const& task, Options const& opt) {
  std::size_t deg = param(task, "max_degree", opt.max_degree);
  auto name = name_param(task, "space");
  Output out;
  out.json["op"] = "check-axioms";
  out.json["max_degree"] = deg;
  Json results = Json::array();
  Table t{"axioms", {"space", "axiom", "ok", "label", "failures"}, {}};
  bool all_ok = true;
  std::vector<std::pair<std::string, coarse::Space>> spaces;
  if (!name || !ws.tape(*name)) spaces = finite_spaces(ws, name, "check-axioms");
  for (auto const& [sname, x] : spaces) {
    Json r = Json::object();
    r["space"] = sname;
    Json checks = Json::array();
    for (auto const& c : homology::check_axioms(x, deg)) {
      Json cj = Json::object();
      cj["axiom"] = c.name;
      cj["ok"] = c.ok;
      cj["label"] = c.label;
      cj["failures"] = c.failures;
      checks.push_back(std::move(cj));
      std::string why;
      for (auto const& f : c.failures) why += (why.empty() ? "" : "; ") + f;
      t.rows.push_back({sname, c.name, yes(c.ok), c.label, why.empty() ? "-" : why});
      all_ok = all_ok && c.ok;
    }
    r["axioms"] = std::move(checks);
    results.push_back(std::move(r));
  }
  out.json["results"] = std::move(results);
  Json flasque = Json::array();
  Table ft = flasque_table();
  for (auto const& [mname, m] : ws.maps) {
    if (m.src != m.dst || (name && m.src != *name)) continue;
    if (m.tape && m.tape->kind != coarse::TapeMap::Kind::shift) continue;
    auto f = flasque_of(ws, m, pointer_of("maps", mname));
    flasque.push_back(flasque_json(mname, f));
    flasque_row(ft, mname, f);
  }
  out.json["flasque"] = std::move(flasque);
  out.json["all_axioms_hold"] = all_ok;
  out.tables.push_back(std::move(t));
  if (!ft.rows.empty()) out.tables.push_back(std::move(ft));
  return out;
}

Output flasque_op(Workspace const& ws, Json const& task, Options const&) {
  auto name = name_param(task, "map");
  if (!name) throw CliError(kUsage, "/map", "flasque needs a map");
  auto const* m = ws.map(*name);
  if (!m) throw CliError(kDangling, "/map", "unknown map \"" + *name + "\"");
  auto f = flasque_of(ws, *m, pointer_of("maps", *name));
  Output out;
  out.json["op"] = "flasque";
  out.json.update(flasque_json(*name, f));
  Table t = flasque_table();
  flasque_row(t, *name, f);
  out.tables.push_back(std::move(t));
  return out;
}

std::pair<std::string, grp::GroupPtr> group_of(Workspace const& ws, Json const& task) {
  if (auto name = name_param(task, "group")) {
    if (auto g = ws.group(*name)) return {*name, *g};
    throw CliError(kDangling, "/group", "unknown group \"" + *name + "\"");
  }
  if (ws.groups.size() == 1) return ws.groups.front();
  throw CliError(kUsage, "/group",
                 "the workspace declares " + std::to_string(ws.groups.size()) +
                     " groups; name one");
}

std::string elements_text(grp::Subgroup const& h) {
  std::string s = "{";
  for (std::size_t i = 0; i < h.elements().size(); ++i)
    s += (i ? "," : "") + std::to_string(h.elements()[i]);
  return s + "}";
}

Output mackey_table_op(Workspace const& ws, Json const& task, Options const& opt) {
  std::size_t deg = param(task, "max_degree", opt.max_degree);
  auto [gname, g] = group_of(ws, task);
  std::string fname = name_param(task, "family").value_or("all");
  auto family = resolve_family(ws, g, fname);
  auto table = guarded("", [&] { return mackey::mackey_table(g, family, deg); });

  Output out;
  out.json["op"] = "mackey-table";
  out.json["group"] = gname;
  out.json["family"] = fname;
  out.json["max_degree"] = deg;
  Table objects{"values", {"object", "subgroup order", "subgroup"}, {}};
  for (std::size_t n = 0; n <= deg; ++n) objects.columns.push_back("EM_" + std::to_string(n));
  Json objs = Json::array();
  for (std::size_t i = 0; i < table.objects.size(); ++i) {
    auto const& o = table.objects[i];
    Json oj = Json::object();
    oj["object"] = i;
    oj["subgroup"] = o.subgroup.elements();
    Json values = Json::array();
    std::vector<std::string> row{std::to_string(i), std::to_string(o.subgroup.order()),
                                 elements_text(o.subgroup)};
    for (auto const& a : o.value) {
      values.push_back(group_json(a));
      row.push_back(a.str());
    }
    oj["values"] = std::move(values);
    objs.push_back(std::move(oj));
    objects.rows.push_back(std::move(row));
  }
  Table maps{"restrictions and transfers", {"from", "to", "degree", "restriction", "transfer"}, {}};
  Json entries = Json::array();
  for (auto const& e : table.entries) {
    Json ej = Json::object();
    ej["from"] = e.from;
    ej["to"] = e.to;
    Json res = Json::array(), tr = Json::array();
    for (std::size_t n = 0; n < e.restriction.size(); ++n) {
      res.push_back(matrix_json(e.restriction[n]));
      tr.push_back(matrix_json(e.transfer[n]));
      maps.rows.push_back({std::to_string(e.from), std::to_string(e.to), std::to_string(n),
                           matrix_text(e.restriction[n]), matrix_text(e.transfer[n])});
    }
    ej["restriction"] = std::move(res);
    ej["transfer"] = std::move(tr);
    entries.push_back(std::move(ej));
  }
  out.json["objects"] = std::move(objs);
  out.json["entries"] = std::move(entries);
  out.tables.push_back(std::move(objects));
  out.tables.push_back(std::move(maps));
  return out;
}

Output assembly_op(Workspace const& ws, Json const& task, Options const&) {
  std::size_t deg = param(task, "degree", 0);
  auto [gname, g] = group_of(ws, task);
  auto fname = name_param(task, "family");
  if (!fname) throw CliError(kUsage, "/family", "assembly needs a family");
  auto family = resolve_family(ws, g, *fname);
  auto r = guarded("", [&] { return mackey::assembly(g, family, deg); });

  Output out;
  out.json["op"] = "assembly";
  out.json["group"] = gname;
  out.json["family"] = *fname;
  out.json["degree"] = r.degree;
  out.json["object_orders"] = r.object_orders;
  out.json["arrow_count"] = r.arrow_count;
  out.json["colimit"] = group_json(r.colimit());
  out.json["target"] = group_json(r.target());
  out.json["matrix"] = matrix_json(r.matrix);
  out.json["injective"] = r.injective;
  out.json["split"] = r.split;
  out.json["label"] = r.label;
  Table t{"assembly", {"group", "family", "degree", "objects", "arrows", "colimit", "target", "matrix"}, {}};
  t.rows.push_back({gname, *fname, std::to_string(deg), std::to_string(r.object_orders.size()),
                    std::to_string(r.arrow_count), r.colimit().str(), r.target().str(),
                    matrix_text(r.matrix)});
  out.tables.push_back(std::move(t));
  std::string verdict = r.injective ? (r.split ? "split injective" : "injective, not split")
                                    : "not injective";
  out.lines.push_back("verdict: " + verdict + " (" + r.label + ")");
  return out;
}

Output fuzz_op(Workspace const&, Json const& task, Options const& opt) {
  std::uint64_t seed = param(task, "seed", opt.seed);
  std::uint64_t cases = param(task, "cases", 100);
  std::vector<fuzz::Suite> chosen;
  if (auto name = name_param(task, "suite")) {
    auto const* s = fuzz::find_suite(*name);
    if (!s) throw CliError(kUsage, "/suite", "unknown suite \"" + *name + "\"");
    chosen.push_back(*s);
  } else {
    chosen = fuzz::suites();
  }
  Output out;
  out.json["op"] = "fuzz";
  out.json["seed"] = seed;
  out.json["cases"] = cases;
  Json results = Json::array();
  Table t{"fuzz", {"suite", "cases", "passed", "first failure"}, {}};
  bool all_ok = true;
  for (auto const& s : chosen) {
    auto sum = fuzz::run_suite(s, seed, cases, opt.threads);
    Json r = Json::object();
    r["suite"] = sum.name;
    r["cases"] = sum.cases;
    r["passed"] = sum.passed;
    Json failures = Json::array();
    for (auto const& [index, msg] : sum.failures) {
      Json f = Json::object();
      f["case"] = index;
      f["case_seed"] = fuzz::case_seed(seed, index);
      f["message"] = msg;
      failures.push_back(std::move(f));
    }
    r["failures"] = std::move(failures);
    results.push_back(std::move(r));
    std::string first = sum.failures.empty()
                            ? "-"
                            : "case " + std::to_string(sum.failures.front().first) + ": " +
                                  sum.failures.front().second;
    t.rows.push_back({sum.name, std::to_string(sum.cases), std::to_string(sum.passed), first});
    all_ok = all_ok && sum.failures.empty();
  }
  out.json["results"] = std::move(results);
  out.json["ok"] = all_ok;
  out.tables.push_back(std::move(t));
  // A failing property is a defect in the library, not in the input.
  if (!all_ok) out.code = kInternal;
  return out;
}

}  // namespace

Output run_task(Workspace const& ws, Json const& task, Options const& opt) {
  if (!task.is_object() || !task.contains("op") || !task["op"].is_string())
    throw CliError(kValidation, "/op", "a task needs an \"op\"");
  auto op = task["op"].get<std::string>();
  Output out;
  try {
    if (op == "homology") out = homology_op(ws, task, opt);
    else if (op == "induced-map") out = induced_map_op(ws, task, opt);
    else if (op == "check-covering") out = check_covering_op(ws, task, opt);
    else if (op == "check-square") out = check_square_op(ws, task, opt);
    else if (op == "compose") out = compose_op(ws, task, opt);
    else if (op == "check-axioms") out = check_axioms_op(ws, task, opt);
    else if (op == "flasque") out = flasque_op(ws, task, opt);
    else if (op == "mackey-table") out = mackey_table_op(ws, task, opt);
    else if (op == "assembly") out = assembly_op(ws, task, opt);
    else if (op == "fuzz") out = fuzz_op(ws, task, opt);
    else throw CliError(kValidation, "/op", "unknown task \"" + op + "\"");
  } catch (CliError const&) {
    throw;
  } catch (OutOfScopeError const& e) {
    throw CliError(kOutOfScope, "", e.what());
  } catch (ValidationError const& e) {
    throw CliError(kValidation, "", e.what());
  } catch (InternalError const& e) {
    throw CliError(kInternal, "", e.what());
  }
  Json framed = Json::object();
  framed["schema"] = 1;
  framed.update(out.json);
  out.json = std::move(framed);
  return out;
}

Output run_tasks(Workspace const& ws, Options const& opt) {
  std::size_t n = ws.tasks.size();
  std::vector<Output> results(n);
  std::vector<std::optional<CliError>> errors(n);
  std::atomic<std::size_t> next{0};
  // Tasks on worker threads run fuzz suites single-threaded.
  Options inner = opt;
  unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(n)));
  if (workers > 1) inner.threads = 1;
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        results[i] = run_task(ws, ws.tasks[i], inner);
      } catch (CliError const& e) {
        errors[i] = CliError(e.code, "/tasks/" + std::to_string(i) + e.pointer, e.what());
      } catch (std::exception const& e) {
        errors[i] = CliError(kInternal, "/tasks/" + std::to_string(i), e.what());
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Output out;
  out.json["schema"] = 1;
  out.json["op"] = "run";
  Json tasks = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json entry = Json::object();
    entry["task"] = i;
    entry["op"] = ws.tasks[i]["op"];
    std::string prefix = "task " + std::to_string(i) + " (" + ws.tasks[i]["op"].get<std::string>() + ")";
    if (errors[i]) {
      entry.update(error_json(*errors[i]));
      out.lines.push_back(prefix + ": error (" + kind_name(errors[i]->code) + ") at " +
                          errors[i]->pointer + ": " + errors[i]->what());
      if (out.code == kOk) out.code = errors[i]->code;
    } else {
      auto& r = results[i];
      r.json.erase("schema");
      entry["report"] = std::move(r.json);
      for (auto& t : r.tables) {
        t.title = prefix + ": " + t.title;
        out.tables.push_back(std::move(t));
      }
      for (auto& l : r.lines) out.lines.push_back(prefix + ": " + l);
      if (out.code == kOk) out.code = r.code;
    }
    tasks.push_back(std::move(entry));
  }
  out.json["tasks"] = std::move(tasks);
  return out;
}

}  // namespace coarsetr::cli
