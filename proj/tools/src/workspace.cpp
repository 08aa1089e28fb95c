#include "workspace.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "coarsetr/error.hpp"

namespace coarsetr::cli {

using coarse::Map;
using coarse::Space;
using grp::GSet;

char const* kind_name(ExitCode code) {
  switch (code) {
    case kOk: return "ok";
    case kUsage: return "usage";
    case kValidation: return "validation";
    case kOutOfScope: return "out-of-scope";
    case kInternal: return "internal";
    case kSyntax: return "syntax";
    case kDangling: return "dangling-reference";
  }
  return "unknown";
}

namespace {

template <class T>
T const* lookup(std::vector<std::pair<std::string, T>> const& v,
                std::string const& name) {
  for (auto const& [k, x] : v)
    if (k == name) return &x;
  return nullptr;
}

std::string escape(std::string const& token) {
  std::string out;
  for (char c : token) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string at(std::string const& pointer, std::string const& token) {
  return pointer + "/" + escape(token);
}
std::string at(std::string const& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

[[noreturn]] void invalid(std::string const& pointer, std::string const& msg) {
  throw CliError(kValidation, pointer, msg);
}

Json const& field(Json const& obj, char const* key, std::string const& pointer) {
  if (!obj.is_object()) invalid(pointer, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) invalid(pointer, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string text(Json const& j, std::string const& pointer) {
  if (!j.is_string()) invalid(pointer, "expected a string");
  return j.get<std::string>();
}

std::uint64_t natural(Json const& j, std::string const& pointer) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    invalid(pointer, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::uint32_t> naturals(Json const& j, std::string const& pointer) {
  if (!j.is_array()) invalid(pointer, "expected an array of integers");
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto v = natural(j[i], at(pointer, i));
    if (v > 0xffffffffu) invalid(at(pointer, i), "value out of range");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

void only_keys(Json const& obj, std::set<std::string> const& allowed,
               std::string const& pointer) {
  if (!obj.is_object()) invalid(pointer, "expected an object");
  for (auto const& [k, v] : obj.items())
    if (!allowed.count(k)) invalid(at(pointer, k), "unknown field \"" + k + "\"");
}

// Runs f, turning library errors into CLI errors at `pointer`.
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

grp::GroupPtr builtin_group(std::string const& name, std::string const& pointer) {
  auto number = [&](std::size_t from) -> std::size_t {
    if (name.size() <= from) invalid(pointer, "unknown builtin group \"" + name + "\"");
    std::size_t n = 0;
    for (std::size_t i = from; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9' || n > 1000)
        invalid(pointer, "unknown builtin group \"" + name + "\"");
      n = n * 10 + static_cast<std::size_t>(name[i] - '0');
    }
    return n;
  };
  if (name == "1" || name == "trivial") return grp::trivial_group();
  if (name == "V4") return grp::klein_four_group();
  if (name.empty()) invalid(pointer, "empty group name");
  switch (name[0]) {
    case 'C': return grp::cyclic_group(number(1));
    case 'S': return grp::symmetric_group(number(1));
    case 'A': return grp::alternating_group(number(1));
    case 'D': {
      std::size_t order = number(1);
      if (order < 2 || order % 2 != 0)
        invalid(pointer, "dihedral groups are named by their (even) order");
      return grp::dihedral_group(order / 2);
    }
    default: invalid(pointer, "unknown builtin group \"" + name + "\"");
  }
}

class Parser {
 public:
  explicit Parser(Json const& root) : root_(root) {}

  Workspace run() {
    only_keys(root_, {"schema", "groups", "spaces", "maps", "spans", "squares",
                      "families", "tasks"},
              "");
    if (root_.contains("schema")) {
      auto const& s = root_["schema"];
      if (!s.is_number_integer() || s.get<std::int64_t>() != 1)
        invalid("/schema", "unsupported schema version (expected 1)");
    }
    each("groups", [&](std::string const& name, Json const& j, std::string const& p) {
      ws_.groups.emplace_back(name, parse_group(j, p));
    });
    each("spaces", [&](std::string const& name, Json const&, std::string const&) {
      resolve_space(name, "/spaces");
    });
    each("maps", [&](std::string const& name, Json const& j, std::string const& p) {
      ws_.maps.emplace_back(name, parse_map(j, p));
    });
    each("spans", [&](std::string const& name, Json const&, std::string const&) {
      resolve_span(name, "/spans");
    });
    each("squares", [&](std::string const& name, Json const& j, std::string const& p) {
      ws_.squares.emplace_back(name, parse_square(j, p));
    });
    each("families", [&](std::string const& name, Json const& j, std::string const& p) {
      ws_.families.emplace_back(name, parse_family(j, p));
    });
    if (root_.contains("tasks")) {
      auto const& tasks = root_["tasks"];
      if (!tasks.is_array()) invalid("/tasks", "expected an array");
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        check_task(tasks[i], at("/tasks", i));
        ws_.tasks.push_back(tasks[i]);
      }
    }
    return std::move(ws_);
  }

 private:
  template <class F>
  void each(char const* section, F&& f) {
    if (!root_.contains(section)) return;
    auto const& obj = root_[section];
    std::string p = std::string("/") + section;
    if (!obj.is_object()) invalid(p, "expected an object of named entries");
    for (auto const& [name, j] : obj.items()) f(name, j, at(p, name));
  }

  // Name lookups; a missing name is a dangling reference at `pointer`.
  grp::GroupPtr const& group_ref(Json const& j, std::string const& pointer) {
    auto name = text(j, pointer);
    if (auto g = ws_.group(name)) return *g;
    throw CliError(kDangling, pointer, "unknown group \"" + name + "\"");
  }

  bool declared(char const* section, std::string const& name) {
    return root_.contains(section) && root_[section].is_object() &&
           root_[section].contains(name);
  }

  Space const& finite_space_ref(Json const& j, std::string const& pointer) {
    auto name = text(j, pointer);
    if (!declared("spaces", name))
      throw CliError(kDangling, pointer, "unknown space \"" + name + "\"");
    resolve_space(name, pointer);
    if (auto s = ws_.space(name)) return *s;
    throw CliError(kOutOfScope, pointer,
                   "space \"" + name + "\" is a tape; a finite space is required here");
  }

  MapEntry const& map_ref(Json const& j, std::string const& pointer) {
    auto name = text(j, pointer);
    if (auto m = ws_.map(name)) return *m;
    throw CliError(kDangling, pointer, "unknown map \"" + name + "\"");
  }

  Map const& finite_map(MapEntry const& m, std::string const& pointer) {
    if (!m.finite)
      throw CliError(kOutOfScope, pointer,
                     "maps touching tapes are not supported here");
    return *m.finite;
  }

  spans::Span const& span_ref(Json const& j, std::string const& pointer) {
    auto name = text(j, pointer);
    if (!declared("spans", name))
      throw CliError(kDangling, pointer, "unknown span \"" + name + "\"");
    resolve_span(name, pointer);
    return *ws_.span(name);
  }

  GSet parse_carrier(Json const& j, grp::GroupPtr const& g, std::string const& p) {
    only_keys(j, {"orbits", "trivial", "action"}, p);
    if (j.size() != 1) invalid(p, "a carrier is given by exactly one of orbits, trivial, action");
    return guarded(p, [&] {
      if (j.contains("trivial"))
        return GSet::trivial(g, natural(j["trivial"], at(p, "trivial")));
      if (j.contains("orbits")) {
        auto const& orbits = j["orbits"];
        std::string op = at(p, "orbits");
        if (!orbits.is_array()) invalid(op, "expected an array of subgroups");
        GSet s = GSet::trivial(g, 0);
        for (std::size_t i = 0; i < orbits.size(); ++i) {
          auto elems = naturals(orbits[i], at(op, i));
          grp::Subgroup h = guarded(at(op, i), [&] { return grp::Subgroup(*g, elems); });
          s = GSet::coproduct(s, GSet::cosets(g, h));
        }
        return s;
      }
      auto const& rows = j["action"];
      std::string ap = at(p, "action");
      if (!rows.is_array() || rows.size() != g->order())
        invalid(ap, "expected one permutation per group element");
      std::vector<grp::Point> table;
      std::size_t size = 0;
      for (std::size_t e = 0; e < rows.size(); ++e) {
        auto row = naturals(rows[e], at(ap, e));
        if (e == 0) size = row.size();
        if (row.size() != size) invalid(at(ap, e), "rows must have equal length");
        table.insert(table.end(), row.begin(), row.end());
      }
      return GSet(g, size, std::move(table));
    });
  }

  Space parse_finite(Json const& j, std::string const& p) {
    only_keys(j, {"group", "carrier", "coarse", "bornology"}, p);
    auto const& g = group_ref(field(j, "group", p), at(p, "group"));
    GSet carrier = parse_carrier(field(j, "carrier", p), g, at(p, "carrier"));
    if (j.contains("bornology")) {
      auto const& b = j["bornology"];
      std::string bp = at(p, "bornology");
      only_keys(b, {"preset"}, bp);
      if (text(field(b, "preset", bp), at(bp, "preset")) != "all")
        invalid(at(bp, "preset"),
                "a finite carrier carries the full bornology (preset \"all\")");
    }
    if (!j.contains("coarse")) return Space::minimal(carrier);
    auto const& c = j["coarse"];
    std::string cp = at(p, "coarse");
    only_keys(c, {"preset", "generators", "components"}, cp);
    if (c.size() != 1)
      invalid(cp, "a coarse structure is given by exactly one of preset, generators, components");
    return guarded(cp, [&]() -> Space {
      if (c.contains("preset")) {
        auto name = text(c["preset"], at(cp, "preset"));
        if (name == "min") return Space::minimal(carrier);
        if (name == "max") return Space::maximal(carrier);
        invalid(at(cp, "preset"), "unknown preset \"" + name + "\" (min or max)");
      }
      if (c.contains("components")) {
        auto const& blocks = c["components"];
        std::string bp = at(cp, "components");
        if (!blocks.is_array()) invalid(bp, "expected an array of point lists");
        std::vector<std::uint32_t> labels(carrier.size(), 0xffffffffu);
        for (std::size_t i = 0; i < blocks.size(); ++i)
          for (auto x : naturals(blocks[i], at(bp, i))) {
            if (x >= carrier.size() || labels[x] != 0xffffffffu)
              invalid(at(bp, i), "components must partition the carrier");
            labels[x] = static_cast<std::uint32_t>(i);
          }
        for (auto l : labels)
          if (l == 0xffffffffu) invalid(bp, "components must cover the carrier");
        return Space::from_partition(carrier, grp::canonical_partition(labels));
      }
      auto const& gens = c["generators"];
      std::string gp = at(cp, "generators");
      if (!gens.is_array()) invalid(gp, "expected an array of entourages");
      std::vector<coarse::Entourage> es;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<std::pair<grp::Point, grp::Point>> pairs;
        std::string ep = at(gp, i);
        if (!gens[i].is_array()) invalid(ep, "expected an array of pairs");
        for (std::size_t k = 0; k < gens[i].size(); ++k) {
          auto pr = naturals(gens[i][k], at(ep, k));
          if (pr.size() != 2) invalid(at(ep, k), "expected a pair");
          if (pr[0] >= carrier.size() || pr[1] >= carrier.size())
            invalid(at(ep, k), "point out of range");
          pairs.emplace_back(pr[0], pr[1]);
        }
        es.push_back(coarse::Entourage::from_pairs(carrier.size(), pairs));
      }
      return guarded(gp, [&] { return Space(carrier, es); });
    });
  }

  void resolve_space(std::string const& name, std::string const& from) {
    if (ws_.space(name) || ws_.tape(name)) return;
    std::string p = at("/spaces", name);
    if (!declared("spaces", name))
      throw CliError(kDangling, from, "unknown space \"" + name + "\"");
    if (visiting_.count("space:" + name))
      invalid(p, "space definition refers to itself");
    visiting_.insert("space:" + name);
    Json const& j = root_["spaces"][name];
    if (!j.is_object()) invalid(p, "expected an object");

    if (j.contains("tape")) {
      only_keys(j, {"tape"}, p);
      auto const& t = j["tape"];
      std::string tp = at(p, "tape");
      only_keys(t, {"fiber", "coarse", "bornology"}, tp);
      Space fiber = finite_space_ref(field(t, "fiber", tp), at(tp, "fiber"));
      auto c = text(field(t, "coarse", tp), at(tp, "coarse"));
      auto b = text(field(t, "bornology", tp), at(tp, "bornology"));
      if (c != "band" && c != "discrete")
        invalid(at(tp, "coarse"), "tape coarse preset must be band or discrete");
      if (b != "finite-window" && b != "all")
        invalid(at(tp, "bornology"), "tape bornology preset must be finite-window or all");
      ws_.tapes.emplace_back(
          name, coarse::TapeSpace(fiber,
                                  c == "band" ? coarse::TapeCoarse::band
                                              : coarse::TapeCoarse::discrete,
                                  b == "all" ? coarse::TapeBornology::all
                                             : coarse::TapeBornology::finite_window));
    } else {
      ws_.spaces.emplace_back(name, parse_space_body(j, p));
    }
    visiting_.erase("space:" + name);
  }

  std::vector<Space> space_list(Json const& j, std::string const& p) {
    if (!j.is_array() || j.empty()) invalid(p, "expected a nonempty array of space names");
    std::vector<Space> out;
    for (std::size_t i = 0; i < j.size(); ++i)
      out.push_back(finite_space_ref(j[i], at(p, i)));
    return out;
  }

  Space parse_space_body(Json const& j, std::string const& p) {
    if (j.contains("tensor")) {
      only_keys(j, {"tensor"}, p);
      auto parts = space_list(j["tensor"], at(p, "tensor"));
      return guarded(p, [&] {
        Space out = parts.front();
        for (std::size_t i = 1; i < parts.size(); ++i)
          out = coarse::tensor(out, parts[i]);
        return out;
      });
    }
    if (j.contains("coproduct")) {
      only_keys(j, {"coproduct"}, p);
      auto parts = space_list(j["coproduct"], at(p, "coproduct"));
      return guarded(p, [&] { return coarse::coproduct(parts); });
    }
    for (char const* kind : {"bounded_union", "free_union"}) {
      if (!j.contains(kind)) continue;
      only_keys(j, {kind}, p);
      auto const& u = j[kind];
      std::string up = at(p, kind);
      only_keys(u, {"space", "index"}, up);
      Space x = finite_space_ref(field(u, "space", up), at(up, "space"));
      GSet index = parse_carrier(field(u, "index", up), x.group(), at(up, "index"));
      return guarded(up, [&] {
        return std::string(kind) == "free_union" ? coarse::free_union(index, x)
                                                 : coarse::bounded_union(index, x);
      });
    }
    if (j.contains("subspace")) {
      only_keys(j, {"subspace"}, p);
      auto const& s = j["subspace"];
      std::string sp = at(p, "subspace");
      only_keys(s, {"space", "points"}, sp);
      Space x = finite_space_ref(field(s, "space", sp), at(sp, "space"));
      auto pts = naturals(field(s, "points", sp), at(sp, "points"));
      for (auto q : pts)
        if (q >= x.size()) invalid(at(sp, "points"), "point out of range");
      return guarded(sp, [&] { return coarse::subspace(x, pts); });
    }
    return parse_finite(j, p);
  }

  coarse::Endpoint endpoint(Json const& j, std::string const& p, std::string& name) {
    name = text(j, p);
    if (!declared("spaces", name))
      throw CliError(kDangling, p, "unknown space \"" + name + "\"");
    resolve_space(name, p);
    if (auto s = ws_.space(name)) return coarse::Endpoint::of(*s);
    return coarse::Endpoint::of(*ws_.tape(name));
  }

  MapEntry parse_map(Json const& j, std::string const& p) {
    only_keys(j, {"src", "dst", "values", "shift", "projection", "embedding"}, p);
    MapEntry m;
    auto src = endpoint(field(j, "src", p), at(p, "src"), m.src);
    auto dst = endpoint(field(j, "dst", p), at(p, "dst"), m.dst);
    if (j.contains("values")) {
      if (!src.finite || !dst.finite)
        invalid(at(p, "values"), "a value table needs finite endpoints; use shift, projection or embedding for tapes");
      m.finite = naturals(j["values"], at(p, "values"));
      guarded(at(p, "values"), [&] {
        coarse::require_equivariant(*m.finite, src.finite->carrier(),
                                    dst.finite->carrier());
        return 0;
      });
      return m;
    }
    using Kind = coarse::TapeMap::Kind;
    for (auto [key, kind] : {std::pair{"shift", Kind::shift},
                             std::pair{"projection", Kind::projection},
                             std::pair{"embedding", Kind::embedding}}) {
      if (!j.contains(key)) continue;
      auto const& t = j[key];
      std::string tp = at(p, key);
      only_keys(t, {"offset", "phi"}, tp);
      coarse::TapeMap tm{kind, 0, naturals(field(t, "phi", tp), at(tp, "phi"))};
      if (t.contains("offset")) tm.offset = natural(t["offset"], at(tp, "offset"));
      guarded(tp, [&] {
        coarse::validate_tape_map(tm, src, dst);
        return 0;
      });
      m.tape = std::move(tm);
      return m;
    }
    invalid(p, "a map needs one of values, shift, projection, embedding");
  }

  void resolve_span(std::string const& name, std::string const& from) {
    if (ws_.span(name)) return;
    std::string p = at("/spans", name);
    if (!declared("spans", name))
      throw CliError(kDangling, from, "unknown span \"" + name + "\"");
    if (visiting_.count("span:" + name))
      invalid(p, "span definition refers to itself");
    visiting_.insert("span:" + name);
    ws_.spans.emplace_back(name, parse_span(root_["spans"][name], p));
    visiting_.erase("span:" + name);
  }

  std::pair<Space, std::size_t> indexed(Json const& j, std::string const& p,
                                        std::set<std::string> extra = {}) {
    extra.insert({"space", "index"});
    only_keys(j, extra, p);
    Space x = finite_space_ref(field(j, "space", p), at(p, "space"));
    return {x, natural(field(j, "index", p), at(p, "index"))};
  }

  spans::Span parse_span(Json const& j, std::string const& p) {
    if (!j.is_object() || j.empty()) invalid(p, "expected an object");
    if (j.contains("left") || j.contains("right")) {
      only_keys(j, {"left", "right"}, p);
      auto const& l = map_ref(field(j, "left", p), at(p, "left"));
      auto const& r = map_ref(field(j, "right", p), at(p, "right"));
      auto const& lm = finite_map(l, at(p, "left"));
      auto const& rm = finite_map(r, at(p, "right"));
      if (l.src != r.src) invalid(p, "left and right legs must share their source (the apex)");
      return guarded(p, [&] {
        return spans::make_span(*ws_.space(l.dst), *ws_.space(l.src),
                                *ws_.space(r.dst), lm, rm);
      });
    }
    if (j.size() != 1) invalid(p, "a span is given by exactly one constructor");
    auto const& [key, v] = *j.items().begin();
    std::string vp = at(p, key);
    return guarded(vp, [&, &key = key, &v = v]() -> spans::Span {
      if (key == "identity") return spans::identity_span(finite_space_ref(v, vp));
      if (key == "embed" || key == "transfer") {
        auto const& m = map_ref(v, vp);
        auto const& f = finite_map(m, vp);
        Space const& a = *ws_.space(m.src);
        Space const& b = *ws_.space(m.dst);
        return key == "embed" ? spans::embed(f, a, b) : spans::transfer(f, a, b);
      }
      if (key == "transfer_index") {
        auto [x, k] = indexed(v, vp);
        return spans::transfer_index(x, GSet::trivial(x.group(), k));
      }
      if (key == "fold") {
        auto [x, k] = indexed(v, vp);
        GSet index = GSet::trivial(x.group(), k);
        return spans::embed(spans::fold_map(x, index),
                            coarse::bounded_union(index, x), x);
      }
      if (key == "slice_projection" || key == "slice_inclusion") {
        auto [x, k] = indexed(v, vp, {"slice"});
        auto i = natural(field(v, "slice", vp), at(vp, "slice"));
        GSet index = GSet::trivial(x.group(), k);
        if (key == "slice_projection")
          return spans::slice_projection(x, index, static_cast<grp::Point>(i));
        return spans::embed(spans::slice_inclusion(x, index, static_cast<grp::Point>(i)),
                            x, coarse::bounded_union(index, x));
      }
      if (key == "zero") {
        only_keys(v, {"src", "dst"}, vp);
        return spans::zero_span(finite_space_ref(field(v, "src", vp), at(vp, "src")),
                                finite_space_ref(field(v, "dst", vp), at(vp, "dst")));
      }
      if (key == "compose" || key == "sum") {
        if (!v.is_array() || v.empty()) invalid(vp, "expected a nonempty array of span names");
        spans::Span acc = span_ref(v[0], at(vp, 0));
        for (std::size_t i = 1; i < v.size(); ++i) {
          auto const& next = span_ref(v[i], at(vp, i));
          acc = guarded(at(vp, i), [&] {
            return key == "compose" ? spans::compose(acc, next) : spans::add(acc, next);
          });
        }
        return acc;
      }
      invalid(vp, "unknown span constructor \"" + key + "\"");
    });
  }

  spans::Square parse_square(Json const& j, std::string const& p) {
    if (j.contains("complete")) {
      only_keys(j, {"complete"}, p);
      auto const& c = j["complete"];
      std::string cp = at(p, "complete");
      only_keys(c, {"g", "u"}, cp);
      auto const& g = map_ref(field(c, "g", cp), at(cp, "g"));
      auto const& u = map_ref(field(c, "u", cp), at(cp, "u"));
      auto const& gm = finite_map(g, at(cp, "g"));
      auto const& um = finite_map(u, at(cp, "u"));
      if (g.dst != u.dst) invalid(cp, "g and u must have the same target");
      return guarded(cp, [&] {
        return spans::complete_square(gm, *ws_.space(g.src), um,
                                      *ws_.space(u.src), *ws_.space(g.dst));
      });
    }
    only_keys(j, {"w", "f", "g", "u"}, p);
    auto const& w = map_ref(field(j, "w", p), at(p, "w"));
    auto const& f = map_ref(field(j, "f", p), at(p, "f"));
    auto const& g = map_ref(field(j, "g", p), at(p, "g"));
    auto const& u = map_ref(field(j, "u", p), at(p, "u"));
    auto const& wm = finite_map(w, at(p, "w"));
    auto const& fm = finite_map(f, at(p, "f"));
    auto const& gm = finite_map(g, at(p, "g"));
    auto const& um = finite_map(u, at(p, "u"));
    spans::Square sq{*ws_.space(w.src), *ws_.space(f.dst), *ws_.space(w.dst),
                     *ws_.space(g.dst), wm, fm, gm, um};
    if (f.src != w.src) invalid(at(p, "f"), "w and f must start at the same space W");
    if (g.src != w.dst) invalid(at(p, "g"), "g must start where w ends (V)");
    if (u.src != f.dst) invalid(at(p, "u"), "u must start where f ends (U)");
    if (u.dst != g.dst) invalid(at(p, "u"), "u and g must end at the same space Z");
    return sq;
  }

  Family parse_family(Json const& j, std::string const& p) {
    only_keys(j, {"group", "preset", "generated_by", "members"}, p);
    std::string gname = text(field(j, "group", p), at(p, "group"));
    auto const& g = group_ref(j["group"], at(p, "group"));
    auto subgroup_list = [&](char const* key) {
      auto const& arr = j[key];
      std::string ap = at(p, key);
      if (!arr.is_array()) invalid(ap, "expected an array of subgroups");
      std::vector<grp::Subgroup> out;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        auto elems = naturals(arr[i], at(ap, i));
        out.push_back(guarded(at(ap, i), [&] { return grp::Subgroup(*g, elems); }));
      }
      return out;
    };
    return guarded(p, [&]() -> Family {
      if (j.contains("preset")) {
        auto name = text(j["preset"], at(p, "preset"));
        if (name != "all" && name != "trivial" && name != "sol" && name != "cyclic")
          invalid(at(p, "preset"), "unknown family preset \"" + name + "\"");
        return {gname, resolve_family(ws_, g, name)};
      }
      if (j.contains("generated_by"))
        return {gname, grp::SubgroupFamily::generated_by(g, subgroup_list("generated_by"))};
      if (j.contains("members"))
        return {gname, grp::SubgroupFamily(g, subgroup_list("members"))};
      invalid(p, "a family needs one of preset, generated_by, members");
    });
  }

  void check_task(Json const& t, std::string const& p) {
    if (!t.is_object()) invalid(p, "expected an object");
    auto op = text(field(t, "op", p), at(p, "op"));
    static std::map<std::string, std::set<std::string>> const fields{
        {"homology", {"space", "max_degree"}},
        {"induced-map", {"span", "max_degree"}},
        {"check-covering", {"map", "window"}},
        {"check-square", {"square"}},
        {"compose", {"spans"}},
        {"check-axioms", {"space", "max_degree"}},
        {"flasque", {"map"}},
        {"mackey-table", {"group", "family", "max_degree"}},
        {"assembly", {"group", "family", "degree"}},
        {"fuzz", {"suite", "cases", "seed"}},
    };
    auto it = fields.find(op);
    if (it == fields.end()) invalid(at(p, "op"), "unknown task \"" + op + "\"");
    auto allowed = it->second;
    allowed.insert("op");
    only_keys(t, allowed, p);
    auto need = [&](char const* key, char const* section) {
      auto fp = at(p, key);
      auto name = text(field(t, key, p), fp);
      if (!declared(section, name))
        throw CliError(kDangling, fp, std::string("unknown ") + key + " \"" + name + "\"");
    };
    if (op == "homology" || op == "check-axioms") need("space", "spaces");
    if (op == "induced-map") need("span", "spans");
    if (op == "check-covering" || op == "flasque") need("map", "maps");
    if (op == "check-square") need("square", "squares");
    if (op == "mackey-table" || op == "assembly") need("group", "groups");
    if (op == "compose") {
      auto const& list = field(t, "spans", p);
      if (!list.is_array() || list.empty())
        invalid(at(p, "spans"), "expected a nonempty array of span names");
      for (std::size_t i = 0; i < list.size(); ++i) {
        auto name = text(list[i], at(at(p, "spans"), i));
        if (!declared("spans", name))
          throw CliError(kDangling, at(at(p, "spans"), i), "unknown span \"" + name + "\"");
      }
    }
    if (t.contains("family")) {
      auto name = text(t["family"], at(p, "family"));
      static std::set<std::string> const presets{"all", "trivial", "sol", "cyclic"};
      if (!presets.count(name) && !declared("families", name))
        throw CliError(kDangling, at(p, "family"), "unknown family \"" + name + "\"");
    }
    for (char const* key : {"max_degree", "window", "degree", "cases", "seed"})
      if (t.contains(key)) natural(t[key], at(p, key));
  }

  Json const& root_;
  Workspace ws_;
  std::set<std::string> visiting_;
};

}  // namespace

grp::GroupPtr const* Workspace::group(std::string const& n) const { return lookup(groups, n); }
coarse::Space const* Workspace::space(std::string const& n) const { return lookup(spaces, n); }
coarse::TapeSpace const* Workspace::tape(std::string const& n) const { return lookup(tapes, n); }
MapEntry const* Workspace::map(std::string const& n) const { return lookup(maps, n); }
spans::Span const* Workspace::span(std::string const& n) const { return lookup(spans, n); }
spans::Square const* Workspace::square(std::string const& n) const { return lookup(squares, n); }
Family const* Workspace::family(std::string const& n) const { return lookup(families, n); }

grp::GroupPtr parse_group(Json const& j, std::string const& p) {
  only_keys(j, {"builtin", "table", "identity", "permutations", "name"}, p);
  std::string name = j.contains("name") ? text(j["name"], at(p, "name")) : "";
  return guarded(p, [&]() -> grp::GroupPtr {
    if (j.contains("builtin")) return builtin_group(text(j["builtin"], at(p, "builtin")), at(p, "builtin"));
    if (j.contains("permutations")) {
      auto const& gens = j["permutations"];
      std::string gp = at(p, "permutations");
      if (!gens.is_array() || gens.empty()) invalid(gp, "expected a nonempty array of permutations");
      std::vector<std::vector<std::uint32_t>> perms;
      for (std::size_t i = 0; i < gens.size(); ++i) perms.push_back(naturals(gens[i], at(gp, i)));
      return grp::permutation_group(perms, name);
    }
    auto const& rows = field(j, "table", p);
    std::string tp = at(p, "table");
    if (!rows.is_array() || rows.empty()) invalid(tp, "expected a square table");
    std::vector<grp::Element> mult;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto row = naturals(rows[i], at(tp, i));
      if (row.size() != rows.size()) invalid(at(tp, i), "table must be square");
      mult.insert(mult.end(), row.begin(), row.end());
    }
    std::uint32_t id = j.contains("identity")
                           ? static_cast<std::uint32_t>(natural(j["identity"], at(p, "identity")))
                           : 0;
    return std::make_shared<const grp::Group>(rows.size(), std::move(mult), id, name);
  });
}

grp::SubgroupFamily resolve_family(Workspace const& ws, grp::GroupPtr const& g,
                                   std::string const& name) {
  if (name == "all") return grp::SubgroupFamily::all(g);
  if (name == "trivial") return grp::SubgroupFamily::trivial(g);
  if (name == "sol") return grp::SubgroupFamily::solvable(g);
  if (name == "cyclic") return grp::SubgroupFamily::cyclic(g);
  if (auto f = ws.family(name)) {
    if (!grp::same_group(f->family.group(), g))
      throw CliError(kValidation, at("/families", name),
                     "family \"" + name + "\" belongs to a different group");
    return f->family;
  }
  throw CliError(kDangling, "", "unknown family \"" + name + "\"");
}

Workspace parse_workspace(std::string const& text) {
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  Json root;
  try {
    root = Json::parse(text);
  } catch (Json::parse_error const& e) {
    throw CliError(kSyntax, "", e.what());
  }
  return Parser(root).run();
}

Workspace load_workspace(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(kUsage, "", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str());
}

}  // namespace coarsetr::cli
