#include <gtest/gtest.h>

#include "commands.hpp"
#include "workspace.hpp"

using namespace coarsetr::cli;

namespace {

ExitCode code_of(std::string const& text, std::string* pointer = nullptr) {
  try {
    parse_workspace(text);
  } catch (CliError const& e) {
    if (pointer) *pointer = e.pointer;
    return e.code;
  }
  return kOk;
}

TEST(Parse, EmptyDocuments) {
  for (auto text : {"", "  \n", "{}", R"({"schema": 1})"}) {
    auto ws = parse_workspace(text);
    EXPECT_TRUE(ws.groups.empty() && ws.spaces.empty() && ws.tasks.empty());
  }
}

TEST(Parse, ErrorKinds) {
  std::string ptr;
  EXPECT_EQ(code_of("{", &ptr), kSyntax);
  EXPECT_EQ(code_of(R"({"schema": 2})", &ptr), kValidation);
  EXPECT_EQ(ptr, "/schema");
  EXPECT_EQ(code_of(R"({"spaces": {"x": {"group": "G", "carrier": {"trivial": 1}}}})", &ptr),
            kDangling);
  EXPECT_EQ(ptr, "/spaces/x/group");
  EXPECT_EQ(code_of(R"({"groups": {"G": {"builtin": "Q8"}}})", &ptr), kValidation);
  EXPECT_EQ(ptr, "/groups/G/builtin");
  EXPECT_EQ(code_of(R"({"groups": {"G": {"builtin": "C2"}},
                        "spaces": {"x": {"group": "G", "carrier": {"trivial": 1},
                                         "bornology": {"preset": "finite-window"}}}})",
                    &ptr),
            kValidation);
  EXPECT_EQ(ptr, "/spaces/x/bornology/preset");
  EXPECT_EQ(code_of(R"({"spans": {"a": {"compose": ["a"]}}})", &ptr), kValidation);
  EXPECT_EQ(code_of(R"({"tasks": [{"op": "homology", "space": "nowhere"}]})", &ptr), kDangling);
  EXPECT_EQ(ptr, "/tasks/0/space");
  EXPECT_EQ(code_of(R"({"bogus": 1})", &ptr), kValidation);
}

TEST(Parse, NonEquivariantMapIsRejected) {
  std::string ptr;
  auto text = R"({"groups": {"G": {"builtin": "C2"}},
    "spaces": {"free": {"group": "G", "carrier": {"orbits": [[0]]}},
               "two": {"group": "G", "carrier": {"trivial": 2}}},
    "maps": {"m": {"src": "free", "dst": "two", "values": [0, 1]}}})";
  EXPECT_EQ(code_of(text, &ptr), kValidation);
  EXPECT_EQ(ptr, "/maps/m/values");
}

TEST(Parse, BundledFixtureValidates) {
  auto ws = load_workspace(COARSETR_FIXTURE_DIR "/c2_workspace.json");
  EXPECT_EQ(ws.groups.size(), 1u);
  EXPECT_EQ(ws.spaces.size(), 5u);
  EXPECT_EQ(ws.tapes.size(), 1u);
  EXPECT_EQ(ws.spans.size(), 9u);
  EXPECT_EQ(ws.squares.size(), 1u);
  EXPECT_FALSE(ws.tasks.empty());
}

Workspace point_workspace() {
  return parse_workspace(R"({"schema": 1, "groups": {"C2": {"builtin": "C2"}},
    "spaces": {"pt": {"group": "C2", "carrier": {"trivial": 1}},
               "ray": {"tape": {"fiber": "pt", "coarse": "band", "bornology": "finite-window"}}}})");
}

TEST(Tasks, HomologyOfThePoint) {
  auto out = run_task(point_workspace(), {{"op", "homology"}, {"space", "pt"}}, {});
  auto const& row = out.tables.at(0).rows.at(0);
  EXPECT_EQ(row, (std::vector<std::string>{"pt", "0", "1", "-", "Z"}));
  EXPECT_EQ(out.json["results"][0]["degrees"][0]["rank"], 1);
  EXPECT_TRUE(out.json["results"][0]["degrees"][0]["torsion"].empty());
}

TEST(Tasks, TapeHomologyIsOutOfScope) {
  try {
    run_task(point_workspace(), {{"op", "homology"}, {"space", "ray"}}, {});
    FAIL() << "expected an out-of-scope error";
  } catch (CliError const& e) {
    EXPECT_EQ(e.code, kOutOfScope);
  }
}

TEST(Tasks, AssemblyReport) {
  auto ws = parse_workspace(R"({"groups": {"C2": {"builtin": "C2"}}})");
  auto out = run_task(ws, {{"op", "assembly"}, {"family", "trivial"}}, {});
  EXPECT_EQ(out.json["schema"], 1);
  EXPECT_EQ(out.json["injective"], true);
  EXPECT_EQ(out.json["split"], false);
  EXPECT_EQ(out.json["label"], "empirical");
  EXPECT_EQ(out.json["matrix"], Json::parse("[[2]]"));
}

TEST(Tasks, FuzzSummaryIsDeterministic) {
  Workspace ws;
  Json task{{"op", "fuzz"}, {"seed", 0}, {"cases", 100}};
  Options one, many;
  many.threads = 8;
  auto a = render(run_task(ws, task, one), Format::json);
  auto b = render(run_task(ws, task, many), Format::json);
  EXPECT_EQ(a, b);
  EXPECT_EQ(run_task(ws, task, one).code, kOk);
}

TEST(Tasks, FixtureRunIsOrderedAndThreadIndependent) {
  auto ws = load_workspace(COARSETR_FIXTURE_DIR "/c2_workspace.json");
  Options one, many;
  many.threads = 8;
  auto a = run_tasks(ws, one);
  auto b = run_tasks(ws, many);
  EXPECT_EQ(a.code, kOk);
  for (auto f : {Format::json, Format::table, Format::csv})
    EXPECT_EQ(render(a, f), render(b, f));
  for (std::size_t i = 0; i < ws.tasks.size(); ++i)
    EXPECT_EQ(a.json["tasks"][i]["task"], i);
}

TEST(Render, CsvQuotesAndTableAligns) {
  Output out;
  out.tables.push_back({"t", {"a", "bb"}, {{"x,y", "1"}, {"long value", "2"}}});
  EXPECT_EQ(render(out, Format::csv), "table,a,bb\nt,\"x,y\",1\nt,long value,2\n");
  EXPECT_EQ(render(out, Format::table),
            "t\na           bb\n----------  --\nx,y         1\nlong value  2\n");
}

}  // namespace
