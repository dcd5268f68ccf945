#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "unram/catalog/families.hpp"
#include "unram/cli/app.hpp"
#include "unram/cli/criteria.hpp"
#include "unram/cli/group_file.hpp"
#include "unram/errors.hpp"
#include "sylow.hpp"

using namespace unram;
using namespace unram::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/unram_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("group file parse and canonical emission") {
  const std::string text =
      "# C4 acting on Z^2\n"
      "name:   c4_rot   # rotation\n"
      "note: quarter turn\n"
      "dimension: 2\n"
      "generator:\n"
      "   0  1\n"
      "  -1 +0\n";
  GroupFile f = parse_group_file(text);
  CHECK(f.name == "c4_rot");
  CHECK(f.notes == std::vector<std::string>{"quarter turn"});
  CHECK(f.dimension == 2);
  REQUIRE(f.generators.size() == 1);
  CHECK(f.generators[0] == exactla::IntMatrix{{0, 1}, {-1, 0}});
  const std::string canon = emit_group_file(f);
  CHECK(canon == "name: c4_rot\nnote: quarter turn\ndimension: 2\ngenerator:\n  0 1\n  -1 0\n");
  CHECK(parse_group_file(canon) == f);
  CHECK(emit_group_file(parse_group_file(canon)) == canon);
  CHECK(close_group_file(f).order() == 4);

  GroupFile triv = parse_group_file("dimension: 3\n");
  CHECK(triv.generators.empty());
  CHECK(close_group_file(triv).order() == 1);
}

TEST_CASE("group file round trip over the catalog") {
  std::vector<std::pair<std::string, group::MatGroup>> gs;
  for (const auto& n : catalog::builtin_names())
    if (n != "sign_diag_n") gs.push_back({n, catalog::builtin(n)});
  for (const auto& fam : catalog::family_names()) gs.push_back({fam + "_1", catalog::family(fam, fam == "cp2p" ? 3 : 1)});
  for (const auto& [name, g] : gs) {
    GroupFile f = group_file_of(g, name);
    std::string once = emit_group_file(f);
    GroupFile back = parse_group_file(once);
    CHECK(back == f);
    CHECK(emit_group_file(back) == once);
    CHECK(close_group_file(back).order() == g.order());
  }
}

TEST_CASE("malformed group files name the failing line") {
  auto err = [](const std::string& text) {
    try {
      parse_group_file(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(err("generator:\n1\n").find("line 1") != std::string::npos);
  CHECK(err("dimension: 2\ngenerator:\n1 0\n0\n").find("line 4") != std::string::npos);
  CHECK(err("dimension: 2\ngenerator:\n1 0\n").find("1 rows") != std::string::npos);
  CHECK(err("dimension: 1\ngenerator:\nx\n").find("'x'") != std::string::npos);
  CHECK(err("dimension: 1\ncolour: red\n").find("unknown key") != std::string::npos);
  CHECK(err("dimension: 1\n1\n").find("outside a generator") != std::string::npos);
  CHECK(err("name: a\n").find("missing dimension") != std::string::npos);
  CHECK(err("dimension: 2\ndimension: 2\n").find("duplicate") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"h2nr", "--family", "q8n", "--n", "1"}).code == kExitOk);
  CHECK(invoke({"h2nr", "--builtin", "no_such_group"}).code == kExitInput);
  CHECK(invoke({"h2nr"}).code == kExitInput);
  CHECK(invoke({"h2nr", "--builtin", "g7_1", "--family", "d4n", "--n", "1"}).code == kExitInput);
  CHECK(invoke({"h2nr", "--family", "cp2p", "--p", "4"}).code == kExitInput);
  CHECK(invoke({"h2nr", "--family", "d4n"}).code == kExitInput);
  CHECK(invoke({"frobnicate"}).code == kExitInput);
  CHECK(invoke({"h2", "--file", "/nonexistent/file"}).code == kExitInput);
  CHECK(invoke({"b0", "--family", "d4n", "--n", "9"}).code == kExitBudget);
  CHECK(invoke({"b0", "--family", "d4n", "--n", "9", "--b0-max-order", "72"}).code == kExitOk);
  CHECK(invoke({"oracle", "--family", "d4n", "--n", "3"}).code == kExitBudget);
  CHECK(invoke({"classify", "--n", "8"}).code == kExitInput);
  CHECK(invoke({"classify", "--n", "3", "--k", "5"}).code == kExitInput);
  CHECK(invoke({"h2nr", "--builtin", "g7_1", "--maximal-only", "--all-bicyclic"}).code == kExitInput);
  CHECK(invoke({"reproduce", "--suite", "medium"}).code == kExitInput);
  CHECK(invoke({"--help"}).code == kExitOk);
  Run bad = invoke({"h2nr", "--builtin", "no_such_group"});
  CHECK(bad.err == "error: unknown builtin 'no_such_group'\n");

  // a generator of infinite order exceeds the enumeration budget
  std::string path = temp_file("inf.grp", "dimension: 2\ngenerator:\n1 1\n0 1\n");
  CHECK(invoke({"h2", "--file", path}).code == kExitBudget);
  std::string sing = temp_file("sing.grp", "dimension: 2\ngenerator:\n2 0\n0 1\n");
  CHECK(invoke({"h2", "--file", sing}).code == kExitInput);
}

TEST_CASE("command results") {
  auto json = [](const std::vector<std::string>& args) {
    Run r = invoke(args);
    REQUIRE(r.code == kExitOk);
    return nlohmann::json::parse(r.out);
  };
  auto j = json({"h2nr", "--family", "q8n", "--n", "1", "--json"});
  CHECK(j["schema"] == 1);
  CHECK(j["result"]["h2u"]["invariants"] == nlohmann::json::array({2, 2}));
  CHECK(j["result"]["h2u"]["spelling"] == "2,2");
  CHECK(j.contains("seconds"));
  CHECK_FALSE(json({"h2nr", "--family", "q8n", "--n", "1", "--json", "--stable"}).contains("seconds"));

  CHECK(json({"h2nr", "--builtin", "g7_9", "--json"})["result"]["h2u"]["spelling"] == "2,2");
  CHECK(json({"h1", "--builtin", "a6_norm1", "--json"})["result"]["h1"]["spelling"] == "0");
  CHECK(json({"hminus1", "--builtin", "a6_norm1", "--json"})["result"]["hminus1"]["spelling"] == "10");
  CHECK(json({"b0", "--builtin", "hurwitz_sl23", "--json"})["result"]["b0"]["spelling"] == "0");
  auto bru = json({"bru", "--builtin", "a6_norm1", "--json"});
  CHECK(bru["result"]["b0"].is_null());
  CHECK(bru["result"]["br_u"]["spelling"] == "2");
  CHECK(json({"h2nr", "--builtin", "d4_equiv", "--all-bicyclic", "--all-conjugates", "--no-preprocess",
              "--json"})["result"]["h2u"]["spelling"] == "2");

  auto c7 = json({"classify", "--n", "7", "--json"});
  std::vector<std::size_t> counts;
  for (const auto& l : c7["result"]["levels"]) counts.push_back(l["classes"]);
  CHECK(counts == std::vector<std::size_t>{7, 23, 43, 43, 23, 7, 1});
  CHECK(c7["result"]["classes"].size() == 147);
  auto c2 = json({"classify", "--n", "2", "--json"});
  CHECK(c2["result"]["levels"][0]["classes"] == 2);
  CHECK(c2["result"]["levels"][1]["classes"] == 1);
  auto c1 = json({"classify", "--n", "1", "--json"});
  REQUIRE(c1["result"]["levels"].size() == 1);
  CHECK(c1["result"]["levels"][0]["classes"] == 1);
  auto c73 = json({"classify", "--n", "7", "--k", "3", "--json"});
  CHECK(c73["result"]["levels"][0]["split_traces"].size() == 2);

  Run o = invoke({"oracle", "--builtin", "g7_1"});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("PASS") != std::string::npos);
  CHECK(invoke({"oracle", "--family", "d4n", "--n", "1"}).out.find("PASS") != std::string::npos);
  std::string triv = temp_file("triv.grp", "name: trivial\ndimension: 2\n");
  auto tj = json({"oracle", "--file", triv, "--json"});
  CHECK(tj["result"]["verdict"] == "PASS");
  CHECK(tj["result"]["h2"]["invariants"].empty());
  CHECK(tj["result"]["oracle"]["invariants"].empty());
}

TEST_CASE("emit round trips through the file source") {
  Run e = invoke({"emit", "--family", "qd8n", "--n", "1"});
  REQUIRE(e.code == kExitOk);
  std::string path = temp_file("qd.grp", "# written by a test\n" + e.out);
  Run again = invoke({"emit", "--file", path});
  CHECK(again.out == e.out);
  auto a = invoke({"h2nr", "--family", "qd8n", "--n", "1", "--stable"});
  auto b = invoke({"h2nr", "--file", path, "--stable"});
  // same results, different source lines
  CHECK(a.out.substr(a.out.find("h2 ")) == b.out.substr(b.out.find("h2 ")));
}

TEST_CASE("byte determinism under --stable") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"h2nr", "--builtin", "carat_5_100_11", "--json", "--stable"},
           {"h2", "--family", "d4n", "--n", "2", "--json", "--stable"},
           {"classify", "--n", "6", "--json", "--stable"},
           {"bru", "--family", "cp2p", "--p", "3", "--stable"},
           {"oracle", "--builtin", "d4_equiv", "--json", "--stable"}}) {
    Run a = invoke(args), b = invoke(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("corpus helpers") {
  auto corpus = bicyclic_sylow_corpus();
  CHECK(corpus.size() >= 50);
  for (const auto& [name, m] : corpus) {
    CAPTURE(name);
    CHECK(testsupport::sylows_bicyclic(m.group()));
  }
  CHECK_FALSE(sylow_subgroups_bicyclic(catalog::family_d4n(1)));
  CHECK_FALSE(sylow_subgroups_bicyclic(catalog::builtin("hurwitz_sl23")));
  auto r = randomized_small_lattices(24, 5);
  CHECK(r.size() == 24);
  for (const auto& [name, m] : r) {
    CHECK(m.order() <= 12);
    CHECK(m.dim() <= 4);
  }
  CHECK(randomized_small_lattices(6, 9)[3].lattice.rho_generator(0) ==
        randomized_small_lattices(6, 9)[3].lattice.rho_generator(0));
  CHECK(exactla::determinant(random_unimodular(5, 3)) * exactla::determinant(random_unimodular(5, 3)) == 1);
}
