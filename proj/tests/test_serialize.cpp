// The workspace file format: canonical save, tolerant load, and the exact
// error vocabulary for malformed input.  The shipped corpus files double
// as golden data — they must be reproducible from the builders byte for
// byte, and loading then saving any of them must be the identity.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "../tools/corpus.hpp"
#include "catkit/catkit.hpp"

using namespace catkit;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string corpus_path(const std::string& name) {
  return std::string(CATKIT_SOURCE_DIR) + "/corpus/" + name + ".ck";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, w] : catkit_corpus::corpus_workspaces()) out.push_back(name);
    return out;
  }();
  return names;
}

}  // namespace

TEST_CASE("every corpus file is reproducible from its builder, byte for byte") {
  auto all = catkit_corpus::corpus_workspaces();
  REQUIRE(all.size() == 4);
  for (const auto& [name, w] : all) {
    INFO(name);
    CHECK(slurp(corpus_path(name)) == save_workspace(w));
  }
}

TEST_CASE("loading then saving a corpus file is the identity") {
  for (const auto& name : corpus_names()) {
    INFO(name);
    std::string text = slurp(corpus_path(name));
    Workspace w = load_workspace(text);
    CHECK(save_workspace(w) == text);
  }
}

TEST_CASE("a loaded workspace carries the same entities the builders produce") {
  Workspace w = load_workspace(slurp(corpus_path("chain3")));
  REQUIRE(w.categories.count("chain3") == 1);
  CHECK(*w.categories["chain3"] == *chain_category(3));

  REQUIRE(w.monads.count("closure") == 1);
  Monad built = closure_monad(chain_category(3), {0, 2, 2});
  CHECK(w.monads["closure"].endo.ob_map == built.endo.ob_map);
  CHECK(w.monads["closure"].endo.mor_map == built.endo.mor_map);
  CHECK(w.monads["closure"].unit.components == built.unit.components);
  CHECK(w.monads["closure"].mult.components == built.mult.components);

  REQUIRE(w.tuples.count("closure.lax") == 1);
  REQUIRE(w.tuples.count("closure.oplax") == 1);
  CHECK(w.tuples["closure.lax"].variant == Laxity::lax);
  CHECK(w.tuples["closure.oplax"].variant == Laxity::oplax);
  MonoidalMonadTuple t = closure_tuple(chain_category(3), {0, 2, 2}, Laxity::lax);
  CHECK(w.tuples["closure.lax"].interchange.components == t.interchange.components);
  CHECK(w.tuples["closure.lax"].unit_cell == t.unit_cell);
  CHECK(check_interchange_equivalence(w.tuples["closure.lax"]).ok);
  CHECK(check_interchange_equivalence(w.tuples["closure.oplax"]).ok);

  Workspace z = load_workspace(slurp(corpus_path("z2")));
  REQUIRE(z.monoidals.count("mult") == 1);
  REQUIRE(z.monoidals["mult"].braid.has_value());
  CHECK(z.monoidals["mult"].braid->symmetric);
  CHECK(z.monoidals["mult"].braid->components.at({"*", "*"}) == "e");
  CHECK(check_braiding(z.monoidals["mult"]).ok());

  Workspace b = load_workspace(slurp(corpus_path("broken_pentagon")));
  REQUIRE(b.monoidals.count("bent") == 1);
  Report r = check_monoidal(b.monoidals["bent"]);
  CHECK_FALSE(r.ok());
  CHECK(r.count("pentagon") >= 1);
  CHECK(r.count("triangle") >= 1);
}

TEST_CASE("the variant field is authoritative and the request fills its absence") {
  std::string text = slurp(corpus_path("chain3"));

  SECTION("a stated variant agreeing with the request loads fine") {
    nlohmann::json j = nlohmann::json::parse(text);
    j["tuples"].erase("closure.oplax");
    Workspace w = load_workspace(j.dump(), Laxity::lax);
    CHECK(w.tuples["closure.lax"].variant == Laxity::lax);
  }
  SECTION("a stated variant contradicting the request is an error") {
    nlohmann::json j = nlohmann::json::parse(text);
    j["tuples"].erase("closure.oplax");
    CHECK_THROWS_WITH(
        load_workspace(j.dump(), Laxity::oplax),
        ContainsSubstring("the file says lax but the command requested oplax"));
  }
  SECTION("an absent variant takes the requested orientation") {
    nlohmann::json j = nlohmann::json::parse(text);
    j["tuples"]["closure.lax"].erase("variant");
    j["tuples"].erase("closure.oplax");
    Workspace w = load_workspace(j.dump(), Laxity::oplax);
    CHECK(w.tuples["closure.lax"].variant == Laxity::oplax);
  }
  SECTION("an absent variant with no request defaults to the lax orientation") {
    nlohmann::json j = nlohmann::json::parse(text);
    j["tuples"]["closure.lax"].erase("variant");
    j["tuples"].erase("closure.oplax");
    Workspace w = load_workspace(j.dump());
    CHECK(w.tuples["closure.lax"].variant == Laxity::lax);
  }
  SECTION("a variant that is neither orientation is an error") {
    nlohmann::json j = nlohmann::json::parse(text);
    j["tuples"]["closure.lax"]["variant"] = "sideways";
    CHECK_THROWS_WITH(load_workspace(j.dump()),
                      ContainsSubstring("field 'variant' must be \"lax\" or \"oplax\""));
  }
}

TEST_CASE("two entities of one name in one section are rejected by name") {
  const std::string cat = R"({"objects":[],"morphisms":[],"identities":[],"compose":[]})";
  std::string text = std::string(R"({"format":"catkit-ff/1","categories":{"a":)") + cat +
                     R"(,"a":)" + cat + "}}";
  CHECK_THROWS_WITH(load_workspace(text), ContainsSubstring("duplicate name 'a'"));
}

TEST_CASE("malformed files fail with messages naming the defect") {
  std::string good = slurp(corpus_path("chain3"));

  SECTION("truncated input is a parse error") {
    CHECK_THROWS_WITH(load_workspace(good.substr(0, 40)), ContainsSubstring("parse error"));
  }
  SECTION("a non-object top level is rejected") {
    CHECK_THROWS_WITH(load_workspace("[1,2,3]"),
                      ContainsSubstring("top level of a workspace file must be an object"));
  }
  SECTION("a missing format field is rejected") {
    CHECK_THROWS_WITH(load_workspace("{}"), ContainsSubstring("missing field 'format'"));
  }
  SECTION("an unsupported format marker is rejected") {
    CHECK_THROWS_WITH(load_workspace(R"({"format":"catkit-ff/2"})"),
                      ContainsSubstring("unsupported format 'catkit-ff/2'"));
  }
  SECTION("an unknown top-level section is rejected") {
    CHECK_THROWS_WITH(load_workspace(R"({"format":"catkit-ff/1","frobs":{}})"),
                      ContainsSubstring("unknown top-level field 'frobs'"));
  }
  SECTION("a functor naming a category the file does not define is rejected") {
    std::string text =
        R"({"format":"catkit-ff/1","functors":{"f":{"source":"nope","target":"nope",)"
        R"("on_objects":[],"on_morphisms":[]}}})";
    CHECK_THROWS_WITH(load_workspace(text), ContainsSubstring("unknown category 'nope'"));
  }
  SECTION("a tuple naming entities the file does not define is rejected") {
    nlohmann::json j = nlohmann::json::parse(good);
    j["tuples"]["closure.lax"]["monoidal"] = "nope";
    CHECK_THROWS_WITH(load_workspace(j.dump()),
                      ContainsSubstring("unknown monoidal structure 'nope'"));
  }
}

TEST_CASE("the canonical form is sorted, indented, and newline-terminated") {
  std::string text = slurp(corpus_path("chain3"));
  REQUIRE_FALSE(text.empty());
  CHECK(text.back() == '\n');

  nlohmann::json j = nlohmann::json::parse(text);
  const auto& compose = j["categories"]["chain3"]["compose"];
  REQUIRE(compose.is_array());
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : compose) rows.push_back(row.get<std::vector<std::string>>());
  CHECK(std::is_sorted(rows.begin(), rows.end()));

  // Saving a freshly built workspace twice gives identical bytes: nothing
  // in the renderer depends on map iteration order or ambient state.
  Workspace w = catkit_corpus::corpus_workspaces()["chain3"];
  CHECK(save_workspace(w) == save_workspace(w));
}
