#include "errors.hpp"
#include "knotdb.hpp"
#include "reports.hpp"
#include "whitehead.hpp"

#include <doctest.h>

using namespace slicegate;
using reports::Json;
using reports::KnotRef;

namespace {

const KnotStore& seeds() {
  static const KnotStore store = seed_table();
  return store;
}

KnotRef by_name(const std::string& n) { return KnotRef{n, std::nullopt}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("resolve") {
  CHECK(reports::resolve(seeds(), by_name("4_1")).name == "4_1");
  const SeifertMatrix v = SeifertMatrix::create({{-1, 1}, {0, -1}});
  const KnotRecord r = reports::resolve(seeds(), KnotRef{std::nullopt, v});
  CHECK(r.name == "matrix");
  CHECK(r.seifert_matrix == v);
  CHECK(code_of([] { reports::resolve(seeds(), KnotRef{}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { reports::resolve(seeds(), KnotRef{"3_1", v}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { reports::resolve(seeds(), by_name("9_42")); }) == ErrorCode::NotFound);
}

TEST_CASE("invariants") {
  const Json j = reports::invariants(seeds(), by_name("3_1"), {Rational(1, 3), Rational(1, 6)});
  CHECK(j["command"] == "invariants");
  CHECK(j["signature"] == -2);
  CHECK(j["arf"] == 1);
  CHECK(j["determinant"] == 3);
  CHECK(j["alexander_text"] == "t - 1 + t^-1");
  CHECK(j["fox_milnor"]["passes"] == false);
  REQUIRE(j["levine_tristram"].size() == 2);
  CHECK(j["levine_tristram"][0]["singular"] == false);
  CHECK(j["levine_tristram"][0]["signature"] == -2);
  CHECK(j["levine_tristram"][1]["singular"] == true);
  CHECK(j["levine_tristram"][1]["signature"].is_null());

  // A record with only a stored polynomial still reports Fox-Milnor.
  const Json six = reports::invariants(seeds(), by_name("6_1"), {});
  CHECK(six["determinant"] == 9);
  CHECK(six["fox_milnor"]["passes"] == true);
  CHECK_FALSE(six.contains("seifert_matrix"));
}

TEST_CASE("obstruct and obstruct_all") {
  const Json one = reports::obstruct(seeds(), by_name("4_1"), {});
  CHECK(one["report"]["bounds"]["g4"] == Json::array({1, 1}));
  CHECK(one["report"]["verdict"]["topologically_slice"] == "no");

  KnotStore store = seed_table();
  for (int t = -3; t <= 3; ++t) {
    store.insert(whitehead::make_record({Clasp::Positive, t, 0, "3_1"}, store.lookup("3_1")));
  }
  // A record whose stored data contradicts itself becomes an error entry.
  KnotRecord bad;
  bad.name = "bad";
  bad.sigma = 0;
  bad.arf = 1;
  bad.invariants.gamma4 = Interval{1, 1};
  store.insert(bad);

  const Json seq = reports::obstruct_all(store, {}, false);
  const Json par = reports::obstruct_all(store, {}, true);
  CHECK(seq == par);
  REQUIRE(seq["reports"].size() == store.size());
  int errors = 0;
  for (const Json& entry : seq["reports"]) {
    if (!entry.contains("error")) continue;
    ++errors;
    CHECK(entry["name"] == "bad");
    CHECK(entry["error"]["code"] == "inconsistent");
  }
  CHECK(errors == 1);
}

TEST_CASE("whitehead") {
  const Json j = reports::whitehead(seeds(), {Clasp::Positive, 0, 0, "4_1"}, {});
  CHECK(j["params"]["effective_twist"] == 0);
  CHECK(j["params"]["half_twist"] == false);
  CHECK(j["alexander_formula_text"] == "1");
  CHECK(j["tau"]["value"] == 0);
  CHECK(j["cable_target"]["q"] == 1);
  CHECK(j["report"]["verdict"]["topologically_slice"] == "yes");
  CHECK(j["report"]["bounds"]["gamma4"] == Json::array({1, 2}));

  const Json half = reports::whitehead(seeds(), {Clasp::Positive, -1, 0, "unknot"}, {});
  CHECK(half["params"]["half_twist"] == true);
  CHECK_FALSE(half.contains("seifert_matrix"));
  CHECK_FALSE(half["diagnostics"].empty());

  CHECK(code_of([] { reports::whitehead(seeds(), {Clasp::Positive, 0, 0, "5_2"}, {}); }) == ErrorCode::NotFound);
}

TEST_CASE("cable_bounds") {
  const Json u = reports::cable_bounds(seeds(), "unknot", 2, 1);
  CHECK(u["domain"] == Json::array({"0", "1"}));
  CHECK(u["at_1"]["lower"] == "-1");
  CHECK(u["at_1"]["upper"] == "0");
  CHECK(u["corollary_interval"] == Json::array({"-3/2", "1/2"}));
  CHECK(u["consistent"] == true);

  const Json inl = reports::cable_bounds(seeds(), R"({"breakpoints": [[0,0],[1,-1],[2,0]]})", 3, 2);
  CHECK(inl["source"] == "inline");
  CHECK(inl["domain"] == Json::array({"0", "2/3"}));
  CHECK_FALSE(inl.contains("at_1"));

  CHECK(code_of([] { reports::cable_bounds(seeds(), "6_1", 2, 1); }) == ErrorCode::MissingInvariant);
  CHECK(code_of([] { reports::cable_bounds(seeds(), "unknot", 2, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cobordism and euler_range") {
  const Json c = reports::cobordism(seeds(), "unknot", "-1/2", -2, 1);
  CHECK(c["upsilon_to"] == "-1/2");
  CHECK(c["lhs"] == "0");
  CHECK(c["rhs"] == "1/2");
  CHECK(c["holds"] == true);
  CHECK(reports::cobordism(seeds(), "3_1", "unknot", 0, 1)["holds"] == false);
  CHECK(code_of([] { reports::cobordism(seeds(), "nothing", "0", 0, 1); }) == ErrorCode::NotFound);
  CHECK(code_of([] { reports::cobordism(seeds(), "6_1", "0", 0, 1); }) == ErrorCode::MissingInvariant);

  const Json e = reports::euler_range(0, 1);
  CHECK(e["euler_range"] == Json::array({-8, 4}));
}

TEST_CASE("import_result") {
  const IngestResult r = ingest_csv_text("Name,Sig\nk,zero\nm,2\n", {{"name", "Name"}, {"signature", "Sig"}});
  const Json j = reports::import_result(r.delta, r.diagnostics);
  CHECK(j["imported"] == Json::array({"k", "m"}));
  REQUIRE(j["diagnostics"].size() == 1);
}
