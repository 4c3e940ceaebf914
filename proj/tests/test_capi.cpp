// Exercises the shared library through its public C header only.
#include "slicegate/slicegate.h"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Takes ownership of a library string.
std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  sg_string_free(s);
  return out;
}

json take_json(char* s) { return json::parse(take(s)); }

struct Store {
  sg_store* p = nullptr;
  Store() { REQUIRE(sg_store_new_seeded(&p) == SG_OK); }
  ~Store() { sg_store_free(p); }
};

struct Matrix {
  sg_seifert* p = nullptr;
  explicit Matrix(const char* text) { REQUIRE(sg_seifert_from_json(text, &p) == SG_OK); }
  ~Matrix() { sg_seifert_free(p); }
};

fs::path scratch_dir() {
  std::random_device rd;
  const fs::path p = fs::temp_directory_path() / ("slicegate_capi_" + std::to_string(rd()));
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sg_version()).size() > 0);
  CHECK(std::string(sg_status_name(SG_OK)) == "ok");
  CHECK(std::string(sg_status_name(SG_ERR_NOT_FOUND)) == "not-found");
  CHECK(std::string(sg_status_name(SG_ERR_HALF_TWIST)) == "half-twist-regime");
  CHECK(std::string(sg_status_name(static_cast<sg_status>(99))) == "unknown");
  sg_string_free(nullptr);
}

TEST_CASE("null arguments are rejected") {
  CHECK(sg_store_new_seeded(nullptr) == SG_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sg_last_error()).size() > 0);
  int64_t n = 0;
  CHECK(sg_store_size(nullptr, &n) == SG_ERR_INVALID_ARGUMENT);
  char* out = nullptr;
  CHECK(sg_seifert_determinant(nullptr, &out) == SG_ERR_INVALID_ARGUMENT);
  CHECK(out == nullptr);
  CHECK(sg_yasuhara(0, 1, nullptr) == SG_ERR_INVALID_ARGUMENT);
  sg_store_free(nullptr);
  sg_seifert_free(nullptr);
}

TEST_CASE("store") {
  Store s;
  int64_t n = 0;
  REQUIRE(sg_store_size(s.p, &n) == SG_OK);
  CHECK(n == 4);
  char* out = nullptr;
  REQUIRE(sg_store_names_json(s.p, &out) == SG_OK);
  CHECK(take_json(out) == json::array({"3_1", "4_1", "6_1", "unknot"}));
  REQUIRE(sg_store_record_json(s.p, "4_1", &out) == SG_OK);
  CHECK(take_json(out)["name"] == "4_1");
  CHECK(sg_store_record_json(s.p, "8_20", &out) == SG_ERR_NOT_FOUND);
  CHECK(std::string(sg_last_error()).find("8_20") != std::string::npos);

  sg_store* empty = nullptr;
  REQUIRE(sg_store_new_empty(&empty) == SG_OK);
  REQUIRE(sg_store_size(empty, &n) == SG_OK);
  CHECK(n == 0);
  sg_store_free(empty);
}

TEST_CASE("save, load and import") {
  const fs::path dir = scratch_dir();
  Store s;
  const std::string csv = (dir / "t.csv").string();
  {
    std::ofstream f(csv);
    f << "Name,Seifert,Sig\nk,\"[[-1,1],[0,-1]]\",-2\nm,\"[[-1,1],[0,-1]]\",x\n";
  }
  char* diags = nullptr;
  REQUIRE(sg_store_import_csv(s.p, csv.c_str(), R"({"name": "Name", "seifert": "Seifert", "signature": "Sig"})",
                              &diags) == SG_OK);
  const json d = take_json(diags);
  CHECK(d["imported"] == json::array({"k", "m"}));
  CHECK(d["diagnostics"].size() == 1);
  CHECK(sg_store_import_csv(s.p, csv.c_str(), "not json", &diags) == SG_ERR_PARSE);

  const std::string path = (dir / "store.json").string();
  REQUIRE(sg_store_save(s.p, path.c_str()) == SG_OK);
  sg_store* back = nullptr;
  REQUIRE(sg_store_load(path.c_str(), &back) == SG_OK);
  int64_t n = 0;
  REQUIRE(sg_store_size(back, &n) == SG_OK);
  CHECK(n == 6);
  sg_store_free(back);
  CHECK(sg_store_load((dir / "missing.json").string().c_str(), &back) == SG_ERR_IO);
  fs::remove_all(dir);
}

TEST_CASE("seifert matrices") {
  Matrix trefoil(R"({"n": 2, "entries": [[-1, 1], [0, -1]]})");
  int64_t sig = 0;
  REQUIRE(sg_seifert_signature(trefoil.p, &sig) == SG_OK);
  CHECK(sig == -2);
  int a = -1;
  REQUIRE(sg_seifert_arf(trefoil.p, &a) == SG_OK);
  CHECK(a == 1);
  char* out = nullptr;
  REQUIRE(sg_seifert_determinant(trefoil.p, &out) == SG_OK);
  CHECK(take(out) == "3");
  REQUIRE(sg_seifert_alexander_json(trefoil.p, &out) == SG_OK);
  CHECK(take_json(out).size() == 3);

  int singular = -1;
  REQUIRE(sg_seifert_levine_tristram(trefoil.p, "1/3", &singular, &sig) == SG_OK);
  CHECK(singular == 0);
  CHECK(sig == -2);
  REQUIRE(sg_seifert_levine_tristram(trefoil.p, "1/6", &singular, &sig) == SG_OK);
  CHECK(singular == 1);
  // Angles are read modulo 1.
  REQUIRE(sg_seifert_levine_tristram(trefoil.p, "4/3", &singular, &sig) == SG_OK);
  CHECK(sig == -2);
  CHECK(sg_seifert_levine_tristram(trefoil.p, "1", &singular, &sig) == SG_ERR_DOMAIN);

  sg_seifert* bad = nullptr;
  CHECK(sg_seifert_from_json(R"({"entries": [[1, 1], [1, 1]]})", &bad) == SG_ERR_INVALID_ARGUMENT);
  CHECK(bad == nullptr);
  CHECK(sg_seifert_from_json("[[1,", &bad) == SG_ERR_PARSE);
}

TEST_CASE("reports") {
  Store s;
  char* out = nullptr;
  REQUIRE(sg_invariants_report(s.p, "3_1", nullptr, R"(["1/3"])", &out) == SG_OK);
  CHECK(take_json(out)["levine_tristram"][0]["signature"] == -2);
  REQUIRE(sg_invariants_report(s.p, nullptr, R"({"entries": [[1, 1], [0, -1]]})", nullptr, &out) == SG_OK);
  CHECK(take_json(out)["determinant"] == 5);
  CHECK(sg_invariants_report(s.p, nullptr, nullptr, nullptr, &out) == SG_ERR_INVALID_ARGUMENT);

  REQUIRE(sg_obstruct_report(s.p, "4_1", nullptr, SG_OSS_MINUS, &out) == SG_OK);
  CHECK(take_json(out)["report"]["bounds"]["gamma4"] == json::array({2, 3}));

  char* seq = nullptr;
  char* par = nullptr;
  REQUIRE(sg_obstruct_all_report(s.p, SG_OSS_MINUS, 0, &seq) == SG_OK);
  REQUIRE(sg_obstruct_all_report(s.p, SG_OSS_MINUS, 1, &par) == SG_OK);
  CHECK(take(seq) == take(par));

  REQUIRE(sg_whitehead_report(s.p, SG_CLASP_POSITIVE, 0, 0, "4_1", SG_OSS_MINUS, &out) == SG_OK);
  const json w = take_json(out);
  CHECK(w["report"]["verdict"]["topologically_slice"] == "yes");
  CHECK(w["cable_target"]["q"] == 1);
  CHECK(sg_whitehead_report(s.p, SG_CLASP_POSITIVE, 0, 0, "nope", SG_OSS_MINUS, &out) == SG_ERR_NOT_FOUND);

  REQUIRE(sg_cable_bounds_report(s.p, "unknot", 2, 1, &out) == SG_OK);
  CHECK(take_json(out)["consistent"] == true);
  CHECK(sg_cable_bounds_report(s.p, "6_1", 2, 1, &out) == SG_ERR_MISSING_INVARIANT);

  REQUIRE(sg_cobordism_report(s.p, "unknot", "-1/2", -2, 1, &out) == SG_OK);
  CHECK(take_json(out)["holds"] == true);

  REQUIRE(sg_euler_range_report("0", 1, &out) == SG_OK);
  CHECK(take_json(out)["euler_range"] == json::array({-8, 4}));
  CHECK(sg_euler_range_report("0", 2, &out) == SG_ERR_INVALID_ARGUMENT);
}

TEST_CASE("primitives") {
  int v = -1;
  REQUIRE(sg_yasuhara(0, 1, &v) == SG_OK);
  CHECK(v == 1);
  REQUIRE(sg_yasuhara(-2, 1, &v) == SG_OK);
  CHECK(v == 0);
  CHECK(sg_yasuhara(1, 0, &v) == SG_ERR_INVALID_ARGUMENT);

  int passes = -1;
  char* witness = nullptr;
  REQUIRE(sg_fox_milnor("[[2,-1],[-5,0],[2,1]]", &passes, &witness) == SG_OK);
  CHECK(passes == 1);
  CHECK(take_json(witness).size() == 2);
  REQUIRE(sg_fox_milnor("[[1,-1],[-1,0],[1,1]]", &passes, nullptr) == SG_OK);
  CHECK(passes == 0);
  CHECK(sg_fox_milnor("[[1,-1],[1,0]]", &passes, nullptr) == SG_ERR_INVALID_ALEXANDER);
}

TEST_CASE("last error is thread-local") {
  char* out = nullptr;
  Store s;
  CHECK(sg_store_record_json(s.p, "missing_here", &out) == SG_ERR_NOT_FOUND);
  std::string other;
  std::thread t([&] {
    int v = 0;
    sg_yasuhara(3, 0, &v);
    other = sg_last_error();
  });
  t.join();
  CHECK(std::string(sg_last_error()).find("missing_here") != std::string::npos);
  CHECK(other.find("missing_here") == std::string::npos);
}
