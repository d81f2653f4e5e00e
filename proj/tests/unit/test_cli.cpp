#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "doems/catalog.hpp"
#include "doems/cli.hpp"
#include "support.hpp"

using namespace doems;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// One catalog directory with the (2,3) layer, shared across cases.
const test::TempDir& store() {
  static const test::TempDir dir;
  static const bool built = [] {
    export_catalog(build_catalog(2, 3), catalog_file(dir.path(), 2, 3));
    return true;
  }();
  (void)built;
  return dir;
}

std::string store_dir() { return store().path().string(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("query example") {
    const Run r = run({"query", "--p", "2", "--n", "3", "--m", "5", "--contains-monomial", "x1x2",
                       "--catalog-dir", store_dir()});
    REQUIRE(r.code == 0);
    const auto out = lines(r.out);
    CHECK(out.size() == 32);
    std::set<std::string> labels;
    for (const auto& line : out) labels.insert(record_from_line(line).classlabel);
    CHECK(labels.size() == 4);
  }

  TEST_CASE("records output round-trips to the library records") {
    const Catalog catalog = load_catalog(store().path(), 2, 3);
    const Run r = run({"query", "--p", "2", "--n", "3", "--m", "4", "--catalog-dir", store_dir()});
    REQUIRE(r.code == 0);
    QueryFilter f;
    f.m = 4;
    const auto expected = query(catalog, f);
    const auto out = lines(r.out);
    REQUIRE(out.size() == expected.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      CHECK(record_from_line(out[i]) == expected[i]);
      CHECK(out[i] == record_to_line(expected[i]));
    }
  }

  TEST_CASE("table output counts") {
    const Run r = run({"query", "--p", "2", "--n", "3", "--m", "5", "--contains-monomial", "x1x2",
                       "--representatives-only", "--format", "table", "--catalog-dir", store_dir()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("4 records in 4 classes") != std::string::npos);
  }

  TEST_CASE("summary") {
    const Run r = run({"summary", "--p", "2", "--n", "3", "--m", "5", "--catalog-dir", store_dir()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("class_count") == 7);
    CHECK(j.at("total_sets") == 56);
  }

  TEST_CASE("whatif example") {
    const Run r = run({"whatif", "--p", "2", "--n", "3", "--dataset", "000,001,010,100,110",
                       "--add-point", "111", "--catalog-dir", store_dir()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("augmented").at("num_bases") == 2);
    CHECK(j.at("new_monomials") == nlohmann::json::array({"x1x3", "x2x3"}));
  }

  TEST_CASE("whatif without a stored catalog") {
    const test::TempDir empty;
    const Run r = run({"whatif", "--p", "2", "--n", "3", "--dataset", "000,001,010,100,110",
                       "--add-point", "011", "--catalog-dir", empty.path().string()});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("new_monomials") == nlohmann::json::array({"x2x3"}));
  }

  TEST_CASE("gb example") {
    const Run r = run({"gb", "--p", "2", "--n", "2", "--dataset", "00,11", "--order", "lex:x1>x2",
                       "--format", "table"});
    REQUIRE(r.code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 3);
    CHECK(out[1] == "GB: x1 + x2, x2^2 + x2");
    CHECK(out[2] == "SM: {1,x2}");
    const Run js = run({"gb", "--p", "2", "--n", "2", "--dataset", "00,11", "--order", "lex:x1>x2"});
    REQUIRE(js.code == 0);
    CHECK(nlohmann::json::parse(js.out).at("standard_monomials") ==
          "{1,x2}");
  }

  TEST_CASE("bases and fit") {
    const Run b = run({"bases", "--p", "2", "--n", "3", "--dataset", "000,001,011,100,110"});
    REQUIRE(b.code == 0);
    CHECK(nlohmann::json::parse(b.out).at("num_bases") == 2);
    const Run f = run({"fit", "--p", "3", "--n", "2", "--dataset", "00,11", "--outputs", "1,2",
                       "--basis", "{1,x2}", "--format", "table"});
    REQUIRE(f.code == 0);
    CHECK(f.out == "x2 + 1\n");
  }

  TEST_CASE("build writes a loadable store") {
    const test::TempDir dir;
    const Run r = run({"build", "--p", "2", "--n", "2", "--out", dir.path().string()});
    REQUIRE(r.code == 0);
    CHECK(load_catalog(dir.path(), 2, 2) == build_catalog(2, 2));
    const Run file = run({"build", "--p", "2", "--n", "2", "--out",
                          (dir.path() / "custom.jsonl").string()});
    REQUIRE(file.code == 0);
    CHECK(import_catalog(dir.path() / "custom.jsonl") == build_catalog(2, 2));
  }

  TEST_CASE("verify passes on a good store") {
    const Run r = run({"verify", "--p", "2", "--n", "3", "--catalog-dir", store_dir()});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 8);
  }

  TEST_CASE("verify exits 2 on a tampered store") {
    const test::TempDir dir;
    std::vector<CatalogRecord> records = build_catalog(2, 2).records();
    for (auto& r : records) {
      if (r.m() == 2 && !r.is_representative && r.num_bases() > 1) {
        r.bases.pop_back();
        r.lt_generators.pop_back();
        r.groebner_bases.pop_back();
        break;
      }
    }
    export_catalog(Catalog(2, 2, std::move(records)), catalog_file(dir.path(), 2, 2));
    const Run r = run({"verify", "--p", "2", "--n", "2", "--m", "2", "--catalog-dir",
                       dir.path().string()});
    CHECK(r.code == 2);
  }

  TEST_CASE("domain errors exit 1") {
    const test::TempDir empty;
    CHECK(run({"query", "--p", "2", "--n", "3", "--catalog-dir", empty.path().string()}).code == 1);
    CHECK(run({"gb", "--p", "2", "--n", "2", "--dataset", "00,12", "--order", "lex"}).code == 1);
    CHECK(run({"gb", "--p", "2", "--n", "2", "--dataset", "00,11", "--order", "lex:x1"}).code == 1);
    CHECK(run({"whatif", "--p", "2", "--n", "3", "--dataset", "000,001", "--add-point", "001",
               "--catalog-dir", empty.path().string()})
              .code == 1);
    CHECK(run({"build", "--p", "5", "--n", "3", "--out", empty.path().string()}).code == 1);
    CHECK(run({"query", "--bogus"}).code == 1);
    CHECK(run({}).code == 1);
    const Run e = run({"gb", "--p", "4", "--n", "2", "--dataset", "00", "--order", "lex"});
    CHECK(e.code == 1);
    CHECK(e.err.find("error:") == 0);
  }

  TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }
}
