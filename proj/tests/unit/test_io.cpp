#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sgq/errors.hpp"
#include "sgq/io.hpp"

using namespace sgq;

namespace {

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = run_command(args, out, err);
  return {s, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("catalog JSON lines round trip") {
  CensusCache cache(CensusOptions{kDefaultElementCap, 1});
  auto small = catalog_records(enumerate_catalog(factor_integer(1000)), cache, true);
  const auto path = tmp("sgq_cat.jsonl");
  write_catalog(small, path);
  const auto text = slurp(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
  CHECK(text.rfind("{\"descriptor\":\"A5\",\"order\":\"2^2*3*5\",\"order_decimal\":\"60\",\"largest_prime\":5,"
                   "\"count_p\":\"2^3*3\",\"count_p_provenance\":\"census\",\"pi_e\":[1,2,3,5],\"npe\":[15,20,24]}",
                   0) == 0);
  CHECK(read_catalog(path) == small);

  write_catalog({}, path);
  CHECK(slurp(path).empty());
  CHECK(read_catalog(path).empty());

  auto big = catalog_records(enumerate_catalog(factor_integer(5000000000ull)), cache, false);
  write_catalog(big, path);
  const auto back = read_catalog(path);
  CHECK(back == big);
  std::vector<GroupDescriptor> ds;
  for (const auto& r : back) ds.push_back(GroupDescriptor::parse(r.descriptor));
  const auto pairs = equal_order_pairs(ds);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[1].first.to_string() == "O7(3)");
  CHECK(pairs[1].second.to_string() == "S6(3)");
  for (const auto& r : back)
    if (r.descriptor == "M11") CHECK(r.count_source == Provenance::Paper);
}

TEST_CASE("catalog parse errors carry line numbers") {
  const std::string good =
      "{\"descriptor\":\"A5\",\"order\":\"2^2*3*5\",\"order_decimal\":\"60\",\"largest_prime\":5,\"count_p\":null,"
      "\"count_p_provenance\":\"absent\",\"pi_e\":null,\"npe\":null}\n";
  CHECK(catalog_from_jsonl(good).size() == 1);
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      catalog_from_jsonl(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of(good + "{not json\n") == 2);
  std::string bad_decimal = good;
  bad_decimal.replace(bad_decimal.find("\"60\""), 4, "\"61\"");
  CHECK(line_of(good + good + bad_decimal) == 3);
  std::string bad_prov = good;
  bad_prov.replace(bad_prov.find("absent"), 6, "census");
  CHECK(line_of(bad_prov) == 1);
  std::string bad_group = good;
  bad_group.replace(bad_group.find("\"A5\""), 4, "\"Q5\"");
  CHECK(line_of(bad_group) == 1);
}

TEST_CASE("CSV quoting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");
  CHECK(csv_row({"O'N", "{1,2}"}) == "O'N,\"{1,2}\"\r\n");
}

TEST_CASE("command line") {
  auto r = run({"order", "M11"});
  CHECK(r.status == 0);
  CHECK(r.out == "2^4*3^2*5*11 = 7920\n");

  r = run({"census", "A5"});
  CHECK(r.status == 0);
  CHECK(r.out == "1 1\n2 15\n3 20\n5 24\n");

  r = run({"invariants", "L3(4)"});
  CHECK(r.out.find("involutions 315\n") != std::string::npos);

  r = run({"prime-graph", "M11"});
  CHECK(r.out == "vertices 2 3 5 11\nedges 2-3\ncomponents {2,3} {5} {11}\nt 3\n");
  r = run({"prime-graph", "A5", "--dot", "-"});
  CHECK(r.out.rfind("graph \"A5\" {", 0) == 0);

  r = run({"catalog", "--max-order", "1000", "--csv"});
  CHECK(r.status == 0);
  CHECK(r.out.rfind("descriptor,order,order_decimal,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);

  CHECK(run({"catalog", "--max-order", "1e3"}).out == run({"catalog", "--max-order", "1000"}).out);
  CHECK(run({"catalog", "--max-order", "1e"}).status == 2);
  CHECK(run({"catalog", "--max-order", "e5"}).status == 2);

  const auto path = tmp("sgq_cli_cat.jsonl");
  r = run({"catalog", "--max-order", "100000", "--out", path.string()});
  CHECK(r.status == 0);
  CHECK(read_catalog(path).size() == enumerate_catalog(factor_integer(100000)).size());

  r = run({"collide", "--invariant", "npe", "--max-order", "1000000"});
  CHECK(r.status == 0);
  CHECK(r.out.find("0 npe collisions among 1 equal-order pairs") != std::string::npos);

  r = run({"sample", "A5", "--order", "5", "--samples", "10000", "--seed", "9"});
  CHECK(r.status == 0);
  CHECK(r.out == run({"sample", "A5", "--order", "5", "--samples", "10000", "--seed", "9"}).out);
  CHECK(r.out != run({"sample", "A5", "--order", "5", "--samples", "10000", "--seed", "10"}).out);
}

TEST_CASE("command line errors") {
  auto unknown = run({"order", "X9"});
  CHECK(unknown.status == 2);
  CHECK(unknown.err.find("unknown group token") != std::string::npos);

  auto range = run({"census", "A5", "--cap", "999999999"});
  CHECK(range.status == 2);

  auto cap = run({"census", "A9", "--cap", "1000"});
  CHECK(cap.status == 1);
  CHECK(cap.err.find("cap exceeded") != std::string::npos);

  auto few = run({"sample", "A5", "--order", "5", "--samples", "10"});
  CHECK(few.status == 2);

  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"census", "Sz(8)"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}
