#include <filesystem>

#include "doctest.h"
#include "sgq/conjecture.hpp"
#include "sgq/errors.hpp"
#include "sgq/prime_graph.hpp"

using namespace sgq;

namespace {

GroupDescriptor G(const char* t) { return GroupDescriptor::parse(t); }

std::string pair_text(const std::vector<std::pair<GroupDescriptor, GroupDescriptor>>& pairs) {
  std::string s;
  for (const auto& [a, b] : pairs) s += "{" + a.to_string() + "," + b.to_string() + "}";
  return s;
}

CensusCache& shared_cache() {
  static CensusCache cache(CensusOptions{kDefaultElementCap, 1});
  return cache;
}

}  // namespace

TEST_CASE("prime graph basics") {
  auto a5 = build_prime_graph({1, 2, 3, 5});
  CHECK(a5.vertices == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(a5.edges.empty());
  CHECK(a5.t() == 3);
  CHECK(is_isolated(a5, 2));

  auto g6 = build_prime_graph({1, 2, 3, 6});
  CHECK(g6.t() == 1);
  CHECK(g6.has_edge(3, 2));
  CHECK_FALSE(is_isolated(g6, 3));
  CHECK_THROWS_AS(is_isolated(g6, 5), DomainError);
  CHECK_THROWS_AS(build_prime_graph({}), DomainError);

  // 2 sits in the first component even when other parts exist.
  auto g = build_prime_graph({1, 2, 3, 5, 7, 35, 4});
  REQUIRE(g.t() == 3);
  CHECK(g.components[0] == std::vector<std::uint64_t>{2});
  CHECK(g.components[2] == std::vector<std::uint64_t>{5, 7});
  const auto dot = to_dot(g, "X");
  CHECK(dot.find("subgraph cluster_3") != std::string::npos);
  CHECK(dot.find("p5 -- p7;") != std::string::npos);
}

TEST_CASE("prime graphs of censused groups") {
  for (const char* t : {"A5", "A6", "A7", "L2(7)", "L2(8)", "L3(4)", "M11"}) {
    CAPTURE(t);
    const auto c = *shared_cache().get(G(t));
    const auto g = build_prime_graph(derive_invariants(c).pi_e);
    for (auto p : g.vertices)
      for (auto q : g.vertices)
        if (p < q) CHECK(g.has_edge(p, q) == (c.count(p * q) > 0));
    CHECK(build_prime_graph(derive_invariants(c).pi_e).components == g.components);
  }
  const auto m11 = build_prime_graph(derive_invariants(*shared_cache().get(G("M11"))).pi_e);
  CHECK(is_isolated(m11, 11));
  CHECK(m11.t() == 3);
  CHECK(build_prime_graph(derive_invariants(*shared_cache().get(G("A6"))).pi_e).t() == 3);
}

TEST_CASE("equal-order pairs") {
  CHECK(equal_order_pairs(enumerate_catalog(factor_integer(10000))).empty());
  auto cat = enumerate_catalog(factor_integer(100000));
  CHECK(pair_text(equal_order_pairs(cat)) == "{A8,L3(4)}");
  cat.push_back(G("L4(2)"));
  cat.push_back(G("U4(2)"));
  CHECK(pair_text(equal_order_pairs(cat)) == "{A8,L3(4)}");
  CHECK(pair_text(equal_order_pairs(enumerate_catalog(factor_integer(5000000000ull)))) ==
        "{A8,L3(4)}{O7(3),S6(3)}");
}

TEST_CASE("Moreto signatures and collisions") {
  auto& cache = shared_cache();
  auto a8 = moreto_signature(G("A8"), cache);
  CHECK(a8.p == 7);
  CHECK(*a8.count_p == factor_integer(5760));
  CHECK(a8.count_source == Provenance::Census);
  auto m12 = moreto_signature(G("M12"), cache);
  CHECK(m12.p == 11);
  CHECK(m12.count_p->to_string() == "2^7*3^3*5");
  CHECK(m12.count_source == Provenance::Paper);
  CHECK(*moreto_signature(G("A5"), cache).count_p == factor_integer(24));
  auto a20 = moreto_signature(G("A20"), cache);
  CHECK(a20.count_source == Provenance::ClosedForm);
  CHECK(*a20.count_p == alternating_prime_order_count(20, 19));
  CHECK_FALSE(moreto_signature(G("S6(3)"), cache).count_p.has_value());

  auto r = confirm_moreto_collision(G("A8"), G("L3(4)"), cache);
  CHECK(r.verdict == Verdict::Confirmed);
  CHECK(r.evidence[1].left == "2^7*3^2*5");
  CHECK(r.evidence[1].right == "2^7*3^2*5");
  CHECK_THROWS_AS(confirm_moreto_collision(G("A8"), G("A8"), cache), DomainError);
  CHECK_THROWS_AS(confirm_moreto_collision(G("A8"), G("L4(2)"), cache), DomainError);
  CHECK_THROWS_AS(confirm_moreto_collision(G("A8"), G("A7"), cache), DomainError);

  StatisticalOptions stats;
  stats.samples = 50000;
  auto s = confirm_moreto_collision(G("O7(3)"), G("S6(3)"), cache, stats);
  CHECK(s.verdict == Verdict::StatisticalOnly);
  CHECK(s.evidence.size() == 4);
}

TEST_CASE("vendored order-13 classes") {
  // 12 n_13 with n_13 = |G| / |N(P)|, |N(P)| = 78.
  for (const char* t : {"O7(3)", "S6(3)"}) {
    const auto order = *order_of_descriptor(G(t)).to_u128();
    CHECK(*vendored_class_count(G(t), 13) == factor_integer(12 * (order / 78)));
  }
  CHECK_FALSE(vendored_class_count(G("A8"), 7).has_value());
}

TEST_CASE("involution checks") {
  auto& cache = shared_cache();
  auto r = involution_checks(G("L3(4)"), G("S4(3)"), cache);
  CHECK(r.verdict == Verdict::Confirmed);
  CHECK_FALSE(r.evidence[0].equal);
  CHECK(r.evidence[1].left == "315");
  CHECK(r.evidence[1].right == "315");

  auto l = involution_checks(G("L3(4)"), G("L4(2)"), cache, {7});
  CHECK(l.verdict == Verdict::Confirmed);
  CHECK(l.evidence[0].equal);
  CHECK(l.matched == std::vector<std::string>{"order", "|G(2)|", "|G(7)|"});

  auto a = involution_checks(G("A5"), G("A6"), cache);
  CHECK(a.verdict == Verdict::Refuted);
  CHECK(a.evidence[1].left == "15");
  CHECK(a.evidence[1].right == "45");
  CHECK_THROWS_AS(involution_checks(G("A5"), G("J1"), cache), DomainError);
}

TEST_CASE("npe collision search") {
  auto& cache = shared_cache();
  auto small = npe_collision_search(enumerate_catalog(factor_integer(10000)), cache);
  CHECK(small.collisions.empty());
  CHECK(small.examined.empty());
  CHECK(npe_collision_search({G("A5")}, cache).examined.empty());

  auto r = npe_collision_search(enumerate_catalog(factor_integer(1000000)), cache);
  CHECK(r.collisions.empty());
  CHECK(r.uncensused.empty());
  REQUIRE(r.examined.size() == 1);
  const auto& pair = r.examined[0];
  CHECK(pair.left.to_string() == "A8");
  bool separated_by_3 = false;
  for (const auto& e : pair.evidence)
    if (e.invariant == "|G(3)|") {
      CHECK(e.left == alternating_prime_order_count(8, 3).to_decimal());
      separated_by_3 = !e.equal;
    }
  CHECK(separated_by_3);
}

TEST_CASE("order and spectrum comparisons") {
  auto& cache = shared_cache();
  auto cat = enumerate_catalog(factor_integer(100000));
  auto pe = [&](const char* t) { return derive_invariants(*cache.get(G(t))).pi_e; };
  CHECK(shi_compare(factor_integer(60), {1, 2, 3, 5}, cat, cache) == std::vector<GroupDescriptor>{G("A5")});
  CHECK(shi_compare(factor_integer(20160), pe("A8"), cat, cache) == std::vector<GroupDescriptor>{G("A8")});
  CHECK(pe("A8").count(15) == 1);
  CHECK(pe("L3(4)").count(15) == 0);
  CHECK(shi_compare(factor_integer(7920), pe("M11"), cat, cache) == std::vector<GroupDescriptor>{G("M11")});
  CHECK(shi_compare(factor_integer(61), {1, 61}, cat, cache).empty());
}

TEST_CASE("report rendering and missing data") {
  PaperReport rep;
  rep.checks.push_back({"a \"x\"", "1", "1", true});
  rep.checks.push_back({"b", "2", "3", false});
  CHECK(rep.to_jsonl() ==
        "{\"name\":\"a \\\"x\\\"\",\"paper_value\":\"1\",\"computed_value\":\"1\",\"verdict\":\"pass\"}\n"
        "{\"name\":\"b\",\"paper_value\":\"2\",\"computed_value\":\"3\",\"verdict\":\"fail\"}\n");
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.to_table().find("1/2 checks passed") != std::string::npos);

  const auto empty = std::filesystem::temp_directory_path() / "sgq_empty_data";
  std::filesystem::create_directories(empty);
  set_data_dir(empty);
  ReportOptions opts;
  opts.stats.samples = 20000;
  auto r = verify_paper_report(opts);
  set_data_dir({});
  CHECK_FALSE(r.all_pass());
  bool names_file = false;
  for (const auto& c : r.checks)
    if (c.name == "|N(P)| M11") names_file = !c.pass && c.computed_value.find("sporadic.tsv") != std::string::npos;
  CHECK(names_file);
}
