#include "sgq/conjecture.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"

#include "sgq/errors.hpp"
#include "sgq/prime_graph.hpp"

namespace sgq {

namespace {

std::string fixed(double x, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

template <class Range>
std::string braces(const Range& r) {
  std::string s = "{";
  bool first = true;
  for (const auto& x : r) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

double as_double(const FactoredInteger& f) {
  if (auto v = f.to_u128()) return static_cast<double>(*v);
  return std::exp2(f.log2());
}

std::string count_label(std::uint64_t p) { return "|G(" + std::to_string(p) + ")|"; }

ElementOrderCensus require_census(const GroupDescriptor& d, CensusCache& cache) {
  auto c = cache.get(d);
  if (!c) throw DomainError(d.to_string() + ": no complete census available (no realization or order above cap)");
  return *c;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Formula: return "formula";
    case Provenance::Paper: return "paper";
    case Provenance::VendoredAtlas: return "vendored-atlas";
    case Provenance::Census: return "census";
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::MonteCarlo: return "monte-carlo";
    case Provenance::Absent: return "absent";
  }
  return "absent";
}

Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::Formula, Provenance::Paper, Provenance::VendoredAtlas, Provenance::Census,
                 Provenance::ClosedForm, Provenance::MonteCarlo, Provenance::Absent})
    if (to_string(p) == s) return p;
  throw DomainError("unknown provenance tag: " + s);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::Refuted: return "refuted";
    case Verdict::StatisticalOnly: return "statistical-only";
  }
  return "refuted";
}

// ---- census cache ------------------------------------------------------------

bool CensusCache::censusable(const GroupDescriptor& d) const {
  return has_realization(d) && order_of_descriptor(d) <= factor_integer(options_.element_cap);
}

std::optional<ElementOrderCensus> CensusCache::get(const GroupDescriptor& d) {
  std::lock_guard lock(mu_);
  auto it = entries_.find(d);
  if (it != entries_.end()) return it->second;
  std::optional<ElementOrderCensus> c;
  if (censusable(d)) c = enumerate_census(realize(d), options_);
  entries_.emplace(d, c);
  return c;
}

// ---- signatures and pairs ------------------------------------------------------

MoretoSignature moreto_signature(const GroupDescriptor& d, CensusCache& cache) {
  MoretoSignature s{d, order_of_descriptor(d)};
  s.p = s.order.largest_prime();
  if (const auto* sp = d.get_if<Sporadic>()) {
    const auto rec = sporadic_quant_record(sp->name);
    s.count_p = rec.count_order_p;
    s.count_source = rec.provenance == "paper" ? Provenance::Paper : Provenance::VendoredAtlas;
    return s;
  }
  if (auto c = cache.get(d)) {
    s.count_p = factor_integer(c->count(s.p));
    s.count_source = Provenance::Census;
    return s;
  }
  if (const auto* a = d.get_if<Alternating>()) {
    s.count_p = alternating_prime_order_count(a->degree, s.p);
    s.count_source = Provenance::ClosedForm;
  }
  return s;
}

std::optional<FactoredInteger> vendored_class_count(const GroupDescriptor& d, std::uint64_t k) {
  const auto path = data_file("class_counts.tsv");
  std::ifstream in(path);
  if (!in) throw LookupError("missing data file " + path.string());
  const std::string name = d.to_string();
  const FactoredInteger order = order_of_descriptor(d);
  std::optional<FactoredInteger> total;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string group, cls;
    std::uint64_t ord = 0, cent = 0;
    if (!(ls >> group >> cls >> ord >> cent) || cent == 0)
      throw ParseError(path.string(), lineno, "expected group, class, order, centralizer");
    if (group != name || ord != k) continue;
    const FactoredInteger size = divide_exact(order, factor_integer(cent));
    total = total ? factor_integer(*total->to_u128() + *size.to_u128()) : size;
  }
  return total;
}

std::vector<std::pair<GroupDescriptor, GroupDescriptor>> equal_order_pairs(const std::vector<GroupDescriptor>& catalog) {
  std::set<GroupDescriptor> unique;
  for (const auto& d : catalog) unique.insert(canonicalize_descriptor(d));
  std::map<FactoredInteger, std::vector<GroupDescriptor>> by_order;
  for (const auto& d : unique) by_order[order_of_descriptor(d)].push_back(d);
  std::vector<std::pair<GroupDescriptor, GroupDescriptor>> out;
  for (const auto& [order, group] : by_order)
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) out.emplace_back(group[i], group[j]);
  return out;
}

// ---- collisions ------------------------------------------------------------------

CollisionReport confirm_moreto_collision(const GroupDescriptor& a, const GroupDescriptor& b, CensusCache& cache,
                                         const StatisticalOptions& stats) {
  if (canonicalize_descriptor(a) == canonicalize_descriptor(b))
    throw DomainError(a.to_string() + " and " + b.to_string() + " are the same group; not a collision candidate");
  const MoretoSignature sa = moreto_signature(a, cache), sb = moreto_signature(b, cache);
  if (sa.order != sb.order)
    throw DomainError(a.to_string() + " and " + b.to_string() + " have different orders");

  CollisionReport r{a, b};
  r.matched.push_back("order");
  r.evidence.push_back({"order", sa.order.to_string(), sb.order.to_string()});
  r.evidence.back().equal = true;
  const std::string label = count_label(sa.p);

  if (sa.count_p && sb.count_p) {
    Evidence e{label, sa.count_p->to_string(), sb.count_p->to_string(), sa.count_source, sb.count_source};
    e.equal = *sa.count_p == *sb.count_p;
    r.evidence.push_back(e);
    if (e.equal) r.matched.push_back(label);
    r.verdict = e.equal ? Verdict::Confirmed : Verdict::Refuted;
    return r;
  }

  const double order = as_double(sa.order);
  auto side = [&](const MoretoSignature& s, std::uint64_t seed, double& frac, double& se, std::string& text) {
    if (s.count_p) {
      frac = as_double(*s.count_p) / order;
      se = 0;
      text = s.count_p->to_string();
      return s.count_source;
    }
    if (!has_realization(s.group))
      throw DomainError(s.group.to_string() + ": no exact count and no realization to sample");
    const auto est = estimate_order_fraction(realize(s.group), s.p, stats.samples, seed, {stats.threads, 10, 100});
    frac = est.estimate;
    se = est.std_error;
    text = fixed(frac) + " +- " + fixed(se) + " of |G| (" + std::to_string(stats.samples) + " samples)";
    return Provenance::MonteCarlo;
  };
  double fa, fb, ea, eb;
  Evidence e{label + "/|G|"};
  e.left_source = side(sa, stats.seed, fa, ea, e.left);
  e.right_source = side(sb, stats.seed + 1, fb, eb, e.right);
  e.exact = false;
  e.left_se = ea;
  e.right_se = eb;
  e.equal = std::abs(fa - fb) <= stats.band * std::sqrt(ea * ea + eb * eb);
  r.evidence.push_back(e);
  bool consistent = e.equal;

  // Estimates against vendored class data, where available.
  for (const auto* s : {&sa, &sb}) {
    const double f = s == &sa ? fa : fb, se = s == &sa ? ea : eb;
    if (s->count_p) continue;
    auto exact = vendored_class_count(s->group, s->p);
    if (!exact) continue;
    const double x = as_double(*exact) / order;
    Evidence v{label + "/|G| " + s->group.to_string() + " vs class data", fixed(f), fixed(x), Provenance::MonteCarlo,
               Provenance::VendoredAtlas};
    v.exact = false;
    v.left_se = se;
    v.equal = std::abs(f - x) <= stats.band * se;
    consistent &= v.equal;
    r.evidence.push_back(v);
  }
  if (consistent) r.matched.push_back(label + " (statistical)");
  r.verdict = consistent ? Verdict::StatisticalOnly : Verdict::Refuted;
  return r;
}

CollisionReport involution_checks(const GroupDescriptor& a, const GroupDescriptor& b, CensusCache& cache,
                                  const std::vector<std::uint64_t>& extra_primes) {
  const auto ca = require_census(a, cache), cb = require_census(b, cache);
  CollisionReport r{a, b};
  Evidence o{"order", ca.group_order().to_string(), cb.group_order().to_string(), Provenance::Census,
             Provenance::Census};
  o.equal = ca.group_order() == cb.group_order();
  r.evidence.push_back(o);
  if (o.equal) r.matched.push_back("order");
  bool all = true;
  std::vector<std::uint64_t> primes{2};
  primes.insert(primes.end(), extra_primes.begin(), extra_primes.end());
  for (auto p : primes) {
    Evidence e{count_label(p), std::to_string(ca.count(p)), std::to_string(cb.count(p)), Provenance::Census,
               Provenance::Census};
    e.equal = ca.count(p) == cb.count(p);
    all &= e.equal;
    if (e.equal) r.matched.push_back(e.invariant);
    r.evidence.push_back(e);
  }
  r.verdict = all ? Verdict::Confirmed : Verdict::Refuted;
  return r;
}

NpeSearchResult npe_collision_search(const std::vector<GroupDescriptor>& catalog, CensusCache& cache) {
  NpeSearchResult out;
  for (const auto& [a, b] : equal_order_pairs(catalog)) {
    auto ca = cache.get(a), cb = cache.get(b);
    if (!ca || !cb) {
      if (!ca) out.uncensused.push_back(a);
      if (!cb) out.uncensused.push_back(b);
      continue;
    }
    const auto ia = derive_invariants(*ca), ib = derive_invariants(*cb);
    CollisionReport r{a, b};
    r.matched.push_back("order");
    Evidence o{"order", ca->group_order().to_string(), cb->group_order().to_string()};
    o.equal = true;
    r.evidence.push_back(o);
    for (auto p : ia.pi) {
      Evidence e{count_label(p), std::to_string(ca->count(p)), std::to_string(cb->count(p)), Provenance::Census,
                 Provenance::Census};
      e.equal = ca->count(p) == cb->count(p);
      if (e.equal) r.matched.push_back(e.invariant);
      r.evidence.push_back(e);
    }
    Evidence n{"npe", braces(ia.npe), braces(ib.npe), Provenance::Census, Provenance::Census};
    n.equal = ia.npe == ib.npe;
    r.evidence.push_back(n);
    Evidence m{"npe multiset", braces(ia.npe_multiset), braces(ib.npe_multiset), Provenance::Census,
               Provenance::Census};
    m.equal = ia.npe_multiset == ib.npe_multiset;
    r.evidence.push_back(m);
    if (n.equal) r.matched.push_back("npe");
    r.verdict = n.equal ? Verdict::Confirmed : Verdict::Refuted;
    if (n.equal) out.collisions.push_back(r);
    out.examined.push_back(std::move(r));
  }
  return out;
}

std::vector<GroupDescriptor> shi_compare(const FactoredInteger& order, const std::set<std::uint64_t>& pi_e,
                                         const std::vector<GroupDescriptor>& catalog, CensusCache& cache) {
  std::set<GroupDescriptor> unique;
  for (const auto& d : catalog) unique.insert(canonicalize_descriptor(d));
  std::vector<GroupDescriptor> out;
  for (const auto& d : unique) {
    if (order_of_descriptor(d) != order) continue;
    if (derive_invariants(require_census(d, cache)).pi_e == pi_e) out.push_back(d);
  }
  return out;
}

// ---- report ----------------------------------------------------------------------

bool PaperReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string PaperReport::to_jsonl() const {
  std::string out;
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["paper_value"] = c.paper_value;
    j["computed_value"] = c.computed_value;
    j["verdict"] = c.pass ? "pass" : "fail";
    out += j.dump() + "\n";
  }
  return out;
}

std::string PaperReport::to_table() const {
  std::size_t w0 = 5, w1 = 5;
  for (const auto& c : checks) {
    w0 = std::max(w0, c.name.size());
    w1 = std::max(w1, c.paper_value.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w0)) << "check" << "  " << std::setw(static_cast<int>(w1))
     << "paper" << "  verdict  computed\n";
  for (const auto& c : checks)
    os << std::setw(static_cast<int>(w0)) << c.name << "  " << std::setw(static_cast<int>(w1)) << c.paper_value
       << "  " << std::setw(7) << (c.pass ? "pass" : "FAIL") << "  " << c.computed_value << "\n";
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass;
  os << passed << "/" << checks.size() << " checks passed\n";
  return os.str();
}

PaperReport verify_paper_report(const ReportOptions& options) {
  PaperReport report;
  CensusOptions copts;
  copts.threads = options.threads;
  CensusCache cache(copts);
  auto G = [](const char* t) { return GroupDescriptor::parse(t); };
  auto check = [&](std::string name, std::string paper, const std::function<std::pair<std::string, bool>()>& f) {
    ReportCheck c{std::move(name), std::move(paper)};
    try {
      std::tie(c.computed_value, c.pass) = f();
    } catch (const std::exception& e) {
      c.computed_value = std::string("error: ") + e.what();
      c.pass = false;
    }
    report.checks.push_back(std::move(c));
  };
  auto census_count = [&](const char* group, std::uint64_t k, std::uint64_t expected) {
    check(std::string(group) + " " + count_label(k), std::to_string(expected), [&, group, k, expected] {
      const auto n = require_census(G(group), cache).count(k);
      return std::make_pair(std::to_string(n), n == expected);
    });
  };

  const std::pair<const char*, FactoredInteger> normalizers[] = {
      {"M11", factor_integer(55)},      {"M12", factor_integer(55)},       {"J2", factor_integer(42)},
      {"He", factor_integer(136)},      {"Suz", factor_integer(78)},       {"J1", factor_integer(114)},
      {"J3", factor_integer(171)},      {"Ru", factor_integer(406)},       {"O'N", factor_integer(465)}};
  for (const auto& [name, value] : normalizers)
    check(std::string("|N(P)| ") + name, value.to_string(), [&, name = name, value = value] {
      const auto rec = sporadic_quant_record(name);
      return std::make_pair(rec.normalizer_order.to_string(), rec.normalizer_order == value);
    });
  check("Sylow congruence, all sporadic records", "|S(p)|/(p-1) = 1 mod p", [] {
    const auto recs = all_sporadic_records();
    return std::make_pair(std::to_string(recs.size()) + " records consistent", recs.size() >= 26);
  });

  census_count("A8", 7, 5760);
  census_count("L3(4)", 7, 5760);
  check("A8, L3(4) orders", "20160", [&] {
    const auto a = require_census(G("A8"), cache).total(), b = require_census(G("L3(4)"), cache).total();
    return std::make_pair(std::to_string(a) + ", " + std::to_string(b), a == 20160 && b == 20160);
  });
  check("A8, L3(4) Moreto collision", "confirmed", [&] {
    const auto r = confirm_moreto_collision(G("A8"), G("L3(4)"), cache, options.stats);
    return std::make_pair(to_string(r.verdict), r.verdict == Verdict::Confirmed);
  });
  check("|N(P)| A8, p = 7", "3*7", [&] {
    const auto n = sylow_normalizer_order(order_of_descriptor(G("A8")), 7, factor_integer(5760));
    return std::make_pair(n.to_string(), n == factor_integer(21));
  });
  census_count("L3(4)", 2, 315);
  census_count("S4(3)", 2, 315);
  check("L3(4), L4(2) orders, |G(2)|, |G(7)|", "equal", [&] {
    const auto r = involution_checks(G("L3(4)"), G("L4(2)"), cache, {7});
    std::string v;
    for (const auto& e : r.evidence) v += (v.empty() ? "" : "; ") + e.invariant + " " + e.left + "/" + e.right;
    return std::make_pair(v, r.verdict == Verdict::Confirmed && r.evidence[0].equal);
  });

  check("|A10| = |J2 x Z3|", "1814400", [&] {
    const auto a = order_of_descriptor(G("A10")), j = order_of_descriptor(G("J2")) * factor_integer(3);
    return std::make_pair(a.to_string() + ", " + j.to_string(), a == j && a == factor_integer(1814400));
  });
  census_count("A10", 7, 86400);
  check("J2 x Z3 |G(7)|", "86400", [&] {
    const auto c = direct_product_census(require_census(G("J2"), cache), cyclic_census(3));
    return std::make_pair(std::to_string(c.count(7)), c.count(7) == 86400);
  });
  check("A10 |G(7)| closed form", "86400", [] {
    const auto n = alternating_prime_order_count(10, 7);
    return std::make_pair(n.to_string(), n == factor_integer(86400));
  });

  check("equal-order pairs up to 5*10^9", "{A8, L3(4)}, {O7(3), S6(3)}", [] {
    const auto pairs = equal_order_pairs(enumerate_catalog(factor_integer(5000000000ull)));
    std::string v;
    for (const auto& [a, b] : pairs) v += (v.empty() ? "{" : ", {") + a.to_string() + ", " + b.to_string() + "}";
    return std::make_pair(v, v == "{A8, L3(4)}, {O7(3), S6(3)}");
  });
  check("O7(3), S6(3) " + count_label(13), "equal", [&] {
    const auto r = confirm_moreto_collision(G("O7(3)"), G("S6(3)"), cache, options.stats);
    const auto& e = r.evidence[1];
    return std::make_pair(to_string(r.verdict) + ": " + e.left + " vs " + e.right,
                          r.verdict == Verdict::StatisticalOnly);
  });

  check("M11 prime graph", "{11} is a component", [&] {
    const auto g = build_prime_graph(derive_invariants(require_census(G("M11"), cache)).pi_e);
    std::string v;
    for (const auto& c : g.components) v += braces(c);
    return std::make_pair(v, is_isolated(g, 11));
  });
  check("npe collisions up to 10^6", "none", [&] {
    const auto r = npe_collision_search(enumerate_catalog(factor_integer(1000000)), cache);
    std::string v = std::to_string(r.collisions.size()) + " collisions in " + std::to_string(r.examined.size()) +
                    " equal-order pairs";
    if (!r.uncensused.empty()) v += ", " + std::to_string(r.uncensused.size()) + " uncensused";
    return std::make_pair(v, r.collisions.empty() && r.uncensused.empty());
  });
  return report;
}

}  // namespace sgq
