// Command-line surface: one subcommand per library operation.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "sgq/errors.hpp"
#include "sgq/io.hpp"
#include "sgq/prime_graph.hpp"
#include "sgq/realization.hpp"

namespace sgq {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

GroupDescriptor group_arg(const std::string& token) {
  try {
    return GroupDescriptor::parse(token);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// Decimal, or mantissa and exponent such as 5e9.
FactoredInteger bound_arg(const std::string& text) {
  try {
    const auto e = text.find_first_of("eE");
    if (e != std::string::npos && e > 0 && e + 1 < text.size() &&
        text.find_first_not_of("0123456789", e + 1) == std::string::npos && text.size() - e - 1 <= 2)
      return FactoredInteger::parse(text.substr(0, e)) *
             FactoredInteger::parse("1" + std::string(std::stoul(text.substr(e + 1)), '0'));
    return FactoredInteger::parse(text);
  } catch (const Error& e) {
    throw UsageError("bad --max-order '" + text + "': " + e.what());
  }
}

std::string set_text(const std::set<std::uint64_t>& s, const char* sep = ",") {
  std::string out = "{";
  for (auto x : s) out += (out.size() > 1 ? sep : "") + std::to_string(x);
  return out + "}";
}

std::string multiset_text(const std::multiset<std::uint64_t>& s) {
  std::string out = "{";
  for (auto x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

std::string vec_text(const std::vector<std::uint64_t>& v) { return set_text({v.begin(), v.end()}); }

std::string fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw LookupError("cannot write " + path);
  f << text;
}

std::string report_line(const CollisionReport& r) {
  std::string s = r.left.to_string() + " " + r.right.to_string() + " " + to_string(r.verdict);
  for (const auto& e : r.evidence) s += "; " + e.invariant + " " + e.left + " / " + e.right;
  return s + "\n";
}

std::string reports_csv(const std::vector<CollisionReport>& reports) {
  std::string out = csv_row({"left", "right", "invariant", "left_value", "right_value", "equal", "verdict"});
  for (const auto& r : reports)
    for (const auto& e : r.evidence)
      out += csv_row({r.left.to_string(), r.right.to_string(), e.invariant, e.left, e.right,
                      e.equal ? "true" : "false", to_string(r.verdict)});
  return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of finite simple groups", "sgq"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Worker threads (0: all cores)")->check(CLI::Range(0u, 1024u));

  std::string group, out_path, dot_path, invariant = "moreto", max_order;
  std::size_t cap = kDefaultElementCap;
  std::uint64_t samples = 1000000, seed = 1, k = 0;
  unsigned slots = 10, burn_in = 100;
  bool csv = false, with_census = false;

  auto* order_cmd = app.add_subcommand("order", "Group order, factored and decimal");
  order_cmd->add_option("group", group)->required();

  auto* census_cmd = app.add_subcommand("census", "Element order census k -> |G(k)|");
  census_cmd->add_option("group", group)->required();
  census_cmd->add_option("--cap", cap, "Element cap")->check(CLI::Range(std::size_t(1), kMaxElementCap));

  auto* inv_cmd = app.add_subcommand("invariants", "Spectrum, npe and involution count");
  inv_cmd->add_option("group", group)->required();
  inv_cmd->add_option("--cap", cap, "Element cap")->check(CLI::Range(std::size_t(1), kMaxElementCap));

  auto* graph_cmd = app.add_subcommand("prime-graph", "Prime graph and its components");
  graph_cmd->add_option("group", group)->required();
  graph_cmd->add_option("--dot", dot_path, "Write DOT to this file ('-' for stdout)");
  graph_cmd->add_option("--cap", cap, "Element cap")->check(CLI::Range(std::size_t(1), kMaxElementCap));

  auto* cat_cmd = app.add_subcommand("catalog", "Simple groups up to an order bound");
  cat_cmd->add_option("--max-order", max_order)->required();
  cat_cmd->add_option("--out", out_path, "Output file ('-' for stdout)")->default_val("-");
  cat_cmd->add_flag("--csv", csv, "CSV instead of JSON lines");
  cat_cmd->add_flag("--census", with_census, "Census every enumerable member");
  cat_cmd->add_option("--cap", cap, "Element cap")->check(CLI::Range(std::size_t(1), kMaxElementCap));

  auto* collide_cmd = app.add_subcommand("collide", "Search for groups sharing invariants");
  collide_cmd->add_option("--invariant", invariant)->check(CLI::IsMember({"moreto", "shi", "npe"}))->required();
  collide_cmd->add_option("--max-order", max_order)->required();
  collide_cmd->add_option("--samples", samples)->check(CLI::Range(std::uint64_t(1000), std::uint64_t(1) << 40));
  collide_cmd->add_option("--seed", seed);
  collide_cmd->add_option("--out", out_path, "Output file ('-' for stdout)")->default_val("-");
  collide_cmd->add_flag("--csv", csv, "CSV output");
  collide_cmd->add_option("--cap", cap, "Element cap")->check(CLI::Range(std::size_t(1), kMaxElementCap));

  auto* sample_cmd = app.add_subcommand("sample", "Estimate the fraction of elements of order k");
  sample_cmd->add_option("group", group)->required();
  sample_cmd->add_option("--order", k)->required()->check(CLI::PositiveNumber);
  sample_cmd->add_option("--samples", samples)->check(CLI::Range(std::uint64_t(1000), std::uint64_t(1) << 40));
  sample_cmd->add_option("--seed", seed);
  sample_cmd->add_option("--slots", slots)->check(CLI::Range(2u, 1000u));
  sample_cmd->add_option("--burn-in", burn_in)->check(CLI::Range(0u, 1000000u));

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every reproduction check");
  verify_cmd->add_option("--jsonl", out_path, "Write JSON lines to this file ('-' for stdout)");
  verify_cmd->add_option("--samples", samples)->check(CLI::Range(std::uint64_t(1000), std::uint64_t(1) << 40));
  verify_cmd->add_option("--seed", seed);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const unsigned sampler_threads = app.count("--threads") ? resolve_threads(threads) : 1;
  try {
    CensusOptions copts{cap, threads};
    CensusCache cache(copts);
    auto census_of = [&](const GroupDescriptor& d) {
      if (!has_realization(d)) throw DomainError(d.to_string() + " has no realization to enumerate");
      return enumerate_census(realize(d), copts);
    };

    if (*order_cmd) {
      const auto o = order_of_descriptor(group_arg(group));
      out << o.to_string() << " = " << o.to_decimal() << "\n";
    } else if (*census_cmd) {
      out << census_of(group_arg(group)).to_text();
    } else if (*inv_cmd) {
      const auto d = group_arg(group);
      const auto c = census_of(d);
      const auto inv = derive_invariants(c);
      out << "group " << d.to_string() << "\n"
          << "order " << c.group_order().to_string() << " = " << c.group_order().to_decimal() << "\n"
          << "pi " << vec_text(inv.pi) << "\n"
          << "pi_e " << set_text(inv.pi_e) << "\n"
          << "npe " << set_text(inv.npe) << "\n"
          << "npe_multiset " << multiset_text(inv.npe_multiset) << "\n"
          << "involutions " << inv.involutions << "\n"
          << "largest_prime " << inv.largest_prime << "\n"
          << "count_p " << inv.count_p << "\n";
    } else if (*graph_cmd) {
      const auto d = group_arg(group);
      const auto g = build_prime_graph(derive_invariants(census_of(d)).pi_e);
      if (!dot_path.empty()) write_text(dot_path, to_dot(g, d.to_string()), out);
      if (dot_path != "-") {
        out << "vertices";
        for (auto p : g.vertices) out << " " << p;
        out << "\nedges";
        for (const auto& [p, q] : g.edges) out << " " << p << "-" << q;
        out << "\ncomponents";
        for (const auto& c : g.components) out << " " << vec_text(c);
        out << "\nt " << g.t() << "\n";
      }
    } else if (*cat_cmd) {
      const auto records = catalog_records(enumerate_catalog(bound_arg(max_order)), cache, with_census);
      write_text(out_path, csv ? catalog_to_csv(records) : catalog_to_jsonl(records), out);
      if (out_path != "-") out << records.size() << " records written to " << out_path << "\n";
    } else if (*collide_cmd) {
      const auto catalog = enumerate_catalog(bound_arg(max_order));
      std::vector<CollisionReport> reports;
      std::string summary;
      if (invariant == "moreto") {
        StatisticalOptions stats{samples, seed, sampler_threads};
        for (const auto& [a, b] : equal_order_pairs(catalog))
          reports.push_back(confirm_moreto_collision(a, b, cache, stats));
        summary = std::to_string(reports.size()) + " equal-order pairs\n";
      } else if (invariant == "npe") {
        auto r = npe_collision_search(catalog, cache);
        reports = r.examined;
        summary = std::to_string(r.collisions.size()) + " npe collisions among " + std::to_string(r.examined.size()) +
                  " equal-order pairs";
        for (const auto& d : r.uncensused) summary += "; no census for " + d.to_string();
        summary += "\n";
      } else {
        std::size_t checked = 0, violations = 0;
        for (const auto& d : catalog) {
          if (!cache.censusable(d)) continue;
          ++checked;
          const auto matches = shi_compare(order_of_descriptor(d), derive_invariants(*cache.get(d)).pi_e, catalog, cache);
          if (matches.size() > 1) {
            ++violations;
            for (std::size_t i = 1; i < matches.size(); ++i) {
              CollisionReport r{matches[0], matches[i]};
              r.verdict = Verdict::Confirmed;
              r.evidence.push_back({"order and pi_e", "equal", "equal"});
              reports.push_back(r);
            }
          }
        }
        summary = std::to_string(checked) + " censused groups, " + std::to_string(violations) +
                  " with another group of equal order and spectrum\n";
      }
      std::string text;
      if (csv) {
        text = reports_csv(reports);
      } else {
        for (const auto& r : reports) text += report_line(r);
        text += summary;
      }
      write_text(out_path, text, out);
    } else if (*sample_cmd) {
      const auto d = group_arg(group);
      if (!has_realization(d)) throw DomainError(d.to_string() + " has no realization to sample");
      const auto e = estimate_order_fraction(realize(d), k, samples, seed, {sampler_threads, slots, burn_in});
      out << "estimate " << fixed(e.estimate) << "\nstd_error " << fixed(e.std_error) << "\nhits " << e.hits
          << "\nsamples " << e.samples << "\n";
    } else if (*verify_cmd) {
      ReportOptions ro;
      ro.stats = StatisticalOptions{samples, seed, sampler_threads};
      ro.threads = threads;
      const auto report = verify_paper_report(ro);
      out << report.to_table();
      if (!out_path.empty()) write_text(out_path, report.to_jsonl(), out);
      if (!report.all_pass()) {
        for (const auto& c : report.checks)
          if (!c.pass) err << "check failed: " << c.name << ": " << c.computed_value << "\n";
        return 1;
      }
    }
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "out of range: " << e.what() << "\n";
    return 2;
  } catch (const LookupError& e) {
    err << "not found: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sgq
