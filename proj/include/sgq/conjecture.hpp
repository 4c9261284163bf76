#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgq/catalog.hpp"
#include "sgq/census.hpp"
#include "sgq/factored.hpp"
#include "sgq/realization.hpp"

namespace sgq {

enum class Provenance { Formula, Paper, VendoredAtlas, Census, ClosedForm, MonteCarlo, Absent };
std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Complete censuses by canonical descriptor, computed on demand. Groups
/// without a realization or above the element cap have none.
class CensusCache {
 public:
  explicit CensusCache(CensusOptions options = {}) : options_(options) {}

  std::optional<ElementOrderCensus> get(const GroupDescriptor& d);
  /// True if get() can produce a census (realizable, order within cap).
  bool censusable(const GroupDescriptor& d) const;
  const CensusOptions& options() const noexcept { return options_; }

 private:
  CensusOptions options_;
  std::mutex mu_;
  std::map<GroupDescriptor, std::optional<ElementOrderCensus>> entries_;
};

struct MoretoSignature {
  GroupDescriptor group;
  FactoredInteger order;
  std::uint64_t p = 0;                      // largest prime dividing the order
  std::optional<FactoredInteger> count_p;   // |S(p)|
  Provenance order_source = Provenance::Formula;
  Provenance count_source = Provenance::Absent;
};

/// count_p from, in order: vendored sporadic record, complete census,
/// alternating closed form; otherwise absent.
MoretoSignature moreto_signature(const GroupDescriptor& d, CensusCache& cache);

/// |G(k)| summed over vendored classes (data/class_counts.tsv), if any.
std::optional<FactoredInteger> vendored_class_count(const GroupDescriptor& d, std::uint64_t k);

/// Unordered pairs with equal orders, each pair ascending, pairs in
/// catalog order. Input is canonicalized and deduplicated first.
std::vector<std::pair<GroupDescriptor, GroupDescriptor>> equal_order_pairs(const std::vector<GroupDescriptor>& catalog);

enum class Verdict { Confirmed, Refuted, StatisticalOnly };
std::string to_string(Verdict v);

struct Evidence {
  std::string invariant;  // "order", "|G(7)|", "npe", ...
  std::string left, right;
  Provenance left_source = Provenance::Formula, right_source = Provenance::Formula;
  bool equal = false;
  bool exact = true;
  double left_se = 0, right_se = 0;  // statistical evidence only
};

struct CollisionReport {
  GroupDescriptor left, right;
  std::vector<std::string> matched;
  std::vector<Evidence> evidence;
  Verdict verdict = Verdict::Refuted;
};

struct StatisticalOptions {
  std::uint64_t samples = 1000000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double band = 3.0;  // combined standard errors
};

/// Compares |S(p)| for the largest prime p of a pair with equal orders.
/// Exact when both counts are known; otherwise samples both realizations.
/// DomainError for identical canonical descriptors or unequal orders.
CollisionReport confirm_moreto_collision(const GroupDescriptor& a, const GroupDescriptor& b, CensusCache& cache,
                                         const StatisticalOptions& stats = {});

/// Compares |G(2)| and |G(p)| for each extra p, from complete censuses.
/// Confirmed when every listed count agrees.
CollisionReport involution_checks(const GroupDescriptor& a, const GroupDescriptor& b, CensusCache& cache,
                                  const std::vector<std::uint64_t>& extra_primes = {});

struct NpeSearchResult {
  std::vector<CollisionReport> collisions;   // equal order and equal npe set
  std::vector<CollisionReport> examined;     // every equal-order pair
  std::vector<GroupDescriptor> uncensused;   // pair members without a census
};

/// Equal-order filter, then npe comparison on censuses of the pair members.
NpeSearchResult npe_collision_search(const std::vector<GroupDescriptor>& catalog, CensusCache& cache);

/// Catalog members with the given order and spectrum. Members of that order
/// without a census raise DomainError.
std::vector<GroupDescriptor> shi_compare(const FactoredInteger& order, const std::set<std::uint64_t>& pi_e,
                                         const std::vector<GroupDescriptor>& catalog, CensusCache& cache);

struct ReportCheck {
  std::string name;
  std::string paper_value;
  std::string computed_value;
  bool pass = false;
};

struct PaperReport {
  std::vector<ReportCheck> checks;
  bool all_pass() const;
  /// One JSON object per line: name, paper_value, computed_value, verdict.
  std::string to_jsonl() const;
  std::string to_table() const;
};

struct ReportOptions {
  StatisticalOptions stats{};
  unsigned threads = 0;
};

/// Every reproduction check; a failing or erroring check is recorded, not
/// thrown, with the error text (e.g. a missing file name) as its value.
PaperReport verify_paper_report(const ReportOptions& options = {});

}  // namespace sgq
