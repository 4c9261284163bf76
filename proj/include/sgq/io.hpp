#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgq/catalog.hpp"
#include "sgq/conjecture.hpp"
#include "sgq/factored.hpp"

namespace sgq {

struct CatalogRecord {
  std::string descriptor;  // canonical
  FactoredInteger order;
  std::uint64_t largest_prime = 0;
  std::optional<FactoredInteger> count_p;
  Provenance count_source = Provenance::Absent;
  std::optional<std::set<std::uint64_t>> pi_e;
  std::optional<std::set<std::uint64_t>> npe;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

/// Records for catalog members. With `census`, members that can be
/// enumerated under the cache's cap contribute spectra and npe sets.
std::vector<CatalogRecord> catalog_records(const std::vector<GroupDescriptor>& catalog, CensusCache& cache,
                                           bool census);

/// One JSON object per line, keys in fixed order: descriptor, order,
/// order_decimal, largest_prime, count_p, count_p_provenance, pi_e, npe.
std::string catalog_to_jsonl(const std::vector<CatalogRecord>& records);
std::vector<CatalogRecord> catalog_from_jsonl(const std::string& text, const std::string& source = "<input>");
void write_catalog(const std::vector<CatalogRecord>& records, const std::filesystem::path& path);
/// ParseError with the line number on malformed input.
std::vector<CatalogRecord> read_catalog(const std::filesystem::path& path);

/// RFC 4180 field: quoted when it holds a comma, quote, CR or LF.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);
std::string catalog_to_csv(const std::vector<CatalogRecord>& records);

/// Entry point of the command-line tool. Returns the exit status:
/// 0 success, 1 check failure or runtime error, 2 usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgq
