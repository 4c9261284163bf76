#pragma once

#include <compare>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sgq/factored.hpp"

namespace sgq {

enum class ClassicalSeries { A, B, C, D, TwistedA, TwistedD };
enum class ExceptionalSeries { G2, F4, E6, E7, E8, TwistedE6, TrialityD4, SuzukiB2, ReeF4, ReeG2 };

struct Alternating {
  unsigned degree;
  friend auto operator<=>(const Alternating&, const Alternating&) = default;
};

/// Named sporadic group; also holds the Tits group "2F4(2)'".
struct Sporadic {
  std::string name;
  friend auto operator<=>(const Sporadic&, const Sporadic&) = default;
};

/// Lie rank n, field size q (for the twisted series q is the size of the
/// fixed field, e.g. U4(2) is TwistedA rank 3 q 2).
struct Classical {
  ClassicalSeries series;
  unsigned rank;
  std::uint64_t q;
  friend auto operator<=>(const Classical&, const Classical&) = default;
};

struct Exceptional {
  ExceptionalSeries series;
  std::uint64_t q;
  friend auto operator<=>(const Exceptional&, const Exceptional&) = default;
};

/// Symbolic name of a finite nonabelian simple group.
///
/// Construction validates the parameter domain; the descriptor is not
/// necessarily canonical (L4(2) and A8 are distinct descriptors of one
/// group) until passed through canonicalize_descriptor.
class GroupDescriptor {
 public:
  using Variant = std::variant<Alternating, Sporadic, Classical, Exceptional>;

  GroupDescriptor(Alternating a);
  GroupDescriptor(Sporadic s);
  GroupDescriptor(Classical c);
  GroupDescriptor(Exceptional e);

  /// Case-insensitive ATLAS-style token: A8, L3(4), U4(2), S6(3), O7(3),
  /// O8+(2), O8-(3), G2(3), 2B2(8) (or Sz(8)), 3D4(2), 2F4(8), 2G2(27),
  /// F4(2), E6(2), 2E6(2), E7(2), E8(2), M11, Fi23, O'N, 2F4(2)' ...
  static GroupDescriptor parse(std::string_view token);

  const Variant& value() const noexcept { return value_; }
  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&value_);
  }

  /// ATLAS-style name, accepted back by parse.
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
  friend std::strong_ordering operator<=>(const GroupDescriptor& a, const GroupDescriptor& b);

 private:
  explicit GroupDescriptor(Variant v);
  Variant value_;
};

FactoredInteger order_of_descriptor(const GroupDescriptor& d);
GroupDescriptor canonicalize_descriptor(const GroupDescriptor& d);

/// Canonical simple groups of order <= max_order, ascending by order (ties
/// broken by descriptor order).
std::vector<GroupDescriptor> enumerate_catalog(const FactoredInteger& max_order);

/// The 26 sporadic groups in ATLAS order.
const std::vector<std::string>& sporadic_names();
/// "2F4(2)'"
inline constexpr std::string_view kTitsGroup = "2F4(2)'";

struct SporadicQuantRecord {
  std::string name;
  FactoredInteger order;
  std::uint64_t largest_prime = 0;
  FactoredInteger count_order_p;     // |S(p)|
  FactoredInteger normalizer_order;  // |N_S(P)|, derived
  std::string provenance;            // "paper" or "vendored-atlas"
};

/// Directory holding the vendored data files. SGQ_DATA_DIR overrides the
/// compiled-in default.
std::filesystem::path data_dir();
void set_data_dir(std::filesystem::path dir);
std::filesystem::path data_file(std::string_view name);

/// Reads sporadic.tsv. Throws LookupError naming the file if it is missing.
SporadicQuantRecord sporadic_quant_record(std::string_view name);
std::vector<SporadicQuantRecord> all_sporadic_records();

}  // namespace sgq
