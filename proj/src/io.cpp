#include "sgq/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "sgq/errors.hpp"

namespace sgq {

namespace {

using json = nlohmann::ordered_json;

std::string set_text(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  for (auto x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

}  // namespace

std::vector<CatalogRecord> catalog_records(const std::vector<GroupDescriptor>& catalog, CensusCache& cache,
                                           bool census) {
  std::vector<CatalogRecord> out;
  for (const auto& raw : catalog) {
    const GroupDescriptor d = canonicalize_descriptor(raw);
    CatalogRecord r;
    r.descriptor = d.to_string();
    r.order = order_of_descriptor(d);
    r.largest_prime = r.order.largest_prime();
    std::optional<ElementOrderCensus> c;
    if (census && cache.censusable(d)) c = cache.get(d);
    if (c) {
      const auto inv = derive_invariants(*c);
      r.pi_e = inv.pi_e;
      r.npe = inv.npe;
      r.count_p = factor_integer(inv.count_p);
      r.count_source = Provenance::Census;
    } else if (const auto* s = d.get_if<Sporadic>()) {
      const auto rec = sporadic_quant_record(s->name);
      r.count_p = rec.count_order_p;
      r.count_source = rec.provenance == "paper" ? Provenance::Paper : Provenance::VendoredAtlas;
    } else if (const auto* a = d.get_if<Alternating>()) {
      r.count_p = alternating_prime_order_count(a->degree, r.largest_prime);
      r.count_source = Provenance::ClosedForm;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string catalog_to_jsonl(const std::vector<CatalogRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    json j;
    j["descriptor"] = r.descriptor;
    j["order"] = r.order.to_string();
    j["order_decimal"] = r.order.to_decimal();
    j["largest_prime"] = r.largest_prime;
    j["count_p"] = r.count_p ? json(r.count_p->to_string()) : json(nullptr);
    j["count_p_provenance"] = to_string(r.count_source);
    j["pi_e"] = r.pi_e ? json(*r.pi_e) : json(nullptr);
    j["npe"] = r.npe ? json(*r.npe) : json(nullptr);
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<CatalogRecord> catalog_from_jsonl(const std::string& text, const std::string& source) {
  std::vector<CatalogRecord> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      CatalogRecord r;
      r.descriptor = j.at("descriptor").get<std::string>();
      GroupDescriptor::parse(r.descriptor);
      r.order = FactoredInteger::parse(j.at("order").get<std::string>());
      if (r.order.to_decimal() != j.at("order_decimal").get<std::string>())
        throw ParseError(source, lineno, "order and order_decimal disagree");
      r.largest_prime = j.at("largest_prime").get<std::uint64_t>();
      if (!j.at("count_p").is_null()) r.count_p = FactoredInteger::parse(j.at("count_p").get<std::string>());
      r.count_source = provenance_from_string(j.at("count_p_provenance").get<std::string>());
      if (r.count_p.has_value() == (r.count_source == Provenance::Absent))
        throw ParseError(source, lineno, "count_p and its provenance disagree");
      if (!j.at("pi_e").is_null()) r.pi_e = j.at("pi_e").get<std::set<std::uint64_t>>();
      if (!j.at("npe").is_null()) r.npe = j.at("npe").get<std::set<std::uint64_t>>();
      out.push_back(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(source, lineno, e.what());
    }
  }
  return out;
}

void write_catalog(const std::vector<CatalogRecord>& records, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw LookupError("cannot write " + path.string());
  f << catalog_to_jsonl(records);
}

std::vector<CatalogRecord> read_catalog(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw LookupError("cannot read " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return catalog_from_jsonl(ss.str(), path.string());
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\r\n";
}

std::string catalog_to_csv(const std::vector<CatalogRecord>& records) {
  std::string out = csv_row({"descriptor", "order", "order_decimal", "largest_prime", "count_p",
                             "count_p_provenance", "pi_e", "npe"});
  for (const auto& r : records)
    out += csv_row({r.descriptor, r.order.to_string(), r.order.to_decimal(), std::to_string(r.largest_prime),
                    r.count_p ? r.count_p->to_string() : "", to_string(r.count_source),
                    r.pi_e ? set_text(*r.pi_e) : "", r.npe ? set_text(*r.npe) : ""});
  return out;
}

}  // namespace sgq
