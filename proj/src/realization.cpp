#include "sgq/realization.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "sgq/errors.hpp"

namespace sgq {

// ---- Matrix ----------------------------------------------------------------

Matrix::Matrix(std::shared_ptr<const FiniteField> field, unsigned dim)
    : field_(std::move(field)), dim_(dim), a_(std::size_t(dim) * dim, 0) {
  if (!field_) throw DomainError("matrix needs a field");
}

Matrix Matrix::identity(std::shared_ptr<const FiniteField> field, unsigned dim) {
  Matrix m(std::move(field), dim);
  for (unsigned i = 0; i < dim; ++i) m.set(i, i, 1);
  return m;
}

std::vector<std::uint32_t> Matrix::apply(const std::vector<std::uint32_t>& v) const {
  const FiniteField& F = *field_;
  std::vector<std::uint32_t> out(dim_, 0);
  for (unsigned r = 0; r < dim_; ++r) {
    std::uint32_t s = 0;
    for (unsigned c = 0; c < dim_; ++c) s = F.add(s, F.mul(at(r, c), v[c]));
    out[r] = s;
  }
  return out;
}

std::uint32_t Matrix::determinant() const {
  const FiniteField& F = *field_;
  std::vector<std::uint32_t> m = a_;
  std::uint32_t det = 1;
  for (unsigned col = 0; col < dim_; ++col) {
    unsigned pivot = col;
    while (pivot < dim_ && m[pivot * dim_ + col] == 0) ++pivot;
    if (pivot == dim_) return 0;
    if (pivot != col) {
      for (unsigned c = 0; c < dim_; ++c) std::swap(m[pivot * dim_ + c], m[col * dim_ + c]);
      det = F.neg(det);
    }
    const std::uint32_t pv = m[col * dim_ + col];
    det = F.mul(det, pv);
    const std::uint32_t inv = F.inv(pv);
    for (unsigned r = col + 1; r < dim_; ++r) {
      const std::uint32_t f = F.mul(m[r * dim_ + col], inv);
      if (f == 0) continue;
      for (unsigned c = col; c < dim_; ++c) m[r * dim_ + c] = F.sub(m[r * dim_ + c], F.mul(f, m[col * dim_ + c]));
    }
  }
  return det;
}

bool Matrix::is_scalar() const {
  for (unsigned r = 0; r < dim_; ++r)
    for (unsigned c = 0; c < dim_; ++c) {
      if (r != c && at(r, c) != 0) return false;
      if (r == c && at(r, c) != at(0, 0)) return false;
    }
  return at(0, 0) != 0;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim_ != b.dim_ || a.field_ != b.field_) throw DomainError("matrix shapes or fields differ");
  const FiniteField& F = *a.field_;
  Matrix out(a.field_, a.dim_);
  const unsigned d = a.dim_;
  for (unsigned r = 0; r < d; ++r)
    for (unsigned k = 0; k < d; ++k) {
      const std::uint32_t x = a.at(r, k);
      if (x == 0) continue;
      for (unsigned c = 0; c < d; ++c) out.a_[r * d + c] = F.add(out.a_[r * d + c], F.mul(x, b.at(k, c)));
    }
  return out;
}

// ---- GroupRealization ------------------------------------------------------

struct GroupRealization::ChainCache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

GroupRealization::GroupRealization(std::string name, std::size_t degree, std::vector<Permutation> generators,
                                   std::optional<FactoredInteger> expected_order)
    : name_(std::move(name)),
      degree_(degree),
      gens_(std::move(generators)),
      expected_(std::move(expected_order)),
      cache_(std::make_shared<ChainCache>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw DomainError(name_ + ": generator degree differs from " + std::to_string(degree_));
}

GroupRealization::GroupRealization(std::string name, ProjectiveAction action, std::vector<Permutation> generators,
                                   std::optional<FactoredInteger> expected_order)
    : GroupRealization(std::move(name), action.points.size(), std::move(generators), std::move(expected_order)) {
  if (action.generators.size() != gens_.size()) throw DomainError(name_ + ": matrix and permutation generators differ");
  projective_ = std::make_shared<const ProjectiveAction>(std::move(action));
}

const StabilizerChain& GroupRealization::chain() const {
  std::call_once(cache_->once, [&] { cache_->chain = std::make_unique<StabilizerChain>(degree_, gens_); });
  return *cache_->chain;
}

std::shared_ptr<const FiniteField> build_field(std::uint32_t p, unsigned k) {
  auto f = std::make_shared<const FiniteField>(p, k);
  return f;
}

// ---- projective action -----------------------------------------------------

namespace {

void normalize(std::vector<std::uint32_t>& v, const FiniteField& F) {
  for (auto x : v)
    if (x != 0) {
      const std::uint32_t inv = F.inv(x);
      for (auto& y : v) y = F.mul(y, inv);
      return;
    }
  throw DomainError("zero vector has no projective point");
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v) h = (h ^ x) * 0x100000001b3ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

}  // namespace

GroupRealization projective_realization(std::string name, std::vector<Matrix> generators,
                                        std::optional<FactoredInteger> expected_order, std::size_t max_points) {
  if (generators.empty()) throw DomainError(name + ": no generators");
  const auto field = generators.front().field_ptr();
  const unsigned d = generators.front().dim();
  if (d < 2) throw DomainError(name + ": dimension must be >= 2");
  for (const auto& g : generators) {
    if (g.dim() != d || g.field_ptr() != field) throw DomainError(name + ": generators differ in shape");
    if (g.determinant() == 0) throw DomainError(name + ": singular generator matrix");
  }
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> index;
  std::vector<std::vector<std::uint32_t>> points;
  std::vector<std::uint32_t> e1(d, 0);
  e1[0] = 1;
  index.emplace(e1, 0);
  points.push_back(e1);
  std::vector<std::vector<std::uint32_t>> images(generators.size());
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      auto v = generators[g].apply(points[head]);
      normalize(v, *field);
      auto [it, fresh] = index.emplace(v, static_cast<std::uint32_t>(points.size()));
      if (fresh) {
        if (points.size() >= max_points)
          throw DomainError(name + ": projective orbit exceeds " + std::to_string(max_points) + " points");
        points.push_back(std::move(v));
      }
      images[g].push_back(it->second);
    }
  }
  std::vector<Permutation> perms;
  for (auto& img : images) perms.emplace_back(std::move(img));
  ProjectiveAction action{field, d, std::move(generators), std::move(points)};
  return GroupRealization(std::move(name), std::move(action), std::move(perms), std::move(expected_order));
}

// ---- permutation sources ---------------------------------------------------

GroupRealization alternating_realization(unsigned n) {
  if (n < 5) throw DomainError("A" + std::to_string(n) + ": alternating realizations need n >= 5");
  std::vector<std::uint32_t> three(n), big(n);
  for (unsigned i = 0; i < n; ++i) three[i] = big[i] = i;
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  const unsigned start = n % 2 ? 0 : 1;
  for (unsigned i = start; i < n; ++i) big[i] = i + 1 < n ? i + 1 : start;
  return GroupRealization("A" + std::to_string(n), n, {Permutation(three), Permutation(big)},
                          order_of_descriptor(Alternating{n}));
}

GroupRealization load_generator_file(const std::filesystem::path& path, std::optional<FactoredInteger> expected_order) {
  std::ifstream in(path);
  if (!in) throw LookupError("missing generator file: " + path.string());
  const std::string src = path.string();
  std::string line;
  std::size_t lineno = 0;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (degree == 0) {
      if (tokens.size() != 2 || tokens[0] != "degree") throw ParseError(src, lineno, "expected 'degree N'");
      try {
        degree = std::stoul(tokens[1]);
      } catch (const std::exception&) {
        throw ParseError(src, lineno, "bad degree '" + tokens[1] + "'");
      }
      if (degree == 0 || degree > 65536) throw ParseError(src, lineno, "degree out of range");
      continue;
    }
    if (tokens.size() != degree)
      throw ParseError(src, lineno,
                       "expected " + std::to_string(degree) + " images, found " + std::to_string(tokens.size()));
    std::vector<std::uint32_t> img;
    img.reserve(degree);
    for (const auto& t : tokens) {
      if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError(src, lineno, "image '" + t + "' is not a positive integer");
      unsigned long v = std::stoul(t);
      if (v < 1 || v > degree) throw ParseError(src, lineno, "image " + t + " outside 1.." + std::to_string(degree));
      img.push_back(static_cast<std::uint32_t>(v - 1));
    }
    try {
      gens.emplace_back(std::move(img));
    } catch (const DomainError&) {
      throw ParseError(src, lineno, "generator is not a bijection");
    }
  }
  if (degree == 0) throw ParseError(src, lineno, "missing 'degree N' line");
  std::string name = path.stem().string();
  for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return GroupRealization(name, degree, std::move(gens), std::move(expected_order));
}

namespace {

std::filesystem::path generator_file_for(const Sporadic& s) {
  std::string stem;
  for (char c : s.name)
    if (std::isalnum(static_cast<unsigned char>(c))) stem.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return data_file(stem + ".gens");
}

}  // namespace

bool has_realization(const GroupDescriptor& d) {
  if (d.get_if<Alternating>() || d.get_if<Classical>()) return true;
  if (const auto* s = d.get_if<Sporadic>()) return std::filesystem::exists(generator_file_for(*s));
  return false;
}

GroupRealization realize(const GroupDescriptor& d) {
  if (const auto* a = d.get_if<Alternating>()) return alternating_realization(a->degree);
  if (const auto* c = d.get_if<Classical>()) return classical_realization(*c);
  if (const auto* s = d.get_if<Sporadic>()) {
    const auto path = generator_file_for(*s);
    if (!std::filesystem::exists(path))
      throw DomainError(s->name + ": no generator file (" + path.string() + ")");
    GroupRealization r = load_generator_file(path, order_of_descriptor(d));
    return GroupRealization(s->name, r.degree(), r.generators(), r.expected_order());
  }
  throw DomainError(d.to_string() + ": no realization is available for exceptional groups");
}

// ---- element orders, group order -------------------------------------------

std::uint64_t element_order(const Permutation& g, std::uint64_t cap) { return g.order(cap); }

std::uint64_t element_order(const Matrix& g, std::uint64_t cap) {
  if (cap == 0) throw DomainError("cap must be positive");
  if (g.determinant() == 0) throw DomainError("singular matrix has no order");
  Matrix power = g;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (power.is_scalar()) return k;
    power = power * g;
  }
  throw CapExceededError("projective order exceeds cap " + std::to_string(cap), cap);
}

FactoredInteger bsgs_order(const GroupRealization& r) { return r.chain().order(); }

unsigned resolve_threads(unsigned requested) {
  if (requested) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace sgq
