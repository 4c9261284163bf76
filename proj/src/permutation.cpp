#include "sgq/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "sgq/errors.hpp"

namespace sgq {

Permutation::Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto x : img_) {
    if (x >= img_.size() || seen[x]) throw DomainError("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.img_.resize(n);
  std::iota(p.img_.begin(), p.img_.end(), 0u);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n, std::string_view cycles) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<std::uint32_t> cycle;
  std::size_t i = 0;
  auto fail = [&] { throw DomainError("malformed cycle notation: " + std::string(cycles)); };
  std::vector<bool> used(n, false);
  while (i < cycles.size()) {
    if (cycles[i] == ' ') {
      ++i;
      continue;
    }
    if (cycles[i] != '(') fail();
    ++i;
    cycle.clear();
    while (i < cycles.size() && cycles[i] != ')') {
      if (cycles[i] == ',' || cycles[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < cycles.size() && std::isdigit(static_cast<unsigned char>(cycles[j]))) ++j;
      if (j == i) fail();
      unsigned long v = std::stoul(std::string(cycles.substr(i, j - i)));
      if (v < 1 || v > n || used[v - 1]) fail();
      used[v - 1] = true;
      cycle.push_back(static_cast<std::uint32_t>(v - 1));
      i = j;
    }
    if (i >= cycles.size()) fail();
    ++i;
    for (std::size_t c = 0; c < cycle.size(); ++c) img[cycle[c]] = cycle[(c + 1) % cycle.size()];
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
  return r;
}

std::uint64_t Permutation::order(std::uint64_t cap) const {
  std::vector<bool> seen(img_.size(), false);
  u128 o = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    o = o / std::gcd(static_cast<std::uint64_t>(o % len), len) * len;
    if (o > cap) throw CapExceededError("element order exceeds cap " + std::to_string(cap), 0);
  }
  return static_cast<std::uint64_t>(o);
}

std::string Permutation::to_cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    os << '(';
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      if (j != i) os << ',';
      os << j + 1;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw DomainError("permutation degrees differ");
  Permutation r;
  r.img_.resize(a.img_.size());
  for (std::size_t i = 0; i < a.img_.size(); ++i) r.img_[i] = b.img_[a.img_[i]];
  return r;
}

std::uint64_t cycle_lcm(const std::uint16_t* img, std::size_t n, std::vector<std::uint8_t>& seen) {
  seen.assign(n, 0);
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = img[j]) {
      seen[j] = 1;
      ++len;
    }
    o = std::lcm(o, len);
  }
  return o;
}

// ---- Schreier-Sims ---------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
    if (!g.is_identity()) gens.push_back(g);
  }
  for (const auto& g : gens) {
    bool fixes_base = true;
    for (auto b : base_) fixes_base &= g[b] == b;
    if (!fixes_base) continue;
    for (std::uint32_t x = 0; x < degree; ++x)
      if (g[x] != x) {
        base_.push_back(x);
        break;
      }
  }
  levels_.resize(base_.size());
  for (std::size_t l = 0; l < base_.size(); ++l) {
    levels_[l].point = base_[l];
    for (const auto& g : gens) {
      bool fixes = true;
      for (std::size_t m = 0; m < l; ++m) fixes &= g[base_[m]] == base_[m];
      if (fixes) levels_[l].gens.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool changed = false;
    const Level& level = levels_[i];
    for (std::size_t pos = 0; !changed && pos < level.orbit.size(); ++pos) {
      for (std::size_t s = 0; !changed && s < level.gens.size(); ++s) {
        const Permutation& gen = level.gens[s];
        const std::uint32_t image = gen[level.orbit[pos]];
        Permutation schreier = level.transversal[pos] * gen * level.inv_transversal[level.index[image]];
        if (schreier.is_identity()) continue;
        std::size_t j = 0;
        Permutation h = sift(std::move(schreier), static_cast<std::size_t>(i) + 1, j);
        if (h.is_identity()) continue;
        if (j == levels_.size()) {
          std::uint32_t moved = 0;
          while (h[moved] == moved) ++moved;
          base_.push_back(moved);
          levels_.push_back(Level{moved, {}, {}, {}, {}, {}});
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<long>(j);
        changed = true;
      }
    }
    if (!changed) --i;
  }
}

void StabilizerChain::rebuild_orbit(Level& level) {
  level.index.assign(degree_, -1);
  level.orbit.assign(1, level.point);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.index[level.point] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    for (const auto& g : level.gens) {
      std::uint32_t y = g[level.orbit[head]];
      if (level.index[y] >= 0) continue;
      level.index[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      level.transversal.push_back(level.transversal[head] * g);
    }
  }
  level.inv_transversal.clear();
  level.inv_transversal.reserve(level.transversal.size());
  for (const auto& t : level.transversal) level.inv_transversal.push_back(t.inverse());
}

Permutation StabilizerChain::sift(Permutation g, std::size_t start, std::size_t& failed_at) const {
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& level = levels_[l];
    std::int32_t idx = level.index[g[level.point]];
    if (idx < 0) {
      failed_at = l;
      return g;
    }
    g = g * level.inv_transversal[idx];
  }
  failed_at = levels_.size();
  return g;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels_) out.push_back(l.orbit.size());
  return out;
}

FactoredInteger StabilizerChain::order() const {
  FactoredInteger o;
  for (const auto& l : levels_) o = o * factor_integer(l.orbit.size());
  return o;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  std::size_t at = 0;
  return sift(g, 0, at).is_identity() && at == levels_.size();
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[l].orbit.size() - 1);
    g = g * levels_[l].transversal[pick(rng)];
  }
  return g;
}

}  // namespace sgq
