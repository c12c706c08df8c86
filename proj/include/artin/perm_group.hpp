#ifndef ARTIN_PERM_GROUP_HPP_
#define ARTIN_PERM_GROUP_HPP_

// Permutations (right action, i^(pq) = (i^p)^q) and permutation groups with a
// stabilizer chain built by the deterministic Schreier-Sims algorithm.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0u); }
  explicit Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw std::invalid_argument("not a permutation");
      seen[v] = true;
    }
  }

  std::size_t degree() const noexcept { return img_.size(); }
  std::uint32_t operator[](std::size_t i) const { return img_[i]; }
  std::vector<std::uint32_t> const& images() const noexcept { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != i) return false;
    }
    return true;
  }

  // p * q: first p, then q.
  Perm operator*(Perm const& q) const {
    if (q.degree() != degree()) throw std::invalid_argument("permutation degrees differ");
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = q.img_[img_[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  // g^-1 p g
  Perm conjugate_by(Perm const& g) const { return g.inverse() * *this * g; }

  bool operator==(Perm const&) const = default;
  bool operator<(Perm const& o) const { return img_ < o.img_; }

  std::size_t order() const {
    std::vector<bool> seen(img_.size(), false);
    std::size_t ord = 1;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  // Cycle notation with 1-based points, "()" for the identity.
  std::string cycle_string() const {
    std::string out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      out += "(";
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        if (j != i) out += ",";
        out += std::to_string(j + 1);
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : img_) h = (h ^ v) * 1099511628211ull;
    return h;
  }

 private:
  std::vector<std::uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(Perm const& p) const { return p.hash(); }
};

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Perm> generators)
      : degree_(degree), gens_(std::move(generators)) {
    for (auto const& g : gens_) {
      if (g.degree() != degree_) throw std::invalid_argument("generator of wrong degree");
    }
    build();
  }

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Perm> const& generators() const noexcept { return gens_; }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (auto const& l : levels_) o *= l.orbit.size();
    return o;
  }

  std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> b;
    for (auto const& l : levels_) b.push_back(l.point);
    return b;
  }

  std::vector<std::size_t> orbit_lengths() const {
    std::vector<std::size_t> out;
    for (auto const& l : levels_) out.push_back(l.orbit.size());
    return out;
  }

  bool contains(Perm const& g) const {
    if (g.degree() != degree_) return false;
    auto [h, lvl] = strip(g, 0);
    return lvl == levels_.size() && h.is_identity();
  }

 private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<Perm> gens;
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> where;  // point -> position in orbit, or -1
    std::vector<Perm> transversal;     // transversal[k] maps point to orbit[k]
    std::vector<Perm> inverse;
  };

  void recompute(Level& l) const {
    l.orbit.assign(1, l.point);
    l.where.assign(degree_, -1);
    l.where[l.point] = 0;
    l.transversal.assign(1, Perm(degree_));
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      for (auto const& s : l.gens) {
        std::uint32_t r = s[l.orbit[k]];
        if (l.where[r] >= 0) continue;
        l.where[r] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(r);
        l.transversal.push_back(l.transversal[k] * s);
      }
    }
    l.inverse.clear();
    for (auto const& t : l.transversal) l.inverse.push_back(t.inverse());
  }

  std::pair<Perm, std::size_t> strip(Perm h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      std::uint32_t x = h[levels_[l].point];
      std::int32_t k = levels_[l].where[x];
      if (k < 0) return {h, l};
      h = h * levels_[l].inverse[static_cast<std::size_t>(k)];
    }
    return {h, levels_.size()};
  }

  std::uint32_t moved_point(Perm const& g) const {
    for (std::uint32_t i = 0; i < degree_; ++i) {
      if (g[i] != i) return i;
    }
    throw std::logic_error("identity has no moved point");
  }

  // Adds g to levels from..to, appending a new level if to == size.
  void add_strong_generator(Perm const& g, std::size_t from, std::size_t to) {
    if (to == levels_.size()) {
      Level l;
      l.point = moved_point(g);
      levels_.push_back(std::move(l));
    }
    for (std::size_t l = from; l <= to; ++l) {
      levels_[l].gens.push_back(g);
      recompute(levels_[l]);
    }
  }

  void build() {
    for (auto const& g : gens_) {
      if (g.is_identity()) continue;
      auto [h, lvl] = strip(g, 0);
      if (lvl == levels_.size() && h.is_identity()) continue;
      add_strong_generator(h, 0, lvl);
      complete();
    }
  }

  void complete() {
    long i = static_cast<long>(levels_.size()) - 1;
    while (i >= 0) {
      auto li = static_cast<std::size_t>(i);
      bool extended = false;
      for (std::size_t k = 0; k < levels_[li].orbit.size() && !extended; ++k) {
        for (std::size_t s = 0; s < levels_[li].gens.size(); ++s) {
          Level const& L = levels_[li];
          Perm const& sg = L.gens[s];
          std::uint32_t img = sg[L.orbit[k]];
          Perm sch = L.transversal[k] * sg
                     * L.inverse[static_cast<std::size_t>(L.where[img])];
          if (sch.is_identity()) continue;
          auto [h, lvl] = strip(sch, li + 1);
          if (lvl == levels_.size() && h.is_identity()) continue;
          add_strong_generator(h, li + 1, lvl);
          i = static_cast<long>(lvl);
          extended = true;
          break;
        }
      }
      if (!extended) --i;
    }
  }

  std::size_t degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

}  // namespace artin

#endif  // ARTIN_PERM_GROUP_HPP_
