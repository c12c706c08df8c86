#ifndef ARTIN_ROOT_SYSTEM_HPP_
#define ARTIN_ROOT_SYSTEM_HPP_

// Root systems of the spherical types over exact rings, and elements of the
// finite Coxeter group W stored as signed permutations of the positive roots.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/coxeter_data.hpp"
#include "artin/ring.hpp"
#include "artin/word.hpp"

namespace artin {

// Bit i set <=> generator i+1 is in the set.
using GeneratorSet = std::uint32_t;

class RootSystem;

class WElement {
 public:
  WElement() = default;

  RootSystem const& system() const { return *sys_; }
  bool valid() const noexcept { return sys_ != nullptr; }

  // Signed 1-based image of positive root k: +j means +beta_j, -j means -beta_j.
  int image(std::size_t k) const { return img_[k]; }
  int inverse_image(std::size_t k) const { return inv_[k]; }
  std::size_t number_of_roots() const noexcept { return img_.size(); }

  int length() const {
    int l = 0;
    for (auto v : img_) l += v < 0;
    return l;
  }

  bool is_identity() const {
    for (std::size_t k = 0; k < img_.size(); ++k) {
      if (img_[k] != static_cast<std::int16_t>(k + 1)) return false;
    }
    return true;
  }

  inline GeneratorSet left_descents() const;
  inline GeneratorSet right_descents() const;

  bool operator==(WElement const& o) const { return sys_ == o.sys_ && img_ == o.img_; }
  bool operator<(WElement const& o) const { return img_ < o.img_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : img_) h = (h ^ static_cast<std::uint16_t>(v)) * 1099511628211ull;
    return h;
  }

 private:
  friend class RootSystem;
  friend WElement operator*(WElement const&, WElement const&);
  friend WElement invert(WElement const&);

  RootSystem const* sys_ = nullptr;
  std::vector<std::int16_t> img_;
  std::vector<std::int16_t> inv_;
};

struct WElementHash {
  std::size_t operator()(WElement const& w) const { return w.hash(); }
};

class RootSystem {
 public:
  explicit RootSystem(CoxeterSpec const& spec) : spec_(spec), n_(spec.rank()) {
    if (n_ > 31) throw std::invalid_argument("rank too large for root system");
    choose_ring_and_matrix();
    close_roots();
    build_generators();
  }

  RootSystem(RootSystem const&) = delete;
  RootSystem& operator=(RootSystem const&) = delete;

  CoxeterSpec const& spec() const noexcept { return spec_; }
  int rank() const noexcept { return n_; }
  ScalarRing const& ring() const noexcept { return *ring_; }

  // s_i(alpha_j) = alpha_j - pairing(i, j) alpha_i (0-based).
  Scalar const& pairing(int i, int j) const {
    return pairing_[static_cast<std::size_t>(i * n_ + j)];
  }

  std::size_t number_of_positive_roots() const noexcept { return roots_.size(); }
  // Coordinates of positive root k in the basis of simple roots.
  std::vector<Scalar> const& root(std::size_t k) const { return roots_[k]; }
  int depth(std::size_t k) const { return depth_[k]; }
  // 0-based index of the simple root alpha_{i+1}.
  std::size_t simple_root_index(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  // Signed 1-based image of root k under s_{i+1}.
  int reflect(int i, std::size_t k) const {
    return refl_[static_cast<std::size_t>(i)][k];
  }

  WElement const& identity() const { return identity_; }
  // Simple reflection s_{i+1}.
  WElement const& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  WElement const& longest_element() const { return w0_; }

  WElement from_word(Word const& word) const {
    WElement w = identity_;
    for (Letter l : word) {
      int g = generator_of(l);
      if (g < 1 || g > n_) throw std::invalid_argument("generator index out of range");
      w = w * gens_[static_cast<std::size_t>(g - 1)];
    }
    return w;
  }

  // Lexicographically least reduced word (1-based letters).
  Word reduced_word(WElement w) const {
    Word out;
    while (true) {
      GeneratorSet d = w.left_descents();
      if (d == 0) break;
      int s = std::countr_zero(d);
      out.push_back(s + 1);
      w = gens_[static_cast<std::size_t>(s)] * w;
    }
    return out;
  }

  // Image of w under the automorphism of W permuting generators by perm
  // (0-based images); perm must be a diagram automorphism.
  WElement apply_generator_permutation(WElement const& w, std::vector<int> const& perm) const {
    return from_word(relabel(reduced_word(w), perm));
  }

 private:
  void choose_ring_and_matrix() {
    auto m = coxeter_matrix(spec_);
    switch (spec_.family()) {
      case Family::H: ring_ = golden_ring(); break;
      case Family::I2: ring_ = dihedral_ring(spec_.dihedral_order()); break;
      default: ring_ = integer_ring(); break;
    }
    ScalarRing const* R = ring_.get();
    pairing_.assign(static_cast<std::size_t>(n_ * n_), Scalar(R, 0));
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        Scalar& p = pairing_[static_cast<std::size_t>(i * n_ + j)];
        int mij = m(i, j);
        if (i == j) {
          p = Scalar(R, 2);
        } else if (mij == 2) {
          p = Scalar(R, 0);
        } else if (mij == 3) {
          p = Scalar(R, -1);
        } else if (spec_.family() == Family::I2 || mij == 5) {
          // -2cos(pi/m); for H this is -phi.
          p = -Scalar::generator(R);
        } else if (mij == 4) {
          // Crystallographic B/F: the long root sits on the lower index.
          p = Scalar(R, i < j ? -2 : -1);
        } else {
          throw std::logic_error("unsupported label in root system");
        }
      }
    }
  }

  std::vector<Scalar> reflect_coords(int i, std::vector<Scalar> const& v) const {
    Scalar c(ring_.get(), 0);
    for (int j = 0; j < n_; ++j) c += v[static_cast<std::size_t>(j)] * pairing(i, j);
    std::vector<Scalar> r = v;
    r[static_cast<std::size_t>(i)] -= c;
    return r;
  }

  static std::vector<std::int64_t> key(std::vector<Scalar> const& v) {
    std::vector<std::int64_t> k;
    for (auto const& s : v) k.insert(k.end(), s.coefficients().begin(), s.coefficients().end());
    return k;
  }

  // For a positive root beta other than alpha_i, s_i(beta) is again positive,
  // so the positive system is the closure of the simple roots under these
  // moves and no sign test in the ring is needed.
  void close_roots() {
    ScalarRing const* R = ring_.get();
    std::vector<std::vector<Scalar>> found;
    std::vector<int> level;
    std::map<std::vector<std::int64_t>, std::size_t> where;
    for (int i = 0; i < n_; ++i) {
      std::vector<Scalar> e(static_cast<std::size_t>(n_), Scalar(R, 0));
      e[static_cast<std::size_t>(i)] = Scalar(R, 1);
      where[key(e)] = found.size();
      found.push_back(e);
      level.push_back(0);
    }
    for (std::size_t q = 0; q < found.size(); ++q) {
      for (int i = 0; i < n_; ++i) {
        if (q == static_cast<std::size_t>(i)) continue;
        auto r = reflect_coords(i, found[q]);
        auto k = key(r);
        if (where.count(k)) continue;
        where[k] = found.size();
        found.push_back(r);
        level.push_back(level[q] + 1);
        if (found.size() > 20000) throw std::logic_error("root system is not finite");
      }
    }
    std::vector<std::size_t> order(found.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (level[a] != level[b]) return level[a] < level[b];
      return key(found[a]) < key(found[b]);
    });
    where.clear();
    for (std::size_t k = 0; k < order.size(); ++k) {
      roots_.push_back(found[order[k]]);
      depth_.push_back(level[order[k]]);
      where[key(roots_.back())] = k;
    }
    simple_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      std::vector<Scalar> e(static_cast<std::size_t>(n_), Scalar(R, 0));
      e[static_cast<std::size_t>(i)] = Scalar(R, 1);
      simple_[static_cast<std::size_t>(i)] = where.at(key(e));
    }
    refl_.assign(static_cast<std::size_t>(n_), std::vector<std::int16_t>(roots_.size()));
    for (int i = 0; i < n_; ++i) {
      for (std::size_t k = 0; k < roots_.size(); ++k) {
        if (k == simple_[static_cast<std::size_t>(i)]) {
          refl_[static_cast<std::size_t>(i)][k] = static_cast<std::int16_t>(-(static_cast<int>(k) + 1));
        } else {
          auto it = where.find(key(reflect_coords(i, roots_[k])));
          if (it == where.end()) throw std::logic_error("reflection left the root system");
          refl_[static_cast<std::size_t>(i)][k] = static_cast<std::int16_t>(it->second + 1);
        }
      }
    }
  }

  void build_generators() {
    std::size_t N = roots_.size();
    identity_.sys_ = this;
    identity_.img_.resize(N);
    for (std::size_t k = 0; k < N; ++k) identity_.img_[k] = static_cast<std::int16_t>(k + 1);
    identity_.inv_ = identity_.img_;
    for (int i = 0; i < n_; ++i) {
      WElement g;
      g.sys_ = this;
      g.img_ = refl_[static_cast<std::size_t>(i)];
      g.inv_ = g.img_;  // involution
      gens_.push_back(std::move(g));
    }
    w0_ = identity_;
    while (true) {
      GeneratorSet r = w0_.right_descents();
      GeneratorSet all = (GeneratorSet{1} << n_) - 1;
      if (r == all) break;
      int s = std::countr_zero(static_cast<GeneratorSet>(~r & all));
      w0_ = w0_ * gens_[static_cast<std::size_t>(s)];
    }
  }

  CoxeterSpec spec_;
  int n_;
  std::shared_ptr<ScalarRing const> ring_;
  std::vector<Scalar> pairing_;
  std::vector<std::vector<Scalar>> roots_;
  std::vector<int> depth_;
  std::vector<std::size_t> simple_;
  std::vector<std::vector<std::int16_t>> refl_;
  WElement identity_;
  std::vector<WElement> gens_;
  WElement w0_;
};

inline GeneratorSet WElement::left_descents() const {
  GeneratorSet d = 0;
  for (int i = 0; i < sys_->rank(); ++i) {
    if (inv_[sys_->simple_root_index(i)] < 0) d |= GeneratorSet{1} << i;
  }
  return d;
}

inline GeneratorSet WElement::right_descents() const {
  GeneratorSet d = 0;
  for (int i = 0; i < sys_->rank(); ++i) {
    if (img_[sys_->simple_root_index(i)] < 0) d |= GeneratorSet{1} << i;
  }
  return d;
}

// Composition u o v (apply v first): the product uv in W.
inline WElement operator*(WElement const& u, WElement const& v) {
  if (u.sys_ != v.sys_) throw std::invalid_argument("W elements from different types");
  WElement w;
  w.sys_ = u.sys_;
  std::size_t N = u.img_.size();
  w.img_.resize(N);
  w.inv_.resize(N);
  for (std::size_t k = 0; k < N; ++k) {
    int t = v.img_[k];
    int r = u.img_[static_cast<std::size_t>(std::abs(t) - 1)];
    w.img_[k] = static_cast<std::int16_t>(t > 0 ? r : -r);
    int a = u.inv_[k];
    int b = v.inv_[static_cast<std::size_t>(std::abs(a) - 1)];
    w.inv_[k] = static_cast<std::int16_t>(a > 0 ? b : -b);
  }
  return w;
}

inline WElement invert(WElement const& u) {
  WElement w = u;
  std::swap(w.img_, w.inv_);
  return w;
}

// Shared, lazily built root systems.
inline std::shared_ptr<RootSystem const> root_system(CoxeterSpec const& spec) {
  static std::mutex mu;
  static std::map<CoxeterSpec, std::shared_ptr<RootSystem const>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(spec);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<RootSystem const>(spec);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(spec, built);
  return it->second;
}

inline WElement w_from_word(CoxeterSpec const& spec, Word const& word) {
  return root_system(spec)->from_word(word);
}

inline WElement longest_element(CoxeterSpec const& spec) {
  return root_system(spec)->longest_element();
}

// Multiplicative order of a W element.
inline int element_order(WElement const& w) {
  WElement p = w;
  int k = 1;
  while (!p.is_identity()) {
    p = p * w;
    ++k;
  }
  return k;
}

}  // namespace artin

#endif  // ARTIN_ROOT_SYSTEM_HPP_
