#ifndef ARTIN_FINITE_GROUP_HPP_
#define ARTIN_FINITE_GROUP_HPP_

// A small permutation group with all of its elements listed. Elements are
// numbered in lexicographic order of their images, so index 0 is the
// identity; everything downstream (class representatives, canonical tuples)
// is phrased in terms of these indices and therefore reproducible.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/perm_group.hpp"
#include "artin/word.hpp"

namespace artin {

using ElementIndex = std::uint32_t;

class GroupTooLarge : public std::runtime_error {
 public:
  explicit GroupTooLarge(std::uint64_t order, std::size_t limit)
      : std::runtime_error("group of order " + std::to_string(order) + " exceeds element limit "
                           + std::to_string(limit)) {}
};

class FiniteGroup {
 public:
  static constexpr std::size_t default_limit = 100'000;
  static constexpr std::size_t table_limit = 4096;

  FiniteGroup(std::vector<Perm> generators, std::vector<std::string> names = {},
              std::size_t limit = default_limit)
      : gens_(std::move(generators)), names_(std::move(names)) {
    if (gens_.empty()) throw std::invalid_argument("a generator list is required");
    degree_ = gens_.front().degree();
    if (names_.empty()) names_ = numbered(gens_.size());
    if (names_.size() != gens_.size()) throw std::invalid_argument("one name per generator");
    PermGroup chain(degree_, gens_);
    if (chain.order() > limit) throw GroupTooLarge(chain.order(), limit);
    base_ = chain.base();
    if (base_.empty()) base_.push_back(0);
    enumerate(chain.order());
    compute_words();
    if (size() <= table_limit) build_table();
    compute_inverses();
    compute_classes();
  }

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t number_of_generators() const noexcept { return gens_.size(); }
  std::vector<std::string> const& generator_names() const noexcept { return names_; }
  Perm const& element(ElementIndex i) const { return elements_[i]; }
  std::vector<Perm> const& elements() const noexcept { return elements_; }
  static constexpr ElementIndex identity() noexcept { return 0; }

  ElementIndex generator(std::size_t k) const { return gen_index_[k]; }

  std::optional<ElementIndex> find(Perm const& p) const {
    if (p.degree() != degree_) return std::nullopt;
    auto it = lookup_.find(key_of(p));
    if (it == lookup_.end() || elements_[it->second] != p) return std::nullopt;
    return it->second;
  }

  ElementIndex index_of(Perm const& p) const {
    auto i = find(p);
    if (!i) throw std::invalid_argument("permutation is not an element of the group");
    return *i;
  }

  // i * j (first i, then j).
  ElementIndex mul(ElementIndex i, ElementIndex j) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(i) * size() + j];
    std::vector<std::uint32_t> k(base_.size());
    for (std::size_t b = 0; b < base_.size(); ++b) k[b] = elements_[j][elements_[i][base_[b]]];
    return lookup_.at(k);
  }

  ElementIndex inv(ElementIndex i) const { return inverse_[i]; }

  // g^-1 x g
  ElementIndex conjugate(ElementIndex x, ElementIndex g) const { return mul(mul(inv(g), x), g); }

  std::size_t element_order(ElementIndex i) const {
    std::size_t n = 1;
    for (ElementIndex p = i; p != identity(); p = mul(p, i)) ++n;
    return n;
  }

  // Product of generator images along a word (inverse letters allowed).
  ElementIndex evaluate(Word const& w) const {
    ElementIndex r = identity();
    for (Letter l : w) {
      ElementIndex g = generator(static_cast<std::size_t>(generator_of(l) - 1));
      r = mul(r, is_inverse(l) ? inv(g) : g);
    }
    return r;
  }

  // A shortest positive word in the generators for element i.
  Word const& word(ElementIndex i) const { return words_[i]; }

  std::string word_string(ElementIndex i) const {
    if (words_[i].empty()) return "1";
    std::string s;
    for (Letter l : words_[i]) {
      if (!s.empty()) s += " ";
      s += names_[static_cast<std::size_t>(generator_of(l) - 1)];
    }
    return s;
  }

  std::size_t number_of_classes() const noexcept { return class_reps_.size(); }
  std::vector<ElementIndex> const& class_reps() const noexcept { return class_reps_; }
  std::size_t class_of(ElementIndex i) const { return class_id_[i]; }
  std::size_t class_size(std::size_t c) const { return class_sizes_[c]; }
  bool are_conjugate(ElementIndex a, ElementIndex b) const { return class_id_[a] == class_id_[b]; }

  std::vector<ElementIndex> centralizer(ElementIndex x) const {
    std::vector<ElementIndex> c;
    for (ElementIndex g = 0; g < size(); ++g) {
      if (mul(g, x) == mul(x, g)) c.push_back(g);
    }
    return c;
  }

  bool is_central(ElementIndex x) const {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (mul(generator(k), x) != mul(x, generator(k))) return false;
    }
    return true;
  }

  // Some g with g x g^-1 = y, if x and y are conjugate.
  std::optional<ElementIndex> conjugator(ElementIndex x, ElementIndex y) const {
    if (!are_conjugate(x, y)) return std::nullopt;
    for (ElementIndex g = 0; g < size(); ++g) {
      if (mul(mul(g, x), inv(g)) == y) return g;
    }
    throw std::logic_error("conjugacy classes inconsistent");
  }

  // Some g with g t1[i] g^-1 = t2[i] for every i, or nothing. The search runs
  // through the coset C(t2[0]) g0 of the first coordinate's transporter.
  std::optional<ElementIndex> tuple_transporter(std::vector<ElementIndex> const& t1,
                                                std::vector<ElementIndex> const& t2) const {
    if (t1.size() != t2.size()) throw std::invalid_argument("tuples of different lengths");
    if (t1.empty()) return identity();
    auto g0 = conjugator(t1[0], t2[0]);
    if (!g0) return std::nullopt;
    for (ElementIndex c : centralizer(t2[0])) {
      ElementIndex g = mul(c, *g0);
      bool ok = true;
      for (std::size_t i = 1; i < t1.size() && ok; ++i) ok = mul(mul(g, t1[i]), inv(g)) == t2[i];
      if (ok) return g;
    }
    return std::nullopt;
  }

  // Order of the subgroup generated by the listed elements.
  std::uint64_t subgroup_order(std::vector<ElementIndex> const& gens) const {
    std::vector<Perm> ps;
    for (auto g : gens) ps.push_back(elements_[g]);
    if (ps.empty()) return 1;
    return PermGroup(degree_, ps).order();
  }

 private:
  static std::vector<std::string> numbered(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back("g" + std::to_string(i));
    return out;
  }

  struct KeyHash {
    std::size_t operator()(std::vector<std::uint32_t> const& k) const {
      std::size_t h = 1469598103934665603ull;
      for (auto v : k) h = (h ^ v) * 1099511628211ull;
      return h;
    }
  };

  std::vector<std::uint32_t> key_of(Perm const& p) const {
    std::vector<std::uint32_t> k(base_.size());
    for (std::size_t b = 0; b < base_.size(); ++b) k[b] = p[base_[b]];
    return k;
  }

  void enumerate(std::uint64_t order) {
    std::unordered_map<std::vector<std::uint32_t>, std::size_t, KeyHash> seen;
    std::vector<Perm> found{Perm(degree_)};
    seen.emplace(key_of(found[0]), 0);
    for (std::size_t q = 0; q < found.size(); ++q) {
      for (auto const& s : gens_) {
        Perm p = found[q] * s;
        if (seen.emplace(key_of(p), found.size()).second) found.push_back(std::move(p));
      }
    }
    if (found.size() != order) throw std::logic_error("element enumeration disagrees with stabilizer chain");
    std::sort(found.begin(), found.end());
    elements_ = std::move(found);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      lookup_.emplace(key_of(elements_[i]), static_cast<ElementIndex>(i));
    }
    for (auto const& s : gens_) gen_index_.push_back(lookup_.at(key_of(s)));
  }

  void compute_words() {
    words_.assign(size(), {});
    std::vector<bool> done(size(), false);
    std::vector<ElementIndex> queue{identity()};
    done[identity()] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      ElementIndex x = queue[q];
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        ElementIndex y = mul_slow(x, gen_index_[k]);
        if (done[y]) continue;
        done[y] = true;
        words_[y] = words_[x];
        words_[y].push_back(static_cast<Letter>(k + 1));
        queue.push_back(y);
      }
    }
  }

  ElementIndex mul_slow(ElementIndex i, ElementIndex j) const {
    std::vector<std::uint32_t> k(base_.size());
    for (std::size_t b = 0; b < base_.size(); ++b) k[b] = elements_[j][elements_[i][base_[b]]];
    return lookup_.at(k);
  }

  void build_table() {
    std::vector<ElementIndex> t(size() * size());
    for (ElementIndex i = 0; i < size(); ++i) {
      for (ElementIndex j = 0; j < size(); ++j) t[static_cast<std::size_t>(i) * size() + j] = mul_slow(i, j);
    }
    table_ = std::move(t);
  }

  void compute_inverses() {
    inverse_.resize(size());
    for (ElementIndex i = 0; i < size(); ++i) inverse_[i] = index_of(elements_[i].inverse());
  }

  void compute_classes() {
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    class_id_.assign(size(), none);
    for (ElementIndex x = 0; x < size(); ++x) {
      if (class_id_[x] != none) continue;
      std::size_t c = class_reps_.size();
      class_reps_.push_back(x);
      std::vector<ElementIndex> orbit{x};
      class_id_[x] = c;
      for (std::size_t q = 0; q < orbit.size(); ++q) {
        for (std::size_t k = 0; k < gens_.size(); ++k) {
          ElementIndex y = conjugate(orbit[q], gen_index_[k]);
          if (class_id_[y] != none) continue;
          class_id_[y] = c;
          orbit.push_back(y);
        }
      }
      class_sizes_.push_back(orbit.size());
    }
  }

  std::vector<Perm> gens_;
  std::vector<std::string> names_;
  std::size_t degree_ = 0;
  std::vector<std::uint32_t> base_;
  std::vector<Perm> elements_;
  std::unordered_map<std::vector<std::uint32_t>, ElementIndex, KeyHash> lookup_;
  std::vector<ElementIndex> gen_index_;
  std::vector<Word> words_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::size_t> class_id_;
  std::vector<ElementIndex> class_reps_;
  std::vector<std::size_t> class_sizes_;
};

}  // namespace artin

#endif  // ARTIN_FINITE_GROUP_HPP_
