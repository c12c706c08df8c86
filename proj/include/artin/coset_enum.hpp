#ifndef ARTIN_COSET_ENUM_HPP_
#define ARTIN_COSET_ENUM_HPP_

// HLT coset enumeration with lookahead, following the scan-and-fill and
// coincidence routines of Holt's handbook. The completed table is
// standardized (cosets renumbered in breadth-first order along the columns)
// so the result does not depend on the order in which cosets were defined.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

class CosetLimitExceeded : public std::runtime_error {
 public:
  explicit CosetLimitExceeded(std::size_t limit)
      : std::runtime_error("coset enumeration not finished: limit of " + std::to_string(limit)
                           + " cosets reached"),
        limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

struct CosetTable {
  std::size_t number_of_generators = 0;
  // table[c][2g] = c . g_{g+1}, table[c][2g+1] = c . g_{g+1}^-1 (0-based cosets;
  // coset 0 is the subgroup itself).
  std::vector<std::vector<std::int32_t>> table;
  // A word (in the generators) taking coset 0 to each coset.
  std::vector<Word> representatives;

  std::size_t index() const noexcept { return table.size(); }

  std::int32_t act(std::int32_t c, Letter l) const {
    int g = generator_of(l) - 1;
    return table[static_cast<std::size_t>(c)][static_cast<std::size_t>(2 * g + (is_inverse(l) ? 1 : 0))];
  }

  std::int32_t act(std::int32_t c, Word const& w) const {
    for (Letter l : w) c = act(c, l);
    return c;
  }

  // Permutation of the cosets induced by generator g (0-based, right action).
  std::vector<std::uint32_t> generator_permutation(std::size_t g) const {
    std::vector<std::uint32_t> p(table.size());
    for (std::size_t c = 0; c < table.size(); ++c) p[c] = static_cast<std::uint32_t>(table[c][2 * g]);
    return p;
  }
};

struct CosetEnumerationOptions {
  std::size_t coset_limit = 1'000'000;
};

namespace detail {

class ToddCoxeter {
 public:
  ToddCoxeter(std::size_t ngens, std::vector<Word> const& relators,
              std::vector<Word> const& subgroup, CosetEnumerationOptions opts)
      : ngens_(ngens), cols_(2 * ngens), opts_(opts) {
    for (auto const& r : relators) relators_.push_back(to_columns(r));
    for (auto const& h : subgroup) subgroup_.push_back(to_columns(h));
    std::size_t longest = ngens_;
    for (auto const& r : relators_) longest += r.size();
    for (auto const& h : subgroup_) longest += h.size();
    reserve_ = longest + 16;
    if (opts_.coset_limit < reserve_ + 2) opts_.coset_limit = reserve_ + 2;
  }

  CosetTable run() {
    new_coset();
    for (auto const& h : subgroup_) {
      scan_and_fill(0, h);
    }
    for (std::size_t a = 0; a < table_rows(); ++a) {
      if (!live(a)) continue;
      if (table_rows() + reserve_ > opts_.coset_limit) {
        lookahead();
        a = compress(a);
        if (table_rows() + reserve_ > opts_.coset_limit) throw CosetLimitExceeded(opts_.coset_limit);
      }
      for (auto const& r : relators_) {
        scan_and_fill(a, r);
        if (!live(a)) break;
      }
      if (!live(a)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (cell(a, x) < 0) define(a, x);
      }
    }
    return standardize();
  }

 private:
  using Cols = std::vector<std::size_t>;

  Cols to_columns(Word const& w) const {
    Cols c;
    for (Letter l : w) {
      auto g = static_cast<std::size_t>(generator_of(l) - 1);
      if (g >= ngens_) throw std::invalid_argument("letter out of range in coset enumeration");
      c.push_back(2 * g + (is_inverse(l) ? 1 : 0));
    }
    return c;
  }

  static std::size_t inv(std::size_t x) { return x ^ 1u; }

  std::int32_t& cell(std::size_t c, std::size_t x) { return table_[c * cols_ + x]; }

  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::size_t table_rows() const { return parent_.size(); }

  std::size_t new_coset() {
    std::size_t c = parent_.size();
    parent_.push_back(static_cast<std::int32_t>(c));
    table_.resize(table_.size() + cols_, -1);
    return c;
  }

  void define(std::size_t a, std::size_t x) {
    std::size_t b = new_coset();
    cell(a, x) = static_cast<std::int32_t>(b);
    cell(b, inv(x)) = static_cast<std::int32_t>(a);
  }

  std::size_t rep(std::size_t k) {
    std::size_t l = k;
    while (parent_[l] != static_cast<std::int32_t>(l)) l = static_cast<std::size_t>(parent_[l]);
    while (parent_[k] != static_cast<std::int32_t>(l)) {
      std::size_t next = static_cast<std::size_t>(parent_[k]);
      parent_[k] = static_cast<std::int32_t>(l);
      k = next;
    }
    return l;
  }

  void merge(std::size_t k, std::size_t l) {
    std::size_t p = rep(k), q = rep(l);
    if (p == q) return;
    std::size_t lo = std::min(p, q), hi = std::max(p, q);
    parent_[hi] = static_cast<std::int32_t>(lo);
    queue_.push_back(hi);
  }

  void coincidence(std::size_t a, std::size_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      std::size_t g = queue_[i];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t d = cell(g, x);
        if (d < 0) continue;
        cell(static_cast<std::size_t>(d), inv(x)) = -1;
        std::size_t mu = rep(g), nu = rep(static_cast<std::size_t>(d));
        if (cell(mu, x) >= 0) {
          merge(nu, static_cast<std::size_t>(cell(mu, x)));
        } else if (cell(nu, inv(x)) >= 0) {
          merge(mu, static_cast<std::size_t>(cell(nu, inv(x))));
        } else {
          cell(mu, x) = static_cast<std::int32_t>(nu);
          cell(nu, inv(x)) = static_cast<std::int32_t>(mu);
        }
      }
    }
  }

  // Returns without defining anything when fill is false.
  void scan(std::size_t a, Cols const& w, bool fill) {
    if (w.empty()) return;
    std::size_t f = a, b = a;
    std::size_t i = 0, j = w.size() - 1;
    while (true) {
      while (i <= j && cell(f, w[i]) >= 0) {
        f = static_cast<std::size_t>(cell(f, w[i]));
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && cell(b, inv(w[j])) >= 0) {
        b = static_cast<std::size_t>(cell(b, inv(w[j])));
        if (j == 0) {
          // the backward scan consumed everything down to position i = 0
          if (f != b) coincidence(f, b);
          return;
        }
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        cell(f, w[i]) = static_cast<std::int32_t>(b);
        cell(b, inv(w[i])) = static_cast<std::int32_t>(f);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(std::size_t a, Cols const& w) { scan(a, w, true); }

  void lookahead() {
    for (std::size_t c = 0; c < table_rows(); ++c) {
      if (!live(c)) continue;
      for (auto const& r : relators_) {
        scan(c, r, false);
        if (!live(c)) break;
      }
    }
  }

  // Removes dead cosets; returns the new index of the live coset a.
  std::size_t compress(std::size_t a) {
    std::vector<std::int32_t> renum(table_rows(), -1);
    std::size_t next = 0;
    for (std::size_t c = 0; c < table_rows(); ++c) {
      if (live(c)) renum[c] = static_cast<std::int32_t>(next++);
    }
    std::vector<std::int32_t> nt(next * cols_, -1);
    for (std::size_t c = 0; c < table_rows(); ++c) {
      if (!live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t d = cell(c, x);
        nt[static_cast<std::size_t>(renum[c]) * cols_ + x] = d < 0 ? -1 : renum[static_cast<std::size_t>(d)];
      }
    }
    std::size_t na = live(a) ? static_cast<std::size_t>(renum[a]) : static_cast<std::size_t>(renum[rep(a)]);
    table_ = std::move(nt);
    parent_.resize(next);
    std::iota(parent_.begin(), parent_.end(), 0);
    return na;
  }

  CosetTable standardize() {
    std::vector<std::int32_t> order(table_rows(), -1);
    std::vector<std::size_t> seq;
    std::vector<Word> reps;
    order[0] = 0;
    seq.push_back(0);
    reps.push_back({});
    for (std::size_t q = 0; q < seq.size(); ++q) {
      std::size_t c = seq[q];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::int32_t d = cell(c, x);
        if (d < 0) throw std::logic_error("incomplete coset table after enumeration");
        if (order[static_cast<std::size_t>(d)] < 0) {
          order[static_cast<std::size_t>(d)] = static_cast<std::int32_t>(seq.size());
          seq.push_back(static_cast<std::size_t>(d));
          Word w = reps[q];
          int g = static_cast<int>(x / 2) + 1;
          w.push_back(x % 2 == 0 ? g : -g);
          reps.push_back(std::move(w));
        }
      }
    }
    CosetTable out;
    out.number_of_generators = ngens_;
    out.representatives = std::move(reps);
    out.table.resize(seq.size(), std::vector<std::int32_t>(cols_));
    for (std::size_t q = 0; q < seq.size(); ++q) {
      for (std::size_t x = 0; x < cols_; ++x) {
        out.table[q][x] = order[static_cast<std::size_t>(cell(seq[q], x))];
      }
    }
    return out;
  }

  std::size_t ngens_;
  std::size_t cols_;
  CosetEnumerationOptions opts_;
  std::vector<Cols> relators_;
  std::vector<Cols> subgroup_;
  std::size_t reserve_ = 0;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::size_t> queue_;
};

}  // namespace detail

// Enumerates the cosets of the subgroup generated by subgroup_words in the
// group given by pres. Throws CosetLimitExceeded if the configured number of
// simultaneously defined cosets is not enough; that says nothing about
// whether the index is finite.
inline CosetTable todd_coxeter(FpPresentation const& pres, std::vector<Word> const& subgroup_words = {},
                               CosetEnumerationOptions opts = {}) {
  return detail::ToddCoxeter(pres.number_of_generators(), pres.relators(), subgroup_words, opts).run();
}

}  // namespace artin

#endif  // ARTIN_COSET_ENUM_HPP_
