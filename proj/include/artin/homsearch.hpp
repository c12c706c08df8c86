#ifndef ARTIN_HOMSEARCH_HPP_
#define ARTIN_HOMSEARCH_HPP_

// Homomorphisms from a finitely presented group to a FiniteGroup, up to
// conjugation in the target. Backtracking over generator images; the first
// assigned generator only runs over class representatives, and a relator is
// tested as soon as all of its generators have images.

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "artin/deadline.hpp"
#include "artin/finite_group.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

using ImageTuple = std::vector<ElementIndex>;

struct GenHom {
  ImageTuple images;

  // Image of a word under the homomorphism.
  ElementIndex evaluate(FiniteGroup const& g, Word const& w) const {
    ElementIndex r = FiniteGroup::identity();
    for (Letter l : w) {
      ElementIndex x = images[static_cast<std::size_t>(generator_of(l) - 1)];
      r = g.mul(r, is_inverse(l) ? g.inv(x) : x);
    }
    return r;
  }

  bool operator==(GenHom const&) const = default;
  bool operator<(GenHom const& o) const { return images < o.images; }
};

struct HomClassSet {
  FpPresentation source;
  std::shared_ptr<FiniteGroup const> target;
  std::vector<GenHom> classes;

  std::size_t size() const noexcept { return classes.size(); }
};

struct HomSearchOptions {
  std::size_t max_target_order = 10'000;
  unsigned threads = 1;
  Deadline deadline;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_homomorphism(FpPresentation const& src, FiniteGroup const& g, ImageTuple const& t) {
  if (t.size() != src.number_of_generators()) return false;
  GenHom h{t};
  for (auto const& r : src.relators()) {
    if (h.evaluate(g, r) != FiniteGroup::identity()) return false;
  }
  return true;
}

// g t g^-1, coordinate-wise.
inline ImageTuple conjugate_tuple(FiniteGroup const& g, ImageTuple const& t, ElementIndex c) {
  ImageTuple r(t.size());
  ElementIndex ci = g.inv(c);
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = g.mul(g.mul(c, t[i]), ci);
  return r;
}

// Lexicographically least tuple in the conjugacy class of t.
inline ImageTuple least_conjugate(FiniteGroup const& g, ImageTuple const& t) {
  ImageTuple best = t;
  for (ElementIndex c = 0; c < g.size(); ++c) {
    ImageTuple r = conjugate_tuple(g, t, c);
    if (r < best) best = std::move(r);
  }
  return best;
}

namespace detail {

// Greedy assignment order: first the generator occurring in most relators,
// then repeatedly the one closing the most relators.
inline std::vector<std::size_t> assignment_order(FpPresentation const& src) {
  std::size_t n = src.number_of_generators();
  std::vector<std::vector<bool>> uses;
  for (auto const& r : src.relators()) {
    std::vector<bool> u(n, false);
    for (Letter l : r) u[static_cast<std::size_t>(generator_of(l) - 1)] = true;
    uses.push_back(std::move(u));
  }
  std::vector<std::size_t> order;
  std::vector<bool> assigned(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    std::pair<long, long> best_score{-1, -1};
    for (std::size_t g = 0; g < n; ++g) {
      if (assigned[g]) continue;
      long closes = 0, occurs = 0;
      for (auto const& u : uses) {
        if (!u[g]) continue;
        ++occurs;
        bool all = true;
        for (std::size_t h = 0; h < n; ++h) {
          if (u[h] && h != g && !assigned[h]) all = false;
        }
        closes += all;
      }
      std::pair<long, long> score{step == 0 ? occurs : closes, occurs};
      if (score > best_score) {
        best_score = score;
        best = g;
      }
    }
    assigned[best] = true;
    order.push_back(best);
  }
  return order;
}

class HomSearch {
 public:
  HomSearch(FpPresentation const& src, FiniteGroup const& g, Deadline const& deadline)
      : src_(src), g_(g), deadline_(deadline), order_(assignment_order(src)) {
    std::size_t n = src.number_of_generators();
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[order_[k]] = k;
    checks_.resize(n);
    for (auto const& r : src.relators()) {
      if (r.empty()) continue;
      std::size_t last = 0;
      for (Letter l : r) last = std::max(last, pos[static_cast<std::size_t>(generator_of(l) - 1)]);
      checks_[last].push_back(r);
    }
  }

  std::vector<std::size_t> const& order() const noexcept { return order_; }

  // All homomorphisms whose first assigned generator maps to rep, reduced to
  // one canonical tuple per class.
  std::vector<ImageTuple> branch(ElementIndex rep) {
    found_.clear();
    ImageTuple t(src_.number_of_generators(), 0);
    centralizer_ = g_.centralizer(rep);
    t[order_[0]] = rep;
    if (relators_hold(t, 0)) extend(t, 1);
    return {found_.begin(), found_.end()};
  }

 private:
  bool relators_hold(ImageTuple const& t, std::size_t level) const {
    GenHom h{t};
    for (auto const& r : checks_[level]) {
      if (h.evaluate(g_, r) != FiniteGroup::identity()) return false;
    }
    return true;
  }

  void extend(ImageTuple& t, std::size_t level) {
    if (level == order_.size()) {
      record(t);
      return;
    }
    if (++polls_ % 4096 == 0) deadline_.check("homomorphism search");
    std::size_t gen = order_[level];
    for (ElementIndex x = 0; x < g_.size(); ++x) {
      t[gen] = x;
      if (relators_hold(t, level)) extend(t, level + 1);
    }
  }

  // Canonical form: least conjugate under the centralizer of the fixed first
  // image, which is exactly the part of the group preserving that image.
  void record(ImageTuple const& t) {
    ImageTuple best = t;
    for (ElementIndex c : centralizer_) {
      ImageTuple r = conjugate_tuple(g_, t, c);
      if (r < best) best = std::move(r);
    }
    found_.insert(std::move(best));
  }

  FpPresentation const& src_;
  FiniteGroup const& g_;
  Deadline const& deadline_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Word>> checks_;
  std::vector<ElementIndex> centralizer_;
  std::set<ImageTuple> found_;
  std::size_t polls_ = 0;
};

}  // namespace detail

inline HomClassSet enumerate_homs(FpPresentation const& src, std::shared_ptr<FiniteGroup const> target,
                                  HomSearchOptions const& opts = {}) {
  if (target->size() > opts.max_target_order) {
    throw SearchBudgetExceeded("target order " + std::to_string(target->size())
                               + " exceeds the configured maximum "
                               + std::to_string(opts.max_target_order));
  }
  HomClassSet out{src, target, {}};
  if (src.number_of_generators() == 0) {
    out.classes.push_back({});
    return out;
  }
  auto const& reps = target->class_reps();
  std::vector<std::vector<ImageTuple>> per_branch(reps.size());
  unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(reps.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    detail::HomSearch search(src, *target, opts.deadline);
    while (true) {
      std::size_t b = next++;
      if (b >= reps.size()) return;
      try {
        opts.deadline.check("homomorphism search");
        per_branch[b] = search.branch(reps[b]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = reps.size();
        return;
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  // Branches are distinct classes (different first-image classes), and within
  // a branch canonical tuples are distinct classes.
  for (auto& b : per_branch) {
    for (auto& t : b) out.classes.push_back({least_conjugate(*target, t)});
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

inline HomClassSet filter_by_word_order(HomClassSet const& set, Word const& word, std::size_t required_order) {
  HomClassSet out{set.source, set.target, {}};
  for (auto const& h : set.classes) {
    if (set.target->element_order(h.evaluate(*set.target, word)) == required_order) out.classes.push_back(h);
  }
  return out;
}

// Decides whether a word is trivial in the source group; used for relabelled
// relators that are not literally relators.
using RelatorOracle = std::function<bool(Word const&)>;

// Whether the relabelling perm (0-based generator images) sends every
// relator to a relator up to cyclic rotation and inversion, or else to a word
// the oracle certifies as trivial.
inline bool preserves_relators(FpPresentation const& src, std::vector<int> const& perm,
                               RelatorOracle const& oracle = {}) {
  if (perm.size() != src.number_of_generators()) return false;
  std::vector<bool> hit(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= perm.size() || hit[static_cast<std::size_t>(p)]) return false;
    hit[static_cast<std::size_t>(p)] = true;
  }
  auto rels = src.relators();
  for (auto const& r : rels) {
    Word img = relabel(r, perm);
    bool ok = false;
    for (auto const& s : rels) {
      if (same_relator_up_to_rotation(img, s) || same_relator_up_to_rotation(inverse(img), s)) {
        ok = true;
        break;
      }
    }
    if (!ok && oracle) ok = oracle(img);
    if (!ok) return false;
  }
  return true;
}

// Orbits of classes under precomposition with the automorphisms induced by
// the given generator permutations; the representative of an orbit is its
// least member.
inline HomClassSet quotient_by_source_autos(HomClassSet const& set, std::vector<std::vector<int>> const& autos,
                                            RelatorOracle const& oracle = {}) {
  for (auto const& a : autos) {
    if (!preserves_relators(set.source, a, oracle)) {
      throw std::invalid_argument("generator permutation is not an automorphism of the source");
    }
  }
  FiniteGroup const& g = *set.target;
  std::vector<bool> used(set.classes.size(), false);
  HomClassSet out{set.source, set.target, {}};
  for (std::size_t i = 0; i < set.classes.size(); ++i) {
    if (used[i]) continue;
    std::vector<ImageTuple> orbit{set.classes[i].images};
    used[i] = true;
    for (std::size_t q = 0; q < orbit.size(); ++q) {
      for (auto const& a : autos) {
        // (h o a)(s_k) = h(s_{a(k)})
        ImageTuple t(orbit[q].size());
        for (std::size_t k = 0; k < t.size(); ++k) t[k] = orbit[q][static_cast<std::size_t>(a[k])];
        ImageTuple c = least_conjugate(g, t);
        auto it = std::lower_bound(set.classes.begin(), set.classes.end(), GenHom{c});
        if (it == set.classes.end() || it->images != c) {
          throw std::invalid_argument("class set is not closed under the automorphisms");
        }
        auto j = static_cast<std::size_t>(it - set.classes.begin());
        if (!used[j]) {
          used[j] = true;
          orbit.push_back(c);
        }
      }
    }
    out.classes.push_back({*std::min_element(orbit.begin(), orbit.end())});
  }
  return out;
}

// Orbit (as least-conjugate tuples) of a class under the automorphisms.
inline std::vector<ImageTuple> source_auto_orbit(HomClassSet const& set, GenHom const& h,
                                                 std::vector<std::vector<int>> const& autos) {
  std::vector<ImageTuple> orbit{least_conjugate(*set.target, h.images)};
  for (std::size_t q = 0; q < orbit.size(); ++q) {
    for (auto const& a : autos) {
      ImageTuple t(orbit[q].size());
      for (std::size_t k = 0; k < t.size(); ++k) t[k] = orbit[q][static_cast<std::size_t>(a[k])];
      ImageTuple c = least_conjugate(*set.target, t);
      if (std::find(orbit.begin(), orbit.end(), c) == orbit.end()) orbit.push_back(c);
    }
  }
  return orbit;
}

inline std::uint64_t hom_image_order(FiniteGroup const& g, GenHom const& h) {
  return g.subgroup_order(h.images);
}

struct HardCasePartition {
  // Orbit members with psi(s1) = psi(s2) of order at most 2.
  std::vector<GenHom> degenerate;
  std::vector<GenHom> hard;
  // For each hard class: an orbit member and g with g member g^-1 = expected.
  std::vector<std::optional<std::pair<GenHom, ElementIndex>>> certificates;

  bool has_expected_shape(std::size_t degenerate_count, std::size_t hard_count) const {
    if (degenerate.size() != degenerate_count || hard.size() != hard_count) return false;
    for (auto const& c : certificates) {
      if (!c) return false;
    }
    return true;
  }
};

// Splits classes into those where (some orbit member of) the homomorphism
// identifies the first two generators with an element of order <= 2, and the
// rest, which are matched against the expected hard representative.
inline HardCasePartition classify_hard_case(HomClassSet const& set, std::vector<std::vector<int>> const& autos,
                                            ImageTuple const& expected_hard) {
  FiniteGroup const& g = *set.target;
  if (set.source.number_of_generators() < 2) throw std::invalid_argument("need at least two generators");
  HardCasePartition out;
  for (auto const& h : set.classes) {
    auto orbit = source_auto_orbit(set, h, autos);
    std::optional<GenHom> deg;
    for (auto const& t : orbit) {
      if (t[0] == t[1] && g.element_order(t[0]) <= 2) {
        deg = GenHom{t};
        break;
      }
    }
    if (deg) {
      out.degenerate.push_back(*deg);
      continue;
    }
    out.hard.push_back(h);
    std::optional<std::pair<GenHom, ElementIndex>> cert;
    for (auto const& t : orbit) {
      if (auto c = g.tuple_transporter(t, expected_hard)) {
        cert = std::make_pair(GenHom{t}, *c);
        break;
      }
    }
    out.certificates.push_back(cert);
  }
  return out;
}

}  // namespace artin

#endif  // ARTIN_HOMSEARCH_HPP_
