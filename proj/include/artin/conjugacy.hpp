#ifndef ARTIN_CONJUGACY_HPP_
#define ARTIN_CONJUGACY_HPP_

// Conjugacy in A via super summit sets: cycle and decycle both elements
// until their canonical length is minimal, then close the summit set of u
// under conjugation by simples and look for v's summit representative.
// Every search is budgeted; the answer is three-valued.

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "artin/deadline.hpp"
#include "artin/garside.hpp"

namespace artin {

enum class ConjugacyStatus { Conjugate, NotConjugate, BudgetExhausted };

inline char const* to_string(ConjugacyStatus s) {
  switch (s) {
    case ConjugacyStatus::Conjugate: return "conjugate";
    case ConjugacyStatus::NotConjugate: return "not conjugate";
    case ConjugacyStatus::BudgetExhausted: return "budget exhausted";
  }
  return "?";
}

struct ConjugacyResult {
  ConjugacyStatus status = ConjugacyStatus::BudgetExhausted;
  // c with c^-1 u c = v when status is Conjugate.
  std::optional<GarsideElement> conjugator;
  std::string reason;
  std::size_t summit_set_size = 0;
};

struct ConjugacyBudget {
  std::size_t max_summit_set = 100'000;
  // Closing the summit set conjugates by every simple; above this |W| the
  // search is not attempted.
  std::size_t max_simples = 60'000;
  Deadline deadline;
};

namespace detail {

// Brings x into its super summit set; conj accumulates c with c^-1 x0 c = x.
inline void to_super_summit(GarsideElement& x, GarsideElement& conj, Deadline const& deadline) {
  auto sys = x.system_ptr();
  long bound = static_cast<long>(sys->number_of_positive_roots()) + 1;
  auto step = [&](bool cycle) {
    if (x.factors().empty()) return false;
    GarsideElement c(sys);
    if (cycle) {
      // conjugation by Delta^k x1 Delta^-k
      WElement x1 = x.factors().front();
      c.multiply_simple(x.infimum() % 2 == 0 ? x1 : tau(x1));
    } else {
      c.multiply_simple_inverse(x.factors().back());
    }
    x = conjugate(x, c);
    conj = conj * c;
    return true;
  };
  for (bool cycle : {true, false}) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (long i = 0; i < bound; ++i) {
        deadline.check("summit set reduction");
        long inf = x.infimum(), sup = x.supremum();
        if (!step(cycle)) break;
        if ((cycle && x.infimum() > inf) || (!cycle && x.supremum() < sup)) {
          improved = true;
          break;
        }
      }
    }
  }
}

inline std::vector<WElement> all_simples(RootSystem const& sys, std::size_t limit) {
  std::vector<WElement> out{sys.identity()};
  std::unordered_map<WElement, std::size_t, WElementHash> seen{{sys.identity(), 0}};
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (int i = 0; i < sys.rank(); ++i) {
      WElement y = out[q] * sys.generator(i);
      if (seen.emplace(y, out.size()).second) {
        out.push_back(y);
        if (out.size() > limit) return {};
      }
    }
  }
  return out;
}

}  // namespace detail

inline ConjugacyResult conjugacy_search(CoxeterSpec const& spec, Word const& u_word, Word const& v_word,
                                        ConjugacyBudget const& budget = {}) {
  ConjugacyResult res;
  GarsideElement u = normal_form(spec, u_word), v = normal_form(spec, v_word);
  if (ell(u).value != ell(v).value) {
    res.status = ConjugacyStatus::NotConjugate;
    res.reason = "lengths differ: " + std::to_string(ell(u).value) + " vs " + std::to_string(ell(v).value);
    return res;
  }
  if (u == v) {
    res.status = ConjugacyStatus::Conjugate;
    res.conjugator = GarsideElement::identity(spec);
    res.reason = "equal elements";
    return res;
  }
  try {
    GarsideElement cu = GarsideElement::identity(spec), cv = GarsideElement::identity(spec);
    GarsideElement us = u, vs = v;
    detail::to_super_summit(us, cu, budget.deadline);
    detail::to_super_summit(vs, cv, budget.deadline);
    if (us.infimum() != vs.infimum() || us.supremum() != vs.supremum()) {
      res.status = ConjugacyStatus::NotConjugate;
      res.reason = "summit infimum/supremum differ";
      return res;
    }
    auto const& sys = us.system();
    auto simples = detail::all_simples(sys, budget.max_simples);
    if (simples.empty()) {
      res.reason = "too many simple elements to close the summit set";
      return res;
    }
    // element -> conjugator from us
    std::unordered_map<GarsideElement, GarsideElement, GarsideElementHash> found;
    std::deque<GarsideElement> queue{us};
    found.emplace(us, GarsideElement::identity(spec));
    auto finish = [&](GarsideElement const& g) {
      // us = cu^-1 u cu, vs = g^-1 us g, vs = cv^-1 v cv
      res.status = ConjugacyStatus::Conjugate;
      res.conjugator = cu * g * inverse(cv);
      res.summit_set_size = found.size();
    };
    if (us == vs) {
      finish(found.at(us));
      return res;
    }
    while (!queue.empty()) {
      GarsideElement x = queue.front();
      queue.pop_front();
      GarsideElement cx = found.at(x);
      for (auto const& s : simples) {
        budget.deadline.check("summit set closure");
        GarsideElement g(x.system_ptr());
        g.multiply_simple(s);
        GarsideElement y = conjugate(x, g);
        if (y.infimum() != x.infimum() || y.supremum() != x.supremum()) continue;
        if (found.count(y)) continue;
        found.emplace(y, cx * g);
        if (y == vs) {
          finish(found.at(y));
          return res;
        }
        if (found.size() > budget.max_summit_set) {
          res.reason = "summit set larger than " + std::to_string(budget.max_summit_set);
          res.summit_set_size = found.size();
          return res;
        }
        queue.push_back(y);
      }
    }
    res.status = ConjugacyStatus::NotConjugate;
    res.reason = "complete summit set of size " + std::to_string(found.size()) + " does not contain v";
    res.summit_set_size = found.size();
  } catch (BudgetExhausted const& e) {
    res.status = ConjugacyStatus::BudgetExhausted;
    res.reason = e.what();
  }
  return res;
}

}  // namespace artin

#endif  // ARTIN_CONJUGACY_HPP_
