#ifndef ARTIN_TORSION_HPP_
#define ARTIN_TORSION_HPP_

// Checks of the torsion data for A/Z(A): powers of basic elements, their
// primitivity, the relations between them, and the length invariant that
// separates their powers up to conjugacy.

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/coxeter_data.hpp"
#include "artin/deadline.hpp"
#include "artin/garside.hpp"

namespace artin {

struct TorsionCheck {
  std::string id;         // e.g. "F4.eps6.power"
  std::string statement;
  bool passed = false;
  std::string witness;
};

struct TorsionReport {
  CoxeterSpec spec;
  std::vector<TorsionCheck> checks;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.passed; });
  }
};

inline std::string eps_name(int p) { return "eps" + std::to_string(p); }

// Every check from the table row; a failed check is reported, never thrown.
inline TorsionReport verify_torsion_row(TorsionTableRow const& row, Deadline const& deadline = {}) {
  CoxeterSpec const& spec = row.spec;
  TorsionReport rep{spec, {}};
  std::string tag = spec.name() + ".";
  GarsideElement delta = center_generator(spec);
  long ld = ell(delta).value;
  for (auto const& e : row.basic_elements) {
    deadline.check("torsion verification");
    std::string base = tag + eps_name(e.order);
    {
      TorsionCheck c{base + ".positive", eps_name(e.order) + " is a nonempty positive word", false,
                     to_string(e.word)};
      c.passed = !e.word.empty() && is_positive(e.word);
      rep.checks.push_back(c);
    }
    GarsideElement x = normal_form(spec, e.word);
    GarsideElement p = x;
    std::vector<long> central_at;
    for (int k = 1; k < e.order; ++k) {
      if (central_power_of(p)) central_at.push_back(k);
      p = p * x;
    }
    {
      TorsionCheck c{base + ".power", eps_name(e.order) + "^" + std::to_string(e.order) + " = delta", false, ""};
      c.passed = p == delta;
      c.witness = "nf = " + to_string(p);
      rep.checks.push_back(c);
    }
    {
      TorsionCheck c{base + ".primitive",
                     eps_name(e.order) + "^k is not central for 0 < k < " + std::to_string(e.order), false, ""};
      c.passed = central_at.empty();
      c.witness = central_at.empty() ? "none central" : "central at k = " + std::to_string(central_at.front());
      rep.checks.push_back(c);
    }
    {
      // l-bar(eps^s) = s l(eps) mod l(delta); distinct for s mod p
      long le = ell(x).value;
      std::set<long> values;
      for (int s = 0; s < e.order; ++s) values.insert(((s * le) % ld + ld) % ld);
      TorsionCheck c{base + ".lbar",
                     "powers eps^s (s mod " + std::to_string(e.order) + ") have distinct reduced lengths", false,
                     "l(eps) = " + std::to_string(le) + ", l(delta) = " + std::to_string(ld)};
      c.passed = values.size() == static_cast<std::size_t>(e.order);
      rep.checks.push_back(c);
    }
  }
  for (auto const& r : row.relations) {
    deadline.check("torsion verification");
    Word lhs = power(row.basic(r.p).word, r.a), rhs = power(row.basic(r.q).word, r.b);
    std::string name = eps_name(r.p) + "^" + std::to_string(r.a) + " = " + eps_name(r.q) + "^" + std::to_string(r.b);
    TorsionCheck c{tag + "relation." + eps_name(r.p) + "^" + std::to_string(r.a), name, false, ""};
    GarsideElement a = normal_form(spec, lhs), b = normal_form(spec, rhs);
    c.passed = a == b;
    c.witness = "l = " + std::to_string(ell(a).value) + " / " + std::to_string(ell(b).value);
    rep.checks.push_back(c);
  }
  return rep;
}

inline TorsionReport verify_torsion_row(CoxeterSpec const& spec, Deadline const& deadline = {}) {
  return verify_torsion_row(torsion_table(spec), deadline);
}

struct OrderClasses {
  int order = 0;
  int source_p = 0;  // the basic element used
  std::vector<Word> representatives;
  std::vector<long> reduced_lengths;
  bool distinct = false;
};

// phi(d) representatives (eps_p^(p/d))^l, l < d coprime to d, with eps_p the
// first basic element whose order is divisible by d.
inline OrderClasses conjugacy_classes_of_order(TorsionTableRow const& row, int d) {
  if (std::find(row.orders.begin(), row.orders.end(), d) == row.orders.end()) {
    throw std::invalid_argument(std::to_string(d) + " is not a torsion order of " + row.spec.name());
  }
  OrderClasses out;
  out.order = d;
  for (auto const& e : row.basic_elements) {
    if (e.order % d == 0) {
      out.source_p = e.order;
      Word base = power(e.word, e.order / d);
      long ld = ell(center_generator(row.spec)).value;
      for (int l = 1; l < d; ++l) {
        if (std::gcd(l, d) != 1) continue;
        Word w = power(base, l);
        out.representatives.push_back(w);
        out.reduced_lengths.push_back(static_cast<long>(w.size()) % ld);
      }
      break;
    }
  }
  std::set<long> s(out.reduced_lengths.begin(), out.reduced_lengths.end());
  out.distinct = s.size() == out.reduced_lengths.size() && !out.representatives.empty();
  return out;
}

inline OrderClasses conjugacy_classes_of_order(CoxeterSpec const& spec, int d) {
  return conjugacy_classes_of_order(torsion_table(spec), d);
}

}  // namespace artin

#endif  // ARTIN_TORSION_HPP_
