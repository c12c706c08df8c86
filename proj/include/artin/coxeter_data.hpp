#ifndef ARTIN_COXETER_DATA_HPP_
#define ARTIN_COXETER_DATA_HPP_

// Catalog of the irreducible spherical Coxeter types: matrices, Artin and
// Coxeter presentations, degrees, the center exponent kappa, diagram
// automorphisms and the table of basic torsion elements of A/Z(A).
//
// Vertex numbering: A, B, H, I2 are paths 1-2-...-n (the special label sits on
// the edge 1-2 for B and H). D_n has s1 and s2 both attached to s3, then the
// path s3-s4-...-sn. E_n has the path s1-s3-s4-...-sn with s2 attached to s4.
// F4 is the path 1-2-3-4 with label 4 on the edge 2-3.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

enum class Family { A, B, D, E, F, H, I2 };

class CoxeterSpec {
 public:
  // Throws std::invalid_argument outside the canonical duplicate-free list.
  CoxeterSpec(Family family, int rank, int m = 0) : family_(family), rank_(rank), m_(m) {
    if (family != Family::I2) m_ = 0;
    validate();
  }

  static CoxeterSpec I2(int m) { return CoxeterSpec(Family::I2, 2, m); }

  // Accepts "A3", "B2", "D4", "E8", "F4", "H3", "I2(5)".
  static CoxeterSpec parse(std::string const& text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  int dihedral_order() const noexcept { return m_; }

  std::string name() const {
    if (family_ == Family::I2) return "I2(" + std::to_string(m_) + ")";
    static char const* letters = "ABDEFH";
    return std::string(1, letters[static_cast<int>(family_)]) + std::to_string(rank_);
  }

  auto operator<=>(CoxeterSpec const&) const = default;

 private:
  void validate() const {
    auto bad = [&](std::string const& why) {
      throw std::invalid_argument("invalid Coxeter type: " + why);
    };
    switch (family_) {
      case Family::A:
        if (rank_ < 1) bad("A_n needs n >= 1");
        break;
      case Family::B:
        if (rank_ < 2) bad("B_n needs n >= 2 (B1 is A1)");
        break;
      case Family::D:
        if (rank_ < 4) bad("D_n needs n >= 4 (D3 is A3)");
        break;
      case Family::E:
        if (rank_ < 6 || rank_ > 8) bad("E_n needs n in {6,7,8}");
        break;
      case Family::F:
        if (rank_ != 4) bad("F_n exists only for n = 4");
        break;
      case Family::H:
        if (rank_ != 3 && rank_ != 4) bad("H_n needs n in {3,4}");
        break;
      case Family::I2:
        if (rank_ != 2) bad("I2(m) has rank 2");
        if (m_ == 3) bad("I2(3) is A2");
        if (m_ == 4) bad("I2(4) is B2");
        if (m_ < 5) bad("I2(m) needs m >= 5");
        break;
    }
  }

  Family family_;
  int rank_;
  int m_;
};

inline CoxeterSpec CoxeterSpec::parse(std::string const& text) {
  if (text.size() < 2) throw std::invalid_argument("invalid Coxeter type '" + text + "'");
  if (text.rfind("I2(", 0) == 0 && text.back() == ')') {
    std::string inner = text.substr(3, text.size() - 4);
    if (inner.empty() || !std::all_of(inner.begin(), inner.end(), ::isdigit)) {
      throw std::invalid_argument("invalid Coxeter type '" + text + "'");
    }
    return I2(std::stoi(inner));
  }
  std::string digits = text.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 4) {
    throw std::invalid_argument("invalid Coxeter type '" + text + "'");
  }
  int n = std::stoi(digits);
  switch (text[0]) {
    case 'A': return {Family::A, n};
    case 'B': return {Family::B, n};
    case 'D': return {Family::D, n};
    case 'E': return {Family::E, n};
    case 'F': return {Family::F, n};
    case 'H': return {Family::H, n};
    default: break;
  }
  throw std::invalid_argument("invalid Coxeter type '" + text + "'");
}

// Symmetric matrix with m_ii = 1 and m_ij >= 2 off the diagonal; 0-based.
class CoxeterMatrix {
 public:
  explicit CoxeterMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n * n), 2) {
    for (int i = 0; i < n; ++i) at(i, i) = 1;
  }

  int size() const noexcept { return n_; }
  int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i * n_ + j)]; }

  void set(int i, int j, int value) {
    at(i, j) = value;
    at(j, i) = value;
  }

  bool operator==(CoxeterMatrix const&) const = default;

 private:
  int& at(int i, int j) { return m_[static_cast<std::size_t>(i * n_ + j)]; }

  int n_;
  std::vector<int> m_;
};

inline CoxeterMatrix coxeter_matrix(CoxeterSpec const& spec) {
  int n = spec.rank();
  CoxeterMatrix m(n);
  auto edge = [&](int a, int b, int label = 3) { m.set(a - 1, b - 1, label); };
  switch (spec.family()) {
    case Family::A:
    case Family::B:
    case Family::H:
      for (int i = 1; i < n; ++i) edge(i, i + 1);
      if (spec.family() == Family::B) edge(1, 2, 4);
      if (spec.family() == Family::H) edge(1, 2, 5);
      break;
    case Family::D:
      edge(1, 3);
      edge(2, 3);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      break;
    case Family::E:
      edge(1, 3);
      edge(2, 4);
      for (int i = 3; i < n; ++i) edge(i, i + 1);
      break;
    case Family::F:
      edge(1, 2);
      edge(2, 3, 4);
      edge(3, 4);
      break;
    case Family::I2:
      edge(1, 2, spec.dihedral_order());
      break;
  }
  return m;
}

// Artin relations s t s ... = t s t ... for s < t, in lexicographic order.
inline FpPresentation artin_presentation(CoxeterSpec const& spec,
                                         std::string const& prefix = "s") {
  auto m = coxeter_matrix(spec);
  std::vector<Relation> rels;
  for (int s = 1; s <= m.size(); ++s) {
    for (int t = s + 1; t <= m.size(); ++t) {
      int len = m(s - 1, t - 1);
      rels.push_back({alternating(s, t, len), alternating(t, s, len)});
    }
  }
  return FpPresentation(numbered_names(static_cast<std::size_t>(m.size()), prefix),
                        std::move(rels));
}

inline FpPresentation coxeter_presentation(CoxeterSpec const& spec,
                                           std::string const& prefix = "s") {
  FpPresentation p = artin_presentation(spec, prefix);
  for (int s = 1; s <= spec.rank(); ++s) p.add_relator({s, s});
  return p;
}

// Exponent kappa with delta = Delta^kappa generating the center of A.
inline int garside_kappa(CoxeterSpec const& spec) {
  switch (spec.family()) {
    case Family::A: return spec.rank() >= 2 ? 2 : 1;
    case Family::D: return spec.rank() % 2 == 1 ? 2 : 1;
    case Family::E: return spec.rank() == 6 ? 2 : 1;
    case Family::I2: return spec.dihedral_order() % 2 == 1 ? 2 : 1;
    default: return 1;
  }
}

inline std::vector<int> degrees(CoxeterSpec const& spec) {
  int n = spec.rank();
  std::vector<int> d;
  switch (spec.family()) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::H:
      d = n == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30};
      break;
    case Family::I2: d = {2, spec.dihedral_order()}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

inline int coxeter_number(CoxeterSpec const& spec) { return degrees(spec).back(); }

inline std::uint64_t coxeter_group_order(CoxeterSpec const& spec) {
  std::uint64_t p = 1;
  for (int d : degrees(spec)) p *= static_cast<std::uint64_t>(d);
  return p;
}

inline int number_of_positive_roots(CoxeterSpec const& spec) {
  return spec.rank() * coxeter_number(spec) / 2;
}

// All label-preserving permutations of the vertices (0-based images), by
// backtracking; the identity comes first.
inline std::vector<std::vector<int>> graph_automorphisms(CoxeterSpec const& spec) {
  auto m = coxeter_matrix(spec);
  int n = m.size();
  std::vector<std::vector<int>> out;
  std::vector<int> img(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      out.push_back(img);
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = m(u, v) == m(img[static_cast<std::size_t>(u)], c);
      }
      if (!ok) continue;
      img[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = true;
      self(self, v + 1);
      used[static_cast<std::size_t>(c)] = false;
    }
    img[static_cast<std::size_t>(v)] = -1;
  };
  rec(rec, 0);
  return out;
}

struct BasicElement {
  int order;
  Word word;
};

// eps_p^a = eps_q^b
struct TorsionRelation {
  int p, a, q, b;
};

struct TorsionTableRow {
  CoxeterSpec spec;
  std::vector<int> orders;  // sorted, each > 1
  std::vector<BasicElement> basic_elements;
  std::vector<TorsionRelation> relations;

  BasicElement const& basic(int p) const {
    for (auto const& e : basic_elements) {
      if (e.order == p) return e;
    }
    throw std::out_of_range("no basic element of order " + std::to_string(p));
  }
};

namespace detail {

inline std::vector<int> divisor_closure(std::vector<int> const& tops) {
  std::set<int> s;
  for (int t : tops) {
    for (int d = 2; d <= t; ++d) {
      if (t % d == 0) s.insert(d);
    }
  }
  return {s.begin(), s.end()};
}

inline Word range_word(int from, int to) {
  Word w;
  if (from <= to) {
    for (int i = from; i <= to; ++i) w.push_back(i);
  } else {
    for (int i = from; i >= to; --i) w.push_back(i);
  }
  return w;
}

}  // namespace detail

// Orders of torsion in A/Z(A) and positive words for the basic elements, in
// the vertex numbering above. A1 has no row.
inline TorsionTableRow torsion_table(CoxeterSpec const& spec) {
  using detail::range_word;
  int n = spec.rank();
  TorsionTableRow row{spec, {}, {}, {}};
  auto& be = row.basic_elements;
  switch (spec.family()) {
    case Family::A:
      if (n == 1) throw std::invalid_argument("A1 has no torsion table row (excluded type)");
      be.push_back({n + 1, range_word(1, n)});
      be.push_back({n, concat({1}, range_word(1, n))});
      break;
    case Family::B:
      be.push_back({n, range_word(1, n)});
      break;
    case Family::D: {
      Word top = range_word(n, 3);
      Word second = concat(concat(concat(top, {2}), top), {1});
      if (n % 2 == 0) {
        be.push_back({n - 1, range_word(n, 1)});
        be.push_back({n / 2, second});
      } else {
        be.push_back({2 * n - 2, range_word(n, 1)});
        be.push_back({n, second});
      }
      break;
    }
    case Family::E:
      if (n == 6) {
        be.push_back({12, {4, 2, 3, 1, 5, 6}});
        be.push_back({9, {4, 2, 5, 4, 3, 1, 6, 5}});
        be.push_back({8, {4, 3, 1, 5, 4, 2, 3, 6, 5}});
        row.relations.push_back({12, 4, 9, 3});
        row.relations.push_back({12, 3, 8, 2});
      } else if (n == 7) {
        be.push_back({9, {4, 2, 3, 1, 5, 6, 7}});
        be.push_back({7, {4, 2, 7, 6, 5, 4, 2, 3, 1}});
      } else {
        be.push_back({15, {4, 2, 3, 1, 8, 7, 6, 5}});
        be.push_back({12, {4, 2, 3, 1, 4, 3, 8, 7, 6, 5}});
        be.push_back({10, {4, 2, 3, 1, 6, 5, 4, 3, 8, 7, 6, 5}});
      }
      break;
    case Family::F:
      be.push_back({6, {1, 2, 3, 4}});
      be.push_back({4, {1, 2, 3, 4, 2, 3}});
      row.relations.push_back({6, 3, 4, 2});
      break;
    case Family::H:
      if (n == 3) {
        be.push_back({5, {1, 2, 3}});
        be.push_back({3, {1, 2, 1, 2, 3}});
      } else {
        be.push_back({15, {1, 2, 3, 4}});
        be.push_back({10, {1, 2, 1, 2, 3, 4}});
        be.push_back({6, {1, 2, 1, 2, 3, 2, 1, 2, 3, 4}});
      }
      break;
    case Family::I2: {
      int m = spec.dihedral_order();
      if (m % 2 == 0) {
        be.push_back({m / 2, {1, 2}});
      } else {
        be.push_back({m, {1, 2}});
        be.push_back({2, concat({1}, power({2, 1}, (m - 1) / 2))});
      }
      break;
    }
  }
  std::vector<int> tops;
  for (auto const& e : be) tops.push_back(e.order);
  row.orders = detail::divisor_closure(tops);
  return row;
}

// The default list of types exercised by the verification pipelines.
inline std::vector<CoxeterSpec> default_torsion_specs() {
  std::vector<CoxeterSpec> out;
  for (int n = 2; n <= 5; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= 5; ++n) out.emplace_back(Family::B, n);
  for (int n = 4; n <= 6; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::H, 3);
  out.emplace_back(Family::H, 4);
  for (int m = 5; m <= 12; ++m) out.push_back(CoxeterSpec::I2(m));
  return out;
}

}  // namespace artin

#endif  // ARTIN_COXETER_DATA_HPP_
