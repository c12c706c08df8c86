#ifndef ARTIN_TARGET_HPP_
#define ARTIN_TARGET_HPP_

// The finite group (W-bar[D4] x| S3) x Z2 on generators a1..a4, sigma1,
// sigma2, iota, where W-bar[D4] is W[D4] modulo its center, S3 permutes
// a1, a2, a4 and iota inverts every a_k. Also the infinite group
// A-bar[D4] x| S3 as a presentation, for coset enumeration.

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/coxeter_data.hpp"
#include "artin/fp_group.hpp"
#include "artin/presentation.hpp"
#include "artin/word.hpp"

namespace artin {

namespace target_gens {
inline constexpr Letter a1 = 1, a2 = 2, a3 = 3, a4 = 4, sigma1 = 5, sigma2 = 6, iota = 7;
}

// Diagram automorphisms of D4 as 0-based images of the generators.
using D4Symmetry = std::array<int, 4>;

inline constexpr D4Symmetry d4_identity{0, 1, 2, 3};
inline constexpr D4Symmetry d4_sigma1{1, 0, 2, 3};
inline constexpr D4Symmetry d4_sigma2{3, 1, 2, 0};

// (p q)[i] = p[q[i]]
inline D4Symmetry compose(D4Symmetry const& p, D4Symmetry const& q) {
  D4Symmetry r{};
  for (std::size_t i = 0; i < 4; ++i) r[i] = p[static_cast<std::size_t>(q[i])];
  return r;
}

inline std::vector<int> to_vector(D4Symmetry const& p) { return {p.begin(), p.end()}; }

// (a1 a2 a3 a4)^3
inline Word d4_center_word() { return power(Word{1, 2, 3, 4}, 3); }

// Delta of the A3 parabolic on generators (x, y, z) with y in the middle:
// x y z x y x.
inline Word parabolic_delta(Letter x, Letter y, Letter z) { return {x, y, z, x, y, x}; }

namespace detail {

inline void add_d4_artin_relations(FpPresentation& p) {
  FpPresentation d4 = artin_presentation(CoxeterSpec(Family::D, 4));
  for (auto const& r : d4.relations()) p.add_relation(r);
  p.add_relator(d4_center_word());
}

inline void add_s3_relations(FpPresentation& p) {
  using namespace target_gens;
  p.add_relator({sigma1, sigma1});
  p.add_relator({sigma2, sigma2});
  p.add_relation({{sigma1, sigma2, sigma1}, {sigma2, sigma1, sigma2}});
  // a_k^sigma = sigma^-1 a_k sigma
  for (Letter s : {sigma1, sigma2}) {
    D4Symmetry const& act = s == sigma1 ? d4_sigma1 : d4_sigma2;
    for (int k = 0; k < 4; ++k) {
      p.add_relation({{-s, k + 1, s}, {act[static_cast<std::size_t>(k)] + 1}});
    }
  }
}

}  // namespace detail

// A-bar[D4] x| S3, generators a1..a4 sigma1 sigma2.
inline FpPresentation abar_d4_semidirect_presentation() {
  FpPresentation p({"a1", "a2", "a3", "a4", "sigma1", "sigma2"}, {});
  detail::add_d4_artin_relations(p);
  detail::add_s3_relations(p);
  return p;
}

// (W-bar[D4] x| S3) x Z2 as a presentation.
inline FpPresentation target_presentation() {
  using namespace target_gens;
  FpPresentation p({"a1", "a2", "a3", "a4", "sigma1", "sigma2", "iota"}, {});
  detail::add_d4_artin_relations(p);
  for (Letter k = 1; k <= 4; ++k) p.add_relator({k, k});
  detail::add_s3_relations(p);
  p.add_relator({iota, iota});
  p.add_relation({{-iota, sigma1, iota}, {sigma1}});
  p.add_relation({{-iota, sigma2, iota}, {sigma2}});
  for (Letter k = 1; k <= 4; ++k) p.add_relation({{-iota, k, iota}, {-k}});
  return p;
}

// Image of an element in S3 x Z2.
struct OuterPart {
  D4Symmetry symmetry = d4_identity;
  bool iota = false;

  bool is_identity() const { return symmetry == d4_identity && !iota; }
  bool operator==(OuterPart const&) const = default;

  std::size_t order() const {
    std::size_t n = 1;
    D4Symmetry p = symmetry;
    while (p != d4_identity) {
      p = compose(p, symmetry);
      ++n;
    }
    if (iota && n % 2 == 1) n *= 2;
    return n;
  }
};

class Target {
 public:
  Target() {
    CoxeterSpec d4(Family::D, 4);
    w_d4_ = enumerate_group(coxeter_presentation(d4, "a"));
    wbar_ = quotient_by_central_word(w_d4_, d4_center_word());
    check_action();
    full_ = enumerate_group(target_presentation());
    if (wbar_.order() != 96) throw std::logic_error("W-bar[D4] does not have order 96");
    std::vector<Perm> six;
    for (std::size_t k = 0; k < 6; ++k) six.push_back(full_.group->element(full_.group->generator(k)));
    semidirect_ = std::make_shared<FiniteGroup const>(
        six, std::vector<std::string>{"a1", "a2", "a3", "a4", "sigma1", "sigma2"});
    std::vector<Perm> four(six.begin(), six.begin() + 4);
    std::uint64_t normal_order = PermGroup(four.front().degree(), four).order();
    if (normal_order != wbar_.order() || semidirect_->size() != 6 * normal_order
        || full_.order() != 2 * semidirect_->size()) {
      throw std::logic_error("semidirect product structure of the target is inconsistent");
    }
  }

  FpGroup const& coxeter_d4() const noexcept { return w_d4_; }
  FpGroup const& wbar_d4() const noexcept { return wbar_; }
  // Order 1152; generators a1..a4 sigma1 sigma2 iota.
  FiniteGroup const& full() const noexcept { return *full_.group; }
  // The index-2 subgroup W-bar[D4] x| S3, generators a1..a4 sigma1 sigma2.
  FiniteGroup const& semidirect() const noexcept { return *semidirect_; }
  std::shared_ptr<FiniteGroup const> semidirect_ptr() const noexcept { return semidirect_; }

  ElementIndex iota() const { return full().generator(6); }

  OuterPart project(Perm const& p) const {
    OuterPart out;
    for (Letter l : full().word(full().index_of(p))) {
      if (l == target_gens::sigma1) out.symmetry = compose(out.symmetry, d4_sigma1);
      if (l == target_gens::sigma2) out.symmetry = compose(out.symmetry, d4_sigma2);
      if (l == target_gens::iota) out.iota = !out.iota;
    }
    return out;
  }

  bool in_wbar(Perm const& p) const { return project(p).is_identity(); }

  // The element of the 1152 group equal to a semidirect-part element.
  ElementIndex lift(ElementIndex semidirect_element) const {
    return full().index_of(semidirect().element(semidirect_element));
  }

 private:
  // Each sigma permutes the generators of W-bar[D4] by a map that must send
  // every relator to the identity.
  void check_action() const {
    for (D4Symmetry const& act : {d4_sigma1, d4_sigma2}) {
      for (Word const& r : wbar_.presentation.relators()) {
        Word img;
        for (Letter l : r) {
          Letter g = act[static_cast<std::size_t>(generator_of(l) - 1)] + 1;
          img.push_back(is_inverse(l) ? -g : g);
        }
        if (wbar_.group->evaluate(img) != FiniteGroup::identity()) {
          throw std::logic_error("sigma action is not an automorphism of W-bar[D4]");
        }
      }
    }
  }

  FpGroup w_d4_;
  FpGroup wbar_;
  FpGroup full_;
  std::shared_ptr<FiniteGroup const> semidirect_;
};

inline std::shared_ptr<Target const> build_target() {
  static std::shared_ptr<Target const> t = std::make_shared<Target const>();
  return t;
}

}  // namespace artin

#endif  // ARTIN_TARGET_HPP_
