#ifndef ARTIN_EXTENDED_HPP_
#define ARTIN_EXTENDED_HPP_

// A[D4] x| S3, with S3 acting by the diagram automorphisms fixing a3.
// Elements are pairs (b, p), multiplied by (b1,p1)(b2,p2) = (b1 p1(b2), p1 p2).

#include <stdexcept>
#include <string>

#include "artin/garside.hpp"
#include "artin/target.hpp"
#include "artin/word.hpp"

namespace artin {

struct ExtendedElement {
  GarsideElement braid;
  D4Symmetry perm = d4_identity;

  static ExtendedElement identity() { return {GarsideElement::identity(CoxeterSpec(Family::D, 4)), d4_identity}; }

  bool operator==(ExtendedElement const& o) const { return braid == o.braid && perm == o.perm; }
};

inline ExtendedElement extended_multiply(ExtendedElement const& x, ExtendedElement const& y) {
  return {x.braid * apply_generator_permutation(y.braid, to_vector(x.perm)), compose(x.perm, y.perm)};
}

inline ExtendedElement operator*(ExtendedElement const& x, ExtendedElement const& y) {
  return extended_multiply(x, y);
}

inline bool extended_equal(ExtendedElement const& x, ExtendedElement const& y) { return x == y; }

inline D4Symmetry invert(D4Symmetry const& p) {
  D4Symmetry r{};
  for (std::size_t i = 0; i < 4; ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

// (b, p)^-1 = (p^-1(b^-1), p^-1)
inline ExtendedElement inverse(ExtendedElement const& x) {
  D4Symmetry pi = invert(x.perm);
  return {apply_generator_permutation(inverse(x.braid), to_vector(pi)), pi};
}

inline ExtendedElement extended_power(ExtendedElement const& x, long k) {
  ExtendedElement base = k < 0 ? inverse(x) : x;
  ExtendedElement r = ExtendedElement::identity();
  for (long i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

inline ExtendedElement extended_generator(Letter l) {
  CoxeterSpec d4(Family::D, 4);
  int g = generator_of(l);
  if (g >= 1 && g <= 4) return {normal_form(d4, {l}), d4_identity};
  // sigma1 and sigma2 are involutions, so the sign is irrelevant
  if (g == target_gens::sigma1) return {GarsideElement::identity(d4), d4_sigma1};
  if (g == target_gens::sigma2) return {GarsideElement::identity(d4), d4_sigma2};
  throw std::invalid_argument("letter " + std::to_string(l) + " is not a generator of A[D4] x| S3");
}

// Word over a1..a4 (letters 1..4) and sigma1, sigma2 (letters 5, 6).
inline ExtendedElement extended_from_word(Word const& w) {
  ExtendedElement r = ExtendedElement::identity();
  for (Letter l : w) r = r * extended_generator(l);
  return r;
}

inline std::string to_string(ExtendedElement const& x) {
  std::string p = "(";
  for (std::size_t i = 0; i < 4; ++i) p += std::to_string(x.perm[i] + 1);
  return "[" + to_string(x.braid) + " ; " + p + ")]";
}

}  // namespace artin

#endif  // ARTIN_EXTENDED_HPP_
