#ifndef ARTIN_GARSIDE_HPP_
#define ARTIN_GARSIDE_HPP_

// Classical Garside structure on a spherical Artin group A: the simple
// elements are the lifts of the elements of W, Delta is the lift of w0, and
// every element has a unique left-weighted normal form Delta^k x1 ... xr.

#include <bit>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/coxeter_data.hpp"
#include "artin/root_system.hpp"
#include "artin/word.hpp"

namespace artin {

class GarsideElement {
 public:
  GarsideElement() = default;
  explicit GarsideElement(std::shared_ptr<RootSystem const> sys) : sys_(std::move(sys)) {}
  GarsideElement(std::shared_ptr<RootSystem const> sys, long infimum, std::vector<WElement> factors)
      : sys_(std::move(sys)), inf_(infimum), factors_(std::move(factors)) {}

  static GarsideElement identity(CoxeterSpec const& spec) {
    return GarsideElement(root_system(spec));
  }

  RootSystem const& system() const { return *sys_; }
  std::shared_ptr<RootSystem const> const& system_ptr() const { return sys_; }
  CoxeterSpec const& spec() const { return sys_->spec(); }

  long infimum() const noexcept { return inf_; }
  long supremum() const noexcept { return inf_ + static_cast<long>(factors_.size()); }
  long canonical_length() const noexcept { return static_cast<long>(factors_.size()); }
  std::vector<WElement> const& factors() const noexcept { return factors_; }

  bool is_identity() const noexcept { return inf_ == 0 && factors_.empty(); }

  bool operator==(GarsideElement const& o) const {
    return sys_ == o.sys_ && inf_ == o.inf_ && factors_ == o.factors_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<long>()(inf_);
    for (auto const& f : factors_) h = h * 1000003u ^ f.hash();
    return h;
  }

  // Right multiplication by the simple element a.
  void multiply_simple(WElement const& a);
  // Right multiplication by Delta^m.
  void multiply_delta_power(long m);
  // Right multiplication by the inverse of the simple element a.
  void multiply_simple_inverse(WElement const& a);
  void multiply_letter(Letter l);

  // Apply the inner automorphism y -> Delta^-m y Delta^m.
  void apply_tau(long m);

 private:
  void normalize_tail();

  std::shared_ptr<RootSystem const> sys_;
  long inf_ = 0;
  std::vector<WElement> factors_;
};

struct GarsideElementHash {
  std::size_t operator()(GarsideElement const& g) const { return g.hash(); }
};

// Conjugation of a simple element by Delta (the -w0 diagram automorphism).
inline WElement tau(WElement const& w) {
  WElement const& w0 = w.system().longest_element();
  return w0 * w * w0;
}

// Makes the pair (x, y) of simples left-weighted: afterwards no generator in
// the left descent set of y extends x.
inline void left_weight(WElement& x, WElement& y) {
  RootSystem const& sys = x.system();
  while (true) {
    GeneratorSet move = y.left_descents() & ~x.right_descents();
    if (move == 0) return;
    WElement const& s = sys.generator(std::countr_zero(move));
    x = x * s;
    y = s * y;
  }
}

inline bool is_left_weighted(WElement const& x, WElement const& y) {
  return (y.left_descents() & ~x.right_descents()) == 0;
}

inline void GarsideElement::apply_tau(long m) {
  if (m % 2 == 0) return;
  for (auto& f : factors_) f = tau(f);
}

inline void GarsideElement::multiply_delta_power(long m) {
  apply_tau(m);
  inf_ += m;
}

inline void GarsideElement::multiply_simple(WElement const& a) {
  if (a.is_identity()) return;
  std::vector<WElement> tail;
  WElement t = a;
  long j = static_cast<long>(factors_.size()) - 1;
  for (; j >= 0; --j) {
    WElement x = factors_[static_cast<std::size_t>(j)];
    WElement y = t;
    left_weight(x, y);
    tail.push_back(std::move(y));
    bool unchanged = x == factors_[static_cast<std::size_t>(j)];
    t = std::move(x);
    if (unchanged) {
      --j;
      break;
    }
  }
  factors_.resize(static_cast<std::size_t>(j + 1));
  factors_.push_back(std::move(t));
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) factors_.push_back(std::move(*it));
  normalize_tail();
}

inline void GarsideElement::normalize_tail() {
  WElement const& w0 = sys_->longest_element();
  std::vector<WElement> kept;
  kept.reserve(factors_.size());
  long deltas = 0;
  for (auto& f : factors_) {
    if (f.is_identity()) continue;
    if (kept.empty() && f == w0) {
      ++deltas;
      continue;
    }
    kept.push_back(std::move(f));
  }
  factors_ = std::move(kept);
  // Leading Delta factors pass through Delta^inf unchanged.
  inf_ += deltas;
}

inline void GarsideElement::multiply_simple_inverse(WElement const& a) {
  // a^-1 = Delta^-1 * lift(w0 a^-1), and x Delta^-1 = Delta^-1 tau(x).
  WElement const& w0 = sys_->longest_element();
  multiply_delta_power(-1);
  multiply_simple(w0 * invert(a));
}

inline void GarsideElement::multiply_letter(Letter l) {
  int g = generator_of(l);
  if (g < 1 || g > sys_->rank()) throw std::invalid_argument("generator index out of range");
  WElement const& s = sys_->generator(g - 1);
  if (is_inverse(l)) {
    multiply_simple_inverse(s);
  } else {
    multiply_simple(s);
  }
}

inline GarsideElement normal_form(CoxeterSpec const& spec, Word const& word) {
  GarsideElement x = GarsideElement::identity(spec);
  for (Letter l : word) x.multiply_letter(l);
  return x;
}

inline GarsideElement operator*(GarsideElement x, GarsideElement const& y) {
  if (&x.system() != &y.system()) throw std::invalid_argument("Garside elements of different types");
  x.multiply_delta_power(y.infimum());
  for (auto const& f : y.factors()) x.multiply_simple(f);
  return x;
}

inline GarsideElement inverse(GarsideElement const& x) {
  GarsideElement r(x.system_ptr());
  for (auto it = x.factors().rbegin(); it != x.factors().rend(); ++it) {
    r.multiply_simple_inverse(*it);
  }
  r.multiply_delta_power(-x.infimum());
  return r;
}

inline GarsideElement power(GarsideElement const& x, long k) {
  GarsideElement base = k < 0 ? inverse(x) : x;
  GarsideElement r(x.system_ptr());
  for (long i = 0; i < std::abs(k); ++i) r = r * base;
  return r;
}

// g^-1 x g
inline GarsideElement conjugate(GarsideElement const& x, GarsideElement const& g) {
  return inverse(g) * x * g;
}

inline bool equal_words(CoxeterSpec const& spec, Word const& a, Word const& b) {
  return normal_form(spec, a) == normal_form(spec, b);
}

inline GarsideElement delta_power(CoxeterSpec const& spec, long k) {
  return GarsideElement(root_system(spec), k, {});
}

inline GarsideElement delta_element(CoxeterSpec const& spec) { return delta_power(spec, 1); }

inline GarsideElement center_generator(CoxeterSpec const& spec) {
  return delta_power(spec, garside_kappa(spec));
}

// Positive word of Delta: the least reduced word of w0.
inline Word delta_word(CoxeterSpec const& spec) {
  auto sys = root_system(spec);
  return sys->reduced_word(sys->longest_element());
}

inline Word center_word(CoxeterSpec const& spec) {
  return power(delta_word(spec), garside_kappa(spec));
}

// A word representing x: Delta^k followed by the reduced words of the factors.
inline Word to_word(GarsideElement const& x) {
  Word w = power(delta_word(x.spec()), x.infimum());
  for (auto const& f : x.factors()) {
    Word fw = x.system().reduced_word(f);
    w.insert(w.end(), fw.begin(), fw.end());
  }
  return w;
}

// Factor-wise application of a diagram automorphism (0-based generator
// images); Delta is fixed by every diagram automorphism.
inline GarsideElement apply_generator_permutation(GarsideElement const& x,
                                                  std::vector<int> const& perm) {
  std::vector<WElement> fs;
  fs.reserve(x.factors().size());
  for (auto const& f : x.factors()) fs.push_back(x.system().apply_generator_permutation(f, perm));
  return GarsideElement(x.system_ptr(), x.infimum(), std::move(fs));
}

// The length homomorphism (every generator maps to 1) together with the
// modulus l(delta) used for the reduction l-bar.
struct LengthValue {
  long value;
  long modulus;

  long reduced() const { return ((value % modulus) + modulus) % modulus; }
  bool operator==(LengthValue const&) const = default;
};

inline long delta_length(CoxeterSpec const& spec) {
  return static_cast<long>(root_system(spec)->number_of_positive_roots());
}

inline LengthValue ell(GarsideElement const& x) {
  long v = x.infimum() * delta_length(x.spec());
  for (auto const& f : x.factors()) v += f.length();
  return {v, garside_kappa(x.spec()) * delta_length(x.spec())};
}

// m with x = delta^m, or nothing if x is not central. The length must be a
// multiple of l(delta) before the normal forms are compared.
inline std::optional<long> central_power_of(GarsideElement const& x) {
  LengthValue l = ell(x);
  if (l.value % l.modulus != 0) return std::nullopt;
  long m = l.value / l.modulus;
  if (x == power(center_generator(x.spec()), m)) return m;
  return std::nullopt;
}

inline std::optional<long> central_power_of(CoxeterSpec const& spec, Word const& word) {
  return central_power_of(normal_form(spec, word));
}

// Least d <= bound with word^d central, i.e. the order of the image of word
// in A/Z(A) when it is at most bound.
inline std::optional<int> order_in_central_quotient(CoxeterSpec const& spec, Word const& word,
                                                    int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  GarsideElement x = normal_form(spec, word);
  GarsideElement p = x;
  for (int d = 1; d <= bound; ++d) {
    if (central_power_of(p)) return d;
    p = p * x;
  }
  return std::nullopt;
}

// "D^k | s1 s2 | s3": Delta power followed by the least reduced word of
// each factor.
inline std::string to_string(GarsideElement const& x) {
  std::string out = "D^" + std::to_string(x.infimum());
  for (auto const& f : x.factors()) {
    out += " | ";
    out += to_string(x.system().reduced_word(f));
  }
  return out;
}

inline GarsideElement parse_garside(CoxeterSpec const& spec, std::string const& text) {
  auto sys = root_system(spec);
  std::stringstream ss(text);
  std::string head;
  ss >> head;
  if (head.rfind("D^", 0) != 0) throw std::invalid_argument("expected D^k");
  long k = std::stol(head.substr(2));
  std::vector<WElement> factors;
  std::string tok;
  Word current;
  bool open = false;
  auto flush = [&] {
    if (!open) return;
    if (current.empty()) throw std::invalid_argument("empty factor");
    WElement w = sys->from_word(current);
    if (w.length() != static_cast<int>(current.size())) {
      throw std::invalid_argument("factor word is not reduced");
    }
    factors.push_back(w);
    current.clear();
  };
  while (ss >> tok) {
    if (tok == "|") {
      flush();
      open = true;
      continue;
    }
    if (!open || tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad factor token");
    current.push_back(std::stoi(tok.substr(1)));
  }
  flush();
  GarsideElement x(sys, k, {});
  for (auto const& f : factors) x.multiply_simple(f);
  return x;
}

}  // namespace artin

#endif  // ARTIN_GARSIDE_HPP_
