#ifndef ARTIN_RING_HPP_
#define ARTIN_RING_HPP_

// Exact arithmetic in Z[c] = Z[x]/(p(x)) for a monic integer polynomial p.
// Three instances are used: Z itself (p = x), Z[phi] with phi^2 = phi + 1,
// and Z[2cos(pi/m)] for the dihedral types.

#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

enum class RingKind { Integer, GoldenRatio, DihedralCosine };

using IntPoly = std::vector<std::int64_t>;  // coefficients, lowest degree first

class ScalarRing {
 public:
  ScalarRing(RingKind kind, IntPoly minpoly, int m)
      : kind_(kind), minpoly_(std::move(minpoly)), m_(m) {
    if (minpoly_.empty() || minpoly_.back() != 1) {
      throw std::invalid_argument("ring modulus must be monic");
    }
  }

  RingKind kind() const noexcept { return kind_; }
  // Number of integer coordinates of an element.
  std::size_t degree() const noexcept { return minpoly_.size() - 1; }
  IntPoly const& modulus() const noexcept { return minpoly_; }
  int dihedral_order() const noexcept { return m_; }

  // Reduces an arbitrary polynomial modulo the minimal polynomial.
  IntPoly reduce(IntPoly p) const {
    std::size_t d = degree();
    for (std::size_t k = p.size(); k-- > d;) {
      std::int64_t c = p[k];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= d; ++j) p[k - d + j] -= c * minpoly_[j];
    }
    p.resize(d, 0);
    return p;
  }

 private:
  RingKind kind_;
  IntPoly minpoly_;
  int m_;
};

namespace detail {

inline IntPoly poly_mul(IntPoly const& a, IntPoly const& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Remainder of a by a monic polynomial b.
inline IntPoly poly_rem(IntPoly a, IntPoly const& b) {
  std::size_t d = b.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    std::int64_t c = a[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) a[k - d + j] -= c * b[j];
  }
  a.resize(std::min(a.size(), d));
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Minimal polynomial of 2cos(pi/m): prod (x - 2cos(k pi/m)) over 0 < k < m
// with gcd(k, 2m) = 1. Coefficients are obtained by rounding and then
// certified exactly: the result must divide D_m(x) + 2, where D_m is the
// Dickson polynomial with D_m(2cos t) = 2cos(m t).
inline IntPoly cosine_minimal_polynomial(int m) {
  std::vector<double> poly{1.0};
  for (int k = 1; k < m; ++k) {
    if (std::gcd(k, 2 * m) != 1) continue;
    double root = 2.0 * std::cos(k * M_PI / m);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= root * poly[i];
    }
    poly = next;
  }
  IntPoly p;
  for (double c : poly) p.push_back(static_cast<std::int64_t>(std::llround(c)));
  IntPoly d0{2}, d1{0, 1};
  for (int k = 1; k < m; ++k) {
    IntPoly next = poly_mul(IntPoly{0, 1}, d1);
    next.resize(std::max(next.size(), d0.size()), 0);
    for (std::size_t i = 0; i < d0.size(); ++i) next[i] -= d0[i];
    d0 = d1;
    d1 = next;
  }
  d1[0] += 2;
  if (!poly_rem(d1, p).empty()) {
    throw std::logic_error("minimal polynomial of 2cos(pi/" + std::to_string(m)
                           + ") failed certification");
  }
  return p;
}

}  // namespace detail

inline std::shared_ptr<ScalarRing const> integer_ring() {
  static auto r = std::make_shared<ScalarRing const>(RingKind::Integer, IntPoly{0, 1}, 0);
  return r;
}

inline std::shared_ptr<ScalarRing const> golden_ring() {
  static auto r =
      std::make_shared<ScalarRing const>(RingKind::GoldenRatio, IntPoly{-1, -1, 1}, 5);
  return r;
}

inline std::shared_ptr<ScalarRing const> dihedral_ring(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<ScalarRing const>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[m];
  if (!slot) {
    slot = std::make_shared<ScalarRing const>(RingKind::DihedralCosine,
                                              detail::cosine_minimal_polynomial(m), m);
  }
  return slot;
}

// An element a_0 + a_1 c + ... + a_{d-1} c^{d-1} of a ScalarRing.
class Scalar {
 public:
  Scalar() = default;
  Scalar(ScalarRing const* ring, std::int64_t value) : ring_(ring), c_(ring->degree(), 0) {
    c_[0] = value;
  }
  Scalar(ScalarRing const* ring, IntPoly coeffs) : ring_(ring), c_(ring->reduce(std::move(coeffs))) {}

  // The generator c of the ring (phi, 2cos(pi/m), or 0 for Z).
  static Scalar generator(ScalarRing const* ring) { return Scalar(ring, IntPoly{0, 1}); }

  ScalarRing const* ring() const noexcept { return ring_; }
  IntPoly const& coefficients() const noexcept { return c_; }

  bool is_zero() const {
    for (auto v : c_) {
      if (v != 0) return false;
    }
    return true;
  }

  Scalar operator+(Scalar const& o) const {
    check(o);
    Scalar r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }

  Scalar operator-(Scalar const& o) const {
    check(o);
    Scalar r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Scalar operator*(Scalar const& o) const {
    check(o);
    return Scalar(ring_, detail::poly_mul(c_, o.c_));
  }

  Scalar& operator+=(Scalar const& o) { return *this = *this + o; }
  Scalar& operator-=(Scalar const& o) { return *this = *this - o; }

  bool operator==(Scalar const& o) const { return ring_ == o.ring_ && c_ == o.c_; }
  // Lexicographic on coefficient vectors; a total order, not the real order.
  bool operator<(Scalar const& o) const { return c_ < o.c_; }

  // Sign of the real number this represents (exact for Z; evaluated in double
  // otherwise, which is adequate for the small coefficients occurring here).
  double approx() const {
    double x = 0.0;
    switch (ring_->kind()) {
      case RingKind::Integer: return static_cast<double>(c_[0]);
      case RingKind::GoldenRatio: x = (1.0 + std::sqrt(5.0)) / 2.0; break;
      case RingKind::DihedralCosine: x = 2.0 * std::cos(M_PI / ring_->dihedral_order()); break;
    }
    double r = 0.0, p = 1.0;
    for (auto v : c_) {
      r += static_cast<double>(v) * p;
      p *= x;
    }
    return r;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0 && !(i == 0 && c_.size() == 1)) continue;
      if (!s.empty()) s += "+";
      s += std::to_string(c_[i]);
      if (i == 1) s += "c";
      if (i > 1) s += "c^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(Scalar const& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("scalar ring mismatch");
  }

  ScalarRing const* ring_ = nullptr;
  IntPoly c_;
};

}  // namespace artin

#endif  // ARTIN_RING_HPP_
