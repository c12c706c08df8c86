#include <catch_amalgamated.hpp>

#include <set>

#include "artin/garside.hpp"
#include "artin/homsearch.hpp"
#include "artin/target.hpp"
#include "test_util.hpp"

using namespace artin;

namespace {

struct NamedGroup {
  std::string name;
  std::shared_ptr<FiniteGroup const> group;
};

std::shared_ptr<FiniteGroup const> make(std::vector<Perm> gens) {
  return std::make_shared<FiniteGroup const>(std::move(gens));
}

// Small targets, all of order at most 48.
std::vector<NamedGroup> small_targets() {
  std::vector<NamedGroup> out;
  out.push_back({"Z2", make({Perm({1, 0})})});
  out.push_back({"Z6", make({Perm({1, 2, 0, 3, 4}), Perm({0, 1, 2, 4, 3})})});
  out.push_back({"S3", make({Perm({1, 0, 2}), Perm({1, 2, 0})})});
  out.push_back({"D4", make({Perm({1, 2, 3, 0}), Perm({0, 3, 2, 1})})});
  // Q8, regular representation on {1,i,j,k,-1,-i,-j,-k}
  out.push_back({"Q8", make({Perm({1, 4, 7, 2, 5, 0, 3, 6}), Perm({2, 3, 4, 5, 6, 7, 0, 1})})});
  out.push_back({"A4", make({Perm({1, 2, 0, 3}), Perm({1, 0, 3, 2})})});
  out.push_back({"D6", make({Perm({1, 2, 3, 4, 5, 0}), Perm({0, 5, 4, 3, 2, 1})})});
  out.push_back({"S4", make({Perm({1, 2, 3, 0}), Perm({1, 0, 2, 3})})});
  out.push_back({"S4xZ2", make({Perm({1, 2, 3, 0, 4, 5}), Perm({1, 0, 2, 3, 4, 5}), Perm({0, 1, 2, 3, 5, 4})})});
  out.push_back({"Z3xS3", make({Perm({1, 2, 0, 3, 4, 5}), Perm({0, 1, 2, 4, 3, 5}), Perm({0, 1, 2, 4, 5, 3})})});
  return out;
}

std::vector<FpPresentation> small_sources() {
  return {
      artin_presentation(CoxeterSpec(Family::A, 2)),
      artin_presentation(CoxeterSpec(Family::B, 2)),
      artin_presentation(CoxeterSpec(Family::A, 3)),
      artin_presentation(CoxeterSpec::I2(5)),
      coxeter_presentation(CoxeterSpec(Family::A, 3)),
      parse_presentation("gens: a b; rels: ;"),
      parse_presentation("gens: a b; rels: a^2; b^3;"),
      parse_presentation("gens: a b c; rels: a b c = b c a;"),
      parse_presentation("gens: x; rels: x^4;"),
  };
}

// All homomorphisms by brute force, each class represented by the least
// tuple among its conjugates computed with plain permutation products.
std::set<ImageTuple> brute_force(FpPresentation const& src, FiniteGroup const& g) {
  std::size_t k = src.number_of_generators();
  std::set<ImageTuple> out;
  ImageTuple t(k, 0);
  auto eval = [&](Word const& w) {
    Perm p(g.degree());
    for (Letter l : w) {
      Perm const& x = g.element(t[static_cast<std::size_t>(generator_of(l) - 1)]);
      p = p * (is_inverse(l) ? x.inverse() : x);
    }
    return p;
  };
  while (true) {
    bool hom = true;
    for (auto const& r : src.relators()) hom = hom && eval(r).is_identity();
    if (hom) {
      ImageTuple best;
      for (ElementIndex c = 0; c < g.size(); ++c) {
        ImageTuple u;
        Perm const& cp = g.element(c);
        for (auto x : t) u.push_back(g.index_of(cp.inverse() * g.element(x) * cp));
        if (best.empty() || u < best) best = u;
      }
      out.insert(best);
    }
    std::size_t i = 0;
    while (i < k && ++t[i] == g.size()) t[i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace

TEST_CASE("homomorphism search matches brute force", "[homsearch][oracle]") {
  int violations = 0;
  for (auto const& tg : small_targets()) {
    REQUIRE(tg.group->size() <= 48);
    for (auto const& src : small_sources()) {
      CAPTURE(tg.name, print_presentation(src));
      auto expected = brute_force(src, *tg.group);
      HomClassSet found = enumerate_homs(src, tg.group);
      std::set<ImageTuple> got;
      for (auto const& h : found.classes) {
        got.insert(h.images);
        if (!is_homomorphism(src, *tg.group, h.images)) ++violations;
      }
      CHECK(found.size() == got.size());
      if (got != expected) ++violations;
      CHECK(got == expected);
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("parallel search is deterministic", "[homsearch]") {
  auto s4 = small_targets()[7].group;
  auto src = artin_presentation(CoxeterSpec(Family::A, 3));
  HomSearchOptions one, four;
  four.threads = 4;
  CHECK(enumerate_homs(src, s4, one).classes == enumerate_homs(src, s4, four).classes);
}

TEST_CASE("search budgets", "[homsearch]") {
  auto s4 = small_targets()[7].group;
  HomSearchOptions small;
  small.max_target_order = 10;
  CHECK_THROWS_AS(enumerate_homs(artin_presentation(CoxeterSpec(Family::A, 3)), s4, small), SearchBudgetExceeded);
  HomSearchOptions expired;
  expired.deadline = Deadline(std::chrono::milliseconds(0));
  CHECK_THROWS_AS(enumerate_homs(artin_presentation(CoxeterSpec(Family::A, 3)), s4, expired), BudgetExhausted);
}

TEST_CASE("filters and source automorphisms", "[homsearch]") {
  auto s4 = small_targets()[7].group;
  auto src = artin_presentation(CoxeterSpec(Family::A, 3));
  HomClassSet all = enumerate_homs(src, s4);
  auto f = filter_by_word_order(all, {1, 2, 3}, 4);
  for (auto const& h : f.classes) CHECK(s4->element_order(h.evaluate(*s4, {1, 2, 3})) == 4);
  std::vector<std::vector<int>> flip{{2, 1, 0}};
  CHECK(preserves_relators(src, flip[0]));
  CHECK_FALSE(preserves_relators(src, {1, 0, 2}));
  CHECK_FALSE(preserves_relators(src, {0, 0, 2}));
  auto q = quotient_by_source_autos(all, flip);
  // brute-force orbit count
  std::set<ImageTuple> reps;
  for (auto const& h : all.classes) {
    ImageTuple t{h.images[2], h.images[1], h.images[0]};
    reps.insert(std::min(h.images, least_conjugate(*s4, t)));
  }
  CHECK(q.size() == reps.size());
  CHECK_THROWS_AS(quotient_by_source_autos(all, {{1, 0, 2}}), std::invalid_argument);
}

TEST_CASE("census of A[F4] in W-bar[D4] x| S3", "[homsearch][census]") {
  auto tg = build_target();
  CoxeterSpec f4(Family::F, 4);
  auto src = artin_presentation(f4);
  HomSearchOptions opts;
  opts.threads = 4;
  HomClassSet all = enumerate_homs(src, tg->semidirect_ptr(), opts);
  CHECK(all.size() == 286);
  auto order6 = filter_by_word_order(all, {1, 2, 3, 4}, 6);
  CHECK(order6.size() == 10);
  std::vector<std::vector<int>> autos{{3, 2, 1, 0}};
  auto five = quotient_by_source_autos(order6, autos);
  CHECK(five.size() == 5);
  auto const& S = tg->semidirect();
  ImageTuple hard{S.generator(2), S.generator(1), S.generator(4), S.generator(5)};
  auto part = classify_hard_case(five, autos, hard);
  CHECK(part.has_expected_shape(4, 1));
  for (auto const& d : part.degenerate) {
    CHECK(d.images[0] == d.images[1]);
    CHECK(S.element_order(d.images[0]) <= 2);
  }
  // with the center killed the count is the same; the flip is checked
  // through the word problem since (s1 s2 s3 s4)^6 relabels to a non-relator
  auto abar = src;
  abar.add_relator(center_word(f4));
  HomClassSet all_bar = enumerate_homs(abar, tg->semidirect_ptr(), opts);
  CHECK(all_bar.size() == 286);
  RelatorOracle oracle = [&](Word const& w) { return central_power_of(f4, w).has_value(); };
  CHECK_THROWS_AS(quotient_by_source_autos(filter_by_word_order(all_bar, {1, 2, 3, 4}, 6), autos),
                  std::invalid_argument);
  CHECK(quotient_by_source_autos(filter_by_word_order(all_bar, {1, 2, 3, 4}, 6), autos, oracle).size() == 5);
}
