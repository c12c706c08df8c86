#include <catch_amalgamated.hpp>

#include <set>

#include "artin/coxeter_data.hpp"
#include "artin/presentation.hpp"
#include "test_util.hpp"

using namespace artin;

namespace {

std::vector<CoxeterSpec> all_small_specs() {
  std::vector<CoxeterSpec> out;
  for (int n = 1; n <= 7; ++n) out.emplace_back(Family::A, n);
  for (int n = 2; n <= 6; ++n) out.emplace_back(Family::B, n);
  for (int n = 4; n <= 7; ++n) out.emplace_back(Family::D, n);
  for (int n = 6; n <= 8; ++n) out.emplace_back(Family::E, n);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::H, 3);
  out.emplace_back(Family::H, 4);
  for (int m = 5; m <= 14; ++m) out.push_back(CoxeterSpec::I2(m));
  return out;
}

}  // namespace

TEST_CASE("type names parse back to the same type", "[coxeter]") {
  for (auto const& s : all_small_specs()) {
    CHECK(CoxeterSpec::parse(s.name()) == s);
  }
  CHECK(CoxeterSpec::parse("I2(5)").dihedral_order() == 5);
}

TEST_CASE("duplicates and degenerate types are rejected", "[coxeter]") {
  for (char const* bad : {"D3", "B1", "I2(3)", "I2(4)", "I2(2)", "E5", "E9", "F3", "H2", "A0", "X4", "I2()", "I2(x)", "4",
                          "A", "Dfour"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CoxeterSpec::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("kappa follows the center of A", "[coxeter]") {
  CHECK(garside_kappa(CoxeterSpec(Family::A, 1)) == 1);
  CHECK(garside_kappa(CoxeterSpec(Family::A, 3)) == 2);
  CHECK(garside_kappa(CoxeterSpec(Family::B, 3)) == 1);
  CHECK(garside_kappa(CoxeterSpec(Family::D, 4)) == 1);
  CHECK(garside_kappa(CoxeterSpec(Family::D, 5)) == 2);
  CHECK(garside_kappa(CoxeterSpec(Family::E, 6)) == 2);
  CHECK(garside_kappa(CoxeterSpec(Family::E, 7)) == 1);
  CHECK(garside_kappa(CoxeterSpec(Family::F, 4)) == 1);
  CHECK(garside_kappa(CoxeterSpec(Family::H, 4)) == 1);
  CHECK(garside_kappa(CoxeterSpec::I2(7)) == 2);
  CHECK(garside_kappa(CoxeterSpec::I2(8)) == 1);
}

TEST_CASE("degrees give |W| and the number of reflections", "[coxeter]") {
  CHECK(coxeter_group_order(CoxeterSpec(Family::D, 4)) == 192);
  CHECK(coxeter_group_order(CoxeterSpec(Family::F, 4)) == 1152);
  CHECK(coxeter_group_order(CoxeterSpec(Family::H, 4)) == 14400);
  CHECK(coxeter_group_order(CoxeterSpec(Family::E, 8)) == 696729600ull);
  for (auto const& s : all_small_specs()) {
    auto d = degrees(s);
    int sum = 0;
    for (int x : d) sum += x - 1;
    CHECK(sum == number_of_positive_roots(s));
  }
}

TEST_CASE("Coxeter matrices match the vertex numbering", "[coxeter]") {
  auto d4 = coxeter_matrix(CoxeterSpec(Family::D, 4));
  CHECK(d4(0, 2) == 3);
  CHECK(d4(1, 2) == 3);
  CHECK(d4(3, 2) == 3);
  CHECK(d4(0, 1) == 2);
  auto f4 = coxeter_matrix(CoxeterSpec(Family::F, 4));
  CHECK(f4(1, 2) == 4);
  CHECK(f4(0, 1) == 3);
  auto h4 = coxeter_matrix(CoxeterSpec(Family::H, 4));
  CHECK(h4(0, 1) == 5);
  auto e6 = coxeter_matrix(CoxeterSpec(Family::E, 6));
  CHECK(e6(1, 3) == 3);
  CHECK(e6(0, 2) == 3);
  CHECK(e6(1, 2) == 2);
}

TEST_CASE("graph automorphism groups", "[coxeter]") {
  CHECK(graph_automorphisms(CoxeterSpec(Family::D, 4)).size() == 6);
  CHECK(graph_automorphisms(CoxeterSpec(Family::D, 5)).size() == 2);
  CHECK(graph_automorphisms(CoxeterSpec(Family::F, 4)).size() == 2);
  CHECK(graph_automorphisms(CoxeterSpec(Family::E, 6)).size() == 2);
  CHECK(graph_automorphisms(CoxeterSpec(Family::A, 4)).size() == 2);
  CHECK(graph_automorphisms(CoxeterSpec(Family::H, 4)).size() == 1);
}

TEST_CASE("Artin presentations list each pair once", "[coxeter]") {
  auto p = artin_presentation(CoxeterSpec(Family::F, 4));
  CHECK(p.number_of_generators() == 4);
  CHECK(p.relations().size() == 6);
  CHECK(p.relations()[3].lhs == Word{2, 3, 2, 3});
  auto c = coxeter_presentation(CoxeterSpec(Family::F, 4));
  CHECK(c.relations().size() == 10);
}

TEST_CASE("torsion table rows", "[coxeter][torsion]") {
  CHECK_THROWS_AS(torsion_table(CoxeterSpec(Family::A, 1)), std::invalid_argument);
  auto f4 = torsion_table(CoxeterSpec(Family::F, 4));
  CHECK(f4.orders == std::vector<int>{2, 3, 4, 6});
  CHECK(f4.basic(6).word == Word{1, 2, 3, 4});
  auto e8 = torsion_table(CoxeterSpec(Family::E, 8));
  CHECK(e8.basic(10).word.size() == 12);
  CHECK(e8.orders == std::vector<int>{2, 3, 4, 5, 6, 10, 12, 15});
  auto d4 = torsion_table(CoxeterSpec(Family::D, 4));
  CHECK(d4.orders == std::vector<int>{2, 3});
  auto i7 = torsion_table(CoxeterSpec::I2(7));
  CHECK(i7.orders == std::vector<int>{2, 7});
  CHECK(torsion_table(CoxeterSpec::I2(8)).orders == std::vector<int>{2, 4});
  CHECK(default_torsion_specs().size() == 25);
  // every word of a row is positive and uses only generators of the type
  for (auto const& s : default_torsion_specs()) {
    for (auto const& e : torsion_table(s).basic_elements) {
      CHECK(is_positive(e.word));
      for (Letter l : e.word) CHECK(l <= s.rank());
    }
  }
}

TEST_CASE("presentation text round-trips", "[presentation]") {
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::string> names{"x", "y", "z1"};
    FpPresentation p(names, {});
    std::size_t nrel = testing::random_length(4);
    for (std::size_t i = 0; i < nrel; ++i) {
      Word lhs = testing::random_word(3, 1 + testing::random_length(6));
      Word rhs = testing::random_length(1) ? testing::random_word(3, 1 + testing::random_length(5)) : Word{};
      p.add_relation({lhs, rhs});
    }
    std::string text = print_presentation(p);
    CAPTURE(text);
    CHECK(parse_presentation(text) == p);
  }
}

TEST_CASE("presentation parser syntax", "[presentation]") {
  auto p = parse_presentation("gens: a b; # braid group\nrels: a b a = b a b; (a b)^-2 a^3;");
  CHECK(p.relations().size() == 2);
  CHECK(p.relations()[1].lhs == Word{-2, -1, -2, -1, 1, 1, 1});
  CHECK_THROWS_AS(parse_presentation("gens: a a; rels: ;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: b;"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: a"), ParseError);
  CHECK_THROWS_AS(parse_presentation("rels: a;"), ParseError);
  try {
    parse_presentation("gens: a;\nrels: a q;");
    FAIL("no error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }
}
