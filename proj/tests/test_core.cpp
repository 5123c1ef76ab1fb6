#include <doctest.h>

#include <sstream>

#include "lmonoid/monoid.hpp"
#include "lmonoid/nested_sum.hpp"
#include "lmonoid/variety.hpp"
#include "oracles.hpp"

using namespace lmonoid;

namespace {
  FinOrdMonoid g3() {
    return FinOrdMonoid::validate(3, 1, {{0, 0, 0}, {0, 1, 2}, {2, 2, 2}});
  }
  FinOrdMonoid d3() {
    return FinOrdMonoid::validate(3, 1, {{0, 0, 2}, {0, 1, 2}, {0, 2, 2}});
  }
  FinOrdMonoid c2() {
    return FinOrdMonoid::validate(2, 1, {{0, 0}, {0, 1}});
  }
  // G3 (+) C2 with order bottom < 1 < e < top.
  FinOrdMonoid g3_c2() {
    return FinOrdMonoid::validate(4, 2, {{0, 0, 0, 0}, {0, 1, 1, 3}, {0, 1, 2, 3}, {3, 3, 3, 3}});
  }

  Violation violation_of(std::size_t n, Element unit, std::vector<Element> const& t) {
    auto v = FinOrdMonoid::check(n, unit, t);
    REQUIRE(v.has_value());
    return v->kind();
  }
}  // namespace

TEST_CASE("validate accepts the small building blocks") {
  CHECK(c2().size() == 2);
  CHECK(g3_c2().unit() == 2);
  CHECK(FinOrdMonoid::trivial().size() == 1);
}

TEST_CASE("validate reports the violated axiom with a witness") {
  CHECK(violation_of(2, 1, {1, 0, 0, 1}) == Violation::NotIdempotent);
  auto v = FinOrdMonoid::check(2, 1, std::vector<Element>{1, 0, 0, 1});
  CHECK(v->witness() == std::vector<Element>{0});
  CHECK(violation_of(2, 0, {0, 0, 0, 1}) == Violation::NoIdentity);
  CHECK(violation_of(2, 1, {0, 5, 0, 1}) == Violation::OutOfRange);
  CHECK_THROWS_AS(FinOrdMonoid::validate(2, 1, {{1, 0}, {0, 1}}), ValidationError);
}

TEST_CASE("products in G3 and D3") {
  CHECK(g3().mul(0, 2) == 0);
  CHECK(g3().mul(2, 0) == 2);
  CHECK(d3().mul(0, 2) == 2);
  for (Element a = 0; a < 3; ++a) {
    CHECK(g3().mul(1, a) == a);
  }
}

TEST_CASE("classify follows the top/bottom cases") {
  CHECK(classify(c2()).top_bottom_case == TopBottomCase::AbsorbingBottom);
  CHECK(classify(order_dual(c2())).top_bottom_case == TopBottomCase::AbsorbingTop);
  CHECK(classify(g3()).top_bottom_case == TopBottomCase::LeftAbsorbing);
  CHECK(classify(d3()).top_bottom_case == TopBottomCase::RightAbsorbing);
  CHECK_FALSE(classify(FinOrdMonoid::trivial()).top_bottom_case.has_value());
  CHECK(classify(c2()).commutative);
  CHECK_FALSE(classify(g3()).commutative);
}

TEST_CASE("order dual and opposite") {
  CHECK(order_dual(c2()) == compose({Letter::C2d}));
  CHECK(order_dual(g3()) == g3());
  CHECK(opposite(g3()) == d3());
  CHECK(opposite(c2()) == c2());
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& m : brute_force_enumerate(n)) {
      CHECK(order_dual(order_dual(m)) == m);
      CHECK(opposite(opposite(m)) == m);
    }
  }
}

TEST_CASE("every product lies between meet and join") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& m : brute_force_enumerate(n)) {
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          CHECK(std::min(a, b) <= m.mul(a, b));
          CHECK(m.mul(a, b) <= std::max(a, b));
        }
      }
    }
  }
}

TEST_CASE("generated subalgebras") {
  std::vector<Element> none;
  CHECK(generated_subalgebra(g3(), none).algebra == FinOrdMonoid::trivial());
  std::vector<Element> bottom{0};
  CHECK(generated_subalgebra(g3(), bottom).algebra == c2());
  std::vector<Element> ends{0, 3};
  auto const           sub = generated_subalgebra(g3_c2(), ends);
  CHECK(sub.algebra == g3());
  CHECK(sub.inclusion.image == std::vector<Element>{0, 2, 3});
}

TEST_CASE("check_map") {
  CHECK(check_map(g3(), g3(), identity_map(3)).is_embedding);
  ElementMap into{2, 3, {0, 1}};
  CHECK(check_map(c2(), g3(), into).is_embedding);
  ElementMap collapse{3, 2, {0, 1, 1}};
  auto const r = check_map(g3(), c2(), collapse);
  CHECK_FALSE(r.is_homomorphism);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->kind == MapFailure::ProductNotPreserved);
}

TEST_CASE("algebra text format round trip") {
  std::string const text = format_algebra(g3_c2());
  CHECK(text == "4 2\n0 0 0 0\n0 1 1 3\n0 1 2 3\n3 3 3 3\n");
  CHECK(parse_algebra("# comment\n\n" + text) == g3_c2());
  CHECK_THROWS_AS(parse_algebra("2 1\n0 0\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_algebra("2 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_algebra("2 1\n0 0\n0 x\n"), ParseError);
  std::istringstream in(text);
  CHECK(read_algebra(in) == g3_c2());
}

// ---------------------------------------------------------------- words

TEST_CASE("word syntax") {
  CHECK(parse_word("G3+C2") == SumWord{Letter::G3, Letter::C2});
  CHECK(parse_word("0").empty());
  CHECK(format_word({}) == "0");
  CHECK(format_word({Letter::C2d, Letter::D3}) == "C2d+D3");
  CHECK_THROWS_AS(parse_word("G3+"), ParseError);
  CHECK_THROWS_AS(parse_word("c2"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
}

TEST_CASE("compose") {
  CHECK(compose({}) == FinOrdMonoid::trivial());
  CHECK(compose({Letter::G3, Letter::C2}) == g3_c2());
  CHECK(compose({Letter::C2}) == c2());
  CHECK(compose({Letter::G3}) == g3());
  CHECK(compose({Letter::D3}) == d3());
}

TEST_CASE("decompose and its peeling cross-check") {
  CHECK(decompose(FinOrdMonoid::trivial()).empty());
  CHECK(decompose(g3_c2()) == SumWord{Letter::G3, Letter::C2});
  CHECK(decompose(order_dual(c2())) == SumWord{Letter::C2d});
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& m : brute_force_enumerate(n)) {
      SumWord const w = decompose(m);
      CHECK(decompose_peel(m) == w);
      CHECK(compose(w) == m);
      CHECK(decompose(order_dual(m)) == dual_word(w));
      CHECK(decompose(opposite(m)) == opposite_word(w));
    }
  }
  for (std::size_t n = 1; n <= 8; ++n) {
    for (auto const& w : enumerate_words(n)) {
      CHECK(decompose(compose(w)) == w);
    }
  }
}

TEST_CASE("D-classes have at most two elements") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& m : brute_force_enumerate(n)) {
      for (Element a = 0; a < n; ++a) {
        std::size_t cls = 0;
        for (Element b = 0; b < n; ++b) {
          cls += green_d(m, a, b);
          if (a != b) {
            CHECK(green_d(m, a, b) == (m.mul(a, b) != m.mul(b, a)));
          }
        }
        CHECK(cls <= 2);
      }
    }
  }
  CHECK(green_d(g3(), 0, 2));
  CHECK_FALSE(green_d(compose({Letter::C2, Letter::C2d}), 0, 2));
}

TEST_CASE("letter order") {
  CHECK(component_leq(Letter::C2, Letter::G3));
  CHECK(component_leq(Letter::C2d, Letter::D3));
  CHECK_FALSE(component_leq(Letter::C2, Letter::C2d));
  CHECK_FALSE(component_leq(Letter::G3, Letter::D3));
  CHECK(component_leq(Letter::G3, Letter::G3));
}

TEST_CASE("word embeddings") {
  using L = Letter;
  CHECK(word_embeds({L::C2}, {L::G3}) == PositionMap{0});
  CHECK_FALSE(word_embeds({L::C2, L::C2}, {L::C2}).has_value());
  SumWord const src{L::C2, L::C2d}, dst{L::G3, L::C2, L::D3};
  auto const    f = word_embeds(src, dst);
  REQUIRE(f.has_value());
  CHECK(*f == PositionMap{0, 2});
  CHECK(check_map(compose(src), compose(dst), lift_embedding(src, dst, *f)).is_embedding);
  CHECK(lift_embedding({L::C2}, {L::G3}, {0}).image == std::vector<Element>{0, 1});
  CHECK(lift_embedding(dst, dst, {0, 1, 2}) == identity_map(size(dst)));
  CHECK_THROWS_AS(lift_embedding({L::G3}, {L::C2}, {0}), InvalidWitness);
  CHECK_THROWS_AS(lift_embedding({L::C2, L::C2}, {L::C2, L::C2}, {1, 0}), InvalidWitness);
}

TEST_CASE("word embeddings agree with element-level search") {
  std::vector<SumWord> words;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const ws = enumerate_words(n);
    words.insert(words.end(), ws.begin(), ws.end());
  }
  for (auto const& a : words) {
    for (auto const& b : words) {
      auto const f = word_embeds(a, b);
      CHECK(f.has_value() == oracle::embeds(compose(a), compose(b)));
      if (f) {
        CHECK(check_map(compose(a), compose(b), lift_embedding(a, b, *f)).is_embedding);
      }
    }
  }
}

TEST_CASE("word_is_sdi") {
  using L = Letter;
  CHECK_FALSE(word_is_sdi({L::C2, L::C2}));
  CHECK(word_is_sdi({L::G3, L::G3}));
  CHECK_FALSE(word_is_sdi({}));
  CHECK(word_is_sdi({L::C2, L::C2d, L::C2}));
  CHECK(dual_word({L::C2, L::G3}) == SumWord{L::C2d, L::G3});
  CHECK(opposite_word({L::G3}) == SumWord{L::D3});
  CHECK(dual_word({}).empty());
}
