#include <doctest.h>

#include "lmonoid/amalgamation.hpp"
#include "lmonoid/variety.hpp"
#include "oracles.hpp"

using namespace lmonoid;
using L = Letter;

namespace {
  // Non-commutative 3-element subalgebras {x < e < y} of m through a: the
  // value is m.mul(x, y) == x (G3-like) or not (D3-like).
  std::vector<bool> noncommutative_types_through(FinOrdMonoid const& m, Element a) {
    std::vector<bool> out;
    Element const     e = m.unit();
    for (Element x = 0; x < e; ++x) {
      for (Element y = e + 1; y < m.size(); ++y) {
        if ((a == x || a == y) && m.mul(x, y) != m.mul(y, x)) {
          out.push_back(m.mul(x, y) == x);
        }
      }
    }
    return out;
  }

  // Restriction to S1 or S2, searched on elements.
  bool restricts_to_forbidden(Span const& s) {
    FinOrdMonoid const lm = compose(s.base);
    FinOrdMonoid const mm = compose(s.left.target);
    FinOrdMonoid const nm = compose(s.right.target);
    ElementMap const   i1 = s.left.lift();
    ElementMap const   i2 = s.right.lift();
    for (Element a = 0; a < lm.size(); ++a) {
      if (a == lm.unit()) {
        continue;
      }
      for (bool l : noncommutative_types_through(mm, i1(a))) {
        for (bool r : noncommutative_types_through(nm, i2(a))) {
          if (l != r) {
            return true;
          }
        }
      }
    }
    return false;
  }

  std::vector<SumWord> words_up_to(std::size_t n) {
    std::vector<SumWord> out;
    for (std::size_t k = 1; k <= n; ++k) {
      auto const ws = enumerate_words(k);
      out.insert(out.end(), ws.begin(), ws.end());
    }
    return out;
  }

  Span s1() {
    return Span::make({L::C2}, {L::G3}, {0}, {L::D3}, {0});
  }
  Span s2() {
    return Span::make({L::C2d}, {L::G3}, {0}, {L::D3}, {0});
  }
}  // namespace

TEST_CASE("all word embeddings") {
  CHECK(all_word_embeddings({L::C2}, {L::G3}).size() == 1);
  auto const two = all_word_embeddings({L::C2}, {L::C2, L::C2});
  REQUIRE(two.size() == 2);
  CHECK(two[0].f == PositionMap{0});
  CHECK(two[1].f == PositionMap{1});
  CHECK(all_word_embeddings({L::G3}, {L::C2}).empty());
  CHECK(all_word_embeddings({}, {L::C2}).size() == 1);
}

TEST_CASE("compatibility") {
  CHECK(incompatibility_certificate(s1()) == std::optional<std::size_t>{0});
  CHECK_FALSE(is_compatible(s2()));
  CHECK(is_compatible(Span::make({L::C2}, {L::G3}, {0}, {L::G3}, {0})));
  CHECK_THROWS_AS(Span::make({L::C2}, {L::C2d}, {0}, {L::G3}, {0}), InvalidWitness);
  CHECK_THROWS_AS(amalgamate(s1()), IncompatibleSpan);
}

TEST_CASE("amalgamate") {
  Span const  s = Span::make({L::C2}, {L::G3}, {0}, {L::G3}, {0});
  auto const  a = amalgamate(s);
  CHECK(a.result == SumWord{L::G3});
  CHECK(a.j1.f == PositionMap{0});
  CHECK(a.j2.f == PositionMap{0});
  auto const c = verify_amalgam(s, a);
  CHECK(c.commutes);
  CHECK(c.embeddings_valid);
  CHECK_FALSE(c.strong);

  // Empty base: joint embedding, M letters first.
  Span const je = Span::make({}, {L::C2}, {}, {L::D3, L::C2d}, {});
  auto const j  = amalgamate(je);
  CHECK(j.result == SumWord{L::C2, L::D3, L::C2d});
  CHECK(verify_amalgam(je, j).strong);

  Span const cm = Span::make({L::C2}, {L::C2d, L::C2}, {1}, {L::C2, L::C2d}, {0});
  auto const ca = amalgamate(cm);
  CHECK(ca.result == SumWord{L::C2d, L::C2, L::C2d});
  auto const cc = verify_amalgam(cm, ca);
  CHECK(cc.commutes);
  CHECK(cc.strong);
}

TEST_CASE("verify rejects broken amalgams") {
  Span const s = Span::make({L::C2}, {L::C2, L::C2}, {0}, {L::C2}, {0});
  Amalgam    a = amalgamate(s);
  CHECK(verify_amalgam(s, a).commutes);
  a.j2.f = {1};
  auto const c = verify_amalgam(s, a);
  CHECK(c.embeddings_valid);
  CHECK_FALSE(c.commutes);
}

TEST_CASE("word criterion matches the element-level restriction search") {
  auto const words = words_up_to(4);
  for (auto const& base : words) {
    for (auto const& m : words) {
      for (auto const& f : all_word_embeddings(base, m)) {
        for (auto const& n : words) {
          for (auto const& g : all_word_embeddings(base, n)) {
            Span const s{base, f, g};
            CHECK(is_compatible(s) == !restricts_to_forbidden(s));
          }
        }
      }
    }
  }
}

TEST_CASE("bounded search") {
  CHECK_FALSE(search_amalgam(s1(), 6).has_value());
  CHECK_FALSE(search_amalgam(s2(), 6).has_value());
  Span const s = Span::make({L::C2}, {L::G3}, {0}, {L::C2, L::C2d}, {0});
  auto const a = search_amalgam(s, 6);
  REQUIRE(a.has_value());
  CHECK(verify_amalgam(s, *a).commutes);
  CHECK(size(a->result) == 4);
  CHECK_THROWS_AS(search_amalgam(s, 9), CapExceeded);
}

TEST_CASE("one-sided searches") {
  std::vector<SumWord> const fsi_c3{{}, {L::C2}, {L::C2d}, {L::C2, L::C2d}, {L::C2d, L::C2}};
  // C2d into C3 and into C3d.
  Span const a = Span::make({L::C2d}, {L::C2, L::C2d}, {1}, {L::C2d, L::C2}, {0});
  CHECK_FALSE(one_sided_amalgam_search(a, fsi_c3).has_value());

  std::vector<SumWord> const fsi_g3c3{{}, {L::C2}, {L::C2d}, {L::G3}, {L::C2, L::C2d}};
  Span const b = Span::make({L::C2}, {L::G3}, {0}, {L::C2, L::C2d}, {0});
  CHECK_FALSE(one_sided_amalgam_search(b, fsi_g3c3).has_value());

  auto const within = one_sided_amalgam_search(
      Span::make({L::C2}, {L::C2, L::C2d}, {0}, {L::C2, L::C2d}, {0}), {{L::C2, L::C2d}});
  REQUIRE(within.has_value());
  // j1 only needs to be a homomorphism; here it collapses the top onto e.
  CHECK(within->j1.image == std::vector<Element>{0, 1, 1});
  CHECK(check_map(compose({L::C2, L::C2d}), compose(within->target), within->j1).is_homomorphism);
}
