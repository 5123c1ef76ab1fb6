#include <doctest.h>

#include <set>

#include "lmonoid/congruence.hpp"
#include "lmonoid/nested_sum.hpp"
#include "lmonoid/terms.hpp"
#include "lmonoid/variety.hpp"
#include "oracles.hpp"

using namespace lmonoid;
using L = Letter;

TEST_CASE("principal congruences in C3") {
  FinOrdMonoid const c3 = make_cn(3);  // 2 < e < 1
  CHECK(principal_congruence(c3, 0, 0).is_delta());
  CHECK(format_congruence(principal_congruence(c3, 2, 1)) == "0-0;1-2");
  CHECK(principal_congruence(c3, 0, 1).is_nabla());
}

TEST_CASE("congruence lattices") {
  auto const triv = all_congruences(FinOrdMonoid::trivial());
  REQUIRE(triv.size() == 1);
  CHECK(triv[0].is_delta());

  auto const c3 = all_congruences(make_cn(3));
  REQUIRE(c3.size() == 3);
  CHECK(c3.front().is_delta());
  CHECK(format_congruence(c3[1]) == "0-0;1-2");
  CHECK(c3.back().is_nabla());
  CHECK(all_congruences(compose({L::C2})).size() == 2);

  FinOrdMonoid const cc = compose({L::C2, L::C2});
  CHECK(all_congruences(cc).size() == 4);
  CHECK_FALSE(con_is_chain(cc));
  CHECK(con_is_chain(compose({L::G3})));
  CHECK(con_is_chain(compose({L::G3, L::G3})));
}

TEST_CASE("lattice matches the definition over all partitions") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& w : enumerate_words(n)) {
      FinOrdMonoid const m = compose(w);
      std::set<std::vector<std::size_t>> mine, ref;
      for (auto const& c : all_congruences(m)) {
        CHECK(is_congruence(m, c));
        mine.insert(c.block_of);
      }
      for (auto const& p : oracle::congruences(m)) {
        ref.insert(oracle::normalize(p));
      }
      CHECK(mine == ref);
      CHECK(all_congruences(m) == all_congruences_by_joins(m));
    }
  }
}

TEST_CASE("lattice closed under meet and join") {
  for (auto const& w : enumerate_words(5)) {
    auto const cons = all_congruences(compose(w));
    std::set<std::vector<std::size_t>> all;
    for (auto const& c : cons) {
      all.insert(c.block_of);
    }
    for (auto const& a : cons) {
      for (auto const& b : cons) {
        CHECK(all.count(meet(a, b).block_of) == 1);
        CHECK(all.count(join(a, b).block_of) == 1);
      }
    }
  }
}

TEST_CASE("subdirect irreducibility") {
  auto const mon = monolith(compose({L::C2}));
  REQUIRE(mon.has_value());
  CHECK(mon->is_nabla());
  CHECK_FALSE(is_sdi(compose({L::C2, L::C2})));
  CHECK_FALSE(is_sdi(FinOrdMonoid::trivial()));
  for (L c : all_letters) {
    CHECK(is_sdi(compose({c})));
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto const& w : enumerate_words(n)) {
      FinOrdMonoid const m = compose(w);
      CHECK(is_sdi(m) == word_is_sdi(w));
      if (is_sdi(m)) {
        CHECK(con_is_chain(m));
      }
    }
  }
}

TEST_CASE("principal congruence lemma in SDI chains") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (auto const& w : enumerate_words(n, WordFilter::Sdi)) {
      FinOrdMonoid const m = compose(w);
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (a != b && (m.mul(a, b) == a || m.mul(b, a) == a)) {
            CHECK(principal_congruence(m, a, b) == principal_congruence(m, a, m.unit()));
          }
        }
      }
    }
  }
}

TEST_CASE("quotients and sections") {
  FinOrdMonoid const c3    = make_cn(3);
  Congruence const   theta = parse_congruence("0-0;1-2", 3);
  auto const         q     = quotient(c3, theta);
  CHECK(q.algebra == compose({L::C2}));
  CHECK(check_map(c3, q.algebra, q.projection).is_homomorphism);
  CHECK(quotient(c3, Congruence::delta(3)).algebra == c3);
  CHECK(quotient(c3, Congruence::nabla(3)).algebra == FinOrdMonoid::trivial());

  ElementMap const s = quotient_section(c3, theta);
  CHECK(s.image == std::vector<Element>{0, 1, 1});
  CHECK(quotient_section(c3, Congruence::delta(3)) == identity_map(3));

  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& w : enumerate_words(n)) {
      FinOrdMonoid const m = compose(w);
      for (auto const& th : all_congruences(m)) {
        ElementMap const sec = quotient_section(m, th);
        CHECK(check_map(m, m, sec).is_homomorphism);
        CHECK(kernel(sec) == th);
        CHECK(compose_maps(sec, sec) == sec);
        auto const pr = quotient(m, th).projection;
        CHECK(compose_maps(sec, pr) == pr);
      }
    }
  }
}

TEST_CASE("congruence text form") {
  CHECK(format_congruence(Congruence::nabla(4)) == "0-3");
  CHECK(parse_congruence("0-1;2-2;3-4", 5) == Congruence::from_cuts({true, false, false, true}));
  CHECK_THROWS_AS(parse_congruence("0-1;3-4", 5), ParseError);
  CHECK_THROWS_AS(parse_congruence("0-1", 3), ParseError);
  CHECK_THROWS_AS(parse_congruence("0-a", 2), ParseError);
}

TEST_CASE("congruence extension property") {
  CHECK_FALSE(has_cep(make_cn(4)));
  CHECK(has_cep(make_cn(3)));
  CHECK_FALSE(has_cep(compose({L::C2, L::G3})));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto const& w : enumerate_words(n)) {
      CHECK(has_cep(compose(w)) == oracle::has_cep(compose(w)));
    }
  }
  CHECK_THROWS_AS(has_cep(make_cn(13)), CapExceeded);
}
