#ifndef LMONOID_VARIETY_HPP
#define LMONOID_VARIETY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lmonoid/caps.hpp"
#include "lmonoid/monoid.hpp"
#include "lmonoid/nested_sum.hpp"
#include "lmonoid/terms.hpp"

namespace lmonoid {

  // Sdi keeps words with no two equal adjacent commutative letters. Unlike
  // word_is_sdi() it keeps the empty word, matching S(1) = 1.
  enum class WordFilter { All, Sdi, Commutative, CommutativeSdi };

  WordFilter parse_filter(std::string_view text);

  //! Words of algebra size n in lexicographic order.
  std::vector<SumWord> enumerate_words(std::size_t n,
                                       WordFilter  filter = WordFilter::All,
                                       std::size_t cap    = caps::enumeration_max);

  // Exact counts, n in [1, caps::counting].
  std::uint64_t count_I(std::size_t n);
  std::uint64_t count_S(std::size_t n);
  std::uint64_t count_comm(std::size_t n);
  //! b in (1 + sqrt 3)^n = a + b sqrt 3, which equals the closed form for I(n).
  std::uint64_t count_I_closed_form(std::size_t n);

  //! Every valid table of size n (unit anywhere, entries in {a, b}).
  std::vector<FinOrdMonoid> brute_force_enumerate(std::size_t n,
                                                  std::size_t cap = caps::brute_force);

  //! SDI words of the quotients of compose(w) by meet-irreducible congruences,
  //! sorted and distinct.
  std::vector<SumWord> sdi_quotient_words(SumWord const& w, std::size_t cap = caps::congruence);

  //! compose(w) lies in the variety generated by compose(g), g in gens.
  bool member(SumWord const& w, std::vector<SumWord> const& gens,
              std::size_t cap = caps::congruence);

  //! <=_IS-maximal SDI words of the variety generated by gens.
  std::vector<SumWord> variety_antichain(std::vector<SumWord> const& gens,
                                         std::size_t                 cap = caps::congruence);

  //! Subvarieties of the commutative variety. n >= 2 for the indexed kinds.
  struct CIdVarietyId {
    enum class Kind { Trivial, VC, VCd, VJoin, Full };
    Kind        kind = Kind::Trivial;
    std::size_t n    = 0;

    static CIdVarietyId trivial() {
      return {Kind::Trivial, 0};
    }
    static CIdVarietyId vc(std::size_t n);
    static CIdVarietyId vcd(std::size_t n);
    static CIdVarietyId vjoin(std::size_t n);
    static CIdVarietyId full() {
      return {Kind::Full, 0};
    }

    bool operator==(CIdVarietyId const&) const = default;
  };

  std::string to_string(CIdVarietyId const& v);

  //! Alternating commutative word of length len starting with `first`.
  SumWord alternating_word(Letter first, std::size_t len);

  CIdVarietyId cid_identify(std::vector<SumWord> const& gens);
  bool         cid_leq(CIdVarietyId const& lhs, CIdVarietyId const& rhs);
  Equation     cid_axiom(CIdVarietyId const& v);

  enum class AmalgamationStatus { Yes, No, OpenInPaper };
  std::string_view to_string(AmalgamationStatus s);

  AmalgamationStatus amalgamation_status(std::vector<SumWord> const& gens,
                                         std::size_t                 cap = caps::congruence);
  //! The varieties that are not finitely generated: "CId", "G-limit", "D-limit".
  AmalgamationStatus amalgamation_status_named(std::string_view name);

}  // namespace lmonoid

#endif  // LMONOID_VARIETY_HPP
