#ifndef LMONOID_NESTED_SUM_HPP
#define LMONOID_NESTED_SUM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmonoid/monoid.hpp"

namespace lmonoid {

  // The four simple building blocks. The enumerator order is the
  // lexicographic order used for words everywhere.
  enum class Letter : unsigned char { C2, C2d, G3, D3 };

  inline constexpr Letter all_letters[] = {Letter::C2, Letter::C2d, Letter::G3, Letter::D3};

  // Number of non-identity elements a letter contributes.
  constexpr std::size_t weight(Letter c) noexcept {
    return (c == Letter::G3 || c == Letter::D3) ? 2 : 1;
  }
  constexpr bool has_negative(Letter c) noexcept {
    return c != Letter::C2d;
  }
  constexpr bool has_positive(Letter c) noexcept {
    return c != Letter::C2;
  }
  constexpr bool is_commutative(Letter c) noexcept {
    return c == Letter::C2 || c == Letter::C2d;
  }

  //! Finite nested sum, outermost letter first. The empty word is the
  //! trivial algebra.
  using SumWord = std::vector<Letter>;

  std::size_t size(SumWord const& w);

  std::string_view to_string(Letter c);
  //! Letters joined by '+', empty word spelled "0".
  std::string format_word(SumWord const& w);
  SumWord     parse_word(std::string_view text);

  //! Builds the nested sum. Layout: the negative elements of letter i sit
  //! below those of letter i+1, the positive ones above, so with k letters
  //!   rank(neg_i)  = #{j < i : has_negative(w[j])}
  //!   rank(unit)   = #{j : has_negative(w[j])}
  //!   rank(pos_i)  = rank(unit) + #{j >= i : has_positive(w[j])}.
  FinOrdMonoid compose(SumWord const& w);

  //! Rank positions of every letter inside compose(w).
  struct LetterLayout {
    std::optional<Element> negative;
    std::optional<Element> positive;
  };
  struct WordLayout {
    Element                   unit = 0;
    std::vector<LetterLayout> letters;
  };
  WordLayout layout(SumWord const& w);

  //! Green's D relation: a D b iff aba = a and bab = b.
  bool green_d(FinOrdMonoid const& m, Element a, Element b);

  //! Decomposition through the D-classes of the non-identity elements.
  SumWord decompose(FinOrdMonoid const& m);
  //! Decomposition by repeatedly peeling the outermost letter off the
  //! bottom/top pair. Kept as an independent cross-check of decompose().
  SumWord decompose_peel(FinOrdMonoid const& m);

  //! C2, C2d are below G3, D3; everything else is incomparable.
  bool component_leq(Letter lhs, Letter rhs) noexcept;

  //! A strictly increasing position map with component_leq(src[i], dst[f[i]]).
  using PositionMap = std::vector<std::size_t>;

  bool is_word_witness(SumWord const& source, SumWord const& target, PositionMap const& f);

  //! Greedy leftmost scattered-subword match.
  std::optional<PositionMap> word_embeds(SumWord const& source, SumWord const& target);

  //! Element-level embedding compose(source) -> compose(target) induced by f.
  //! Throws InvalidWitness unless is_word_witness(source, target, f).
  ElementMap lift_embedding(SumWord const& source, SumWord const& target, PositionMap const& f);

  //! Non-empty and no two consecutive equal commutative letters.
  bool word_is_sdi(SumWord const& w);

  SumWord dual_word(SumWord const& w);
  SumWord opposite_word(SumWord const& w);

}  // namespace lmonoid

#endif  // LMONOID_NESTED_SUM_HPP
