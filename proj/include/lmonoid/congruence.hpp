#ifndef LMONOID_CONGRUENCE_HPP
#define LMONOID_CONGRUENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lmonoid/caps.hpp"
#include "lmonoid/monoid.hpp"

namespace lmonoid {

  //! Congruence of a finite chain. Blocks are rank intervals, numbered
  //! 0, 1, ... from the bottom, so equal partitions compare equal.
  struct Congruence {
    std::vector<std::size_t> block_of;

    static Congruence delta(std::size_t n);
    static Congruence nabla(std::size_t n);
    //! joined[i] says whether i and i+1 share a block.
    static Congruence from_cuts(std::vector<bool> const& joined);

    std::size_t       size() const noexcept {
      return block_of.size();
    }
    std::size_t       block_count() const noexcept {
      return block_of.empty() ? 0 : block_of.back() + 1;
    }
    std::vector<bool> cuts() const;
    bool              same(Element a, Element b) const {
      return block_of[a] == block_of[b];
    }
    bool is_delta() const noexcept;
    bool is_nabla() const noexcept;

    //! Refinement order: every block of *this lies inside a block of other.
    bool leq(Congruence const& other) const;

    //! Intervals [lo, hi] per block.
    std::vector<std::pair<Element, Element>> blocks() const;

    bool operator==(Congruence const&) const = default;
  };

  Congruence meet(Congruence const& a, Congruence const& b);
  //! Join in the congruence lattice (union of the identified adjacent pairs).
  Congruence join(Congruence const& a, Congruence const& b);

  //! Interval partition compatible with the product.
  bool is_congruence(FinOrdMonoid const& m, Congruence const& theta);

  Congruence principal_congruence(FinOrdMonoid const& m, Element a, Element b);
  Congruence generated_congruence(FinOrdMonoid const&                            m,
                                  std::vector<std::pair<Element, Element>> const& pairs);

  //! Ordered by number of identified adjacent pairs, then by cut pattern:
  //! Delta first, Nabla last.
  std::vector<Congruence> all_congruences(FinOrdMonoid const& m,
                                          std::size_t         cap = caps::congruence);
  //! Same list built as the join closure of the principal congruences.
  std::vector<Congruence> all_congruences_by_joins(FinOrdMonoid const& m,
                                                   std::size_t         cap = caps::congruence_max);

  //! Least non-Delta congruence, if there is one and it is not Delta.
  std::optional<Congruence> monolith(FinOrdMonoid const& m, std::size_t cap = caps::congruence);
  bool                      is_sdi(FinOrdMonoid const& m, std::size_t cap = caps::congruence);
  bool con_is_chain(FinOrdMonoid const& m, std::size_t cap = caps::congruence);

  //! theta is meet-irreducible: not Nabla, and the congruences strictly
  //! above it have a least element.
  bool is_meet_irreducible(std::vector<Congruence> const& lattice, Congruence const& theta);

  struct Quotient {
    FinOrdMonoid algebra;
    ElementMap   projection;
  };
  Quotient quotient(FinOrdMonoid const& m, Congruence const& theta);

  //! Endomorphism sending each element to a fixed representative of its
  //! block: the unit for the unit's block, the block minimum otherwise.
  ElementMap quotient_section(FinOrdMonoid const& m, Congruence const& theta);

  //! Kernel of a map, as a partition of the source.
  Congruence kernel(ElementMap const& f);

  //! theta pulled back along an embedding.
  Congruence restrict(Congruence const& theta, ElementMap const& inclusion);

  //! Congruence extension property over every subalgebra.
  bool has_cep(FinOrdMonoid const& m, std::size_t cap = caps::cep);

  // Text form: blocks as rank intervals, e.g. "0-0;1-2".
  std::string format_congruence(Congruence const& theta);
  Congruence  parse_congruence(std::string_view text, std::size_t n);

}  // namespace lmonoid

#endif  // LMONOID_CONGRUENCE_HPP
