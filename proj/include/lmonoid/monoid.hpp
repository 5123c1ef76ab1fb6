#ifndef LMONOID_MONOID_HPP
#define LMONOID_MONOID_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lmonoid/error.hpp"

namespace lmonoid {

  // Elements are identified with their rank in the total order, 0 = bottom.
  using Element = std::size_t;

  enum class Violation {
    NotAssociative,   // witness (a, b, c)
    NoIdentity,       // witness (a)
    NotMonotone,      // witness (a, b, c): a <= b but c*a > c*b or a*c > b*c
    NotIdempotent,    // witness (a)
    ChoiceViolation,  // witness (a, b): a*b not in {a, b}
    OutOfRange        // witness (a, b): table entry out of range
  };

  std::string to_string(Violation v);

  class ValidationError : public Error {
   public:
    ValidationError(Violation kind, std::vector<Element> witness);

    Violation kind() const noexcept {
      return kind_;
    }
    std::vector<Element> const& witness() const noexcept {
      return witness_;
    }

   private:
    Violation            kind_;
    std::vector<Element> witness_;
  };

  //! A finite totally ordered idempotent monoid.
  //!
  //! The carrier is {0, ..., size()-1} ordered by index; table(a, b) is a*b.
  //! Instances can only be obtained through validate() (or operations that
  //! construct valid algebras), so every FinOrdMonoid satisfies the monoid,
  //! order-preservation and idempotency axioms. Two algebras are isomorphic
  //! iff they compare equal, since the only order-isomorphism of finite
  //! chains of equal length is the identity on ranks.
  class FinOrdMonoid {
   public:
    //! Checks the axioms in the order: ranges, identity, idempotency,
    //! ab in {a,b}, monotonicity, associativity; throws ValidationError
    //! carrying the first violated axiom and its witness.
    static FinOrdMonoid validate(std::size_t                         size,
                                 Element                             unit,
                                 std::vector<std::vector<Element>> const& table);
    static FinOrdMonoid validate(std::size_t          size,
                                 Element              unit,
                                 std::vector<Element> flat_table);

    //! Same as validate() but returns the violation instead of throwing.
    static std::optional<ValidationError>
    check(std::size_t size, Element unit, std::span<Element const> flat_table);

    static FinOrdMonoid trivial();

    std::size_t size() const noexcept {
      return size_;
    }
    Element unit() const noexcept {
      return unit_;
    }
    Element mul(Element a, Element b) const {
      return table_[a * size_ + b];
    }
    Element top() const noexcept {
      return size_ - 1;
    }
    Element bottom() const noexcept {
      return 0;
    }
    std::vector<Element> const& flat_table() const noexcept {
      return table_;
    }
    std::vector<std::vector<Element>> rows() const;

    bool operator==(FinOrdMonoid const&) const = default;

   private:
    FinOrdMonoid(std::size_t size, Element unit, std::vector<Element> table)
        : size_(size), unit_(unit), table_(std::move(table)) {}

    std::size_t          size_;
    Element              unit_;
    std::vector<Element> table_;
  };

  struct ElementMap {
    std::size_t          source_size = 0;
    std::size_t          target_size = 0;
    std::vector<Element> image;

    Element operator()(Element a) const {
      return image[a];
    }
    bool operator==(ElementMap const&) const = default;
  };

  ElementMap identity_map(std::size_t size);
  //! (g after f): first f, then g.
  ElementMap compose_maps(ElementMap const& f, ElementMap const& g);

  Element mul(FinOrdMonoid const& m, Element a, Element b);

  // Cases of the top/bottom lemma for a non-trivial algebra.
  enum class TopBottomCase {
    AbsorbingBottom = 1,  // bottom absorbs everything (C2)
    AbsorbingTop    = 2,  // top absorbs everything (C2d)
    LeftAbsorbing   = 3,  // bottom*top = bottom, top*bottom = top (G3)
    RightAbsorbing  = 4   // bottom*top = top, top*bottom = bottom (D3)
  };

  struct Classification {
    bool                         commutative = true;
    std::optional<TopBottomCase> top_bottom_case;
  };

  Classification classify(FinOrdMonoid const& m);

  //! Reverses the order: element i of the result is element n-1-i of m.
  FinOrdMonoid order_dual(FinOrdMonoid const& m);
  //! Same order, transposed table (a*b := b*a).
  FinOrdMonoid opposite(FinOrdMonoid const& m);

  struct Subalgebra {
    FinOrdMonoid algebra;
    ElementMap   inclusion;
  };

  //! The subalgebra with carrier S together with the unit. Any such set is
  //! closed under the product because ab is always one of a, b.
  Subalgebra generated_subalgebra(FinOrdMonoid const&   m,
                                  std::span<Element const> generators);

  enum class MapFailure {
    WrongSize,
    UnitNotPreserved,     // witness (unit)
    ProductNotPreserved,  // witness (a, b)
    NotMonotone,          // witness (a, b) with a < b, f(a) > f(b)
    NotInjective          // witness (a, b) with a < b, f(a) = f(b)
  };

  struct MapWitness {
    MapFailure           kind;
    std::vector<Element> elements;
  };

  struct MapCheck {
    bool                      is_homomorphism = false;
    bool                      is_embedding    = false;
    std::optional<MapWitness> witness;
  };

  MapCheck check_map(FinOrdMonoid const& source,
                     FinOrdMonoid const& target,
                     ElementMap const&   f);

  // Text format: "n unit" then n rows of n integers; '#' lines are comments.
  FinOrdMonoid read_algebra(std::istream& in);
  FinOrdMonoid parse_algebra(std::string const& text);
  std::string  format_algebra(FinOrdMonoid const& m);

}  // namespace lmonoid

#endif  // LMONOID_MONOID_HPP
