#ifndef LMONOID_AMALGAMATION_HPP
#define LMONOID_AMALGAMATION_HPP

#include <optional>
#include <vector>

#include "lmonoid/caps.hpp"
#include "lmonoid/monoid.hpp"
#include "lmonoid/nested_sum.hpp"

namespace lmonoid {

  struct WordEmbedding {
    SumWord     source;
    SumWord     target;
    PositionMap f;

    bool       valid() const;
    ElementMap lift() const;  // throws InvalidWitness if !valid()

    bool operator==(WordEmbedding const&) const = default;
  };

  //! left: base -> M, right: base -> N.
  struct Span {
    SumWord       base;
    WordEmbedding left;
    WordEmbedding right;

    //! Throws InvalidWitness on a bad position list.
    static Span make(SumWord const& base, SumWord const& m, PositionMap const& f,
                     SumWord const& n, PositionMap const& g);
  };

  struct Amalgam {
    SumWord       result;
    WordEmbedding j1;  // M -> result
    WordEmbedding j2;  // N -> result
  };

  //! All witnesses source -> target, lexicographic in the position lists.
  std::vector<WordEmbedding> all_word_embeddings(SumWord const& source, SumWord const& target,
                                                 std::size_t cap = caps::enumeration_max);

  //! A base position whose commutative letter goes to G3 on one side and to
  //! D3 on the other.
  std::optional<std::size_t> incompatibility_certificate(Span const& span);
  bool                       is_compatible(Span const& span);

  //! Merges M and N along the shared positions. In each gap the unshared
  //! M letters come before the unshared N letters; a shared position takes
  //! the larger of its two letters. Throws IncompatibleSpan.
  Amalgam amalgamate(Span const& span);

  struct AmalgamCheck {
    bool commutes         = false;
    bool embeddings_valid = false;
    bool strong           = false;
  };
  AmalgamCheck verify_amalgam(Span const& span, Amalgam const& amalgam);

  //! First amalgam with result size <= max_size, trying words by size and
  //! then lexicographically.
  std::optional<Amalgam> search_amalgam(Span const& span, std::size_t max_size,
                                        std::size_t cap = caps::amalgam_search);

  struct OneSidedSolution {
    SumWord    target;
    ElementMap j1;  // homomorphism compose(M) -> compose(target)
    ElementMap j2;  // embedding compose(N) -> compose(target)
  };

  //! Homomorphism j1 from M and embedding j2 from N into one of the
  //! candidates with j1 . f = j2 . g.
  std::optional<OneSidedSolution> one_sided_amalgam_search(
      Span const& span, std::vector<SumWord> const& candidates,
      std::size_t cap = caps::map_search);

}  // namespace lmonoid

#endif  // LMONOID_AMALGAMATION_HPP
