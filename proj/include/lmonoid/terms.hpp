#ifndef LMONOID_TERMS_HPP
#define LMONOID_TERMS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lmonoid/caps.hpp"
#include "lmonoid/monoid.hpp"

namespace lmonoid {

  //! Immutable l-monoid term over {*, ^, v, e, x1, x2, ...}. Copies share
  //! structure.
  class Term {
   public:
    enum class Kind : unsigned char { Variable, Unit, Product, Meet, Join };

    static Term variable(std::size_t index);  // index >= 1
    static Term unit();

    Kind        kind() const noexcept;
    std::size_t var_index() const noexcept;  // 0 unless kind() == Variable
    Term const& left() const;
    Term const& right() const;

    bool is_binary() const noexcept {
      auto k = kind();
      return k == Kind::Product || k == Kind::Meet || k == Kind::Join;
    }

    //! Largest variable index occurring, 0 for closed terms.
    std::size_t max_variable() const;
    //! Sorted distinct variable indices.
    std::vector<std::size_t> variables() const;
    std::size_t              node_count() const;

    bool operator==(Term const& other) const;

    friend Term operator*(Term const& lhs, Term const& rhs);
    friend Term meet(Term const& lhs, Term const& rhs);
    friend Term join(Term const& lhs, Term const& rhs);

   private:
    struct Node;
    explicit Term(std::shared_ptr<Node const> node) : node_(std::move(node)) {}
    static Term binary(Kind k, Term const& lhs, Term const& rhs);

    std::shared_ptr<Node const> node_;
  };

  Term x(std::size_t index);  // shorthand for Term::variable

  //! Every equation is stored as an equality; s <= t is the equality
  //! (s ^ t) = s.
  struct Equation {
    Term lhs;
    Term rhs;

    static Equation equality(Term s, Term t);
    static Equation leq(Term s, Term t);

    //! (s, t) when the equation has the shape (s ^ t) = s.
    std::optional<std::pair<Term, Term>> as_leq() const;
    std::size_t                          max_variable() const;
    std::vector<std::size_t>             variables() const;

    bool operator==(Equation const&) const = default;
  };

  //! valuation[i] is the value of x_{i+1}.
  using Valuation = std::vector<Element>;

  //! On a chain meet is min and join is max of ranks.
  Element eval(Term const& t, FinOrdMonoid const& m, Valuation const& valuation);

  //! Valuations visited (or the factored cost, see satisfies()).
  std::size_t evaluation_cost(FinOrdMonoid const& m, Equation const& eq);

  //! Exhaustive check over every valuation of the variables in eq.
  //!
  //! When the variables can be split into a low block and a high block such
  //! that every maximal subterm depending on variables depends on one block
  //! only, the two blocks are enumerated separately and only the distinct
  //! value tuples of the frontier subterms are combined. This is still a
  //! check over all valuations; the cost is
  //!   n^|low| + n^|high| + (#distinct low tuples) * (#distinct high tuples)
  //! and CapExceeded is thrown when its a-priori bound exceeds `cap`.
  bool satisfies(FinOrdMonoid const& m, Equation const& eq, std::size_t cap = caps::evaluation);

  //! The lexicographically first failing valuation (x1 most significant);
  //! variables not occurring in eq are set to 0.
  std::optional<Valuation>
  failure_witness(FinOrdMonoid const& m, Equation const& eq, std::size_t cap = caps::evaluation);

  //! Plain enumeration of all valuations, no factoring.
  std::optional<Valuation> failure_witness_naive(FinOrdMonoid const& m,
                                                 Equation const&     eq,
                                                 std::size_t         cap = caps::evaluation);

  Term     dual_term(Term const& t);
  Equation dual_equation(Equation const& eq);

  //! Replaces x_i by replacement[i-1] where present.
  Term substitute(Term const& t, std::vector<std::optional<Term>> const& replacement);
  //! Removes unit factors (e*t, t*e -> t) and collapses t^t, tvt -> t,
  //! bottom-up.
  Term simplify_units(Term const& t);

  // The alternating commutative chains. The numeric labels of C_n are
  // {e, 1, ..., n-1} with product = label max (e counts as 0); labels_cn(n)
  // lists labels by rank, 0 standing for e.
  std::vector<std::size_t> labels_cn(std::size_t n);
  std::vector<std::size_t> labels_cnd(std::size_t n);
  FinOrdMonoid             make_cn(std::size_t n);
  FinOrdMonoid             make_cnd(std::size_t n);
  std::string              format_labels(std::vector<std::size_t> const& labels_by_rank);

  struct SigmaSides {
    Term lower;  // s_n
    Term upper;  // t_n
  };
  SigmaSides sigma_sides(std::size_t n);  // n >= 2

  //! sigma_n := s_n <= t_n over x1 .. x_{n-1}.
  Equation sigma(std::size_t n);
  //! t_n^dual <= s_n^dual with variables shifted by `offset` (x_k -> x_{k+offset}).
  Equation sigma_dual(std::size_t n, std::size_t offset = 0);
  //! gamma_n := s_n * t_n^dual(y) <= t_n * s_n^dual(y), y_k = x_{n-1+k}.
  Equation gamma(std::size_t n);  // n >= 3

  struct AxiomWitness {
    Valuation    valuation;
    FinOrdMonoid subalgebra;
  };

  //! If m fails sigma_n: the first failing valuation and the subalgebra it
  //! generates.
  std::optional<AxiomWitness> axiom_witness_subalgebra(FinOrdMonoid const& m, std::size_t n);

  // Text syntax: x1 x2 ..., e, '*', '^', 'v', parentheses. '*' binds
  // tighter than '^' and 'v'; '^' and 'v' may not be mixed without
  // parentheses. Equations: "s <= t" or "s = t".
  Term        parse_term(std::string_view text);
  Equation    parse_equation(std::string_view text);
  std::string format_term(Term const& t);
  std::string format_equation(Equation const& eq);
  std::string format_valuation(Valuation const& v);

}  // namespace lmonoid

#endif  // LMONOID_TERMS_HPP
