#include "lmonoid/terms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace lmonoid {

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  struct Term::Node {
    Kind        kind;
    std::size_t var;
    Term        lhs;
    Term        rhs;
  };

  Term Term::variable(std::size_t index) {
    if (index == 0) {
      throw Error("variable indices start at 1");
    }
    return Term(std::make_shared<Node const>(
        Node{Kind::Variable, index, Term(nullptr), Term(nullptr)}));
  }

  Term Term::unit() {
    static Term const e(
        std::make_shared<Node const>(Node{Kind::Unit, 0, Term(nullptr), Term(nullptr)}));
    return e;
  }

  Term Term::binary(Kind k, Term const& lhs, Term const& rhs) {
    return Term(std::make_shared<Node const>(Node{k, 0, lhs, rhs}));
  }

  Term::Kind Term::kind() const noexcept {
    return node_->kind;
  }
  std::size_t Term::var_index() const noexcept {
    return node_->var;
  }
  Term const& Term::left() const {
    if (!is_binary()) {
      throw Error("Term::left on a leaf");
    }
    return node_->lhs;
  }
  Term const& Term::right() const {
    if (!is_binary()) {
      throw Error("Term::right on a leaf");
    }
    return node_->rhs;
  }

  std::size_t Term::max_variable() const {
    switch (kind()) {
      case Kind::Variable:
        return var_index();
      case Kind::Unit:
        return 0;
      default:
        return std::max(left().max_variable(), right().max_variable());
    }
  }

  namespace {
    void collect_variables(Term const& t, std::vector<std::size_t>& out) {
      if (t.kind() == Term::Kind::Variable) {
        out.push_back(t.var_index());
      } else if (t.is_binary()) {
        collect_variables(t.left(), out);
        collect_variables(t.right(), out);
      }
    }
  }  // namespace

  std::vector<std::size_t> Term::variables() const {
    std::vector<std::size_t> v;
    collect_variables(*this, v);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  std::size_t Term::node_count() const {
    return is_binary() ? 1 + left().node_count() + right().node_count() : 1;
  }

  bool Term::operator==(Term const& other) const {
    if (node_ == other.node_) {
      return true;
    }
    if (kind() != other.kind()) {
      return false;
    }
    switch (kind()) {
      case Kind::Variable:
        return var_index() == other.var_index();
      case Kind::Unit:
        return true;
      default:
        return left() == other.left() && right() == other.right();
    }
  }

  Term operator*(Term const& lhs, Term const& rhs) {
    return Term::binary(Term::Kind::Product, lhs, rhs);
  }
  Term meet(Term const& lhs, Term const& rhs) {
    return Term::binary(Term::Kind::Meet, lhs, rhs);
  }
  Term join(Term const& lhs, Term const& rhs) {
    return Term::binary(Term::Kind::Join, lhs, rhs);
  }

  Term x(std::size_t index) {
    return Term::variable(index);
  }

  ////////////////////////////////////////////////////////////////////////
  // Equation
  ////////////////////////////////////////////////////////////////////////

  Equation Equation::equality(Term s, Term t) {
    return Equation{std::move(s), std::move(t)};
  }

  Equation Equation::leq(Term s, Term t) {
    return Equation{meet(s, t), s};
  }

  std::optional<std::pair<Term, Term>> Equation::as_leq() const {
    if (lhs.kind() == Term::Kind::Meet && lhs.left() == rhs) {
      return std::make_pair(lhs.left(), lhs.right());
    }
    return std::nullopt;
  }

  std::size_t Equation::max_variable() const {
    return std::max(lhs.max_variable(), rhs.max_variable());
  }

  std::vector<std::size_t> Equation::variables() const {
    auto v = lhs.variables();
    auto w = rhs.variables();
    v.insert(v.end(), w.begin(), w.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Postfix program; Variable instructions carry the valuation slot.
    class Program {
     public:
      explicit Program(Term const& t) {
        std::size_t depth = 0;
        emit(t, depth);
        stack_.resize(max_depth_ + 1);
      }

      Element run(FinOrdMonoid const& m, Valuation const& v) const {
        Element*    st = stack_.data();
        std::size_t sp = 0;
        for (auto const& ins : code_) {
          switch (ins.kind) {
            case Term::Kind::Variable:
              st[sp++] = v[ins.slot];
              break;
            case Term::Kind::Unit:
              st[sp++] = m.unit();
              break;
            case Term::Kind::Product:
              --sp;
              st[sp - 1] = m.mul(st[sp - 1], st[sp]);
              break;
            case Term::Kind::Meet:
              --sp;
              st[sp - 1] = std::min(st[sp - 1], st[sp]);
              break;
            case Term::Kind::Join:
              --sp;
              st[sp - 1] = std::max(st[sp - 1], st[sp]);
              break;
          }
        }
        return st[0];
      }

     private:
      struct Instr {
        Term::Kind  kind;
        std::size_t slot;
      };

      void emit(Term const& t, std::size_t depth) {
        max_depth_ = std::max(max_depth_, depth);
        if (t.is_binary()) {
          emit(t.left(), depth);
          emit(t.right(), depth + 1);
          code_.push_back({t.kind(), 0});
        } else {
          code_.push_back({t.kind(), t.kind() == Term::Kind::Variable ? t.var_index() - 1 : 0});
        }
      }

      std::vector<Instr>           code_;
      std::size_t                  max_depth_ = 0;
      mutable std::vector<Element> stack_;
    };

    double power(std::size_t base, std::size_t exp) {
      return std::pow(static_cast<double>(base), static_cast<double>(exp));
    }

    std::size_t clamp_cost(double c) {
      return c >= 1.8e19 ? std::numeric_limits<std::size_t>::max()
                         : static_cast<std::size_t>(c);
    }

    // Visits every assignment of `vars` (first most significant) in
    // lexicographic order; other slots of v are left untouched.
    template <typename F>
    bool for_each_assignment(std::size_t                     n,
                             std::vector<std::size_t> const& vars,
                             Valuation&                      v,
                             F&&                             visit) {
      for (auto i : vars) {
        v[i - 1] = 0;
      }
      while (true) {
        if (visit()) {
          return true;
        }
        std::size_t k = vars.size();
        while (k > 0) {
          auto& slot = v[vars[k - 1] - 1];
          if (++slot < n) {
            break;
          }
          slot = 0;
          --k;
        }
        if (k == 0) {
          return false;
        }
      }
    }

    // Factored evaluation plan for a split of the used variables into a low
    // block (indices <= low_max) and a high block.
    struct Split {
      std::size_t       k = 0;  // number of low variables
      std::vector<Term> low_frontier;
      std::vector<Term> high_frontier;
      Term              lhs_skeleton = Term::unit();
      Term              rhs_skeleton = Term::unit();
    };

    struct VarRange {
      std::size_t lo = std::numeric_limits<std::size_t>::max();
      std::size_t hi = 0;
      bool        empty() const {
        return hi == 0;
      }
    };

    VarRange var_range(Term const& t) {
      if (t.kind() == Term::Kind::Variable) {
        return {t.var_index(), t.var_index()};
      }
      if (t.kind() == Term::Kind::Unit) {
        return {};
      }
      auto a = var_range(t.left()), b = var_range(t.right());
      return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
    }

    std::size_t intern(std::vector<Term>& pool, Term const& t) {
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i] == t) {
          return i;
        }
      }
      pool.push_back(t);
      return pool.size() - 1;
    }

    // Replaces maximal single-block subterms by placeholders: low frontier
    // term i becomes x_{i+1}, high frontier term j becomes x_{base+j+1}
    // where base is fixed afterwards (high placeholders are re-indexed).
    Term skeleton(Term const& t, std::size_t low_max, Split& s) {
      VarRange const r = var_range(t);
      if (r.empty()) {
        return t;
      }
      if (r.hi <= low_max) {
        return x(intern(s.low_frontier, t) + 1);
      }
      if (r.lo > low_max) {
        // Tag high placeholders with a large offset; fixed up in make_split.
        return x(1'000'000 + intern(s.high_frontier, t));
      }
      Term const l = skeleton(t.left(), low_max, s);
      Term const rr = skeleton(t.right(), low_max, s);
      switch (t.kind()) {
        case Term::Kind::Product:
          return l * rr;
        case Term::Kind::Meet:
          return meet(l, rr);
        default:
          return join(l, rr);
      }
    }

    Term shift_high(Term const& t, std::size_t base) {
      if (t.kind() == Term::Kind::Variable) {
        return t.var_index() >= 1'000'000 ? x(base + t.var_index() - 1'000'000 + 1) : t;
      }
      if (!t.is_binary()) {
        return t;
      }
      Term const l = shift_high(t.left(), base), r = shift_high(t.right(), base);
      switch (t.kind()) {
        case Term::Kind::Product:
          return l * r;
        case Term::Kind::Meet:
          return meet(l, r);
        default:
          return join(l, r);
      }
    }

    Split make_split(Equation const& eq, std::vector<std::size_t> const& used, std::size_t k) {
      Split s;
      s.k                     = k;
      std::size_t const low_max = used[k - 1];
      Term              l       = skeleton(eq.lhs, low_max, s);
      Term              r       = skeleton(eq.rhs, low_max, s);
      s.lhs_skeleton          = shift_high(l, s.low_frontier.size());
      s.rhs_skeleton          = shift_high(r, s.low_frontier.size());
      return s;
    }

    double split_cost(std::size_t n, Split const& s, std::size_t nvars) {
      std::size_t const kl = s.k, kh = nvars - s.k;
      double const      low_tuples
          = std::min(power(n, kl), power(n, s.low_frontier.size()));
      double const high_tuples
          = std::min(power(n, kh), power(n, s.high_frontier.size()));
      return power(n, kl) + power(n, kh) + low_tuples * high_tuples;
    }

    struct Plan {
      double               cost;
      std::optional<Split> split;
    };

    Plan plan(FinOrdMonoid const& m, Equation const& eq) {
      auto const used = eq.variables();
      Plan       best{power(m.size(), used.size()), std::nullopt};
      for (std::size_t k = 1; k < used.size(); ++k) {
        Split  s = make_split(eq, used, k);
        double c = split_cost(m.size(), s, used.size());
        if (c < best.cost) {
          best = {c, std::move(s)};
        }
      }
      return best;
    }

    struct BlockTuples {
      std::vector<std::vector<Element>> values;
      std::vector<Valuation>            first_assignment;
    };

    BlockTuples enumerate_block(FinOrdMonoid const&             m,
                                std::vector<std::size_t> const& vars,
                                std::vector<Term> const&        frontier,
                                std::size_t                     width) {
      std::vector<Program> progs;
      for (auto const& t : frontier) {
        progs.emplace_back(t);
      }
      BlockTuples                                    out;
      std::map<std::vector<Element>, std::size_t>    seen;
      Valuation                                      v(width, 0);
      std::vector<Element>                           tuple(frontier.size());
      for_each_assignment(m.size(), vars, v, [&] {
        for (std::size_t i = 0; i < progs.size(); ++i) {
          tuple[i] = progs[i].run(m, v);
        }
        if (seen.emplace(tuple, out.values.size()).second) {
          out.values.push_back(tuple);
          out.first_assignment.push_back(v);
        }
        return false;
      });
      return out;
    }

    std::optional<Valuation> witness_factored(FinOrdMonoid const& m,
                                              Equation const&     eq,
                                              Split const&        s) {
      auto const        used  = eq.variables();
      std::size_t const width = eq.max_variable();
      std::vector<std::size_t> low(used.begin(), used.begin() + s.k);
      std::vector<std::size_t> high(used.begin() + s.k, used.end());
      BlockTuples const lows  = enumerate_block(m, low, s.low_frontier, width);
      BlockTuples const highs = enumerate_block(m, high, s.high_frontier, width);

      Program const   lhs(s.lhs_skeleton), rhs(s.rhs_skeleton);
      std::size_t const nl = s.low_frontier.size();
      Valuation       place(nl + s.high_frontier.size(), 0);
      for (std::size_t i = 0; i < lows.values.size(); ++i) {
        std::copy(lows.values[i].begin(), lows.values[i].end(), place.begin());
        for (std::size_t j = 0; j < highs.values.size(); ++j) {
          std::copy(highs.values[j].begin(), highs.values[j].end(), place.begin() + nl);
          if (lhs.run(m, place) != rhs.run(m, place)) {
            Valuation w(width, 0);
            for (auto vi : low) {
              w[vi - 1] = lows.first_assignment[i][vi - 1];
            }
            for (auto vi : high) {
              w[vi - 1] = highs.first_assignment[j][vi - 1];
            }
            return w;
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace

  Element eval(Term const& t, FinOrdMonoid const& m, Valuation const& valuation) {
    std::size_t const mv = t.max_variable();
    if (mv > valuation.size()) {
      throw UnboundVariable(valuation.size() + 1);
    }
    for (Element a : valuation) {
      if (a >= m.size()) {
        throw Error("valuation value " + std::to_string(a) + " out of range");
      }
    }
    return Program(t).run(m, valuation);
  }

  std::size_t evaluation_cost(FinOrdMonoid const& m, Equation const& eq) {
    return clamp_cost(plan(m, eq).cost);
  }

  std::optional<Valuation>
  failure_witness_naive(FinOrdMonoid const& m, Equation const& eq, std::size_t cap) {
    auto const   used = eq.variables();
    double const cost = power(m.size(), used.size());
    if (cost > static_cast<double>(cap)) {
      throw CapExceeded("valuations", clamp_cost(cost), cap);
    }
    Program const            lhs(eq.lhs), rhs(eq.rhs);
    Valuation                v(eq.max_variable(), 0);
    std::optional<Valuation> result;
    for_each_assignment(m.size(), used, v, [&] {
      if (lhs.run(m, v) != rhs.run(m, v)) {
        result = v;
        return true;
      }
      return false;
    });
    return result;
  }

  std::optional<Valuation>
  failure_witness(FinOrdMonoid const& m, Equation const& eq, std::size_t cap) {
    Plan const p = plan(m, eq);
    if (p.cost > static_cast<double>(cap)) {
      throw CapExceeded("valuations", clamp_cost(p.cost), cap);
    }
    if (!p.split) {
      return failure_witness_naive(m, eq, std::numeric_limits<std::size_t>::max());
    }
    return witness_factored(m, eq, *p.split);
  }

  bool satisfies(FinOrdMonoid const& m, Equation const& eq, std::size_t cap) {
    return !failure_witness(m, eq, cap).has_value();
  }

  ////////////////////////////////////////////////////////////////////////
  // Duality and substitution
  ////////////////////////////////////////////////////////////////////////

  Term dual_term(Term const& t) {
    switch (t.kind()) {
      case Term::Kind::Product:
        return dual_term(t.left()) * dual_term(t.right());
      case Term::Kind::Meet:
        return join(dual_term(t.left()), dual_term(t.right()));
      case Term::Kind::Join:
        return meet(dual_term(t.left()), dual_term(t.right()));
      default:
        return t;
    }
  }

  Equation dual_equation(Equation const& eq) {
    return Equation::equality(dual_term(eq.lhs), dual_term(eq.rhs));
  }

  Term substitute(Term const& t, std::vector<std::optional<Term>> const& replacement) {
    switch (t.kind()) {
      case Term::Kind::Variable: {
        std::size_t const i = t.var_index() - 1;
        return i < replacement.size() && replacement[i] ? *replacement[i] : t;
      }
      case Term::Kind::Unit:
        return t;
      case Term::Kind::Product:
        return substitute(t.left(), replacement) * substitute(t.right(), replacement);
      case Term::Kind::Meet:
        return meet(substitute(t.left(), replacement), substitute(t.right(), replacement));
      case Term::Kind::Join:
        return join(substitute(t.left(), replacement), substitute(t.right(), replacement));
    }
    return t;
  }

  Term simplify_units(Term const& t) {
    if (!t.is_binary()) {
      return t;
    }
    Term const l = simplify_units(t.left());
    Term const r = simplify_units(t.right());
    switch (t.kind()) {
      case Term::Kind::Product:
        if (l.kind() == Term::Kind::Unit) {
          return r;
        }
        if (r.kind() == Term::Kind::Unit) {
          return l;
        }
        return l * r;
      case Term::Kind::Meet:
        return l == r ? l : meet(l, r);
      default:
        return l == r ? l : join(l, r);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // C_n, C_n^dual and the axiom families
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Labels below e have parity `neg_parity` (descending from the largest),
    // labels above e the other parity (ascending).
    std::vector<std::size_t> alternating_labels(std::size_t n, std::size_t neg_parity) {
      if (n == 0) {
        throw Error("C_n needs n >= 1");
      }
      std::vector<std::size_t> ranks;
      for (std::size_t k = n - 1; k >= 1; --k) {
        if (k % 2 == neg_parity) {
          ranks.push_back(k);
        }
      }
      ranks.push_back(0);
      for (std::size_t k = 1; k + 1 <= n - 1 + 1 && k <= n - 1; ++k) {
        if (k % 2 != neg_parity) {
          ranks.push_back(k);
        }
      }
      return ranks;
    }

    FinOrdMonoid from_labels(std::vector<std::size_t> const& labels) {
      std::size_t const        n = labels.size();
      std::vector<std::size_t> rank_of(n);
      Element                  unit = 0;
      for (std::size_t r = 0; r < n; ++r) {
        rank_of[labels[r]] = r;
        if (labels[r] == 0) {
          unit = r;
        }
      }
      std::vector<Element> t(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          t[a * n + b] = rank_of[std::max(labels[a], labels[b])];
        }
      }
      return FinOrdMonoid::validate(n, unit, std::move(t));
    }
  }  // namespace

  std::vector<std::size_t> labels_cn(std::size_t n) {
    return alternating_labels(n, (n + 1) % 2);
  }

  std::vector<std::size_t> labels_cnd(std::size_t n) {
    return alternating_labels(n, n % 2);
  }

  FinOrdMonoid make_cn(std::size_t n) {
    return from_labels(labels_cn(n));
  }

  FinOrdMonoid make_cnd(std::size_t n) {
    return from_labels(labels_cnd(n));
  }

  std::string format_labels(std::vector<std::size_t> const& labels) {
    std::string out;
    for (std::size_t r = 0; r < labels.size(); ++r) {
      if (r) {
        out += " < ";
      }
      out += labels[r] == 0 ? std::string("e") : std::to_string(labels[r]);
    }
    return out;
  }

  SigmaSides sigma_sides(std::size_t n) {
    if (n < 2) {
      throw Error("sigma_n needs n >= 2");
    }
    SigmaSides s{x(1), Term::unit()};
    for (std::size_t m = 2; m < n; ++m) {
      Term const step = x(m - 1) * x(m);
      if ((m + 1) % 2 == 0) {
        s.lower = meet(s.lower, step);
      } else {
        s.upper = join(s.upper, step);
      }
    }
    return s;
  }

  Equation sigma(std::size_t n) {
    auto s = sigma_sides(n);
    return Equation::leq(s.lower, s.upper);
  }

  namespace {
    std::vector<std::optional<Term>> shift(std::size_t count, std::size_t offset) {
      std::vector<std::optional<Term>> rep(count);
      for (std::size_t k = 1; k <= count; ++k) {
        rep[k - 1] = x(k + offset);
      }
      return rep;
    }
  }  // namespace

  Equation sigma_dual(std::size_t n, std::size_t offset) {
    auto       s   = sigma_sides(n);
    auto const rep = shift(n - 1, offset);
    return Equation::leq(dual_term(substitute(s.upper, rep)),
                         dual_term(substitute(s.lower, rep)));
  }

  Equation gamma(std::size_t n) {
    if (n < 3) {
      throw Error("gamma_n needs n >= 3");
    }
    auto       s   = sigma_sides(n);
    auto const rep = shift(n - 1, n - 1);
    Term const lower_dual = dual_term(substitute(s.lower, rep));
    Term const upper_dual = dual_term(substitute(s.upper, rep));
    return Equation::leq(s.lower * upper_dual, s.upper * lower_dual);
  }

  std::optional<AxiomWitness> axiom_witness_subalgebra(FinOrdMonoid const& m, std::size_t n) {
    auto w = failure_witness(m, sigma(n));
    if (!w) {
      return std::nullopt;
    }
    auto sub = generated_subalgebra(m, *w);
    return AxiomWitness{std::move(*w), std::move(sub.algebra)};
  }

}  // namespace lmonoid
