#include <cctype>

#include "lmonoid/terms.hpp"

namespace lmonoid {

  namespace {

    class Parser {
     public:
      explicit Parser(std::string_view text) : s_(text) {}

      Term expr() {
        Term        t  = product();
        char        op = 0;
        while (true) {
          skip();
          if (pos_ >= s_.size() || (s_[pos_] != '^' && s_[pos_] != 'v')) {
            return t;
          }
          char const c = s_[pos_];
          if (op && c != op) {
            fail("mixing ^ and v needs parentheses");
          }
          op = c;
          ++pos_;
          Term r = product();
          t      = c == '^' ? meet(t, r) : join(t, r);
        }
      }

      bool at_end() {
        skip();
        return pos_ >= s_.size();
      }

      // Consumes "<=" or "="; returns true for "<=".
      bool relation() {
        skip();
        if (s_.substr(pos_, 2) == "<=") {
          pos_ += 2;
          return true;
        }
        if (pos_ < s_.size() && s_[pos_] == '=') {
          ++pos_;
          return false;
        }
        fail("expected '=' or '<='");
      }

      [[noreturn]] void fail(std::string const& why) const {
        throw ParseError("term: " + why + " at column " + std::to_string(pos_ + 1) + " in '"
                         + std::string(s_) + "'");
      }

     private:
      void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }

      Term product() {
        Term t = atom();
        while (true) {
          skip();
          if (pos_ >= s_.size() || s_[pos_] != '*') {
            return t;
          }
          ++pos_;
          t = t * atom();
        }
      }

      Term atom() {
        skip();
        if (pos_ >= s_.size()) {
          fail("unexpected end of input");
        }
        char const c = s_[pos_];
        if (c == '(') {
          ++pos_;
          Term t = expr();
          skip();
          if (pos_ >= s_.size() || s_[pos_] != ')') {
            fail("expected ')'");
          }
          ++pos_;
          return t;
        }
        if (c == 'e') {
          ++pos_;
          return Term::unit();
        }
        if (c == 'x') {
          ++pos_;
          std::size_t const start = pos_;
          std::size_t       idx   = 0;
          while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            idx = idx * 10 + static_cast<std::size_t>(s_[pos_] - '0');
            if (idx > 1'000'000) {
              fail("variable index too large");
            }
            ++pos_;
          }
          if (pos_ == start || idx == 0) {
            fail("expected variable index >= 1 after 'x'");
          }
          return x(idx);
        }
        fail(std::string("unexpected character '") + c + "'");
      }

      std::string_view s_;
      std::size_t      pos_ = 0;
    };

    enum class Side { Left, Right };

    bool needs_parens(Term::Kind parent, Term::Kind child, Side side) {
      using K = Term::Kind;
      if (child == K::Variable || child == K::Unit) {
        return false;
      }
      if (parent == K::Product) {
        return child != K::Product || side == Side::Right;
      }
      if (child == K::Product) {
        return false;
      }
      return child != parent || side == Side::Right;
    }

    void format_into(Term const& t, std::string& out) {
      switch (t.kind()) {
        case Term::Kind::Variable:
          out += 'x';
          out += std::to_string(t.var_index());
          return;
        case Term::Kind::Unit:
          out += 'e';
          return;
        default:
          break;
      }
      auto child = [&](Term const& c, Side side) {
        bool const p = needs_parens(t.kind(), c.kind(), side);
        if (p) {
          out += '(';
        }
        format_into(c, out);
        if (p) {
          out += ')';
        }
      };
      child(t.left(), Side::Left);
      out += t.kind() == Term::Kind::Product ? "*"
             : t.kind() == Term::Kind::Meet  ? " ^ "
                                             : " v ";
      child(t.right(), Side::Right);
    }

  }  // namespace

  Term parse_term(std::string_view text) {
    Parser p(text);
    Term   t = p.expr();
    if (!p.at_end()) {
      p.fail("trailing input");
    }
    return t;
  }

  Equation parse_equation(std::string_view text) {
    Parser     p(text);
    Term       s   = p.expr();
    bool const leq = p.relation();
    Term       t   = p.expr();
    if (!p.at_end()) {
      p.fail("trailing input");
    }
    return leq ? Equation::leq(std::move(s), std::move(t))
               : Equation::equality(std::move(s), std::move(t));
  }

  std::string format_term(Term const& t) {
    std::string out;
    format_into(t, out);
    return out;
  }

  std::string format_equation(Equation const& eq) {
    if (auto st = eq.as_leq()) {
      return format_term(st->first) + " <= " + format_term(st->second);
    }
    return format_term(eq.lhs) + " = " + format_term(eq.rhs);
  }

  std::string format_valuation(Valuation const& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) {
        out += ' ';
      }
      out += 'x' + std::to_string(i + 1) + '=' + std::to_string(v[i]);
    }
    return out;
  }

}  // namespace lmonoid
