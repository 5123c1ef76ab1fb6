#include "lmonoid/monoid.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>

namespace lmonoid {

  std::string to_string(Violation v) {
    switch (v) {
      case Violation::NotAssociative:
        return "NotAssociative";
      case Violation::NoIdentity:
        return "NoIdentity";
      case Violation::NotMonotone:
        return "NotMonotone";
      case Violation::NotIdempotent:
        return "NotIdempotent";
      case Violation::ChoiceViolation:
        return "ChoiceViolation";
      case Violation::OutOfRange:
        return "OutOfRange";
    }
    return "?";
  }

  namespace {
    std::string describe(Violation kind, std::vector<Element> const& w) {
      std::string s = to_string(kind) + "(";
      for (std::size_t i = 0; i < w.size(); ++i) {
        s += (i ? "," : "") + std::to_string(w[i]);
      }
      return s + ")";
    }
  }  // namespace

  ValidationError::ValidationError(Violation kind, std::vector<Element> witness)
      : Error(describe(kind, witness)), kind_(kind), witness_(std::move(witness)) {}

  ////////////////////////////////////////////////////////////////////////
  // FinOrdMonoid
  ////////////////////////////////////////////////////////////////////////

  std::optional<ValidationError>
  FinOrdMonoid::check(std::size_t size, Element unit, std::span<Element const> t) {
    std::size_t const n = size;
    if (n == 0) {
      return ValidationError(Violation::OutOfRange, {0, 0});
    }
    if (unit >= n) {
      return ValidationError(Violation::NoIdentity, {unit});
    }
    if (t.size() != n * n) {
      return ValidationError(Violation::OutOfRange, {t.size(), n * n});
    }
    auto at = [&](Element a, Element b) { return t[a * n + b]; };
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (at(a, b) >= n) {
          return ValidationError(Violation::OutOfRange, {a, b});
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (at(unit, a) != a || at(a, unit) != a) {
        return ValidationError(Violation::NoIdentity, {a});
      }
    }
    for (Element a = 0; a < n; ++a) {
      if (at(a, a) != a) {
        return ValidationError(Violation::NotIdempotent, {a});
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (at(a, b) != a && at(a, b) != b) {
          return ValidationError(Violation::ChoiceViolation, {a, b});
        }
      }
    }
    // Adjacent pairs suffice for order-preservation on a chain.
    for (Element a = 0; a + 1 < n; ++a) {
      for (Element c = 0; c < n; ++c) {
        if (at(c, a) > at(c, a + 1) || at(a, c) > at(a + 1, c)) {
          return ValidationError(Violation::NotMonotone, {a, a + 1, c});
        }
      }
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element const ab = at(a, b);
        for (Element c = 0; c < n; ++c) {
          if (at(ab, c) != at(a, at(b, c))) {
            return ValidationError(Violation::NotAssociative, {a, b, c});
          }
        }
      }
    }
    return std::nullopt;
  }

  FinOrdMonoid FinOrdMonoid::validate(std::size_t          size,
                                      Element              unit,
                                      std::vector<Element> flat_table) {
    if (auto err = check(size, unit, flat_table)) {
      throw *err;
    }
    return FinOrdMonoid(size, unit, std::move(flat_table));
  }

  FinOrdMonoid
  FinOrdMonoid::validate(std::size_t                              size,
                         Element                                  unit,
                         std::vector<std::vector<Element>> const& table) {
    std::vector<Element> flat;
    flat.reserve(size * size);
    if (table.size() != size) {
      throw ValidationError(Violation::OutOfRange, {table.size(), size});
    }
    for (auto const& row : table) {
      if (row.size() != size) {
        throw ValidationError(Violation::OutOfRange, {row.size(), size});
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return validate(size, unit, std::move(flat));
  }

  FinOrdMonoid FinOrdMonoid::trivial() {
    return FinOrdMonoid(1, 0, {0});
  }

  std::vector<std::vector<Element>> FinOrdMonoid::rows() const {
    std::vector<std::vector<Element>> out(size_);
    for (Element a = 0; a < size_; ++a) {
      out[a].assign(table_.begin() + a * size_, table_.begin() + (a + 1) * size_);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////

  ElementMap identity_map(std::size_t size) {
    ElementMap f{size, size, std::vector<Element>(size)};
    for (Element a = 0; a < size; ++a) {
      f.image[a] = a;
    }
    return f;
  }

  ElementMap compose_maps(ElementMap const& f, ElementMap const& g) {
    if (f.target_size != g.source_size) {
      throw Error("compose_maps: size mismatch");
    }
    ElementMap h{f.source_size, g.target_size, std::vector<Element>(f.source_size)};
    for (Element a = 0; a < f.source_size; ++a) {
      h.image[a] = g.image[f.image[a]];
    }
    return h;
  }

  Element mul(FinOrdMonoid const& m, Element a, Element b) {
    return m.mul(a, b);
  }

  Classification classify(FinOrdMonoid const& m) {
    Classification result;
    std::size_t const n = m.size();
    for (Element a = 0; a < n && result.commutative; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (m.mul(a, b) != m.mul(b, a)) {
          result.commutative = false;
          break;
        }
      }
    }
    if (n == 1) {
      return result;
    }
    Element const bot = m.bottom(), top = m.top();
    Element const bt = m.mul(bot, top), tb = m.mul(top, bot);
    if (bt == bot && tb == bot) {
      result.top_bottom_case = TopBottomCase::AbsorbingBottom;
    } else if (bt == top && tb == top) {
      result.top_bottom_case = TopBottomCase::AbsorbingTop;
    } else if (bt == bot) {
      result.top_bottom_case = TopBottomCase::LeftAbsorbing;
    } else {
      result.top_bottom_case = TopBottomCase::RightAbsorbing;
    }
    return result;
  }

  FinOrdMonoid order_dual(FinOrdMonoid const& m) {
    std::size_t const    n = m.size();
    std::vector<Element> t(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        t[a * n + b] = n - 1 - m.mul(n - 1 - a, n - 1 - b);
      }
    }
    return FinOrdMonoid::validate(n, n - 1 - m.unit(), std::move(t));
  }

  FinOrdMonoid opposite(FinOrdMonoid const& m) {
    std::size_t const    n = m.size();
    std::vector<Element> t(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        t[a * n + b] = m.mul(b, a);
      }
    }
    return FinOrdMonoid::validate(n, m.unit(), std::move(t));
  }

  Subalgebra generated_subalgebra(FinOrdMonoid const&      m,
                                  std::span<Element const> generators) {
    std::vector<Element> carrier(generators.begin(), generators.end());
    for (Element g : carrier) {
      if (g >= m.size()) {
        throw Error("generated_subalgebra: element " + std::to_string(g)
                    + " out of range");
      }
    }
    carrier.push_back(m.unit());
    std::sort(carrier.begin(), carrier.end());
    carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

    std::size_t const    k = carrier.size();
    std::vector<Element> rank(m.size(), 0);
    for (Element i = 0; i < k; ++i) {
      rank[carrier[i]] = i;
    }
    std::vector<Element> t(k * k);
    Element              unit = 0;
    for (Element i = 0; i < k; ++i) {
      if (carrier[i] == m.unit()) {
        unit = i;
      }
      for (Element j = 0; j < k; ++j) {
        t[i * k + j] = rank[m.mul(carrier[i], carrier[j])];
      }
    }
    return {FinOrdMonoid::validate(k, unit, std::move(t)),
            ElementMap{k, m.size(), std::move(carrier)}};
  }

  MapCheck check_map(FinOrdMonoid const& source,
                     FinOrdMonoid const& target,
                     ElementMap const&   f) {
    MapCheck result;
    auto     fail = [&](MapFailure kind, std::vector<Element> w) {
      result.witness = MapWitness{kind, std::move(w)};
      return result;
    };
    if (f.source_size != source.size() || f.target_size != target.size()
        || f.image.size() != source.size()
        || std::any_of(f.image.begin(), f.image.end(), [&](Element x) {
             return x >= target.size();
           })) {
      return fail(MapFailure::WrongSize, {});
    }
    if (f(source.unit()) != target.unit()) {
      return fail(MapFailure::UnitNotPreserved, {source.unit()});
    }
    std::size_t const n = source.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (f(source.mul(a, b)) != target.mul(f(a), f(b))) {
          return fail(MapFailure::ProductNotPreserved, {a, b});
        }
      }
    }
    for (Element a = 0; a + 1 < n; ++a) {
      if (f(a) > f(a + 1)) {
        return fail(MapFailure::NotMonotone, {a, a + 1});
      }
    }
    result.is_homomorphism = true;
    for (Element a = 0; a + 1 < n; ++a) {
      if (f(a) == f(a + 1)) {
        result.witness = MapWitness{MapFailure::NotInjective, {a, a + 1}};
        return result;
      }
    }
    result.is_embedding = true;
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  FinOrdMonoid parse_algebra(std::string const& text) {
    if (text.empty() || text.back() != '\n') {
      throw ParseError("algebra: missing trailing newline");
    }
    std::istringstream       lines(text);
    std::string              line;
    std::vector<std::string> content;
    while (std::getline(lines, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (!line.empty() && line.front() == '#') {
        continue;
      }
      if (line.find_first_not_of(" \t") == std::string::npos) {
        continue;
      }
      content.push_back(line);
    }
    if (content.empty()) {
      throw ParseError("algebra: empty input");
    }
    auto read_row = [](std::string const& s, std::size_t expected, char const* what) {
      std::istringstream   in(s);
      std::vector<Element> row;
      long long            x;
      while (in >> x) {
        if (x < 0) {
          throw ParseError(std::string("algebra: negative entry in ") + what);
        }
        row.push_back(static_cast<Element>(x));
      }
      if (!in.eof()) {
        throw ParseError(std::string("algebra: non-integer token in ") + what);
      }
      if (row.size() != expected) {
        throw ParseError(std::string("algebra: expected ") + std::to_string(expected)
                         + " integers in " + what + ", got "
                         + std::to_string(row.size()));
      }
      return row;
    };
    auto const header = read_row(content[0], 2, "header");
    std::size_t const n = header[0];
    if (n == 0) {
      throw ParseError("algebra: size must be positive");
    }
    if (content.size() != n + 1) {
      throw ParseError("algebra: expected " + std::to_string(n) + " rows, got "
                       + std::to_string(content.size() - 1));
    }
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      auto row = read_row(content[r + 1], n, "row");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return FinOrdMonoid::validate(n, header[1], std::move(flat));
  }

  FinOrdMonoid read_algebra(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_algebra(text);
  }

  std::string format_algebra(FinOrdMonoid const& m) {
    std::string out = std::to_string(m.size()) + " " + std::to_string(m.unit()) + "\n";
    for (Element a = 0; a < m.size(); ++a) {
      for (Element b = 0; b < m.size(); ++b) {
        out += (b ? " " : "") + std::to_string(m.mul(a, b));
      }
      out += "\n";
    }
    return out;
  }

}  // namespace lmonoid
