#include "lmonoid/nested_sum.hpp"

#include <algorithm>
#include <numeric>

namespace lmonoid {

  std::size_t size(SumWord const& w) {
    std::size_t n = 1;
    for (Letter c : w) {
      n += weight(c);
    }
    return n;
  }

  std::string_view to_string(Letter c) {
    switch (c) {
      case Letter::C2:
        return "C2";
      case Letter::C2d:
        return "C2d";
      case Letter::G3:
        return "G3";
      case Letter::D3:
        return "D3";
    }
    return "?";
  }

  std::string format_word(SumWord const& w) {
    if (w.empty()) {
      return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) {
        out += '+';
      }
      out += to_string(w[i]);
    }
    return out;
  }

  SumWord parse_word(std::string_view text) {
    if (text == "0") {
      return {};
    }
    if (text.empty()) {
      throw ParseError("word: empty string (use 0 for the trivial algebra)");
    }
    SumWord w;
    std::size_t start = 0;
    while (true) {
      std::size_t const      plus = text.find('+', start);
      std::string_view const tok  = text.substr(start, plus == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : plus - start);
      auto it = std::find_if(std::begin(all_letters), std::end(all_letters),
                             [&](Letter c) { return to_string(c) == tok; });
      if (it == std::end(all_letters)) {
        throw ParseError("word: unknown letter '" + std::string(tok) + "'");
      }
      w.push_back(*it);
      if (plus == std::string_view::npos) {
        break;
      }
      start = plus + 1;
    }
    return w;
  }

  WordLayout layout(SumWord const& w) {
    WordLayout out;
    out.letters.resize(w.size());
    Element rank = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (has_negative(w[i])) {
        out.letters[i].negative = rank++;
      }
    }
    out.unit = rank++;
    for (std::size_t i = w.size(); i-- > 0;) {
      if (has_positive(w[i])) {
        out.letters[i].positive = rank++;
      }
    }
    return out;
  }

  FinOrdMonoid compose(SumWord const& w) {
    std::size_t const n   = size(w);
    WordLayout const  lay = layout(w);
    // level = index of the contributing letter; the unit is innermost.
    std::vector<std::size_t> level(n, w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (lay.letters[i].negative) {
        level[*lay.letters[i].negative] = i;
      }
      if (lay.letters[i].positive) {
        level[*lay.letters[i].positive] = i;
      }
    }
    std::vector<Element> t(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        Element ab;
        if (level[a] < level[b]) {
          ab = a;
        } else if (level[b] < level[a]) {
          ab = b;
        } else if (level[a] == w.size()) {
          ab = a;  // unit * unit
        } else {
          // Same letter: G3 is left-absorbing, D3 right-absorbing.
          ab = w[level[a]] == Letter::D3 ? b : a;
        }
        t[a * n + b] = ab;
      }
    }
    return FinOrdMonoid::validate(n, lay.unit, std::move(t));
  }

  bool green_d(FinOrdMonoid const& m, Element a, Element b) {
    return m.mul(m.mul(a, b), a) == a && m.mul(m.mul(b, a), b) == b;
  }

  SumWord decompose(FinOrdMonoid const& m) {
    std::size_t const n = m.size();
    Element const     e = m.unit();
    // Partner in the D-class (at most one, by the two-element bound).
    std::vector<std::optional<Element>> partner(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (a != e && b != e && m.mul(a, b) != m.mul(b, a)) {
          partner[a] = b;
          partner[b] = a;
        }
      }
    }
    // One representative per class.
    std::vector<Element> reps;
    for (Element a = 0; a < n; ++a) {
      if (a != e && (!partner[a] || a < *partner[a])) {
        reps.push_back(a);
      }
    }
    // [a] is outside [b] iff a absorbs b, so the number of classes absorbed
    // by [a] measures its depth from the inside.
    std::size_t const        k = reps.size();
    std::vector<std::size_t> absorbed(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && m.mul(reps[i], reps[j]) == reps[i]
            && m.mul(reps[j], reps[i]) == reps[i]) {
          ++absorbed[i];
        }
      }
    }
    SumWord w(k);
    for (std::size_t i = 0; i < k; ++i) {
      Element const a   = reps[i];
      std::size_t   pos = k - 1 - absorbed[i];
      Letter        c;
      if (!partner[a]) {
        c = a < e ? Letter::C2 : Letter::C2d;
      } else {
        Element const hi = *partner[a];  // a < e < hi
        c                = m.mul(a, hi) == a ? Letter::G3 : Letter::D3;
      }
      w[pos] = c;
    }
    return w;
  }

  SumWord decompose_peel(FinOrdMonoid const& m) {
    // Current subalgebra is the rank interval [lo, hi], which always contains
    // the unit: each peel removes the bottom, the top, or both.
    SumWord w;
    Element lo = 0, hi = m.top();
    while (lo != hi) {
      Element const bt = m.mul(lo, hi), tb = m.mul(hi, lo);
      if (bt == lo && tb == lo) {
        w.push_back(Letter::C2);
        ++lo;
      } else if (bt == hi && tb == hi) {
        w.push_back(Letter::C2d);
        --hi;
      } else {
        w.push_back(bt == lo ? Letter::G3 : Letter::D3);
        ++lo;
        --hi;
      }
    }
    return w;
  }

  bool component_leq(Letter lhs, Letter rhs) noexcept {
    return lhs == rhs || (is_commutative(lhs) && !is_commutative(rhs));
  }

  bool is_word_witness(SumWord const& source, SumWord const& target, PositionMap const& f) {
    if (f.size() != source.size()) {
      return false;
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] >= target.size() || (i > 0 && f[i] <= f[i - 1])
          || !component_leq(source[i], target[f[i]])) {
        return false;
      }
    }
    return true;
  }

  std::optional<PositionMap> word_embeds(SumWord const& source, SumWord const& target) {
    PositionMap f;
    f.reserve(source.size());
    std::size_t j = 0;
    for (Letter c : source) {
      while (j < target.size() && !component_leq(c, target[j])) {
        ++j;
      }
      if (j == target.size()) {
        return std::nullopt;
      }
      f.push_back(j++);
    }
    return f;
  }

  ElementMap lift_embedding(SumWord const& source, SumWord const& target, PositionMap const& f) {
    if (!is_word_witness(source, target, f)) {
      throw InvalidWitness("lift_embedding: position map is not a witness for "
                           + format_word(source) + " -> " + format_word(target));
    }
    WordLayout const src = layout(source);
    WordLayout const dst = layout(target);
    ElementMap       phi{size(source), size(target), std::vector<Element>(size(source))};
    phi.image[src.unit] = dst.unit;
    for (std::size_t i = 0; i < source.size(); ++i) {
      auto const& s = src.letters[i];
      auto const& d = dst.letters[f[i]];
      if (s.negative) {
        phi.image[*s.negative] = *d.negative;
      }
      if (s.positive) {
        phi.image[*s.positive] = *d.positive;
      }
    }
    return phi;
  }

  bool word_is_sdi(SumWord const& w) {
    if (w.empty()) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1] && is_commutative(w[i])) {
        return false;
      }
    }
    return true;
  }

  SumWord dual_word(SumWord const& w) {
    SumWord out(w);
    for (Letter& c : out) {
      if (c == Letter::C2) {
        c = Letter::C2d;
      } else if (c == Letter::C2d) {
        c = Letter::C2;
      }
    }
    return out;
  }

  SumWord opposite_word(SumWord const& w) {
    SumWord out(w);
    for (Letter& c : out) {
      if (c == Letter::G3) {
        c = Letter::D3;
      } else if (c == Letter::D3) {
        c = Letter::G3;
      }
    }
    return out;
  }

}  // namespace lmonoid
