#include "lmonoid/amalgamation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lmonoid/variety.hpp"

namespace lmonoid {

  bool WordEmbedding::valid() const {
    return is_word_witness(source, target, f);
  }

  ElementMap WordEmbedding::lift() const {
    return lift_embedding(source, target, f);
  }

  Span Span::make(SumWord const& base, SumWord const& m, PositionMap const& f,
                  SumWord const& n, PositionMap const& g) {
    Span s{base, {base, m, f}, {base, n, g}};
    if (!s.left.valid()) {
      throw InvalidWitness("left position list is not an embedding " + format_word(base)
                           + " -> " + format_word(m));
    }
    if (!s.right.valid()) {
      throw InvalidWitness("right position list is not an embedding " + format_word(base)
                           + " -> " + format_word(n));
    }
    return s;
  }

  std::vector<WordEmbedding> all_word_embeddings(SumWord const& source, SumWord const& target,
                                                 std::size_t cap) {
    std::size_t const limit = std::min(cap, caps::enumeration_max);
    if (source.size() > limit || target.size() > limit) {
      throw CapExceeded("word length", std::max(source.size(), target.size()), limit);
    }
    std::vector<WordEmbedding> out;
    PositionMap                f;
    auto rec = [&](auto& self, std::size_t i, std::size_t from) -> void {
      if (i == source.size()) {
        out.push_back({source, target, f});
        return;
      }
      // Leave room for the remaining letters.
      for (std::size_t j = from; j + (source.size() - i) <= target.size(); ++j) {
        if (component_leq(source[i], target[j])) {
          f.push_back(j);
          self(self, i + 1, j + 1);
          f.pop_back();
        }
      }
    };
    rec(rec, 0, 0);
    return out;
  }

  std::optional<std::size_t> incompatibility_certificate(Span const& span) {
    for (std::size_t p = 0; p < span.base.size(); ++p) {
      if (!is_commutative(span.base[p])) {
        continue;
      }
      Letter const a = span.left.target[span.left.f[p]];
      Letter const b = span.right.target[span.right.f[p]];
      if ((a == Letter::G3 && b == Letter::D3) || (a == Letter::D3 && b == Letter::G3)) {
        return p;
      }
    }
    return std::nullopt;
  }

  bool is_compatible(Span const& span) {
    return !incompatibility_certificate(span).has_value();
  }

  Amalgam amalgamate(Span const& span) {
    if (auto p = incompatibility_certificate(span)) {
      throw IncompatibleSpan(*p);
    }
    SumWord const& m = span.left.target;
    SumWord const& n = span.right.target;
    PositionMap const& f = span.left.f;
    PositionMap const& g = span.right.f;

    Amalgam a{{}, {m, {}, {}}, {n, {}, {}}};
    a.j1.f.resize(m.size());
    a.j2.f.resize(n.size());
    std::size_t i = 0, j = 0;
    for (std::size_t p = 0; p <= span.base.size(); ++p) {
      std::size_t const mi = p < f.size() ? f[p] : m.size();
      std::size_t const nj = p < g.size() ? g[p] : n.size();
      for (; i < mi; ++i) {
        a.j1.f[i] = a.result.size();
        a.result.push_back(m[i]);
      }
      for (; j < nj; ++j) {
        a.j2.f[j] = a.result.size();
        a.result.push_back(n[j]);
      }
      if (p < span.base.size()) {
        Letter const lm = m[i], ln = n[j];
        a.j1.f[i++] = a.j2.f[j++] = a.result.size();
        a.result.push_back(component_leq(lm, ln) ? ln : lm);
      }
    }
    a.j1.target = a.j2.target = a.result;
    return a;
  }

  namespace {
    std::set<Element> image_of(ElementMap const& f) {
      return {f.image.begin(), f.image.end()};
    }
  }  // namespace

  AmalgamCheck verify_amalgam(Span const& span, Amalgam const& am) {
    AmalgamCheck out;
    if (!span.left.valid() || !span.right.valid() || am.j1.source != span.left.target
        || am.j2.source != span.right.target || am.j1.target != am.result
        || am.j2.target != am.result || !am.j1.valid() || !am.j2.valid()) {
      return out;
    }
    FinOrdMonoid const p   = compose(am.result);
    ElementMap const   i1  = span.left.lift();
    ElementMap const   i2  = span.right.lift();
    ElementMap const   j1  = am.j1.lift();
    ElementMap const   j2  = am.j2.lift();
    out.embeddings_valid   = check_map(compose(span.left.target), p, j1).is_embedding
                           && check_map(compose(span.right.target), p, j2).is_embedding;
    ElementMap const via_m = compose_maps(i1, j1);
    out.commutes           = via_m == compose_maps(i2, j2);

    std::set<Element> both;
    auto const        a = image_of(j1), b = image_of(j2);
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(both, both.end()));
    out.strong = out.commutes && both == image_of(via_m);
    return out;
  }

  std::optional<Amalgam> search_amalgam(Span const& span, std::size_t max_size, std::size_t cap) {
    std::size_t const limit = std::min(cap, caps::amalgam_search_max);
    if (max_size > limit) {
      throw CapExceeded("amalgam size", max_size, limit);
    }
    SumWord const& m = span.left.target;
    SumWord const& n = span.right.target;
    for (std::size_t s = std::max(size(m), size(n)); s <= max_size; ++s) {
      for (auto const& w : enumerate_words(s, WordFilter::All)) {
        if (!word_embeds(m, w) || !word_embeds(n, w)) {
          continue;
        }
        auto const left  = all_word_embeddings(m, w);
        auto const right = all_word_embeddings(n, w);
        for (auto const& j1 : left) {
          for (auto const& j2 : right) {
            bool agree = true;
            for (std::size_t p = 0; p < span.base.size() && agree; ++p) {
              agree = j1.f[span.left.f[p]] == j2.f[span.right.f[p]];
            }
            if (!agree) {
              continue;
            }
            Amalgam a{w, j1, j2};
            auto    c = verify_amalgam(span, a);
            if (c.commutes && c.embeddings_valid) {
              return a;
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<OneSidedSolution> one_sided_amalgam_search(Span const&                 span,
                                                          std::vector<SumWord> const& candidates,
                                                          std::size_t                 cap) {
    std::size_t const  limit = std::min(cap, caps::map_search_max);
    FinOrdMonoid const mb    = compose(span.left.target);
    ElementMap const   i1    = span.left.lift();
    ElementMap const   i2    = span.right.lift();

    std::vector<std::optional<Element>> fixed(mb.size());
    for (auto const& d : candidates) {
      FinOrdMonoid const md = compose(d);
      std::size_t        free_count = mb.size() - i1.source_size;
      double const       maps       = std::pow(static_cast<double>(md.size()), free_count);
      if (maps > static_cast<double>(limit)) {
        throw CapExceeded("homomorphism candidates", static_cast<std::size_t>(maps), limit);
      }
      for (auto const& e2 : all_word_embeddings(span.right.target, d)) {
        ElementMap const j2 = e2.lift();
        // j1 is pinned on the image of the base.
        ElementMap j1{mb.size(), md.size(), std::vector<Element>(mb.size(), 0)};
        std::fill(fixed.begin(), fixed.end(), std::nullopt);
        for (Element a = 0; a < i1.source_size; ++a) {
          fixed[i1(a)] = j2(i2(a));
        }
        std::optional<OneSidedSolution> found;
        // Homomorphisms of chains preserve min and max, hence are monotone.
        auto rec = [&](auto& self, Element x) -> bool {
          if (x == mb.size()) {
            if (check_map(mb, md, j1).is_homomorphism) {
              found = OneSidedSolution{d, j1, j2};
              return true;
            }
            return false;
          }
          Element const lo = x == 0 ? 0 : j1.image[x - 1];
          for (Element v = lo; v < md.size(); ++v) {
            if (fixed[x] && *fixed[x] != v) {
              continue;
            }
            j1.image[x] = v;
            if (self(self, x + 1)) {
              return true;
            }
          }
          return false;
        };
        if (rec(rec, 0)) {
          return found;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace lmonoid
