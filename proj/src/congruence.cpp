#include "lmonoid/congruence.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace lmonoid {

  Congruence Congruence::delta(std::size_t n) {
    return from_cuts(std::vector<bool>(n ? n - 1 : 0, false));
  }

  Congruence Congruence::nabla(std::size_t n) {
    return from_cuts(std::vector<bool>(n ? n - 1 : 0, true));
  }

  Congruence Congruence::from_cuts(std::vector<bool> const& joined) {
    Congruence c;
    c.block_of.resize(joined.size() + 1, 0);
    for (std::size_t i = 0; i < joined.size(); ++i) {
      c.block_of[i + 1] = c.block_of[i] + (joined[i] ? 0 : 1);
    }
    return c;
  }

  std::vector<bool> Congruence::cuts() const {
    std::vector<bool> j(size() ? size() - 1 : 0);
    for (std::size_t i = 0; i < j.size(); ++i) {
      j[i] = block_of[i] == block_of[i + 1];
    }
    return j;
  }

  bool Congruence::is_delta() const noexcept {
    return block_count() == size();
  }

  bool Congruence::is_nabla() const noexcept {
    return block_count() <= 1;
  }

  bool Congruence::leq(Congruence const& other) const {
    for (std::size_t i = 0; i + 1 < size(); ++i) {
      if (same(i, i + 1) && !other.same(i, i + 1)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::pair<Element, Element>> Congruence::blocks() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < size(); ++a) {
      if (a == 0 || !same(a - 1, a)) {
        out.emplace_back(a, a);
      } else {
        out.back().second = a;
      }
    }
    return out;
  }

  Congruence meet(Congruence const& a, Congruence const& b) {
    auto j = a.cuts();
    auto k = b.cuts();
    for (std::size_t i = 0; i < j.size(); ++i) {
      j[i] = j[i] && k[i];
    }
    return Congruence::from_cuts(j);
  }

  Congruence join(Congruence const& a, Congruence const& b) {
    auto j = a.cuts();
    auto k = b.cuts();
    for (std::size_t i = 0; i < j.size(); ++i) {
      j[i] = j[i] || k[i];
    }
    return Congruence::from_cuts(j);
  }

  namespace {

    // Transitivity reduces compatibility to adjacent identified pairs.
    bool compatible(FinOrdMonoid const& m, std::vector<std::size_t> const& block_of) {
      std::size_t const n = m.size();
      for (Element a = 0; a + 1 < n; ++a) {
        if (block_of[a] != block_of[a + 1]) {
          continue;
        }
        for (Element c = 0; c < n; ++c) {
          if (block_of[m.mul(c, a)] != block_of[m.mul(c, a + 1)]
              || block_of[m.mul(a, c)] != block_of[m.mul(a + 1, c)]) {
            return false;
          }
        }
      }
      return true;
    }

    void merge_interval(std::vector<bool>& joined, Element a, Element b, bool& changed) {
      if (a > b) {
        std::swap(a, b);
      }
      for (Element i = a; i < b; ++i) {
        if (!joined[i]) {
          joined[i] = true;
          changed   = true;
        }
      }
    }

    // Smallest congruence above the (convex) relation given by `joined`.
    Congruence close(FinOrdMonoid const& m, std::vector<bool> joined) {
      std::size_t const n       = m.size();
      bool              changed = true;
      while (changed) {
        changed = false;
        for (Element a = 0; a + 1 < n; ++a) {
          if (!joined[a]) {
            continue;
          }
          for (Element c = 0; c < n; ++c) {
            merge_interval(joined, m.mul(c, a), m.mul(c, a + 1), changed);
            merge_interval(joined, m.mul(a, c), m.mul(a + 1, c), changed);
          }
        }
      }
      return Congruence::from_cuts(joined);
    }

    bool lattice_order(Congruence const& a, Congruence const& b) {
      auto const ja = a.cuts(), jb = b.cuts();
      auto const ca = std::count(ja.begin(), ja.end(), true);
      auto const cb = std::count(jb.begin(), jb.end(), true);
      if (ca != cb) {
        return ca < cb;
      }
      return ja < jb;
    }

    void check_cap(FinOrdMonoid const& m, std::size_t cap, char const* what) {
      if (m.size() > cap) {
        throw CapExceeded(what, m.size(), cap);
      }
    }

  }  // namespace

  bool is_congruence(FinOrdMonoid const& m, Congruence const& theta) {
    if (theta.size() != m.size()) {
      return false;
    }
    // block ids must be 0,1,... increasing by at most one per step
    if (theta.block_of[0] != 0) {
      return false;
    }
    for (std::size_t i = 0; i + 1 < theta.size(); ++i) {
      auto d = theta.block_of[i + 1] - theta.block_of[i];
      if (theta.block_of[i + 1] < theta.block_of[i] || d > 1) {
        return false;
      }
    }
    return compatible(m, theta.block_of);
  }

  Congruence principal_congruence(FinOrdMonoid const& m, Element a, Element b) {
    return generated_congruence(m, {{a, b}});
  }

  Congruence generated_congruence(FinOrdMonoid const&                            m,
                                  std::vector<std::pair<Element, Element>> const& pairs) {
    std::vector<bool> joined(m.size() - 1, false);
    bool              changed = false;
    for (auto [a, b] : pairs) {
      if (a >= m.size() || b >= m.size()) {
        throw Error("congruence generator out of range");
      }
      merge_interval(joined, a, b, changed);
    }
    return close(m, std::move(joined));
  }

  std::vector<Congruence> all_congruences(FinOrdMonoid const& m, std::size_t cap) {
    check_cap(m, std::min(cap, caps::congruence_max), "congruence lattice size");
    std::size_t const n = m.size();
    if (n > 20) {
      return all_congruences_by_joins(m, cap);
    }
    std::vector<Congruence> out;
    std::size_t const       bits = n - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
      std::vector<bool> joined(bits);
      for (std::size_t i = 0; i < bits; ++i) {
        joined[i] = (mask >> i) & 1U;
      }
      Congruence c = Congruence::from_cuts(joined);
      if (compatible(m, c.block_of)) {
        out.push_back(std::move(c));
      }
    }
    std::sort(out.begin(), out.end(), lattice_order);
    return out;
  }

  std::vector<Congruence> all_congruences_by_joins(FinOrdMonoid const& m, std::size_t cap) {
    check_cap(m, std::min(cap, caps::congruence_max), "congruence lattice size");
    std::size_t const n = m.size();
    std::vector<Congruence> principals;
    for (Element a = 0; a + 1 < n; ++a) {
      principals.push_back(principal_congruence(m, a, a + 1));
    }
    std::set<std::vector<bool>> seen{Congruence::delta(n).cuts()};
    std::vector<Congruence>     out{Congruence::delta(n)};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (auto const& p : principals) {
        Congruence j = join(out[i], p);
        if (seen.insert(j.cuts()).second) {
          out.push_back(std::move(j));
        }
      }
    }
    std::sort(out.begin(), out.end(), lattice_order);
    return out;
  }

  std::optional<Congruence> monolith(FinOrdMonoid const& m, std::size_t cap) {
    auto const cons = all_congruences(m, cap);
    std::optional<Congruence> least;
    for (auto const& c : cons) {
      if (c.is_delta()) {
        continue;
      }
      least = least ? meet(*least, c) : c;
    }
    if (!least || least->is_delta()) {
      return std::nullopt;
    }
    return least;
  }

  bool is_sdi(FinOrdMonoid const& m, std::size_t cap) {
    return monolith(m, cap).has_value();
  }

  bool con_is_chain(FinOrdMonoid const& m, std::size_t cap) {
    auto const cons = all_congruences(m, cap);
    for (std::size_t i = 0; i < cons.size(); ++i) {
      for (std::size_t j = i + 1; j < cons.size(); ++j) {
        if (!cons[i].leq(cons[j]) && !cons[j].leq(cons[i])) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_meet_irreducible(std::vector<Congruence> const& lattice, Congruence const& theta) {
    if (theta.is_nabla()) {
      return false;
    }
    std::optional<Congruence> least;
    for (auto const& c : lattice) {
      if (c != theta && theta.leq(c)) {
        least = least ? meet(*least, c) : c;
      }
    }
    return least && *least != theta;
  }

  Quotient quotient(FinOrdMonoid const& m, Congruence const& theta) {
    auto const        bl = theta.blocks();
    std::size_t const k  = bl.size();
    std::vector<Element> t(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        t[i * k + j] = theta.block_of[m.mul(bl[i].first, bl[j].first)];
      }
    }
    ElementMap proj{m.size(), k, theta.block_of};
    return {FinOrdMonoid::validate(k, theta.block_of[m.unit()], std::move(t)), std::move(proj)};
  }

  ElementMap quotient_section(FinOrdMonoid const& m, Congruence const& theta) {
    auto const bl = theta.blocks();
    ElementMap s{m.size(), m.size(), std::vector<Element>(m.size())};
    for (Element a = 0; a < m.size(); ++a) {
      s.image[a] = theta.same(a, m.unit()) ? m.unit() : bl[theta.block_of[a]].first;
    }
    return s;
  }

  Congruence kernel(ElementMap const& f) {
    std::vector<bool> joined(f.source_size ? f.source_size - 1 : 0);
    for (std::size_t i = 0; i < joined.size(); ++i) {
      joined[i] = f(i) == f(i + 1);
    }
    return Congruence::from_cuts(joined);
  }

  Congruence restrict(Congruence const& theta, ElementMap const& inclusion) {
    std::vector<bool> joined(inclusion.source_size ? inclusion.source_size - 1 : 0);
    for (std::size_t i = 0; i < joined.size(); ++i) {
      joined[i] = theta.same(inclusion(i), inclusion(i + 1));
    }
    return Congruence::from_cuts(joined);
  }

  bool has_cep(FinOrdMonoid const& m, std::size_t cap) {
    check_cap(m, std::min(cap, caps::cep_max), "CEP algebra size");
    std::size_t const    n = m.size();
    std::vector<Element> others;
    for (Element a = 0; a < n; ++a) {
      if (a != m.unit()) {
        others.push_back(a);
      }
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
      std::vector<Element> gens;
      for (std::size_t i = 0; i < others.size(); ++i) {
        if ((mask >> i) & 1U) {
          gens.push_back(others[i]);
        }
      }
      Subalgebra const sub = generated_subalgebra(m, gens);
      for (auto const& psi : all_congruences(sub.algebra, caps::congruence_max)) {
        // The least candidate extension is the congruence generated by psi;
        // psi extends iff this one restricts back to psi.
        std::vector<std::pair<Element, Element>> pairs;
        for (Element b = 0; b + 1 < sub.algebra.size(); ++b) {
          if (psi.same(b, b + 1)) {
            pairs.emplace_back(sub.inclusion(b), sub.inclusion(b + 1));
          }
        }
        if (restrict(generated_congruence(m, pairs), sub.inclusion) != psi) {
          return false;
        }
      }
    }
    return true;
  }

  std::string format_congruence(Congruence const& theta) {
    std::string out;
    for (auto [lo, hi] : theta.blocks()) {
      if (!out.empty()) {
        out += ';';
      }
      out += std::to_string(lo) + '-' + std::to_string(hi);
    }
    return out;
  }

  Congruence parse_congruence(std::string_view text, std::size_t n) {
    auto fail = [&](std::string const& why) -> ParseError {
      return ParseError("congruence '" + std::string(text) + "': " + why);
    };
    auto number = [&](std::string_view s) {
      std::size_t v   = 0;
      auto [p, ec]    = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
        throw fail("bad number '" + std::string(s) + "'");
      }
      return v;
    };
    std::vector<bool> joined(n ? n - 1 : 0, false);
    std::size_t       expect = 0, start = 0;
    while (start <= text.size()) {
      std::size_t            semi = text.find(';', start);
      std::string_view const tok
          = text.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                              : semi - start);
      std::size_t const dash = tok.find('-');
      if (dash == std::string_view::npos) {
        throw fail("expected lo-hi");
      }
      std::size_t const lo = number(tok.substr(0, dash));
      std::size_t const hi = number(tok.substr(dash + 1));
      if (lo != expect || hi < lo || hi >= n) {
        throw fail("blocks must be consecutive intervals covering 0.." + std::to_string(n - 1));
      }
      for (std::size_t i = lo; i < hi; ++i) {
        joined[i] = true;
      }
      expect = hi + 1;
      if (semi == std::string_view::npos) {
        break;
      }
      start = semi + 1;
    }
    if (expect != n) {
      throw fail("blocks do not cover the carrier");
    }
    return Congruence::from_cuts(joined);
  }

}  // namespace lmonoid
