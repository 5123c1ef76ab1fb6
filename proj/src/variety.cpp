#include "lmonoid/variety.hpp"

#include <algorithm>
#include <set>

#include "lmonoid/congruence.hpp"

namespace lmonoid {

  WordFilter parse_filter(std::string_view text) {
    if (text == "all") {
      return WordFilter::All;
    }
    if (text == "sdi") {
      return WordFilter::Sdi;
    }
    if (text == "commutative") {
      return WordFilter::Commutative;
    }
    if (text == "commutative_sdi" || text == "commutative-sdi") {
      return WordFilter::CommutativeSdi;
    }
    throw ParseError("unknown filter '" + std::string(text)
                     + "' (all, sdi, commutative, commutative_sdi)");
  }

  namespace {
    void extend(SumWord& prefix, std::size_t remaining, WordFilter filter,
                std::vector<SumWord>& out) {
      if (remaining == 0) {
        out.push_back(prefix);
        return;
      }
      bool const comm_only
          = filter == WordFilter::Commutative || filter == WordFilter::CommutativeSdi;
      bool const sdi = filter == WordFilter::Sdi || filter == WordFilter::CommutativeSdi;
      for (Letter c : all_letters) {
        if (weight(c) > remaining || (comm_only && !is_commutative(c))) {
          continue;
        }
        if (sdi && !prefix.empty() && prefix.back() == c && is_commutative(c)) {
          continue;
        }
        prefix.push_back(c);
        extend(prefix, remaining - weight(c), filter, out);
        prefix.pop_back();
      }
    }
  }  // namespace

  std::vector<SumWord> enumerate_words(std::size_t n, WordFilter filter, std::size_t cap) {
    if (n == 0) {
      throw Error("enumerate_words: n must be at least 1");
    }
    if (n > std::min(cap, caps::enumeration_max)) {
      throw CapExceeded("word size", n, std::min(cap, caps::enumeration_max));
    }
    std::vector<SumWord> out;
    SumWord              prefix;
    extend(prefix, n - 1, filter, out);
    return out;
  }

  namespace {
    void check_count(std::size_t n) {
      if (n == 0) {
        throw Error("counts are defined for n >= 1");
      }
      if (n > caps::counting) {
        throw CapExceeded("count index", n, caps::counting);
      }
    }
  }  // namespace

  std::uint64_t count_I(std::size_t n) {
    check_count(n);
    std::uint64_t a = 1, b = 2;  // I(1), I(2)
    if (n == 1) {
      return a;
    }
    for (std::size_t k = 3; k <= n; ++k) {
      std::uint64_t const c = 2 * b + 2 * a;
      a                     = b;
      b                     = c;
    }
    return b;
  }

  std::uint64_t count_S(std::size_t n) {
    check_count(n);
    std::uint64_t s[3] = {1, 2, 4};
    if (n <= 3) {
      return s[n - 1];
    }
    for (std::size_t k = 4; k <= n; ++k) {
      std::uint64_t const next = s[2] + 2 * s[1] + 2 * s[0];
      s[0]                     = s[1];
      s[1]                     = s[2];
      s[2]                     = next;
    }
    return s[2];
  }

  std::uint64_t count_comm(std::size_t n) {
    check_count(n);
    return std::uint64_t{1} << (n - 1);
  }

  std::uint64_t count_I_closed_form(std::size_t n) {
    check_count(n);
    // ((1+r)^n - (1-r)^n) / (2r) with r = sqrt 3: the rational parts cancel
    // and what remains is the coefficient b of (1+r)^n = a + b r.
    unsigned __int128 a = 1, b = 0;
    for (std::size_t k = 0; k < n; ++k) {
      unsigned __int128 const na = a + 3 * b;
      unsigned __int128 const nb = a + b;
      a                          = na;
      b                          = nb;
    }
    return static_cast<std::uint64_t>(b);
  }

  std::vector<FinOrdMonoid> brute_force_enumerate(std::size_t n, std::size_t cap) {
    if (n == 0) {
      throw Error("brute_force_enumerate: n must be at least 1");
    }
    if (n > std::min(cap, caps::brute_force_max)) {
      throw CapExceeded("brute force size", n, std::min(cap, caps::brute_force_max));
    }
    std::vector<FinOrdMonoid> out;
    std::vector<Element>      t(n * n);
    for (Element u = 0; u < n; ++u) {
      std::vector<std::size_t> free;  // cells still to choose, row-major
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
          if (a == b || a == u) {
            t[a * n + b] = b;
          } else if (b == u) {
            t[a * n + b] = a;
          } else {
            free.push_back(a * n + b);
          }
        }
      }
      // Row-major order means the left and upper neighbours are already set.
      auto monotone_at = [&](std::size_t cell) {
        Element const a = cell / n, b = cell % n;
        return (a == 0 || t[(a - 1) * n + b] <= t[cell]) && (b == 0 || t[cell - 1] <= t[cell]);
      };
      std::size_t const k = free.size();
      auto              rec = [&](auto& self, std::size_t i) -> void {
        if (i == k) {
          if (!FinOrdMonoid::check(n, u, t)) {
            out.push_back(FinOrdMonoid::validate(n, u, t));
          }
          return;
        }
        std::size_t const cell = free[i];
        Element const     a = cell / n, b = cell % n;
        for (Element v : {std::min(a, b), std::max(a, b)}) {
          t[cell] = v;
          if (monotone_at(cell)) {
            self(self, i + 1);
          }
        }
      };
      rec(rec, 0);
    }
    return out;
  }

  std::vector<SumWord> sdi_quotient_words(SumWord const& w, std::size_t cap) {
    FinOrdMonoid const m = compose(w);
    auto const         cons = all_congruences(m, cap);
    std::set<SumWord>  found;
    for (auto const& theta : cons) {
      if (!is_meet_irreducible(cons, theta)) {
        continue;
      }
      SumWord q = decompose(quotient(m, theta).algebra);
      if (word_is_sdi(q)) {
        found.insert(std::move(q));
      }
    }
    return {found.begin(), found.end()};
  }

  bool member(SumWord const& w, std::vector<SumWord> const& gens, std::size_t cap) {
    for (auto const& q : sdi_quotient_words(w, cap)) {
      bool const covered = std::any_of(gens.begin(), gens.end(), [&](SumWord const& g) {
        return word_embeds(q, g).has_value();
      });
      if (!covered) {
        return false;
      }
    }
    return true;
  }

  std::vector<SumWord> variety_antichain(std::vector<SumWord> const& gens, std::size_t cap) {
    std::set<SumWord> all;
    for (auto const& g : gens) {
      auto const q = sdi_quotient_words(g, cap);
      all.insert(q.begin(), q.end());
    }
    std::vector<SumWord> out;
    for (auto const& a : all) {
      bool const dominated = std::any_of(all.begin(), all.end(), [&](SumWord const& b) {
        return a != b && word_embeds(a, b).has_value();
      });
      if (!dominated) {
        out.push_back(a);
      }
    }
    return out;
  }

  CIdVarietyId CIdVarietyId::vc(std::size_t n) {
    if (n < 2) {
      throw Error("V(C_n) needs n >= 2");
    }
    return {Kind::VC, n};
  }
  CIdVarietyId CIdVarietyId::vcd(std::size_t n) {
    if (n < 2) {
      throw Error("V(C_n^d) needs n >= 2");
    }
    return {Kind::VCd, n};
  }
  CIdVarietyId CIdVarietyId::vjoin(std::size_t n) {
    if (n < 2) {
      throw Error("V(C_n, C_n^d) needs n >= 2");
    }
    return {Kind::VJoin, n};
  }

  std::string to_string(CIdVarietyId const& v) {
    std::string const n = std::to_string(v.n);
    switch (v.kind) {
      case CIdVarietyId::Kind::Trivial:
        return "trivial";
      case CIdVarietyId::Kind::VC:
        return "V(C" + n + ")";
      case CIdVarietyId::Kind::VCd:
        return "V(C" + n + "d)";
      case CIdVarietyId::Kind::VJoin:
        return "V(C" + n + ",C" + n + "d)";
      case CIdVarietyId::Kind::Full:
        return "CId";
    }
    return "?";
  }

  SumWord alternating_word(Letter first, std::size_t len) {
    Letter const other = first == Letter::C2 ? Letter::C2d : Letter::C2;
    SumWord      w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(i % 2 == 0 ? first : other);
    }
    return w;
  }

  namespace {
    // Longest alternating scattered subword starting with `first`; greedy
    // is optimal since any match can be shifted to the earliest occurrence.
    std::size_t alternation(SumWord const& w, Letter first) {
      Letter const other = first == Letter::C2 ? Letter::C2d : Letter::C2;
      std::size_t  len   = 0;
      for (Letter c : w) {
        if (c == (len % 2 == 0 ? first : other)) {
          ++len;
        }
      }
      return len;
    }

    std::vector<SumWord> cid_generators(CIdVarietyId const& v) {
      std::size_t const len = v.n - 1;
      switch (v.kind) {
        case CIdVarietyId::Kind::VC:
          return {alternating_word(Letter::C2, len)};
        case CIdVarietyId::Kind::VCd:
          return {alternating_word(Letter::C2d, len)};
        case CIdVarietyId::Kind::VJoin:
          return {alternating_word(Letter::C2, len), alternating_word(Letter::C2d, len)};
        default:
          return {};
      }
    }
  }  // namespace

  CIdVarietyId cid_identify(std::vector<SumWord> const& gens) {
    std::size_t p = 1, q = 1;
    for (auto const& g : gens) {
      if (!std::all_of(g.begin(), g.end(), is_commutative)) {
        throw NotCommutative("cid_identify: generator " + format_word(g)
                             + " is not commutative");
      }
      p = std::max(p, 1 + alternation(g, Letter::C2));
      q = std::max(q, 1 + alternation(g, Letter::C2d));
    }
    if (p == q) {
      return p == 1 ? CIdVarietyId::trivial() : CIdVarietyId::vjoin(p);
    }
    return p > q ? CIdVarietyId::vc(p) : CIdVarietyId::vcd(q);
  }

  bool cid_leq(CIdVarietyId const& lhs, CIdVarietyId const& rhs) {
    if (rhs.kind == CIdVarietyId::Kind::Full) {
      return true;
    }
    if (lhs.kind == CIdVarietyId::Kind::Full) {
      return false;
    }
    auto const big = cid_generators(rhs);
    for (auto const& w : cid_generators(lhs)) {
      bool const inside = std::any_of(big.begin(), big.end(), [&](SumWord const& g) {
        return word_embeds(w, g).has_value();
      });
      if (!inside) {
        return false;
      }
    }
    return true;
  }

  Equation cid_axiom(CIdVarietyId const& v) {
    bool const even = v.n % 2 == 0;
    switch (v.kind) {
      case CIdVarietyId::Kind::Trivial:
        return Equation::equality(x(1), Term::unit());
      case CIdVarietyId::Kind::VC:
        return even ? sigma(v.n) : sigma_dual(v.n);
      case CIdVarietyId::Kind::VCd:
        return even ? sigma_dual(v.n) : sigma(v.n);
      case CIdVarietyId::Kind::VJoin:
        return gamma(v.n + 1);
      case CIdVarietyId::Kind::Full:
        break;
    }
    throw NoFiniteAxiom("the full commutative variety has no finite axiom in the sigma/gamma "
                        "families");
  }

  std::string_view to_string(AmalgamationStatus s) {
    switch (s) {
      case AmalgamationStatus::Yes:
        return "yes";
      case AmalgamationStatus::No:
        return "no";
      case AmalgamationStatus::OpenInPaper:
        return "open";
    }
    return "?";
  }

  AmalgamationStatus amalgamation_status(std::vector<SumWord> const& gens, std::size_t cap) {
    using L = Letter;
    static std::vector<std::vector<SumWord>> const with_ap = {
        {{L::C2}},
        {{L::C2d}},
        {{L::C2}, {L::C2d}},
        {{L::C2, L::C2d}},
        {{L::C2d, L::C2}},
        {{L::G3}},
        {{L::D3}},
    };
    auto const anti = variety_antichain(gens, cap);
    if (anti.empty() || std::find(with_ap.begin(), with_ap.end(), anti) != with_ap.end()) {
      return AmalgamationStatus::Yes;
    }
    return AmalgamationStatus::No;
  }

  AmalgamationStatus amalgamation_status_named(std::string_view name) {
    if (name == "CId" || name == "G-limit" || name == "D-limit") {
      return AmalgamationStatus::OpenInPaper;
    }
    throw ParseError("unknown named variety '" + std::string(name)
                     + "' (CId, G-limit, D-limit)");
  }

}  // namespace lmonoid
