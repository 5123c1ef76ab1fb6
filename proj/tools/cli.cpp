#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lmonoid/amalgamation.hpp"
#include "lmonoid/congruence.hpp"
#include "lmonoid/error.hpp"
#include "lmonoid/monoid.hpp"
#include "lmonoid/nested_sum.hpp"
#include "lmonoid/terms.hpp"
#include "lmonoid/variety.hpp"

namespace lmonoid::cli {

  namespace {

    using json = nlohmann::json;

    struct Io {
      std::istream& in;
      std::ostream& out;
      bool          as_json = false;
      // --cap, when given; each command picks its own default.
      std::optional<std::size_t> cap;

      std::size_t cap_or(std::size_t fallback) const {
        return cap.value_or(fallback);
      }
      void emit(json const& j) const {
        out << j.dump() << '\n';
      }
    };

    FinOrdMonoid read_algebra_arg(std::string const& path, Io const& io) {
      if (path == "-") {
        return read_algebra(io.in);
      }
      std::ifstream f(path);
      if (!f) {
        throw Error("cannot open '" + path + "'");
      }
      return read_algebra(f);
    }

    // A word literal, or "-" / "@file" for an algebra to decompose.
    SumWord read_word_arg(std::string const& arg, Io const& io) {
      if (arg == "-") {
        return decompose(read_algebra(io.in));
      }
      if (!arg.empty() && arg.front() == '@') {
        return decompose(read_algebra_arg(arg.substr(1), io));
      }
      return parse_word(arg);
    }

    PositionMap parse_positions(std::string const& text) {
      PositionMap f;
      if (text.empty() || text == "-") {
        return f;
      }
      std::stringstream ss(text);
      std::string       tok;
      while (std::getline(ss, tok, ',')) {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) {
          throw ParseError("bad position list '" + text + "'");
        }
        f.push_back(std::stoul(tok));
      }
      return f;
    }

    std::string format_positions(PositionMap const& f) {
      std::string s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        s += (i ? "," : "") + std::to_string(f[i]);
      }
      return s.empty() ? "-" : s;
    }

    json algebra_json(FinOrdMonoid const& m) {
      return {{"size", m.size()}, {"unit", m.unit()}, {"table", m.rows()}};
    }

    json words_json(std::vector<SumWord> const& ws) {
      json a = json::array();
      for (auto const& w : ws) {
        a.push_back(format_word(w));
      }
      return a;
    }

    int yes_no(Io const& io, bool answer, json extra = json::object()) {
      if (io.as_json) {
        extra["answer"] = answer;
        io.emit(extra);
      } else {
        io.out << (answer ? "yes" : "no") << '\n';
      }
      return answer ? ok : answer_no;
    }

    struct SpanArgs {
      std::string base, left, right, f, g;

      void add_to(CLI::App* sub) {
        sub->add_option("--base", base, "base word")->required();
        sub->add_option("--left", left, "left word")->required();
        sub->add_option("--f", f, "positions of the base in the left word")->required();
        sub->add_option("--right", right, "right word")->required();
        sub->add_option("--g", g, "positions of the base in the right word")->required();
      }

      Span build(Io const& io) const {
        return Span::make(read_word_arg(base, io), read_word_arg(left, io), parse_positions(f),
                          read_word_arg(right, io), parse_positions(g));
      }
    };

    void print_amalgam(Io const& io, Amalgam const& a, AmalgamCheck const& c) {
      if (io.as_json) {
        io.emit({{"result", format_word(a.result)},
                 {"j1", a.j1.f},
                 {"j2", a.j2.f},
                 {"commutes", c.commutes},
                 {"embeddings_valid", c.embeddings_valid},
                 {"strong", c.strong}});
        return;
      }
      io.out << "result " << format_word(a.result) << '\n'
             << "j1 " << format_positions(a.j1.f) << '\n'
             << "j2 " << format_positions(a.j2.f) << '\n'
             << "commutes " << (c.commutes ? "yes" : "no") << '\n'
             << "embeddings " << (c.embeddings_valid ? "yes" : "no") << '\n'
             << "strong " << (c.strong ? "yes" : "no") << '\n';
    }

    CIdVarietyId parse_cid(std::string const& family, std::size_t n) {
      if (family == "vc") {
        return CIdVarietyId::vc(n);
      }
      if (family == "vcd") {
        return CIdVarietyId::vcd(n);
      }
      if (family == "vjoin") {
        return CIdVarietyId::vjoin(n);
      }
      if (family == "trivial") {
        return CIdVarietyId::trivial();
      }
      if (family == "cid") {
        return CIdVarietyId::full();
      }
      throw ParseError("unknown axiom family '" + family + "'");
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::istream&                   in,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Finite idempotent ordered monoids: nested sums, equations, congruences, "
                 "varieties and amalgams",
                 "lmonoid"};
    app.require_subcommand(1);
    Io          io{in, out};
    std::size_t cap_value = 0;
    app.add_flag("--json", io.as_json, "machine-readable output");
    auto* cap_opt = app.add_option("--cap", cap_value, "override the search cap (hard maxima apply)");

    std::function<int()> action;

    // compose
    std::string word;
    auto*       c_compose = app.add_subcommand("compose", "print the nested sum of a word");
    c_compose->add_option("word", word, "e.g. G3+C2")->required();
    c_compose->callback([&] {
      action = [&] {
        FinOrdMonoid const m = compose(parse_word(word));
        if (io.as_json) {
          io.emit(algebra_json(m));
        } else {
          out << format_algebra(m);
        }
        return ok;
      };
    });

    // decompose
    std::string file = "-";
    auto*       c_decompose = app.add_subcommand("decompose", "print the word of an algebra");
    c_decompose->add_option("file", file, "algebra file, - for stdin");
    c_decompose->callback([&] {
      action = [&] {
        SumWord const w = decompose(read_algebra_arg(file, io));
        if (io.as_json) {
          io.emit({{"word", format_word(w)}, {"sdi", word_is_sdi(w)}});
        } else {
          out << format_word(w) << '\n';
        }
        return ok;
      };
    });

    // enumerate
    std::size_t n      = 0;
    std::string filter = "all";
    auto*       c_enum = app.add_subcommand("enumerate", "list all words of algebra size n");
    c_enum->add_option("n", n)->required();
    c_enum->add_option("--filter", filter, "all, sdi, commutative, commutative_sdi");
    c_enum->callback([&] {
      action = [&] {
        auto const ws = enumerate_words(n, parse_filter(filter), io.cap_or(caps::enumeration));
        if (io.as_json) {
          io.emit(words_json(ws));
        } else {
          for (auto const& w : ws) {
            out << format_word(w) << '\n';
          }
        }
        return ok;
      };
    });

    // counts
    std::size_t up_to    = 14;
    auto*       c_counts = app.add_subcommand("counts", "exact counts I(n), S(n), 2^(n-1)");
    c_counts->add_option("--up-to", up_to, "largest n")->check(CLI::Range(std::size_t{1}, caps::counting));
    c_counts->callback([&] {
      action = [&] {
        json rows = json::array();
        if (!io.as_json) {
          out << "n\tI\tS\tcomm\n";
        }
        for (std::size_t k = 1; k <= up_to; ++k) {
          if (io.as_json) {
            rows.push_back({{"n", k}, {"I", count_I(k)}, {"S", count_S(k)}, {"comm", count_comm(k)}});
          } else {
            out << k << '\t' << count_I(k) << '\t' << count_S(k) << '\t' << count_comm(k) << '\n';
          }
        }
        if (io.as_json) {
          io.emit(rows);
        }
        return ok;
      };
    });

    // check
    std::string equation;
    auto*       c_check = app.add_subcommand("check", "does the algebra satisfy the equation");
    c_check->add_option("file", file, "algebra file, - for stdin")->required();
    c_check->add_option("equation", equation, "e.g. \"x1 <= e\"")->required();
    c_check->callback([&] {
      action = [&] {
        FinOrdMonoid const m  = read_algebra_arg(file, io);
        Equation const     eq = parse_equation(equation);
        auto const         w  = failure_witness(m, eq, io.cap_or(caps::evaluation));
        if (io.as_json) {
          io.emit({{"equation", format_equation(eq)},
                   {"holds", !w},
                   {"witness", w ? json(*w) : json(nullptr)}});
        } else if (w) {
          out << "fails " << format_valuation(*w) << '\n';
        } else {
          out << "holds\n";
        }
        return w ? answer_no : ok;
      };
    });

    // axiom
    std::string family;
    std::size_t index = 0;
    auto*       c_axiom = app.add_subcommand(
        "axiom", "print sigma/sigma-dual/gamma n, or the axiom of vc/vcd/vjoin n, trivial, cid");
    c_axiom->add_option("family", family, "sigma, sigma-dual, gamma, vc, vcd, vjoin, trivial, cid")
        ->required();
    c_axiom->add_option("n", index);
    c_axiom->callback([&] {
      action = [&] {
        Equation eq = family == "sigma"        ? sigma(index)
                      : family == "sigma-dual" ? sigma_dual(index)
                      : family == "gamma"      ? gamma(index)
                                               : cid_axiom(parse_cid(family, index));
        if (io.as_json) {
          io.emit({{"equation", format_equation(eq)}});
        } else {
          out << format_equation(eq) << '\n';
        }
        return ok;
      };
    });

    // sdi
    auto* c_sdi = app.add_subcommand("sdi", "is the algebra subdirectly irreducible");
    c_sdi->add_option("file", file, "algebra file, - for stdin");
    c_sdi->callback([&] {
      action = [&] {
        FinOrdMonoid const m   = read_algebra_arg(file, io);
        auto const         mon = monolith(m, io.cap_or(caps::congruence));
        json               extra;
        extra["monolith"] = mon ? json(format_congruence(*mon)) : json(nullptr);
        extra["con_is_chain"] = con_is_chain(m, io.cap_or(caps::congruence));
        if (!io.as_json && mon) {
          out << "yes\nmonolith " << format_congruence(*mon) << '\n';
          return ok;
        }
        return yes_no(io, mon.has_value(), extra);
      };
    });

    // congruences
    auto* c_cons = app.add_subcommand("congruences", "list the congruence lattice");
    c_cons->add_option("file", file, "algebra file, - for stdin");
    c_cons->callback([&] {
      action = [&] {
        auto const cons = all_congruences(read_algebra_arg(file, io), io.cap_or(caps::congruence));
        json       a    = json::array();
        for (auto const& c : cons) {
          if (io.as_json) {
            a.push_back(format_congruence(c));
          } else {
            out << format_congruence(c) << '\n';
          }
        }
        if (io.as_json) {
          io.emit(a);
        }
        return ok;
      };
    });

    // cep
    auto* c_cep = app.add_subcommand("cep", "congruence extension property");
    c_cep->add_option("file", file, "algebra file, - for stdin");
    c_cep->callback([&] {
      action = [&] { return yes_no(io, has_cep(read_algebra_arg(file, io), io.cap_or(caps::cep))); };
    });

    // embed
    std::string source, target;
    auto*       c_embed = app.add_subcommand("embed", "find an embedding between two words");
    c_embed->add_option("source", source)->required();
    c_embed->add_option("target", target)->required();
    c_embed->callback([&] {
      action = [&] {
        SumWord const s = read_word_arg(source, io), t = read_word_arg(target, io);
        auto const    f = word_embeds(s, t);
        if (io.as_json) {
          io.emit({{"embeds", f.has_value()},
                   {"positions", f ? json(*f) : json(nullptr)},
                   {"map", f ? json(lift_embedding(s, t, *f).image) : json(nullptr)}});
        } else {
          out << (f ? format_positions(*f) : std::string("none")) << '\n';
        }
        return f ? ok : answer_no;
      };
    });

    // member
    std::vector<std::string> gens;
    auto* c_member = app.add_subcommand("member", "is the word in the variety of the generators");
    c_member->add_option("word", word)->required();
    c_member->add_option("generators", gens)->required();
    c_member->callback([&] {
      action = [&] {
        std::vector<SumWord> g;
        for (auto const& s : gens) {
          g.push_back(read_word_arg(s, io));
        }
        return yes_no(io, member(read_word_arg(word, io), g, io.cap_or(caps::congruence)));
      };
    });

    // amalgamate
    SpanArgs span_args;
    auto*    c_amal = app.add_subcommand("amalgamate", "build the merged amalgam of a span");
    span_args.add_to(c_amal);
    c_amal->callback([&] {
      action = [&] {
        Span const span = span_args.build(io);
        if (auto p = incompatibility_certificate(span)) {
          if (io.as_json) {
            io.emit({{"compatible", false}, {"certificate", *p}});
          } else {
            out << "incompatible at base position " << *p << '\n';
          }
          return answer_no;
        }
        Amalgam const a = amalgamate(span);
        print_amalgam(io, a, verify_amalgam(span, a));
        return ok;
      };
    });

    // search-amalgam
    SpanArgs    search_args;
    std::size_t max_size = 7;
    auto*       c_search = app.add_subcommand("search-amalgam", "exhaustive bounded amalgam search");
    search_args.add_to(c_search);
    c_search->add_option("--max-size", max_size, "largest result size");
    c_search->callback([&] {
      action = [&] {
        Span const span = search_args.build(io);
        auto const a    = search_amalgam(span, max_size, io.cap_or(caps::amalgam_search));
        if (!a) {
          if (io.as_json) {
            io.emit({{"found", false}, {"max_size", max_size}});
          } else {
            out << "none up to size " << max_size << '\n';
          }
          return answer_no;
        }
        print_amalgam(io, *a, verify_amalgam(span, *a));
        return ok;
      };
    });

    // one-sided
    SpanArgs                 one_args;
    std::vector<std::string> targets;
    auto* c_one = app.add_subcommand("one-sided",
                                     "homomorphism from the left, embedding from the right");
    one_args.add_to(c_one);
    c_one->add_option("--targets", targets, "candidate words")->required();
    c_one->callback([&] {
      action = [&] {
        Span const           span = one_args.build(io);
        std::vector<SumWord> cands;
        for (auto const& t : targets) {
          cands.push_back(read_word_arg(t, io));
        }
        auto const s = one_sided_amalgam_search(span, cands, io.cap_or(caps::map_search));
        if (io.as_json) {
          io.emit({{"found", s.has_value()},
                   {"target", s ? json(format_word(s->target)) : json(nullptr)},
                   {"j1", s ? json(s->j1.image) : json(nullptr)},
                   {"j2", s ? json(s->j2.image) : json(nullptr)}});
        } else if (s) {
          auto elems = [](ElementMap const& m) {
            std::string r;
            for (std::size_t i = 0; i < m.image.size(); ++i) {
              r += (i ? "," : "") + std::to_string(m.image[i]);
            }
            return r;
          };
          out << "target " << format_word(s->target) << "\nj1 " << elems(s->j1) << "\nj2 "
              << elems(s->j2) << '\n';
        } else {
          out << "none\n";
        }
        return s ? ok : answer_no;
      };
    });

    // variety-status
    std::string named;
    auto*       c_status = app.add_subcommand("variety-status",
                                              "amalgamation property of a finitely generated variety");
    c_status->add_option("generators", gens);
    c_status->add_option("--named", named, "CId, G-limit or D-limit");
    c_status->callback([&] {
      action = [&] {
        AmalgamationStatus st;
        json               extra = json::object();
        if (!named.empty()) {
          if (!gens.empty()) {
            throw ParseError("give either generators or --named");
          }
          st = amalgamation_status_named(named);
        } else {
          std::vector<SumWord> g;
          for (auto const& s : gens) {
            g.push_back(read_word_arg(s, io));
          }
          st                   = amalgamation_status(g, io.cap_or(caps::congruence));
          extra["maximal_sdi"] = words_json(variety_antichain(g, io.cap_or(caps::congruence)));
        }
        if (io.as_json) {
          extra["status"] = std::string(to_string(st));
          io.emit(extra);
        } else {
          out << to_string(st) << '\n';
        }
        return st == AmalgamationStatus::No ? answer_no : ok;
      };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage_error;
    }
    if (*cap_opt) {
      io.cap = cap_value;
    }

    try {
      return action();
    } catch (CapExceeded const& e) {
      err << "error: " << e.what() << '\n';
      return cap_error;
    } catch (NoFiniteAxiom const& e) {
      err << "error: " << e.what() << '\n';
      return answer_no;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return usage_error;
    }
  }

}  // namespace lmonoid::cli
