#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "semitop/expression.hpp"
#include "semitop/group_completion.hpp"
#include "semitop/homology.hpp"
#include "semitop/structure.hpp"
#include "semitop/table_io.hpp"
#include "semitop/theorem_checks.hpp"
#include "semitop_cli/commands.hpp"

namespace semitop::cli {

  namespace {

    class UsageError : public Error {
     public:
      using Error::Error;
    };

    using Clock = std::chrono::steady_clock;
    using nlohmann::json;

    double seconds_since(Clock::time_point start) {
      return std::chrono::duration<double>(Clock::now() - start).count();
    }

    std::string fixed3(double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", v);
      return buf;
    }

    struct RunConfig {
      std::string              input;
      std::vector<std::string> inputs;
      std::size_t              qmax         = 3;
      bool                     unnormalized = false;
      std::size_t              column_cap   = 1'000'000;
      std::string              format       = "text";
      std::string              dump_dir;
      std::size_t              max_cosets = 0;  // 0: default of 4|S|
      std::string              range;

      bool json() const {
        return format == "json";
      }
      BarComplexOptions bar_options() const {
        return {.normalized = !unnormalized, .column_cap = column_cap};
      }
    };

    std::size_t default_column_cap() {
      char const* env = std::getenv("SEMITOP_COLUMN_CAP");
      if (env == nullptr || *env == '\0') {
        return 1'000'000;
      }
      try {
        std::size_t used = 0;
        auto        v    = std::stoull(env, &used);
        if (used != std::string(env).size() || v == 0) {
          throw std::invalid_argument(env);
        }
        return v;
      } catch (std::logic_error const&) {
        throw UsageError(std::string("SEMITOP_COLUMN_CAP must be a positive integer, got '") + env + "'");
      }
    }

    FiniteSemigroup load_input(std::string const& text) {
      std::error_code ec;
      if (std::filesystem::is_regular_file(text, ec)) {
        try {
          return load_table(text);
        } catch (NonAssociative const&) {
          throw;
        } catch (ShapeError const&) {
          throw;
        } catch (Error const& e) {
          throw UsageError(e.what());
        }
      }
      return parse_expression(text);
    }

    // "a..b" or "a".
    std::pair<std::size_t, std::size_t> parse_range(std::string const& text) {
      try {
        auto const  dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
          auto v = std::stoull(text, &used);
          if (used != text.size()) {
            throw std::invalid_argument(text);
          }
          return {v, v};
        }
        auto lo = std::stoull(text.substr(0, dots), &used);
        if (used != dots) {
          throw std::invalid_argument(text);
        }
        auto const rest = text.substr(dots + 2);
        auto       hi   = std::stoull(rest, &used);
        if (used != rest.size() || hi < lo) {
          throw std::invalid_argument(text);
        }
        return {lo, hi};
      } catch (std::logic_error const&) {
        throw UsageError("expected a range 'a..b', got '" + text + "'");
      }
    }

    std::optional<std::string> name_of(FiniteSemigroup const& s, std::optional<Element> e) {
      if (!e) {
        return std::nullopt;
      }
      return s.name(*e);
    }

    bool is_group(FiniteSemigroup const& s) {
      auto const e = s.identity();
      if (!e) {
        return false;
      }
      for (Element a = 0; a < s.order(); ++a) {
        bool unit = false;
        for (Element b = 0; b < s.order() && !unit; ++b) {
          unit = s.mul(a, b) == *e && s.mul(b, a) == *e;
        }
        if (!unit) {
          return false;
        }
      }
      return true;
    }

    void emit(std::ostream& out, json const& doc) {
      out << doc.dump(2) << '\n';
    }

    int cmd_analyze(RunConfig const& cfg, std::ostream& out) {
      auto const start = Clock::now();
      auto const s     = load_input(cfg.input);
      auto const k     = minimal_ideal(s);
      auto const ps    = principal_series(s);

      json doc{{"command", "analyze"},
               {"input", cfg.input},
               {"order", s.order()},
               {"monoid", s.is_monoid()},
               {"group", is_group(s)},
               {"idempotents", idempotents(s).size()},
               {"band", is_band(s)},
               {"minimal_ideal", {{"size", k.size()}, {"rectangular_band", is_rectangular_band(s, k)}}},
               {"regular", is_regular(s)},
               {"aperiodic", is_aperiodic(s)},
               {"j_classes", j_classes(s).size()},
               {"principal_series_length", ps.length()}};
      auto const id = name_of(s, s.identity());
      auto const z  = name_of(s, s.zero());
      doc["identity"] = id ? json(*id) : json(nullptr);
      doc["zero"]     = z ? json(*z) : json(nullptr);
      doc["elapsed"]  = seconds_since(start);

      if (cfg.json()) {
        emit(out, doc);
        return kSuccess;
      }
      auto yes = [](bool b) {
        return b ? "true" : "false";
      };
      out << "input: " << cfg.input << '\n'
          << "order: " << s.order() << '\n'
          << "identity: " << id.value_or("none") << '\n'
          << "zero: " << z.value_or("none") << '\n'
          << "group: " << yes(is_group(s)) << '\n'
          << "idempotents: " << doc["idempotents"].get<std::size_t>() << '\n'
          << "band: " << yes(doc["band"].get<bool>()) << '\n'
          << "minimal ideal: size " << k.size() << ", rectangular band "
          << yes(doc["minimal_ideal"]["rectangular_band"].get<bool>()) << '\n'
          << "regular: " << yes(doc["regular"].get<bool>()) << '\n'
          << "aperiodic: " << yes(doc["aperiodic"].get<bool>()) << '\n'
          << "J-classes: " << doc["j_classes"].get<std::size_t>() << '\n'
          << "principal series length: " << ps.length() << '\n'
          << "time: " << fixed3(doc["elapsed"].get<double>()) << "s\n";
      return kSuccess;
    }

    int cmd_homology(RunConfig const& cfg, std::ostream& out) {
      auto const start    = Clock::now();
      auto       s        = load_input(cfg.input);
      bool       adjoined = false;
      if (!cfg.unnormalized && !s.is_monoid()) {
        s        = adjoin_identity(s);
        adjoined = true;
      }
      if (!cfg.json()) {
        out << "input: " << cfg.input << " (order " << s.order() << (adjoined ? ", identity adjoined" : "")
            << ")\n";
      }
      auto const options = cfg.bar_options();
      auto const c       = bar_complex(s, cfg.qmax, options);
      double const build = seconds_since(start);

      if (!cfg.dump_dir.empty()) {
        std::filesystem::create_directories(cfg.dump_dir);
        for (std::size_t q = 1; q <= c.qmax(); ++q) {
          auto          path = std::filesystem::path(cfg.dump_dir) / ("d_" + std::to_string(q) + ".txt");
          std::ofstream f(path);
          if (!f) {
            throw UsageError("cannot write " + path.string());
          }
          c.boundary(q).write_text(f);
        }
      }

      json boundaries = json::array();
      if (!cfg.json()) {
        out << "complex: " << (options.normalized ? "normalized" : "unnormalized") << ", built in " << fixed3(build)
            << "s\n";
        for (std::size_t q = 1; q <= c.qmax(); ++q) {
          auto const& d = c.boundary(q);
          out << "  d_" << q << ": " << d.rows() << " x " << d.cols() << ", nnz " << d.nnz() << '\n';
        }
        out.flush();
      }
      auto const profile = homology_profile(c, [&](std::size_t q, SparseMatrix const& d, double sec) {
        boundaries.push_back(
            {{"q", q}, {"rows", d.rows()}, {"cols", d.cols()}, {"nnz", d.nnz()}, {"seconds", sec}});
        if (!cfg.json()) {
          out << "  reduced d_" << q << " in " << fixed3(sec) << "s\n";
          out.flush();
        }
      });
      double const total = seconds_since(start);

      if (cfg.json()) {
        json groups = json::array();
        for (auto const& h : profile) {
          groups.push_back(to_json(h));
        }
        emit(out, json{{"command", "homology"},
                       {"input", cfg.input},
                       {"order", s.order()},
                       {"identity_adjoined", adjoined},
                       {"normalized", options.normalized},
                       {"qmax", cfg.qmax},
                       {"dims", c.dims},
                       {"boundaries", boundaries},
                       {"homology", groups},
                       {"elapsed", total}});
        return kSuccess;
      }
      for (std::size_t q = 0; q < profile.size(); ++q) {
        out << "H_" << q << " = " << profile[q].to_string() << '\n';
      }
      out << "time: " << fixed3(total) << "s\n";
      return kSuccess;
    }

    int cmd_completion(RunConfig const& cfg, std::ostream& out) {
      auto const start = Clock::now();
      auto const s     = load_input(cfg.input);
      auto const g     = group_completion(s, cfg.max_cosets == 0 ? std::nullopt : std::optional(cfg.max_cosets));
      auto const ab    = abelianization(g);
      double const dt  = seconds_since(start);

      if (cfg.json()) {
        json images = json::object();
        for (Element a = 0; a < s.order(); ++a) {
          images[s.name(a)] = g.generator_images[a];
        }
        emit(out, json{{"command", "completion"},
                       {"input", cfg.input},
                       {"order", g.order},
                       {"generator_images", images},
                       {"abelianization", to_json(ab)},
                       {"simply_connected", g.order == 1},
                       {"elapsed", dt}});
        return kSuccess;
      }
      out << "input: " << cfg.input << " (order " << s.order() << ")\n"
          << "group order: " << g.order << '\n'
          << "generator images:";
      for (Element a = 0; a < s.order(); ++a) {
        out << ' ' << s.name(a) << "->" << g.generator_images[a];
      }
      out << '\n'
          << "abelianization: " << ab.to_string() << '\n'
          << "simply_connected: " << (g.order == 1 ? "true" : "false") << '\n'
          << "time: " << fixed3(dt) << "s\n";
      return kSuccess;
    }

    int finish_verify(RunConfig const& cfg, std::string const& suite, std::vector<SuiteReport> const& reports,
                      std::ostream& out) {
      bool ok = std::all_of(reports.begin(), reports.end(), [](auto const& r) {
        return r.passed();
      });
      if (cfg.json()) {
        json list = json::array();
        for (auto const& r : reports) {
          list.push_back(r.to_json());
        }
        emit(out, json{{"command", "verify"}, {"suite", suite}, {"reports", list}, {"verdict", ok ? "pass" : "fail"}});
      } else {
        for (auto const& r : reports) {
          out << "suite " << r.suite << ' ' << r.parameters.dump() << '\n';
          for (auto const& c : r.checks) {
            out << "  " << c.to_text() << '\n';
          }
        }
        out << "verdict: " << (ok ? "pass" : "fail") << '\n';
      }
      return ok ? kSuccess : kAssertionFailure;
    }

    int cmd_verify_moore(RunConfig const& cfg, std::ostream& out) {
      auto const [lo, hi] = parse_range(cfg.range);
      if (lo < 2) {
        throw UsageError("moore needs n >= 2");
      }
      std::vector<SuiteReport> reports;
      for (std::size_t n = lo; n <= hi; ++n) {
        reports.push_back(check_moore(static_cast<std::uint32_t>(n)));
      }
      return finish_verify(cfg, "moore", reports, out);
    }

    int cmd_verify_suspension(RunConfig const& cfg, std::ostream& out) {
      auto const s = load_input(cfg.input);
      return finish_verify(cfg, "suspension", {check_suspension_shift(s, cfg.qmax, cfg.bar_options())}, out);
    }

    int cmd_verify_wedge(RunConfig const& cfg, std::ostream& out) {
      auto const m = load_input(cfg.inputs.at(0));
      auto const n = load_input(cfg.inputs.at(1));
      return finish_verify(cfg, "wedge", {check_wedge_additivity(m, n, cfg.qmax, cfg.bar_options())}, out);
    }

    int cmd_verify_regular(RunConfig const& cfg, std::ostream& out) {
      auto const s        = load_input(cfg.input);
      auto const [lo, hi] = parse_range(cfg.range);
      return finish_verify(cfg, "regular-vanishing", {check_regular_vanishing(s, lo, hi, cfg.bar_options())}, out);
    }

    json error_doc(char const* kind, std::exception const& e) {
      json doc{{"error", {{"type", kind}, {"message", e.what()}}}};
      if (auto const* p = dynamic_cast<ParseError const*>(&e)) {
        doc["error"]["position"] = p->position;
      }
      if (auto const* d = dynamic_cast<DegreeTooLarge const*>(&e)) {
        doc["error"]["degree"] = d->degree;
        doc["error"]["rank"]   = d->rank;
        doc["error"]["cap"]    = d->cap;
      }
      if (auto const* x = dynamic_cast<ExactnessFailure const*>(&e)) {
        doc["error"]["position"] = x->position;
        doc["error"]["defect"]   = x->defect;
      }
      return doc;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homology and group completion of finite semigroups"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_format = [&](CLI::App* sub) {
      sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_complex = [&](CLI::App* sub) {
      sub->add_option("--column-cap", cfg.column_cap, "Largest chain group rank to build")
          ->check(CLI::PositiveNumber);
      sub->add_flag("--unnormalized", cfg.unnormalized, "Use the unnormalized bar complex");
    };
    char const* input_help = "Constructor expression such as \"W(M(2), I(RB(2,2)))\" or a table file";

    int (*command)(RunConfig const&, std::ostream&) = nullptr;

    auto* analyze = app.add_subcommand("analyze", "Structural invariants of a semigroup");
    analyze->add_option("input", cfg.input, input_help)->required();
    add_format(analyze);
    analyze->callback([&] { command = cmd_analyze; });

    auto* homology = app.add_subcommand("homology", "Integral homology of the classifying space");
    homology->add_option("input", cfg.input, input_help)->required();
    homology->add_option("--qmax", cfg.qmax, "Build the complex through this degree; reports H_0..H_{qmax-1}");
    homology->add_option("--dump-boundaries", cfg.dump_dir, "Write each boundary matrix to DIR/d_q.txt");
    add_complex(homology);
    add_format(homology);
    homology->callback([&] { command = cmd_homology; });

    auto* completion = app.add_subcommand("completion", "Group completion (fundamental group)");
    completion->add_option("input", cfg.input, input_help)->required();
    completion->add_option("--max-cosets", cfg.max_cosets, "Coset cap (default 4|S|)")->check(CLI::PositiveNumber);
    add_format(completion);
    completion->callback([&] { command = cmd_completion; });

    auto* verify = app.add_subcommand("verify", "Run a theorem suite; exit status 1 on any failed check");
    verify->require_subcommand(1);

    auto* moore = verify->add_subcommand("moore", "Resolution and homology of M_n");
    moore->add_option("--n", cfg.range, "n or a range a..b")->required();
    add_format(moore);
    moore->callback([&] { command = cmd_verify_moore; });

    auto* suspension = verify->add_subcommand("suspension", "H_q(BJ(S)) = H_{q-1}(BS)");
    suspension->add_option("input", cfg.input, input_help)->required();
    suspension->add_option("--qmax", cfg.qmax, "Degree cutoff for J(S)");
    add_complex(suspension);
    add_format(suspension);
    suspension->callback([&] { command = cmd_verify_suspension; });

    auto* wedge = verify->add_subcommand("wedge", "Reduced homology of the wedge monoid is additive");
    wedge->add_option("inputs", cfg.inputs, "Two monoids M and N")->required()->expected(2);
    wedge->add_option("--qmax", cfg.qmax, "Degree cutoff");
    add_complex(wedge);
    add_format(wedge);
    wedge->callback([&] { command = cmd_verify_wedge; });

    auto* regular = verify->add_subcommand("regular-vanishing", "High-degree homology of a regular monoid vanishes");
    regular->add_option("input", cfg.input, input_help)->required();
    regular->add_option("--range", cfg.range, "Degrees q or a..b")->required();
    add_complex(regular);
    add_format(regular);
    regular->callback([&] { command = cmd_verify_regular; });

    try {
      cfg.column_cap = default_column_cap();
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? kSuccess : kUsageError;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return kUsageError;
    }

    auto fail = [&](int code, char const* kind, std::exception const& e) {
      err << "error: " << e.what() << '\n';
      if (cfg.json()) {
        emit(out, error_doc(kind, e));
      }
      return code;
    };
    try {
      return command(cfg, out);
    } catch (DegreeTooLarge const& e) {
      return fail(kResourceCap, "DegreeTooLarge", e);
    } catch (CosetCapExceeded const& e) {
      return fail(kResourceCap, "CosetCapExceeded", e);
    } catch (InfeasibleDegree const& e) {
      return fail(kResourceCap, "InfeasibleDegree", e);
    } catch (ParseError const& e) {
      return fail(kUsageError, "ParseError", e);
    } catch (NonAssociative const& e) {
      return fail(kUsageError, "NonAssociative", e);
    } catch (ShapeError const& e) {
      return fail(kUsageError, "ShapeError", e);
    } catch (NotAMonoid const& e) {
      return fail(kUsageError, "NotAMonoid", e);
    } catch (NotRegular const& e) {
      return fail(kUsageError, "NotRegular", e);
    } catch (MinimalIdealNotRectangular const& e) {
      return fail(kUsageError, "MinimalIdealNotRectangular", e);
    } catch (UsageError const& e) {
      return fail(kUsageError, "UsageError", e);
    } catch (ExactnessFailure const& e) {
      return fail(kAssertionFailure, "ExactnessFailure", e);
    } catch (Error const& e) {
      return fail(kAssertionFailure, "Error", e);
    } catch (std::exception const& e) {
      return fail(kAssertionFailure, "InternalError", e);
    }
  }

}  // namespace semitop::cli
