#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "ncg/curves.hpp"
#include "ncg/errors.hpp"
#include "ncg/hurwitz.hpp"
#include "ncg/monoid.hpp"
#include "ncg/oracle.hpp"
#include "ncg/parse.hpp"

namespace ncg::cli {

  namespace {
    using Json = nlohmann::ordered_json;

    class UsageError : public std::invalid_argument {
     public:
      using std::invalid_argument::invalid_argument;
    };

    struct Options {
      int rank = 0;  // 0 = infer from the input
      std::optional<int> radius;
      std::string format = "text";
      std::string out_file;
      std::vector<std::string> args;
    };

    int default_radius() {
      if (const char* env = std::getenv("NCG_RADIUS"); env != nullptr && *env != '\0') {
        try {
          std::size_t used = 0;
          int r = std::stoi(env, &used);
          if (used == std::string(env).size() && r >= 0) return r;
        } catch (const std::exception&) {
        }
        throw UsageError("NCG_RADIUS must be a non-negative integer");
      }
      return 4;
    }

    int radius_of(const Options& o) { return o.radius ? *o.radius : default_radius(); }

    Rank rank_of(const Options& o, int inferred) {
      if (o.rank != 0) {
        if (inferred > o.rank) throw UsageError("generator index exceeds the rank");
        return Rank(o.rank);
      }
      return Rank(std::max(inferred, 1));
    }

    Rank rank_for_words(const Options& o, const std::vector<FreeWord>& ws) {
      int m = 0;
      for (const FreeWord& w : ws) m = std::max(m, w.max_index());
      return rank_of(o, m);
    }

    Rank rank_for_tuple(const Options& o, std::size_t size) {
      if (o.rank != 0 && static_cast<std::size_t>(o.rank) != size) {
        throw UsageError("tuple length differs from the rank");
      }
      return Rank(static_cast<int>(size));
    }

    int max_index(const CoxWord& w) {
      int m = 0;
      for (int s : w.letters()) m = std::max(m, s);
      return m;
    }

    template <class T>
    void check_tuple_indices(const std::vector<T>& t) {
      for (const T& w : t) {
        int m = 0;
        if constexpr (std::is_same_v<T, FreeWord>) {
          m = w.max_index();
        } else {
          m = max_index(w);
        }
        if (m > static_cast<int>(t.size())) throw UsageError("generator index exceeds the rank");
      }
    }

    void need_args(const Options& o, std::size_t lo, std::size_t hi) {
      if (o.args.size() < lo || o.args.size() > hi) {
        throw UsageError("wrong number of arguments");
      }
    }

    Json json_list(const std::vector<int>& s) {
      Json a = Json::array();
      for (int v : s) a.push_back(v);
      return a;
    }

    template <class W>
    Json json_tuple(const Tuple<W>& t) {
      Json a = Json::array();
      for (const W& w : t) a.push_back(to_string(w));
      return a;
    }

    std::vector<int> unit_set(const FreeWord& w, Rank rank) {
      std::vector<int> out;
      auto wn = winding_numbers(w, rank);
      for (std::size_t j = 0; j < wn.size(); ++j) {
        if (wn[j] == 1) out.push_back(static_cast<int>(j) + 1);
      }
      return out;
    }

    Json json_curve(const TautCurve& c) {
      Json j;
      j["word"] = to_string(c.word());
      if (c.embedded()) j["interior"] = json_list(interior(c));
      j["intersections"] = c.self_intersections();
      Json gates = Json::array();
      for (const auto& g : c.gate_orders()) {
        Json ord = Json::array();
        for (int k : g) ord.push_back(k);
        gates.push_back(ord);
      }
      j["gate_orders"] = gates;
      return j;
    }

    std::string text_curve(const TautCurve& c) {
      std::ostringstream os;
      os << "word: " << to_string(c.word()) << '\n';
      if (c.embedded()) os << "interior: " << format_set(interior(c)) << '\n';
      os << "intersections: " << c.self_intersections() << '\n';
      for (std::size_t j = 0; j < c.gate_orders().size(); ++j) {
        os << "gate " << j + 1 << ":";
        for (int k : c.gate_orders()[j]) os << ' ' << k;
        os << '\n';
      }
      return os.str();
    }

    std::string dump(const Json& j) { return j.dump(2) + "\n"; }

    std::string bool_text(bool b) { return b ? "true\n" : "false\n"; }

    std::vector<Simple> simples_of(const std::vector<FreeWord>& ws, Rank rank) {
      std::vector<Simple> out;
      for (const FreeWord& w : ws) out.push_back(simple_from_word(w, rank));
      return out;
    }

    std::string format_element(const std::vector<Simple>& f) {
      if (f.empty()) return "e";
      std::string s;
      for (const Simple& x : f) s += "[" + to_string(x.word()) + "]";
      return s;
    }

    // Commands. Each returns the full output document.
    using Handler = std::function<std::string(const Options&)>;

    std::string cmd_reduce(const Options& o) {
      need_args(o, 1, 1);
      FreeWord w = parse_free_word(o.args[0]);
      rank_for_words(o, {w});
      if (o.format == "json") return dump(Json{{"word", to_string(w)}});
      return to_string(w) + "\n";
    }

    std::string cmd_project(const Options& o) {
      need_args(o, 1, 1);
      FreeWord w = parse_free_word(o.args[0]);
      rank_for_words(o, {w});
      CoxWord c = project(w);
      if (o.format == "json") return dump(Json{{"word", to_string(c)}});
      return to_string(c) + "\n";
    }

    std::string cmd_hurwitz(const Options& o) {
      need_args(o, 2, 2);
      BraidWord b = parse_braid(o.args[0]);
      auto emit = [&](const auto& t) {
        if (o.format == "json") return dump(Json{{"braid", to_string(b)}, {"tuple", json_tuple(t)}});
        return to_string(t) + "\n";
      };
      if (is_cox_text(o.args[1])) {
        CoxTuple t = parse_cox_tuple(o.args[1]);
        rank_for_tuple(o, t.size());
        check_tuple_indices(t);
        return emit(hurwitz_apply(b, t));
      }
      FreeTuple t = parse_free_tuple(o.args[1]);
      rank_for_tuple(o, t.size());
      check_tuple_indices(t);
      return emit(hurwitz_apply(b, t));
    }

    std::string cmd_descend(const Options& o) {
      need_args(o, 1, 1);
      CoxTuple t = parse_cox_tuple(o.args[0]);
      rank_for_tuple(o, t.size());
      check_tuple_indices(t);
      BraidWord b = descend(t);
      if (o.format == "json") return dump(Json{{"braid", to_string(b)}, {"tuple", json_tuple(t)}});
      return to_string(b) + "\n";
    }

    std::string cmd_lift(const Options& o) {
      need_args(o, 1, 1);
      const std::string& a = o.args[0];
      if (a.find('(') != std::string::npos) {
        CoxTuple t = parse_cox_tuple(a);
        rank_for_tuple(o, t.size());
        check_tuple_indices(t);
        FreeTuple u = lift_tuple(t);
        if (o.format == "json") return dump(Json{{"tuple", json_tuple(u)}});
        return to_string(u) + "\n";
      }
      CoxWord t = parse_cox_word(a);
      Rank rank = rank_of(o, max_index(t));
      FreeWord r = lift_reflection(t, rank, o.radius ? *o.radius : 8);
      if (o.format == "json") {
        return dump(Json{{"word", to_string(r)}, {"interior", json_list(unit_set(r, rank))}});
      }
      return to_string(r) + "\n";
    }

    std::string cmd_is_nc(const Options& o) {
      need_args(o, 1, 1);
      FreeWord w = parse_free_word(o.args[0]);
      Rank rank = rank_for_words(o, {w});
      if (o.format == "svg") return render_svg(realize(w, rank));
      bool nc = is_noncrossing(w, rank);
      if (o.format == "json") {
        return dump(Json{{"word", to_string(w)},
                         {"result", nc},
                         {"intersections", realize(w, rank).self_intersections()}});
      }
      return bool_text(nc);
    }

    std::string cmd_interior(const Options& o) {
      need_args(o, 1, 1);
      FreeWord w = parse_free_word(o.args[0]);
      Rank rank = rank_for_words(o, {w});
      auto s = interior(realize(w, rank));
      if (o.format == "json") return dump(Json{{"word", to_string(w)}, {"interior", json_list(s)}});
      return format_set(s) + "\n";
    }

    std::string lattice(const Options& o, bool join) {
      need_args(o, 2, 2);
      FreeWord a = parse_free_word(o.args[0]);
      FreeWord b = parse_free_word(o.args[1]);
      Rank rank = rank_for_words(o, {a, b});
      FreeWord r = join ? nc_join(a, b, rank) : nc_meet(a, b, rank);
      if (o.format == "svg") return render_svg(mutual_tighten(a, b, rank));
      if (o.format == "json") {
        return dump(Json{{"word", to_string(r)}, {"interior", json_list(unit_set(r, rank))}});
      }
      return to_string(r) + "\n";
    }

    std::string cmd_contains(const Options& o) {
      need_args(o, 2, 2);
      FreeWord big = parse_free_word(o.args[0]);
      FreeWord small = parse_free_word(o.args[1]);
      Rank rank = rank_for_words(o, {big, small});
      bool r = contains(big, small, rank);
      if (o.format == "json") return dump(Json{{"result", r}});
      return bool_text(r);
    }

    std::string cmd_nf(const Options& o) {
      need_args(o, 1, 1);
      auto ws = parse_element(o.args[0]);
      Rank rank = rank_for_words(o, ws);
      NormalForm nf = normalize(simples_of(ws, rank));
      if (o.format == "json") {
        Json factors = Json::array();
        for (const Simple& s : nf.factors) {
          factors.push_back(Json{{"word", to_string(s.word())}, {"interior", json_list(s.interior())}});
        }
        return dump(Json{{"factors", factors}});
      }
      return format_element(nf.factors) + "\n";
    }

    std::string cmd_equal(const Options& o) {
      need_args(o, 2, 2);
      auto x = parse_element(o.args[0]);
      auto y = parse_element(o.args[1]);
      std::vector<FreeWord> all = x;
      all.insert(all.end(), y.begin(), y.end());
      Rank rank = rank_for_words(o, all);
      bool r = monoid_equal(simples_of(x, rank), simples_of(y, rank));
      if (o.format == "json") return dump(Json{{"result", r}});
      return bool_text(r);
    }

    std::string cmd_orbit(const Options& o) {
      need_args(o, 1, 1);
      const int radius = radius_of(o);
      auto emit = [&](const auto& tuples) {
        if (o.format == "json") {
          Json list = Json::array();
          for (const auto& t : tuples) list.push_back(json_tuple(t));
          return dump(Json{{"count", tuples.size()}, {"tuples", list}});
        }
        std::string s;
        for (const auto& t : tuples) s += to_string(t) + "\n";
        return s;
      };
      if (is_cox_text(o.args[0])) {
        CoxTuple t = parse_cox_tuple(o.args[0]);
        rank_for_tuple(o, t.size());
        check_tuple_indices(t);
        return emit(orbit_ball(t, radius));
      }
      FreeTuple t = parse_free_tuple(o.args[0]);
      rank_for_tuple(o, t.size());
      check_tuple_indices(t);
      return emit(orbit_ball(t, radius));
    }

    std::string cmd_divisors(const Options& o) {
      need_args(o, 0, 0);
      if (o.rank == 0) throw UsageError("divisors needs -n");
      Rank rank(o.rank);
      auto words = enum_divisor_words(rank, radius_of(o));
      if (o.format == "json") {
        Json list = Json::array();
        for (const FreeWord& w : words) {
          list.push_back(Json{{"word", to_string(w)}, {"interior", json_list(unit_set(w, rank))}});
        }
        return dump(Json{{"count", words.size()}, {"divisors", list}});
      }
      std::string s;
      for (const FreeWord& w : words) s += poset_line(w, rank) + "\n";
      return s;
    }

    std::string cmd_render(const Options& o) {
      need_args(o, 1, 2);
      std::vector<FreeWord> ws;
      for (const auto& a : o.args) ws.push_back(parse_free_word(a));
      Rank rank = rank_for_words(o, ws);
      if (ws.size() == 1) {
        TautCurve c = realize(ws[0], rank);
        if (o.format == "svg") return render_svg(c);
        if (o.format == "json") return dump(json_curve(c));
        return text_curve(c);
      }
      PairDiagram d = mutual_tighten(ws[0], ws[1], rank);
      if (o.format == "svg") return render_svg(d);
      if (o.format == "json") {
        return dump(Json{{"first", json_curve(d.first)},
                         {"second", json_curve(d.second)},
                         {"intersections", d.mutual_intersections()}});
      }
      return text_curve(d.first) + text_curve(d.second) +
             "mutual intersections: " + std::to_string(d.mutual_intersections()) + "\n";
    }

    struct Command {
      const char* name;
      const char* help;
      const char* usage;
      Handler handler;
      bool svg;
    };

    std::vector<Command> commands() {
      return {
          {"reduce", "Freely reduce a word", "WORD", cmd_reduce, false},
          {"project", "Image in the universal Coxeter group", "WORD", cmd_project, false},
          {"hurwitz", "Apply a braid to a tuple", "BRAID TUPLE", cmd_hurwitz, false},
          {"descend", "Braid taking (s1..sn) to a tuple of reflections", "TUPLE", cmd_descend, false},
          {"lift", "Lift a Coxeter tuple or reflection to F_n", "TUPLE|WORD", cmd_lift, false},
          {"is-nc", "Whether a word is non-crossing", "WORD", cmd_is_nc, true},
          {"interior", "Punctures enclosed by an embedded loop", "WORD", cmd_interior, false},
          {"meet", "Meet of two divisors of g", "A B",
           [](const Options& o) { return lattice(o, false); }, true},
          {"join", "Join of two divisors of g", "A B",
           [](const Options& o) { return lattice(o, true); }, true},
          {"contains", "Whether the first loop contains the second", "BIG SMALL", cmd_contains, false},
          {"nf", "Greedy normal form of a monoid element", "ELEMENT", cmd_nf, false},
          {"equal", "Whether two monoid elements are equal", "X Y", cmd_equal, false},
          {"orbit", "Hurwitz orbit ball of a tuple", "TUPLE", cmd_orbit, false},
          {"divisors", "Divisors of g found from the orbit of (f1..fn)", "", cmd_divisors, false},
          {"render", "Taut realization of one loop or a pair", "WORD [WORD]", cmd_render, true},
      };
    }

    void write_output(const Options& o, const std::string& doc, std::ostream& out) {
      if (o.out_file.empty()) {
        out << doc;
        return;
      }
      std::ofstream f(o.out_file, std::ios::binary);
      if (!f) throw UsageError("cannot open " + o.out_file);
      f << doc;
      if (!f) throw UsageError("cannot write " + o.out_file);
    }
  }  // namespace

  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-crossing loops, Hurwitz orbits and the dual monoid of the free group"};
    app.name("ncg");
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("-n,--rank", opt.rank, "Number of punctures (default: inferred)")
        ->check(CLI::PositiveNumber);
    app.add_option("--radius", opt.radius, "Orbit radius (default 4, or $NCG_RADIUS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", opt.format, "text, json or svg")
        ->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--out", opt.out_file, "Write output to FILE");

    const auto table = commands();
    std::map<CLI::App*, const Command*> by_app;
    std::vector<std::string> positional(3);
    for (const Command& c : table) {
      CLI::App* sub = app.add_subcommand(c.name, c.help);
      // One scalar positional per argument: a vector positional would read
      // bracketed monoid elements as CLI11 list syntax.
      for (std::size_t k = 0; k < positional.size(); ++k) {
        sub->add_option("arg" + std::to_string(k + 1), positional[k], k == 0 ? c.usage : "");
      }
      by_app[sub] = &c;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      int rc = app.exit(e, out, err);
      return rc == 0 ? 0 : 2;
    }

    const Command* cmd = nullptr;
    for (auto& [sub, c] : by_app) {
      if (!sub->parsed()) continue;
      cmd = c;
      for (std::size_t k = 0; k < positional.size(); ++k) {
        if (sub->count("arg" + std::to_string(k + 1)) > 0) opt.args.push_back(positional[k]);
      }
    }
    try {
      if (cmd == nullptr) throw UsageError("no command given");
      if (opt.format == "svg" && !cmd->svg) throw UsageError("svg output is not available for this command");
      write_output(opt, cmd->handler(opt), out);
      return 0;
    } catch (const DomainError& e) {
      err << e.name() << ": " << e.what() << '\n';
      return 1;
    } catch (const EngineError& e) {
      err << "internal error: " << e.what() << '\n';
      return 3;
    } catch (const std::invalid_argument& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    } catch (const std::out_of_range& e) {
      err << "usage error: " << e.what() << '\n';
      return 2;
    }
  }

}  // namespace ncg::cli
