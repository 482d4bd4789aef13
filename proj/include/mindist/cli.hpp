#ifndef MINDIST_CLI_HPP
#define MINDIST_CLI_HPP

// Command-line front end: gb, vanish, table, cartesian.
//
// Exit codes: 0 success, 2 malformed input or arguments, 3 precondition
// violated, 4 search budget exceeded (table rows are still printed).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mindist/cartesian.hpp"
#include "mindist/codes.hpp"
#include "mindist/io.hpp"

namespace mindist::cli {

enum ExitCode { kOk = 0, kParse = 2, kPrecondition = 3, kBudget = 4 };

struct RunConfig {
  std::string field = "2";
  std::string order = "grevlex";
  std::string priority;  // 1-based indices, most significant first
  std::size_t vars = 0;
  std::string ideal_path, points_path, param_path, sets_path, out_path;
  std::size_t torus = 0, full = 0;
  int dmax = 0;
  int d = 0;
  std::string method = "brute";
  std::uint64_t budget = search::kDefaultBudget;
  unsigned jobs = 1;
  bool json = false;
  bool check_conjecture = false;
};

namespace detail {

inline MonomialOrder make_order(const RunConfig& c, std::size_t s) {
  std::vector<std::size_t> prio = default_priority(s);
  if (!c.priority.empty()) {
    prio.clear();
    std::stringstream ss(c.priority);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("bad priority entry '" + tok + "'");
      }
      if (pos != tok.size()) throw ParseError("bad priority entry '" + tok + "'");
      if (v < 1 || v > s) throw PreconditionError("priority entry " + tok + " outside 1.." + std::to_string(s));
      prio.push_back(v - 1);
    }
    if (prio.size() != s) throw PreconditionError("priority must list all " + std::to_string(s) + " variables");
  }
  if (c.order == "lex") return MonomialOrder::lex(prio);
  if (c.order == "grevlex") return MonomialOrder::grevlex(prio);
  throw ParseError("unknown order '" + c.order + "' (expected lex or grevlex)");
}

inline std::string join(const hilbert::IntPoly& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  return s.empty() ? "0" : s;
}

/// Point set from exactly one of --points, --param, --torus, --full.
struct PointSource {
  PointSet X;
  std::optional<ParameterizedSpec> param;
};

inline std::optional<PointSource> load_points(const RunConfig& c, const gf::FieldPtr& F) {
  const int given = !c.points_path.empty() + !c.param_path.empty() + (c.torus > 0) + (c.full > 0);
  if (given > 1) throw PreconditionError("give only one of --points, --param, --torus, --full");
  if (!c.points_path.empty()) return PointSource{io::parse_points(io::read_lines(c.points_path), F), std::nullopt};
  if (!c.param_path.empty()) {
    auto spec = io::parse_parameterization(io::read_lines(c.param_path), F);
    auto X = parameterized_points(spec);
    return PointSource{std::move(X), std::move(spec)};
  }
  if (c.torus > 0) return PointSource{enumerate_torus(F, c.torus), std::nullopt};
  if (c.full > 0) return PointSource{enumerate_full(F, c.full), std::nullopt};
  return std::nullopt;
}

/// Vanishing ideal; for parameterized input both constructions must agree.
inline GroebnerBasis vanishing(const PointSource& src, const MonomialOrder& ord) {
  if (src.param) return vanishing_ideal_parameterized(*src.param, ord).by_elimination;
  return vanishing_ideal_points(src.X, ord);
}

inline std::string delta_cell(const DistanceReport& r) {
  if (r.skipped) return "skipped";
  return r.delta ? std::to_string(*r.delta) : "-";
}

inline std::string method_cell(const DistanceReport& r) { return r.fd_empty ? r.method + ":empty" : r.method; }

inline std::string witness_cell(const DistanceReport& r, const MonomialOrder& ord) {
  return r.witness ? r.witness->to_string(&ord) : "-";
}

inline int print_table(const std::vector<DistanceReport>& rows, const MonomialOrder& ord, const RunConfig& c,
                       const gf::Field& F, std::ostream& out) {
  bool skipped = false;
  if (c.json) {
    nlohmann::ordered_json j;
    j["field"] = F.name();
    j["order"] = ord.name();
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json row;
      row["d"] = r.d;
      row["deg"] = r.degree;
      row["H"] = r.dimension;
      row["delta"] = r.delta && !r.skipped ? nlohmann::ordered_json(*r.delta) : nlohmann::ordered_json(nullptr);
      row["fp"] = r.fp ? nlohmann::ordered_json(*r.fp) : nlohmann::ordered_json(nullptr);
      row["singleton"] = r.singleton;
      row["method"] = r.method;
      row["witness"] = r.witness ? nlohmann::ordered_json(r.witness->to_string(&ord)) : nlohmann::ordered_json(nullptr);
      row["fd_empty"] = r.fd_empty;
      row["skipped"] = r.skipped;
      if (!r.note.empty()) row["note"] = r.note;
      j["rows"].push_back(row);
      skipped = skipped || r.skipped;
    }
    out << j.dump(2) << "\n";
  } else {
    out << "d\tdeg\tH\tdelta\tfp\tsingleton\tmethod\twitness\n";
    for (const auto& r : rows) {
      out << r.d << '\t' << r.degree << '\t' << r.dimension << '\t' << delta_cell(r) << '\t'
          << (r.fp ? std::to_string(*r.fp) : "-") << '\t' << r.singleton << '\t' << method_cell(r) << '\t'
          << witness_cell(r, ord) << '\n';
      skipped = skipped || r.skipped;
    }
  }
  return skipped ? kBudget : kOk;
}

inline int cmd_gb(const RunConfig& c, std::ostream& out) {
  const auto F = gf::parse_field(c.field);
  if (c.ideal_path.empty()) throw PreconditionError("gb needs --ideal");
  const auto I = io::parse_ideal(io::read_lines(c.ideal_path), F, c.vars);
  if (!I.is_graded()) throw PreconditionError("gb: generators must be homogeneous");
  const auto ord = make_order(c, I.nvars());
  const auto G = buchberger(I, ord);
  const int dmax = c.dmax > 0 ? c.dmax : 6;
  std::optional<hilbert::HilbertData> hd;
  std::optional<unsigned> reg;
  if (!G.is_unit()) {
    hd = hilbert_data(G);
    if (hd->dim == 0) reg = hilbert::regularity_dim0(G.initial_ideal());
  }
  std::vector<std::size_t> H;
  for (int d = 0; d <= dmax; ++d) H.push_back(hilbert::hilbert_function(G.initial_ideal(), d));
  if (c.json) {
    nlohmann::ordered_json j;
    j["field"] = F->name();
    j["order"] = ord.name();
    j["nvars"] = I.nvars();
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& g : G.basis()) j["basis"].push_back(g.to_string(&ord));
    j["initial"] = G.initial_ideal().to_string();
    j["unit"] = G.is_unit();
    if (hd) {
      j["dim"] = hd->dim;
      j["deg"] = hd->degree;
      j["numerator"] = hd->numerator;
    }
    if (reg) j["reg"] = *reg;
    j["H"] = H;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "# field " << F->name() << "  order " << ord.name() << "\n";
  out << io::format_basis(G);
  out << "# initial " << G.initial_ideal().to_string() << "\n";
  if (hd) {
    out << "# dim " << hd->dim << "\n# deg " << hd->degree << "\n# numerator " << join(hd->numerator) << "\n";
  } else {
    out << "# unit ideal\n";
  }
  if (reg) out << "# reg " << *reg << "\n";
  out << "# H(0.." << dmax << ")";
  for (auto h : H) out << ' ' << h;
  out << "\n";
  return kOk;
}

inline int cmd_vanish(const RunConfig& c, std::ostream& out) {
  const auto F = gf::parse_field(c.field);
  const auto src = load_points(c, F);
  if (!src) throw PreconditionError("vanish needs --points, --param, --torus or --full");
  const auto ord = make_order(c, src->X.arity());
  const auto G = vanishing(*src, ord);
  const unsigned reg = regularity_points(G);
  const long long deg = hilbert_data(G).degree;
  std::string body = io::format_basis(G);
  if (c.json) {
    nlohmann::ordered_json j;
    j["field"] = F->name();
    j["order"] = ord.name();
    j["points"] = src->X.size();
    j["deg"] = deg;
    j["reg"] = reg;
    j["basis"] = nlohmann::ordered_json::array();
    for (const auto& g : G.basis()) j["basis"].push_back(g.to_string(&ord));
    out << j.dump(2) << "\n";
  } else {
    out << "# points " << src->X.size() << "\n# deg " << deg << "\n# reg " << reg << "\n";
    out << "# order " << ord.name() << "\n";
    if (c.out_path.empty()) out << body;
  }
  if (!c.out_path.empty()) {
    std::ofstream f(c.out_path);
    if (!f) throw ParseError("cannot write '" + c.out_path + "'");
    f << "# vanishing ideal of " << src->X.size() << " points over " << F->name() << "\n" << body;
  }
  return kOk;
}

inline int cmd_table(const RunConfig& c, std::ostream& out) {
  const auto F = gf::parse_field(c.field);
  const auto method = parse_method(c.method);
  const search::Options opt{c.budget, c.jobs};
  const auto src = load_points(c, F);
  if (src && !c.ideal_path.empty()) throw PreconditionError("give either a point source or --ideal");
  if (src) {
    const auto ord = make_order(c, src->X.arity());
    const auto G = vanishing(*src, ord);
    const int dmax = c.dmax > 0 ? c.dmax : static_cast<int>(std::max(1u, regularity_points(G)));
    return print_table(params_table(src->X, G, dmax, method, opt), ord, c, *F, out);
  }
  if (c.ideal_path.empty()) throw PreconditionError("table needs a point source or --ideal");
  const auto I = io::parse_ideal(io::read_lines(c.ideal_path), F, c.vars);
  if (!I.is_graded()) throw PreconditionError("table: generators must be homogeneous");
  const auto ord = make_order(c, I.nvars());
  const auto G = buchberger(I, ord);
  if (G.is_unit() || G.is_zero_ideal()) throw PreconditionError("table: ideal must be proper and nonzero");
  int dmax = c.dmax;
  if (dmax <= 0) {
    const auto hd = hilbert_data(G);
    if (hd.dim != 0) throw PreconditionError("table: give --dmax for ideals of positive dimension");
    dmax = static_cast<int>(std::max(1u, hilbert::regularity_dim0(G.initial_ideal())));
  }
  return print_table(ideal_table(G, dmax, method == Method::Brute ? Method::Degree : method, opt), ord, c, *F, out);
}

inline int cmd_cartesian(const RunConfig& c, std::ostream& out) {
  const auto F = gf::parse_field(c.field);
  if (c.sets_path.empty()) throw PreconditionError("cartesian needs --sets");
  const auto spec = io::parse_sets(io::read_lines(c.sets_path), F);
  const auto rep = cartesian::validate_nested(spec);
  if (!rep.ok()) {
    for (const auto& v : rep.violations) out << "# violation (" << v.condition << "): " << v.message << "\n";
    throw PreconditionError("cartesian: sets do not form a projective nested cartesian set");
  }
  const auto dv = spec.sizes();
  const auto X = cartesian::cartesian_points(spec);
  const auto ord = MonomialOrder::lex(spec.s());  // t_1 < ... < t_s
  const auto G = vanishing_ideal_points(X, ord);
  const auto L = cartesian::l_ideal(dv);
  const bool init_is_l = G.initial_ideal() == L.gens;
  const long long deg = cartesian::closed_deg(dv), reg = cartesian::closed_reg(dv);
  const bool chain = cartesian::is_subfield_chain(spec);
  const search::Options opt{c.budget, c.jobs};
  std::vector<int> degrees;
  if (c.d > 0) {
    degrees.push_back(c.d);
  } else {
    const int top = c.dmax > 0 ? c.dmax : static_cast<int>(reg);
    for (int d = 1; d <= top; ++d) degrees.push_back(d);
  }
  struct Row {
    int d;
    std::size_t H;
    cartesian::ConjectureValue conj;
    std::optional<long long> delta;
    bool skipped = false;
    long long fp;
    std::string verdict;
  };
  std::vector<Row> rows;
  bool any_skipped = false;
  for (int d : degrees) {
    Row r{d, hilbert::hilbert_function(G.initial_ideal(), d), cartesian::conjecture_delta(dv, d), std::nullopt,
          false, fp_bound(G, d), ""};
    if (c.check_conjecture) {
      try {
        if (d >= reg) {
          r.delta = 1;
        } else {
          r.delta = *min_distance_bruteforce(build_code(X, G, d), opt).delta;
        }
      } catch (const BudgetExceeded&) {
        r.skipped = true;
        any_skipped = true;
      }
    }
    if (r.delta) {
      r.verdict = *r.delta == r.conj.value ? (chain ? "proven" : "confirmed") : "disagrees";
    } else {
      r.verdict = chain ? "proven" : "conjectured";
    }
    rows.push_back(r);
  }
  if (c.json) {
    nlohmann::ordered_json j;
    j["field"] = F->name();
    j["sizes"] = dv;
    j["points"] = X.size();
    j["deg"] = deg;
    j["reg"] = reg;
    j["initial_is_L"] = init_is_l;
    j["subfield_chain"] = chain;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json o;
      o["d"] = r.d;
      o["H"] = r.H;
      o["conjecture"] = r.conj.value;
      o["k"] = r.conj.decomposition ? nlohmann::ordered_json(r.conj.decomposition->k) : nlohmann::ordered_json(nullptr);
      o["ell"] =
          r.conj.decomposition ? nlohmann::ordered_json(r.conj.decomposition->ell) : nlohmann::ordered_json(nullptr);
      o["delta"] = r.delta ? nlohmann::ordered_json(*r.delta) : nlohmann::ordered_json(nullptr);
      o["skipped"] = r.skipped;
      o["fp"] = r.fp;
      o["status"] = r.verdict;
      j["rows"].push_back(o);
    }
    out << j.dump(2) << "\n";
  } else {
    out << "# field " << F->name() << "  sizes";
    for (auto x : dv) out << ' ' << x;
    out << "\n# points " << X.size() << "  deg " << deg << "  reg " << reg << "\n";
    out << "# initial ideal equals L: " << (init_is_l ? "yes" : "no") << "\n";
    out << "# subfield chain: " << (chain ? "yes" : "no") << "\n";
    out << "d\tH\tconjecture\tk\tell\tdelta\tfp\tstatus\n";
    for (const auto& r : rows) {
      out << r.d << '\t' << r.H << '\t' << r.conj.value << '\t'
          << (r.conj.decomposition ? std::to_string(r.conj.decomposition->k) : "-") << '\t'
          << (r.conj.decomposition ? std::to_string(r.conj.decomposition->ell) : "-") << '\t'
          << (r.skipped ? "skipped" : r.delta ? std::to_string(*r.delta) : "-") << '\t' << r.fp << '\t' << r.verdict
          << '\n';
    }
  }
  return any_skipped ? kBudget : kOk;
}

}  // namespace detail

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum distance of Reed-Muller-type codes over finite fields"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--field", c.field, "Field size p or p^e")->required();
    sub->add_option("--order", c.order, "Monomial order: lex or grevlex")->capture_default_str();
    sub->add_option("--priority", c.priority,
                    "Variables from most to least significant, 1-based (default s,...,1)");
    sub->add_flag("--json", c.json, "JSON output");
  };
  auto add_points = [&](CLI::App* sub) {
    sub->add_option("--points", c.points_path, "Points file");
    sub->add_option("--param", c.param_path, "Parameterization file (monomials in y1..yn)");
    sub->add_option("--torus", c.torus, "Projective torus in P^{s-1}, given s");
    sub->add_option("--full", c.full, "All of P^{s-1}, given s");
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--budget", c.budget, "Largest number of search candidates")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--jobs", c.jobs, "Worker threads for exhaustive searches")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis, initial ideal and Hilbert data");
  add_common(gb);
  gb->add_option("--ideal", c.ideal_path, "Ideal file, one polynomial per line")->required();
  gb->add_option("--vars", c.vars, "Number of variables (default: largest index used)");
  gb->add_option("--dmax", c.dmax, "Print H(d) for d = 0..dmax (default 6)");

  auto* vanish = app.add_subcommand("vanish", "Vanishing ideal of a point set");
  add_common(vanish);
  add_points(vanish);
  vanish->add_option("--out", c.out_path, "Write the basis to this file");

  auto* table = app.add_subcommand("table", "Code parameters per degree");
  add_common(table);
  add_points(table);
  add_search(table);
  table->add_option("--ideal", c.ideal_path, "Graded ideal file instead of a point set");
  table->add_option("--vars", c.vars, "Number of variables for --ideal");
  table->add_option("--dmax", c.dmax, "Last degree (default: the regularity)");
  table->add_option("--method", c.method, "brute, degree, fp or all")->capture_default_str();

  auto* cart = app.add_subcommand("cartesian", "Projective nested cartesian set report");
  cart->add_option("--field", c.field, "Field size p or p^e")->required();
  cart->add_option("--sets", c.sets_path, "One line per A_i, comma-separated encodings")->required();
  cart->add_option("--d", c.d, "Single degree");
  cart->add_option("--dmax", c.dmax, "Last degree (default: the regularity)");
  cart->add_flag("--check-conjecture", c.check_conjecture, "Compare with brute-force minimum distance");
  cart->add_flag("--json", c.json, "JSON output");
  add_search(cart);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (gb->parsed()) return detail::cmd_gb(c, out);
    if (vanish->parsed()) return detail::cmd_vanish(c, out);
    if (table->parsed()) return detail::cmd_table(c, out);
    return detail::cmd_cartesian(c, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << "\n";
    return kBudget;
  }
}

}  // namespace mindist::cli

#endif  // MINDIST_CLI_HPP
