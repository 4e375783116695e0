#include "weilbounds/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "weilbounds/bounds.hpp"
#include "weilbounds/counter.hpp"
#include "weilbounds/invariants.hpp"
#include "weilbounds/variety_io.hpp"
#include "weilbounds/zeta.hpp"

namespace weilbounds {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string input_path;
  unsigned r_max = 1;
  unsigned t_max = 2;
  std::optional<unsigned> genus;
  unsigned partitions = 0;  // 0: use all hardware threads
  Caps caps;
  std::string format = "table";
  double rh_tol = 1e-6;
  bool katz_eight = false;
  unsigned ambient = 0;
  std::string multidegree_arg;
};

unsigned effective_partitions(const RunConfig& cfg) {
  if (const char* env = std::getenv("WEILBOUNDS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  if (cfg.partitions >= 1) return cfg.partitions;
#ifdef _OPENMP
  return static_cast<unsigned>(omp_get_max_threads());
#else
  return 1;
#endif
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

ordered_json field_json(const VarietySpec& v) {
  ordered_json f;
  f["p"] = v.field->p();
  f["k"] = v.field->k();
  f["q"] = v.field->q().get_str();
  return f;
}

ordered_json variety_json(const VarietySpec& v, const std::string& path) {
  ordered_json j;
  j["input"] = path;
  j["field"] = field_json(v);
  j["ambient"] =
      std::string(v.ambient == Ambient::projective ? "projective" : "affine");
  j["ambient_dim"] = v.ambient_dim;
  j["forms"] = ordered_json::array();
  for (const auto& f : v.forms) j["forms"].push_back(f.to_string());
  j["declared_dim"] = v.declared_dim;
  j["declared_sing_dim"] = v.declared_sing_dim;
  return j;
}

ordered_json counts_json(const CountTable& counts) {
  ordered_json arr = ordered_json::array();
  for (const auto& [r, n] : counts.entries) {
    ordered_json e;
    e["r"] = r;
    e["q_r"] = mpz_class(mpz_pow(counts.q, r)).get_str();
    e["N"] = n.get_str();
    arr.push_back(e);
  }
  return arr;
}

ordered_json records_json(const BoundReport& report) {
  ordered_json arr = ordered_json::array();
  for (const auto& rec : report.records) {
    ordered_json e;
    e["name"] = rec.name;
    e["r"] = rec.r;
    e["kind"] = rec.kind == BoundKind::two_sided
                    ? "two_sided"
                    : (rec.kind == BoundKind::upper ? "upper" : "lower");
    e["applicable"] = rec.applicable;
    e["verdict"] = to_string(rec.verdict);
    e["conjecture"] = rec.is_conjecture;
    if (rec.applicable) {
      if (rec.kind == BoundKind::two_sided)
        e["center"] = rec.center.get_str();
      e["bound_floor"] = rec.bound_floor.get_str();
      e["bound_ceil"] = rec.bound_ceil.get_str();
      e["actual"] = rec.actual.get_str();
    }
    e["note"] = rec.note;
    arr.push_back(e);
  }
  return arr;
}

// ---------------------------------------------------------------------------
// table rendering (shared by --format table and the JSON round trip)

void render_header(std::ostringstream& os, const ordered_json& rep) {
  os << "command: " << rep.at("command").get<std::string>() << "\n";
  if (rep.contains("variety")) {
    const auto& v = rep.at("variety");
    os << "input: " << v.at("input").get<std::string>() << "\n";
    const auto& f = v.at("field");
    os << "field: p=" << f.at("p") << " k=" << f.at("k") << " q="
       << f.at("q").get<std::string>() << "\n";
    os << "ambient: " << v.at("ambient").get<std::string>() << " dim "
       << v.at("ambient_dim") << ", forms " << v.at("forms").size()
       << ", declared dim " << v.at("declared_dim") << ", declared sing dim "
       << v.at("declared_sing_dim") << "\n";
  }
}

void render_counts(std::ostringstream& os, const ordered_json& counts) {
  os << "counts:\n";
  for (const auto& e : counts) {
    os << "  r=" << e.at("r") << " q^r=" << e.at("q_r").get<std::string>()
       << " N=" << e.at("N").get<std::string>() << "\n";
  }
}

void render_records(std::ostringstream& os, const ordered_json& records) {
  os << "checks:\n";
  for (const auto& e : records) {
    os << "  r=" << e.at("r") << " " << e.at("name").get<std::string>() << ": "
       << e.at("verdict").get<std::string>();
    if (e.at("applicable").get<bool>()) {
      const std::string kind = e.at("kind").get<std::string>();
      if (kind == "two_sided") {
        os << " actual=" << e.at("actual").get<std::string>()
           << " center=" << e.at("center").get<std::string>() << " radius=["
           << e.at("bound_floor").get<std::string>() << ","
           << e.at("bound_ceil").get<std::string>() << "]";
      } else {
        os << " actual=" << e.at("actual").get<std::string>()
           << (kind == "upper" ? " <= " : " >= ")
           << e.at("bound_floor").get<std::string>();
      }
    }
    if (e.at("conjecture").get<bool>()) os << " [conjecture]";
    const std::string note = e.at("note").get<std::string>();
    if (!note.empty()) os << "  (" << note << ")";
    os << "\n";
  }
}

void render_zeta_body(std::ostringstream& os, const ordered_json& rep) {
  os << "q: " << rep.at("q").get<std::string>() << ", genus: "
     << rep.at("genus") << "\n";
  render_counts(os, rep.at("counts"));
  os << "numerator a: [";
  bool first = true;
  for (const auto& c : rep.at("a")) {
    if (!first) os << ", ";
    os << c.get<std::string>();
    first = false;
  }
  os << "]\n";
  os << "functional_equation: "
     << (rep.at("functional_equation").get<bool>() ? "true" : "false") << "\n";
  const auto& rh = rep.at("rh");
  os << "rh_exact: " << (rh.at("exact").get<bool>() ? "pass" : "fail")
     << ", rh_numeric: " << (rh.at("numeric").get<bool>() ? "pass" : "fail")
     << " (worst_rel_dev " << rh.at("worst_rel_dev").get<std::string>()
     << ", tol " << rh.at("tol").get<std::string>() << ")\n";
}

}  // namespace

std::string render_table(const ordered_json& rep) {
  std::ostringstream os;
  const std::string cmd = rep.at("command").get<std::string>();
  render_header(os, rep);
  if (cmd == "count") {
    render_counts(os, rep.at("counts"));
  } else if (cmd == "bounds") {
    render_counts(os, rep.at("counts"));
    render_records(os, rep.at("records"));
    const auto& s = rep.at("summary");
    os << "summary: pass=" << s.at("pass") << " marginal=" << s.at("marginal")
       << " fail=" << s.at("fail")
       << " conjecture_fail=" << s.at("conjecture_fail")
       << " n/a=" << s.at("not_applicable") << "\n";
  } else if (cmd == "zeta") {
    render_zeta_body(os, rep);
    if (rep.contains("cone")) {
      const auto& cone = rep.at("cone");
      os << "cone checks (over " << cone.at("curve_input").get<std::string>()
         << "):\n";
      for (const auto& e : cone.at("identity")) {
        os << "  m=" << e.at("m") << " N_cone="
           << e.at("N_cone").get<std::string>() << " q^m*N_curve+1="
           << e.at("expected").get<std::string>() << " "
           << (e.at("ok").get<bool>() ? "OK" : "MISMATCH") << "\n";
      }
      os << "  factorization P3(X,T) = P1(C,qT): "
         << (cone.at("factorization").get<bool>() ? "true" : "false") << "\n";
    }
  } else if (cmd == "singular") {
    for (const auto& e : rep.at("census")) {
      os << "r=" << e.at("r") << ": " << e.at("points").size()
         << " point(s)";
      for (const auto& pt : e.at("points"))
        os << " " << pt.get<std::string>();
      os << "\n";
    }
    for (const auto& c : rep.at("caveats"))
      os << "caveat: " << c.get<std::string>() << "\n";
  } else if (cmd == "betti") {
    os << "ambient: " << rep.at("ambient") << ", multidegree: [";
    bool first = true;
    for (const auto& d : rep.at("multidegree")) {
      if (!first) os << ", ";
      os << d;
      first = false;
    }
    os << "]\n";
    os << "primitive_betti: " << rep.at("primitive_betti").get<std::string>()
       << "\n";
    os << "bound_first: " << rep.at("bound_first").get<std::string>()
       << ", bound_second: " << rep.at("bound_second").get<std::string>()
       << "\n";
    for (const auto& [key, value] : rep.at("closed_forms").items())
      os << key << ": " << value.get<std::string>() << "\n";
  }
  return os.str();
}

namespace {

void emit(const ordered_json& rep, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json")
    out << rep.dump(2) << "\n";
  else
    out << render_table(rep);
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  VarietySpec v = load_variety(cfg.input_path, cfg.caps);
  CountTable counts =
      count_table(v, cfg.r_max, effective_partitions(cfg), cfg.caps);
  ordered_json rep;
  rep["command"] = "count";
  rep["variety"] = variety_json(v, cfg.input_path);
  rep["counts"] = counts_json(counts);
  emit(rep, cfg, out);
  return 0;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
  VarietySpec v = load_variety(cfg.input_path, cfg.caps);
  CountTable counts =
      count_table(v, cfg.r_max, effective_partitions(cfg), cfg.caps);
  BoundReport report = evaluate_all(v, counts, cfg.katz_eight);

  unsigned pass = 0, marginal = 0, fail = 0, cfail = 0, na = 0;
  for (const auto& rec : report.records) {
    switch (rec.verdict) {
      case Verdict::pass: ++pass; break;
      case Verdict::pass_marginal: ++marginal; break;
      case Verdict::fail: rec.is_conjecture ? ++cfail : ++fail; break;
      case Verdict::not_applicable: ++na; break;
    }
  }
  ordered_json rep;
  rep["command"] = "bounds";
  rep["variety"] = variety_json(v, cfg.input_path);
  rep["katz_eight"] = cfg.katz_eight;
  rep["counts"] = counts_json(counts);
  rep["records"] = records_json(report);
  ordered_json summary;
  summary["pass"] = pass;
  summary["marginal"] = marginal;
  summary["fail"] = fail;
  summary["conjecture_fail"] = cfail;
  summary["not_applicable"] = na;
  rep["summary"] = summary;
  emit(rep, cfg, out);
  return fail > 0 ? 1 : 0;
}

unsigned genus_for(const VarietySpec& v, const RunConfig& cfg) {
  if (cfg.genus) return *cfg.genus;
  // derivable shape: nonsingular plane curve, g = (d-1)(d-2)/2
  if (v.ambient == Ambient::projective && v.ambient_dim == 2 &&
      v.forms.size() == 1 && v.flags.nonsingular) {
    const unsigned d = v.forms[0].is_zero() ? 1 : v.forms[0].total_degree();
    return static_cast<unsigned>(plane_arith_genus(d).get_ui());
  }
  throw InvalidParamsError(
      "genus is required unless the input is a nonsingular plane curve");
}

ordered_json zeta_core_json(const VarietySpec& v, const CountTable& counts,
                            const CurveZeta& cz, const RunConfig& cfg,
                            bool& ok) {
  const bool fe = check_functional_equation(cz);
  const RhDiagnostic rh = check_riemann_hypothesis(cz, cfg.rh_tol);
  ok = fe && rh.exact_pass;
  ordered_json rep;
  rep["q"] = v.field->q().get_str();
  rep["genus"] = cz.genus;
  rep["counts"] = counts_json(counts);
  rep["a"] = ordered_json::array();
  for (const auto& ai : cz.a) rep["a"].push_back(ai.get_str());
  rep["functional_equation"] = fe;
  ordered_json rhj;
  rhj["exact"] = rh.exact_pass;
  rhj["numeric"] = rh.numeric_pass;
  rhj["worst_rel_dev"] = format_double(rh.worst_rel_dev);
  rhj["tol"] = format_double(cfg.rh_tol);
  rep["rh"] = rhj;
  return rep;
}

int cmd_zeta(const RunConfig& cfg, std::ostream& out) {
  VarietySpec v = load_variety(cfg.input_path, cfg.caps);
  const unsigned parts = effective_partitions(cfg);

  if (v.cone_of) {
    VarietySpec curve = load_variety(*v.cone_of, cfg.caps);
    if (!(curve.field->p() == v.field->p() &&
          curve.field->k() == v.field->k()))
      throw DeclarationError("cone and base curve live over different fields");
    const unsigned g = genus_for(curve, cfg);
    const unsigned curve_rmax = std::max(cfg.t_max, 2 * g);
    CountTable curve_counts = count_table(curve, curve_rmax, parts, cfg.caps);
    CountTable cone_table = count_table(v, cfg.t_max, parts, cfg.caps);
    CurveZeta cz = fit_curve_numerator(curve_counts, curve.field->q(), g);

    bool ok = false;
    ordered_json rep;
    rep["command"] = "zeta";
    rep["variety"] = variety_json(v, cfg.input_path);
    ordered_json core = zeta_core_json(curve, curve_counts, cz, cfg, ok);
    for (auto& [key, value] : core.items()) rep[key] = value;

    ordered_json cone;
    cone["curve_input"] = *v.cone_of;
    cone["identity"] = ordered_json::array();
    bool identity_ok = true;
    const CountTable expect =
        cone_counts(curve_counts, curve.field->q(), cfg.t_max);
    for (unsigned m = 1; m <= cfg.t_max; ++m) {
      ordered_json e;
      e["m"] = m;
      e["N_cone"] = cone_table.at(m).get_str();
      e["expected"] = expect.at(m).get_str();
      const bool match = cone_table.at(m) == expect.at(m);
      e["ok"] = match;
      identity_ok = identity_ok && match;
      cone["identity"].push_back(e);
    }
    const bool fact = cone_factorization_check(cz, cone_table, cfg.t_max);
    cone["factorization"] = fact;
    rep["cone"] = cone;
    emit(rep, cfg, out);
    return ok && identity_ok && fact ? 0 : 1;
  }

  const unsigned g = genus_for(v, cfg);
  const unsigned rmax = std::max(cfg.r_max, 2 * g);
  CountTable counts = count_table(v, rmax, parts, cfg.caps);
  CurveZeta cz = fit_curve_numerator(counts, v.field->q(), g);
  bool ok = false;
  ordered_json rep;
  rep["command"] = "zeta";
  rep["variety"] = variety_json(v, cfg.input_path);
  ordered_json core = zeta_core_json(v, counts, cz, cfg, ok);
  for (auto& [key, value] : core.items()) rep[key] = value;
  emit(rep, cfg, out);
  return ok ? 0 : 1;
}

int cmd_singular(const RunConfig& cfg, std::ostream& out) {
  VarietySpec v = load_variety(cfg.input_path, cfg.caps);
  ordered_json rep;
  rep["command"] = "singular";
  rep["variety"] = variety_json(v, cfg.input_path);
  rep["census"] = ordered_json::array();
  bool any = false;
  for (unsigned r = 1; r <= cfg.r_max; ++r) {
    auto points = singular_census(v, r, cfg.caps);
    ordered_json e;
    e["r"] = r;
    e["points"] = ordered_json::array();
    for (const auto& pt : points) e["points"].push_back(format_point(pt));
    rep["census"].push_back(e);
    any = any || !points.empty();
  }
  ordered_json caveats = ordered_json::array();
  if (!v.flags.complete_intersection)
    caveats.push_back(
        "variety not declared a complete intersection: rank defect of the "
        "Jacobian is a heuristic, not an exact singularity test");
  if (any && v.declared_sing_dim == -1)
    caveats.push_back(
        "nonempty census contradicts declared sing_dim = -1");
  if (!any)
    caveats.push_back(
        "empty census is one-sided evidence: it only covers rational points "
        "of the extensions searched and does not certify smoothness");
  rep["caveats"] = caveats;
  emit(rep, cfg, out);
  return 0;
}

int cmd_betti(const RunConfig& cfg, std::ostream& out) {
  std::vector<unsigned> degrees;
  {
    std::stringstream ss(cfg.multidegree_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const long v = std::strtol(item.c_str(), nullptr, 10);
      if (v < 1) throw InvalidParamsError("multidegree entries must be >= 1");
      degrees.push_back(static_cast<unsigned>(v));
    }
  }
  if (degrees.empty())
    throw InvalidParamsError("--multidegree requires at least one degree");
  const unsigned N = cfg.ambient;
  Multidegree md(degrees);
  BettiValue b = primitive_betti(N, md);
  auto [first, second] = betti_bound(N, md);

  ordered_json rep;
  rep["command"] = "betti";
  rep["ambient"] = N;
  rep["multidegree"] = degrees;
  rep["primitive_betti"] = b.value.get_str();
  rep["bound_first"] = first.get_str();
  rep["bound_second"] = second.get_str();
  ordered_json closed;
  if (md.r() == 1)
    closed["closed_form_hypersurface"] =
        closed_form_hypersurface(N, degrees[0]).get_str();
  if (N >= 2 && md.r() == N - 1)
    closed["closed_form_ci_curve"] = closed_form_ci_curve(N, md).get_str();
  if (N >= 3 && md.r() == N - 2)
    closed["closed_form_ci_surface"] = closed_form_ci_surface(N, md).get_str();
  if (md.r() == 2 && degrees[0] == degrees[1])
    closed["closed_form_two_forms"] =
        closed_form_two_forms(N, degrees[0]).get_str();
  rep["closed_forms"] = closed;
  emit(rep, cfg, out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact point counts, inequality windows, and zeta diagnostics "
               "for varieties over small finite fields"};
  app.name("weilbounds");
  app.require_subcommand(1);

  RunConfig cfg;
  std::uint64_t field_cap = cfg.caps.field_cap;
  std::uint64_t point_cap = cfg.caps.point_cap;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input)
      sub->add_option("input", cfg.input_path, "variety definition file")
          ->required();
    sub->add_option("--rmax", cfg.r_max, "largest extension degree");
    sub->add_option("--tmax", cfg.t_max, "series truncation degree");
    sub->add_option("--partitions", cfg.partitions,
                    "work partitions (0 = hardware threads)");
    sub->add_option("--point-cap", point_cap, "max enumerated points");
    sub->add_option("--field-cap", field_cap, "max field size");
    sub->add_option("--format", cfg.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
    sub->add_flag("--katz-eight", cfg.katz_eight,
                  "use the sharper leading constant 8 in tau bounds");
  };

  auto* count = app.add_subcommand("count", "exact N_r = |X(F_{q^r})|");
  add_common(count, true);
  auto* bounds = app.add_subcommand(
      "bounds", "evaluate every applicable inequality window");
  add_common(bounds, true);
  auto* zeta = app.add_subcommand(
      "zeta", "fit the curve zeta numerator and run diagnostics");
  add_common(zeta, true);
  unsigned genus_arg = 0;
  auto* genus_opt =
      zeta->add_option("--genus", genus_arg, "curve genus (overrides shapes)");
  zeta->add_option("--rh-tol", cfg.rh_tol,
                   "relative tolerance for the root-modulus check");
  auto* singular =
      app.add_subcommand("singular", "Jacobian-criterion singular census");
  add_common(singular, true);
  auto* betti = app.add_subcommand(
      "betti", "primitive Betti number, bounds, and closed forms");
  betti->add_option("--ambient", cfg.ambient, "ambient dimension N")
      ->required();
  betti->add_option("--multidegree", cfg.multidegree_arg,
                    "comma-separated degrees d1,d2,...")
      ->required();
  betti->add_option("--format", cfg.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    // CLI11's vector overload consumes the arguments from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  cfg.caps.field_cap = field_cap;
  cfg.caps.point_cap = point_cap;
  if (genus_opt->count() > 0) cfg.genus = genus_arg;

  try {
    if (count->parsed()) return cmd_count(cfg, out);
    if (bounds->parsed()) return cmd_bounds(cfg, out);
    if (zeta->parsed()) return cmd_zeta(cfg, out);
    if (singular->parsed()) return cmd_singular(cfg, out);
    if (betti->parsed()) return cmd_betti(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace weilbounds
