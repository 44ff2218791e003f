// qcover: IP quandles, their covering groups G_C and H^1 of the induced calculus.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qcover/catalog.hpp"
#include "qcover/derham.hpp"
#include "qcover/io.hpp"
#include "qcover/presentation.hpp"
#include "qcover/quandle.hpp"

namespace {

using nlohmann::json;
using namespace qcover;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMathFailure = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CatalogItem load(const std::string& source) {
  const std::string prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) return catalog_lookup(source.substr(prefix.size()));
  return read_quandle_file(source);
}

const IPQuandle& finite(const CatalogItem& item, const std::string& command) {
  if (auto* q = std::get_if<IPQuandle>(&item)) return *q;
  throw Usage(command + " needs a finite quandle; sl2z windows are truncations of an infinite one");
}

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("QCOVER_MAX_COSETS")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw Usage("QCOVER_MAX_COSETS must be a positive integer");
  }
  return FiniteGroup::kDefaultCap;
}

json witness(const AxiomCheck& c) { return c.counterexample; }

json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return json::parse(z.get_str());
}

// ---- verify ----

int run_verify(const std::string& source, bool as_json) {
  const auto item = load(source);
  json axioms;
  bool ok = false;
  std::ostringstream human;
  if (auto* q = std::get_if<IPQuandle>(&item)) {
    const auto r = verify_ip(*q);
    axioms = {{"rack", r.rack_ok()},
              {"quandle", r.quandle_ok()},
              {"ip", r.ip_ok()},
              {"derived_fixed_point", r.derived_fixed_point.holds}};
    auto report = [&](const char* name, const AxiomCheck& c) {
      if (c.holds) return;
      axioms[std::string(name) + "_counterexample"] = witness(c);
      human << "  " << name << " fails at";
      for (auto k : c.counterexample) human << ' ' << q->name(k);
      human << '\n';
    };
    report("bijective_rows", r.bijective_rows);
    report("rack", r.rack);
    report("idempotent", r.idempotent);
    report("involution", r.involution);
    report("inverse_compatible", r.inverse_compatible);
    report("cancellation", r.cancellation);
    report("derived_fixed_point", r.derived_fixed_point);
    ok = r.all_ok();
    human << "elements: " << q->size() << '\n';
  } else {
    const auto& w = std::get<WindowQuandle>(item);
    const auto r = verify_window(w);
    axioms = {{"rack", r.rack},
              {"quandle", r.rack && r.idempotent},
              {"ip", r.ip},
              {"derived_fixed_point", r.idempotent}};
    ok = r.all_ok();
    human << "elements: " << w.size() << " (window, " << r.checked
          << " in-window rack triples checked)\n";
  }
  if (as_json) {
    std::cout << json{{"input", source}, {"axioms", axioms}}.dump(2) << '\n';
  } else {
    std::cout << human.str();
    for (const auto* key : {"rack", "quandle", "ip", "derived_fixed_point"}) {
      std::cout << key << ": " << (axioms[key].get<bool>() ? "pass" : "FAIL") << '\n';
    }
  }
  return ok ? kOk : kMathFailure;
}

// ---- cover ----

int run_cover(const std::string& source, std::optional<std::size_t> max_cosets, bool as_json) {
  const auto item = load(source);
  const auto& q = finite(item, "cover");
  const auto cap = max_cosets.value_or(default_max_cosets());
  if (!verify_ip(q).all_ok()) {
    std::cerr << "error: input is not an IP quandle (run verify)\n";
    return kMathFailure;
  }

  const auto p = presentation_from_quandle(q);
  const auto ab = abelianization(p);
  json abel{{"free_rank", ab.free_rank}, {"torsion", json::array()}};
  for (const auto& t : ab.torsion) abel["torsion"].push_back(integer(t));

  json cover{{"order_gc", nullptr},      {"order_g", nullptr},     {"kernel_order", nullptr},
             {"kernel_central", nullptr}, {"embeddable", nullptr}, {"is_covering", nullptr},
             {"status", "complete"}};
  int code = kOk;
  std::size_t high_water = 0;
  if (q.embedding()) {
    try {
      const auto r = covering_analysis(q, cap);
      cover["order_gc"] = r.order_gc;
      cover["order_g"] = r.order_g;
      cover["kernel_order"] = r.kernel_order;
      cover["kernel_central"] = r.kernel_central;
      cover["embeddable"] = r.embeddable;
      cover["is_covering"] = r.is_covering;
    } catch (const EnumerationIncomplete& e) {
      cover["status"] = "exceeded";
      cover["order_g"] = q.embedding()->group->order();
      high_water = e.high_water();
    }
  } else {
    auto r = realize(q, cap, &high_water);
    if (r) {
      cover["order_gc"] = r->order();
      cover["embeddable"] = r->embeddable();
    } else {
      cover["status"] = "exceeded";
    }
  }
  const bool exceeded = cover["status"] == "exceeded";
  // An infinite abelianization certifies an infinite G_C.
  if (exceeded && ab.free_rank == 0) code = kMathFailure;

  if (as_json) {
    std::cout << json{{"input", source}, {"cover", cover}, {"abelianization", abel}}.dump(2)
              << '\n';
    return code;
  }
  auto show = [](const json& v) { return v.is_null() ? std::string("-") : v.dump(); };
  if (exceeded) {
    std::cout << "status: exceeded (cap " << cap << ", high water " << high_water << ")\n";
    if (ab.free_rank > 0) std::cout << "G_C is infinite: abelianization has free rank " << ab.free_rank << '\n';
  } else {
    std::cout << "status: complete\n";
  }
  for (const auto* key : {"order_gc", "order_g", "kernel_order", "kernel_central", "embeddable",
                          "is_covering"}) {
    std::cout << key << ": " << show(cover[key]) << '\n';
  }
  std::cout << "abelianization: Z^" << ab.free_rank;
  for (const auto& t : ab.torsion) std::cout << " x Z/" << t.get_str();
  std::cout << '\n';
  return code;
}

// ---- skew ----

int run_skew(const std::string& source, const std::string& dot_path, bool as_json) {
  const auto item = load(source);
  json skew;
  std::vector<std::string> names;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  if (auto* q = std::get_if<IPQuandle>(&item)) {
    const auto s = skew_analysis(*q);
    skew = {{"is_skew", s.is_skew},
            {"is_locally_skew", s.is_locally_skew},
            {"components", s.components},
            {"edges", s.edges.size()}};
    names = q->names();
    edges = s.edges;
  } else {
    const auto& w = std::get<WindowQuandle>(item);
    const auto g = window_skew_graph(w);
    const auto n = w.size();
    skew = {{"is_skew", g.edges.size() == n * (n - 1) / 2},
            {"is_locally_skew", g.connected()},
            {"components", g.components},
            {"edges", g.edges.size()}};
    names = w.names();
    edges = g.edges;
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw Usage("cannot write " + dot_path);
    write_dot(out, source, names, edges);
    if (!out) throw Usage("cannot write " + dot_path);
  }
  if (as_json) {
    std::cout << json{{"input", source}, {"skew", skew}}.dump(2) << '\n';
  } else {
    for (const auto* key : {"is_skew", "is_locally_skew", "components", "edges"}) {
      std::cout << key << ": " << skew[key].dump() << '\n';
    }
  }
  return kOk;
}

// ---- h1 ----

std::string describe_form(const Calculus& cal, const OneForm& w) {
  if (w == theta(cal)) return "theta";
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t a = 0; a < cal.labels(); ++a) {
    for (std::size_t x = 0; x < cal.points(); ++x) {
      const auto& v = w(a, x);
      if (sgn(v) == 0) continue;
      os << (first ? "" : " ") << (sgn(v) < 0 ? "-" : "+");
      const Rational mag = abs(v);
      if (mag != 1) os << mag.get_str();
      os << "d[" << cal.group().label(x) << "]w[" << cal.quandle().name(a) << "]";
      first = false;
    }
  }
  return os.str();
}

int run_h1(const std::string& source, std::optional<std::uint32_t> mod, bool as_json) {
  const auto item = load(source);
  const auto& q = finite(item, "h1");
  if (!q.embedding()) throw Usage("h1 needs a conjugation quandle from the catalog");
  if (mod && *mod == 2) {
    throw Usage("--mod 2 rejected: the field must not have characteristic 2, where theta is exact");
  }
  const Calculus cal(q);
  const auto r = mod ? h1_mod_p(cal, *mod) : h1(cal);
  json h{{"dim_closed", r.dim_closed},
         {"dim_exact", r.dim_exact},
         {"dim_h1", r.dim_h1},
         {"theta_independent", r.theta_class_independent}};
  if (as_json) {
    std::cout << json{{"input", source}, {"h1", h}}.dump(2) << '\n';
    return kOk;
  }
  std::cout << "field: " << (mod ? "Z/" + std::to_string(*mod) : std::string("Q")) << '\n';
  std::cout << "|G| = " << cal.points() << ", |C| = " << cal.labels() << '\n';
  for (const auto* key : {"dim_closed", "dim_exact", "dim_h1", "theta_independent"}) {
    std::cout << key << ": " << h[key].dump() << '\n';
  }
  for (std::size_t k = 0; k < r.basis.size(); ++k) {
    std::cout << "class " << k << ": " << describe_form(cal, r.basis[k]) << '\n';
  }
  return kOk;
}

// ---- catalog / export ----

int run_catalog() {
  for (const auto& e : catalog_identifiers()) {
    std::cout << "catalog:" << e.pattern << "  " << e.description << '\n';
  }
  return kOk;
}

int run_export(const std::string& source, const std::string& out_path) {
  const auto item = load(source);
  const auto& q = finite(item, "export");
  if (out_path.empty() || out_path == "-") {
    write_quandle(std::cout, q);
    return kOk;
  }
  std::ofstream out(out_path);
  if (!out) throw Usage("cannot write " + out_path);
  write_quandle(out, q);
  return out ? kOk : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcover: IP quandles, covering groups and noncommutative de Rham H^1"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string source, dot_path, out_path;
  bool as_json = false;
  std::optional<std::size_t> max_cosets;
  std::optional<std::uint32_t> mod;
  const std::string source_help = "quandle-v1 file or catalog:NAME";

  auto* verify = app.add_subcommand("verify", "check the IP quandle axioms");
  verify->add_option("source", source, source_help)->required();
  verify->add_flag("--json", as_json, "emit a JSON report");

  auto* cover = app.add_subcommand("cover", "enumerate G_C and analyze G_C -> G");
  cover->add_option("source", source, source_help)->required();
  cover->add_option("--max-cosets", max_cosets, "coset cap (default 1000000 or $QCOVER_MAX_COSETS)")
      ->check(CLI::PositiveNumber);
  cover->add_flag("--json", as_json, "emit a JSON report");

  auto* skew = app.add_subcommand("skew", "mutually skew pairs and their graph");
  skew->add_option("source", source, source_help)->required();
  skew->add_option("--dot", dot_path, "write the skew graph as DOT");
  skew->add_flag("--json", as_json, "emit a JSON report");

  auto* h1 = app.add_subcommand("h1", "first de Rham cohomology of the calculus");
  h1->add_option("source", source, "catalog:NAME of a conjugation quandle")->required();
  h1->add_option("--mod", mod, "work over Z/P instead of Q (P an odd prime)");
  h1->add_flag("--json", as_json, "emit a JSON report");

  auto* catalog = app.add_subcommand("catalog", "list catalog identifiers");

  auto* exp = app.add_subcommand("export", "write a quandle in quandle-v1 format");
  exp->add_option("source", source, source_help)->required();
  exp->add_option("-o,--output", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(source, as_json);
    if (*cover) return run_cover(source, max_cosets, as_json);
    if (*skew) return run_skew(source, dot_path, as_json);
    if (*h1) return run_h1(source, mod, as_json);
    if (*catalog) return run_catalog();
    if (*exp) return run_export(source, out_path);
  } catch (const MalformedTable& e) {
    std::cerr << "error: malformed table: " << e.what() << '\n';
    return kMathFailure;
  } catch (const PreconditionFailed& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
