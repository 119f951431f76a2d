#include "mdgas/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mdgas/bethe.hpp"
#include "mdgas/boundary.hpp"
#include "mdgas/error.hpp"
#include "mdgas/gaudin_check.hpp"
#include "mdgas/gaussian_rational.hpp"
#include "mdgas/nonrel.hpp"
#include "mdgas/regularization.hpp"
#include "mdgas/two_body.hpp"
#include "mdgas/version.hpp"
#include "mdgas/yang.hpp"

namespace mdgas::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Record {
  json params = json::object();
  json result = json::object();
  Table table;  // empty header: CSV is the flattened result
  int status = kExitOk;
};

std::string num(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string num(std::size_t v) { return std::to_string(v); }

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (s.empty() || r.ec != std::errc() || r.ptr != end)
    throw InvalidArgument("malformed number: '" + s + "'");
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) out.push_back(parse_double(item));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(s)) {
    const double v = parse_double(item);
    if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v)))
      throw InvalidArgument("sizes must be positive integers: '" + item + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

double parse_eta(const std::string& s, std::size_t n) {
  if (s == "0") return 0.0;
  if (s == "pi") return kPi;
  if (s == "dual") return dual_boundary_phase(n);
  if (s == "swapped") return swapped_boundary_phase(n);
  throw InvalidArgument("boundary phase must be 0, pi, dual or swapped: '" + s + "'");
}

json complex_json(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string rational_string(const Rational& q) { return q.get_str(); }

json bethe_json(const BetheState& s) {
  return json{{"model", s.model == BetheModel::fermion ? "fermion" : "lieb-liniger"},
              {"coupling", s.coupling},
              {"box_length", s.box_length},
              {"boundary_phase", s.boundary_phase},
              {"branch_offset", s.branch_offset},
              {"quantum_numbers", s.quantum_numbers},
              {"momenta", s.momenta},
              {"energy", s.energy},
              {"total_momentum", s.total_momentum},
              {"iterations", s.iterations},
              {"max_residual", s.max_residual}};
}

Table roots_table(const BetheState& s) {
  Table t{{"j", "quantum_number", "momentum"}, {}};
  for (std::size_t j = 0; j < s.momenta.size(); ++j)
    t.rows.push_back({num(j), num(s.quantum_numbers[j]), num(s.momenta[j])});
  return t;
}

std::vector<double> quantum_numbers_or_ground(const std::string& qn, std::size_t n) {
  return qn.empty() ? ground_state_quantum_numbers(n) : parse_list(qn);
}

// Random nonzero rational p/q with |p| <= 9, 1 <= q <= 9.
Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numer(1, 9);
  std::uniform_int_distribution<int> denom(1, 9);
  std::bernoulli_distribution negative(0.5);
  Rational q(numer(rng) * (negative(rng) ? -1 : 1), denom(rng));
  q.canonicalize();
  return q;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return num(v.get<double>());
  return v.dump();
}

void flatten(const json& j, const std::string& prefix, Table& t) {
  for (const auto& [key, v] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object()) {
      flatten(v, name, t);
    } else if (v.is_array()) {
      std::string joined;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) joined += ';';
        joined += v[i].is_primitive() ? scalar_text(v[i]) : v[i].dump();
      }
      t.header.push_back(name);
      t.rows[0].push_back(joined);
    } else {
      t.header.push_back(name);
      t.rows[0].push_back(scalar_text(v));
    }
  }
}

std::string render_csv(const Table& t) {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_field(cells[i]);
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  const std::filesystem::path target(path);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidArgument("cannot open output file: " + path);
    f << text;
    if (!f) throw InvalidArgument("cannot write output file: " + path);
  }
  std::filesystem::rename(tmp, target);
}

using Handler = std::function<Record()>;

void add_two_body(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("two-body", "Two-body eigenstate samples and contact conditions");
  auto lambda = std::make_shared<double>(1.0);
  auto parity = std::make_shared<std::string>("even");
  auto k = std::make_shared<double>(1.0);
  auto xs = std::make_shared<std::string>("-2,-1,-0.5,0.5,1,2");
  sub->add_option("--lambda", *lambda, "interaction strength")->required();
  sub->add_option("--parity", *parity, "even, odd or bound")
      ->check(CLI::IsMember({"even", "odd", "bound"}));
  sub->add_option("--k", *k, "relative momentum (ignored for the bound state)");
  sub->add_option("--x", *xs, "comma-separated relative coordinates");
  handlers["two-body"] = [=] {
    Record rec;
    rec.params = {{"lambda", *lambda}, {"parity", *parity}, {"k", *k}, {"x", parse_list(*xs)}};
    TwoBodyState state;
    if (*parity == "bound") {
      const auto b = bound_state(*lambda);
      if (!b) throw InvalidArgument("no bound state for lambda > 0");
      state = *b;
    } else {
      state = scattering_state(*parity == "even" ? Parity::even : Parity::odd, *k);
    }
    const TwoBodyWavefunction w(state, *lambda);
    const std::vector<double> contact{0.0, 0.0};
    const auto bc = bc_residual(w, *lambda, 0, 1, contact);
    json samples = json::array();
    rec.table.header = {"x", "re", "im"};
    for (double x : parse_list(*xs)) {
      const cplx v = eval_two_body(state, *lambda, x);
      samples.push_back({{"x", x}, {"re", v.real()}, {"im", v.imag()}});
      rec.table.rows.push_back({num(x), num(v.real()), num(v.imag())});
    }
    rec.result = {{"parity", *parity},
                  {"k", complex_json(state.k)},
                  {"energy", state.energy},
                  {"bound", state.is_bound()},
                  {"samples", samples},
                  {"contact",
                   {{"derivative_jump", std::abs(bc.derivative_jump)},
                    {"value_jump_defect", std::abs(bc.value_jump_defect)},
                    {"relative_max", bc.relative_max()}}}};
    return rec;
  };
}

void add_bound_state(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("bound-state", "Closed-form two-body bound state");
  auto lambda = std::make_shared<double>(-1.0);
  sub->add_option("--lambda", *lambda, "interaction strength")->required();
  handlers["bound-state"] = [=] {
    Record rec;
    rec.params = {{"lambda", *lambda}};
    const auto b = bound_state(*lambda);
    rec.result = {{"exists", b.has_value()}};
    if (b) {
      rec.result["energy"] = b->energy;
      rec.result["k"] = complex_json(b->k);
      rec.result["decay_length"] = 2.0 * std::abs(*lambda);
    } else {
      rec.result["energy"] = nullptr;
      rec.result["k"] = nullptr;
      rec.result["decay_length"] = nullptr;
    }
    return rec;
  };
}

void add_bethe_solve(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("bethe-solve", "Bethe roots of the fermion model on a ring");
  auto n = std::make_shared<std::size_t>(3);
  auto box = std::make_shared<double>(10.0);
  auto lambda = std::make_shared<double>(1.0);
  auto eta = std::make_shared<std::string>("dual");
  auto qn = std::make_shared<std::string>();
  sub->add_option("--n", *n, "particle number")->required();
  sub->add_option("--box", *box, "ring length L")->required();
  sub->add_option("--lambda", *lambda, "interaction strength (> 0)")->required();
  sub->add_option("--eta", *eta, "boundary phase: 0, pi, dual or swapped");
  sub->add_option("--qn", *qn, "comma-separated quantum numbers (default: ground state)");
  handlers["bethe-solve"] = [=] {
    Record rec;
    const double e = parse_eta(*eta, *n);
    const auto q = quantum_numbers_or_ground(*qn, *n);
    rec.params = {{"n", *n}, {"box", *box}, {"lambda", *lambda}, {"eta", *eta},
                  {"eta_value", e}, {"qn", q}};
    const auto s = solve_bethe(*n, *box, *lambda, q, e);
    rec.result = bethe_json(s);
    rec.table = roots_table(s);
    return rec;
  };
}

void add_ll_solve(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("ll-solve", "Bethe roots of the delta-interaction boson gas");
  auto n = std::make_shared<std::size_t>(3);
  auto box = std::make_shared<double>(10.0);
  auto c = std::make_shared<double>(1.0);
  auto eta = std::make_shared<std::string>("0");
  auto qn = std::make_shared<std::string>();
  sub->add_option("--n", *n, "particle number")->required();
  sub->add_option("--box", *box, "ring length L")->required();
  sub->add_option("--c", *c, "delta coupling (> 0)")->required();
  sub->add_option("--eta", *eta, "twist: 0 or pi");
  sub->add_option("--qn", *qn, "comma-separated quantum numbers (default: ground state)");
  handlers["ll-solve"] = [=] {
    Record rec;
    if (*eta != "0" && *eta != "pi") throw InvalidArgument("twist must be 0 or pi");
    const double e = parse_eta(*eta, *n);
    const auto q = quantum_numbers_or_ground(*qn, *n);
    rec.params = {{"n", *n}, {"box", *box}, {"c", *c}, {"eta", *eta}, {"eta_value", e},
                  {"qn", q}};
    const auto s = solve_lieb_liniger(*n, *box, *c, q, e);
    rec.result = bethe_json(s);
    rec.table = roots_table(s);
    return rec;
  };
}

void add_duality(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("duality", "Fermion roots against boson roots at c = 1/lambda");
  auto n = std::make_shared<std::size_t>(3);
  auto box = std::make_shared<double>(10.0);
  auto lambda = std::make_shared<double>(1.0);
  auto eta = std::make_shared<std::string>("dual");
  sub->add_option("--n", *n, "particle number")->required();
  sub->add_option("--box", *box, "ring length L")->required();
  sub->add_option("--lambda", *lambda, "interaction strength (> 0)")->required();
  sub->add_option("--eta", *eta, "fermion boundary phase: 0, pi, dual or swapped");
  handlers["duality"] = [=] {
    Record rec;
    const double e = parse_eta(*eta, *n);
    rec.params = {{"n", *n}, {"box", *box}, {"lambda", *lambda}, {"eta", *eta},
                  {"eta_value", e}};
    const auto r = duality_check(*n, *box, *lambda, e);
    rec.result = {{"boson_coupling", r.boson_coupling},
                  {"fermion_eta", r.fermion_eta},
                  {"quantum_numbers", r.quantum_numbers},
                  {"fermion_roots", r.fermion.momenta},
                  {"boson_roots", r.boson.momenta},
                  {"fermion_max_residual", r.fermion.max_residual},
                  {"boson_max_residual", r.boson.max_residual},
                  {"max_abs_difference", r.max_abs_difference}};
    rec.table.header = {"j", "fermion_root", "boson_root", "abs_difference"};
    for (std::size_t j = 0; j < r.n; ++j)
      rec.table.rows.push_back({num(j), num(r.fermion.momenta[j]), num(r.boson.momenta[j]),
                                num(std::abs(r.fermion.momenta[j] - r.boson.momenta[j]))});
    return rec;
  };
}

void add_gaudin_check(CLI::App& app, std::map<std::string, Handler>& handlers,
                      const std::uint64_t& seed) {
  auto* sub = app.add_subcommand("gaudin-check",
                                 "Random sweep of Gaudin eigenfunction boundary conditions");
  auto opt = std::make_shared<GaudinSweepOptions>();
  sub->add_option("--n", opt->n, "particle number (2..8)");
  sub->add_option("--draws", opt->draws, "number of random draws");
  sub->add_option("--k-max", opt->k_max, "momenta drawn from [-k_max, k_max]");
  sub->add_option("--lambda-min", opt->lambda_min, "lower end of the lambda range");
  sub->add_option("--lambda-max", opt->lambda_max, "upper end of the lambda range");
  sub->add_option("--fd-step", opt->fd_step, "finite-difference step");
  handlers["gaudin-check"] = [=, &seed] {
    Record rec;
    GaudinSweepOptions o = *opt;
    o.seed = seed;
    rec.params = {{"n", o.n}, {"draws", o.draws}, {"k_max", o.k_max},
                  {"lambda_min", o.lambda_min}, {"lambda_max", o.lambda_max},
                  {"fd_step", o.fd_step}};
    const auto r = gaudin_sweep(o);
    rec.result = {{"hyperplanes_checked", r.hyperplanes_checked},
                  {"max_derivative_jump", r.max_derivative_jump},
                  {"max_value_jump_defect", r.max_value_jump_defect},
                  {"max_schrodinger_residual", r.max_schrodinger_residual}};
    return rec;
  };
}

void add_gs_scan(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("gs-scan", "Ground-state energy density at fixed density");
  auto density = std::make_shared<double>(1.0);
  auto lambda = std::make_shared<double>(1.0);
  auto sizes = std::make_shared<std::string>("4,8,16");
  sub->add_option("--density", *density, "particle density N/L");
  sub->add_option("--lambda", *lambda, "interaction strength (> 0)")->required();
  sub->add_option("--sizes", *sizes, "comma-separated increasing particle numbers");
  handlers["gs-scan"] = [=] {
    Record rec;
    const auto ns = parse_sizes(*sizes);
    rec.params = {{"density", *density}, {"lambda", *lambda}, {"sizes", ns}};
    const auto rows = ground_state_scan(*density, *lambda, ns);
    json arr = json::array();
    rec.table.header = {"n", "box_length", "energy_density", "free_energy_density"};
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"box_length", r.box_length},
                     {"energy_density", r.energy_density},
                     {"free_energy_density", r.free_energy_density}});
      rec.table.rows.push_back(
          {num(r.n), num(r.box_length), num(r.energy_density), num(r.free_energy_density)});
    }
    std::vector<double> increments;
    for (std::size_t i = 1; i < rows.size(); ++i)
      increments.push_back(std::abs(rows[i].energy_density - rows[i - 1].energy_density));
    rec.result = {{"rows", arr}, {"increments", increments}};
    return rec;
  };
}

struct RationalTriple {
  Rational u, v, third;
};

std::vector<RationalTriple> exact_probes(const std::string& u, const std::string& v,
                                         const std::string& third, std::size_t draws,
                                         std::uint64_t seed) {
  std::vector<RationalTriple> out;
  if (draws == 0) {
    out.push_back({parse_rational(u), parse_rational(v), parse_rational(third)});
    return out;
  }
  std::mt19937_64 rng(seed);
  while (out.size() < draws) {
    RationalTriple t{random_rational(rng), random_rational(rng), random_rational(rng)};
    if (sgn(Rational(t.u + t.v)) != 0) out.push_back(t);
  }
  return out;
}

void add_yb_check(CLI::App& app, std::map<std::string, Handler>& handlers,
                  const std::uint64_t& seed) {
  auto* sub = app.add_subcommand("yb-check", "Exact Yang-Baxter test on the regular representation");
  auto n = std::make_shared<std::size_t>(3);
  auto site = std::make_shared<std::size_t>(1);
  auto u = std::make_shared<std::string>("1");
  auto v = std::make_shared<std::string>("2");
  auto lambda = std::make_shared<std::string>("1");
  auto draws = std::make_shared<std::size_t>(0);
  sub->add_option("--n", *n, "particle number (3..6)")->required();
  sub->add_option("--site", *site, "one-based site i (uses i and i+1)");
  sub->add_option("--u", *u, "rational spectral parameter");
  sub->add_option("--v", *v, "rational spectral parameter");
  sub->add_option("--lambda", *lambda, "rational interaction strength");
  sub->add_option("--draws", *draws, "random rational triples instead of --u/--v/--lambda");
  handlers["yb-check"] = [=, &seed] {
    Record rec;
    rec.params = {{"n", *n}, {"site", *site}, {"u", *u}, {"v", *v}, {"lambda", *lambda},
                  {"draws", *draws}};
    json probes = json::array();
    rec.table.header = {"N", "i", "u", "v", "lambda", "unitarity", "yb_defect_nonzero",
                        "zero_on_trivial", "zero_on_sign", "max_entry"};
    bool all_expected = true;
    for (const auto& t : exact_probes(*u, *v, *lambda, *draws, seed)) {
      if (sgn(t.u) == 0 || sgn(t.v) == 0 || sgn(Rational(t.u + t.v)) == 0)
        throw InvalidArgument("u, v and u + v must be nonzero");
      const bool unitary = check_unitarity(*site, t.u, t.third, *n) &&
                           check_unitarity(*site + 1, t.u, t.third, *n);
      const auto d = yb_defect(*site, t.u, t.v, t.third, *n);
      all_expected = all_expected && unitary && d.nonzero && d.zero_on_trivial && d.zero_on_sign;
      json p = {{"N", *n},
                {"i", *site},
                {"u", rational_string(t.u)},
                {"v", rational_string(t.v)},
                {"lambda", rational_string(t.third)},
                {"unitarity", unitary},
                {"yb_defect_nonzero", d.nonzero},
                {"zero_on_trivial", d.zero_on_trivial},
                {"zero_on_sign", d.zero_on_sign},
                {"max_entry_as_string", d.max_entry.to_string()}};
      if (d.nonzero)
        p["first_nonzero"] = {{"row", d.first_row},
                              {"col", d.first_col},
                              {"entry", d.first_entry.to_string()}};
      rec.table.rows.push_back({num(*n), num(*site), rational_string(t.u), rational_string(t.v),
                                rational_string(t.third), unitary ? "true" : "false",
                                d.nonzero ? "true" : "false", d.zero_on_trivial ? "true" : "false",
                                d.zero_on_sign ? "true" : "false", d.max_entry.to_string()});
      probes.push_back(std::move(p));
    }
    rec.result = {{"probes", probes}, {"all_expected", all_expected}};
    if (!all_expected) rec.status = kExitCheckFailed;
    return rec;
  };
}

void add_delta_control(CLI::App& app, std::map<std::string, Handler>& handlers,
                       const std::uint64_t& seed) {
  auto* sub = app.add_subcommand("delta-control",
                                 "Exact Yang-Baxter test of the delta-interaction operator");
  auto n = std::make_shared<std::size_t>(3);
  auto site = std::make_shared<std::size_t>(1);
  auto u = std::make_shared<std::string>("1");
  auto v = std::make_shared<std::string>("2");
  auto c = std::make_shared<std::string>("1");
  auto draws = std::make_shared<std::size_t>(0);
  sub->add_option("--n", *n, "particle number (3..6)")->required();
  sub->add_option("--site", *site, "one-based site i (uses i and i+1)");
  sub->add_option("--u", *u, "rational spectral parameter");
  sub->add_option("--v", *v, "rational spectral parameter");
  sub->add_option("--c", *c, "rational delta coupling");
  sub->add_option("--draws", *draws, "random rational triples instead of --u/--v/--c");
  handlers["delta-control"] = [=, &seed] {
    Record rec;
    rec.params = {{"n", *n}, {"site", *site}, {"u", *u}, {"v", *v}, {"c", *c},
                  {"draws", *draws}};
    json probes = json::array();
    rec.table.header = {"N", "i", "u", "v", "c", "variant", "unitarity", "defect_zero"};
    bool all_expected = true;
    for (const auto& t : exact_probes(*u, *v, *c, *draws, seed)) {
      const auto r = delta_control_defect(*site, t.u, t.v, t.third, *n);
      all_expected = all_expected && r.unitary && !r.report.nonzero;
      probes.push_back({{"N", *n},
                        {"i", *site},
                        {"u", rational_string(t.u)},
                        {"v", rational_string(t.v)},
                        {"c", rational_string(t.third)},
                        {"variant", r.variant.label()},
                        {"unitarity", r.unitary},
                        {"defect_zero", !r.report.nonzero}});
      rec.table.rows.push_back({num(*n), num(*site), rational_string(t.u), rational_string(t.v),
                                rational_string(t.third), r.variant.label(),
                                r.unitary ? "true" : "false",
                                r.report.nonzero ? "false" : "true"});
    }
    rec.result = {{"probes", probes}, {"all_expected", all_expected}};
    if (!all_expected) rec.status = kExitCheckFailed;
    return rec;
  };
}

Momenta4 parse_momenta4(const std::string& s) {
  const auto v = parse_list(s);
  if (v.size() != 4) throw InvalidArgument("expected four momenta k1,k2,k3,k4");
  return {v[0], v[1], v[2], v[3]};
}

void add_vertex_scan(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("vertex-scan", "Leading-order vertex against the exact vertex");
  auto k = std::make_shared<std::string>("1,2,3,5");
  auto mc = std::make_shared<std::string>("10,20,40,80");
  sub->add_option("--k", *k, "momenta k1,k2,k3,k4");
  sub->add_option("--mc", *mc, "comma-separated values of m c");
  handlers["vertex-scan"] = [=] {
    Record rec;
    const auto kk = parse_momenta4(*k);
    const auto mcs = parse_list(*mc);
    rec.params = {{"k", kk}, {"mc", mcs}};
    const auto scan = vertex_expansion_scan(kk, mcs);
    json rows = json::array();
    rec.table.header = {"mc", "v_exact", "v_leading", "rel_error"};
    for (const auto& r : scan.rows) {
      rows.push_back({{"mc", r.mc},
                      {"v_exact", r.v_exact},
                      {"v_leading", r.v_leading},
                      {"rel_error", r.rel_error}});
      rec.table.rows.push_back({num(r.mc), num(r.v_exact), num(r.v_leading), num(r.rel_error)});
    }
    const double probe_mc = mcs.front();
    const bool zero13 = vertex_exact({kk[0], kk[1], kk[0], kk[3]}, 1.0, probe_mc) == 0.0;
    const bool zero24 = vertex_exact({kk[0], kk[1], kk[2], kk[1]}, 1.0, probe_mc) == 0.0;
    rec.result = {{"rows", rows},
                  {"slope", scan.slope},
                  {"vanishes_at_k1_eq_k3", zero13},
                  {"vanishes_at_k2_eq_k4", zero24}};
    if (!zero13 || !zero24) rec.status = kExitCheckFailed;
    return rec;
  };
}

void add_dispersion_scan(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("dispersion-scan",
                                 "Relativistic dispersion minus rest energy and kinetic term");
  auto k = std::make_shared<double>(1.0);
  auto m = std::make_shared<double>(0.5);
  auto cs = std::make_shared<std::string>("10,20,40,80");
  sub->add_option("--k", *k, "momentum");
  sub->add_option("--m", *m, "mass");
  sub->add_option("--c", *cs, "comma-separated speeds of light");
  handlers["dispersion-scan"] = [=] {
    Record rec;
    const auto c = parse_list(*cs);
    rec.params = {{"k", *k}, {"m", *m}, {"c", c}};
    const auto scan = dispersion_scan(*k, *m, c);
    json rows = json::array();
    rec.table.header = {"c", "energy", "remainder"};
    for (const auto& r : scan.rows) {
      rows.push_back({{"c", r.c}, {"energy", r.energy}, {"remainder", r.remainder}});
      rec.table.rows.push_back({num(r.c), num(r.energy), num(r.remainder)});
    }
    rec.result = {{"rows", rows}, {"slope", scan.slope}};
    return rec;
  };
}

void add_coupling_maps(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("coupling-maps", "Non-relativistic coupling maps");
  auto p = std::make_shared<RelativisticParams>();
  sub->add_option("--m", p->m, "mass");
  sub->add_option("--c", p->c, "speed of light");
  sub->add_option("--g", p->g, "Thirring coupling");
  sub->add_option("--beta", p->beta, "sine-Gordon coupling");
  sub->add_option("--g-b", p->g_b, "phi^4 coupling");
  handlers["coupling-maps"] = [=] {
    Record rec;
    rec.params = {{"m", p->m}, {"c", p->c}, {"g", p->g}, {"beta", p->beta}, {"g_b", p->g_b}};
    const auto r = coupling_maps(*p);
    rec.result = {{"lambda_from_thirring", r.lambda_from_thirring},
                  {"cb_from_sine_gordon", r.cb_from_sine_gordon},
                  {"cb_from_phi4", r.cb_from_phi4},
                  {"g_b_from_sine_gordon", r.g_b_from_sine_gordon},
                  {"cb_via_taylor", r.cb_via_taylor}};
    return rec;
  };
}

void add_coleman(CLI::App& app, std::map<std::string, Handler>& handlers,
                 const std::uint64_t& seed) {
  auto* sub = app.add_subcommand("coleman", "lambda * c_B against pi^2/4");
  auto g = std::make_shared<double>(1.0);
  auto c = std::make_shared<double>(1.0);
  auto draws = std::make_shared<std::size_t>(0);
  sub->add_option("--g", *g, "Thirring coupling (> 0)");
  sub->add_option("--c", *c, "speed of light (> 0)");
  sub->add_option("--draws", *draws, "random (g, c) pairs instead of --g/--c");
  handlers["coleman"] = [=, &seed] {
    Record rec;
    rec.params = {{"g", *g}, {"c", *c}, {"draws", *draws}};
    std::vector<std::pair<double, double>> pairs;
    if (*draws == 0) {
      pairs.emplace_back(*g, *c);
    } else {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> gd(0.1, 10.0), cd(0.5, 5.0);
      for (std::size_t i = 0; i < *draws; ++i) {
        const double gi = gd(rng);
        pairs.emplace_back(gi, cd(rng));
      }
    }
    const double target = kPi * kPi / 4.0;
    json rows = json::array();
    rec.table.header = {"g", "c", "lambda_cb", "abs_error", "cb_direct", "cb_via_taylor",
                        "lambda_cb_full"};
    for (const auto& [gi, ci] : pairs) {
      const double prod = coleman_check(gi, ci);
      RelativisticParams p = RelativisticParams::with_mass(0.5, ci);
      p.g = gi;
      p.beta = 2.0 * kPi / std::sqrt(gi);
      const auto maps = coupling_maps(p);
      const double full = coleman_full(gi, ci);
      rows.push_back({{"g", gi},
                      {"c", ci},
                      {"lambda_cb", prod},
                      {"abs_error", std::abs(prod - target)},
                      {"cb_direct", maps.cb_from_sine_gordon},
                      {"cb_via_taylor", maps.cb_via_taylor},
                      {"lambda_cb_full", full}});
      rec.table.rows.push_back({num(gi), num(ci), num(prod), num(std::abs(prod - target)),
                                num(maps.cb_from_sine_gordon), num(maps.cb_via_taylor),
                                num(full)});
    }
    rec.result = {{"target", target}, {"rows", rows}};
    return rec;
  };
}

void add_reg_integral(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("reg-integral", "Regularized bubble integral and its eps -> 0 limit");
  auto lambda = std::make_shared<double>(-1.0);
  auto e_abs = std::make_shared<double>(0.25);
  auto eps = std::make_shared<std::string>("0.2,0.1,0.05,0.025");
  sub->add_option("--lambda", *lambda, "interaction strength")->required();
  sub->add_option("--e-abs", *e_abs, "binding energy |E|");
  sub->add_option("--eps", *eps, "comma-separated regulator values (> 0)");
  handlers["reg-integral"] = [=] {
    Record rec;
    const auto es = parse_list(*eps);
    rec.params = {{"lambda", *lambda}, {"e_abs", *e_abs}, {"eps", es}};
    json rows = json::array();
    rec.table.header = {"epsilon", "integral", "closed_form", "abs_difference"};
    for (double e : es) {
      const auto r = regularized_integral(*lambda, *e_abs, e);
      const double exact = regularized_closed_form(*lambda, *e_abs, e);
      rows.push_back({{"epsilon", e},
                      {"integral", r.value},
                      {"closed_form", exact},
                      {"abs_difference", std::abs(r.value - exact)},
                      {"quadrature_error", r.quadrature_error}});
      rec.table.rows.push_back({num(e), num(r.value), num(exact), num(std::abs(r.value - exact))});
    }
    const auto x = extrapolated_integral(*lambda, *e_abs);
    rec.result = {{"rows", rows},
                  {"extrapolated",
                   {{"value", x.value},
                    {"error_estimate", x.error_estimate},
                    {"levels", x.levels},
                    {"converged", x.converged}}},
                  {"limit_closed_form", regularized_closed_form(*lambda, *e_abs, 0.0)}};
    return rec;
  };
}

void add_reg_bound_state(CLI::App& app, std::map<std::string, Handler>& handlers) {
  auto* sub = app.add_subcommand("reg-bound-state", "Bound-state energy from the regularized integral");
  auto lambda = std::make_shared<double>(-1.0);
  sub->add_option("--lambda", *lambda, "interaction strength (< 0)")->required();
  handlers["reg-bound-state"] = [=] {
    Record rec;
    rec.params = {{"lambda", *lambda}};
    const auto r = bound_state_energy_via_regularization(*lambda);
    const double closed = -1.0 / (4.0 * *lambda * *lambda);
    rec.result = {{"energy", r.energy},
                  {"closed_form_energy", closed},
                  {"relative_difference", std::abs(r.energy / closed - 1.0)},
                  {"bisection_steps", r.bisection_steps}};
    return rec;
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exactly solvable 1D gas with momentum-dependent interactions", "mdgas-cli"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  std::string format = "json";
  std::string output;
  std::uint64_t seed = 0;
  app.add_option("--format", format, "json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output, "write the record to this file instead of stdout");
  app.add_option("--seed", seed, "seed for randomized sweeps");

  std::map<std::string, Handler> handlers;
  add_two_body(app, handlers);
  add_bound_state(app, handlers);
  add_bethe_solve(app, handlers);
  add_ll_solve(app, handlers);
  add_duality(app, handlers);
  add_gaudin_check(app, handlers, seed);
  add_gs_scan(app, handlers);
  add_yb_check(app, handlers, seed);
  add_delta_control(app, handlers, seed);
  add_vertex_scan(app, handlers);
  add_dispersion_scan(app, handlers);
  add_coupling_maps(app, handlers);
  add_coleman(app, handlers, seed);
  add_reg_integral(app, handlers);
  add_reg_bound_state(app, handlers);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalid;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Record rec = handlers.at(name)();
    rec.params["format"] = format;
    rec.params["seed"] = seed;
    std::string text;
    if (format == "json") {
      json doc = {{"schema", "mdgas." + name + "/1"},
                  {"version", std::string(kVersion)},
                  {"command", name},
                  {"params", rec.params},
                  {"result", rec.result}};
      text = doc.dump(2) + "\n";
    } else {
      Table t = rec.table;
      if (t.header.empty()) {
        t.rows.assign(1, {});
        flatten(rec.result, "", t);
      }
      text = render_csv(t);
    }
    write_output(output, text, out);
    return rec.status;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  }
}

}  // namespace mdgas::cli
