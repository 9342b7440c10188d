// plumbing-census: command-line front end for the plumb library.
//
// Exit status: 0 success, 1 domain error, 2 usage error. Diagnostics go to
// stderr only; stdout is byte-for-byte deterministic for a fixed invocation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plumb/census.hpp"
#include "plumb/cfrac.hpp"
#include "plumb/cycles.hpp"
#include "plumb/legendrian.hpp"
#include "plumb/report.hpp"
#include "plumb/slopecalc.hpp"

namespace {

using nlohmann::ordered_json;
using plumb::Coeffs;
using plumb::ErrorKind;

constexpr std::size_t kGridCap = 100000;

enum class Format { json, tsv, text };

struct Options {
  std::string a, z, sign = "+", format = "text";
  std::int64_t torsion = 1, max_k = 8, m = 10;
  std::optional<std::int64_t> seed;
};

Coeffs parse_list(const std::string& text, const char* flag) {
  Coeffs out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      plumb::fail(ErrorKind::usage, std::string("bad integer '") + item + "' in --" + flag);
    }
  }
  return out;
}

// "lo:hi" or a single value.
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  const auto lo = parse_list(text.substr(0, colon), flag);
  const auto hi = colon == std::string::npos ? lo : parse_list(text.substr(colon + 1), flag);
  if (lo.size() != 1 || hi.size() != 1) plumb::fail(ErrorKind::usage, std::string("bad range for --") + flag);
  if (lo[0] > hi[0]) plumb::fail(ErrorKind::usage, std::string("empty range for --") + flag);
  return {lo[0], hi[0]};
}

Format parse_format(const std::string& f) {
  if (f == "json") return Format::json;
  if (f == "tsv") return Format::tsv;
  return Format::text;
}

void print_json(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

Coeffs require_list(const std::string& text, const char* flag) {
  auto out = parse_list(text, flag);
  if (out.empty()) plumb::fail(ErrorKind::usage, std::string("--") + flag + " is required");
  return out;
}

plumb::CensusOptions census_options(const Options& o) {
  plumb::CensusOptions c;
  c.torsion = o.torsion;
  c.max_k = o.max_k;
  return c;
}

void emit_report(const plumb::CensusReport& r, Format f) {
  switch (f) {
    case Format::json: print_json(plumb::to_json(r)); break;
    case Format::tsv: std::cout << plumb::tsv_header() << '\n' << plumb::to_tsv_rows(r); break;
    case Format::text: std::cout << plumb::to_text(r); break;
  }
}

struct Grid {
  std::string a1 = "3:4", a_entries = "2:4", a_tail = "1:2", z_entries = "2:4", z_len = "1:2", signs = "+,-";
};

void odometer(std::int64_t lo, std::int64_t hi, std::int64_t len, const std::function<void(const Coeffs&)>& f) {
  Coeffs cur(static_cast<std::size_t>(len), lo);
  while (true) {
    f(cur);
    std::int64_t i = len - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) cur[static_cast<std::size_t>(i--)] = lo;
    if (i < 0) return;
    ++cur[static_cast<std::size_t>(i)];
  }
}

std::vector<plumb::PlumbingSpec> expand_grid(const Grid& g) {
  const auto [a1_lo, a1_hi] = parse_range(g.a1, "a1");
  const auto [ae_lo, ae_hi] = parse_range(g.a_entries, "a-entries");
  const auto [at_lo, at_hi] = parse_range(g.a_tail, "a-tail");
  const auto [ze_lo, ze_hi] = parse_range(g.z_entries, "z-entries");
  const auto [zl_lo, zl_hi] = parse_range(g.z_len, "z-len");
  std::vector<plumb::Sign> signs;
  std::stringstream ss(g.signs);
  for (std::string s; std::getline(ss, s, ',');) signs.push_back(plumb::parse_sign(s));
  if (signs.empty()) plumb::fail(ErrorKind::usage, "empty sign set");

  // Size check before materializing anything.
  auto count = [](std::int64_t lo, std::int64_t hi, std::int64_t len_lo, std::int64_t len_hi) {
    long double total = 0;
    for (std::int64_t l = len_lo; l <= len_hi; ++l) total += std::pow(static_cast<long double>(hi - lo + 1), l);
    return total;
  };
  const long double size = static_cast<long double>(a1_hi - a1_lo + 1) * count(ae_lo, ae_hi, at_lo, at_hi) *
                           count(ze_lo, ze_hi, zl_lo, zl_hi) * static_cast<long double>(signs.size());
  if (size > kGridCap) plumb::fail(ErrorKind::usage, "grid exceeds the cap of 100000 specs");

  std::vector<Coeffs> as, zs;
  for (std::int64_t a1 = a1_lo; a1 <= a1_hi; ++a1)
    for (std::int64_t t = at_lo; t <= at_hi; ++t)
      odometer(ae_lo, ae_hi, t, [&](const Coeffs& tail) {
        Coeffs a{a1};
        a.insert(a.end(), tail.begin(), tail.end());
        as.push_back(std::move(a));
      });
  for (std::int64_t l = zl_lo; l <= zl_hi; ++l) odometer(ze_lo, ze_hi, l, [&](const Coeffs& z) { zs.push_back(z); });

  std::vector<plumb::PlumbingSpec> specs;
  for (auto s : signs)
    for (const auto& a : as)
      for (const auto& z : zs) specs.push_back({s, a, z});
  std::sort(specs.begin(), specs.end());
  specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
  if (specs.empty()) plumb::fail(ErrorKind::usage, "empty grid");
  return specs;
}

void run_grid(const Grid& g, const Options& o) {
  const auto specs = expand_grid(g);
  const auto opts = census_options(o);
  plumb::GridSummary summary;
  const Format f = parse_format(o.format);
  // Grid JSON keeps one compact report per line so that diffs stay readable.
  if (f == Format::json) std::cout << "{\"reports\": [\n";
  if (f == Format::tsv) std::cout << plumb::tsv_header() << '\n';
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto r = plumb::census(specs[i], opts);
    summary.add(r);
    switch (f) {
      case Format::json: std::cout << plumb::to_json(r).dump() << (i + 1 < specs.size() ? ",\n" : "\n"); break;
      case Format::tsv: std::cout << plumb::to_tsv_rows(r); break;
      case Format::text: std::cout << plumb::to_text(r); break;
    }
  }
  if (f == Format::json) std::cout << "],\n\"summary\": " << summary.to_json().dump() << "}\n";
  if (f == Format::text) std::cout << summary.to_text();
}

void run_cf(const std::string& eval, const std::string& expand, Format f) {
  if (eval.empty() == expand.empty()) plumb::fail(ErrorKind::usage, "cf needs exactly one of --eval, --expand");
  if (!eval.empty()) {
    const auto x = plumb::eval_neg_cf(require_list(eval, "eval"));
    if (f == Format::json) print_json({{"coeffs", parse_list(eval, "eval")}, {"value", x.to_string()}});
    else std::cout << x.to_string() << '\n';
    return;
  }
  const auto coeffs = plumb::expand_neg_cf(plumb::Rational::parse(expand));
  if (f == Format::json) print_json({{"value", expand}, {"coeffs", coeffs}});
  else std::cout << plumb::format_coeffs(coeffs) << '\n';
}

void run_verify(std::int64_t max_entry, std::int64_t min_len, std::int64_t max_len, Format f) {
  if (max_entry < 2 || min_len < 1 || min_len > max_len) plumb::fail(ErrorKind::usage, "empty sweep");
  std::size_t tuples = 0;
  std::vector<std::string> failures;
  for (std::int64_t len = min_len; len <= max_len; ++len)
    odometer(2, max_entry, len, [&](const Coeffs& a) {
      ++tuples;
      const auto rep = plumb::verify_appendix(a);
      const auto c = plumb::convergents(a);
      if (!rep.all_hold() || c.p_prev * c.q - c.q_prev * c.p != 1) failures.push_back(plumb::format_coeffs(a));
    });
  if (f == Format::json) {
    print_json({{"tuples", tuples}, {"failures", failures}});
  } else if (failures.empty()) {
    std::cout << "all lemmas hold (" << tuples << " tuples)\n";
  } else {
    for (const auto& s : failures) std::cout << "FAIL " << s << '\n';
  }
  if (!failures.empty()) plumb::fail(ErrorKind::irreducible, std::to_string(failures.size()) + " tuples failed");
}

int dispatch(int argc, char** argv) {
  CLI::App app{"Contact-structure census for cyclic plumbings"};
  app.require_subcommand(1, 1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json|tsv|text")->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_option("--seed", o.seed, "reserved");
  };
  auto tuples = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "cycle framings a_1,...,a_n");
    sub->add_option("--z", o.z, "arm framings z_1,...,z_m");
    sub->add_option("--sign", o.sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
  };

  std::string eval, expand;
  auto* cf = app.add_subcommand("cf", "negative continued fractions");
  cf->add_option("--eval", eval, "coefficients to evaluate");
  cf->add_option("--expand", expand, "fraction p/q to expand");
  common(cf);

  std::string slope, r = "inf", side = "front";
  auto* bypass = app.add_subcommand("bypass", "bypass attachment on a dividing slope");
  bypass->add_option("--slope", slope, "dividing slope")->required();
  bypass->add_option("--r", r, "ruling slope");
  bypass->add_option("--side", side, "front|back")->check(CLI::IsMember({"front", "back"}));
  common(bypass);

  std::string t0 = "-1";
  auto* slopes = app.add_subcommand("slopes", "dividing slopes on T_0, T_1, T_2");
  tuples(slopes);
  slopes->add_option("--t0", t0, "dividing slope on T_0");
  slopes->add_option("--m", o.m, "twisting of the singular fibre");
  common(slopes);

  auto* dual = app.add_subcommand("dual", "dual framing cycle");
  tuples(dual);
  common(dual);

  auto* embeddable = app.add_subcommand("embeddable", "dual cycle embeds in a blowup of (0,0)");
  tuples(embeddable);
  embeddable->add_option("--max-k", o.max_k, "blowup depth bound");
  common(embeddable);

  auto* stein = app.add_subcommand("stein", "Stein structures from Legendrian surgery");
  tuples(stein);
  common(stein);

  Grid grid;
  bool use_grid = false;
  auto* census = app.add_subcommand("census", "counts and structures for a plumbing");
  tuples(census);
  census->add_option("--torsion", o.torsion, "Giroux torsion level listed");
  census->add_option("--max-k", o.max_k, "blowup depth bound");
  census->add_flag("--grid", use_grid, "run over a grid of specs");
  census->add_option("--grid-a1", grid.a1, "range for a_1");
  census->add_option("--grid-a-entries", grid.a_entries, "range for a_2..a_n");
  census->add_option("--grid-a-tail", grid.a_tail, "range for n - 1");
  census->add_option("--grid-z-entries", grid.z_entries, "range for z_j");
  census->add_option("--grid-z-len", grid.z_len, "range for m");
  census->add_option("--grid-signs", grid.signs, "sign set");
  common(census);

  std::int64_t max_entry = 6, min_len = 2, max_len = 6;
  bool appendix = false;
  auto* verify = app.add_subcommand("verify", "exhaustive identity sweeps");
  verify->add_flag("--appendix", appendix, "convergent identities")->required();
  verify->add_option("--max-entry", max_entry);
  verify->add_option("--min-len", min_len);
  verify->add_option("--max-len", max_len);
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  const Format f = parse_format(o.format);
  const auto sign = plumb::parse_sign(o.sign);

  if (cf->parsed()) {
    run_cf(eval, expand, f);
  } else if (bypass->parsed()) {
    const auto out = plumb::bypass_slope(plumb::Slope::parse(slope), plumb::Slope::parse(r), plumb::parse_side(side));
    if (f == Format::json) print_json({{"slope", slope}, {"r", r}, {"side", side}, {"result", out.to_string()}});
    else std::cout << out.to_string() << '\n';
  } else if (slopes->parsed()) {
    const auto a = require_list(o.a, "a"), z = require_list(o.z, "z");
    const auto t = plumb::slope_triple(a, z, plumb::Slope::parse(t0), o.m);
    const auto target = plumb::normal_form_targets(a);
    if (f == Format::json) {
      print_json({{"t0", t.t0.to_string()},
                  {"t1", t.t1.to_string()},
                  {"t2", t.t2.to_string()},
                  {"normal_form", {target.t0.to_string(), target.t1.to_string(), target.t2.to_string()}}});
    } else {
      std::cout << "T0 " << t.t0.to_string() << "\nT1 " << t.t1.to_string() << "\nT2 " << t.t2.to_string()
                << "\nnormal form " << target.t0.to_string() << ' ' << target.t1.to_string() << ' '
                << target.t2.to_string() << '\n';
    }
  } else if (dual->parsed()) {
    const auto d = plumb::dual_cycle(plumb::CyclicChain(require_list(o.a, "a"), sign));
    if (f == Format::json) print_json({{"a", parse_list(o.a, "a")}, {"dual", d.framings()}});
    else std::cout << d.to_string() << '\n';
  } else if (embeddable->parsed()) {
    const auto res = plumb::is_embeddable(require_list(o.a, "a"), o.max_k);
    if (f == Format::json) {
      ordered_json j{{"verdict", plumb::to_string(res.verdict)}, {"dual", res.dual}};
      if (res.witness) j["witness"] = res.witness->to_string();
      if (!res.reason.empty()) j["reason"] = res.reason;
      print_json(j);
    } else {
      std::cout << plumb::to_string(res.verdict);
      if (res.witness) std::cout << ' ' << res.witness->to_string();
      std::cout << '\n';
    }
    if (res.verdict != plumb::EmbedVerdict::embeddable)
      plumb::fail(res.verdict == plumb::EmbedVerdict::bound_exceeded ? ErrorKind::bound_exceeded
                                                                     : ErrorKind::irreducible,
                  res.reason.empty() ? "not embeddable within bound" : res.reason);
  } else if (stein->parsed()) {
    const plumb::PlumbingSpec spec{sign, require_list(o.a, "a"), require_list(o.z, "z")};
    const auto structures = plumb::enumerate_tight(spec, 0);
    std::vector<plumb::RotationVector> vs;
    for (const auto& s : structures) vs.push_back(s.rotation);
    const auto classes = plumb::count_distinct_spinc(vs);
    if (f == Format::json) {
      ordered_json rows = ordered_json::array();
      for (const auto& v : vs) rows.push_back({{"rotation", v}, {"chern", plumb::chern_cochain(v).values}});
      print_json({{"spec", plumb::to_json(spec)}, {"structures", rows}, {"distinct_chern", classes}});
    } else {
      for (const auto& v : vs) std::cout << "rot=(" << plumb::format_vector(v) << ")\n";
      std::cout << vs.size() << " Stein structures, " << classes << " distinct Chern classes\n";
    }
  } else if (census->parsed()) {
    if (use_grid) {
      run_grid(grid, o);
    } else {
      const plumb::PlumbingSpec spec{sign, require_list(o.a, "a"), parse_list(o.z, "z")};
      emit_report(spec.z.empty() ? plumb::cyclic_census(spec.a, sign, census_options(o))
                                 : plumb::census(spec, census_options(o)),
                  f);
    }
  } else if (verify->parsed()) {
    run_verify(max_entry, min_len, max_len, f);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const plumb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::usage ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
