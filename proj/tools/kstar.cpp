// Command-line front end: expand the star-product series, examine the
// associator, verify the order-by-order cancellation, and gauge the product.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kstar/consequences.hpp"
#include "kstar/evaluate.hpp"
#include "kstar/gauge.hpp"
#include "kstar/random_gen.hpp"
#include "kstar/star.hpp"

namespace {

using namespace kstar;

constexpr std::uint64_t kDefaultSeed = 1;

struct ExpandOptions {
  std::optional<int> grade;
  std::string format = "text";
  std::string output;
};

struct AssocOptions {
  std::string poisson_file;
  std::optional<int> dim;
  int order = 3;
  std::uint64_t seed = kDefaultSeed;
  int triples = 10;
  std::string format = "text";
  std::string args;  // "f;g;h"
};

struct ClaimOptions {
  bool solve = false;
  std::string format = "text";
};

struct GaugeOptions {
  std::string preset;
  std::string coeffs_file;
  std::string poisson_file;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "text";
  std::string output;
};

void emit_series(const GraphSeries& s, const std::string& format,
                 std::ostream& out) {
  if (format == "json")
    out << series_to_json_string(s) << "\n";
  else
    write_series(out, s);
}

int run_expand(const ExpandOptions& opt) {
  GraphSeries star = star_product();
  GraphSeries chosen = opt.grade ? grade_slice(star, *opt.grade) : star;
  if (!opt.output.empty()) {
    std::ofstream f(opt.output);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.output);
    emit_series(chosen, opt.format, f);
  } else {
    emit_series(chosen, opt.format, std::cout);
  }
  return 0;
}

std::vector<std::vector<Poly>> argument_triples(const AssocOptions& opt,
                                                int dim) {
  std::vector<std::vector<Poly>> triples;
  if (!opt.args.empty()) {
    auto first = opt.args.find(';');
    auto second = opt.args.find(';', first + 1);
    if (first == std::string::npos || second == std::string::npos)
      throw std::runtime_error("--args wants three polynomials 'f;g;h'");
    triples.push_back(
        {Poly::parse(opt.args.substr(0, first), dim),
         Poly::parse(opt.args.substr(first + 1, second - first - 1), dim),
         Poly::parse(opt.args.substr(second + 1), dim)});
  } else {
    Rng rng(opt.seed);
    for (int t = 0; t < opt.triples; ++t)
      triples.push_back({random_poly(rng, dim), random_poly(rng, dim),
                         random_poly(rng, dim)});
  }
  return triples;
}

int run_assoc(const AssocOptions& opt) {
  GraphSeries star = star_product();
  GraphSeries raw = associator(star);
  GraphSeries red = reduce_skew(raw);

  nlohmann::json j;
  j["raw_terms"] = {raw.term_count(0), raw.term_count(1), raw.term_count(2),
                    raw.term_count(3)};
  j["reduced_terms"] = {red.term_count(0), red.term_count(1),
                        red.term_count(2), red.term_count(3)};
  nlohmann::json breakdown = nlohmann::json::array();
  for (const auto& o : orders_present(red, 3)) {
    GraphSeries part = restrict_orders(grade_slice(red, 3), o);
    breakdown.push_back({{"order", o}, {"terms", part.term_count(3)}});
  }
  j["grade3_orders"] = breakdown;

  bool all_zero = true;
  if (!opt.poisson_file.empty()) {
    PoissonStructure p = PoissonStructure::from_json_file(opt.poisson_file);
    if (opt.dim && *opt.dim != p.dim())
      throw std::runtime_error("--dim disagrees with the Poisson file");
    j["poisson"] = {{"dim", p.dim()}, {"jacobi_verified", p.jacobi_verified()}};
    nlohmann::json evals = nlohmann::json::array();
    for (const auto& args : argument_triples(opt, p.dim())) {
      auto coeffs = evaluate_series(red, p, args, opt.order);
      nlohmann::json e;
      e["args"] = {args[0].to_string(), args[1].to_string(),
                   args[2].to_string()};
      nlohmann::json per_grade = nlohmann::json::array();
      for (int k = 0; k <= opt.order; ++k) {
        per_grade.push_back(
            {{"grade", k},
             {"zero", coeffs[k].is_zero()},
             {"value", coeffs[k].is_zero() ? "0" : coeffs[k].to_string()}});
        all_zero = all_zero && coeffs[k].is_zero();
      }
      e["coefficients"] = per_grade;
      evals.push_back(e);
    }
    j["evaluations"] = evals;
    j["associativity"] = all_zero;
  }

  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "raw: " << raw.term_count(1) << "," << raw.term_count(2)
              << "," << raw.term_count(3)
              << "; reduced grade 3: " << red.term_count(3) << "\n";
    std::cout << "reduced per grade: " << red.term_count(0) << ","
              << red.term_count(1) << "," << red.term_count(2) << ","
              << red.term_count(3) << "\n";
    for (const auto& b : j["grade3_orders"])
      std::cout << "  order (" << b["order"][0] << "," << b["order"][1] << ","
                << b["order"][2] << "): " << b["terms"] << " terms\n";
    if (!opt.poisson_file.empty()) {
      std::cout << "jacobi_verified: "
                << (j["poisson"]["jacobi_verified"].get<bool>() ? "yes" : "no")
                << "\n";
      for (const auto& e : j["evaluations"])
        for (const auto& c : e["coefficients"])
          if (!c["zero"].get<bool>())
            std::cout << "  NONZERO at grade " << c["grade"]
                      << ": " << c["value"].get<std::string>() << "\n";
      std::cout << "evaluated associator vanishes: " << (all_zero ? "yes" : "no")
                << "\n";
    }
  }
  return (!opt.poisson_file.empty() && !all_zero) ? 1 : 0;
}

int run_verify_claim(const ClaimOptions& opt) {
  GraphSeries red = reduce_skew(associator(star_product()));
  ClaimReport rep = verify_claim(red);

  nlohmann::json j = nlohmann::json::parse(rep.to_json_string());
  bool solver_ok = true;
  if (opt.solve) {
    const GraphSeries cubic = grade_slice(red, 3);
    auto sf = s_consequence(Slot::f).series;
    auto sg = s_consequence(Slot::g).series;
    auto sh = s_consequence(Slot::h).series;
    auto fi = i_consequence(Slot::f).tadpole_free;
    auto gi = i_consequence(Slot::g).tadpole_free;
    auto hi = i_consequence(Slot::h).tadpole_free;
    struct Case {
      std::vector<int> order;
      std::vector<std::string> names;
      std::vector<const GraphSeries*> basis;
    };
    const std::vector<Case> cases = {
        {{2, 2, 1}, {"S_f"}, {&sf}},
        {{1, 2, 2}, {"S_g"}, {&sg}},
        {{2, 1, 2}, {"S_h"}, {&sh}},
        {{1, 1, 1}, {"I_f", "I_g", "I_h"}, {&fi, &gi, &hi}},
        {{1, 1, 2}, {"I_f", "I_g", "S_h"}, {&fi, &gi, &sh}},
        {{1, 2, 1}, {"I_f", "I_h"}, {&fi, &hi}},
        {{2, 1, 1}, {"S_f", "I_g", "I_h"}, {&sf, &gi, &hi}},
    };
    nlohmann::json solved = nlohmann::json::array();
    for (const auto& c : cases) {
      std::vector<GraphSeries> basis;
      for (const GraphSeries* b : c.basis)
        basis.push_back(restrict_orders(*b, c.order));
      SolveResult r =
          solve_combination(restrict_orders(cubic, c.order), basis, 3);
      nlohmann::json entry;
      entry["order"] = c.order;
      entry["basis"] = c.names;
      entry["feasible"] = r.feasible;
      if (r.feasible) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& x : r.coefficients) cs.push_back(to_string(x));
        entry["coefficients"] = cs;
      } else {
        entry["note"] = r.note;
        solver_ok = false;
      }
      solved.push_back(entry);
    }
    j["solve"] = solved;
  }

  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.to_text();
    if (opt.solve)
      for (const auto& e : j["solve"]) {
        std::cout << "solve order (" << e["order"][0] << "," << e["order"][1]
                  << "," << e["order"][2] << "):";
        if (e["feasible"].get<bool>()) {
          for (std::size_t i = 0; i < e["basis"].size(); ++i)
            std::cout << " " << e["coefficients"][i].get<std::string>() << "*"
                      << e["basis"][i].get<std::string>();
        } else {
          std::cout << " infeasible (" << e["note"].get<std::string>() << ")";
        }
        std::cout << "\n";
      }
  }
  return (rep.pass && solver_ok) ? 0 : 1;
}

int run_gauge(const GaugeOptions& opt) {
  GaugeTransform t = GaugeTransform::identity();
  if (!opt.coeffs_file.empty())
    t = GaugeTransform(GaugeCoefficients::from_json_file(opt.coeffs_file));
  else if (opt.preset == "loop-removal")
    t = GaugeTransform::loop_removal();
  else if (opt.preset == "identity" || opt.preset.empty())
    t = GaugeTransform::identity();
  else
    throw std::runtime_error("unknown preset: " + opt.preset);

  GraphSeries star = star_product();
  GraphSeries gauged = gauge_star(star, t);

  nlohmann::json report;
  report["terms"] = {gauged.term_count(0), gauged.term_count(1),
                     gauged.term_count(2), gauged.term_count(3)};
  bool loop2 = false;
  for (const Term& term : gauged.grade(2))
    loop2 = loop2 || classify(term.graph).has_loop;
  report["grade2_has_loop_graph"] = loop2;

  bool checks_pass = true;
  if (!opt.poisson_file.empty()) {
    PoissonStructure p = PoissonStructure::from_json_file(opt.poisson_file);
    Rng rng(opt.seed);
    GraphSeries gassoc = reduce_skew(associator(gauged));
    bool assoc_zero = true;
    for (int trip = 0; trip < 3; ++trip) {
      std::vector<Poly> args = {random_poly(rng, p.dim()),
                                random_poly(rng, p.dim()),
                                random_poly(rng, p.dim())};
      for (const Poly& c : evaluate_series(gassoc, p, args))
        assoc_zero = assoc_zero && c.is_zero();
    }
    report["gauged_associator_vanishes"] = assoc_zero;
    Poly f = random_poly(rng, p.dim());
    Poly one = Poly::constant(p.dim(), 1);
    auto right = evaluate_series(gauged, p, {f, one});
    auto left = evaluate_series(gauged, p, {one, f});
    bool unital = right[0] == f && left[0] == f;
    for (int k = 1; k <= 3; ++k)
      unital = unital && right[k].is_zero() && left[k].is_zero();
    report["unital"] = unital;
    checks_pass = assoc_zero && unital;
  }

  if (opt.format == "json") {
    nlohmann::json j;
    j["series"] = nlohmann::json::parse(series_to_json_string(gauged));
    j["report"] = report;
    if (!opt.output.empty()) {
      std::ofstream f(opt.output);
      if (!f) throw std::runtime_error("cannot open output file: " + opt.output);
      f << series_to_json_string(gauged) << "\n";
    }
    std::cout << j.dump(2) << "\n";
  } else if (!opt.output.empty()) {
    std::ofstream f(opt.output);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.output);
    write_series(f, gauged);
    std::cout << "series written to " << opt.output << "\n"
              << report.dump(2) << "\n";
  } else {
    write_series(std::cout, gauged);
    std::cerr << report.dump(2) << "\n";
  }
  return checks_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kstar: the Kontsevich star-product through hbar^3 as exact graph "
      "calculus"};
  app.require_subcommand(1);

  ExpandOptions expand_opt;
  auto* expand = app.add_subcommand(
      "expand", "Write the star-product graph series");
  expand->add_option("--grade", expand_opt.grade, "only this hbar power")
      ->check(CLI::Range(0, 3));
  expand->add_option("--format", expand_opt.format)
      ->check(CLI::IsMember({"text", "json"}));
  expand->add_option("--output", expand_opt.output, "write to file");

  AssocOptions assoc_opt;
  auto* assoc = app.add_subcommand(
      "assoc", "Term counts of the associator; with --poisson, evaluate it");
  assoc->add_option("--poisson", assoc_opt.poisson_file, "Poisson JSON file");
  assoc->add_option("--dim", assoc_opt.dim, "cross-check dimension");
  assoc->add_option("--order", assoc_opt.order)->check(CLI::Range(0, 3));
  assoc->add_option("--seed", assoc_opt.seed);
  assoc->add_option("--triples", assoc_opt.triples)->check(CLI::Range(1, 1000));
  assoc->add_option("--format", assoc_opt.format)
      ->check(CLI::IsMember({"text", "json"}));
  assoc->add_option("--args", assoc_opt.args,
                    "explicit argument polynomials 'f;g;h'");

  ClaimOptions claim_opt;
  auto* claim = app.add_subcommand(
      "verify-claim",
      "Check the order-by-order cancellation of the cubic associator");
  claim->add_flag("--solve", claim_opt.solve,
                  "recover the coefficients by exact linear solving");
  claim->add_option("--format", claim_opt.format)
      ->check(CLI::IsMember({"text", "json"}));

  GaugeOptions gauge_opt;
  auto* gauge = app.add_subcommand("gauge", "Gauge-transform the star-product");
  auto* preset_opt = gauge->add_option("--preset", gauge_opt.preset,
                                       "loop-removal or identity");
  gauge->add_option("--coeffs", gauge_opt.coeffs_file,
                    "gauge coefficients JSON file")
      ->excludes(preset_opt);
  gauge->add_option("--poisson", gauge_opt.poisson_file,
                    "re-check associativity and unitality");
  gauge->add_option("--seed", gauge_opt.seed);
  gauge->add_option("--format", gauge_opt.format)
      ->check(CLI::IsMember({"text", "json"}));
  gauge->add_option("--output", gauge_opt.output, "series file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*expand) return run_expand(expand_opt);
    if (*assoc) return run_assoc(assoc_opt);
    if (*claim) return run_verify_claim(claim_opt);
    if (*gauge) return run_gauge(gauge_opt);
  } catch (const kstar::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
