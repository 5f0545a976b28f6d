// Command-line front end: every verification is a subcommand, plus a
// verify-all regression suite with text or JSON reporters.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "hmf/dims.hpp"
#include "hmf/octic.hpp"
#include "hmf/relations.hpp"
#include "hmf/toric.hpp"
#include "hmf/verify.hpp"

namespace {

int report_exit(const hmf::Report& r, bool json) {
  std::cout << (json ? r.json() : r.text());
  return r.all_pass() ? 0 : 1;
}

int default_digits_from_env() {
  if (const char* env = std::getenv("HMF49_PRECISION")) {
    int d = std::atoi(env);
    if (d >= 10 && d <= 10000) return d;
    std::cerr << "ignoring HMF49_PRECISION=" << env << " (need 10..10000)\n";
  }
  return 50;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric computations for the discriminant-49 Hilbert modular threefold"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--format-json,--json", json, "emit reports as JSON");

  int digits = default_digits_from_env();
  app.add_option("--precision", digits, "numeric working precision in decimal digits");

  // field
  auto* field = app.add_subcommand("field", "trace tables of totally positive integers");
  long field_trace = 14;
  field->add_option("--trace", field_trace, "largest trace to list");

  // ideal
  auto* ideal = app.add_subcommand("ideal", "ideal factorization and cusp orbits");
  auto* ideal_factor = ideal->add_subcommand("factor", "factor a principal ideal");
  std::string factor_arg;
  ideal_factor->add_option("element", factor_arg, "element to factor, e.g. \"2-w\"")->required();
  auto* ideal_cusps = ideal->add_subcommand("cusps", "print the cusp orbit decomposition");
  ideal->require_subcommand(1);

  // expand
  auto* expand = app.add_subcommand("expand", "q-expansions of the Eisenstein series");
  std::string form = "F0";
  long tbound = 20;
  bool symmetrized = false;
  expand->add_option("--form", form, "F0, F1, F2, F4, E2, s1, s2, s3");
  expand->add_option("--trace-bound", tbound, "truncation bound");
  expand->add_flag("--symmetrized", symmetrized, "print in cyclic q(a,b,c) notation");

  // rep
  auto* rep = app.add_subcommand("rep", "matrix group checks");
  bool rep_check = true;
  rep->add_flag("--check", rep_check, "group order, relations, invariant dimensions");

  // relation
  auto* relation = app.add_subcommand("relation", "the degree-8 relation and the octic");
  bool rel_find = false, rel_octic = false;
  long rel_bound = 25;
  relation->add_flag("--find", rel_find, "search for the relation");
  relation->add_flag("--octic", rel_octic, "print the octic");
  relation->add_option("--trace-bound", rel_bound, "kernel search bound");

  // toric
  auto* toric_cmd = app.add_subcommand("toric", "cusp fans and intersection numbers");
  std::string fan_arg;
  bool intersections = false;
  toric_cmd->add_option("--fan", fan_arg, "dump rays/cones: Y-ch, Y-sm, X-ch, X-sm");
  toric_cmd->add_flag("--intersections", intersections, "print the intersection-number report");

  // dims
  auto* dims_cmd = app.add_subcommand("dims", "dimension tables");
  std::string group = "gamma-p";
  std::string k_range = "2..10";
  dims_cmd->add_option("--group", group, "gamma-p or gamma-1");
  dims_cmd->add_option("--k", k_range, "weight or range, e.g. 8 or 2..10");

  // octic
  auto* octic_cmd = app.add_subcommand("octic", "numeric singular-orbit verification");
  bool octic_verify = true;
  long octic_lo = 60, octic_hi = 80;
  octic_cmd->add_flag("--verify", octic_verify, "run the 84-point suite");
  octic_cmd->add_option("--trace-bound", octic_lo, "evaluation bound");
  octic_cmd->add_option("--trace-bound-high", octic_hi, "stability bound");
  int octic_jobs = 1;
  octic_cmd->add_option("--jobs", octic_jobs, "parallelism degree");

  // verify-all
  auto* verify_cmd = app.add_subcommand("verify-all", "run the complete regression suite");
  hmf::VerifyConfig cfg;
  verify_cmd->add_option("--trace-bound", cfg.relation_bound, "relation search bound");
  verify_cmd->add_option("--jobs", cfg.jobs, "parallelism degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  }

  hmf::Real::set_default_digits(digits);

  try {
    if (*field) {
      for (long t = 1; t <= field_trace; ++t) {
        auto elements = hmf::totally_positive_of_trace(t);
        if (elements.empty()) continue;
        std::cout << "trace " << t << ":";
        for (const auto& e : elements) std::cout << "  " << e.str();
        std::cout << "\n";
      }
      return 0;
    }

    if (*ideal) {
      if (*ideal_cusps) {
        auto c = hmf::count_cusps();
        std::cout << c.count << " cusps; scalar group of order " << c.scalar_group_order << "\n";
        for (const auto& orbit : c.orbits) {
          std::cout << " ";
          for (auto [x, y] : orbit) std::cout << " (" << x << "," << y << ")";
          std::cout << "\n";
        }
        return 0;
      }
      hmf::FieldElement x = hmf::parse_element(factor_arg);
      auto f = hmf::factor_element(x);
      std::cout << "(" << x.str() << ") =";
      for (const auto& [P, e] : f.factors) {
        std::cout << " [q=" << P.q << " f=" << P.f << (P.ramified ? " ramified" : "");
        if (P.f == 1 && !P.ramified) std::cout << " w=" << P.root;
        std::cout << "]^" << e;
      }
      std::cout << "\n  norm " << hmf::norm(x).get_str() << ", s = " << hmf::s_of_element(x)
                << ", divisor sum " << hmf::divisor_sum_s(f) << "\n";
      return 0;
    }

    if (*expand) {
      if (form == "s1" || form == "s2" || form == "s3") {
        auto s = hmf::build_s(form[1] - '0', tbound);
        std::cout << "q-order " << s.bound << "\n";
        for (const auto& [n, v] : s.terms)
          std::cout << v.get_str() << " q^" << n << "\n";
        return 0;
      }
      hmf::QExpansion<hmf::Rat> series;
      if (form == "E2")
        series = hmf::build_E2(tbound);
      else if (form == "F0" || form == "F1" || form == "F2" || form == "F4")
        series = hmf::build_F(form[1] - '0', tbound);
      else {
        std::cerr << "unknown form " << form << "\n";
        return 2;
      }
      std::cout << (symmetrized ? hmf::to_symmetrized(series) + "\n"
                                : hmf::to_interchange(series));
      return 0;
    }

    if (*rep) {
      hmf::Report r;
      hmf::verify_representation(r);
      return report_exit(r, json);
    }

    if (*relation) {
      hmf::Report r;
      if (rel_find) {
        hmf::RelationSearch found = hmf::find_relation(rel_bound);
        std::cout << "kernel dimension " << found.kernel_dimension << ", "
                  << found.p8.term_count() << " terms\n\nraw monomials (F0 F1 F2 F4 E2):\n";
        for (const auto& [m, c] : found.p8.terms())
          std::cout << "  " << c.get_str() << "  " << m[0] << " " << m[1] << " " << m[2] << " "
                    << m[3] << " " << m[4] << "\n";
        std::cout << "\ngrouped by powers of (6/7 E2):\n";
        for (int j = 4; j >= 0; --j) {
          hmf::Rat scale = hmf::rat_pow(hmf::Rat(7, 6), (unsigned)j);
          std::string stratum;
          for (const auto& [m, c] : found.p8.terms()) {
            if (m[4] != j) continue;
            hmf::Rat coef = c * scale;
            std::string mono;
            const char* names[4] = {"F0", "F1", "F2", "F4"};
            for (int v = 0; v < 4; ++v) {
              if (m[(size_t)v] == 0) continue;
              if (!mono.empty()) mono += " ";
              mono += names[v];
              if (m[(size_t)v] > 1) mono += "^" + std::to_string(m[(size_t)v]);
            }
            if (mono.empty()) mono = "1";
            if (!stratum.empty()) stratum += coef >= 0 ? " + " : " - ";
            else if (coef < 0) stratum += "-";
            hmf::Rat ac = abs(coef);
            if (mono == "1")
              stratum += ac.get_str();
            else if (ac == 1)
              stratum += mono;
            else
              stratum += ac.get_str() + " " + mono;
          }
          if (stratum.empty()) continue;
          if (j > 0)
            std::cout << "  (6/7 E2)^" << j << " * ( " << stratum << " )\n";
          else
            std::cout << "  " << stratum << "\n";
        }
        return 0;
      }
      if (rel_octic) {
        hmf::PolyQ q = hmf::octic_closed_form();
        for (const auto& [m, c] : q.terms())
          std::cout << c.get_str() << " F0^" << m[0] << " F1^" << m[1] << " F2^" << m[2] << " F4^"
                    << m[3] << "\n";
        return 0;
      }
      try {
        hmf::verify_relation(r, rel_bound, rel_bound + 5);
      } catch (const hmf::InsufficientRows& e) {
        hmf::Check c;
        c.id = "relation-kernel";
        c.paper_anchor = "relation-kernel-dimension";
        c.pass = false;
        c.note = std::string("insufficient-rows: ") + e.what();
        r.add(c);
      }
      return report_exit(r, json);
    }

    if (*toric_cmd) {
      hmf::Report r;
      if (!fan_arg.empty()) {
        hmf::Level level = fan_arg[0] == 'X' || fan_arg[0] == 'x' ? hmf::Level::level_p
                                                                  : hmf::Level::full;
        hmf::Resolution res = fan_arg.find("sm") != std::string::npos ? hmf::Resolution::sm
                                                                      : hmf::Resolution::ch;
        hmf::Fan3D fan = hmf::build_cusp_fan(level, res);
        std::cout << "rays " << fan.rays.size() << ", cones " << fan.cones.size() << "\n";
        for (size_t i = 0; i < fan.rays.size(); ++i) {
          hmf::FieldElement s = fan.scaled(fan.rays[i]);
          std::cout << "ray " << i << ": (" << s.a.get_str() << "," << s.b.get_str() << ","
                    << s.c.get_str() << ") " << (fan.rays[i].is_center ? "E" : "D")
                    << fan.rays[i].orbit_class + 1 << "\n";
        }
        for (const auto& cone : fan.cones)
          std::cout << "cone " << cone[0] << " " << cone[1] << " " << cone[2] << "\n";
        return 0;
      }
      hmf::verify_toric(r);
      if (intersections) {
        auto in = hmf::intersection_numbers();
        std::cout << "L^3 = " << in.L3.get_str() << ", (K - E/2)^3 = " << in.KE3.get_str()
                  << ", restriction^2 = " << in.d1_restriction_sq.get_str() << "\n";
      }
      return report_exit(r, json);
    }

    if (*dims_cmd) {
      int kmin, kmax;
      size_t dots = k_range.find("..");
      if (dots == std::string::npos) {
        kmin = kmax = std::stoi(k_range);
      } else {
        kmin = std::stoi(k_range.substr(0, dots));
        kmax = std::stoi(k_range.substr(dots + 2));
      }
      for (int k = kmin; k <= kmax; ++k) {
        if (group == "gamma-1" && (k % 2 || k < 2)) continue;
        hmf::DimensionReport d =
            group == "gamma-1" ? hmf::dimension_gamma_1(k) : hmf::dimension_gamma_p(k);
        std::cout << d.group << " k=" << d.k << ": cusp " << d.cusp.get_str() << ", total "
                  << d.total.get_str() << "\n";
      }
      return 0;
    }

    if (*octic_cmd) {
      hmf::Report r;
      hmf::verify_octic(r, octic_lo, octic_hi, digits, 1e-12, octic_jobs);
      return report_exit(r, json);
    }

    if (*verify_cmd) {
      cfg.digits = digits;
      hmf::Report r = hmf::verify_all(cfg);
      return report_exit(r, json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
