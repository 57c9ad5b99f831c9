#pragma once

// Command-line front end. Subcommands: gap, dual-check, sweep, excone, vsw,
// selftest. Exit codes: 0 ok, 1 selftest failure, 2 parse error, 3 contract
// violation. Output is byte-deterministic for fixed inputs and options; when
// GALEGAP_REPORT_DIR is set, each report is also written to
// <dir>/<subcommand>.<ext>.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galegap/excone.hpp"
#include "galegap/gale.hpp"
#include "galegap/io.hpp"
#include "galegap/lp_oracle.hpp"
#include "galegap/tailseq.hpp"
#include "galegap/vsw.hpp"

namespace galegap {

namespace detail {

struct GridSpec {
  Ratio lo;
  Ratio hi;
  Ratio step;
};

// "lo:hi" or "lo:hi:step", rational endpoints.
inline GridSpec parse_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2 && parts.size() != 3)
    throw ParseError("grid must be 'lo:hi' or 'lo:hi:step'");
  GridSpec g;
  g.lo = Ratio::parse(trim(parts[0]));
  g.hi = Ratio::parse(trim(parts[1]));
  g.step = parts.size() == 3 ? Ratio::parse(trim(parts[2])) : Ratio(1);
  if (g.step.sign() <= 0) throw ParseError("grid step must be positive");
  if (g.hi < g.lo) throw ParseError("grid upper bound below lower bound");
  return g;
}

inline std::vector<std::int64_t> parse_ns(std::string_view text) {
  std::vector<std::int64_t> ns;
  for (std::string_view part : split(text, ',')) {
    part = trim(part);
    const Ratio r = Ratio::parse(part);
    if (!r.is_integer() || r.sign() <= 0)
      throw ParseError("N values must be positive integers");
    ns.push_back(r.numerator().convert_to<std::int64_t>());
  }
  return ns;
}

inline std::string excone_grid_csv(const GridSpec& g) {
  std::ostringstream os;
  os << "y1,y2,y3,phi,psi,gap\n";
  const Ratio y3_hi = std::min(g.hi, Ratio(0));
  for (Ratio y1 = g.lo; y1 <= g.hi; y1 += g.step)
    for (Ratio y2 = g.lo; y2 <= g.hi; y2 += g.step)
      for (Ratio y3 = g.lo; y3 <= y3_hi; y3 += g.step) {
        const ExzTriple t = gap_exz(Point3{y1, y2, y3});
        os << y1 << "," << y2 << "," << y3 << "," << t.phi.str() << ","
           << t.psi.str() << "," << t.gap.str() << "\n";
      }
  return os.str();
}

inline std::string vsw_grid_csv(const GridSpec& g) {
  std::ostringstream os;
  os << "eta,y1,y2,in_C0,in_C1,in_Cprime,in_clCprime\n";
  for (Ratio eta = g.lo; eta <= g.hi; eta += g.step)
    for (Ratio y1 = g.lo; y1 <= g.hi; y1 += g.step)
      for (Ratio y2 = g.lo; y2 <= g.hi; y2 += g.step) {
        const EtaPoint p{eta, y1, y2};
        os << eta << "," << y1 << "," << y2 << "," << in_C0(p) << "," << in_C1(p)
           << "," << in_Cprime(p) << "," << in_cl_Cprime(p) << "\n";
      }
  return os.str();
}

inline void maybe_copy_report(const std::string& subcommand, Format fmt,
                              const std::string& text) {
  const char* dir = std::getenv("GALEGAP_REPORT_DIR");
  if (!dir || !*dir) return;
  const char* ext = fmt == Format::json ? ".json" : fmt == Format::csv ? ".csv" : ".txt";
  std::ofstream out(std::string(dir) + "/" + subcommand + ext);
  out << text;
}

}  // namespace detail

// Paper-derived golden fixtures; returns the number of mismatches and prints
// one line per fixture.
inline int run_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    std::string note;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "ok - " : "FAIL - ") << name << note << "\n";
    if (!ok) ++failures;
  };

  const CostSpec gale(Ratio(0), Ratio(0),
                      TailSeq({Ratio(1)}, TailRule{Ratio(0), Ratio(0), Ratio(0)}));

  check("classic gap values", [&] {
    const GapReport r = gap_report(gale, Rhs{Ratio(1), Ratio(0)});
    return r.phi == XReal(Ratio(1)) && r.psi == XReal(Ratio(0)) &&
           r.gap == XReal(Ratio(1)) &&
           r.attainment == AttainStatus::attained_with_witness &&
           r.witness == DualPoint{Ratio(0), Ratio(0)};
  });
  check("sequence evaluation", [&] {
    return gale.beta.eval(BigInt(0)) == Ratio(1) && gale.beta.eval(BigInt(7)) == Ratio(0) &&
           liminf_ratio(gale.beta) == XReal(Ratio(0));
  });
  check("cost evaluation", [&] {
    return cost_eval(gale, BigInt(0)) == Ratio(1) && cost_eval(gale, BigInt(3)) == Ratio(0);
  });
  check("dual feasibility", [&] {
    return dual_feasible(gale, DualPoint{Ratio(0), Ratio(0)}) &&
           !dual_feasible(gale, DualPoint{Ratio(1, 2), Ratio(-1)});
  });
  check("right-hand-side classification", [&] {
    return rhs_classify(Rhs{Ratio(1), Ratio(0)}) == RhsCase::axis &&
           rhs_classify(Rhs{Ratio(0), Ratio(1)}) == RhsCase::infeasible &&
           icr_membership(Rhs{Ratio(2), Ratio(1)}) &&
           !icr_membership(Rhs{Ratio(1), Ratio(0)}) &&
           !icr_membership(Rhs{Ratio(1), Ratio(1)});
  });
  check("dual attainment branches", [&] {
    const CostSpec mid(Ratio(0), Ratio(0),
                       TailSeq({Ratio(1)}, TailRule{Ratio(2), Ratio(0), Ratio(0)}));
    const auto [sa, wa] = dual_optimum_status(gale, Rhs{Ratio(1), Ratio(0)});
    const auto [sb, wb] = dual_optimum_status(mid, Rhs{Ratio(1), Ratio(0)});
    return sa == AttainStatus::attained_with_witness &&
           wa == DualPoint{Ratio(0), Ratio(0)} &&
           sb == AttainStatus::attained_with_witness && wb.has_value() &&
           dual_feasible(mid, *wb);
  });
  check("conjugate indicator", [&] {
    return hc_conjugate(gale, DualPoint{Ratio(0), Ratio(0)}) == XReal(Ratio(0)) &&
           hc_conjugate(gale, DualPoint{Ratio(1), Ratio(0)}).is_pos_inf();
  });
  check("cone example closed form", [&] {
    const ExzTriple t = gap_exz(Point3{Ratio(0), Ratio(1), Ratio(0)});
    return h0_closed(Point3{Ratio(7), Ratio(3), Ratio(0)}) == XReal(Ratio(3)) &&
           h0_closed(Point3{Ratio(0), Ratio(-5), Ratio(-1)}) == XReal(Ratio(0)) &&
           h0_closed(Point3{Ratio(0), Ratio(-1), Ratio(0)}).is_pos_inf() &&
           !h0_witness(Point3{Ratio(0), Ratio(0), Ratio(1)}).has_value() &&
           t.phi == XReal(Ratio(1)) && t.psi == XReal(Ratio(0)) && t.gap == XReal(Ratio(1));
  });
  check("epigraph set membership", [&] {
    return in_C0(EtaPoint{Ratio(1), Ratio(0), Ratio(0)}) &&
           !in_C0(EtaPoint{Ratio(1, 2), Ratio(0), Ratio(0)}) &&
           in_C0(EtaPoint{Ratio(0), Ratio(1), Ratio(0)}) &&
           in_cl_Cprime(EtaPoint{Ratio(0), Ratio(0), Ratio(0)}) &&
           !in_cl_Cprime(EtaPoint{Ratio(0), Ratio(2), Ratio(0)});
  });
  check("line intersection thresholds", [&] {
    for (const Ratio& eta : {Ratio(0), Ratio(1, 2), Ratio(1), Ratio(2)}) {
      const EtaPoint p{eta, Ratio(0), Ratio(0)};
      if (in_line_cap_Cprime(p) != (eta >= Ratio(1))) return false;
      if (in_line_cap_cl_Cprime(p) != (eta.sign() >= 0)) return false;
    }
    return verify_line_intersections(Ratio(-2), Ratio(2), Ratio(1, 2));
  });
  check("truncation oracles", [&] {
    const LpOutcome p = solve_trunc_primal(gale, Rhs{Ratio(1), Ratio(0)}, 50);
    const LpOutcome d = solve_trunc_dual(gale, Rhs{Ratio(1), Ratio(0)}, 5);
    return p.status == LpStatus::optimal && p.value == XReal(Ratio(1)) &&
           p.primal_witness == SparseVec{{0, Ratio(1)}} &&
           d.status == LpStatus::optimal && d.value == XReal(Ratio(1));
  });
  check("interior zero gap", [&] {
    const GapReport r = gap_report(gale, Rhs{Ratio(2), Ratio(1)});
    return r.phi == XReal(Ratio(0)) && r.psi == XReal(Ratio(0)) &&
           r.gap == XReal(Ratio(0));
  });

  out << (failures == 0 ? "selftest: all fixtures match\n"
                        : "selftest: " + std::to_string(failures) + " mismatch(es)\n");
  return failures;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Exact duality-gap computations for the perturbed Gale family"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string format_name = "pretty";
  std::string eps_text = "1/1000000000";
  std::string ns_text = "1,10,100";
  std::string grid_text = "-3:3:1";
  std::string y1_text, y2_text;

  auto* gap_cmd = app.add_subcommand("gap", "Gap report for an instance");
  gap_cmd->add_option("instance", instance_path, "instance file")->required();
  gap_cmd->add_option("--format", format_name, "json|csv|pretty");
  gap_cmd->add_option("--eps", eps_text, "enclosure width bound (rational)");

  auto* dual_cmd = app.add_subcommand("dual-check", "Dual feasibility verdict");
  dual_cmd->add_option("instance", instance_path, "instance file")->required();
  dual_cmd->add_option("--y1", y1_text, "first dual coordinate")->required();
  dual_cmd->add_option("--y2", y2_text, "second dual coordinate")->required();
  dual_cmd->add_option("--format", format_name, "json|csv|pretty");

  auto* sweep_cmd = app.add_subcommand("sweep", "Truncation value table");
  sweep_cmd->add_option("instance", instance_path, "instance file")->required();
  sweep_cmd->add_option("--ns", ns_text, "comma-separated N list");
  sweep_cmd->add_option("--format", format_name, "json|csv|pretty (default csv)");

  auto* excone_cmd = app.add_subcommand("excone", "Cone-example grid report");
  excone_cmd->add_option("--grid", grid_text, "lo:hi[:step], rationals");

  auto* vsw_cmd = app.add_subcommand("vsw", "Epigraph-set membership grid");
  vsw_cmd->add_option("--grid", grid_text, "lo:hi[:step], rationals");

  app.add_subcommand("selftest", "Run the embedded golden fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gap_cmd->parsed()) {
      const Format fmt = parse_format(format_name);
      const Instance inst = load_instance_file(instance_path);
      const GapReport report = gap_report(inst.cost, inst.rhs, Ratio::parse(eps_text));
      const std::string text = render_gap_report(report, fmt);
      out << text;
      detail::maybe_copy_report("gap", fmt, text);
    } else if (dual_cmd->parsed()) {
      const Format fmt = parse_format(format_name);
      const Instance inst = load_instance_file(instance_path);
      const DualPoint y{Ratio::parse(y1_text), Ratio::parse(y2_text)};
      const std::string text = render_dual_check(dual_check(inst.cost, inst.rhs, y), fmt);
      out << text;
      detail::maybe_copy_report("dual-check", fmt, text);
    } else if (sweep_cmd->parsed()) {
      const Format fmt = sweep_cmd->get_option("--format")->count() == 0 &&
                                 format_name == "pretty"
                             ? Format::csv
                             : parse_format(format_name);
      const Instance inst = load_instance_file(instance_path);
      const auto rows = truncation_sweep(inst.cost, inst.rhs, detail::parse_ns(ns_text));
      const std::string text = render_sweep(rows, fmt);
      out << text;
      detail::maybe_copy_report("sweep", fmt, text);
    } else if (excone_cmd->parsed()) {
      const std::string text = detail::excone_grid_csv(detail::parse_grid(grid_text));
      out << text;
      detail::maybe_copy_report("excone", Format::csv, text);
    } else if (vsw_cmd->parsed()) {
      const std::string text = detail::vsw_grid_csv(detail::parse_grid(grid_text));
      out << text;
      detail::maybe_copy_report("vsw", Format::csv, text);
    } else {
      return run_selftest(out) == 0 ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    err << "contract violation: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    err << "contract violation: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

}  // namespace galegap
