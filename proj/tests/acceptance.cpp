// Acceptance gate: runs the full-scale suites and prints one line per
// criterion.  Exit code 0 iff every criterion passes.
#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "chlab/experiment.hpp"

using namespace chlab;

namespace {

struct Gate {
  int id;
  std::string label;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;
};

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const auto t0 = clock::now();
  return std::chrono::duration<double>(clock::now() - t0).count();
}

bool check_named(const RunReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.pass;
  return false;
}

double check_value(const RunReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.value;
  return 0.0;
}

void print_gate(const Gate& g) {
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", g.pass ? "PASS" : "FAIL",
              g.id, g.label.c_str(), g.seconds,
              g.detail.empty() ? "" : " -- ", g.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::vector<Gate> gates;
  bool all_pass = true;

  try {
    // Criteria 1-3 share the cutoff/partition suite.
    double t0 = now_seconds();
    SuiteConfig cut_cfg;
    RunReport cut = run_cutoff_suite(cut_cfg);
    const double cut_time = now_seconds() - t0;
    {
      Gate g{1, "partition of unity and block support at N=2^20"};
      g.pass = check_named(cut, "partition_max_error") &&
               check_named(cut, "block_support_leak") && cut_time < 10.0;
      g.seconds = cut_time;
      char buf[128];
      std::snprintf(buf, sizeof buf, "max partition error %.3g",
                    check_value(cut, "partition_max_error"));
      g.detail = buf;
      gates.push_back(g);
    }
    {
      Gate g{2, "single-block localization of every packet f_n"};
      g.pass = check_named(cut, "localization_max_rel_error") && cut_time < 30.0;
      g.seconds = cut_time;
      char buf[128];
      std::snprintf(buf, sizeof buf, "max relative off-block energy %.3g",
                    check_value(cut, "localization_max_rel_error"));
      g.detail = buf;
      gates.push_back(g);
    }
    {
      Gate g{3, "Bony decomposition identity over 50 seeded pairs"};
      g.pass = check_named(cut, "bony_max_rel_error");
      g.seconds = cut_time;
      char buf[128];
      std::snprintf(buf, sizeof buf, "max relative error %.3g",
                    check_value(cut, "bony_max_rel_error"));
      g.detail = buf;
      gates.push_back(g);
    }
    print_gate(gates[0]);
    print_gate(gates[1]);
    print_gate(gates[2]);

    // Criterion 4: series norm bound and lower-bound ratios.
    t0 = now_seconds();
    SuiteConfig l31_cfg;
    RunReport l31 = run_lemma31(l31_cfg);
    {
      Gate g{4, "series norm bound and flat lower-bound ratios (n=4..10)"};
      g.pass = l31.pass;
      g.seconds = now_seconds() - t0;
      g.pass = g.pass && g.seconds < 60.0;
      gates.push_back(g);
      print_gate(g);
    }

    // Criterion 5: time-scaling exponents, both regimes.
    t0 = now_seconds();
    SuiteConfig sc_cfg;
    sc_cfg.scaling_case = "high";
    RunReport sc_hi = run_error_scaling(sc_cfg);
    sc_cfg.scaling_case = "low";
    RunReport sc_lo = run_error_scaling(sc_cfg);
    {
      Gate g{5, "flow-error scaling slopes in both parameter regimes"};
      g.seconds = now_seconds() - t0;
      g.pass = sc_hi.pass && sc_lo.pass && g.seconds < 1200.0;
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "case1 slopes %.3f/%.3f, case2 slope %.3f",
                    sc_hi.fits["distance_slope"].get<double>(),
                    sc_hi.fits["remainder_slope"].get<double>(),
                    sc_lo.fits["remainder_slope"].get<double>());
      g.detail = buf;
      gates.push_back(g);
      print_gate(g);
    }

    // Criterion 6: quotient sweep for the quadratic model.
    t0 = now_seconds();
    SuiteConfig ho_cfg;
    RunReport ho_ch = run_holder_sweep(ho_cfg);
    {
      Gate g{6, "quotient growth along the schedule, quadratic model"};
      g.seconds = now_seconds() - t0;
      g.pass = ho_ch.pass && g.seconds < 1800.0;
      char buf[160];
      std::snprintf(buf, sizeof buf, "growth ratio %.3f, c_hat %.3g",
                    ho_ch.fits["growth_ratio"].get<double>(),
                    ho_ch.fits["c_hat"].get<double>());
      g.detail = buf;
      gates.push_back(g);
      print_gate(g);
    }

    // Criterion 7: quotient sweep for the cubic model.
    t0 = now_seconds();
    SuiteConfig no_cfg;
    no_cfg.model = "novikov";
    RunReport ho_no = run_holder_sweep(no_cfg);
    {
      Gate g{7, "quotient growth along the schedule, cubic model"};
      g.seconds = now_seconds() - t0;
      g.pass = check_named(ho_no, "quotient_strictly_increasing") &&
               check_named(ho_no, "lower_bound_rows_positive") &&
               check_named(ho_no, "h1_drift") && g.seconds < 1800.0;
      char buf[160];
      std::snprintf(buf, sizeof buf, "growth ratio %.3f",
                    ho_no.fits["growth_ratio"].get<double>());
      g.detail = buf;
      gates.push_back(g);
      print_gate(g);
    }

    // Criteria 8-9: solver gates and inequality ratio suites.
    t0 = now_seconds();
    SuiteConfig inv_cfg;
    RunReport inv = run_invariants_suite(inv_cfg);
    const double inv_time = now_seconds() - t0;
    {
      Gate g{8, "solver order, conservation, and refinement gates"};
      g.seconds = inv_time;
      g.pass = check_named(inv, "rk4_temporal_order") &&
               check_named(inv, "h1_drift") &&
               check_named(inv, "mean_conservation") &&
               check_named(inv, "besov_norm_refinement") &&
               check_named(inv, "holder_quotient_refinement") &&
               check_named(sc_hi, "h1_drift") && check_named(sc_lo, "h1_drift") &&
               check_named(ho_ch, "h1_drift") && check_named(ho_no, "h1_drift");
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "rk4 order %.3f, refinement rel %.3g / %.3g",
                    inv.fits["rk4_order"].get<double>(),
                    inv.fits["besov_norm_refinement_rel"].get<double>(),
                    inv.fits["holder_quotient_refinement_rel"].get<double>());
      g.detail = buf;
      gates.push_back(g);
      print_gate(g);
    }
    {
      Gate g{9, "inequality ratio suites under refinement"};
      g.seconds = inv_time;
      g.pass = check_named(inv, "lemma24_interpolation_ratio") &&
               check_named(inv, "lemma22_refinement_growth") &&
               check_named(inv, "lemma23_refinement_growth") &&
               check_named(inv, "lemma26_refinement_growth") &&
               check_named(inv, "remark25_refinement_growth");
      char buf[128];
      std::snprintf(buf, sizeof buf, "max interpolation ratio %.12f",
                    inv.fits["lemma24_max"].get<double>());
      g.detail = buf;
      gates.push_back(g);
      print_gate(g);
    }
  } catch (const std::exception& ex) {
    std::printf("[FAIL] acceptance aborted: %s\n", ex.what());
    return 1;
  }

  for (const auto& g : gates) all_pass = all_pass && g.pass;
  std::printf("%s\n", all_pass ? "ALL CRITERIA PASSED" : "ACCEPTANCE FAILED");
  return all_pass ? 0 : 1;
}
