#pragma once

// The full verification suite: each numbered criterion exercises one slice of
// the library at its stated tolerance and reports pass/fail with the computed
// and expected values.

#include "hmf/report.hpp"

namespace hmf {

struct VerifyConfig {
  long relation_bound = 25;     // kernel search
  long zero_series_bound = 30;  // relation evaluated to zero
  long diagonal_order = 40;     // restriction identities, in q-powers
  long expansion_bound = 35;    // covers every printed expansion coefficient
  long octic_bound_lo = 60;
  long octic_bound_hi = 80;
  int digits = 50;
  double cluster_tol = 1e-12;
  int jobs = 1;
};

Report verify_all(const VerifyConfig& cfg = {});

// individual criterion groups, exposed for the CLI subcommands
void verify_trace_tables(Report& r);
void verify_character_identity(Report& r);
void verify_expansions(Report& r, long bound);
void verify_eigenvalue_property(Report& r, long bound);
void verify_diagonal_identities(Report& r, long q_order);
void verify_representation(Report& r);
void verify_relation(Report& r, long bound, long zero_bound);
void verify_octic(Report& r, long t_lo, long t_hi, int digits, double cluster_tol,
                  int jobs = 1);
void verify_toric(Report& r);
void verify_dimensions(Report& r);
void verify_sections(Report& r, long bound);
void verify_cusp_count(Report& r);

}  // namespace hmf
