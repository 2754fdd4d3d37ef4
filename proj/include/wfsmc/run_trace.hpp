#ifndef WFSMC_RUN_TRACE_HPP
#define WFSMC_RUN_TRACE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wfsmc {

/// One sampler iteration, as recorded in a RunTrace.
///
/// `ess` is the effective sample size of the weights produced by this
/// iteration's reweighting, i.e. the ESS the next resampling will see.
/// Variance fields hold NaN where an estimator does not apply (standard SMC,
/// or iterations of the growing sampler without a rejuvenation).
struct IterationRecord {
  int t = 0;
  double exponent = 0.0;           // tempering exponent or level index
  double ess = 0.0;
  double log_ell = 0.0;            // log of the per-step mean weight
  double log_l = 0.0;              // cumulative log normalizing constant
  int p_t = 1;                     // chain length this iteration (1 = no chains)
  double accept_rate = 0.0;        // NaN when no accept/reject move ran
  double var_tilde = 0.0;          // M-chain estimate of v_inf(M_t, phi), first estimand
  double var_hat = 0.0;            // M-chain estimate of V_t(phi), first estimand
  double var_log_l_partial = 0.0;  // running sum over s<=t of v_inf(M_s, Gbar_s)/N_s
  std::int64_t kernel_steps = 0;
};

/// Full record of one sampler run: per-iteration diagnostics plus final
/// estimates. Bit-identical across runs with the same configuration and
/// seed, regardless of worker count.
struct RunTrace {
  std::vector<IterationRecord> iterations;

  double final_log_l = 0.0;
  std::map<std::string, double> estimands;            // Q_T(phi) per named function
  std::map<std::string, double> variances;            // asymptotic V_T(phi) estimates
  double var_log_l = 0.0;                             // estimated Var(log L_T)
  std::int64_t total_kernel_steps = 0;
  std::int64_t total_potential_evals = 0;
  double wall_ms = 0.0;
  std::vector<std::string> warnings;
};

}  // namespace wfsmc

#endif
