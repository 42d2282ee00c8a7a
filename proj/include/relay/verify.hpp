#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "relay/search.hpp"

namespace relay {

/// Outcome of one executable check of a theorem, lemma, or proof-step
/// inequality. worst_slack is the most-violating signed margin in bits;
/// the check passes iff worst_slack >= -tolerance.
struct CheckResult {
  std::string name;
  bool passed = false;
  double worst_slack = 0.0;
  double tolerance = 0.0;
  std::string witness;     // parameter tuple achieving worst_slack
  long draws = 0;          // total random draws, when applicable
  long premise_hits = 0;   // draws satisfying the check's premise
};

// Correlation multiplies along a Gaussian Markov chain: constructed-chain
// corr(X,Z) equals phi1*phi2 on a grid over [-1,1] with the given step.
CheckResult check_lemma1(double grid_step = 0.05);

// If I(X1;Y2|X2) >= I(X1;Y3,Y2hat|X2) then the same ordering holds
// conditioned on U, on premise-satisfying random draws.
CheckResult check_lemma2(long n_draws, std::uint64_t seed);

// If I(X1;Y2|X2) <= I(X1;Y2hat,Y3|X2) then I(U;Y2|X2) <= I(U;Y2hat,Y3|X2);
// also checks the gamma = 1 equality cases.
CheckResult check_lemma3(long n_draws, std::uint64_t seed);

// Conditioning on U cannot shrink the compression penalty:
// I(Y2hat;Y2|X1,X2,U,Y3) >= I(Y2hat;Y2|X1,X2,Y3) at delta = delta', via oracle.
CheckResult check_penalty_chain(long n_draws, std::uint64_t seed);

// Core superposition inequality, all terms via oracle:
// I(X1;Y3,Y2hat|X2,U) + I(U;Y2|X2,V) <= max{I(X1;Y2|X2), I(X1;Y2hat,Y3|X2)}.
// Runs on infeasible delta' draws too (the proof does not need the relay-link
// constraint).
CheckResult check_main_inequality(long n_draws, std::uint64_t seed);

// |R_SF - max(R_DF, R_CF)| <= 1e-4 bits at each listed distance.
CheckResult check_theorem2(const std::vector<double>& d_list,
                           const SearchConfig& cfg);

// R_BDF <= R_DF + 1e-9 at each listed distance.
CheckResult check_bdf_reduction(const std::vector<double>& d_list,
                                const SearchConfig& cfg);

// Distance-regime behavior with P1=P2=5, N1=N2=1: DF near-optimal at d=0.1,
// DF dominant but below the bound at d=0.4, CF dominant at d=0.8, CF near
// the bound at d=0.999, and the DF/CF crossover inside (0.5, 0.7).
CheckResult check_regimes(const SearchConfig& cfg);

// Runs the named suite ("all", "lemma1", "lemma2", "lemma3", "penalty",
// "main", "theorem2", "bdf", "regimes"), printing one line per check:
// name, PASS/FAIL, worst slack, witness. Throws std::invalid_argument for an
// unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed,
                                   const SearchConfig& cfg, std::ostream& out);

}  // namespace relay
