#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace pba {

/// Numeric knobs shared by the spectral, structure and special layers.
struct Tolerances {
  double pf_residual = 1e-12;       // power iteration stops at |Mv - lambda v| < this * lambda
  std::size_t max_iterations = 1'000'000;
  double projector = 1e-12;         // successive limit iterates
  double subspace = 1e-9;           // relative Gram-Schmidt threshold
  double character = 1e-6;          // max-norm distance between equal characters
  double nonzero = 1e-8;            // an operator counts as nonzero above this
  double idempotent = 1e-8;         // |e^2 - e| in max norm
  double positivity = 1e-10;        // smallest coefficient of a 1-normalised idempotent
  double cone = 1e-7;               // slack in the kernel cone feasibility problem
  double eigenvalue = 1e-7;         // lambda must appear in the top's spectrum this closely
};

struct Caps {
  std::size_t max_dim = 400;        // validate
  std::size_t max_monoid = 1000;    // monoid closure
  std::size_t max_weyl_order = 400;
  std::size_t max_rank = 4;
};

/// Exact: decide rational questions (kernel cone, certificates) exactly
/// whenever the data is rational. Float: always use the floating path.
enum class Precision { Exact, Float };

/// Settings of one CLI run.
struct RunConfig {
  Tolerances tol;
  Caps caps;
  std::uint64_t seed = 20240607;
  std::size_t samples = 5;          // c-vectors per cell, the all-ones vector included
  std::size_t jobs = 1;
  Precision precision = Precision::Exact;
  std::string output;               // empty: standard output
};

}  // namespace pba
