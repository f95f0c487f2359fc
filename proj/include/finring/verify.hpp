// Copyright 2026 The finring Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Instance-level checks of the norm bounds, identities and constructions,
// plus the E.E experiment, dot-product graph analysis and the Salem scan.

#ifndef FINRING_VERIFY_HPP_
#define FINRING_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/harmonic.hpp"
#include "finring/incidence.hpp"
#include "finring/ring.hpp"
#include "finring/ring_spec.hpp"
#include "finring/spectral.hpp"

namespace finring {

enum class Direction { at_most, at_least, equal };

std::string to_string(Direction direction);

struct SubCheck {
  std::string name;
  double observed = 0.0;
  double bound = 0.0;
  bool passed = false;
};

struct TheoremCheck {
  std::string id;
  std::string instance;  // "<ring> d=<d> t=<label>"
  Direction direction = Direction::at_most;
  double claimed_bound = 0.0;
  double observed = 0.0;
  double margin = 0.0;  // >= -tolerance iff the inequality holds
  double tolerance = 1e-6;
  bool passed = false;
  std::vector<SubCheck> sub_checks;
  std::vector<std::string> notes;
};

// Fills margin and passed from direction, bound, observed and tolerance,
// and folds in the sub-checks.
void settle(TheoremCheck& check);

struct VerifyOptions {
  SpectralOptions spectral;
  std::uint64_t seed = 42;
  std::size_t trials = 200;
};

std::string instance_string(const RingTable& ring, std::size_t d, Elem t);

// salem(gf(q), d, t) <= sqrt(2).
TheoremCheck check_field_upper(std::uint32_t q, std::size_t d, std::optional<Elem> t = {},
                               const VerifyOptions& options = {});

// Witness-character ratio >= q^{(n^2-n)(d-1)/2} / 2, with ||chi|| and |S|
// cross-checks.
TheoremCheck check_matrix_lower(std::uint32_t n, std::uint32_t q, std::size_t d,
                                const VerifyOptions& options = {});

// ||A chi_0|| / ||chi_0|| >= |R^x| |R|^{d-2}; for gf(2) also the exact value.
TheoremCheck check_trivial_char(const RingSpec& spec, std::size_t d, std::optional<Elem> t = {});

// Exact ratio for the trivial character, from integer row sizes.
double trivial_char_ratio(const IncidenceOperator& op);

// ||A_t chi|| = ||A_t1 chi1|| ||A_t2 chi2|| over prod(spec1, spec2).
TheoremCheck check_product_factorization(const RingSpec& spec1, const RingSpec& spec2,
                                         std::size_t d, Elem t1, Elem t2,
                                         const std::vector<Elem>& dual1,
                                         const std::vector<Elem>& dual2);

// Pullback ratios against |J|^{d-1} times quotient ratios, plus the
// congruence-lifting and kernel-count identities. ArgumentError when J = 0.
TheoremCheck check_jacobson_amplification(const RingSpec& spec, std::size_t d,
                                          std::optional<Elem> t = {},
                                          const VerifyOptions& options = {});

// Character from the semisimple construction reaches ratio >= 1/2.
TheoremCheck check_semisimple_lower(const RingSpec& spec, std::size_t d,
                                    std::optional<Elem> t = {});

// max relative deviation of norm_W over all units <= 1e-8.
TheoremCheck check_unit_independence(const RingSpec& spec, std::size_t d,
                                     const VerifyOptions& options = {});

// count_incidences against the field closed form, or >= |R|^{2d-1}/4 for
// matrix rings.
TheoremCheck check_incidence_count(const RingSpec& spec, std::size_t d);

// Dense SVD and power iteration agree to 1e-8 relative on W and on V.
TheoremCheck check_solver_agreement(const RingSpec& spec, std::size_t d,
                                    const VerifyOptions& options = {});

// nu(t) through the operator against a double loop, `sets` random sets.
TheoremCheck check_nu_oracle(const RingSpec& spec, std::size_t d, std::size_t sets = 50,
                             std::uint64_t seed = 42);

// R/J is a field F_q and J != 0 implies q divides |J|.
TheoremCheck check_nakayama(const RingSpec& spec);

TheoremCheck check_odd_subsets(std::uint32_t k);

// Number of odd-size subsets of a k-set, by enumeration for k <= 20.
std::uint64_t odd_subset_count(std::uint32_t k);

struct EdotEReport {
  std::string ring;
  std::size_t d = 0;
  std::string t_label;
  double measured_salem = 0.0;
  std::uint64_t incidences = 0;
  double threshold = 0.0;
  std::optional<double> corollary_threshold;  // closed-form constant, fields and matrix rings
  bool corollary_vacuous = false;
  std::size_t trials = 0;
  std::size_t set_size = 0;
  std::size_t failures = 0;
  std::uint64_t seed = 0;
  bool vacuous = false;
  // Smallest size at which every probe trial contained t in E.E.
  std::optional<std::size_t> minimal_working_size;
};

EdotEReport edot_experiment(const RingSpec& spec, std::size_t d, std::optional<Elem> t,
                            std::size_t trials, std::uint64_t seed,
                            const VerifyOptions& options = {});

// True when some x, y in the set have y.x = t.
bool contains_t(const IncidenceOperator& op, std::span<const std::uint32_t> set);

// E = I^d for the smallest proper nonzero principal left ideal I. Passes iff
// t is not in E.E; also reports the size bound with q read as |R|.
TheoremCheck check_ideal_obstruction(const RingSpec& spec, std::size_t d,
                                     std::optional<Elem> t = {},
                                     const VerifyOptions& options = {});

TheoremCheck check_edot(const EdotEReport& report);

struct GraphReport {
  std::string ring;
  std::size_t d = 0;
  std::string t_label;
  std::size_t vertices = 0;
  std::optional<std::size_t> regular_degree;
  std::size_t components = 0;
  std::size_t big_component_size = 0;
  bool connected = false;
  bool connectivity_asserted = false;
  double laplacian_gap = 0.0;  // smallest nonzero Laplacian eigenvalue
  double laplacian_bound = 0.0;
  double adjacency_min = 0.0;
  double adjacency_max = 0.0;
};

// Graph on the nonzero vectors of F_q^d, x ~ y iff y.x = t (self-loops
// kept). ArgumentError for non-fields.
GraphReport graph_analysis(std::uint32_t q, std::size_t d, std::optional<Elem> t = {});
TheoremCheck check_graph(const GraphReport& report);

struct ScanRow {
  std::string spec;
  std::size_t size = 0;
  std::size_t radical_size = 0;
  std::string quotient_shape;
  std::size_t d = 0;
  std::string t_label;
  std::optional<double> salem;
  std::optional<double> norm_W;
  std::string method;
  double residual = 0.0;
  bool converged = false;
  std::optional<double> witness_lower;
  std::string error;
};

// One row per ring at t = 1, sorted by size then spec string. Failures are
// recorded in the row.
std::vector<ScanRow> scan_salem(const std::vector<RingSpec>& family, std::size_t d,
                                const VerifyOptions& options = {});

// Best lower bound on the Salem number from explicit characters: Jacobson
// pullbacks when J != 0, the semisimple construction otherwise.
double witness_lower_bound(const RingPtr& ring, std::size_t d, Elem t);

// Rings whose d=2 Salem number is asserted to exceed sqrt(2).
std::vector<RingSpec> separation_family();

// Every check that applies to one ring at dimension d, at t = 1.
std::vector<TheoremCheck> run_ring_checks(const RingSpec& spec, std::size_t d,
                                          const VerifyOptions& options = {});

std::vector<std::string> suite_names();
// "all" runs every suite. ArgumentError for unknown names.
std::vector<TheoremCheck> run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace finring

#endif  // FINRING_VERIFY_HPP_
