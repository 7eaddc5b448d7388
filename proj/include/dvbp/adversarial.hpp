#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dvbp/model.hpp"

namespace dvbp {

// Lower-bound constructions against Any Fit packing:
//   AnyFitLB  - forces every Any Fit policy to keep d*k bins alive for ~mu+1.
//   NextFitLB - forces Next Fit into 1+(k-1)d bins, each alive for mu.
//   MtfLB     - one-dimensional; forces Move To Front into 2n bins alive for mu.
enum class Family { AnyFitLB, NextFitLB, MtfLB };

// CLI spellings: anyfit, nextfit, mtf.
std::string_view family_name(Family family);
Family parse_family(std::string_view name);

struct AdversarialSpec {
    Family family = Family::AnyFitLB;
    int d = 1;
    int k = 1;  // n for MtfLB
    Scalar mu = 1;
    Scalar epsilon;
    Scalar epsilon_prime;
};

// Fixed parameter choices that satisfy every constraint of the family:
//   AnyFitLB:  eps = 1/(3 d^2 k), eps' = eps/3
//   NextFitLB: eps' = 1/(2 d k),  eps = 1/(8 d^2 k)
//   MtfLB:     (0, 0), unused
// Throws Constraint for an invalid (family, d, k).
std::pair<Scalar, Scalar> default_epsilons(Family family, int d, int k);

// Spec with default epsilons.
AdversarialSpec make_spec(Family family, int d, int k, const Scalar& mu);

// Every violated constraint, one message each. Empty means valid.
std::vector<std::string> validate(const AdversarialSpec& spec);

// R0 on [0, 1+eps') in index order at time 0, then the d*k R1 items on
// [1, mu+1). R0 outlives time 1 by eps' so that, with departures processed
// before arrivals, R1 still lands on the loaded bins.
Instance gen_anyfit_lb(const AdversarialSpec& spec);
// 2dk items at time 0: even items eps'*1 on [0, mu), odd items with
// 1/2 - d*eps in their group's dimension and eps elsewhere on [0, 1).
Instance gen_nextfit_lb(const AdversarialSpec& spec);
// 4n one-dimensional items at time 0: odd items 1/2 on [0, 1), even items
// 1/(2n) on [0, mu).
Instance gen_mtf_lb(int n, const Scalar& mu);

Instance generate(const AdversarialSpec& spec);

// Closed-form ratio lower bound at finite parameters:
//   AnyFitLB: dk(mu+1)/(k+mu+1);  NextFitLB: (1+(k-1)d)mu/(mu+k/2);
//   MtfLB: 2n mu/(mu+n).
Scalar predicted_ratio(const AdversarialSpec& spec);

// The ratio the generated instance is guaranteed to reach. Equals
// predicted_ratio except for AnyFitLB, where the R0 lifetime extension costs
// the offline packing up to d*k*eps' more: dk(mu+1)/(k+mu+1+dk*eps').
Scalar guaranteed_ratio(const AdversarialSpec& spec);

// Bins the victim policy is forced to open.
long long predicted_bins(const AdversarialSpec& spec);

// Cost of the construction's explicit offline packing of the generated
// instance; an upper bound on OPT. For AnyFitLB this is k+1+mu+k*eps', the
// k*eps' term coming from the R0 lifetime extension.
Scalar opt_upper_bound(const AdversarialSpec& spec);

}  // namespace dvbp
