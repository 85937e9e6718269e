#pragma once

#include <string>
#include <string_view>

#include "mudist/common.hpp"

namespace mudist {

enum class Indicator { HV, IGD, IGDPlus, R2, NR2, EpsPlus, SE, Delta, PD, DCI };

Indicator indicator_from_string(std::string_view name);
std::string to_string(Indicator kind);

// True for indicators where larger raw values are better.
bool is_maximizing(Indicator kind);

// Bundles an indicator with the auxiliary data its formula needs. Fields
// irrelevant to a kind are ignored; evaluate() reports which required field
// is missing.
struct IndicatorSpec {
    Indicator kind = Indicator::HV;
    Vector reference_point;  // q: HV, NR2
    Vector utopian;          // z*: R2 (empty -> origin)
    VectorSet ref_set;       // R: IGD, IGDPlus, EpsPlus, Delta, DCI
    VectorSet weights;       // W: R2, NR2
    double s_exponent = -1.0;  // SE; negative -> default m-1
    double pd_power = 0.1;     // PD quasi-norm power
    int dci_divisions = 19;    // DCI grid divisions per objective
};

// Lebesgue measure of the union of boxes [a, q]. Exact: recursive
// inclusion-exclusion over limit sets with nondominated pruning, plus a
// sort-and-sweep fast path for m = 2. Members not strictly dominating q
// contribute nothing.
double hypervolume(const VectorSet& set, const Vector& q);

double igd(const VectorSet& set, const VectorSet& ref);
double igd_plus(const VectorSet& set, const VectorSet& ref);
double eps_plus(const VectorSet& set, const VectorSet& ref);
double r2(const VectorSet& set, const VectorSet& weights, const Vector& utopian);
double nr2(const VectorSet& set, const VectorSet& weights, const Vector& q);

// Riesz s-energy; exact coincidence of two members yields the kInfValue
// sentinel.
double s_energy(const VectorSet& set, double s);

// Generalized spread against reference extremes (per-objective argmax of
// ref, first index on ties). 0/0 -> 0, x/0 -> kInfValue.
double spread_delta(const VectorSet& set, const VectorSet& ref);

// Greedy diversity tree: members are processed in stored order and each one
// links to its nearest not-yet-replicated member under the L_p quasi-norm
// (ties -> lowest index), accumulating the link dissimilarities. Order
// sensitive by construction.
double pd_greedy(const VectorSet& set, double p = 0.1);

// Reference oracle: the exact max-recursive diversity value, memoized over
// subsets. Guarded to mu <= 9.
double pd_exact(const VectorSet& set, double p = 0.1);

// Unary diversity comparison over a shared grid: grid spans the joint
// bounding box of set and ref expanded by half a cell width per side,
// divisions cells per objective, half-open cells. Mean over ref-occupied
// cells of 1 - gd^2/(m+1) (0 when gd >= sqrt(m+1)), gd the Euclidean
// grid-coordinate distance to the nearest set-occupied cell.
double dci_unary(const VectorSet& set, const VectorSet& ref, int divisions = 19);

// Raw indicator value.
double evaluate(const IndicatorSpec& spec, const VectorSet& set);

// Minimization-oriented value (raw negated for maximizing kinds).
double evaluate_oriented(const IndicatorSpec& spec, const VectorSet& set);

}  // namespace mudist
