#pragma once

#include <string>
#include <string_view>

#include "mudist/common.hpp"

namespace mudist {

// Parametric front families, all expressed directly in normalized objective
// space (ideal 0 and nadir 1 per axis by construction).
enum class FrontKind {
    Linear,
    Concave,
    Convex,
    InvLinear,
    InvConcave,
    InvConvex,
    Disconnected,
    ConstrainedConcave,
    TwoDDtlz1,
    TwoDDtlz2,
    TwoDZdt1,
};

FrontKind front_kind_from_string(std::string_view name);
std::string to_string(FrontKind kind);

struct FrontShape {
    FrontKind kind = FrontKind::Concave;
    int m = 3;
    double constraint_radius = 0.4;  // ConstrainedConcave only
};

// Validates dimension constraints (2-D validation kinds require m = 2, all
// others m >= 2).
FrontShape make_front(FrontKind kind, int m, double constraint_radius = 0.4);

// A candidate set encoded as mu concatenated (m-1)-dimensional chunks in
// [0,1].
struct ThetaVector {
    Vector values;
    int mu = 0;
    int m = 0;
};

// Per-chunk stick-breaking map onto the unit simplex. Each chunk y of
// length m-1 yields b with b_1 = 1 - y_1^(1/(m-1)),
// b_j = (1 - sum_{k<j} b_k) * (1 - y_j^(1/(m-j))) for j = 2..m-1 and
// b_m the remainder. Uniform chunks give uniform simplex samples.
VectorSet translate(const Vector& theta, int mu, int m);

// Maps simplex vectors onto the front surface (not defined for
// Disconnected, which is parameterized directly; see map_disconnected).
Vector map_front_point(const FrontShape& front, const Vector& b);
VectorSet map_front(const FrontShape& front, const VectorSet& simplex);

// Disconnected kind: every chunk coordinate is rescaled proportionally to
// interval length onto the union of per-coordinate optimal intervals, the
// last objective follows from the front relation, and all coordinates are
// normalized to [0,1].
VectorSet map_disconnected(const FrontShape& front, const Vector& theta, int mu);

VectorSet decode(const FrontShape& front, const Vector& theta, int mu);
VectorSet decode(const FrontShape& front, const ThetaVector& theta);

// Largest constraint violation over the set; feasible iff <= 0. Zero for
// every kind without a constraint.
double constraint_value(const FrontShape& front, const VectorSet& set);
double constraint_value_point(const FrontShape& front, const Vector& a);

// Residual of the defining front relation at a normalized point (0 on the
// front); used by validation and tests.
double front_residual(const FrontShape& front, const Vector& a);

// Canonical extreme vectors of the front (images of the parameter-space
// corners), one per objective.
VectorSet front_extremes(const FrontShape& front);

// Per-coordinate optimal intervals [0, t1] and (t2, t3] of the disconnected
// family's coordinate trade-off k(x) = x(1 + sin(3 pi x)), plus the maximum
// of k over the union. Constants were pinned from a Newton-refined
// dense-sampling scan; scan_disconnected_intervals reproduces them.
struct DisconnectedIntervals {
    double t1;
    double t2;
    double t3;
    double k_max;
};

DisconnectedIntervals disconnected_intervals();
DisconnectedIntervals scan_disconnected_intervals(int samples);

}  // namespace mudist
