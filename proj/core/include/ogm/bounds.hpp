#pragma once

namespace ogm {

/// Closed-form worst-case guarantee, in the exact sequence-based form and
/// the looser rational relaxation. Both scale as L * R^2.
struct BoundPair {
  double tight = 0.0;
  double relaxed = 0.0;
};

/// Bound on f(y_n) - f* for the FGM gradient-step points:
/// L R^2 / (2 t_{n-1}^2), relaxed to 2 L R^2 / (n+1)^2.
BoundPair fgm_auxiliary_bound(int n, double lipschitz, double r);

/// Bound on f(x_n) - f* for the FGM primary iterates:
/// L R^2 / (2 t_n^2), relaxed to 2 L R^2 / (n+2)^2.
BoundPair fgm_primary_bound(int n, double lipschitz, double r);

/// Bound on f(x_N) - f* for OGM:
/// L R^2 / (2 theta_N^2), relaxed to L R^2 / ((N+1)(N+1+sqrt(2))).
BoundPair ogm_bound(int n, double lipschitz, double r);

/// Best possible gap any first-order scheme can guarantee after n
/// iterations: 3 L R^2 / (32 (n+1)^2). Valid as a lower bound only in
/// dimension d >= 2n+1.
double lower_bound(int n, double lipschitz, double r);

enum class MethodFamily { Fgm, Ogm };

/// Iterations guaranteeing f - f* <= eps:
/// ceil(sqrt(L/eps) * R) for OGM, ceil(sqrt(2L/eps) * R) for FGM.
int iterations_for_accuracy(double eps, double lipschitz, double r,
                            MethodFamily method);

}  // namespace ogm
