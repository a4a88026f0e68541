#pragma once

// Closed-form reverse-inequality constants. Removable singularities (a = b,
// p = 1) are answered by their continuity limits instead of evaluating 0/0.

namespace matineq {

/// (a+b)/(2 sqrt(ab)); requires a >= b > 0 (NonPositive otherwise). Exactly 1
/// when a and b agree to 1e-12 relative.
double kantorovich_factor(double a, double b);

/// Ky Fan's multiplicative constant for <h,Z^p h> <= K <h,Zh>^p on spectra in
/// [b, a]. Defined for p > 1 and p < 0; p in [0, 1] throws BadExponent unless
/// allow_unit_interval is set (the formula is still meaningful there).
double ky_fan_K(double a, double b, double p, bool allow_unit_interval = false);

/// Furuta's additive constant for <h,Z^p h> - <h,Zh>^p <= C; a >= b >= 0, p > 1.
double furuta_C(double a, double b, double p);

/// (p-q)(r-s)/4; requires p >= q and r >= s (BadOrder).
double gruss_bound(double p, double q, double r, double s);

/// (a-b)^2 / (4(a+b)); requires a >= b >= 0 and a + b > 0.
double additive_reverse_bound(double a, double b);

}  // namespace matineq
