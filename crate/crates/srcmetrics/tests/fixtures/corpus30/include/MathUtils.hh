#ifndef MATH_UTILS_HH
#define MATH_UTILS_HH

/* Small numeric helpers shared by the solids. */

#define SQUARE(x) ((x) * (x))

#define CLAMP(v, lo, hi) \
  ((v) < (lo) ? (lo)     \
              : (v) > (hi) ? (hi) : (v))

double SafeDivide(double num, double den);
double Interpolate(double a, double b, double t);
int RoundToInt(double v);

#endif
