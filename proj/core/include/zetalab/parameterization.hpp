#ifndef ZETALAB_PARAMETERIZATION_HPP
#define ZETALAB_PARAMETERIZATION_HPP

#include <optional>

#include <zetalab/common.hpp>
#include <zetalab/power_sums.hpp>

namespace zetalab::param {

using power_sums::ComplexPair;

/// Which reconstruction route: the cosine/real-component form (A1) or the
/// sine/imaginary-component form (A2).
enum class Branch { Cosine, Sine };

/// Exponent components of s = A1 + i B1 (or A2 + i B1) at a given x.
/// A component is absent when its log-quotient guard fired.
struct ExponentParts {
  double B1 = 0.0;
  std::optional<double> A1;
  std::optional<double> A2;
  double x = 0.0;
  bool quadrant_mismatch = false;  // a1 + (x-1)d1 <= 0 at this x
};

/// (1/ln x) arctan((a2+(x-1)d2)/(a1+(x-1)d1)), principal branch.
/// Throws DomainGuard when a1+(x-1)d1 = 0, InvalidInput when x <= 0 or x = 1.
double compute_B1(double x, const ComplexPair& p);

/// (1/ln x) ln((a1+(x-1)d1)/cos(B1 ln x)); quotient must be positive.
double compute_A1(double x, const ComplexPair& p, double B1);

/// (1/ln x) ln((a2+(x-1)d2)/sin(B1 ln x)); quotient must be positive.
double compute_A2(double x, const ComplexPair& p, double B1);

/// Computes B1 and whichever of A1/A2 is defined at this x.
ExponentParts exponent_parts(double x, const ComplexPair& p);

/// The printed product form of x^s. Equals a + (x-1)d whenever the branch
/// precondition holds with a1 + (x-1)d1 > 0; evaluated as printed, with no
/// quadrant correction.
cplx reconstruct_xs(double x, const ComplexPair& p,
                    Branch branch = Branch::Cosine);

/// The printed product form of x^(-s); reciprocal of reconstruct_xs on the
/// common domain.
cplx reconstruct_x_negs(double x, const ComplexPair& p,
                        Branch branch = Branch::Cosine);

/// |x^(-s)| = |cos(arctan(ratio)) / (a1 + (x-1)d1)|.
double tail_decay_magnitude(double x, const ComplexPair& p);

/// Progression parameters recovered from a target exponent gamma and two
/// integer anchors k, m.
struct ParamSolution {
  ComplexPair params;
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  long k = 2;
  long m = 3;
  bool degenerate = false;  // a zero component of d
};

/// Solves (a1, a2, d1, d2) from
///   d1 = (cos(g2 ln k) k^g1 - cos(g2 ln m) m^g1) / (k - m)
///   a1 = cos(g2 ln k) k^g1 - (k-1) d1
/// and the sine analogues. The anchor consistency
///   a1 + (k-1)d1 = cos(g2 ln k) k^g1  (and the other three)
/// is asserted to 1e-12 relative at both anchors.
ParamSolution solve_parameters(double gamma1, double gamma2, long k, long m);

}  // namespace zetalab::param

#endif
