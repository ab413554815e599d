#pragma once

namespace fracosc {

/// Gamma function on the real line. Relative error is a few ulp on (0, 50].
/// Throws DomainError at 0, -1, -2, ... and OverflowError when the result is
/// not representable.
[[nodiscard]] double gamma(double x);

struct MlParams {
  double alpha = 1.0;
  double beta = 1.0;
  double series_tol = 1e-15;
  int max_terms = 500;

  /// Throws InvalidArgument unless alpha, beta, series_tol > 0 and max_terms >= 1.
  void validate() const;
};

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(z) = sum_k z^k / Gamma(alpha k + beta),
/// summed directly until |term| < series_tol. Intended for moderate arguments
/// (|z| <= 10); throws ConvergenceError if max_terms is reached first.
[[nodiscard]] double mittag_leffler(const MlParams& params, double z);

/// Same, additionally reporting how many terms were summed.
[[nodiscard]] double mittag_leffler(const MlParams& params, double z, int& terms_used);

}  // namespace fracosc
