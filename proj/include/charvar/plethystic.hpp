#pragma once

/**
 * @file plethystic.hpp
 * @brief Adams operator, its Moebius inverse, and the plethystic exp/log.
 *
 * On monomials the Adams operator is
 *
 *     Psi(x^i t^k)      = sum_{l>=1} x^{l i} t^{l k} / l
 *     Psi^{-1}(x^i t^k) = sum_{l>=1} mu(l)/l x^{l i} t^{l k}
 *
 * extended linearly. PExp(f) = exp(Psi(f)) and PLog(f) = Psi^{-1}(log f).
 * Everything is truncated at the order of the input series; only l with
 * l*k <= N contributes.
 */

#include "charvar/series.hpp"

namespace charvar {

/// Requires a zero constant term (NonZeroConstantTerm).
TruncSeries adams(const TruncSeries& f);
/// Requires a zero constant term (NonZeroConstantTerm).
TruncSeries adams_inverse(const TruncSeries& f);

/// exp(Psi(f)); f must have zero constant term.
TruncSeries pexp(const TruncSeries& f);

/// Psi^{-1}(log f); f must have constant term 1. This is the production path.
TruncSeries plog(const TruncSeries& f);

/// PLog by the partition-sum closed form
///
///   [t^n] = sum_{d|n} sum_{[k] in P_d} mu(n/d)/(n/d) (-1)^{|k|-1}/|k|
///           * multinomial(|k|; k_1..k_d) * prod_j f_j(x^{n/d})^{k_j}
///
/// Independent of series_log and adams_inverse; kept as a cross-check.
TruncSeries plog_closed(const TruncSeries& f);

}  // namespace charvar
