#pragma once

#include "mqlat/bigfloat.hpp"

namespace mqlat {

/// J_order(x) for integer order >= 0 and real x >= 0, with relative error at
/// most 2^-(precision_bits-12).  Ascending series where it is cancellation
/// free; elsewhere backward recurrence with the even-order normalization,
/// validated by re-running at a deeper start index and higher precision until
/// two runs agree.  Deterministic for fixed inputs.
/// Errors: DomainError (order > 10^6, x < 0, x > 10^7).
Real bessel_j(unsigned long order, const Real& x, mpfr_prec_t precision_bits);

}  // namespace mqlat
