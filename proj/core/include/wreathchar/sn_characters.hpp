// SPDX-License-Identifier: Apache-2.0
//
// Symmetric-group character values by the Murnaghan-Nakayama rule,
// memoized.  These are the scalar ingredient of every W(r,n) table row.

#ifndef WREATHCHAR_SN_CHARACTERS_HPP
#define WREATHCHAR_SN_CHARACTERS_HPP

#include <gmpxx.h>

#include "wreathchar/partitions.hpp"

namespace wreathchar {

/// chi^lambda(mu) for the symmetric group S_n, |lambda| = |mu| = n.
/// Thread-safe; results are cached across calls.
mpz_class sn_character(const Partition& lambda, const Partition& mu);

}  // namespace wreathchar

#endif  // WREATHCHAR_SN_CHARACTERS_HPP
