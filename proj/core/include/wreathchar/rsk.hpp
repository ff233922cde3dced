// SPDX-License-Identifier: Apache-2.0
//
// Colored row-insertion: the Robinson-Schensted correspondence for W(r,n).
// Reading the word left to right, w(j) is row-inserted into the component
// selected by its color c_j; the recording tableau T receives j in the box
// the insertion created.  The result is a bijection between W(r,n) and
// pairs of standard tableaux of a common multipartition shape.

#ifndef WREATHCHAR_RSK_HPP
#define WREATHCHAR_RSK_HPP

#include <utility>

#include "wreathchar/colored_perm.hpp"
#include "wreathchar/tableaux.hpp"

namespace wreathchar {

std::pair<StandardTableau, StandardTableau> rsk(const ColoredPermutation& w);

/// Inverts the correspondence.  Shapes must agree (std::invalid_argument
/// otherwise); r is taken from the number of shape components.
ColoredPermutation rsk_inverse(const StandardTableau& insertion,
                               const StandardTableau& recording);

}  // namespace wreathchar

#endif  // WREATHCHAR_RSK_HPP
