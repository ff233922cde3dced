// SPDX-License-Identifier: Apache-2.0

#ifndef WREATHCHAR_BUDGET_HPP
#define WREATHCHAR_BUDGET_HPP

#include <stdexcept>

namespace wreathchar {

/// Thrown by enumeration-heavy operations when the requested instance would
/// exceed the caller-supplied work budget.
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wreathchar

#endif  // WREATHCHAR_BUDGET_HPP
