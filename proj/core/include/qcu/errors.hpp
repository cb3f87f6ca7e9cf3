/**
 * This code is part of qcu.
 *
 * (C) Copyright qcu contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#ifndef QCU_ERRORS_HPP_
#define QCU_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qcu {

/// Invalid input: wrong shape, out-of-range value, malformed serialized data.
/// The command-line front end maps this to exit status 1.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to produce a usable result.
/// The command-line front end maps this to exit status 2.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// No restart of the constrained optimizer reached feasibility; carries the
/// best constraint violation seen so callers can report how close it got.
class NoFeasiblePointError : public NumericalError {
public:
  NoFeasiblePointError(const std::string& what, double best_residual)
      : NumericalError(what), best_residual_(best_residual) {}

  double best_residual() const noexcept { return best_residual_; }

private:
  double best_residual_;
};

} // namespace qcu

#endif // QCU_ERRORS_HPP_
