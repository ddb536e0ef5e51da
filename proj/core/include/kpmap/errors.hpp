/**
 * This code is part of kpmap.
 *
 * (C) Copyright kpmap developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 *
 * Any modifications or derivative works of this code must retain this
 * copyright notice, and modified files need to carry a notice indicating
 * that they have been altered from the originals.
 */

#ifndef KPMAP_ERRORS_HPP
#define KPMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kpmap {

// Base class for all kpmap errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
public:
  using Error::Error;
};

class ZeroVector : public Error {
public:
  using Error::Error;
};

class EmptyInput : public Error {
public:
  using Error::Error;
};

class BadRank : public Error {
public:
  using Error::Error;
};

class BadStart : public Error {
public:
  using Error::Error;
};

class NotUnitary : public Error {
public:
  using Error::Error;
};

class MalformedSpec : public Error {
public:
  using Error::Error;
};

class UnknownZooName : public Error {
public:
  using Error::Error;
};

class NotHermiticityPreserving : public Error {
public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
public:
  using Error::Error;
};

// Raised by Kraus extraction when the Choi matrix has an eigenvalue below
// the admissible tolerance; carries the offending eigenvalue.
class NotCompletelyPositive : public Error {
public:
  NotCompletelyPositive(const std::string &what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

private:
  double eigenvalue_;
};

} // namespace kpmap

#endif
