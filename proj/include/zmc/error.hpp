/*
 * (C) Copyright 2026 zmc authors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace zmc {

enum class Errc {
  ParseError,
  UnboundParameter,
  DivisionByZero,
  DegenerateGaussMap,
  IsotropyBroken,
  DegenerateMoebius,
  SingularChange,
  DegenerateMetric,
  SignatureMismatch,
  InvalidParameter,
  PathThroughPuncture,
  ToleranceNotMet,
  NotIsolatedPole,
  DegenerateFirstForm,
  GridMismatch,
  UnknownName,
  ParameterOutOfRange,
  IoError,
  Internal
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace zmc
