#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dyn {

// Every domain failure derives from Error and carries a stable kind tag,
// which the CLI renders verbatim in its structured error output.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error("InvalidArgument", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

class IntegerFactorizationEffortExceeded : public Error {
 public:
  explicit IntegerFactorizationEffortExceeded(const std::string& integer)
      : Error("IntegerFactorizationEffortExceeded",
              "factorization effort exceeded for integer " + integer),
        integer_(integer) {}
  const std::string& integer() const noexcept { return integer_; }

 private:
  std::string integer_;
};

class NonPolynomialQuotient : public Error {
 public:
  explicit NonPolynomialQuotient(const std::string& what)
      : Error("NonPolynomialQuotient", what) {}
};

class InseparableDynatomic : public Error {
 public:
  explicit InseparableDynatomic(const std::string& what)
      : Error("InseparableDynatomic", what) {}
};

class DegenerateMap : public Error {
 public:
  explicit DegenerateMap(const std::string& what) : Error("DegenerateMap", what) {}
};

class NotOnC2 : public Error {
 public:
  explicit NotOnC2(const std::string& what) : Error("NotOnC2", what) {}
};

class ClosureCapExceeded : public Error {
 public:
  explicit ClosureCapExceeded(const std::string& what) : Error("ClosureCapExceeded", what) {}
};

class LatticeCapExceeded : public Error {
 public:
  explicit LatticeCapExceeded(const std::string& what) : Error("LatticeCapExceeded", what) {}
};

class AmbiguousLabel : public Error {
 public:
  AmbiguousLabel(std::string label, std::vector<std::size_t> classes)
      : Error("AmbiguousLabel", "label " + label + " matches more than one subgroup class"),
        label_(std::move(label)),
        classes_(std::move(classes)) {}
  const std::string& label() const noexcept { return label_; }
  const std::vector<std::size_t>& classes() const noexcept { return classes_; }

 private:
  std::string label_;
  std::vector<std::size_t> classes_;
};

class InsufficientGoodPrimes : public Error {
 public:
  explicit InsufficientGoodPrimes(const std::string& what)
      : Error("InsufficientGoodPrimes", what) {}
};

class ExcludedParameter : public Error {
 public:
  explicit ExcludedParameter(const std::string& what) : Error("ExcludedParameter", what) {}
};

}  // namespace dyn
