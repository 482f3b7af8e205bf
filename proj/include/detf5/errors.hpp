#pragma once

#include <stdexcept>
#include <string>

namespace detf5 {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HomogeneityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptySupport : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class WrongCorank : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rows handed to the signature echelon were not in increasing signature order.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A run that is only guaranteed zero-reduction-free on generic input hit a
// reduction to zero. Carries the offending signature in printable form.
class NonGenericInstance : public std::runtime_error {
 public:
  NonGenericInstance(const std::string& what, std::string signature)
      : std::runtime_error(what), signature_(std::move(signature)) {}
  const std::string& signature() const noexcept { return signature_; }

 private:
  std::string signature_;
};

class OracleTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace detf5
