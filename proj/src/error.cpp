#include "fracosc/error.hpp"

#include <sstream>

namespace fracosc {

namespace {

std::string stability_message(double step, double threshold) {
  std::ostringstream os;
  os.precision(10);
  os << "stability condition violated: tau = " << step << " exceeds tau0 = " << threshold;
  return os.str();
}

std::string parse_message(std::size_t offset, const std::string& message) {
  return "syntax error at offset " + std::to_string(offset) + ": " + message;
}

}  // namespace

StabilityError::StabilityError(double step, double threshold)
    : Error(stability_message(step, threshold)), step_(step), threshold_(threshold) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error(parse_message(offset, message)), offset_(offset) {}

}  // namespace fracosc
