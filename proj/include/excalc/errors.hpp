#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace excalc {

namespace detail {
inline std::string format_point(const std::vector<double>& p) {
  std::ostringstream os;
  os.precision(6);
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ')';
  return os.str();
}
}  // namespace detail

/// An extensor whose determinant fell below the configured floor.
class SingularExtensor : public std::runtime_error {
 public:
  SingularExtensor(std::string what_extensor, double det, std::vector<double> point = {})
      : std::runtime_error(make_message(what_extensor, det, point)),
        det_(det),
        point_(std::move(point)) {}

  double det() const { return det_; }
  const std::vector<double>& point() const { return point_; }

 private:
  static std::string make_message(const std::string& w, double det, const std::vector<double>& p) {
    std::ostringstream os;
    os << "singular extensor " << w << ": det = " << det;
    if (!p.empty()) os << " at " << detail::format_point(p);
    return os.str();
  }
  double det_;
  std::vector<double> point_;
};

/// Eigenvalue signs of a metric disagree with its declared signature.
class SignatureChange : public std::runtime_error {
 public:
  SignatureChange(int declared_q, int found_q, std::vector<double> point = {})
      : std::runtime_error("signature change: declared q = " + std::to_string(declared_q) +
                           ", found q = " + std::to_string(found_q) +
                           (point.empty() ? std::string() : " at " + detail::format_point(point))),
        declared_q_(declared_q),
        found_q_(found_q) {}
  int declared_q() const { return declared_q_; }
  int found_q() const { return found_q_; }

 private:
  int declared_q_;
  int found_q_;
};

/// A connection whose derivative pair failed the metric-compatibility probes.
class IncompatibleConnection : public std::runtime_error {
 public:
  IncompatibleConnection(double residual, double tolerance)
      : std::runtime_error("connection is not metric compatible: probe residual " +
                           std::to_string(residual) + " > " + std::to_string(tolerance)),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class OutsideDomain : public std::runtime_error {
 public:
  explicit OutsideDomain(std::vector<double> point)
      : std::runtime_error("point " + detail::format_point(point) + " lies outside the field domain") {}
};

/// The gauge rotation onto the requested eta layout does not exist at this point.
class GaugeLayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation requested at a derivative depth the field cannot supply.
class JetDepthExceeded : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace excalc
