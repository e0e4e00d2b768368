#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wreathlab/mat.hpp"

namespace wreathlab {

/// Raised when an operation whose precondition is a clean report is run on
/// data that fails its checks.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Location and values of the first entry at which a checked identity
/// breaks. domain_index is the column index of the failing input basis
/// vector, decoded along the declared tensor factors of the domain; row is
/// the output coordinate. Re-evaluating the named identity at these indices
/// reproduces lhs != rhs.
struct Witness {
  std::vector<std::size_t> domain_index;
  std::size_t row = 0;
  Scalar lhs, rhs;
};

struct CheckResult {
  std::string name;  // stable identity id, e.g. "wdl/mult-A"
  bool pass = true;
  std::optional<Witness> witness;
};

class Report {
 public:
  explicit Report(std::string subject = "") : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  void add_pass(const std::string& name) { checks_.push_back({name, true, std::nullopt}); }
  void add_fail(const std::string& name, Witness w) {
    checks_.push_back({name, false, std::move(w)});
  }

  /// Records whether lhs == rhs; on failure the witness points at the first
  /// differing entry. domain_factors, when given, are the tensor factor
  /// dimensions of the common domain, used to decode the failing column.
  void check_equal(const std::string& name, const Mat& lhs, const Mat& rhs,
                   const std::vector<std::size_t>& domain_factors = {}) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
      throw DimensionMismatch("check " + name + ": " + lhs.shape() + " vs " + rhs.shape());
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      for (std::size_t i = 0; i < lhs.rows(); ++i)
        if (lhs.at(i, j) != rhs.at(i, j)) {
          Witness w;
          w.domain_index = decode(j, domain_factors);
          w.row = i;
          w.lhs = lhs.at(i, j);
          w.rhs = rhs.at(i, j);
          add_fail(name, std::move(w));
          return;
        }
    add_pass(name);
  }

  void check_true(const std::string& name, bool cond) {
    if (cond)
      add_pass(name);
    else
      checks_.push_back({name, false, std::nullopt});
  }

  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& c : other.checks_) {
      checks_.push_back(c);
      checks_.back().name = prefix + c.name;
    }
  }

  /// Throws CheckFailed naming the first failed check.
  void require(const std::string& context) const {
    for (const auto& c : checks_)
      if (!c.pass) throw CheckFailed(context + ": check failed: " + c.name);
  }

  std::string summary() const {
    std::string out;
    for (const auto& c : checks_) {
      out += (c.pass ? "pass  " : "FAIL  ") + c.name;
      if (c.witness) {
        out += "  [at row " + std::to_string(c.witness->row) + ", input (";
        for (std::size_t k = 0; k < c.witness->domain_index.size(); ++k)
          out += (k ? "," : "") + std::to_string(c.witness->domain_index[k]);
        out += "): " + scalar_to_string(c.witness->lhs) + " != " +
               scalar_to_string(c.witness->rhs) + "]";
      }
      out += "\n";
    }
    return out;
  }

 private:
  static std::vector<std::size_t> decode(std::size_t col,
                                         const std::vector<std::size_t>& factors) {
    if (factors.empty()) return {col};
    std::vector<std::size_t> idx(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      idx[k] = col % factors[k];
      col /= factors[k];
    }
    return idx;
  }

  std::string subject_;
  std::vector<CheckResult> checks_;
};

}  // namespace wreathlab
