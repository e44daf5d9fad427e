#pragma once

#include <string>
#include <vector>

#include "orlicz/harness.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/operators.hpp"

namespace orlicz {

/// Operator sources accepted by the CLI:
///   - "bergman": the built-in analytic operator
///   - "diag(a,b,...)": inline real diagonal
///   - anything else: path to a JSON file, either
///       {"rows": R, "cols": C, "re": [...], "im": [...]}   (row-major,
///       "im" optional, zeros assumed) or
///       {"diag_re": [...], "diag_im": [...]}               ("diag_im"
///       optional).
/// Throws std::invalid_argument with a source-specific message.
CompactOperator load_operator(const std::string& source);

/// Doubles rendered with 17 significant digits so JSON output round-trips
/// exactly; non-finite values become null.
std::string json_double(double v);
std::string json_escape(const std::string& s);

/// Insertion-ordered flat JSON object/array builders; all CLI output goes
/// through these so identical inputs yield byte-identical bytes.
class JsonObject {
public:
  void add(const std::string& key, double v);
  void add(const std::string& key, std::int64_t v);
  void add(const std::string& key, int v) { add(key, static_cast<std::int64_t>(v)); }
  void add(const std::string& key, bool v);
  void add(const std::string& key, const std::string& v);
  void add_null(const std::string& key);
  void add_raw(const std::string& key, const std::string& rendered);
  std::string str() const;

private:
  std::vector<std::string> parts_;
};

class JsonArray {
public:
  void add_raw(const std::string& rendered);
  void add(double v);
  std::string str() const;

private:
  std::vector<std::string> parts_;
};

std::string to_json(const NormResult& r);
std::string to_json(const ModularValue& m);
std::string to_json(const MembershipVerdict& v);
std::string to_json(const SingularSpectrum& sp);
std::string to_json(const CheckReport& r);
std::string to_json(const std::vector<CheckReport>& reports);

} // namespace orlicz
