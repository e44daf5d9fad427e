#include "orlicz/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "orlicz/bergman.hpp"

namespace orlicz {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

DiagonalOperator parse_diag_literal(const std::string& source) {
  const std::string body = source.substr(5, source.size() - 6);
  std::vector<Complex> diag;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad diagonal literal '" + source +
                                  "': expected diag(a,b,...) with real entries");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size())
      throw std::invalid_argument("bad diagonal literal '" + source +
                                  "': expected diag(a,b,...) with real entries");
    diag.emplace_back(v, 0.0);
  }
  if (diag.empty())
    throw std::invalid_argument("bad diagonal literal '" + source +
                                "': needs at least one entry");
  return DiagonalOperator(std::move(diag));
}

std::vector<double> double_array(const nlohmann::json& j, const char* key) {
  std::vector<double> out;
  for (const auto& v : j.at(key)) out.push_back(v.get<double>());
  return out;
}

CompactOperator parse_operator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot read operator file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad matrix file '" + path + "': " + e.what());
  }
  try {
    if (j.contains("diag_re")) {
      const auto re = double_array(j, "diag_re");
      std::vector<double> im(re.size(), 0.0);
      if (j.contains("diag_im")) im = double_array(j, "diag_im");
      if (im.size() != re.size())
        throw std::invalid_argument("dimension mismatch: diag_im length differs from diag_re");
      std::vector<Complex> diag(re.size());
      for (std::size_t i = 0; i < re.size(); ++i) diag[i] = {re[i], im[i]};
      return DiagonalOperator(std::move(diag));
    }
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto re = double_array(j, "re");
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("im")) im = double_array(j, "im");
    if (rows <= 0 || cols <= 0 ||
        re.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) ||
        im.size() != re.size())
      throw std::invalid_argument(
          "dimension mismatch: entry arrays do not match rows*cols");
    std::vector<Complex> entries(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) entries[i] = {re[i], im[i]};
    return DenseOperator(rows, cols, entries);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument("bad matrix file '" + path + "': " + e.what());
  }
}

} // namespace

CompactOperator load_operator(const std::string& source) {
  const std::string low = lower(source);
  if (low == "bergman") return bergman_operator();
  if (low.rfind("diag(", 0) == 0 && low.back() == ')')
    return parse_diag_literal(source);
  return parse_operator_file(source);
}

std::string json_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void JsonObject::add(const std::string& key, double v) {
  parts_.push_back("\"" + json_escape(key) + "\":" + json_double(v));
}
void JsonObject::add(const std::string& key, std::int64_t v) {
  parts_.push_back("\"" + json_escape(key) + "\":" + std::to_string(v));
}
void JsonObject::add(const std::string& key, bool v) {
  parts_.push_back("\"" + json_escape(key) + "\":" + (v ? "true" : "false"));
}
void JsonObject::add(const std::string& key, const std::string& v) {
  parts_.push_back("\"" + json_escape(key) + "\":\"" + json_escape(v) + "\"");
}
void JsonObject::add_null(const std::string& key) {
  parts_.push_back("\"" + json_escape(key) + "\":null");
}
void JsonObject::add_raw(const std::string& key, const std::string& rendered) {
  parts_.push_back("\"" + json_escape(key) + "\":" + rendered);
}
std::string JsonObject::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += parts_[i];
  }
  out += "}";
  return out;
}

void JsonArray::add_raw(const std::string& rendered) { parts_.push_back(rendered); }
void JsonArray::add(double v) { parts_.push_back(json_double(v)); }
std::string JsonArray::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += parts_[i];
  }
  out += "]";
  return out;
}

std::string to_json(const NormResult& r) {
  JsonObject o;
  o.add("value", r.value);
  o.add("iterations", r.iterations);
  o.add("bracket_width", r.bracket_width);
  o.add("method", to_string(r.method));
  return o.str();
}

std::string to_json(const ModularValue& m) {
  JsonObject o;
  o.add("value", m.value);
  o.add("terms_used", m.terms_used);
  o.add("tail_bound", m.tail_bound);
  return o.str();
}

std::string to_json(const MembershipVerdict& v) {
  JsonObject o;
  o.add("in_S_phi", v.in_S_phi);
  o.add("in_E_phi", v.in_E_phi);
  if (v.witness_lambda)
    o.add("witness_lambda", *v.witness_lambda);
  else
    o.add_null("witness_lambda");
  o.add("rationale", to_string(v.rationale));
  return o.str();
}

std::string to_json(const SingularSpectrum& sp) {
  JsonObject o;
  JsonArray values, mults;
  for (double v : sp.values) values.add(v);
  for (int m : sp.multiplicities) mults.add_raw(std::to_string(m));
  o.add_raw("values", values.str());
  o.add_raw("multiplicities", mults.str());
  if (sp.truncated_at)
    o.add("truncated_at", static_cast<std::int64_t>(*sp.truncated_at));
  else
    o.add_null("truncated_at");
  return o.str();
}

std::string to_json(const CheckReport& r) {
  JsonObject o;
  o.add("name", r.name);
  o.add("lhs", r.lhs);
  o.add("rhs", r.rhs);
  o.add("slack", r.slack);
  o.add("passed", r.passed);
  o.add("inputs_digest", r.inputs_digest);
  o.add("tolerance", r.tolerance);
  return o.str();
}

std::string to_json(const std::vector<CheckReport>& reports) {
  JsonArray arr;
  for (const auto& r : reports) arr.add_raw(to_json(r));
  return arr.str();
}

} // namespace orlicz
