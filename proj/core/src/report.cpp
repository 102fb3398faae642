#include "geovec/report.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>

namespace geovec {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void write_indent(std::string& out, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
}

void write_value(const ojson& j, std::string& out, int depth) {
  switch (j.type()) {
    case ojson::value_t::null:
      out += "null";
      return;
    case ojson::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case ojson::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      return;
    case ojson::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      return;
    case ojson::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      out += format_double(v);
      return;
    }
    case ojson::value_t::string:
      out += ojson(j.get<std::string>()).dump();  // escaped, deterministic
      return;
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        write_indent(out, depth + 1);
        write_value(j[i], out, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      write_indent(out, depth);
      out += ']';
      return;
    }
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        write_indent(out, depth + 1);
        out += ojson(it.key()).dump();
        out += ": ";
        write_value(it.value(), out, depth + 1);
        if (i + 1 < j.size()) out += ',';
        out += '\n';
      }
      write_indent(out, depth);
      out += '}';
      return;
    }
    default:
      out += "null";
      return;
  }
}

}  // namespace

std::string dump_deterministic(const ojson& j) {
  std::string out;
  write_value(j, out, 0);
  out += '\n';
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ojson to_json(const Eigen::VectorXd& v) {
  ojson arr = ojson::array();
  for (int i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

ojson to_json(const Eigen::MatrixXd& m) {
  ojson rows = ojson::array();
  for (int r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace geovec
