#ifndef GEOVEC_REPORT_HPP
#define GEOVEC_REPORT_HPP

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

namespace geovec {

using ojson = nlohmann::ordered_json;

/// Deterministic serialization: insertion-ordered keys, floats printed with
/// %.17g, LF line endings, nonfinite numbers as null. Byte-identical output
/// for identical documents.
std::string dump_deterministic(const ojson& j);

/// FNV-1a 64-bit digest as 16 hex characters; used as the input digest in
/// reports.
std::string fnv1a_hex(std::string_view bytes);

ojson to_json(const Eigen::VectorXd& v);
ojson to_json(const Eigen::MatrixXd& m);

/// %.17g rendering used for CSV cells as well.
std::string format_double(double v);

}  // namespace geovec

#endif
