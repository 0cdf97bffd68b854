#include <cmath>

#include "casimir/sweep.hpp"
#include "json.hpp"

namespace casimir {

void write_csv(std::ostream& out, const SweepResult& result) {
  for (const auto& [key, value] : result.metadata) {
    out << "# " << key << " = " << value << "\n";
  }
  for (std::size_t i = 0; i < result.columns.size(); ++i) {
    out << (i ? "," : "") << result.columns[i];
  }
  out << "\n";
  for (const auto& row : result.rows) {
    for (double v : row.values) out << format_number(v) << ",";
    out << row.status << "\n";
  }
}

void write_json(std::ostream& out, const SweepResult& result) {
  nlohmann::ordered_json doc;
  doc["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : result.metadata) doc["metadata"][key] = value;
  doc["columns"] = result.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : result.rows) {
    auto line = nlohmann::ordered_json::array();
    for (double v : row.values) {
      if (std::isfinite(v)) {
        line.push_back(v);
      } else {
        line.push_back(nullptr);
      }
    }
    line.push_back(row.status);
    rows.push_back(std::move(line));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << "\n";
}

void write_result(std::ostream& out, const SweepResult& result,
                  OutputFormat format) {
  if (format == OutputFormat::json) {
    write_json(out, result);
  } else {
    write_csv(out, result);
  }
}

}  // namespace casimir
