#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace angmom::cli {

using Scalar = std::variant<std::int64_t, double, std::string>;

//! One output column. Optional doubles print as "undetermined" in CSV and
//! null in JSON.
struct Column {
  std::string name;
  std::variant<std::vector<double>, std::vector<std::int64_t>, std::vector<std::string>,
               std::vector<std::optional<double>>>
      values;

  std::size_t size() const;
};

struct Table {
  std::vector<std::pair<std::string, Scalar>> metadata;
  std::vector<Column> columns;

  void meta(std::string key, Scalar value) { metadata.emplace_back(std::move(key), std::move(value)); }
  template <class T> void add(std::string name, std::vector<T> values) {
    columns.push_back({std::move(name), std::move(values)});
  }
  //! Throws std::logic_error when columns differ in length.
  std::size_t rows() const;
};

//! Shortest decimal that reads back to the same double.
std::string format_double(double x);

//! '#' line with key=value metadata, header row, then data rows.
std::string to_csv(const Table &t);
//! {"metadata": {...}, "columns": {"name": [...], ...}} in column order.
std::string to_json(const Table &t);

} // namespace angmom::cli
