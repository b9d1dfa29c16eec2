#include "angmom_cli/table.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace angmom::cli {

std::size_t Column::size() const {
  return std::visit([](const auto &v) { return v.size(); }, values);
}

std::size_t Table::rows() const {
  if (columns.empty())
    return 0;
  const std::size_t n = columns.front().size();
  for (const auto &c : columns) {
    if (c.size() != n)
      throw std::logic_error("column '" + c.name + "' has a different length");
  }
  return n;
}

std::string format_double(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("non-finite value in output");
  if (x == 0.0)
    return "0"; // also folds -0
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

namespace {

std::string scalar_text(const Scalar &s) {
  return std::visit(
      [](const auto &v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return format_double(v);
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else
          return v;
      },
      s);
}

std::string cell_text(const Column &c, std::size_t i) {
  return std::visit(
      [i](const auto &v) -> std::string {
        using T = typename std::decay_t<decltype(v)>::value_type;
        if constexpr (std::is_same_v<T, double>)
          return format_double(v[i]);
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v[i]);
        else if constexpr (std::is_same_v<T, std::string>)
          return v[i];
        else
          return v[i] ? format_double(*v[i]) : std::string("undetermined");
      },
      c.values);
}

// ordered_json keeps insertion order, so column order survives.
nlohmann::ordered_json json_number(double x) {
  if (!std::isfinite(x))
    throw std::domain_error("non-finite value in output");
  return x == 0.0 ? 0.0 : x;
}

} // namespace

std::string to_csv(const Table &t) {
  const std::size_t n = t.rows();
  std::ostringstream out;
  out << '#';
  for (const auto &[k, v] : t.metadata)
    out << ' ' << k << '=' << scalar_text(v);
  out << '\n';
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    out << (c ? "," : "") << t.columns[c].name;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      out << (c ? "," : "") << cell_text(t.columns[c], i);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const Table &t) {
  t.rows();
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto &[k, v] : t.metadata) {
    std::visit(
        [&meta, &k](const auto &x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, double>)
            meta[k] = json_number(x);
          else
            meta[k] = x;
        },
        v);
  }
  nlohmann::ordered_json cols = nlohmann::ordered_json::object();
  for (const auto &c : t.columns) {
    auto arr = nlohmann::ordered_json::array();
    std::visit(
        [&arr](const auto &v) {
          using T = typename std::decay_t<decltype(v)>::value_type;
          for (const auto &x : v) {
            if constexpr (std::is_same_v<T, double>)
              arr.push_back(json_number(x));
            else if constexpr (std::is_same_v<T, std::optional<double>>)
              arr.push_back(x ? json_number(*x) : nlohmann::ordered_json(nullptr));
            else
              arr.push_back(x);
          }
        },
        c.values);
    cols[c.name] = std::move(arr);
  }
  nlohmann::ordered_json doc;
  doc["metadata"] = std::move(meta);
  doc["columns"] = std::move(cols);
  return doc.dump(1) + "\n";
}

} // namespace angmom::cli
