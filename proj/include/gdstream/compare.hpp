#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "gdstream/descriptor.hpp"
#include "gdstream/errors.hpp"

namespace gdstream {

// sum_i |x_i - y_i| / (|x_i| + |y_i|), with 0/0 terms contributing 0.
inline double canberra(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw data_error("canberra: length mismatch (" + std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()) + ")");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double denom = std::abs(x[i]) + std::abs(y[i]);
    if (denom > 0.0) sum += std::abs(x[i] - y[i]) / denom;
  }
  return sum;
}

inline double canberra(const Descriptor& a, const Descriptor& b) {
  if (a.method != b.method) throw data_error("canberra: cannot compare gabe with maeve descriptors");
  return canberra(a.values, b.values);
}

enum class Format { csv, jsonl };

inline std::optional<Format> parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "jsonl") return Format::jsonl;
  return std::nullopt;
}

namespace detail {

inline std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_field(std::string_view s, std::size_t line_no, std::string_view what) {
  s = trim(s);
  T value{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw data_error("line " + std::to_string(line_no) + ": bad " + std::string(what) + " '" + std::string(s) +
                     "'");
  }
  return value;
}

inline void check_uniform(std::span<const Descriptor> descs) {
  for (const auto& d : descs) {
    d.validate();
    if (d.method != descs.front().method) throw data_error("descriptor collection mixes gabe and maeve");
  }
}

inline std::vector<const Descriptor*> sorted_by_id(std::span<const Descriptor> descs) {
  std::vector<const Descriptor*> order;
  order.reserve(descs.size());
  for (const auto& d : descs) order.push_back(&d);
  std::stable_sort(order.begin(), order.end(),
                   [](const Descriptor* a, const Descriptor* b) { return a->meta.graph_id < b->meta.graph_id; });
  return order;
}

inline constexpr std::array<std::string_view, 6> kMetaKeys{"graph_id", "method", "b", "seed", "n", "m"};

}  // namespace detail

// CSV: header graph_id,method,b,seed,n,m,v0..v{d-1}; rows sorted by
// graph_id. Values use shortest round-trip formatting.
inline void write_csv(std::ostream& out, std::span<const Descriptor> descs) {
  detail::check_uniform(descs);
  const std::size_t dim = descs.empty() ? 0 : descs.front().values.size();
  for (std::size_t i = 0; i < detail::kMetaKeys.size(); ++i) out << (i ? "," : "") << detail::kMetaKeys[i];
  for (std::size_t i = 0; i < dim; ++i) out << ",v" << i;
  out << '\n';
  for (const Descriptor* d : detail::sorted_by_id(descs)) {
    out << d->meta.graph_id << ',' << to_string(d->method) << ',' << d->meta.b << ',' << d->meta.seed << ','
        << d->meta.n << ',' << d->meta.m;
    for (double x : d->values) out << ',' << detail::format_double(x);
    out << '\n';
  }
}

inline std::vector<Descriptor> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw data_error("line 1: missing CSV header");
  const auto header = detail::split_csv(line);
  if (header.size() < detail::kMetaKeys.size()) throw data_error("line 1: header too short");
  for (std::size_t i = 0; i < detail::kMetaKeys.size(); ++i) {
    if (detail::trim(header[i]) != detail::kMetaKeys[i]) {
      throw data_error("line 1: expected column '" + std::string(detail::kMetaKeys[i]) + "'");
    }
  }
  const std::size_t dim = header.size() - detail::kMetaKeys.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (detail::trim(header[detail::kMetaKeys.size() + i]) != "v" + std::to_string(i)) {
      throw data_error("line 1: expected column 'v" + std::to_string(i) + "'");
    }
  }

  std::vector<Descriptor> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto fields = detail::split_csv(line);
    if (fields.size() != header.size()) {
      throw data_error("line " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                       " fields, got " + std::to_string(fields.size()));
    }
    Descriptor d;
    const auto method = parse_method(detail::trim(fields[1]));
    if (!method) throw data_error("line " + std::to_string(line_no) + ": unknown method");
    d.method = *method;
    if (dimension(d.method) != dim) {
      throw data_error("line " + std::to_string(line_no) + ": " + std::string(to_string(d.method)) +
                       " needs " + std::to_string(dimension(d.method)) + " values");
    }
    if (!out.empty() && out.front().method != d.method) {
      throw data_error("line " + std::to_string(line_no) + ": mixed method tags in one file");
    }
    d.meta.graph_id = detail::parse_field<std::uint64_t>(fields[0], line_no, "graph_id");
    d.meta.b = detail::parse_field<std::uint64_t>(fields[2], line_no, "b");
    d.meta.seed = detail::parse_field<std::uint64_t>(fields[3], line_no, "seed");
    d.meta.n = detail::parse_field<std::uint64_t>(fields[4], line_no, "n");
    d.meta.m = detail::parse_field<std::uint64_t>(fields[5], line_no, "m");
    d.values.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i)
      d.values.push_back(detail::parse_field<double>(fields[detail::kMetaKeys.size() + i], line_no, "value"));
    out.push_back(std::move(d));
  }
  return out;
}

// JSON lines with the CSV keys, one object per descriptor.
inline void write_jsonl(std::ostream& out, std::span<const Descriptor> descs) {
  detail::check_uniform(descs);
  for (const Descriptor* d : detail::sorted_by_id(descs)) {
    nlohmann::ordered_json j;
    j["graph_id"] = d->meta.graph_id;
    j["method"] = to_string(d->method);
    j["b"] = d->meta.b;
    j["seed"] = d->meta.seed;
    j["n"] = d->meta.n;
    j["m"] = d->meta.m;
    for (std::size_t i = 0; i < d->values.size(); ++i) j["v" + std::to_string(i)] = d->values[i];
    out << j.dump() << '\n';
  }
}

inline std::vector<Descriptor> read_jsonl(std::istream& in) {
  std::vector<Descriptor> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    try {
      const auto j = nlohmann::json::parse(line);
      Descriptor d;
      const auto method = parse_method(j.at("method").get<std::string>());
      if (!method) throw data_error(where + "unknown method");
      d.method = *method;
      if (!out.empty() && out.front().method != d.method) throw data_error(where + "mixed method tags in one file");
      d.meta.graph_id = j.at("graph_id").get<std::uint64_t>();
      d.meta.b = j.at("b").get<std::uint64_t>();
      d.meta.seed = j.at("seed").get<std::uint64_t>();
      d.meta.n = j.at("n").get<std::uint64_t>();
      d.meta.m = j.at("m").get<std::uint64_t>();
      const std::size_t dim = dimension(d.method);
      if (j.size() != detail::kMetaKeys.size() + dim) throw data_error(where + "wrong number of keys");
      for (std::size_t i = 0; i < dim; ++i) d.values.push_back(j.at("v" + std::to_string(i)).get<double>());
      out.push_back(std::move(d));
    } catch (const nlohmann::json::exception& e) {
      throw data_error(where + e.what());
    }
  }
  return out;
}

inline void save_descriptors(const std::string& path, std::span<const Descriptor> descs, Format format) {
  std::ofstream out(path);
  if (!out) throw data_error("cannot write '" + path + "'");
  if (format == Format::csv) {
    write_csv(out, descs);
  } else {
    write_jsonl(out, descs);
  }
  if (!out) throw data_error("write to '" + path + "' failed");
}

inline std::vector<Descriptor> load_descriptors(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw data_error("cannot open '" + path + "'");
  try {
    return format == Format::csv ? read_csv(in) : read_jsonl(in);
  } catch (const data_error& e) {
    throw data_error(path + ": " + e.what());
  }
}

}  // namespace gdstream
