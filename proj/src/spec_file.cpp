#include "mvfilter/spec_file.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "json.hpp"
#include "mvfilter/errors.hpp"

namespace mvfilter {

bool operator==(const ProductSpec& a, const ProductSpec& b) { return a.factors == b.factors; }

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError("field '" + path + "': " + msg, 0, 0);
}

void only_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) fail(path.empty() ? k : path + "." + k, "unknown key");
  for (const char* k : keys)
    if (!j.contains(k)) fail(path.empty() ? k : path + "." + k, "missing");
}

std::size_t natural(const json& j, const std::string& path) {
  if (!j.is_number_unsigned())
    fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string at(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

AlgebraSpec from_json(const json& j, const std::string& path, bool nested) {
  if (!j.is_object()) fail(path.empty() ? "(top)" : path, "expected an object");
  if (!j.contains("kind")) fail(at(path, "kind"), "missing");
  if (!j["kind"].is_string()) fail(at(path, "kind"), "expected a string");
  auto kind = j["kind"].get<std::string>();
  if (kind == "lukasiewicz") {
    only_keys(j, path, {"kind", "n"});
    auto n = natural(j["n"], at(path, "n"));
    if (n < 2) fail(at(path, "n"), "must be at least 2");
    return {LukasiewiczSpec{n}};
  }
  if (kind == "product") {
    only_keys(j, path, {"kind", "factors"});
    const auto& f = j["factors"];
    if (!f.is_array() || f.empty()) fail(at(path, "factors"), "expected a nonempty list");
    ProductSpec p;
    for (std::size_t i = 0; i < f.size(); ++i)
      p.factors.push_back(from_json(f[i], at(path, "factors") + "[" + std::to_string(i) + "]", true));
    return {std::move(p)};
  }
  if (kind == "table") {
    only_keys(j, path, {"kind", "size", "oplus", "neg", "zero"});
    TableSpec t;
    t.size = natural(j["size"], at(path, "size"));
    if (t.size == 0) fail(at(path, "size"), "must be positive");
    auto elem = [&](const json& v, const std::string& p) {
      auto x = natural(v, p);
      if (x >= t.size) fail(p, "element " + std::to_string(x) + " out of range");
      return x;
    };
    const auto& o = j["oplus"];
    if (!o.is_array() || o.size() != t.size)
      fail(at(path, "oplus"), "expected " + std::to_string(t.size) + " rows");
    for (std::size_t r = 0; r < t.size; ++r) {
      auto p = at(path, "oplus") + "[" + std::to_string(r) + "]";
      if (!o[r].is_array() || o[r].size() != t.size)
        fail(p, "expected a row of " + std::to_string(t.size) + " entries");
      std::vector<std::size_t> row;
      for (std::size_t c = 0; c < t.size; ++c) row.push_back(elem(o[r][c], p + "[" + std::to_string(c) + "]"));
      t.oplus.push_back(std::move(row));
    }
    const auto& n = j["neg"];
    if (!n.is_array() || n.size() != t.size)
      fail(at(path, "neg"), "expected " + std::to_string(t.size) + " entries");
    for (std::size_t i = 0; i < t.size; ++i)
      t.neg.push_back(elem(n[i], at(path, "neg") + "[" + std::to_string(i) + "]"));
    t.zero = elem(j["zero"], at(path, "zero"));
    return {std::move(t)};
  }
  if (kind == "dense") {
    if (nested) fail(at(path, "kind"), "the dense chain cannot be a product factor");
    only_keys(j, path, {"kind"});
    return {DenseSpec{}};
  }
  fail(at(path, "kind"), "unknown kind '" + kind + "'");
}

// 1-based line and column of byte offset `pos` (the offending character).
std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t pos) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

ordered to_json(const AlgebraSpec& s) {
  return std::visit(
      [](const auto& v) -> ordered {
        using T = std::decay_t<decltype(v)>;
        ordered j;
        if constexpr (std::is_same_v<T, LukasiewiczSpec>) {
          j["kind"] = "lukasiewicz";
          j["n"] = v.n;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          j["kind"] = "product";
          j["factors"] = ordered::array();
          for (const auto& f : v.factors) j["factors"].push_back(to_json(f));
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          j["kind"] = "table";
          j["size"] = v.size;
          j["oplus"] = v.oplus;
          j["neg"] = v.neg;
          j["zero"] = v.zero;
        } else {
          j["kind"] = "dense";
        }
        return j;
      },
      s.value);
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

}  // namespace

std::size_t AlgebraSpec::carrier_size() const {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LukasiewiczSpec>) {
          return v.n;
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::size_t n = 1;
          for (const auto& f : v.factors) n = saturating_mul(n, f.carrier_size());
          return n;
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          return v.size;
        } else {
          return 0;
        }
      },
      value);
}

AlgebraSpec parse_spec(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character
    std::size_t pos = e.byte == 0 ? 0 : e.byte - 1;
    auto [line, col] = line_col(text, pos);
    std::string msg = e.what();
    // drop the library's "[json.exception.parse_error.101] parse error at ...: " prefix
    if (auto k = msg.find(": "); k != std::string::npos) msg = msg.substr(k + 2);
    if (auto k = msg.find(": "); k != std::string::npos && msg.rfind("syntax error", 0) == 0)
      msg = msg.substr(k + 2);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + msg,
                     line, col);
  }
  return from_json(j, "", false);
}

std::string render_spec(const AlgebraSpec& spec) { return to_json(spec).dump(2) + "\n"; }

MvAlgebra build_algebra(const AlgebraSpec& spec, std::size_t max_carrier) {
  if (spec.is_dense()) throw InvalidArgument("the dense chain has no finite carrier");
  auto size = spec.carrier_size();
  if (size > max_carrier)
    throw ResourceLimit("carrier would have " + std::to_string(size) + " elements", max_carrier);
  return std::visit(
      [max_carrier](const auto& v) -> MvAlgebra {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LukasiewiczSpec>) {
          return make_lukasiewicz_chain(v.n);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          std::vector<MvAlgebra> fs;
          for (const auto& f : v.factors) fs.push_back(build_algebra(f, max_carrier));
          if (fs.size() == 1) return fs.front();
          return make_product(fs);
        } else if constexpr (std::is_same_v<T, TableSpec>) {
          std::vector<Element> flat;
          for (const auto& row : v.oplus) flat.insert(flat.end(), row.begin(), row.end());
          return MvAlgebra::from_tables("table" + std::to_string(v.size), v.size, std::move(flat),
                                        v.neg, v.zero);
        } else {
          throw InvalidArgument("the dense chain has no finite carrier");
        }
      },
      spec.value);
}

}  // namespace mvfilter
