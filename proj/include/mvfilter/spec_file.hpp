#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mvfilter/mv_algebra.hpp"

namespace mvfilter {

struct AlgebraSpec;

struct LukasiewiczSpec {
  std::size_t n = 2;
  friend bool operator==(const LukasiewiczSpec&, const LukasiewiczSpec&) = default;
};

struct ProductSpec {
  std::vector<AlgebraSpec> factors;
  friend bool operator==(const ProductSpec&, const ProductSpec&);
};

struct TableSpec {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> oplus;
  std::vector<std::size_t> neg;
  std::size_t zero = 0;
  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

/// The rational chain [0,1] with cut filters.
struct DenseSpec {
  friend bool operator==(const DenseSpec&, const DenseSpec&) = default;
};

/// Parsed algebra spec file.
struct AlgebraSpec {
  std::variant<LukasiewiczSpec, ProductSpec, TableSpec, DenseSpec> value;

  bool is_dense() const { return std::holds_alternative<DenseSpec>(value); }
  /// Carrier size without building the tables (0 for dense).
  std::size_t carrier_size() const;
  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// JSON syntax errors raise ParseError with line and column. Structural
/// errors raise ParseError naming the offending field; unknown keys are
/// rejected. Dense specs may not appear inside a product.
AlgebraSpec parse_spec(std::string_view text);

/// Canonical JSON text, accepted back by parse_spec.
std::string render_spec(const AlgebraSpec& spec);

/// Builds the finite algebra. Throws InvalidArgument for a dense spec and
/// ResourceLimit if the carrier exceeds `max_carrier`.
MvAlgebra build_algebra(const AlgebraSpec& spec, std::size_t max_carrier);

}  // namespace mvfilter
