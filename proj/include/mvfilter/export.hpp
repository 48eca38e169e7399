#pragma once

#include <string>
#include <string_view>

#include "mvfilter/calculus.hpp"
#include "mvfilter/spectra.hpp"

namespace mvfilter {

enum class ExportFormat { Dot, Csv };
ExportFormat parse_export_format(std::string_view s);

/// Nonempty lattice filters ordered by inclusion. DOT draws the Hasse
/// diagram with edges from each filter to the filters covering it.
std::string export_filters(const MvAlgebra& a, ExportFormat fmt, std::size_t max_carrier);

/// Members of PSpec(P) ordered by inclusion, with their ≡-classes.
std::string export_spectrum(const HatAlgebra& h, ExportFormat fmt);

/// CSV: the ⊸, ⊕ and ¬ tables followed by class membership, each block
/// headed by the class representatives in ascending class order. DOT: the
/// class chain.
std::string export_hat(const HatAlgebra& h, ExportFormat fmt);

}  // namespace mvfilter
