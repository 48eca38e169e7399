#include "mvfilter/export.hpp"

#include <sstream>
#include <vector>

#include "mvfilter/errors.hpp"

namespace mvfilter {

ExportFormat parse_export_format(std::string_view s) {
  if (s == "dot") return ExportFormat::Dot;
  if (s == "csv") return ExportFormat::Csv;
  throw InvalidArgument("unknown export format '" + std::string(s) + "' (expected dot or csv)");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Covering pairs (i, j): sets[i] ⊊ sets[j] with nothing strictly between.
std::vector<std::pair<std::size_t, std::size_t>> covers(const std::vector<Subset>& sets) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (!sets[i].is_proper_subset_of(sets[j])) continue;
      bool between = false;
      for (std::size_t k = 0; k < sets.size() && !between; ++k)
        between = sets[i].is_proper_subset_of(sets[k]) && sets[k].is_proper_subset_of(sets[j]);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

std::string hasse_dot(const std::string& graph, const std::string& prefix,
                      const std::vector<Subset>& sets, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph " << graph << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < sets.size(); ++i)
    os << "  " << prefix << i << " [label=" << dot_string(labels[i]) << "];\n";
  for (const auto& [i, j] : covers(sets)) os << "  " << prefix << i << " -> " << prefix << j << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_filters(const MvAlgebra& a, ExportFormat fmt, std::size_t max_carrier) {
  auto filters = enumerate_lattice_filters(a, false, max_carrier);
  std::vector<Subset> sets;
  std::vector<std::string> labels;
  for (const auto& f : filters) {
    if (f.is_bottom()) continue;
    sets.push_back(f.members());
    labels.push_back(f.to_string());
  }
  if (fmt == ExportFormat::Dot) return hasse_dot("filters", "f", sets, labels);
  std::ostringstream os;
  os << "index,members,prime,implication_filter\n";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Filter f(a, sets[i]);
    os << i << ',' << csv_field(labels[i]) << ',' << (is_prime_lattice_filter(f) ? 1 : 0) << ','
       << (is_implication_filter_set(a, sets[i]) ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string export_spectrum(const HatAlgebra& h, ExportFormat fmt) {
  const auto& ms = h.spectrum().members();
  std::vector<Subset> sets;
  std::vector<std::string> labels;
  for (const auto& f : ms) {
    sets.push_back(f.members());
    labels.push_back(f.to_string());
  }
  if (fmt == ExportFormat::Dot) return hasse_dot("spectrum", "s", sets, labels);
  std::ostringstream os;
  os << "index,members,class,representative\n";
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto c = *h.class_of(ms[i]);
    os << i << ',' << csv_field(labels[i]) << ',' << c << ','
       << csv_field(h.classes()[c].representative.to_string()) << '\n';
  }
  return os.str();
}

std::string export_hat(const HatAlgebra& h, ExportFormat fmt) {
  std::vector<std::string> reps;
  for (const auto& c : h.classes()) reps.push_back(c.representative.to_string());
  const std::size_t n = h.size();
  std::ostringstream os;
  if (fmt == ExportFormat::Dot) {
    os << "digraph hat {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < n; ++i) os << "  c" << i << " [label=" << dot_string(reps[i]) << "];\n";
    for (std::size_t i = 0; i + 1 < n; ++i) os << "  c" << i << " -> c" << i + 1 << ";\n";
    os << "}\n";
    return os.str();
  }
  auto header = [&](const char* op) {
    os << op;
    for (const auto& r : reps) os << ',' << csv_field(r);
    os << '\n';
  };
  auto table = [&](const char* op, auto cell) {
    header(op);
    for (std::size_t x = 0; x < n; ++x) {
      os << csv_field(reps[x]);
      for (std::size_t y = 0; y < n; ++y) os << ',' << csv_field(reps[cell(x, y)]);
      os << '\n';
    }
  };
  table("sqto", [&](std::size_t x, std::size_t y) { return h.sqto(x, y); });
  os << '\n';
  table("oplus", [&](std::size_t x, std::size_t y) { return h.oplus(x, y); });
  os << '\n';
  header("plus");
  os << "value";
  for (std::size_t x = 0; x < n; ++x) os << ',' << csv_field(reps[h.plus(x)]);
  os << '\n' << '\n';
  os << "class,representative,members\n";
  for (std::size_t x = 0; x < n; ++x) {
    std::string members;
    for (const auto& m : h.classes()[x].members) members += (members.empty() ? "" : " ") + m.to_string();
    os << x << ',' << csv_field(reps[x]) << ',' << csv_field(members) << '\n';
  }
  return os.str();
}

}  // namespace mvfilter
