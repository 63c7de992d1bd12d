#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace multisol {

/// Rows of already-formatted cells with a fixed header; serialises to CSV.
struct StudyTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> cells);
  /// Index of a column by name; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;

  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

/// Fixed six-decimal rendering so CSV output is byte-stable.
std::string format_number(double x);

struct MeanStd {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

MeanStd mean_std(std::span<const double> values);

}  // namespace multisol
