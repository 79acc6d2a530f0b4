#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pwm/errors.hpp"
#include "pwm/inference_types.hpp"
#include "pwm/sample.hpp"

namespace pwm {

class MissingFile : public InputError {
 public:
  using InputError::InputError;
};

class MissingColumn : public InputError {
 public:
  using InputError::InputError;
};

class NoNumericRows : public InputError {
 public:
  using InputError::InputError;
};

/// One numeric column of a CSV file, blanks and non-numeric cells removed.
struct ColumnDataset {
  std::string name;
  std::vector<double> observations;
  std::size_t missing = 0;      ///< blank, NA, NaN, N/A, "."
  std::size_t non_numeric = 0;  ///< any other unparsable text

  std::size_t skipped() const noexcept { return missing + non_numeric; }
};

/// Splits one CSV record; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_csv_record(const std::string& line);

ColumnDataset read_csv_column(std::istream& in, const std::string& column, const std::string& source = "<stream>");
ColumnDataset load_csv_column(const std::string& path, const std::string& column);

/// Header names of a CSV file, in order.
std::vector<std::string> csv_header(const std::string& path);

struct AnalysisRow {
  std::string column;
  Method method = Method::JEL;
  bool ok = false;
  ConfidenceInterval ci;
  std::string error;
  int exit_code = 0;  ///< 2 input-type failure, 3 numeric failure
};

/// Confidence interval per method; failures are captured per row, never thrown.
std::vector<AnalysisRow> analyze_column(const ColumnDataset& data, PwmOrder r, double level,
                                        const std::vector<Method>& methods);

struct TestRow {
  std::string column;
  Method method = Method::JEL;
  bool ok = false;
  TestResult result;
  std::string error;
  int exit_code = 0;
};

std::vector<TestRow> test_column(const ColumnDataset& data, PwmOrder r, double beta0, double alpha,
                                 const std::vector<Method>& methods);

/// `column,method,estimate,lower,upper,length,level,status`, full precision.
void write_analysis_csv(const std::vector<AnalysisRow>& rows, std::ostream& out);
/// Columns as table rows, methods as table columns, each cell "(lower, upper) length" to 4 decimals.
void write_analysis_markdown(const std::vector<AnalysisRow>& rows, std::ostream& out);

void write_test_csv(const std::vector<TestRow>& rows, std::ostream& out);
void write_test_markdown(const std::vector<TestRow>& rows, std::ostream& out);

/// 2 for InputError, 3 for NumericError (and anything else).
int exit_code_for(const std::exception& e) noexcept;

}  // namespace pwm
