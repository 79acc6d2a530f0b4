#include "pwm/column_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "pwm/comparison.hpp"
#include "pwm/estimators.hpp"
#include "pwm/harness.hpp"
#include "pwm/jel.hpp"

namespace pwm {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_missing_token(const std::string& s) {
  std::string u = s;
  std::transform(u.begin(), u.end(), u.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return u.empty() || u == "NA" || u == "NAN" || u == "N/A" || u == "." || u == "NULL";
}

bool parse_number(const std::string& s, double& out) {
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  const auto res = std::from_chars(b, e, out);
  return res.ec == std::errc() && res.ptr == e && std::isfinite(out);
}

std::string fixed4(double v) {
  if (!std::isfinite(v)) return format_exact(v);
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << v;
  return os.str();
}

}  // namespace

std::vector<std::string> split_csv_record(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

ColumnDataset read_csv_column(std::istream& in, const std::string& column, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw MissingColumn("'" + source + "' is empty; no column '" + column + "'");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const auto header = split_csv_record(line);
  const auto it = std::find(header.begin(), header.end(), column);
  if (it == header.end()) throw MissingColumn("column '" + column + "' not found in '" + source + "'");
  const auto idx = static_cast<std::size_t>(it - header.begin());

  ColumnDataset data;
  data.name = column;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto fields = split_csv_record(line);
    const std::string cell = idx < fields.size() ? fields[idx] : std::string();
    double v = 0.0;
    if (is_missing_token(cell)) {
      ++data.missing;
    } else if (parse_number(cell, v)) {
      data.observations.push_back(v);
    } else {
      ++data.non_numeric;
    }
  }
  if (data.observations.empty()) {
    throw NoNumericRows("column '" + column + "' in '" + source + "' has no numeric rows");
  }
  return data;
}

ColumnDataset load_csv_column(const std::string& path, const std::string& column) {
  std::ifstream in(path);
  if (!in) throw MissingFile("cannot open '" + path + "' (looking for column '" + column + "')");
  return read_csv_column(in, column, path);
}

std::vector<std::string> csv_header(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile("cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line)) return {};
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  return split_csv_record(line);
}

int exit_code_for(const std::exception& e) noexcept {
  if (dynamic_cast<const InputError*>(&e) != nullptr) return 2;
  return 3;
}

std::vector<AnalysisRow> analyze_column(const ColumnDataset& data, PwmOrder r, double level,
                                        const std::vector<Method>& methods) {
  std::vector<AnalysisRow> rows;
  std::optional<SortedSample> sample;
  std::optional<PseudoValues> pv;
  for (Method m : methods) {
    AnalysisRow row;
    row.column = data.name;
    row.method = m;
    try {
      if (!sample) sample = SortedSample::from_unsorted(data.observations);
      switch (m) {
        case Method::JEL:
          if (!pv) pv = jackknife_pseudo_values(*sample, r);
          row.ci = jel_confidence_interval(*pv, level);
          break;
        case Method::AJEL:
          if (!pv) pv = jackknife_pseudo_values(*sample, r);
          row.ci = ajel_confidence_interval(*pv, level);
          break;
        case Method::DNEL:
        case Method::VXL:
          row.ci = plugin_el_ci(*sample, r, level, m);
          break;
      }
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.exit_code = exit_code_for(e);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<TestRow> test_column(const ColumnDataset& data, PwmOrder r, double beta0, double alpha,
                                 const std::vector<Method>& methods) {
  std::vector<TestRow> rows;
  std::optional<SortedSample> sample;
  std::optional<PseudoValues> pv;
  for (Method m : methods) {
    TestRow row;
    row.column = data.name;
    row.method = m;
    try {
      if (!sample) sample = SortedSample::from_unsorted(data.observations);
      switch (m) {
        case Method::JEL:
          if (!pv) pv = jackknife_pseudo_values(*sample, r);
          row.result = jel_test(*pv, beta0, alpha);
          break;
        case Method::AJEL:
          if (!pv) pv = jackknife_pseudo_values(*sample, r);
          row.result = ajel_test(*pv, beta0, alpha);
          break;
        case Method::DNEL:
        case Method::VXL:
          row.result = plugin_el_test(*sample, r, beta0, alpha, m);
          break;
      }
      row.ok = true;
    } catch (const std::exception& e) {
      row.error = e.what();
      row.exit_code = exit_code_for(e);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_analysis_csv(const std::vector<AnalysisRow>& rows, std::ostream& out) {
  out << "column,method,estimate,lower,upper,length,level,status\n";
  for (const auto& row : rows) {
    out << row.column << ',' << method_name(row.method) << ',';
    if (row.ok) {
      out << format_exact(row.ci.point_estimate) << ',' << format_exact(row.ci.lower) << ','
          << format_exact(row.ci.upper) << ',' << format_exact(row.ci.length()) << ',' << format_exact(row.ci.level)
          << ",ok\n";
    } else {
      std::string msg = row.error;
      std::replace(msg.begin(), msg.end(), '"', '\'');
      out << ",,,,,\"error: " << msg << "\"\n";
    }
  }
}

void write_analysis_markdown(const std::vector<AnalysisRow>& rows, std::ostream& out) {
  std::vector<std::string> columns;
  std::vector<Method> methods;
  for (const auto& row : rows) {
    if (std::find(columns.begin(), columns.end(), row.column) == columns.end()) columns.push_back(row.column);
    if (std::find(methods.begin(), methods.end(), row.method) == methods.end()) methods.push_back(row.method);
  }
  out << "| Column |";
  for (Method m : methods) out << ' ' << method_name(m) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < methods.size(); ++i) out << "---|";
  out << '\n';
  for (const auto& col : columns) {
    out << "| " << col << " |";
    for (Method m : methods) {
      const auto it = std::find_if(rows.begin(), rows.end(),
                                   [&](const AnalysisRow& r) { return r.column == col && r.method == m; });
      if (it == rows.end()) {
        out << " |";
      } else if (!it->ok) {
        out << " error: " << it->error << " |";
      } else {
        out << " (" << fixed4(it->ci.lower) << ", " << fixed4(it->ci.upper) << ") " << fixed4(it->ci.length())
            << " |";
      }
    }
    out << '\n';
  }
}

void write_test_csv(const std::vector<TestRow>& rows, std::ostream& out) {
  out << "column,method,null,statistic,threshold,p_value,reject,alpha,status\n";
  for (const auto& row : rows) {
    out << row.column << ',' << method_name(row.method) << ',';
    if (row.ok) {
      const auto& t = row.result;
      out << format_exact(t.null_value) << ',' << format_exact(t.statistic) << ',' << format_exact(t.threshold)
          << ',' << format_exact(t.p_value) << ',' << (t.reject ? 1 : 0) << ',' << format_exact(t.alpha) << ",ok\n";
    } else {
      std::string msg = row.error;
      std::replace(msg.begin(), msg.end(), '"', '\'');
      out << ",,,,,,\"error: " << msg << "\"\n";
    }
  }
}

void write_test_markdown(const std::vector<TestRow>& rows, std::ostream& out) {
  out << "| Column | Method | H0 | -2 log R | threshold | p-value | decision |\n|---|---|---|---|---|---|---|\n";
  for (const auto& row : rows) {
    out << "| " << row.column << " | " << method_name(row.method) << " |";
    if (row.ok) {
      const auto& t = row.result;
      out << ' ' << fixed4(t.null_value) << " | " << fixed4(t.statistic) << " | " << fixed4(t.threshold) << " | "
          << fixed4(t.p_value) << " | " << (t.reject ? "reject" : "retain") << " |\n";
    } else {
      out << " | | | | error: " << row.error << " |\n";
    }
  }
}

}  // namespace pwm
