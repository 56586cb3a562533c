#include "vlr/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace vlr {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

Csv::Csv(std::vector<std::string> columns) : ncols_(columns.size()) {
  if (columns.empty()) fail(error_kind::config, "Csv: no columns");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) text_ += ',';
    text_ += columns[i];
  }
  text_ += '\n';
}

void Csv::begin_row() {
  if (open_) fail(error_kind::config, "Csv: row already open");
  open_ = true;
  in_row_ = 0;
}

void Csv::cell(double v) { cell(format_double(v)); }
void Csv::cell(int v) { cell(std::to_string(v)); }
void Csv::cell(std::size_t v) { cell(std::to_string(v)); }

void Csv::cell(const std::string& v) {
  if (!open_ || in_row_ >= ncols_) fail(error_kind::config, "Csv: cell outside row");
  if (in_row_) text_ += ',';
  text_ += v;
  ++in_row_;
}

void Csv::end_row() {
  if (!open_ || in_row_ != ncols_) fail(error_kind::config, "Csv: wrong cell count");
  open_ = false;
  text_ += '\n';
}

void Csv::save(const std::string& path) const { write_text_file(path, text_); }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) fail(error_kind::config, "cannot open for writing: " + path);
  os.write(text.data(), (std::streamsize)text.size());
  if (!os) fail(error_kind::config, "short write: " + path);
}

} // namespace vlr
