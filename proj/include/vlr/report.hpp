#pragma once

#include <string>
#include <vector>

#include "vlr/core.hpp"

namespace vlr {

// Shortest round-trip decimal form; identical across runs by construction.
std::string format_double(double v);

// Tiny deterministic CSV assembler: fixed column set, fixed row order,
// LF line endings, no timestamps.
class Csv {
public:
  explicit Csv(std::vector<std::string> columns);

  void begin_row();
  void cell(double v);
  void cell(int v);
  void cell(std::size_t v);
  void cell(const std::string& v);
  void end_row();

  const std::string& text() const { return text_; }
  void save(const std::string& path) const;

private:
  std::size_t ncols_ = 0, in_row_ = 0;
  bool open_ = false;
  std::string text_;
};

void write_text_file(const std::string& path, const std::string& text);

} // namespace vlr
