#include "gravwave/io/table_writer.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include <json.hpp>

#include "gravwave/errors.hpp"

namespace gravwave::io {
namespace {

std::string cell(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TableWriter::TableWriter(const std::filesystem::path& path, const std::string& quantity, const std::string& units,
                         const std::string& fingerprint, const std::vector<std::string>& columns)
    : out_(&std::cout), columns_(columns.size()) {
  if (!path.empty()) {
    file_.open(path, std::ios::trunc);
    if (!file_) throw IoError("cannot write " + path.string());
    out_ = &file_;
  }
  *out_ << "# quantity: " << quantity << '\n' << "# units: " << units << '\n' << "# config: " << fingerprint << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) *out_ << (i ? "," : "") << columns[i];
  *out_ << '\n';
}

void TableWriter::row(std::initializer_list<double> values) { row(std::vector<double>(values)); }

void TableWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_) throw IoError("table row has the wrong number of columns");
  for (std::size_t i = 0; i < values.size(); ++i) *out_ << (i ? "," : "") << cell(values[i]);
  *out_ << '\n';
}

void TableWriter::close() {
  out_->flush();
  if (file_.is_open()) file_.close();
  if (out_->fail()) throw IoError("failed writing table");
}

JsonLinesWriter::JsonLinesWriter(const std::filesystem::path& path, const std::string& quantity,
                                 const std::string& fingerprint)
    : out_(path, std::ios::trunc) {
  if (!out_) throw IoError("cannot write " + path.string());
  out_ << nlohmann::json{{"quantity", quantity}, {"config", fingerprint}}.dump() << '\n';
}

void JsonLinesWriter::write(const std::string& record) { out_ << record << '\n'; }

void JsonLinesWriter::close() {
  out_.close();
  if (out_.fail()) throw IoError("failed writing JSON lines");
}

}  // namespace gravwave::io
