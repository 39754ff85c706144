#include "resummap/csv_io.hpp"

#include <cstdio>

namespace resummap {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path) : out_(&file_) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    file_.open(path);
    if (!file_) throw Error("cannot open output file: " + path.string());
}

CsvWriter::CsvWriter(std::ostream& out) : out_(&out) {}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) *out_ << ',';
        *out_ << columns[i];
    }
    *out_ << '\n';
}

CsvWriter& CsvWriter::field(double v) { return field(format_double(v)); }

CsvWriter& CsvWriter::field(long v) { return field(std::to_string(v)); }

CsvWriter& CsvWriter::field(const std::string& v) {
    if (row_started_) *out_ << ',';
    *out_ << v;
    row_started_ = true;
    return *this;
}

void CsvWriter::end_row() {
    *out_ << '\n';
    row_started_ = false;
}

} // namespace resummap
