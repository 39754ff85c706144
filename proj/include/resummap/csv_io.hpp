#pragma once

#include <filesystem>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "resummap/errors.hpp"

namespace resummap {

// CSV writer with the project-wide numeric format: header row, '.' decimal
// point, 17 significant digits, '\n' line endings.
class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path);
    explicit CsvWriter(std::ostream& out);

    void header(const std::vector<std::string>& columns);

    CsvWriter& field(double v);
    CsvWriter& field(long v);
    CsvWriter& field(const std::string& v);
    void end_row();

private:
    std::ofstream file_;
    std::ostream* out_;
    bool row_started_ = false;
};

std::string format_double(double v);

} // namespace resummap
