#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace wsinterp::csv {

/// 17 significant digits, enough to round-trip a double.
std::string format(double value);

/// Builds a CSV document in memory; the header row is always present.
class Writer {
public:
    explicit Writer(std::vector<std::string> header);

    void row(std::initializer_list<double> values);
    void row(const std::vector<double>& values);
    /// First column is a text label.
    void row(const std::string& label, const std::vector<double>& values);

    std::size_t columns() const noexcept { return columns_; }
    const std::string& str() const noexcept { return text_; }

private:
    std::size_t columns_;
    std::string text_;
};

/// Numeric rows of a CSV document. A first row that does not parse as
/// numbers is returned in `header`. Blank lines and lines starting with '#'
/// are skipped.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

Table parse(const std::string& text);
std::string read_file(const std::string& path);

}  // namespace wsinterp::csv
