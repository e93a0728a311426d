#include "wsinterp/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wsinterp::csv {

std::string format(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

Writer::Writer(std::vector<std::string> header) : columns_(header.size())
{
    if (header.empty()) throw std::invalid_argument("csv::Writer: empty header");
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) text_ += ',';
        text_ += header[i];
    }
    text_ += '\n';
}

void Writer::row(std::initializer_list<double> values)
{
    row(std::vector<double>(values));
}

void Writer::row(const std::vector<double>& values)
{
    if (values.size() != columns_) throw std::invalid_argument("csv::Writer: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) text_ += ',';
        text_ += format(values[i]);
    }
    text_ += '\n';
}

void Writer::row(const std::string& label, const std::vector<double>& values)
{
    if (values.size() + 1 != columns_)
        throw std::invalid_argument("csv::Writer: column count mismatch");
    text_ += label;
    for (double v : values) {
        text_ += ',';
        text_ += format(v);
    }
    text_ += '\n';
}

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool to_double(const std::string& s, double& out)
{
    if (s.empty()) return false;
    // from_chars rejects a leading '+'
    const char* first = s.data() + (s[0] == '+' ? 1 : 0);
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

Table parse(const std::string& text)
{
    Table table;
    std::stringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto cells = split(t);
        std::vector<double> row(cells.size());
        bool numeric = true;
        for (std::size_t i = 0; i < cells.size(); ++i) numeric = numeric && to_double(cells[i], row[i]);
        if (!numeric) {
            if (first) {
                table.header = cells;
                first = false;
                continue;
            }
            throw std::invalid_argument("csv: non-numeric value on line " + std::to_string(lineno));
        }
        first = false;
        if (!table.rows.empty() && table.rows.front().size() != row.size())
            throw std::invalid_argument("csv: inconsistent column count on line " +
                                        std::to_string(lineno));
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace wsinterp::csv
