#include "rdsis/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "rdsis/errors.hpp"

namespace rdsis {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    return os;
}

void write_cell(std::ostream& os, const std::optional<double>& x) {
    if (x) os << format_double(*x);
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::optional<double> parse_cell(const std::string& cell) {
    if (cell.empty()) return std::nullopt;
    char* end = nullptr;
    const double x = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size()) throw IoError("non-numeric CSV cell '" + cell + "'");
    return x;
}

void write_ode_csv(std::ostream& os, const std::vector<OdeCsvRow>& rows) {
    os << "t,u,v,N,V_theta,V_endemic\n";
    for (const auto& r : rows) {
        os << format_double(r.t) << ',' << format_double(r.u) << ',' << format_double(r.v) << ','
           << format_double(r.u + r.v) << ',';
        write_cell(os, r.v_theta);
        os << ',';
        write_cell(os, r.v_endemic);
        os << '\n';
    }
}

void write_pde_csv(std::ostream& os, const std::vector<PdeSnapshot>& snapshots, std::size_t stride) {
    os << "t,x,u,v\n";
    if (stride == 0) stride = 1;
    for (std::size_t k = 0; k < snapshots.size(); ++k) {
        if (k % stride != 0 && k + 1 != snapshots.size()) continue;
        const auto& s = snapshots[k];
        for (std::size_t i = 0; i < s.u.size(); ++i) {
            os << format_double(s.t) << ',' << format_double(s.u.x(i)) << ',' << format_double(s.u[i]) << ','
               << format_double(s.v[i]) << '\n';
        }
    }
}

void write_table_csv(std::ostream& os, const CsvTable& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            write_cell(os, row[i]);
        }
        os << '\n';
    }
}

void write_ode_csv(const std::string& path, const std::vector<OdeCsvRow>& rows) {
    auto os = open_out(path);
    write_ode_csv(os, rows);
}

void write_pde_csv(const std::string& path, const std::vector<PdeSnapshot>& snapshots, std::size_t stride) {
    auto os = open_out(path);
    write_pde_csv(os, snapshots, stride);
}

void write_table_csv(const std::string& path, const CsvTable& table) {
    auto os = open_out(path);
    write_table_csv(os, table);
}

CsvTable read_csv(std::istream& is) {
    CsvTable t;
    std::string line;
    if (!std::getline(is, line)) return t;
    t.header = split(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        CsvRow row;
        for (const auto& cell : split(line)) row.push_back(parse_cell(cell));
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "' for reading");
    return read_csv(is);
}

}  // namespace rdsis
