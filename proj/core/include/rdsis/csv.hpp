#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rdsis/ode.hpp"
#include "rdsis/pde.hpp"

namespace rdsis {

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

/// Parses a cell written by format_double; empty cells map to nullopt.
std::optional<double> parse_cell(const std::string& cell);

using CsvRow = std::vector<std::optional<double>>;

struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;
};

/// One row of the ODE trajectory file: t,u,v,N,V_theta,V_endemic.
struct OdeCsvRow {
    double t = 0.0;
    double u = 0.0;
    double v = 0.0;
    std::optional<double> v_theta;
    std::optional<double> v_endemic;
};

void write_ode_csv(std::ostream& os, const std::vector<OdeCsvRow>& rows);
/// Long format t,x,u,v; one row per grid node per snapshot.
void write_pde_csv(std::ostream& os, const std::vector<PdeSnapshot>& snapshots, std::size_t stride = 1);
void write_table_csv(std::ostream& os, const CsvTable& table);

/// File variants; throw IoError when the path is not writable.
void write_ode_csv(const std::string& path, const std::vector<OdeCsvRow>& rows);
void write_pde_csv(const std::string& path, const std::vector<PdeSnapshot>& snapshots, std::size_t stride = 1);
void write_table_csv(const std::string& path, const CsvTable& table);

/// Numeric CSV with one header line. Throws IoError on unreadable input or
/// non-numeric cells.
CsvTable read_csv(std::istream& is);
CsvTable read_csv(const std::string& path);

}  // namespace rdsis
