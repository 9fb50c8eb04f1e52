#pragma once

#include <filesystem>
#include <string>

#include "bqha/operators.hpp"
#include "bqha/radialcalc.hpp"

namespace bqha {

// Operator files come in two encodings with the same content:
//   binary: one text line "bqha-operator <n> <D> grlex\n" followed by dim*dim
//           (re, im) pairs of little-endian doubles in row-major order;
//   CSV:    header "n,D,ordering", one row with those values, then a
//           "row,col,re,im" table.
// The encoding is chosen by the file extension (.csv or anything else).
void write_operator(const OperatorMatrix& s, const std::filesystem::path& path);
OperatorMatrix read_operator(const std::filesystem::path& path);

// CSV rows (k, re, im) under a "k,re,im" header.
void write_levels(const CVector& levels, const std::filesystem::path& path);
CVector read_levels(const std::filesystem::path& path);

void write_radial_operator(const RadialOperator& s, const std::filesystem::path& path);
RadialOperator read_radial_operator(const std::filesystem::path& path, int n);

// printf("%.17g")
std::string format_double(double v);

}  // namespace bqha
