#include "bqha/serialize.hpp"

#include <bit>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace bqha {

namespace {

static_assert(std::endian::native == std::endian::little, "operator files are little-endian");

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::runtime_error file_error(const std::filesystem::path& p, const std::string& what) {
  return std::runtime_error(p.string() + ": " + what);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_operator(const OperatorMatrix& s, const std::filesystem::path& path) {
  const BasisSpec& b = s.basis();
  const int dim = b.dim();
  if (path.extension() == ".csv") {
    std::ofstream out(path);
    if (!out) throw file_error(path, "cannot open for writing");
    out << "n,D,ordering\n" << b.n() << ',' << b.max_degree() << ',' << BasisSpec::kOrdering << '\n';
    out << "row,col,re,im\n";
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        out << i << ',' << j << ',' << format_double(s(i, j).real()) << ',' << format_double(s(i, j).imag()) << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw file_error(path, "cannot open for writing");
  out << "bqha-operator " << b.n() << ' ' << b.max_degree() << ' ' << BasisSpec::kOrdering << '\n';
  std::vector<double> buf(static_cast<std::size_t>(dim) * dim * 2);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      buf[2 * (static_cast<std::size_t>(i) * dim + j)] = s(i, j).real();
      buf[2 * (static_cast<std::size_t>(i) * dim + j) + 1] = s(i, j).imag();
    }
  }
  out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(double)));
}

OperatorMatrix read_operator(const std::filesystem::path& path) {
  if (path.extension() == ".csv") {
    std::ifstream in(path);
    if (!in) throw file_error(path, "cannot open");
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    const auto head = split(line, ',');
    if (head.size() != 3 || head[2] != BasisSpec::kOrdering) throw file_error(path, "bad operator header");
    const BasisSpec basis(std::stoi(head[0]), std::stoi(head[1]));
    CMatrix m = CMatrix::Zero(basis.dim(), basis.dim());
    std::getline(in, line);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto f = split(line, ',');
      if (f.size() != 4) throw file_error(path, "bad operator row");
      const int i = std::stoi(f[0]);
      const int j = std::stoi(f[1]);
      if (i < 0 || j < 0 || i >= basis.dim() || j >= basis.dim()) throw file_error(path, "index out of range");
      m(i, j) = cplx(std::stod(f[2]), std::stod(f[3]));
    }
    return {basis, m};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw file_error(path, "cannot open");
  std::string line;
  std::getline(in, line);
  const auto head = split(line, ' ');
  if (head.size() != 4 || head[0] != "bqha-operator" || head[3] != BasisSpec::kOrdering)
    throw file_error(path, "bad operator header");
  const BasisSpec basis(std::stoi(head[1]), std::stoi(head[2]));
  const int dim = basis.dim();
  std::vector<double> buf(static_cast<std::size_t>(dim) * dim * 2);
  in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(double)));
  if (in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(double))) throw file_error(path, "truncated data");
  CMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      m(i, j) = cplx(buf[2 * (static_cast<std::size_t>(i) * dim + j)], buf[2 * (static_cast<std::size_t>(i) * dim + j) + 1]);
  return {basis, m};
}

void write_levels(const CVector& levels, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw file_error(path, "cannot open for writing");
  out << "k,re,im\n";
  for (int k = 0; k < levels.size(); ++k)
    out << k << ',' << format_double(levels(k).real()) << ',' << format_double(levels(k).imag()) << '\n';
}

CVector read_levels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw file_error(path, "cannot open");
  std::string line;
  std::getline(in, line);
  std::vector<cplx> v;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 3 || std::stoi(f[0]) != static_cast<int>(v.size())) throw file_error(path, "bad level row");
    v.emplace_back(std::stod(f[1]), std::stod(f[2]));
  }
  return Eigen::Map<CVector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

void write_radial_operator(const RadialOperator& s, const std::filesystem::path& path) { write_levels(s.levels(), path); }

RadialOperator read_radial_operator(const std::filesystem::path& path, int n) {
  CVector lv = read_levels(path);
  if (lv.size() == 0) throw file_error(path, "no levels");
  const int d = static_cast<int>(lv.size()) - 1;
  return {BasisSpec(n, d), std::move(lv)};
}

}  // namespace bqha
