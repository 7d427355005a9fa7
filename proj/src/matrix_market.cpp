#include "helmdg/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace helmdg {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

}  // namespace

void write_matrix_market(std::ostream& out, const SparseComplexMatrix& a) {
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << a.size() << ' ' << a.size() << ' ' << a.nnz() << '\n';
  char line[96];
  for (Index j = 0; j < a.size(); ++j) {
    const auto rows = a.column_rows(j);
    const auto vals = a.column_values(j);
    for (std::size_t p = 0; p < rows.size(); ++p) {
      std::snprintf(line, sizeof line, "%d %d %.17g %.17g\n", rows[p] + 1, j + 1, vals[p].real(),
                    vals[p].imag());
      out << line;
    }
  }
}

void write_matrix_market(const std::filesystem::path& path, const SparseComplexMatrix& a) {
  auto out = open_out(path);
  write_matrix_market(out, a);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

SparseComplexMatrix read_matrix_market(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("MatrixMarket: empty input");
  std::istringstream hs(header);
  std::string banner, object, format, field, symmetry;
  hs >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate") {
    throw std::runtime_error("MatrixMarket: expected a coordinate matrix header, got '" + header + "'");
  }
  field = lower(field);
  symmetry = lower(symmetry);
  if (field != "complex" && field != "real" && field != "integer" && field != "pattern") {
    throw std::runtime_error("MatrixMarket: unsupported field '" + field + "'");
  }
  if (symmetry != "general" && symmetry != "symmetric") {
    throw std::runtime_error("MatrixMarket: unsupported symmetry '" + symmetry + "'");
  }

  std::string line;
  do {
    if (!std::getline(in, line)) throw std::runtime_error("MatrixMarket: missing size line");
  } while (line.empty() || line[0] == '%');

  long long rows = 0, cols = 0, entries = 0;
  std::istringstream ss(line);
  if (!(ss >> rows >> cols >> entries)) throw std::runtime_error("MatrixMarket: bad size line");
  if (rows != cols) throw std::runtime_error("MatrixMarket: matrix is not square");

  Triplets t(static_cast<Index>(rows));
  t.reserve(static_cast<std::size_t>(entries) * (symmetry == "symmetric" ? 2 : 1));
  for (long long e = 0; e < entries; ++e) {
    long long i = 0, j = 0;
    double re = 1.0, im = 0.0;
    if (!(in >> i >> j)) throw std::runtime_error("MatrixMarket: truncated entry list");
    if (field == "complex") {
      if (!(in >> re >> im)) throw std::runtime_error("MatrixMarket: bad complex entry");
    } else if (field != "pattern") {
      if (!(in >> re)) throw std::runtime_error("MatrixMarket: bad real entry");
    }
    if (i < 1 || j < 1 || i > rows || j > cols) throw std::runtime_error("MatrixMarket: index out of range");
    t.add(static_cast<Index>(i - 1), static_cast<Index>(j - 1), {re, im});
    if (symmetry == "symmetric" && i != j) t.add(static_cast<Index>(j - 1), static_cast<Index>(i - 1), {re, im});
  }
  return compress(t);
}

SparseComplexMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_matrix_market(in);
}

void write_vector_market(const std::filesystem::path& path, const std::vector<Complex>& v) {
  auto out = open_out(path);
  out << "%%MatrixMarket matrix array complex general\n" << v.size() << " 1\n";
  char line[64];
  for (const Complex& z : v) {
    std::snprintf(line, sizeof line, "%.17g %.17g\n", z.real(), z.imag());
    out << line;
  }
}

void write_permutation(const std::filesystem::path& path, const Permutation& p) {
  auto out = open_out(path);
  for (Index k = 0; k < p.size(); ++k) out << p[k] << '\n';
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

Permutation read_permutation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<Index> order;
  long long v = 0;
  while (in >> v) order.push_back(static_cast<Index>(v));
  if (!in.eof()) throw std::runtime_error("permutation file: non-integer token in " + path.string());
  return Permutation(std::move(order));
}

}  // namespace helmdg
