#include "helmdg/spy.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace helmdg {

void spy_svg(std::ostream& out, const SparseComplexMatrix& a, const std::string& title) {
  const Index n = a.size();
  if (n < 1) throw std::invalid_argument("spy_svg: empty matrix");

  constexpr double plot = 480.0;
  constexpr double margin = 40.0;
  const double cell = plot / n;
  const double width = plot + 2 * margin;
  const double height = plot + 2 * margin + 20.0;

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n",
                width, height, width, height);
  out << buf;
  out << "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    std::snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" "
                  "text-anchor=\"middle\">", width / 2);
    out << buf << title << "</text>\n";
  }
  std::snprintf(buf, sizeof buf,
                "<rect class=\"frame\" x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                "stroke=\"black\"/>\n",
                margin, margin, plot, plot);
  out << buf;

  // Marks never shrink below a visible size on large matrices.
  const double mark = std::max(cell, 0.6);
  out << "<g class=\"nz\" fill=\"#1f3fbf\">\n";
  // One rect per run of consecutive stored rows in a column.
  for (Index j = 0; j < n; ++j) {
    const auto rows = a.column_rows(j);
    for (std::size_t p = 0; p < rows.size();) {
      std::size_t q = p + 1;
      while (q < rows.size() && rows[q] == rows[q - 1] + 1) ++q;
      const double run = static_cast<double>(q - p);
      std::snprintf(buf, sizeof buf, "<rect x=\"%.3f\" y=\"%.3f\" width=\"%.3f\" height=\"%.3f\"/>\n",
                    margin + j * cell, margin + rows[p] * cell, mark, std::max(run * cell, mark));
      out << buf;
      p = q;
    }
  }
  out << "</g>\n";

  std::snprintf(buf, sizeof buf,
                "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"13\" "
                "text-anchor=\"middle\">nz = %lld</text>\n",
                width / 2, margin + plot + 26.0, static_cast<long long>(a.nnz()));
  out << buf;
  out << "</svg>\n";
}

void spy_svg(const std::filesystem::path& path, const SparseComplexMatrix& a, const std::string& title) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  spy_svg(out, a, title);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace helmdg
