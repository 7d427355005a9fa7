#include "helmdg/lu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace helmdg {

ZeroPivot::ZeroPivot(Index column, double magnitude, const std::string& context)
    : std::runtime_error((context.empty() ? std::string() : context + ": ") + "zero pivot in column " +
                         std::to_string(column) + " (|pivot| = " + std::to_string(magnitude) + ")"),
      column_(column),
      magnitude_(magnitude) {}

namespace {

struct Workspace {
  explicit Workspace(Index n) : xi(2 * static_cast<std::size_t>(n)), pstack(n), mark(n, -1), x(n) {}
  std::vector<Index> xi;
  std::vector<Offset> pstack;
  std::vector<Index> mark;
  std::vector<Complex> x;
};

// Reach of A(:,k) in the graph of the finished L columns. Pivoted row i
// leads to the rows of L(:, pinv[i]). Output in xi[top..n), topologically
// ordered.
Index reach(const SparseComplexMatrix& a, Index k, const std::vector<Offset>& lp, const std::vector<Index>& li,
            const std::vector<Index>& pinv, Workspace& w) {
  const Index n = a.size();
  Index top = n;
  for (Index start : a.column_rows(k)) {
    if (w.mark[start] == k) continue;
    Index head = 0;
    w.xi[0] = start;
    while (head >= 0) {
      const Index j = w.xi[head];
      const Index jnew = pinv[j];
      if (w.mark[j] != k) {
        w.mark[j] = k;
        w.pstack[head] = jnew < 0 ? 0 : lp[jnew];
      }
      bool done = true;
      const Offset end = jnew < 0 ? 0 : lp[jnew + 1];
      for (Offset p = w.pstack[head]; p < end; ++p) {
        const Index i = li[p];
        if (w.mark[i] == k) continue;
        w.pstack[head] = p;
        w.xi[++head] = i;
        done = false;
        break;
      }
      if (done) {
        --head;
        w.xi[n + --top] = j;
      }
    }
  }
  return top;
}

void sort_columns(Index n, const std::vector<Offset>& ptr, std::vector<Index>& idx, std::vector<Complex>& val) {
  std::vector<std::pair<Index, Complex>> buf;
  for (Index j = 0; j < n; ++j) {
    const Offset b = ptr[j], e = ptr[j + 1];
    if (std::is_sorted(idx.begin() + b, idx.begin() + e)) continue;
    buf.clear();
    for (Offset p = b; p < e; ++p) buf.emplace_back(idx[p], val[p]);
    std::sort(buf.begin(), buf.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (Offset p = b; p < e; ++p) {
      idx[p] = buf[p - b].first;
      val[p] = buf[p - b].second;
    }
  }
}

}  // namespace

LuFactors lu_numeric(const SparseComplexMatrix& a, const LuOptions& options) {
  const Index n = a.size();
  const double tol = options.pivot_tolerance * a.max_abs();

  std::vector<Offset> lp{0}, up{0};
  std::vector<Index> li, ui;
  std::vector<Complex> lx, ux;
  lp.reserve(n + 1);
  up.reserve(n + 1);
  if (options.reserve_hint > 0) {
    const auto half = static_cast<std::size_t>(options.reserve_hint / 2 + n);
    li.reserve(half);
    lx.reserve(half);
    ui.reserve(half);
    ux.reserve(half);
  }

  std::vector<Index> pinv(n, -1);
  Workspace w(n);

  for (Index k = 0; k < n; ++k) {
    const Index top = reach(a, k, lp, li, pinv, w);
    for (Index p = top; p < n; ++p) w.x[w.xi[n + p]] = 0.0;
    const auto rows = a.column_rows(k);
    const auto vals = a.column_values(k);
    for (std::size_t p = 0; p < rows.size(); ++p) w.x[rows[p]] = vals[p];

    Index pivot_row = -1;
    double best = -1.0;
    for (Index p = top; p < n; ++p) {
      const Index i = w.xi[n + p];
      const Index jnew = pinv[i];
      if (jnew < 0) {
        const double mag = std::abs(w.x[i]);
        if (mag > best) {
          best = mag;
          pivot_row = i;
        }
        continue;
      }
      ui.push_back(jnew);
      ux.push_back(w.x[i]);
      const Complex xj = w.x[i];
      for (Offset q = lp[jnew]; q < lp[jnew + 1]; ++q) w.x[li[q]] -= lx[q] * xj;
    }

    if (!options.threshold_pivoting || (w.mark[k] == k && pinv[k] < 0 &&
                                        std::abs(w.x[k]) >= options.pivot_threshold * best)) {
      pivot_row = (w.mark[k] == k && pinv[k] < 0) ? k : -1;
    }
    if (pivot_row < 0) throw ZeroPivot(k, 0.0);
    const Complex pivot = w.x[pivot_row];
    if (std::abs(pivot) <= tol) throw ZeroPivot(k, std::abs(pivot));

    pinv[pivot_row] = k;
    ui.push_back(k);
    ux.push_back(pivot);
    up.push_back(static_cast<Offset>(ui.size()));

    for (Index p = top; p < n; ++p) {
      const Index i = w.xi[n + p];
      if (pinv[i] >= 0) continue;
      li.push_back(i);
      lx.push_back(w.x[i] / pivot);
    }
    lp.push_back(static_cast<Offset>(li.size()));
  }

  for (Index& r : li) r = pinv[r];
  sort_columns(n, lp, li, lx);
  sort_columns(n, up, ui, ux);

  LuFactors f;
  f.row_order.assign(n, 0);
  for (Index i = 0; i < n; ++i) f.row_order[pinv[i]] = i;
  f.combined_nnz = static_cast<Offset>(li.size() + ui.size());
  f.L = SparseComplexMatrix(n, std::move(lp), std::move(li), std::move(lx));
  f.U = SparseComplexMatrix(n, std::move(up), std::move(ui), std::move(ux));
  return f;
}

std::vector<Complex> solve(const LuFactors& f, const std::vector<Complex>& b) {
  const Index n = f.size();
  if (static_cast<Index>(b.size()) != n) throw std::invalid_argument("solve: dimension mismatch");
  std::vector<Complex> y(n);
  for (Index k = 0; k < n; ++k) y[k] = b[f.row_order[k]];
  for (Index j = 0; j < n; ++j) {
    const auto rows = f.L.column_rows(j);
    const auto vals = f.L.column_values(j);
    for (std::size_t p = 0; p < rows.size(); ++p) y[rows[p]] -= vals[p] * y[j];
  }
  for (Index j = n - 1; j >= 0; --j) {
    const auto rows = f.U.column_rows(j);
    const auto vals = f.U.column_values(j);
    y[j] /= vals.back();
    for (std::size_t p = 0; p + 1 < rows.size(); ++p) y[rows[p]] -= vals[p] * y[j];
  }
  return y;
}

SparseComplexMatrix combined_factor(const LuFactors& f) {
  const Index n = f.size();
  std::vector<Offset> ptr{0};
  std::vector<Index> idx;
  std::vector<Complex> val;
  ptr.reserve(n + 1);
  idx.reserve(static_cast<std::size_t>(f.combined_nnz));
  val.reserve(static_cast<std::size_t>(f.combined_nnz));
  for (Index j = 0; j < n; ++j) {
    for (const auto* m : {&f.U, &f.L}) {
      const auto rows = m->column_rows(j);
      const auto vals = m->column_values(j);
      idx.insert(idx.end(), rows.begin(), rows.end());
      val.insert(val.end(), vals.begin(), vals.end());
    }
    ptr.push_back(static_cast<Offset>(idx.size()));
  }
  return SparseComplexMatrix(n, std::move(ptr), std::move(idx), std::move(val));
}

namespace {

// max_i |(P A)(i, j) - (L U)(i, j)| for one column; `acc` and `touched` are
// caller-owned scratch, `acc` all zero on entry and exit.
double residual_column(const SparseComplexMatrix& a, const LuFactors& f, const std::vector<Index>& row_pos, Index j,
                       std::vector<Complex>& acc, std::vector<char>& seen, std::vector<Index>& touched) {
  touched.clear();
  auto touch = [&](Index r) {
    if (!seen[r]) {
      seen[r] = 1;
      touched.push_back(r);
    }
  };
  const auto urows = f.U.column_rows(j);
  const auto uvals = f.U.column_values(j);
  for (std::size_t p = 0; p < urows.size(); ++p) {
    const Index k = urows[p];
    touch(k);
    acc[k] += uvals[p];
    const auto lrows = f.L.column_rows(k);
    const auto lvals = f.L.column_values(k);
    for (std::size_t q = 0; q < lrows.size(); ++q) {
      touch(lrows[q]);
      acc[lrows[q]] += lvals[q] * uvals[p];
    }
  }
  const auto arows = a.column_rows(j);
  const auto avals = a.column_values(j);
  for (std::size_t p = 0; p < arows.size(); ++p) {
    const Index r = row_pos[arows[p]];
    touch(r);
    acc[r] -= avals[p];
  }
  double worst = 0.0;
  for (Index r : touched) {
    worst = std::max(worst, std::abs(acc[r]));
    acc[r] = 0.0;
    seen[r] = 0;
  }
  return worst;
}

std::vector<Index> row_positions(const LuFactors& f) {
  std::vector<Index> pos(f.row_order.size());
  for (std::size_t k = 0; k < pos.size(); ++k) pos[f.row_order[k]] = static_cast<Index>(k);
  return pos;
}

void check_dims(const SparseComplexMatrix& a, const LuFactors& f) {
  if (a.size() != f.size()) throw std::invalid_argument("lu_residual_max: dimension mismatch");
}

}  // namespace

double lu_residual_max(const SparseComplexMatrix& a, const LuFactors& f) {
  check_dims(a, f);
  const Index n = a.size();
  const std::vector<Index> pos = row_positions(f);
  double worst = 0.0;
#pragma omp parallel reduction(max : worst)
  {
    std::vector<Complex> acc(n);
    std::vector<char> seen(n, 0);
    std::vector<Index> touched;
#pragma omp for schedule(dynamic, 64)
    for (Index j = 0; j < n; ++j) {
      worst = std::max(worst, residual_column(a, f, pos, j, acc, seen, touched));
    }
  }
  return worst;
}

double lu_residual_max_serial(const SparseComplexMatrix& a, const LuFactors& f) {
  check_dims(a, f);
  const Index n = a.size();
  const std::vector<Index> pos = row_positions(f);
  std::vector<Complex> acc(n);
  std::vector<char> seen(n, 0);
  std::vector<Index> touched;
  double worst = 0.0;
  for (Index j = 0; j < n; ++j) worst = std::max(worst, residual_column(a, f, pos, j, acc, seen, touched));
  return worst;
}

FillReport fill_report(const SparseComplexMatrix& a, const LuFactors& f) {
  FillReport r;
  r.input_nnz = a.nnz();
  r.factor_nnz = f.combined_nnz;
  r.total_entries = static_cast<double>(a.size()) * static_cast<double>(a.size());
  if (r.total_entries > 0) {
    r.fill_percent = 100.0 * static_cast<double>(r.factor_nnz) / r.total_entries;
    r.input_percent = 100.0 * static_cast<double>(r.input_nnz) / r.total_entries;
  }
  return r;
}

}  // namespace helmdg
