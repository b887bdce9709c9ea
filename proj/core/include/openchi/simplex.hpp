#pragma once

#include <vector>

namespace openchi::detail {

// Two-phase primal simplex over an ordered field, Bland's rule.
// Num is either an exact rational (sign is exact, termination is
// guaranteed) or double (sign uses a small epsilon; callers must treat
// IterationLimit as "no answer").
//
// Problem: minimize c.x subject to row constraints a.x <= b or a.x = b,
// variables either free or bounded below by zero.
template <class Num, class Ops>
class Simplex {
public:
  struct Row {
    std::vector<Num> a;
    Num b;
    bool eq = false;
  };

  struct Input {
    int nvars = 0;
    std::vector<char> nonneg;     // per variable
    std::vector<Row> rows;
    std::vector<Num> objective;   // empty: pure feasibility
  };

  enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

  struct Output {
    Status status = Status::IterationLimit;
    std::vector<Num> x;
    Num objective_value{};
    // Infeasible: multipliers with row_mult >= 0 on inequality rows,
    // free on equation rows, bound_mult >= 0 per nonneg variable, with
    //   sum_r row_mult[r] * a_r - sum_k bound_mult[k] * e_k = 0
    //   sum_r row_mult[r] * b_r < 0
    std::vector<Num> row_mult;
    std::vector<Num> bound_mult;
  };

  static Output solve(const Input& in, long max_pivots);

private:
  struct Tableau;
};

template <class Num, class Ops>
struct Simplex<Num, Ops>::Tableau {
  int m = 0;                       // rows
  int ncols = 0;                   // structural + slack + artificial
  int art0 = 0;                    // first artificial column
  std::vector<std::vector<Num>> t; // m rows of ncols + 1 (rhs last)
  std::vector<Num> z;              // reduced costs + objective (last)
  std::vector<int> basis;          // basic column per row

  void pivot(int pr, int pc) {
    Num inv = t[pr][pc];
    for (int c = 0; c <= ncols; ++c) t[pr][c] = t[pr][c] / inv;
    for (int r = 0; r < m; ++r) {
      if (r == pr || Ops::sign(t[r][pc]) == 0) continue;
      Num f = t[r][pc];
      for (int c = 0; c <= ncols; ++c) t[r][c] = t[r][c] - f * t[pr][c];
    }
    if (Ops::sign(z[pc]) != 0) {
      Num f = z[pc];
      for (int c = 0; c <= ncols; ++c) z[c] = z[c] - f * t[pr][c];
    }
    basis[pr] = pc;
  }

  // Bland: entering = least column with negative reduced cost,
  // leaving = least-ratio row breaking ties by least basis column.
  // Returns 0 optimal, 1 pivoted, -1 unbounded.
  int step(int usable_cols) {
    int pc = -1;
    for (int c = 0; c < usable_cols; ++c)
      if (Ops::sign(z[c]) < 0) { pc = c; break; }
    if (pc < 0) return 0;
    int pr = -1;
    for (int r = 0; r < m; ++r) {
      if (Ops::sign(t[r][pc]) <= 0) continue;
      if (pr < 0) { pr = r; continue; }
      Num lhs = t[r][ncols] * t[pr][pc];
      Num rhs = t[pr][ncols] * t[r][pc];
      int cmp = Ops::sign(lhs - rhs);
      if (cmp < 0 || (cmp == 0 && basis[r] < basis[pr])) pr = r;
    }
    if (pr < 0) return -1;
    pivot(pr, pc);
    return 1;
  }
};

template <class Num, class Ops>
typename Simplex<Num, Ops>::Output Simplex<Num, Ops>::solve(const Input& in,
                                                            long max_pivots) {
  const int n = in.nvars;
  Output out;

  // column layout: one column per nonneg variable, a +/- pair per free
  // variable, then slacks, then artificials
  std::vector<int> pos_col(n), neg_col(n, -1);
  int c = 0;
  for (int k = 0; k < n; ++k) {
    pos_col[k] = c++;
    if (!in.nonneg[k]) neg_col[k] = c++;
  }
  int nslack = 0;
  for (const auto& row : in.rows)
    if (!row.eq) ++nslack;

  Tableau tb;
  tb.m = static_cast<int>(in.rows.size());
  int slack0 = c;
  tb.art0 = slack0 + nslack;
  tb.ncols = tb.art0 + tb.m;
  tb.t.assign(tb.m, std::vector<Num>(tb.ncols + 1, Num(0)));
  tb.basis.assign(tb.m, -1);

  std::vector<int> row_sign(tb.m, 1);
  int si = 0;
  for (int r = 0; r < tb.m; ++r) {
    const auto& row = in.rows[r];
    int sgn_b = Ops::sign(row.b);
    int s = sgn_b < 0 ? -1 : 1;
    row_sign[r] = s;
    for (int k = 0; k < n; ++k) {
      Num v = row.a[k] * Num(s);
      tb.t[r][pos_col[k]] = v;
      if (neg_col[k] >= 0) tb.t[r][neg_col[k]] = Num(0) - v;
    }
    if (!row.eq) tb.t[r][slack0 + si++] = Num(s);
    tb.t[r][tb.art0 + r] = Num(1);
    tb.t[r][tb.ncols] = row.b * Num(s);
    tb.basis[r] = tb.art0 + r;
  }

  // phase 1: minimize the artificial total
  tb.z.assign(tb.ncols + 1, Num(0));
  for (int r = 0; r < tb.m; ++r)
    for (int col = 0; col <= tb.ncols; ++col)
      if (col < tb.art0 || col == tb.ncols) tb.z[col] = tb.z[col] - tb.t[r][col];

  long pivots = 0;
  auto run = [&](int usable) -> int {
    while (true) {
      if (max_pivots >= 0 && pivots++ > max_pivots) return 2;
      int st = tb.step(usable);
      if (st != 1) return st;
    }
  };

  int st = run(tb.art0);  // artificials never re-enter
  if (st != 0) { out.status = Status::IterationLimit; return out; }

  Num phase1 = Num(0) - tb.z[tb.ncols];
  if (Ops::sign(phase1) > 0) {
    out.status = Status::Infeasible;
    // y_r = 1 - reduced cost of artificial r; multiplier on the original
    // row is -sign_r * y_r, nonneg bound multipliers close the combination
    out.row_mult.assign(tb.m, Num(0));
    out.bound_mult.assign(n, Num(0));
    std::vector<Num> g(n, Num(0));
    for (int r = 0; r < tb.m; ++r) {
      Num y = Num(1) - tb.z[tb.art0 + r];
      Num lambda = Num(0) - (Num(row_sign[r]) * y);
      out.row_mult[r] = lambda;
      for (int k = 0; k < n; ++k) g[k] = g[k] + lambda * in.rows[r].a[k];
    }
    for (int k = 0; k < n; ++k)
      if (in.nonneg[k]) out.bound_mult[k] = g[k];
    return out;
  }

  // drive leftover artificials out of the basis
  for (int r = 0; r < tb.m; ++r) {
    if (tb.basis[r] < tb.art0) continue;
    int pc = -1;
    for (int col = 0; col < tb.art0; ++col)
      if (Ops::sign(tb.t[r][col]) != 0) { pc = col; break; }
    if (pc >= 0) tb.pivot(r, pc);
    // else: redundant row, harmless to leave the artificial basic at zero
  }

  // phase 2
  std::vector<Num> cost(tb.ncols, Num(0));
  if (!in.objective.empty()) {
    for (int k = 0; k < n; ++k) {
      cost[pos_col[k]] = in.objective[k];
      if (neg_col[k] >= 0) cost[neg_col[k]] = Num(0) - in.objective[k];
    }
  }
  tb.z.assign(tb.ncols + 1, Num(0));
  for (int col = 0; col < tb.ncols; ++col) tb.z[col] = cost[col];
  for (int r = 0; r < tb.m; ++r) {
    Num cb = tb.basis[r] < tb.ncols ? cost[tb.basis[r]] : Num(0);
    if (Ops::sign(cb) == 0) continue;
    for (int col = 0; col <= tb.ncols; ++col)
      tb.z[col] = tb.z[col] - cb * tb.t[r][col];
  }
  for (int r = 0; r < tb.m; ++r)
    if (tb.basis[r] >= tb.art0) tb.z[tb.basis[r]] = Num(0);

  if (!in.objective.empty()) {
    st = run(tb.art0);
    if (st == 2) { out.status = Status::IterationLimit; return out; }
    if (st == -1) { out.status = Status::Unbounded; return out; }
  }

  out.status = Status::Optimal;
  out.x.assign(n, Num(0));
  for (int r = 0; r < tb.m; ++r) {
    int col = tb.basis[r];
    for (int k = 0; k < n; ++k) {
      if (col == pos_col[k]) out.x[k] = out.x[k] + tb.t[r][tb.ncols];
      if (col == neg_col[k]) out.x[k] = out.x[k] - tb.t[r][tb.ncols];
    }
  }
  out.objective_value = Num(0);
  if (!in.objective.empty())
    for (int k = 0; k < n; ++k)
      out.objective_value = out.objective_value + in.objective[k] * out.x[k];
  return out;
}

}  // namespace openchi::detail
